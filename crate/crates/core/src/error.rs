use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong between reading a PD code and emitting a
/// certificate. Variants are grouped by how the CLI reports them: input
/// problems, resource caps, and internal inconsistencies.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("PD syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("arc labels {labels:?} do not appear exactly twice")]
    ArcMultiplicity { labels: Vec<u32> },

    #[error("arc labels must be exactly 1..={expected}; label {found} is missing or out of range")]
    ArcRange { expected: u32, found: u32 },

    #[error("diagram is split into {pieces} disconnected pieces")]
    Disconnected { pieces: usize },

    #[error("rotation system is not planar: traced {faces} faces, expected {expected}")]
    NonPlanar { faces: usize, expected: usize },

    #[error("under-strand orientation is inconsistent along the component through arc {arc}")]
    InconsistentOrientation { arc: u32 },

    #[error("expected a knot diagram, got {components} components")]
    NotAKnot { components: usize },

    #[error("diagram is not alternating")]
    NotAlternating,

    #[error("diagram is not special")]
    NotSpecial,

    #[error("matrix is not square and symmetric")]
    NotSymmetric,

    #[error("form is degenerate")]
    Degenerate,

    #[error("form is not positive definite")]
    NotPositiveDefinite,

    #[error("lattice rank {rank} exceeds the configured cap {cap}")]
    RankCap { rank: usize, cap: usize },

    #[error("malformed Laurent polynomial {text:?}: {message}")]
    Polynomial { text: String, message: String },

    #[error("corpus error: {0}")]
    Corpus(String),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

impl Error {
    /// True for errors caused by the caller's input rather than by this crate.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::RankCap { .. } | Error::Inconsistency(_))
    }
}
