use std::fmt;

use serde::Serialize;

use super::KnotProfile;
use crate::hfk::hfk_isomorphic;

/// A necessary condition for a ribbon concordance `lower ≤ upper` that the
/// pair violates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Finding {
    SignatureMismatch { lower: i64, upper: i64 },
    AlexanderNotDivisible { lower: String, upper: String },
    /// Lower bound for the lower genus exceeds an upper bound for the upper.
    GenusIncrease { lower: i64, upper: i64 },
    DeterminantMismatch { lower: u64, upper: u64 },
    GenusMismatch { lower: i64, upper: i64 },
    AlexanderMismatch { lower: String, upper: String },
    HfkMismatch,
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Finding::SignatureMismatch { lower, upper } => write!(f, "signature {lower} ≠ {upper}"),
            Finding::AlexanderNotDivisible { lower, upper } => write!(f, "Δ = {lower} does not divide Δ = {upper}"),
            Finding::GenusIncrease { lower, upper } => write!(f, "genus at least {lower} > genus at most {upper}"),
            Finding::DeterminantMismatch { lower, upper } => write!(f, "determinant {lower} ≠ {upper}"),
            Finding::GenusMismatch { lower, upper } => write!(f, "genus {lower} ≠ {upper}"),
            Finding::AlexanderMismatch { lower, upper } => write!(f, "Δ = {lower} ≠ {upper}"),
            Finding::HfkMismatch => write!(f, "knot Floer homology differs"),
        }
    }
}

/// Every violated necessary condition for `lower ≤ upper`. An empty list
/// means no obstruction was found, not that a concordance exists.
///
/// When `upper_is_special_alternating`, the two knots must share knot
/// Floer homology, hence Δ, determinant and genus.
pub fn concordance_pair_obstructions(
    lower: &KnotProfile,
    upper: &KnotProfile,
    upper_is_special_alternating: bool,
) -> Vec<Finding> {
    let (l, u) = (&lower.bundle, &upper.bundle);
    let mut out = Vec::new();
    if l.signature != u.signature {
        out.push(Finding::SignatureMismatch { lower: l.signature, upper: u.signature });
    }
    if !l.alexander.divides(&u.alexander) {
        out.push(Finding::AlexanderNotDivisible { lower: l.alexander.to_string(), upper: u.alexander.to_string() });
    }
    if l.genus_lower_bound() > u.genus {
        out.push(Finding::GenusIncrease { lower: l.genus_lower_bound(), upper: u.genus });
    }
    if upper_is_special_alternating {
        if l.determinant != u.determinant {
            out.push(Finding::DeterminantMismatch { lower: l.determinant, upper: u.determinant });
        }
        // The lower genus is only known to lie in [lower bound, Seifert genus].
        let (lo, hi) = (l.genus_lower_bound(), l.genus);
        if u.genus < lo || u.genus > hi {
            let nearest = if u.genus < lo { lo } else { hi };
            out.push(Finding::GenusMismatch { lower: nearest, upper: u.genus });
        }
        if l.alexander != u.alexander {
            out.push(Finding::AlexanderMismatch { lower: l.alexander.to_string(), upper: u.alexander.to_string() });
        }
        if let (Some(a), Some(b)) = (&lower.hfk, &upper.hfk) {
            if !hfk_isomorphic(a, b) {
                out.push(Finding::HfkMismatch);
            }
        }
    }
    out
}
