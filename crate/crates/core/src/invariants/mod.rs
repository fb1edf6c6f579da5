//! Classical invariants computed from a diagram.

mod alexander;
mod goeritz;
mod laurent;
mod poly;
mod seifert;

pub use alexander::{alexander_from_crossings, alexander_from_seifert};
pub use goeritz::{gl_signature, gl_signature_with, goeritz_matrix};
pub use laurent::LaurentPolynomial;
pub use seifert::seifert_matrix_special;

use serde::{Deserialize, Serialize};

use crate::diagram::{classify_special, is_alternating, seifert_stats, OrientedDiagram};
use crate::error::{Error, Result};

/// Alexander polynomial, normalized symmetric with value 1 at `t = 1`.
///
/// Uses the crossing presentation; for special diagrams the Seifert-matrix
/// value is computed too and the two must agree.
pub fn alexander(od: &OrientedDiagram) -> Result<LaurentPolynomial> {
    if !od.is_knot() {
        return Err(Error::NotAKnot { components: od.component_count() });
    }
    let from_crossings = alexander_from_crossings(od)?;
    if classify_special(od)?.is_special {
        let from_seifert = alexander_from_seifert(&seifert_matrix_special(od)?)?;
        if from_seifert != from_crossings {
            return Err(Error::Inconsistency(format!(
                "Alexander polynomial of {}: crossing presentation gives {from_crossings}, Seifert matrix gives {from_seifert}",
                od.diagram()
            )));
        }
    }
    Ok(from_crossings)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Fibered {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantBundle {
    pub alternating: bool,
    pub signature: i64,
    pub alexander: LaurentPolynomial,
    pub determinant: u64,
    /// Genus of the surface from Seifert's algorithm. It is the knot genus
    /// for alternating diagrams and an upper bound otherwise.
    pub genus: i64,
    /// Decided by the monic test, which is only valid for alternating
    /// diagrams; `unknown` otherwise.
    pub fibered_alternating: Fibered,
    pub leading_coeff: i64,
    pub leading_coeff_prime_power: bool,
}

impl InvariantBundle {
    pub fn span(&self) -> i64 {
        self.alexander.span()
    }

    /// A lower bound for the knot genus: exact for alternating diagrams,
    /// `span(Δ)/2` otherwise.
    pub fn genus_lower_bound(&self) -> i64 {
        if self.alternating {
            self.genus
        } else {
            self.span() / 2
        }
    }
}

pub fn bundle(od: &OrientedDiagram) -> Result<InvariantBundle> {
    let speciality = classify_special(od)?;
    let alexander = alexander(od)?;
    let signature = gl_signature(od)?;
    let genus = seifert_stats(od).genus;
    let alternating = is_alternating(od.diagram());
    let leading_coeff = alexander.leading_coeff();
    let fibered_alternating = match (alternating, leading_coeff.abs() == 1) {
        (false, _) => Fibered::Unknown,
        (true, true) => Fibered::Yes,
        (true, false) => Fibered::No,
    };
    let b = InvariantBundle {
        alternating,
        signature,
        determinant: alexander.eval_at_minus_one().unsigned_abs(),
        genus,
        fibered_alternating,
        leading_coeff,
        leading_coeff_prime_power: is_prime_power(leading_coeff.unsigned_abs()),
        alexander,
    };
    if speciality.is_special_alternating() && !(b.signature.abs() == 2 * b.genus && 2 * b.genus == b.span()) {
        return Err(Error::Inconsistency(format!(
            "special alternating diagram {} has |σ| = {}, 2g = {}, span Δ = {}",
            od.diagram(),
            b.signature.abs(),
            2 * b.genus,
            b.span()
        )));
    }
    Ok(b)
}

/// `n = p^k` for a prime `p` and `k >= 1`.
pub fn is_prime_power(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            return m == 1;
        }
        p += 1;
    }
    true
}
