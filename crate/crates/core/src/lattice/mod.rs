//! Exact arithmetic on integral symmetric bilinear forms.

mod decompose;
mod enumerate;
mod isometry;
mod reduce;

pub use decompose::{hnf_row_basis, indecomposable_summands, Decomposition};
pub use enumerate::short_vectors;
pub use isometry::{isometric, verify_isometry};
pub use reduce::{reduce, Reduced};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Largest rank accepted by decomposition and isometry search unless the
/// caller asks otherwise.
pub const DEFAULT_RANK_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    FlowLattice,
    Goeritz,
    SeifertSymmetrized,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Definiteness {
    PositiveDefinite,
    NegativeDefinite,
    Indefinite,
    Degenerate,
}

impl Definiteness {
    pub fn is_definite(self) -> bool {
        matches!(self, Definiteness::PositiveDefinite | Definiteness::NegativeDefinite)
    }
}

/// A symmetric integer matrix, read as the Gram matrix of a lattice basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GramForm {
    #[serde(rename = "gram")]
    matrix: IntMatrix,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    provenance: Option<Provenance>,
}

/// Counts of positive, negative and zero entries in a diagonalization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl GramForm {
    pub fn new(matrix: IntMatrix) -> Result<Self> {
        if !matrix.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(GramForm { matrix, provenance: None })
    }

    pub fn with_provenance(matrix: IntMatrix, provenance: Provenance) -> Result<Self> {
        let mut q = Self::new(matrix)?;
        q.provenance = Some(provenance);
        Ok(q)
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(IntMatrix::from_rows(rows).ok_or(Error::NotSymmetric)?)
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn provenance(&self) -> Option<Provenance> {
        self.provenance
    }

    pub fn rank(&self) -> usize {
        self.matrix.rows()
    }

    pub fn det(&self) -> BigInt {
        self.matrix.det()
    }

    pub fn neg(&self) -> GramForm {
        GramForm { matrix: self.matrix.neg(), provenance: self.provenance }
    }

    /// The form in a new basis whose vectors are the rows of `basis`.
    pub fn transform(&self, basis: &IntMatrix) -> GramForm {
        GramForm { matrix: basis.congruence(&self.matrix), provenance: self.provenance }
    }

    pub fn inner(&self, x: &[i64], y: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += x[i] * self.matrix[(i, j)] * y[j];
            }
        }
        s
    }

    pub fn norm(&self, x: &[i64]) -> i64 {
        self.inner(x, x)
    }

    /// Inertia by symmetric Gaussian elimination over the rationals.
    pub fn inertia(&self) -> Inertia {
        let n = self.rank();
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|i| (0..n).map(|j| BigRational::from_integer(BigInt::from(self.matrix[(i, j)]))).collect())
            .collect();
        let mut out = Inertia { positive: 0, negative: 0, zero: 0 };
        let mut k = 0;
        while k < n {
            let pivot = match (k..n).find(|&i| !a[i][i].is_zero()) {
                Some(i) => i,
                None => match (k..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero())
                {
                    // All remaining diagonal entries vanish; adding basis
                    // vector j to i makes the new diagonal entry 2·a_ij.
                    Some((i, j)) => {
                        for r in 0..n {
                            let v = a[r][j].clone();
                            a[r][i] += v;
                        }
                        for c in 0..n {
                            let v = a[j][c].clone();
                            a[i][c] += v;
                        }
                        i
                    }
                    None => {
                        out.zero += n - k;
                        break;
                    }
                },
            };
            a.swap(k, pivot);
            for row in a.iter_mut() {
                row.swap(k, pivot);
            }
            let p = a[k][k].clone();
            if p.is_positive() {
                out.positive += 1;
            } else {
                out.negative += 1;
            }
            for i in k + 1..n {
                let f = &a[i][k] / &p;
                if f.is_zero() {
                    continue;
                }
                for j in k..n {
                    let v = &f * &a[k][j];
                    a[i][j] -= v;
                }
            }
            for j in k + 1..n {
                a[k][j] = BigRational::zero();
            }
            k += 1;
        }
        out
    }

    pub fn definiteness(&self) -> Definiteness {
        definiteness(self)
    }

    pub fn signature(&self) -> Result<i64> {
        signature(self)
    }
}

pub fn definiteness(q: &GramForm) -> Definiteness {
    let Inertia { positive, negative, zero } = q.inertia();
    if zero > 0 {
        Definiteness::Degenerate
    } else if negative == 0 {
        Definiteness::PositiveDefinite
    } else if positive == 0 {
        Definiteness::NegativeDefinite
    } else {
        Definiteness::Indefinite
    }
}

/// Positive minus negative inertia; degenerate forms are rejected.
pub fn signature(q: &GramForm) -> Result<i64> {
    let i = q.inertia();
    if i.zero > 0 {
        return Err(Error::Degenerate);
    }
    Ok(i.positive as i64 - i.negative as i64)
}

pub(crate) fn require_positive_definite(q: &GramForm, cap: usize) -> Result<()> {
    if q.rank() > cap {
        return Err(Error::RankCap { rank: q.rank(), cap });
    }
    if definiteness(q) != Definiteness::PositiveDefinite {
        return Err(Error::NotPositiveDefinite);
    }
    Ok(())
}
