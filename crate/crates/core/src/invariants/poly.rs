//! Polynomials in `Z[t]` and determinants of matrices over them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::LaurentPolynomial;

/// Dense coefficients, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Poly(Vec<BigInt>);

impl Poly {
    pub fn zero() -> Poly {
        Poly(Vec::new())
    }

    pub fn from_i64(coeffs: &[i64]) -> Poly {
        let mut p = Poly(coeffs.iter().map(|&c| BigInt::from(c)).collect());
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        let mut p = Poly(out);
        p.trim();
        p
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.sub(&other.neg())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, a) in self.0.iter().enumerate() {
            out[i] += a;
        }
        for (i, b) in other.0.iter().enumerate() {
            out[i] -= b;
        }
        let mut p = Poly(out);
        p.trim();
        p
    }

    pub fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }

    /// Exact quotient; panics if `d` does not divide `self` in `Z[t]`.
    pub fn div_exact(&self, d: &Poly) -> Poly {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Poly::zero();
        }
        let mut r = self.0.clone();
        let dl = d.0.len();
        assert!(r.len() >= dl, "inexact polynomial division");
        let lead = d.0.last().unwrap();
        let mut q = vec![BigInt::zero(); r.len() - dl + 1];
        for top in (dl - 1..r.len()).rev() {
            let (quot, rem) = r[top].div_rem(lead);
            assert!(rem.is_zero(), "inexact polynomial division");
            if quot.is_zero() {
                continue;
            }
            let base = top + 1 - dl;
            for (i, c) in d.0.iter().enumerate() {
                r[base + i] -= &quot * c;
            }
            q[base] = quot;
        }
        assert!(r.iter().all(Zero::is_zero), "inexact polynomial division");
        let mut p = Poly(q);
        p.trim();
        p
    }

    pub fn to_laurent(&self) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(
            self.0.iter().enumerate().map(|(i, c)| (i as i32, c.to_i64().expect("coefficient fits i64"))),
        )
    }
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
pub(crate) fn det(mut a: Vec<Vec<Poly>>) -> Poly {
    let n = a.len();
    if n == 0 {
        return Poly(vec![BigInt::one()]);
    }
    let mut prev = Poly(vec![BigInt::one()]);
    let mut negate = false;
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return Poly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = v.div_exact(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}
