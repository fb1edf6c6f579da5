use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{reduce, GramForm};

/// All nonzero vectors `x` (both signs) with `0 < xᵀ q x <= bound`, in
/// original coordinates, sorted by norm and then lexicographically.
///
/// `q` must be positive definite. The search runs on a reduced basis with
/// exact Fincke–Pohst bounds from a fraction-free triangular factorization.
pub fn short_vectors(q: &GramForm, bound: i64) -> Vec<(i64, Vec<i64>)> {
    let n = q.rank();
    if n == 0 || bound <= 0 {
        return Vec::new();
    }
    let r = reduce(q);
    let reduced = GramForm::new(r.gram.clone()).expect("congruence keeps symmetry");
    let mut found = Vec::new();
    Search::new(&reduced).run(bound, &mut |y: &[i64]| {
        let mut v = vec![0i64; n];
        for (i, &c) in y.iter().enumerate() {
            if c != 0 {
                for (k, slot) in v.iter_mut().enumerate() {
                    *slot += c * r.basis[(i, k)];
                }
            }
        }
        found.push((q.norm(&v), v));
    });
    found.sort();
    found
}

/// Fraction-free factorization `q = Uᵀ diag(1 / (d_k d_{k+1})) U` with
/// `U[k][k] = d_{k+1}` the leading principal minors.
struct Search {
    n: usize,
    u: Vec<Vec<BigInt>>,
    minors: Vec<BigInt>,
}

impl Search {
    fn new(q: &GramForm) -> Search {
        let n = q.rank();
        let mut a: Vec<Vec<BigInt>> =
            (0..n).map(|i| (0..n).map(|j| BigInt::from(q.matrix()[(i, j)])).collect()).collect();
        let mut prev = BigInt::one();
        for k in 0..n {
            assert!(a[k][k].is_positive(), "form is not positive definite");
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let mut minors = vec![BigInt::one()];
        minors.extend((0..n).map(|k| a[k][k].clone()));
        Search { n, u: a, minors }
    }

    fn run(&self, bound: i64, emit: &mut dyn FnMut(&[i64])) {
        let mut x = vec![0i64; self.n];
        self.level(self.n - 1, BigRational::from_integer(BigInt::from(bound)), &mut x, emit);
    }

    fn level(&self, k: usize, budget: BigRational, x: &mut [i64], emit: &mut dyn FnMut(&[i64])) {
        let c: BigInt = (k + 1..self.n).map(|j| &self.u[k][j] * BigInt::from(x[j])).sum();
        let scale = &self.minors[k] * &self.minors[k + 1];
        let cap = (&budget * BigRational::from_integer(scale.clone())).floor().to_integer();
        let ymax = cap.sqrt();
        let d = &self.minors[k + 1];
        let lo = (-&ymax - &c).div_ceil(d);
        let hi = (&ymax - &c).div_floor(d);
        let (lo, hi) = (lo.to_i64().expect("small coordinate"), hi.to_i64().expect("small coordinate"));
        for xk in lo..=hi {
            x[k] = xk;
            let y = d * BigInt::from(xk) + &c;
            let rest = &budget - BigRational::new(&y * &y, scale.clone());
            if k == 0 {
                if x.iter().any(|&v| v != 0) {
                    emit(x);
                }
            } else {
                self.level(k - 1, rest, x, emit);
            }
        }
        x[k] = 0;
    }
}
