use super::GramForm;
use crate::matrix::IntMatrix;

/// A reduced basis: `gram = basis · q · basisᵀ`, and `inverse` is the
/// integer inverse of `basis`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduced {
    pub gram: IntMatrix,
    pub basis: IntMatrix,
    pub inverse: IntMatrix,
}

/// Greedy pairwise reduction of a positive definite form: subtract the
/// nearest integer multiple of `b_j` from `b_i` while that shortens `b_i`,
/// then sort by norm.
pub fn reduce(q: &GramForm) -> Reduced {
    let n = q.rank();
    let mut g = q.matrix().clone();
    let mut t = IntMatrix::identity(n);
    let mut inv = IntMatrix::identity(n);
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..n {
            for j in 0..n {
                if i == j || g[(j, j)] == 0 || 2 * g[(i, j)].abs() <= g[(j, j)] {
                    continue;
                }
                let r = round_div(g[(i, j)], g[(j, j)]);
                // b_i <- b_i - r b_j
                for k in 0..n {
                    g[(i, k)] -= r * g[(j, k)];
                }
                for k in 0..n {
                    g[(k, i)] -= r * g[(k, j)];
                }
                for k in 0..n {
                    t[(i, k)] -= r * t[(j, k)];
                    inv[(k, j)] += r * inv[(k, i)];
                }
                changed = true;
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (g[(i, i)], i));
    let mut out = Reduced { gram: g.principal(&order), basis: IntMatrix::zeros(n, n), inverse: IntMatrix::zeros(n, n) };
    for (new, &old) in order.iter().enumerate() {
        for k in 0..n {
            out.basis[(new, k)] = t[(old, k)];
            out.inverse[(k, new)] = inv[(k, old)];
        }
    }
    out
}

/// Nearest integer to a/b, halves rounded away from zero.
fn round_div(a: i64, b: i64) -> i64 {
    let (a, b) = if b < 0 { (-a, -b) } else { (a, b) };
    if a >= 0 {
        (2 * a + b) / (2 * b)
    } else {
        -((-2 * a + b) / (2 * b))
    }
}
