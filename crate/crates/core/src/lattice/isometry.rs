use super::{reduce, require_positive_definite, short_vectors, GramForm};
use crate::error::Result;
use crate::matrix::IntMatrix;

/// Searches for an integer `U` with `Uᵀ q1 U = q2`.
///
/// Both forms must be positive definite with rank at most `cap`. Forms of
/// different rank or determinant are reported as not isometric. The search
/// reduces `q2`, then backtracks over vectors of `q1` whose norms match the
/// reduced diagonal, pruning on inner products.
pub fn isometric(q1: &GramForm, q2: &GramForm, cap: usize) -> Result<Option<IntMatrix>> {
    require_positive_definite(q1, cap)?;
    require_positive_definite(q2, cap)?;
    let n = q1.rank();
    if q2.rank() != n || q1.det() != q2.det() {
        return Ok(None);
    }
    if n == 0 {
        return Ok(Some(IntMatrix::zeros(0, 0)));
    }
    let r = reduce(q2);
    let target = &r.gram;
    let bound = (0..n).map(|i| target[(i, i)]).max().unwrap_or(0);
    let pool = short_vectors(q1, bound);
    let candidates: Vec<Vec<&Vec<i64>>> = (0..n)
        .map(|i| {
            let want = target[(i, i)];
            let mut c: Vec<&Vec<i64>> = pool.iter().filter(|(nv, _)| *nv == want).map(|(_, v)| v).collect();
            if i == 0 {
                // The first image may be taken up to sign.
                c.retain(|v| v.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0));
            }
            c
        })
        .collect();

    let mut chosen: Vec<&Vec<i64>> = Vec::with_capacity(n);
    if !extend(q1, target, &candidates, &mut chosen) {
        return Ok(None);
    }
    // Rows of `w` are the images, so w q1 wᵀ is the reduced form; undoing
    // the reduction carries it back to q2.
    let rows: Vec<Vec<i64>> = chosen.iter().map(|v| v.to_vec()).collect();
    let w = IntMatrix::from_rows(&rows).expect("equal lengths");
    let u = (&r.inverse * &w).transpose();
    debug_assert_eq!(&(&u.transpose() * q1.matrix()) * &u, *q2.matrix());
    Ok(Some(u))
}

fn extend<'a>(q1: &GramForm, target: &IntMatrix, candidates: &[Vec<&'a Vec<i64>>], chosen: &mut Vec<&'a Vec<i64>>) -> bool {
    let i = chosen.len();
    if i == candidates.len() {
        return true;
    }
    for &v in &candidates[i] {
        if chosen.iter().enumerate().all(|(j, w)| q1.inner(w, v) == target[(j, i)]) {
            chosen.push(v);
            if extend(q1, target, candidates, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Checks that `u` carries `q1` to `q2`, i.e. `uᵀ q1 u = q2`.
pub fn verify_isometry(q1: &GramForm, q2: &GramForm, u: &IntMatrix) -> bool {
    u.rows() == q1.rank() && u.cols() == q2.rank() && &(&u.transpose() * q1.matrix()) * u == *q2.matrix()
}
