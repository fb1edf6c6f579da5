use std::collections::VecDeque;

use crate::diagram::{checkerboard, classify_special, OrientedDiagram};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Seifert matrix of the orientable checkerboard surface of a special
/// diagram.
///
/// The surface is the union of the faces of the orientable color, joined by
/// a half-twisted band at each crossing. Its first homology has a basis of
/// loops, one around each face of the other color except the first, each
/// running with its face on the right. Faces of the orientable color are
/// split into those seen from above and from below (adjacent faces
/// alternate); that split decides which of two loops through a band is
/// pushed off over the other.
pub fn seifert_matrix_special(od: &OrientedDiagram) -> Result<IntMatrix> {
    let report = classify_special(od)?;
    let Some(orientable) = report.orientable_color else {
        return Err(Error::NotSpecial);
    };
    let d = od.diagram();
    let cb = checkerboard(d);
    let holes = orientable.other();

    let loops = cb.faces_of(holes);
    let mut loop_index = vec![None; cb.faces().len()];
    for (i, &f) in loops.iter().enumerate().skip(1) {
        loop_index[f] = Some(i - 1);
    }
    let rank = loops.len().saturating_sub(1);

    // Two-color the orientable faces across crossings.
    let disks = cb.faces_of(orientable);
    let mut up: Vec<Option<bool>> = vec![None; cb.faces().len()];
    if let Some(&first) = disks.first() {
        up[first] = Some(true);
        let mut queue = VecDeque::from([first]);
        while let Some(f) = queue.pop_front() {
            let side = up[f].expect("queued faces are placed");
            for corner in &cb.faces()[f].corners {
                let g = cb.face_at(corner.crossing, corner.pos + 2);
                match up[g] {
                    None => {
                        up[g] = Some(!side);
                        queue.push_back(g);
                    }
                    Some(s) if s == side && g != f => {
                        return Err(Error::Inconsistency(format!("orientable surface of {d} is not two-sided")));
                    }
                    Some(_) => {}
                }
            }
        }
    }

    let mut twice_diag = vec![0i64; rank];
    let mut v = IntMatrix::zeros(rank, rank);
    for c in 0..d.crossing_count() {
        let sign = od.sign(c) as i64;
        let k = cb.corner_of(holes, c);
        let (a, b) = (cb.face_at(c, k), cb.face_at(c, k + 2));
        if a == b {
            continue;
        }
        for f in [a, b] {
            if let Some(i) = loop_index[f] {
                twice_diag[i] -= sign;
            }
        }
        let (from, to) = if up[cb.face_at(c, k + 3)] == Some(true) { (a, b) } else { (b, a) };
        if let (Some(i), Some(j)) = (loop_index[from], loop_index[to]) {
            v[(i, j)] += sign;
        }
    }
    for (i, t) in twice_diag.into_iter().enumerate() {
        if t % 2 != 0 {
            return Err(Error::Inconsistency(format!("odd self-linking on face loop {i} of {d}")));
        }
        v[(i, i)] = t / 2;
    }
    Ok(v)
}
