use crate::diagram::{checkerboard, Checkerboard, Color, OrientedDiagram, Slot};
use crate::error::Result;
use crate::lattice::{signature, GramForm, Provenance};
use crate::matrix::IntMatrix;

/// Goeritz matrix on the faces of `color`, with the first such face
/// deleted. Off-diagonal entries sum the incidence signs of the crossings
/// joining two faces; each diagonal entry balances its row to zero before
/// the deletion.
pub fn goeritz_matrix(cb: &Checkerboard, color: Color) -> GramForm {
    let faces = cb.faces_of(color);
    let mut index = vec![usize::MAX; cb.faces().len()];
    for (i, &f) in faces.iter().enumerate() {
        index[f] = i;
    }
    let m = faces.len();
    let mut full = vec![vec![0i64; m]; m];
    for c in 0..cb.crossing_count() {
        let [a, b] = cb.faces_at(color, c);
        let (i, j) = (index[a], index[b]);
        if i != j {
            let s = cb.edge_sign(color, c) as i64;
            full[i][j] += s;
            full[j][i] += s;
        }
    }
    for (i, row) in full.iter_mut().enumerate() {
        row[i] = -row.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, v)| v).sum::<i64>();
    }
    let keep: Vec<Vec<i64>> = full.iter().skip(1).map(|row| row[1..].to_vec()).collect();
    let matrix = IntMatrix::from_rows(&keep).unwrap_or_else(|| IntMatrix::zeros(0, 0));
    GramForm::with_provenance(matrix, Provenance::Goeritz).expect("Goeritz matrices are symmetric")
}

/// Signature from the Goeritz form of the black faces.
pub fn gl_signature(od: &OrientedDiagram) -> Result<i64> {
    gl_signature_with(od, Color::Black)
}

/// `σ = sign(G) − μ`, where `G` is the Goeritz form on the faces of `color`
/// and `μ` sums, over crossings where the strands bounding a corner of the
/// other color both enter or both leave, that color's incidence sign.
pub fn gl_signature_with(od: &OrientedDiagram, color: Color) -> Result<i64> {
    let cb = checkerboard(od.diagram());
    let g = goeritz_matrix(&cb, color);
    Ok(signature(&g)? - correction(od, &cb, color.other()))
}

fn correction(od: &OrientedDiagram, cb: &Checkerboard, shading: Color) -> i64 {
    (0..cb.crossing_count())
        .filter(|&c| {
            let k = cb.corner_of(shading, c);
            od.is_incoming(Slot::new(c, k)) == od.is_incoming(Slot::new(c, k + 1))
        })
        .map(|c| cb.edge_sign(shading, c) as i64)
        .sum()
}
