use serde::Serialize;

use super::{reduce, require_positive_definite, short_vectors, GramForm};
use crate::diagram::UnionFind;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// An orthogonal splitting into indecomposable summands.
///
/// The rows of `witness` are a basis of the original lattice (in original
/// coordinates); in that basis the form is block diagonal with the
/// summands' Gram matrices as blocks, in order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub summands: Vec<GramForm>,
    pub witness: IntMatrix,
}

impl Decomposition {
    /// Re-checks the witness against the form it was computed from.
    pub fn verify(&self, q: &GramForm) -> bool {
        let n = q.rank();
        if self.witness.rows() != n || self.witness.cols() != n || !self.witness.is_unimodular() {
            return false;
        }
        let mut expected = IntMatrix::zeros(n, n);
        let mut at = 0;
        for s in &self.summands {
            let r = s.rank();
            for i in 0..r {
                for j in 0..r {
                    expected[(at + i, at + j)] = s.matrix()[(i, j)];
                }
            }
            at += r;
        }
        at == n && self.witness.congruence(q.matrix()) == expected
    }
}

/// Splits a positive definite lattice into its (unique) indecomposable
/// orthogonal summands.
///
/// Indecomposable vectors of norm at most the largest reduced diagonal entry
/// generate the lattice; grouping them by non-orthogonality gives the
/// summands. A vector `v` is decomposable exactly when some shorter `x` has
/// `|x·v| = x·x`, since then `v = ±x + (v ∓ x)` orthogonally.
pub fn indecomposable_summands(q: &GramForm, cap: usize) -> Result<Decomposition> {
    require_positive_definite(q, cap)?;
    let n = q.rank();
    if n == 0 {
        return Ok(Decomposition { summands: Vec::new(), witness: IntMatrix::zeros(0, 0) });
    }
    let r = reduce(q);
    let reduced = GramForm::new(r.gram.clone()).expect("congruence keeps symmetry");
    let bound = (0..n).map(|i| r.gram[(i, i)]).max().unwrap_or(0);

    // One representative per ± pair: the first nonzero coordinate is positive.
    let short: Vec<(i64, Vec<i64>)> = short_vectors(&reduced, bound)
        .into_iter()
        .filter(|(_, v)| v.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0))
        .collect();
    let indecomposable: Vec<&Vec<i64>> = short
        .iter()
        .filter(|(nv, v)| {
            !short.iter().take_while(|(nx, _)| nx < nv).any(|(nx, x)| reduced.inner(x, v).abs() == *nx)
        })
        .map(|(_, v)| v)
        .collect();

    let k = indecomposable.len();
    let mut uf = UnionFind::new(k);
    for i in 0..k {
        for j in i + 1..k {
            if reduced.inner(indecomposable[i], indecomposable[j]) != 0 {
                uf.union(i, j);
            }
        }
    }
    let mut clusters: Vec<Vec<Vec<i64>>> = Vec::new();
    let mut cluster_of = std::collections::HashMap::new();
    for (i, v) in indecomposable.iter().enumerate() {
        let root = uf.find(i);
        let idx = *cluster_of.entry(root).or_insert_with(|| {
            clusters.push(Vec::new());
            clusters.len() - 1
        });
        clusters[idx].push((*v).clone());
    }

    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(n);
    let mut sizes = Vec::new();
    for cluster in &clusters {
        let basis = hnf_row_basis(cluster);
        sizes.push(basis.len());
        rows.extend(basis);
    }
    let w = IntMatrix::from_rows(&rows).expect("rows have equal length");
    if w.rows() != n || !w.is_unimodular() {
        return Err(Error::Inconsistency(format!(
            "indecomposable vectors span a sublattice of rank {} and index {} in a rank {n} lattice",
            w.rows(),
            if w.is_square() { w.det().to_string() } else { "?".into() }
        )));
    }
    let witness = &w * &r.basis;
    let block = witness.congruence(q.matrix());
    let mut summands = Vec::with_capacity(sizes.len());
    let mut at = 0;
    for s in sizes {
        let keep: Vec<usize> = (at..at + s).collect();
        let mut g = GramForm::new(block.principal(&keep)).expect("principal blocks are symmetric");
        if let Some(p) = q.provenance() {
            g = GramForm::with_provenance(g.matrix().clone(), p).expect("symmetric");
        }
        summands.push(g);
        at += s;
    }
    let d = Decomposition { summands, witness };
    if !d.verify(q) {
        return Err(Error::Inconsistency("decomposition witness failed verification".into()));
    }
    Ok(d)
}

/// Row Hermite normal form of the integer span of `vectors`, zero rows
/// dropped.
pub fn hnf_row_basis(vectors: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let Some(cols) = vectors.first().map(Vec::len) else {
        return Vec::new();
    };
    let mut a: Vec<Vec<i128>> = vectors.iter().map(|v| v.iter().map(|&x| x as i128).collect()).collect();
    let mut top = 0;
    for c in 0..cols {
        if top == a.len() {
            break;
        }
        // Euclid down the column until one pivot remains.
        loop {
            let Some(p) = (top..a.len()).filter(|&i| a[i][c] != 0).min_by_key(|&i| a[i][c].abs()) else {
                break;
            };
            a.swap(top, p);
            let mut done = true;
            for i in top + 1..a.len() {
                if a[i][c] != 0 {
                    let f = a[i][c].div_euclid(a[top][c]);
                    for j in c..cols {
                        let v = a[top][j];
                        a[i][j] -= f * v;
                    }
                    if a[i][c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if a[top][c] == 0 {
            continue;
        }
        if a[top][c] < 0 {
            for x in a[top].iter_mut() {
                *x = -*x;
            }
        }
        for i in 0..top {
            let f = a[i][c].div_euclid(a[top][c]);
            for j in c..cols {
                let v = a[top][j];
                a[i][j] -= f * v;
            }
        }
        top += 1;
    }
    a.truncate(top);
    a.into_iter().map(|r| r.into_iter().map(|x| i64::try_from(x).expect("HNF entry fits i64")).collect()).collect()
}
