use super::poly::{det, Poly};
use super::LaurentPolynomial;
use crate::diagram::{OrientedDiagram, Slot, UnionFind};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Alexander polynomial from the crossing presentation: one row per
/// crossing, one column per over-arc, with the last row and column deleted
/// before taking the determinant.
pub fn alexander_from_crossings(od: &OrientedDiagram) -> Result<LaurentPolynomial> {
    let d = od.diagram();
    let n = d.crossing_count();
    if n == 0 {
        return Ok(LaurentPolynomial::constant(1));
    }
    // Arcs on the same over-strand are one generator.
    let mut uf = UnionFind::new(d.arc_count());
    for t in d.crossings() {
        uf.union(t[1] as usize - 1, t[3] as usize - 1);
    }
    let mut generator = vec![usize::MAX; d.arc_count()];
    let mut count = 0;
    for a in 0..d.arc_count() {
        let r = uf.find(a);
        if generator[r] == usize::MAX {
            generator[r] = count;
            count += 1;
        }
        generator[a] = generator[r];
    }
    if count != n {
        return Err(Error::Inconsistency(format!("{count} over-arcs for {n} crossings in {d}")));
    }

    let one_minus_t = Poly::from_i64(&[1, -1]);
    let t = Poly::from_i64(&[0, 1]);
    let minus_one = Poly::from_i64(&[-1]);
    let mut rows = vec![vec![Poly::zero(); n]; n];
    for c in 0..n {
        let gen = |pos: usize| generator[d.arc_at(Slot::new(c, pos)) as usize - 1];
        let (over, under_in, under_out) = (gen(1), gen(od.under_in(c)), gen(od.under_in(c) + 2));
        let entries = if od.sign(c) > 0 {
            [(over, &one_minus_t), (under_in, &t), (under_out, &minus_one)]
        } else {
            [(over, &one_minus_t), (under_in, &minus_one), (under_out, &t)]
        };
        for (col, p) in entries {
            rows[c][col] = rows[c][col].add(p);
        }
    }
    let minor: Vec<Vec<Poly>> = rows.into_iter().take(n - 1).map(|r| r.into_iter().take(n - 1).collect()).collect();
    normalize(det(minor).to_laurent(), "crossing presentation")
}

/// Alexander polynomial `det(tV − Vᵀ)` of a Seifert matrix, normalized.
pub fn alexander_from_seifert(v: &IntMatrix) -> Result<LaurentPolynomial> {
    let n = v.rows();
    let rows: Vec<Vec<Poly>> = (0..n)
        .map(|i| (0..n).map(|j| Poly::from_i64(&[-v[(j, i)], v[(i, j)]])).collect())
        .collect();
    normalize(det(rows).to_laurent(), "Seifert matrix")
}

fn normalize(raw: LaurentPolynomial, source: &str) -> Result<LaurentPolynomial> {
    let p = raw.alexander_normalized().map_err(|e| Error::Inconsistency(format!("{source}: {e}")))?;
    if p.eval_at_one() != 1 {
        return Err(Error::Inconsistency(format!("{source}: Alexander polynomial {p} has value {} at 1", p.eval_at_one())));
    }
    Ok(p)
}
