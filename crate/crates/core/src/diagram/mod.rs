//! Knot and link diagrams as combinatorial maps.
//!
//! A diagram is stored as its PD code: one 4-tuple of arc labels per
//! crossing, listed counterclockwise starting from the incoming under-strand.
//! The cyclic order of the tuple *is* the rotation system of the underlying
//! 4-valent plane graph, so faces are traced directly from it and planarity
//! is checked by counting them (a connected plane 4-valent graph with `n`
//! vertices has `n + 2` faces).
//!
//! Slot positions are fixed throughout the crate: positions 0 and 2 carry the
//! under-strand, 1 and 3 the over-strand. The *corner* `k` of a crossing is
//! the region between slot `k` and slot `k + 1` (counterclockwise).

mod checkerboard;
mod factor;
mod orient;
mod parse;
mod special;

pub use checkerboard::{checkerboard, Checkerboard, Color, Face};
pub use factor::connected_sum_factors;
pub use orient::{orient, OrientedDiagram};
pub use parse::parse_pd;
pub use special::{classify_special, is_alternating, seifert_circles, seifert_stats, SeifertStats, SpecialityReport};

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A position on a crossing: `pos` is a slot (0..4) or, for corners, the
/// corner index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Slot {
    pub crossing: usize,
    pub pos: usize,
}

impl Slot {
    pub fn new(crossing: usize, pos: usize) -> Self {
        Slot { crossing, pos: pos % 4 }
    }

    /// The slot diametrically opposite on the same crossing; a strand entering
    /// at `self` leaves through it.
    pub fn through(self) -> Slot {
        Slot::new(self.crossing, self.pos + 2)
    }

    pub fn is_under(self) -> bool {
        self.pos % 2 == 0
    }
}

/// A validated, connected, planar diagram.
#[derive(Clone, PartialEq, Eq)]
pub struct Diagram {
    crossings: Vec<[u32; 4]>,
    /// For arc label `a`, `ends[a - 1]` holds the two slots where it attaches.
    ends: Vec<[Slot; 2]>,
}

/// One face of the diagram complement, listed by the crossing corners it
/// touches in boundary order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceBoundary {
    pub corners: Vec<Slot>,
    pub arcs: Vec<u32>,
}

impl Diagram {
    /// The crossingless diagram of the unknot.
    pub fn unknot() -> Self {
        Diagram { crossings: Vec::new(), ends: Vec::new() }
    }

    /// Validates a list of PD tuples.
    pub fn from_crossings(crossings: Vec<[u32; 4]>) -> Result<Self> {
        let n = crossings.len();
        if n == 0 {
            return Ok(Self::unknot());
        }
        if crossings.iter().flatten().any(|&l| l == 0) {
            return Err(Error::ArcRange { expected: 2 * n as u32, found: 0 });
        }
        let max_label = crossings.iter().flatten().copied().max().unwrap_or(0) as usize;
        let mut count = vec![0usize; max_label + 1];
        for &label in crossings.iter().flatten() {
            count[label as usize] += 1;
        }
        let bad: Vec<u32> =
            (1..=max_label).filter(|&l| count[l] != 0 && count[l] != 2).map(|l| l as u32).collect();
        if !bad.is_empty() {
            return Err(Error::ArcMultiplicity { labels: bad });
        }
        let expected = 2 * n as u32;
        if let Some(found) = (1..=max_label as u32).find(|&l| (count[l as usize] == 0) != (l > expected)) {
            return Err(Error::ArcRange { expected, found });
        }

        let mut ends = vec![Vec::with_capacity(2); 2 * n];
        for (c, tuple) in crossings.iter().enumerate() {
            for (pos, &label) in tuple.iter().enumerate() {
                ends[label as usize - 1].push(Slot::new(c, pos));
            }
        }
        let ends = ends.into_iter().map(|e| [e[0], e[1]]).collect();
        let d = Diagram { crossings, ends };

        let pieces = d.crossing_pieces();
        if pieces > 1 {
            return Err(Error::Disconnected { pieces });
        }
        let faces = d.faces().len();
        if faces != n + 2 {
            return Err(Error::NonPlanar { faces, expected: n + 2 });
        }
        d.check_under_convention()?;
        Ok(d)
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn arc_count(&self) -> usize {
        self.ends.len()
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn arc_at(&self, slot: Slot) -> u32 {
        self.crossings[slot.crossing][slot.pos]
    }

    pub fn ends(&self, arc: u32) -> [Slot; 2] {
        self.ends[arc as usize - 1]
    }

    /// The other end of the arc attached at `slot`.
    pub fn twin(&self, slot: Slot) -> Slot {
        let [a, b] = self.ends(self.arc_at(slot));
        if a == slot {
            b
        } else {
            a
        }
    }

    /// Faces traced from the rotation system. Each face lists corners in the
    /// order met when walking its boundary with the face on the right.
    pub fn faces(&self) -> Vec<FaceBoundary> {
        let n = self.crossing_count();
        if n == 0 {
            return vec![
                FaceBoundary { corners: Vec::new(), arcs: Vec::new() },
                FaceBoundary { corners: Vec::new(), arcs: Vec::new() },
            ];
        }
        let mut seen = vec![[false; 4]; n];
        let mut faces = Vec::new();
        for c in 0..n {
            for pos in 0..4 {
                if seen[c][pos] {
                    continue;
                }
                let mut face = FaceBoundary { corners: Vec::new(), arcs: Vec::new() };
                let mut dart = Slot::new(c, pos);
                while !seen[dart.crossing][dart.pos] {
                    seen[dart.crossing][dart.pos] = true;
                    face.arcs.push(self.arc_at(dart));
                    let arrive = self.twin(dart);
                    face.corners.push(arrive);
                    dart = Slot::new(arrive.crossing, arrive.pos + 1);
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Strand components as sets of arc labels, ordered by their lowest arc.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let mut uf = UnionFind::new(self.arc_count());
        for tuple in &self.crossings {
            uf.union(tuple[0] as usize - 1, tuple[2] as usize - 1);
            uf.union(tuple[1] as usize - 1, tuple[3] as usize - 1);
        }
        let mut by_root: std::collections::BTreeMap<usize, Vec<u32>> = Default::default();
        for a in 0..self.arc_count() {
            by_root.entry(uf.find(a)).or_default().push(a as u32 + 1);
        }
        let mut comps: Vec<Vec<u32>> = by_root.into_values().collect();
        comps.sort_by_key(|c| c[0]);
        comps
    }

    /// Number of link components; a crossingless diagram has one.
    pub fn component_count(&self) -> usize {
        if self.crossings.is_empty() {
            1
        } else {
            self.components().len()
        }
    }

    /// Walks a strand starting on `arc` heading into `head`, returning each
    /// visited arc with the slot it enters.
    pub(crate) fn walk(&self, arc: u32, head: Slot) -> Vec<(u32, Slot)> {
        let mut out = Vec::new();
        let (mut a, mut h) = (arc, head);
        loop {
            out.push((a, h));
            let tail = h.through();
            a = self.arc_at(tail);
            h = self.twin(tail);
            if a == arc && h == head {
                return out;
            }
        }
    }

    /// Crossings where one face fills two opposite corners. Such crossings
    /// are nugatory: a circle through that face meets the diagram only there.
    pub fn nugatory_crossings(&self) -> Vec<usize> {
        let corner_face = self.corner_faces();
        (0..self.crossing_count())
            .filter(|&c| corner_face[c][0] == corner_face[c][2] || corner_face[c][1] == corner_face[c][3])
            .collect()
    }

    /// Face index of every corner.
    pub(crate) fn corner_faces(&self) -> Vec<[usize; 4]> {
        let mut out = vec![[usize::MAX; 4]; self.crossing_count()];
        for (f, face) in self.faces().iter().enumerate() {
            for corner in &face.corners {
                out[corner.crossing][corner.pos] = f;
            }
        }
        out
    }

    /// Canonical PD text, e.g. `X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)`.
    pub fn to_pd_string(&self) -> String {
        self.crossings
            .iter()
            .map(|t| format!("X({},{},{},{})", t[0], t[1], t[2], t[3]))
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn crossing_pieces(&self) -> usize {
        let n = self.crossing_count();
        let mut uf = UnionFind::new(n);
        for [a, b] in &self.ends {
            uf.union(a.crossing, b.crossing);
        }
        (0..n).filter(|&c| uf.find(c) == c).count()
    }

    /// Every component that passes under somewhere must do so entering at
    /// slot 0 each time, for one of its two directions.
    fn check_under_convention(&self) -> Result<()> {
        for comp in self.components() {
            let arc = comp[0];
            let entries: Vec<usize> = self
                .walk(arc, self.ends(arc)[0])
                .iter()
                .filter(|(_, h)| h.is_under())
                .map(|(_, h)| h.pos)
                .collect();
            if entries.windows(2).any(|w| w[0] != w[1]) {
                return Err(Error::InconsistentOrientation { arc });
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diagram({})", self.to_pd_string())
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pd_string())
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}
