use super::{Diagram, Slot};

/// A diagram with a direction on every arc and the resulting crossing signs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedDiagram {
    diagram: Diagram,
    /// For arc label `a`, `heads[a - 1]` is the slot the arc runs into.
    heads: Vec<Slot>,
    signs: Vec<i8>,
    components: usize,
}

/// Orients every component from its lowest arc label. The direction is the
/// one in which the component enters its under-crossings at slot 0 (the PD
/// convention); a component that never passes under heads toward the first
/// slot its lowest arc occupies.
pub fn orient(d: &Diagram) -> OrientedDiagram {
    let mut heads = vec![Slot::new(0, 0); d.arc_count()];
    let comps = d.components();
    for comp in &comps {
        let seed = comp[0];
        let [first, second] = d.ends(seed);
        let mut path = d.walk(seed, first);
        if path.iter().find(|(_, h)| h.is_under()).is_some_and(|(_, h)| h.pos == 2) {
            path = d.walk(seed, second);
        }
        for (arc, head) in path {
            heads[arc as usize - 1] = head;
        }
    }
    OrientedDiagram::from_heads(d.clone(), heads, d.component_count())
}

impl OrientedDiagram {
    fn from_heads(diagram: Diagram, heads: Vec<Slot>, components: usize) -> Self {
        let mut od = OrientedDiagram { diagram, heads, signs: Vec::new(), components };
        od.signs = (0..od.diagram.crossing_count()).map(|c| od.compute_sign(c)).collect();
        od
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn sign(&self, crossing: usize) -> i8 {
        self.signs[crossing]
    }

    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|&s| s as i64).sum()
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    pub fn is_knot(&self) -> bool {
        self.components == 1
    }

    pub fn crossing_count(&self) -> usize {
        self.diagram.crossing_count()
    }

    /// Whether the strand at `slot` runs into the crossing there.
    pub fn is_incoming(&self, slot: Slot) -> bool {
        self.heads[self.diagram.arc_at(slot) as usize - 1] == slot
    }

    /// Incoming under-strand position (0 or 2) at a crossing.
    pub fn under_in(&self, crossing: usize) -> usize {
        if self.is_incoming(Slot::new(crossing, 0)) {
            0
        } else {
            2
        }
    }

    /// Incoming over-strand position (1 or 3) at a crossing.
    pub fn over_in(&self, crossing: usize) -> usize {
        if self.is_incoming(Slot::new(crossing, 1)) {
            1
        } else {
            3
        }
    }

    /// Right-hand rule with slots counterclockwise: under 0→2 with over 3→1
    /// is positive, and reversing either strand flips the sign.
    fn compute_sign(&self, c: usize) -> i8 {
        match (self.under_in(c), self.over_in(c)) {
            (0, 3) | (2, 1) => 1,
            _ => -1,
        }
    }

    /// The same diagram with every strand reversed.
    pub fn reversed(&self) -> OrientedDiagram {
        let d = &self.diagram;
        let heads = (1..=d.arc_count() as u32)
            .map(|a| {
                let [x, y] = d.ends(a);
                if self.heads[a as usize - 1] == x {
                    y
                } else {
                    x
                }
            })
            .collect();
        OrientedDiagram::from_heads(d.clone(), heads, self.components)
    }

    /// Seifert circles as cycles of arc labels, ordered by lowest label. At
    /// each crossing the incoming end of one strand is joined to the outgoing
    /// end of the other.
    pub fn seifert_circles(&self) -> Vec<Vec<u32>> {
        let d = &self.diagram;
        if d.crossing_count() == 0 {
            return vec![Vec::new()];
        }
        let next = |arc: u32| -> u32 {
            let head = self.heads[arc as usize - 1];
            let out_pos = if head.is_under() { self.over_in(head.crossing) + 2 } else { self.under_in(head.crossing) + 2 };
            d.arc_at(Slot::new(head.crossing, out_pos))
        };
        let mut seen = vec![false; d.arc_count()];
        let mut circles = Vec::new();
        for start in 1..=d.arc_count() as u32 {
            if seen[start as usize - 1] {
                continue;
            }
            let mut circle = Vec::new();
            let mut a = start;
            while !seen[a as usize - 1] {
                seen[a as usize - 1] = true;
                circle.push(a);
                a = next(a);
            }
            circles.push(circle);
        }
        circles
    }
}

impl Diagram {
    /// The mirror image: every crossing switched. Each tuple is rotated so
    /// that it again starts at the incoming under-strand.
    pub fn mirror(&self) -> Diagram {
        let od = orient(self);
        let crossings = self
            .crossings()
            .iter()
            .enumerate()
            .map(|(c, t)| match od.over_in(c) {
                1 => [t[1], t[2], t[3], t[0]],
                _ => [t[3], t[0], t[1], t[2]],
            })
            .collect();
        Diagram::from_crossings(crossings).expect("mirror of a valid diagram is valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;

    #[test]
    fn trefoil_signs_are_uniform() {
        let od = orient(&parse_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)").unwrap());
        assert_eq!(od.signs(), &[1, 1, 1]);
        assert!(od.is_knot());
    }

    #[test]
    fn figure_eight_signs_are_mixed() {
        let od = orient(&parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap());
        assert_eq!(od.signs(), &[1, 1, -1, -1]);
        assert_eq!(od.writhe(), 0);
    }

    #[test]
    fn unknot_has_no_signs() {
        let od = orient(&Diagram::unknot());
        assert!(od.signs().is_empty());
        assert!(od.is_knot());
    }

    #[test]
    fn orientation_follows_pd_convention() {
        let od = orient(&parse_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)").unwrap());
        for c in 0..3 {
            assert_eq!(od.under_in(c), 0);
        }
    }

    #[test]
    fn reversal_keeps_knot_signs() {
        for pd in ["X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)", "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"] {
            let od = orient(&parse_pd(pd).unwrap());
            assert_eq!(od.reversed().signs(), od.signs());
        }
    }

    #[test]
    fn mirror_flips_signs() {
        let d = parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap();
        let m = d.mirror();
        let (a, b) = (orient(&d), orient(&m));
        let flipped: Vec<i8> = a.signs().iter().map(|s| -s).collect();
        assert_eq!(b.signs(), &flipped[..]);
        assert_eq!(m.mirror(), d);
    }

    #[test]
    fn hopf_link_has_two_components() {
        let od = orient(&parse_pd("X(4,1,3,2) X(2,3,1,4)").unwrap());
        assert_eq!(od.component_count(), 2);
        assert!(!od.is_knot());
        assert_eq!(od.signs()[0], od.signs()[1]);
    }
}
