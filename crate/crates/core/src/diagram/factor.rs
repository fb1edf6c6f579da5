use super::{checkerboard, is_alternating, Color, Diagram, Slot};
use crate::error::{Error, Result};
use crate::tait::{blocks, tait_graph};

/// Splits a diagram into its diagrammatic connected summands.
///
/// Summands correspond to blocks of a Tait graph (a cut vertex is a face
/// that a splitting circle passes through). Each summand keeps the crossings
/// of one block; strands are followed straight through the other crossings
/// to reconnect its arcs. Nugatory crossings come out as one-crossing
/// summands. Factors are ordered by their lowest crossing index.
pub fn connected_sum_factors(d: &Diagram) -> Result<Vec<Diagram>> {
    if !is_alternating(d) {
        return Err(Error::NotAlternating);
    }
    if d.crossing_count() == 0 {
        return Ok(vec![d.clone()]);
    }
    let g = tait_graph(&checkerboard(d), Color::Black);
    let decomposition = blocks(&g);
    decomposition
        .blocks
        .iter()
        .map(|block| {
            let mut crossings: Vec<usize> = block.iter().map(|&e| g.edges[e].crossing.expect("diagram edge")).collect();
            crossings.sort_unstable();
            restrict(d, &crossings)
        })
        .collect()
}

/// The diagram on a subset of crossings, with every strand that leaves the
/// subset followed until it comes back.
fn restrict(d: &Diagram, keep: &[usize]) -> Result<Diagram> {
    if keep.len() == d.crossing_count() {
        return Ok(d.clone());
    }
    let mut local = vec![usize::MAX; d.crossing_count()];
    for (i, &c) in keep.iter().enumerate() {
        local[c] = i;
    }
    let partner = |from: Slot| -> Slot {
        let mut at = d.twin(from);
        while local[at.crossing] == usize::MAX {
            at = d.twin(at.through());
        }
        at
    };

    let mut labels = vec![[0u32; 4]; keep.len()];
    let mut next_label = 1;
    // Walk strands forward from each unlabeled outgoing under-slot, numbering
    // arcs in the order met.
    for start in 0..keep.len() {
        for pos in [2, 0, 1, 3] {
            if labels[start][pos] != 0 {
                continue;
            }
            let mut out = Slot::new(keep[start], pos);
            loop {
                let here = Slot::new(local[out.crossing], out.pos);
                if labels[here.crossing][here.pos] != 0 {
                    break;
                }
                let into = partner(out);
                labels[here.crossing][here.pos] = next_label;
                labels[local[into.crossing]][into.pos] = next_label;
                next_label += 1;
                out = into.through();
            }
        }
    }
    Diagram::from_crossings(labels)
}
