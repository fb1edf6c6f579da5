use std::collections::BTreeSet;

use serde::Serialize;

use super::{checkerboard, Color, Diagram, OrientedDiagram};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SpecialityReport {
    pub is_alternating: bool,
    pub is_special: bool,
    /// The color whose checkerboard surface is the Seifert surface.
    pub orientable_color: Option<Color>,
    /// Common sign of all crossings, when they agree. Vacuously +1 for a
    /// crossingless diagram.
    pub uniform_sign: Option<i8>,
    /// True when the diagram is the negative one of a mirror pair, i.e. its
    /// mirror image is the all-positive diagram. Nothing is rewritten.
    pub mirror_applied: bool,
}

impl SpecialityReport {
    pub fn is_special_alternating(&self) -> bool {
        self.is_special && self.is_alternating
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SeifertStats {
    pub circles: usize,
    pub genus: i64,
}

/// Every arc runs from an under-slot to an over-slot, so strands alternate.
pub fn is_alternating(d: &Diagram) -> bool {
    (1..=d.arc_count() as u32).all(|a| {
        let [x, y] = d.ends(a);
        x.is_under() != y.is_under()
    })
}

pub fn seifert_circles(od: &OrientedDiagram) -> Vec<Vec<u32>> {
    od.seifert_circles()
}

/// Circle count and the genus of the surface from Seifert's algorithm.
pub fn seifert_stats(od: &OrientedDiagram) -> SeifertStats {
    let circles = od.seifert_circles().len();
    let n = od.crossing_count() as i64;
    let genus = (n - circles as i64 + 2 - od.component_count() as i64) / 2;
    SeifertStats { circles, genus }
}

fn partition(parts: impl IntoIterator<Item = Vec<u32>>) -> BTreeSet<BTreeSet<u32>> {
    parts.into_iter().map(|p| p.into_iter().collect()).collect()
}

/// Decides whether one checkerboard surface is orientable.
///
/// The primary test compares the Seifert circles with the face boundaries
/// of each color. For alternating diagrams the answer is recomputed from
/// crossing signs alone, and a disagreement is an error.
pub fn classify_special(od: &OrientedDiagram) -> Result<SpecialityReport> {
    if !od.is_knot() {
        return Err(Error::NotAKnot { components: od.component_count() });
    }
    let d = od.diagram();
    let alternating = is_alternating(d);
    let cb = checkerboard(d);
    let circles = partition(od.seifert_circles());
    let orientable_color = [Color::Black, Color::White].into_iter().find(|&color| {
        let faces = cb.faces().iter().filter(|f| f.color == color).map(|f| f.arcs.clone());
        partition(faces) == circles
    });
    let is_special = orientable_color.is_some();

    let signs = od.signs();
    let uniform_sign = match signs.first() {
        None => Some(1),
        Some(&s) if signs.iter().all(|&t| t == s) => Some(s),
        Some(_) => None,
    };
    if alternating && is_special != uniform_sign.is_some() {
        return Err(Error::Inconsistency(format!(
            "alternating diagram {d}: Seifert circles say special={is_special}, crossing signs say {}",
            uniform_sign.is_some()
        )));
    }
    Ok(SpecialityReport {
        is_alternating: alternating,
        is_special,
        orientable_color,
        uniform_sign,
        mirror_applied: uniform_sign == Some(-1),
    })
}
