use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{Diagram, Slot};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

impl std::fmt::Display for Color {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Color::Black => "black",
            Color::White => "white",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Face {
    pub color: Color,
    pub corners: Vec<Slot>,
    pub arcs: Vec<u32>,
}

/// How the two color classes sit at one crossing.
///
/// `ccw_of_over` is the color filling corners 1 and 3, the corners swept
/// when the over-strand is turned counterclockwise. In Goeritz terms a
/// crossing is of type a for that color and type b for the other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CrossingIncidence {
    pub black: [usize; 2],
    pub white: [usize; 2],
    pub ccw_of_over: Color,
}

/// A proper 2-coloring of the faces. The face at corner 0 of crossing 0 is
/// black.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Checkerboard {
    faces: Vec<Face>,
    corner_face: Vec<[usize; 4]>,
}

pub fn checkerboard(d: &Diagram) -> Checkerboard {
    let traced = d.faces();
    let corner_face = d.corner_faces();
    let mut colors: Vec<Option<Color>> = vec![None; traced.len()];
    if d.crossing_count() == 0 {
        colors = vec![Some(Color::Black), Some(Color::White)];
    } else {
        let root = corner_face[0][0];
        colors[root] = Some(Color::Black);
        let mut queue = VecDeque::from([root]);
        while let Some(f) = queue.pop_front() {
            let here = colors[f].expect("queued faces are colored");
            for corner in &traced[f].corners {
                for step in [1, 3] {
                    let g = corner_face[corner.crossing][(corner.pos + step) % 4];
                    match colors[g] {
                        None => {
                            colors[g] = Some(here.other());
                            queue.push_back(g);
                        }
                        Some(c) => assert_ne!(c, here, "faces of a planar diagram are 2-colorable"),
                    }
                }
            }
        }
    }
    let faces = traced
        .into_iter()
        .zip(colors)
        .map(|(t, c)| Face { color: c.expect("diagram is connected"), corners: t.corners, arcs: t.arcs })
        .collect();
    Checkerboard { faces, corner_face }
}

impl Checkerboard {
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn crossing_count(&self) -> usize {
        self.corner_face.len()
    }

    /// Indices of the faces of one color, in tracing order.
    pub fn faces_of(&self, color: Color) -> Vec<usize> {
        (0..self.faces.len()).filter(|&f| self.faces[f].color == color).collect()
    }

    pub fn count(&self, color: Color) -> usize {
        self.faces.iter().filter(|f| f.color == color).count()
    }

    pub fn face_at(&self, crossing: usize, corner: usize) -> usize {
        self.corner_face[crossing][corner % 4]
    }

    pub fn color_at(&self, crossing: usize, corner: usize) -> Color {
        self.faces[self.face_at(crossing, corner)].color
    }

    /// First corner (0 or 1) of the given color at a crossing; the second
    /// is two steps further round.
    pub fn corner_of(&self, color: Color, crossing: usize) -> usize {
        if self.color_at(crossing, 0) == color {
            0
        } else {
            1
        }
    }

    /// The two faces of `color` meeting at a crossing.
    pub fn faces_at(&self, color: Color, crossing: usize) -> [usize; 2] {
        let k = self.corner_of(color, crossing);
        [self.face_at(crossing, k), self.face_at(crossing, k + 2)]
    }

    pub fn incidence(&self, crossing: usize) -> CrossingIncidence {
        CrossingIncidence {
            black: self.faces_at(Color::Black, crossing),
            white: self.faces_at(Color::White, crossing),
            ccw_of_over: self.color_at(crossing, 1),
        }
    }

    /// Incidence sign of a crossing seen from one color: +1 when that color
    /// fills the corners counterclockwise of the over-strand, −1 otherwise.
    pub fn edge_sign(&self, color: Color, crossing: usize) -> i8 {
        if self.color_at(crossing, 1) == color {
            1
        } else {
            -1
        }
    }
}
