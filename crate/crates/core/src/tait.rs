//! Tait graphs: one vertex per face of a chosen color, one edge per crossing.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::diagram::{Checkerboard, Color};
use crate::lattice::{GramForm, Provenance};
use crate::matrix::IntMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaitEdge {
    pub u: usize,
    pub v: usize,
    pub sign: i8,
    /// Source crossing, absent for graphs built by hand.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub crossing: Option<usize>,
}

/// A signed planar multigraph. Serializes as a JSON edge list:
/// `{"vertices": 3, "edges": [{"u": 0, "v": 1, "sign": 1}, ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaitGraph {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub color: Option<Color>,
    pub vertices: usize,
    /// Face index (in the checkerboard) of each vertex.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub faces: Vec<usize>,
    pub edges: Vec<TaitEdge>,
}

pub fn tait_graph(cb: &Checkerboard, color: Color) -> TaitGraph {
    let faces = cb.faces_of(color);
    let mut vertex_of = vec![usize::MAX; cb.faces().len()];
    for (v, &f) in faces.iter().enumerate() {
        vertex_of[f] = v;
    }
    let edges = (0..cb.crossing_count())
        .map(|c| {
            let [a, b] = cb.faces_at(color, c);
            TaitEdge { u: vertex_of[a], v: vertex_of[b], sign: cb.edge_sign(color, c), crossing: Some(c) }
        })
        .collect();
    TaitGraph { color: Some(color), vertices: faces.len(), faces, edges }
}

impl TaitGraph {
    /// An unsigned graph (all edge signs +1) from an edge list.
    pub fn from_edges(vertices: usize, edges: &[(usize, usize)]) -> TaitGraph {
        let edges = edges.iter().map(|&(u, v)| TaitEdge { u, v, sign: 1, crossing: None }).collect();
        TaitGraph { color: None, vertices, faces: Vec::new(), edges }
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Common sign of all edges, or `None` if they disagree. An edgeless
    /// graph reports +1.
    pub fn uniform_sign(&self) -> Option<i8> {
        match self.edges.first() {
            None => Some(1),
            Some(e) if self.edges.iter().all(|f| f.sign == e.sign) => Some(e.sign),
            Some(_) => None,
        }
    }

    fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertices];
        for (i, e) in self.edges.iter().enumerate() {
            adj[e.u].push((i, e.v));
            if e.u != e.v {
                adj[e.v].push((i, e.u));
            }
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertices];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(_, w) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Breadth-first spanning forest from the lowest vertex of each
    /// component; returns for each edge whether it is a tree edge, and for
    /// each vertex its parent edge.
    fn spanning_forest(&self) -> (Vec<bool>, Vec<Option<usize>>) {
        let adj = self.adjacency();
        let mut in_tree = vec![false; self.edges.len()];
        let mut parent = vec![None; self.vertices];
        let mut seen = vec![false; self.vertices];
        for root in 0..self.vertices {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &(e, w) in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        in_tree[e] = true;
                        parent[w] = Some(e);
                        queue.push_back(w);
                    }
                }
            }
        }
        (in_tree, parent)
    }

    /// Fundamental cycles of the breadth-first spanning forest, one per
    /// non-tree edge in edge order, as signed vectors in the edge space. Each
    /// cycle runs along its non-tree edge from `u` to `v` and returns through
    /// the tree.
    pub fn fundamental_cycles(&self) -> Vec<Vec<i64>> {
        let (in_tree, parent) = self.spanning_forest();
        let m = self.edges.len();
        // Path from x to the root as signed edge coefficients, traversed
        // from x upward.
        let path_up = |x: usize| -> Vec<(usize, i64)> {
            let mut out = Vec::new();
            let mut at = x;
            while let Some(e) = parent[at] {
                let edge = &self.edges[e];
                let (next, coeff) = if edge.v == at { (edge.u, -1) } else { (edge.v, 1) };
                out.push((e, coeff));
                at = next;
            }
            out
        };
        let mut cycles = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if in_tree[i] {
                continue;
            }
            let mut z = vec![0i64; m];
            z[i] += 1;
            // From v up to the root, then from the root down to u.
            for (f, c) in path_up(e.v) {
                z[f] += c;
            }
            for (f, c) in path_up(e.u) {
                z[f] -= c;
            }
            cycles.push(z);
        }
        cycles
    }

    /// Cycle rank, `E − V + components`.
    pub fn cycle_rank(&self) -> usize {
        let (in_tree, _) = self.spanning_forest();
        in_tree.iter().filter(|&&t| !t).count()
    }
}

/// Gram matrix of the integer flow lattice in the fundamental-cycle basis,
/// with the standard inner product of the edge space. This is the positive
/// semidefinite representative; the geometric sign of the form is the
/// graph's uniform edge sign.
pub fn flow_lattice(g: &TaitGraph) -> GramForm {
    let cycles = fundamental_cycles(g);
    let r = cycles.len();
    let mut gram = IntMatrix::zeros(r, r);
    for i in 0..r {
        for j in 0..r {
            gram[(i, j)] = cycles[i].iter().zip(&cycles[j]).map(|(a, b)| a * b).sum();
        }
    }
    GramForm::with_provenance(gram, Provenance::FlowLattice).expect("Gram matrices are symmetric")
}

pub fn fundamental_cycles(g: &TaitGraph) -> Vec<Vec<i64>> {
    g.fundamental_cycles()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    pub articulation_vertices: Vec<usize>,
    /// Edge indices of each block, sorted; blocks ordered by first edge.
    pub blocks: Vec<Vec<usize>>,
    pub cycle_ranks: Vec<usize>,
}

impl BlockDecomposition {
    /// Number of blocks that carry at least one cycle.
    pub fn cyclic_block_count(&self) -> usize {
        self.cycle_ranks.iter().filter(|&&r| r > 0).count()
    }
}

/// Biconnected components of a multigraph. Loops form their own blocks and
/// parallel edges stay together.
pub fn blocks(g: &TaitGraph) -> BlockDecomposition {
    let n = g.vertices;
    let mut adj = vec![Vec::new(); n];
    let mut found: Vec<Vec<usize>> = Vec::new();
    for (i, e) in g.edges.iter().enumerate() {
        if e.u == e.v {
            found.push(vec![i]);
        } else {
            adj[e.u].push((i, e.v));
            adj[e.v].push((i, e.u));
        }
    }

    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut edge_stack: Vec<usize> = Vec::new();
    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, edge used to reach it, next adjacency index)
        let mut frames: Vec<(usize, Option<usize>, usize)> = vec![(root, None, 0)];
        while let Some(&mut (v, via, ref mut next)) = frames.last_mut() {
            if *next < adj[v].len() {
                let (e, w) = adj[v][*next];
                *next += 1;
                if Some(e) == via {
                    continue;
                }
                if disc[w] == UNSEEN {
                    edge_stack.push(e);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    frames.push((w, Some(e), 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            frames.pop();
            if let (Some(&(u, _, _)), Some(via)) = (frames.last(), via) {
                low[u] = low[u].min(low[v]);
                if low[v] >= disc[u] {
                    let mut block = Vec::new();
                    while let Some(e) = edge_stack.pop() {
                        block.push(e);
                        if e == via {
                            break;
                        }
                    }
                    found.push(block);
                }
            }
        }
    }

    for b in &mut found {
        b.sort_unstable();
    }
    found.sort();
    let mut membership = vec![0usize; n];
    let mut cycle_ranks = Vec::with_capacity(found.len());
    for block in &found {
        let mut verts: Vec<usize> = block.iter().flat_map(|&e| [g.edges[e].u, g.edges[e].v]).collect();
        verts.sort_unstable();
        verts.dedup();
        for &v in &verts {
            membership[v] += 1;
        }
        cycle_ranks.push(block.len() + 1 - verts.len());
    }
    let articulation_vertices = (0..n).filter(|&v| membership[v] >= 2).collect();
    BlockDecomposition { articulation_vertices, blocks: found, cycle_ranks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{checkerboard, parse_pd};

    const TREFOIL: &str = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)";

    fn trefoil_graphs() -> (TaitGraph, TaitGraph) {
        let cb = checkerboard(&parse_pd(TREFOIL).unwrap());
        let (b, w) = (tait_graph(&cb, Color::Black), tait_graph(&cb, Color::White));
        if b.vertices == 3 {
            (b, w)
        } else {
            (w, b)
        }
    }

    #[test]
    fn trefoil_tait_graphs() {
        let (cycle, theta) = trefoil_graphs();
        assert_eq!((cycle.vertices, cycle.edge_count()), (3, 3));
        assert_eq!((theta.vertices, theta.edge_count()), (2, 3));
        for e in &theta.edges {
            assert_ne!(e.u, e.v);
        }
        assert_eq!(blocks(&cycle).blocks.len(), 1);
        assert!(cycle.uniform_sign().is_some());
        assert_eq!(cycle.uniform_sign().map(|s| -s), theta.uniform_sign());
    }

    #[test]
    fn trefoil_flow_lattices() {
        let (cycle, theta) = trefoil_graphs();
        assert_eq!(flow_lattice(&cycle).matrix().to_rows(), vec![vec![3]]);
        let q = flow_lattice(&theta);
        assert_eq!(q.rank(), 2);
        assert_eq!(q.matrix().det_i64(), 3);
        assert_eq!(q.matrix()[(0, 0)], 2);
        assert_eq!(q.matrix()[(0, 1)].abs(), 1);
    }

    #[test]
    fn unknot_graph_is_a_point() {
        let cb = checkerboard(&crate::diagram::Diagram::unknot());
        let g = tait_graph(&cb, Color::Black);
        assert_eq!((g.vertices, g.edge_count()), (1, 0));
        assert_eq!(flow_lattice(&g).rank(), 0);
        assert!(blocks(&g).blocks.is_empty());
    }

    #[test]
    fn loops_have_norm_one() {
        let g = TaitGraph::from_edges(1, &[(0, 0)]);
        assert_eq!(flow_lattice(&g).matrix().to_rows(), vec![vec![1]]);
        assert_eq!(blocks(&g).cycle_ranks, vec![1]);
    }

    #[test]
    fn bouquet_of_triangles() {
        let g = TaitGraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]);
        let b = blocks(&g);
        assert_eq!(b.articulation_vertices, vec![0]);
        assert_eq!(b.blocks, vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert_eq!(b.cycle_ranks, vec![1, 1]);
        assert_eq!(flow_lattice(&g).matrix().det_i64(), 9);
    }

    #[test]
    fn theta_is_one_block() {
        let g = TaitGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]);
        let b = blocks(&g);
        assert!(b.articulation_vertices.is_empty());
        assert_eq!(b.cycle_ranks, vec![2]);
        assert_eq!(flow_lattice(&g).matrix().to_rows(), vec![vec![2, 1], vec![1, 2]]);
    }

    #[test]
    fn path_has_two_bridges() {
        let g = TaitGraph::from_edges(3, &[(0, 1), (1, 2)]);
        let b = blocks(&g);
        assert_eq!(b.articulation_vertices, vec![1]);
        assert_eq!(b.cycle_ranks, vec![0, 0]);
        assert_eq!(flow_lattice(&g).rank(), 0);
    }

    #[test]
    fn cycles_are_flows() {
        let g = TaitGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 1), (3, 1)]);
        for z in g.fundamental_cycles() {
            let mut net = vec![0i64; g.vertices];
            for (e, c) in g.edges.iter().zip(&z) {
                net[e.u] -= c;
                net[e.v] += c;
            }
            assert!(net.iter().all(|&x| x == 0));
        }
        assert_eq!(g.cycle_rank(), 4);
    }

    #[test]
    fn json_round_trip() {
        let g = TaitGraph::from_edges(2, &[(0, 1), (0, 1)]);
        let text = serde_json::to_string(&g).unwrap();
        assert_eq!(text, r#"{"vertices":2,"edges":[{"u":0,"v":1,"sign":1},{"u":0,"v":1,"sign":1}]}"#);
        assert_eq!(serde_json::from_str::<TaitGraph>(&text).unwrap(), g);
    }
}
