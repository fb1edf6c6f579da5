//! Random planar multigraphs, unimodular scrambles and brute-force spanning
//! tree counts shared by the integration tests.
#![allow(dead_code)]

use bandprime::diagram::Diagram;
use bandprime::matrix::IntMatrix;
use bandprime::tait::TaitGraph;
use rand::Rng;

/// Seed graphs, each drawn in the plane.
fn seed(kind: usize) -> (usize, Vec<(usize, usize)>) {
    match kind {
        0 => (1, vec![]),
        1 => (2, vec![(0, 1)]),
        2 => (3, vec![(0, 1), (1, 2), (2, 0)]),
        3 => (4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)]),
        // Triangular prism.
        4 => (6, vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]),
        // Wheel with four spokes.
        _ => (5, vec![(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (4, 1)]),
    }
}

/// A connected planar multigraph with at most `max_edges` edges.
///
/// Starts from a seed and applies operations that keep a plane drawing:
/// pendant edges, parallel edges, subdivisions, loops, and gluing another
/// seed at a single vertex.
pub fn random_planar_multigraph<R: Rng>(rng: &mut R, max_edges: usize) -> TaitGraph {
    let (mut n, mut edges) = loop {
        let s = seed(rng.gen_range(0..6));
        if s.1.len() <= max_edges {
            break s;
        }
    };
    let target = rng.gen_range(edges.len()..=max_edges);
    let mut stalls = 0;
    while edges.len() < target && stalls < 20 {
        match rng.gen_range(0..5) {
            0 => {
                edges.push((rng.gen_range(0..n), n));
                n += 1;
            }
            1 if !edges.is_empty() => {
                let e = edges[rng.gen_range(0..edges.len())];
                edges.push(e);
            }
            2 if !edges.is_empty() => {
                let i = rng.gen_range(0..edges.len());
                let (u, v) = edges[i];
                edges[i] = (u, n);
                edges.push((n, v));
                n += 1;
            }
            3 => {
                let v = rng.gen_range(0..n);
                edges.push((v, v));
            }
            4 => {
                let (m, extra) = seed(rng.gen_range(1..6));
                if edges.len() + extra.len() > max_edges {
                    stalls += 1;
                    continue;
                }
                // Identify vertex 0 of the new piece with a random vertex.
                let at = rng.gen_range(0..n);
                let map = |x: usize| if x == 0 { at } else { n + x - 1 };
                edges.extend(extra.iter().map(|&(u, v)| (map(u), map(v))));
                n += m - 1;
            }
            _ => stalls += 1,
        }
    }
    TaitGraph::from_edges(n, &edges)
}

/// A random unimodular matrix: a product of elementary operations.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize) -> IntMatrix {
    let mut u = IntMatrix::identity(n);
    if n == 0 {
        return u;
    }
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        match rng.gen_range(0..3) {
            0 if n > 1 => {
                let j = (i + rng.gen_range(1..n)) % n;
                let k = rng.gen_range(-2..=2);
                for c in 0..n {
                    let add = k * u[(j, c)];
                    u[(i, c)] += add;
                }
            }
            1 => {
                let j = rng.gen_range(0..n);
                for c in 0..n {
                    let t = u[(i, c)];
                    u[(i, c)] = u[(j, c)];
                    u[(j, c)] = t;
                }
            }
            _ => {
                for c in 0..n {
                    u[(i, c)] = -u[(i, c)];
                }
            }
        }
    }
    u
}

/// Number of spanning trees, by testing every `(vertices − 1)`-subset of
/// edges for acyclicity.
pub fn spanning_trees_brute_force(g: &TaitGraph) -> u64 {
    let n = g.vertices;
    let m = g.edge_count();
    if n <= 1 {
        return 1;
    }
    let mut count = 0;
    for mask in 0u32..(1 << m) {
        if mask.count_ones() as usize != n - 1 {
            continue;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        let mut acyclic = true;
        for (i, e) in g.edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
                if a == b {
                    acyclic = false;
                    break;
                }
                parent[a] = b;
            }
        }
        count += u64::from(acyclic);
    }
    count
}

/// True when arcs are numbered consecutively along the knot, so the under
/// strand of every crossing reads `(i, i+1)`.
pub fn is_consecutive(d: &Diagram) -> bool {
    let m = d.arc_count() as u32;
    d.crossings().iter().all(|x| x[2] == x[0] % m + 1)
}

/// Whether arc `a` leaves its tail crossing as the over-strand.
fn leaves_over(d: &Diagram, a: u32) -> Option<bool> {
    let m = d.arc_count() as u32;
    let prev = if a == 1 { m } else { a - 1 };
    for x in d.crossings() {
        if x[2] == a && x[0] == prev {
            return Some(false);
        }
        if (x[1] == a && x[3] == prev) || (x[3] == a && x[1] == prev) {
            return Some(true);
        }
    }
    None
}

/// Connected sum of two consecutively numbered diagrams, cutting arc `a` of
/// `d1` and arc `b` of `d2` and splicing the strands. Returns `None` when the
/// two arcs leave their crossings differently, since the sum would then
/// break alternation.
pub fn connected_sum(d1: &Diagram, d2: &Diagram, a: u32, b: u32) -> Option<Diagram> {
    if d1.crossing_count() == 0 {
        return Some(d2.clone());
    }
    if d2.crossing_count() == 0 {
        return Some(d1.clone());
    }
    if leaves_over(d1, a)? != leaves_over(d2, b)? {
        return None;
    }
    let (n1, n2) = (d1.arc_count() as u32, d2.arc_count() as u32);
    let prev1 = if a == 1 { n1 } else { a - 1 };
    let prev2 = if b == 1 { n2 } else { b - 1 };
    // The half of `a` leaving its tail (the crossing shared with `a - 1`)
    // runs on into the head half of `b`; the tail half of `b` runs into the
    // head half of `a`. Arcs of `d2` are renumbered to start after `a`.
    let mut crossings = Vec::new();
    for x in d1.crossings() {
        let at_tail = x.contains(&prev1);
        crossings.push(x.map(|y| match y.cmp(&a) {
            std::cmp::Ordering::Less => y,
            std::cmp::Ordering::Greater => y + n2,
            std::cmp::Ordering::Equal if at_tail => a,
            std::cmp::Ordering::Equal => a + n2,
        }));
    }
    for x in d2.crossings() {
        let at_tail = x.contains(&prev2);
        crossings.push(x.map(|y| match y == b {
            true if at_tail => a + n2,
            true => a,
            false => a + 1 + (y + n2 - b - 1) % n2,
        }));
    }
    Diagram::from_crossings(crossings).ok()
}

/// Alternating corpus diagrams, by name.
pub fn alternating_corpus() -> Vec<(String, Diagram)> {
    bandprime::corpus::bundled()
        .into_iter()
        .map(|e| (e.name, bandprime::diagram::parse_pd(&e.pd).expect("corpus parses")))
        .filter(|(_, d)| bandprime::diagram::is_alternating(d) && is_consecutive(d))
        .collect()
}

/// Connected sum of the pieces, in order. `choice` picks the cut arcs; the
/// second arc is moved forward until its type matches the first, so every
/// sum of alternating pieces stays alternating.
pub fn alternating_sum(pieces: &[Diagram], choice: &[u32]) -> Option<Diagram> {
    let mut acc = pieces.first()?.clone();
    for (i, p) in pieces.iter().enumerate().skip(1) {
        if acc.crossing_count() == 0 || p.crossing_count() == 0 {
            acc = connected_sum(&acc, p, 1, 1)?;
            continue;
        }
        let c = choice.get(i).copied().unwrap_or(0);
        let a = c % acc.arc_count() as u32 + 1;
        let n2 = p.arc_count() as u32;
        acc = (0..n2).find_map(|k| connected_sum(&acc, p, a, (c / 7 + k) % n2 + 1))?;
    }
    Some(acc)
}
