#![allow(dead_code)]

use parity_core::{Edge, EdgeIndex, EdgeVector, Gf2Basis, Graph, Hypergraph, LoopLabeling};

pub fn graph(pairs: &[(u32, u32)]) -> Graph {
    Graph::from_pairs(pairs.iter().copied()).unwrap()
}

pub fn hyper(lists: &[&[u32]]) -> Hypergraph {
    Hypergraph::from_lists(lists.iter().map(|l| l.to_vec())).unwrap()
}

pub fn edges(pairs: &[(u32, u32)]) -> Vec<Edge> {
    pairs.iter().map(|&(a, b)| Edge::pair(a, b).unwrap()).collect()
}

pub fn basis(g: &Graph, cycles: &[&[(u32, u32)]]) -> Gf2Basis {
    let index = EdgeIndex::of(g);
    let vectors = cycles
        .iter()
        .map(|c| EdgeVector::from_pairs(&index, c.iter().copied()).unwrap())
        .collect();
    Gf2Basis::new(&index, vectors).unwrap()
}

pub fn labeling(pairs: &[(u32, (u32, u32))]) -> LoopLabeling {
    LoopLabeling::from_pairs(pairs.iter().copied()).unwrap()
}

pub fn max_degree(h: &Hypergraph) -> usize {
    h.vertices().iter().map(|&v| h.degree(v)).max().unwrap_or(0)
}

/// Five vertices, two 4-cycles sharing the edge {3,4}.
pub fn two_squares() -> Graph {
    graph(&[(1, 2), (1, 4), (1, 5), (2, 3), (3, 4), (3, 5)])
}

/// Hypergraph with the even subset {25,13,124,345}.
pub fn mixed_hypergraph() -> Hypergraph {
    hyper(&[&[1, 2], &[2, 5], &[1, 3], &[1, 2, 4], &[3, 4, 5]])
}

/// A 4-cycle with the chord {2,4}.
pub fn square_with_chord() -> Graph {
    graph(&[(1, 2), (2, 3), (3, 4), (1, 4), (2, 4)])
}

/// The chorded square plus a pendant edge {4,5}.
pub fn square_with_chord_and_pendant() -> Graph {
    graph(&[(1, 2), (2, 3), (3, 4), (1, 4), (2, 4), (4, 5)])
}

/// Chorded square with a triangle hung on vertex 3.
pub fn kite_left() -> Graph {
    graph(&[(1, 2), (2, 3), (3, 4), (1, 4), (2, 4), (3, 5), (5, 6), (3, 6)])
}

/// Chorded square with a triangle hung on vertex 4.
pub fn kite_right() -> Graph {
    graph(&[(1, 2), (2, 3), (3, 4), (1, 4), (2, 4), (4, 5), (5, 6), (4, 6)])
}

/// Two hyperedges of sizes 4 and 5 sharing two vertices.
pub fn two_edge_layout() -> Hypergraph {
    hyper(&[&[1, 2, 3, 4], &[3, 4, 5, 6, 7]])
}

/// A valid labeling of [`two_edge_layout`] on six graph vertices.
pub fn two_edge_labeling() -> LoopLabeling {
    labeling(&[
        (1, (1, 2)),
        (2, (1, 4)),
        (3, (2, 3)),
        (4, (3, 4)),
        (5, (2, 6)),
        (6, (4, 5)),
        (7, (5, 6)),
    ])
}

/// A map on the same layout whose edge {3,4,5,6,7} gets the labels
/// {2,3},{3,4},{1,5},{3,5},{2,4}: vertices 1 and 3 have odd degree there.
pub fn two_edge_non_labeling() -> LoopLabeling {
    labeling(&[
        (1, (1, 2)),
        (2, (1, 4)),
        (3, (2, 3)),
        (4, (3, 4)),
        (5, (1, 5)),
        (6, (3, 5)),
        (7, (2, 4)),
    ])
}

/// Three four-vertex plaquettes in a chain, consecutive ones meeting in a
/// single vertex.
pub fn plaquette_chain() -> Hypergraph {
    hyper(&[&[1, 2, 3, 4], &[2, 5, 6, 7], &[6, 8, 9, 10]])
}

/// Seven plaquettes of a bent strip (a 2x2-free heptomino) on 16 vertices;
/// neighbouring plaquettes share two vertices.
pub fn bent_strip() -> Hypergraph {
    hyper(&[
        &[1, 2, 3, 4],
        &[3, 4, 5, 6],
        &[4, 6, 7, 8],
        &[6, 8, 9, 10],
        &[9, 10, 11, 12],
        &[9, 11, 13, 14],
        &[11, 14, 15, 16],
    ])
}

/// Labeling of [`bent_strip`] whose induced graph has maximum degree 5.
pub fn bent_strip_low() -> LoopLabeling {
    labeling(&[
        (1, (9, 10)),
        (2, (6, 10)),
        (3, (8, 9)),
        (4, (6, 8)),
        (5, (7, 9)),
        (6, (6, 7)),
        (7, (1, 8)),
        (8, (1, 7)),
        (9, (1, 5)),
        (10, (5, 6)),
        (11, (1, 2)),
        (12, (2, 6)),
        (13, (3, 5)),
        (14, (2, 3)),
        (15, (3, 4)),
        (16, (1, 4)),
    ])
}

/// Labeling of [`bent_strip`] whose induced graph has a degree-6 vertex.
pub fn bent_strip_high() -> LoopLabeling {
    labeling(&[
        (1, (9, 10)),
        (2, (1, 10)),
        (3, (8, 9)),
        (4, (1, 8)),
        (5, (7, 9)),
        (6, (1, 7)),
        (7, (6, 8)),
        (8, (6, 7)),
        (9, (1, 5)),
        (10, (5, 6)),
        (11, (1, 2)),
        (12, (2, 6)),
        (13, (3, 5)),
        (14, (2, 3)),
        (15, (3, 4)),
        (16, (1, 4)),
    ])
}

/// `K_{m,n}` with `A = 1..=m`, `B = m+1..=m+n`.
pub fn kmn(m: u32, n: u32) -> Graph {
    Graph::complete_bipartite(m, n)
}

/// Labeling of the standard `m x n` layout sending `v_{a,b}` to
/// `{a, m + b}`; it induces `K_{m,n}`.
pub fn grid_labeling(m: usize, n: usize) -> LoopLabeling {
    let mut pairs = Vec::new();
    for a in 0..m {
        for b in 0..n {
            let v = (a * n + b + 1) as u32;
            pairs.push((v, (a as u32 + 1, (m + b) as u32 + 1)));
        }
    }
    labeling(&pairs)
}

/// The labeling built plaquette by plaquette from the top-left corner of an
/// `m x n` layout (`m, n >= 3`), with labels `1..=m+n`: the first square
/// gets `{1,2},{2,3},{3,4},{1,4}`, columns `j >= 3` of the first two rows
/// add label `j + 2`, and rows `i >= 3` add label `n + i`.
pub fn corner_pattern(m: usize, n: usize) -> LoopLabeling {
    let v = |a: usize, b: usize| ((a - 1) * n + b) as u32;
    let col = |j: usize| (j + 2) as u32;
    let row = |i: usize| (n + i) as u32;
    let mut pairs = vec![
        (v(1, 1), (1, 2)),
        (v(1, 2), (2, 3)),
        (v(2, 2), (3, 4)),
        (v(2, 1), (1, 4)),
    ];
    for j in 3..=n {
        pairs.push((v(1, j), (2, col(j))));
        pairs.push((v(2, j), (col(j), 4)));
    }
    for i in 3..=m {
        pairs.push((v(i, 1), (1, row(i))));
        pairs.push((v(i, 2), (3, row(i))));
        for j in 3..=n {
            pairs.push((v(i, j), (row(i), col(j))));
        }
    }
    labeling(&pairs)
}
