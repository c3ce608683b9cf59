//! Rectangular plaquette layouts.
//!
//! An `m x n` layout has vertices `v_{i,j}` on a grid and one four-vertex
//! edge per unit square. A graph compiles onto such a layout exactly when
//! its restriction to cycle edges is the complete bipartite graph `K_{m,n}`,
//! which can be decided with a spanning forest and a two-colouring.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::compile::{compile_with_enumeration, CompiledHypergraph};
use crate::error::{Error, Result};
use crate::gf2::{EdgeIndex, EdgeVector, Gf2Basis, SpanningForest};
use crate::hypergraph::{Edge, Graph, Hypergraph, VertexId};

/// Inputs with more edges than this are refused by [`rect_compile`].
pub const MAX_RECT_EDGES: usize = 1 << 22;

/// Grid enumeration of a rectangular layout: `grid[i][j]` is `v_{i+1,j+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RectLayout {
    pub m: usize,
    pub n: usize,
    pub grid: Vec<Vec<VertexId>>,
}

impl RectLayout {
    /// Plaquettes `e_{i,j}` in row-major order, each listed
    /// `v_{i,j}, v_{i,j+1}, v_{i+1,j+1}, v_{i+1,j}`.
    pub fn plaquettes(&self) -> Vec<[VertexId; 4]> {
        let g = &self.grid;
        let mut out = Vec::with_capacity((self.m - 1) * (self.n - 1));
        for i in 0..self.m - 1 {
            for j in 0..self.n - 1 {
                out.push([g[i][j], g[i][j + 1], g[i + 1][j + 1], g[i + 1][j]]);
            }
        }
        out
    }

    pub fn to_hypergraph(&self) -> Hypergraph {
        let edges = self
            .plaquettes()
            .into_iter()
            .map(|p| Edge::new(p).expect("grid vertices are distinct"));
        Hypergraph::from_edges(edges).expect("valid layout")
    }

    /// The `m x n` layout on vertices `1..=mn`, numbered row by row.
    pub fn standard(m: usize, n: usize) -> RectLayout {
        assert!(m >= 2 && n >= 2, "a layout needs at least 2 x 2 vertices");
        let grid = (0..m)
            .map(|i| (0..n).map(|j| (i * n + j + 1) as VertexId).collect())
            .collect();
        RectLayout { m, n, grid }
    }

    fn transposed(&self) -> RectLayout {
        let grid = (0..self.n)
            .map(|j| (0..self.m).map(|i| self.grid[i][j]).collect())
            .collect();
        RectLayout {
            m: self.n,
            n: self.m,
            grid,
        }
    }
}

/// Recovers the grid structure of `h` if it is a rectangular layout, with
/// `m <= n`.
pub fn is_rect_layout(h: &Hypergraph) -> Option<RectLayout> {
    let plaq: Vec<&Edge> = h.edges().iter().collect();
    if plaq.is_empty() || plaq.iter().any(|e| e.len() != 4) {
        return None;
    }
    if h.covered_vertices().len() != h.num_vertices() {
        return None;
    }
    let count = plaq.len();
    if count == 1 {
        let v = plaq[0].vertices();
        return Some(RectLayout {
            m: 2,
            n: 2,
            grid: vec![vec![v[0], v[1]], vec![v[3], v[2]]],
        });
    }

    // Plaquettes sharing a side (two vertices) are grid neighbours.
    let mut by_vertex: HashMap<VertexId, Vec<usize>> = HashMap::new();
    for (k, e) in plaq.iter().enumerate() {
        for &v in e.vertices() {
            by_vertex.entry(v).or_default().push(k);
        }
    }
    let mut side: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); count];
    let mut shared: HashMap<(usize, usize), usize> = HashMap::new();
    for list in by_vertex.values() {
        if list.len() > 4 {
            return None;
        }
        for (x, &a) in list.iter().enumerate() {
            for &b in &list[x + 1..] {
                *shared.entry((a.min(b), a.max(b))).or_default() += 1;
            }
        }
    }
    for (&(a, b), &c) in &shared {
        if c == 2 {
            side[a].insert(b);
            side[b].insert(a);
        }
    }
    let min_deg = side.iter().map(BTreeSet::len).min()?;
    if min_deg == 0 {
        return None;
    }
    let corner_a = (0..count).find(|&k| side[k].len() == min_deg)?;
    let da = bfs(&side, corner_a)?;
    let corner_b = (0..count)
        .filter(|&k| k != corner_a && side[k].len() == min_deg)
        .min_by_key(|&k| da[k])?;
    let q = da[corner_b] + 1;
    if count % q != 0 {
        return None;
    }
    let p = count / q;
    let db = bfs(&side, corner_b)?;

    // Plaquette coordinates from the two corner distances.
    let mut at: Vec<Vec<Option<usize>>> = vec![vec![None; q]; p];
    let mut coord = vec![(0usize, 0usize); count];
    for k in 0..count {
        let (s, d) = (da[k] + db[k], da[k] + q - 1);
        if s < q - 1 || (s - (q - 1)) % 2 != 0 || d < db[k] {
            return None;
        }
        let i = (s - (q - 1)) / 2;
        let j = (d - db[k]) / 2;
        if i >= p || j >= q || at[i][j].is_some() {
            return None;
        }
        at[i][j] = Some(k);
        coord[k] = (i, j);
    }

    // Each vertex sits at a corner common to all its plaquettes.
    let mut candidates: BTreeMap<VertexId, BTreeSet<(usize, usize)>> = BTreeMap::new();
    for (&v, list) in &by_vertex {
        let mut set: Option<BTreeSet<(usize, usize)>> = None;
        for &k in list {
            let (i, j) = coord[k];
            let corners = BTreeSet::from([(i, j), (i, j + 1), (i + 1, j), (i + 1, j + 1)]);
            set = Some(match set {
                None => corners,
                Some(s) => s.intersection(&corners).copied().collect(),
            });
        }
        candidates.insert(v, set.unwrap_or_default());
    }
    let mut grid = vec![vec![None; q + 1]; p + 1];
    let mut pending: BTreeSet<VertexId> = candidates.keys().copied().collect();
    while !pending.is_empty() {
        let free = |v: &VertexId, grid: &Vec<Vec<Option<VertexId>>>| -> Vec<(usize, usize)> {
            candidates[v]
                .iter()
                .copied()
                .filter(|&(i, j)| grid[i][j].is_none())
                .collect()
        };
        // Most constrained first; remaining ties are grid symmetries.
        let v = *pending.iter().min_by_key(|v| free(v, &grid).len())?;
        let (i, j) = *free(&v, &grid).first()?;
        grid[i][j] = Some(v);
        pending.remove(&v);
    }
    let grid: Vec<Vec<VertexId>> = grid
        .into_iter()
        .map(|row| row.into_iter().collect::<Option<Vec<_>>>())
        .collect::<Option<Vec<_>>>()?;
    let layout = RectLayout {
        m: p + 1,
        n: q + 1,
        grid,
    };
    if layout.to_hypergraph() != *h {
        return None;
    }
    Some(if layout.m > layout.n {
        layout.transposed()
    } else {
        layout
    })
}

fn bfs(adj: &[BTreeSet<usize>], start: usize) -> Option<Vec<usize>> {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[start] = 0;
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist.iter().all(|&d| d != usize::MAX).then_some(dist)
}

/// `g` restricted to the edges lying on at least one cycle.
pub fn cycle_edge_restriction(g: &Graph) -> Graph {
    restriction_counted(g, &mut 0)
}

fn restriction_counted(g: &Graph, ops: &mut u64) -> Graph {
    let index = EdgeIndex::of(g);
    let forest = SpanningForest::build(g, &index, ops);
    let mut keep = vec![false; index.len()];
    for &j in &forest.non_tree {
        for e in forest.fundamental_cycle(&index, j, ops) {
            keep[e] = true;
        }
    }
    let edges = (0..index.len()).filter(|&j| keep[j]).map(|j| index.edge(j));
    g.restrict(edges).expect("edges come from g")
}

/// The two sides of `g` if it is a complete bipartite graph: smaller side
/// first, ties broken by the smallest vertex id.
pub fn is_complete_bipartite(g: &Graph) -> Option<(Vec<VertexId>, Vec<VertexId>)> {
    bipartite_counted(g, &mut 0)
}

fn bipartite_counted(g: &Graph, ops: &mut u64) -> Option<(Vec<VertexId>, Vec<VertexId>)> {
    if g.num_edges() == 0 {
        return None;
    }
    let adj = g.adjacency();
    let mut colour: HashMap<VertexId, bool> = HashMap::with_capacity(adj.len());
    let start = *adj.keys().next()?;
    colour.insert(start, false);
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        let cu = colour[&u];
        for &w in &adj[&u] {
            *ops += 1;
            match colour.get(&w) {
                Some(&cw) if cw == cu => return None,
                Some(_) => {}
                None => {
                    colour.insert(w, !cu);
                    queue.push_back(w);
                }
            }
        }
    }
    // Unreached vertices mean a second component or an isolated vertex.
    if colour.len() != adj.len() {
        return None;
    }
    let mut a: Vec<VertexId> = Vec::new();
    let mut b: Vec<VertexId> = Vec::new();
    for (&v, &c) in &colour {
        *ops += 1;
        if c {
            b.push(v);
        } else {
            a.push(v);
        }
    }
    a.sort_unstable();
    b.sort_unstable();
    for v in &a {
        *ops += 1;
        if adj[v].len() != b.len() {
            return None;
        }
    }
    for v in &b {
        *ops += 1;
        if adj[v].len() != a.len() {
            return None;
        }
    }
    if (b.len(), b[0]) < (a.len(), a[0]) {
        std::mem::swap(&mut a, &mut b);
    }
    Some((a, b))
}

/// Output of [`rect_compile`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RectCompilation {
    /// Grid over compiled vertex ids.
    pub layout: RectLayout,
    /// Rows `A` (size `m`) and columns `B` (size `n`).
    pub partitions: (Vec<VertexId>, Vec<VertexId>),
    /// Plaquette cycles `C_1..C_{(m-1)(n-1)}` in row-major order.
    pub basis: Gf2Basis,
    pub compiled: CompiledHypergraph,
}

/// JSON form of a [`RectCompilation`]: the grid holds source edges and
/// `plaquettes[k]` lists the compiled vertices of `C_{k+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RectCompilationJson {
    pub m: usize,
    pub n: usize,
    pub grid: Vec<Vec<Edge>>,
    pub plaquettes: Vec<Vec<VertexId>>,
}

impl RectCompilation {
    /// Source edge `{i_a, j_b}` at each grid position.
    pub fn edge_grid(&self) -> Vec<Vec<Edge>> {
        self.layout
            .grid
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&v| self.compiled.source_edge(v).expect("grid vertex").clone())
                    .collect()
            })
            .collect()
    }

    pub fn to_json(&self) -> RectCompilationJson {
        RectCompilationJson {
            m: self.layout.m,
            n: self.layout.n,
            grid: self.edge_grid(),
            plaquettes: self
                .layout
                .plaquettes()
                .iter()
                .map(|p| {
                    let mut v = p.to_vec();
                    v.sort_unstable();
                    v
                })
                .collect(),
        }
    }
}

impl Serialize for RectCompilation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

/// Compiles `g` onto an `m x n` rectangular layout (`m <= n`) when its
/// cycle-edge restriction is `K_{m,n}`; `None` otherwise.
pub fn rect_compile(g: &Graph) -> Result<Option<RectCompilation>> {
    rect_compile_with_stats(g).map(|(r, _)| r)
}

/// [`rect_compile`] plus a count of elementary steps (adjacency scans, tree
/// climbs, colour checks, basis entries) for complexity measurements.
pub fn rect_compile_with_stats(g: &Graph) -> Result<(Option<RectCompilation>, u64)> {
    if g.num_edges() > MAX_RECT_EDGES {
        return Err(Error::too_large("edge count", g.num_edges(), MAX_RECT_EDGES));
    }
    let mut ops = 0u64;
    let restricted = restriction_counted(g, &mut ops);
    let Some((a, b)) = bipartite_counted(&restricted, &mut ops) else {
        return Ok((None, ops));
    };
    let (m, n) = (a.len(), b.len());
    if m < 2 {
        return Ok((None, ops));
    }

    let index = EdgeIndex::of(g);
    let pair = |x: VertexId, y: VertexId| Edge::pair(x, y).expect("bipartite sides are disjoint");
    // Row a of the grid runs over A, column b over B.
    let mut vectors = Vec::with_capacity((m - 1) * (n - 1));
    for k in 0..(m - 1) * (n - 1) {
        let (ra, cb) = (k / (n - 1), k % (n - 1));
        let cycle = [
            pair(a[ra], b[cb]),
            pair(a[ra], b[cb + 1]),
            pair(a[ra + 1], b[cb + 1]),
            pair(a[ra + 1], b[cb]),
        ];
        ops += 4;
        vectors.push(EdgeVector::from_edges(&index, &cycle)?);
    }
    let enumeration: Vec<Edge> = (0..m * n)
        .map(|k| {
            ops += 1;
            pair(a[k / n], b[k % n])
        })
        .collect();
    let basis = Gf2Basis::new(&index, vectors)?;
    let compiled = compile_with_enumeration(g, &basis, &enumeration)?;
    let layout = RectLayout::standard(m, n);
    Ok((
        Some(RectCompilation {
            layout,
            partitions: (a, b),
            basis,
            compiled,
        }),
        ops,
    ))
}
