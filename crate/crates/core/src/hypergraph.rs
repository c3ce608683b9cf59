//! Hypergraph and graph value types.
//!
//! A [`Hypergraph`] is a finite vertex set together with a set of nonempty
//! vertex subsets (the edges). A [`Graph`] is a hypergraph whose edges all
//! have exactly two vertices. Both are immutable values with a canonical
//! in-memory order: vertices ascending, edges ascending by their sorted
//! vertex lists. The JSON form mirrors that order exactly.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertex identifier. Ids are arbitrary and need not be contiguous.
pub type VertexId = u32;

/// A nonempty set of vertices, stored sorted and deduplicated.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<VertexId>", into = "Vec<VertexId>")]
pub struct Edge(Vec<VertexId>);

impl Edge {
    pub fn new(vertices: impl IntoIterator<Item = VertexId>) -> Result<Self> {
        let mut v: Vec<VertexId> = vertices.into_iter().collect();
        v.sort_unstable();
        let before = v.len();
        v.dedup();
        if v.is_empty() {
            return Err(Error::invalid("empty edge"));
        }
        if v.len() != before {
            return Err(Error::invalid(format!("edge {v:?} repeats a vertex")));
        }
        Ok(Edge(v))
    }

    /// Two-vertex edge. Fails on a loop `{a, a}`.
    pub fn pair(a: VertexId, b: VertexId) -> Result<Self> {
        if a == b {
            return Err(Error::invalid(format!("self-loop on vertex {a}")));
        }
        Ok(Edge(if a < b { vec![a, b] } else { vec![b, a] }))
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Endpoints of a two-vertex edge.
    pub fn endpoints(&self) -> Option<(VertexId, VertexId)> {
        match self.0.as_slice() {
            &[a, b] => Some((a, b)),
            _ => None,
        }
    }
}

impl TryFrom<Vec<VertexId>> for Edge {
    type Error = Error;

    fn try_from(v: Vec<VertexId>) -> Result<Self> {
        Edge::new(v)
    }
}

impl From<Edge> for Vec<VertexId> {
    fn from(e: Edge) -> Self {
        e.0
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

#[derive(Serialize, Deserialize)]
struct HypergraphRepr {
    vertices: Vec<VertexId>,
    edges: Vec<Vec<VertexId>>,
}

/// A finite hypergraph `(V, E)` with `E` a set of nonempty subsets of `V`.
///
/// Isolated vertices are allowed; parallel edges are not (edges form a set).
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "HypergraphRepr", into = "HypergraphRepr")]
pub struct Hypergraph {
    vertices: BTreeSet<VertexId>,
    edges: BTreeSet<Edge>,
}

impl Hypergraph {
    /// Builds a hypergraph, checking that every edge vertex is declared and
    /// that no edge is listed twice.
    pub fn new(
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = Edge>,
    ) -> Result<Self> {
        let vertices: BTreeSet<VertexId> = vertices.into_iter().collect();
        let mut set = BTreeSet::new();
        for e in edges {
            if let Some(v) = e.vertices().iter().find(|v| !vertices.contains(v)) {
                return Err(Error::invalid(format!(
                    "edge {e:?} uses vertex {v} which is not in the vertex set"
                )));
            }
            if !set.insert(e.clone()) {
                return Err(Error::invalid(format!("duplicate edge {e:?}")));
            }
        }
        Ok(Hypergraph {
            vertices,
            edges: set,
        })
    }

    /// Hypergraph whose vertex set is exactly the union of the edges.
    pub fn from_edges(edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let edges: Vec<Edge> = edges.into_iter().collect();
        let vertices: BTreeSet<VertexId> = edges
            .iter()
            .flat_map(|e| e.vertices().iter().copied())
            .collect();
        Hypergraph::new(vertices, edges)
    }

    /// Convenience constructor from vertex lists, mostly for tests.
    pub fn from_lists<I, E>(edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: IntoIterator<Item = VertexId>,
    {
        let edges = edges.into_iter().map(Edge::new).collect::<Result<Vec<_>>>()?;
        Hypergraph::from_edges(edges)
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn is_graph(&self) -> bool {
        self.edges.iter().all(|e| e.len() == 2)
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        self.edges.contains(e)
    }

    /// Number of edges containing `v`.
    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    /// Vertices that lie in at least one edge.
    pub fn covered_vertices(&self) -> BTreeSet<VertexId> {
        self.edges
            .iter()
            .flat_map(|e| e.vertices().iter().copied())
            .collect()
    }

    /// The same hypergraph with isolated vertices dropped.
    pub fn without_isolated(&self) -> Hypergraph {
        Hypergraph {
            vertices: self.covered_vertices(),
            edges: self.edges.clone(),
        }
    }

    /// `H|_{E'}`: keeps the given edges and exactly their vertices.
    pub fn restrict<'a>(&self, edges: impl IntoIterator<Item = &'a Edge>) -> Result<Hypergraph> {
        let mut kept = BTreeSet::new();
        for e in edges {
            if !self.edges.contains(e) {
                return Err(Error::invalid(format!("edge {e:?} is not in the hypergraph")));
            }
            kept.insert(e.clone());
        }
        let vertices = kept
            .iter()
            .flat_map(|e| e.vertices().iter().copied())
            .collect();
        Ok(Hypergraph {
            vertices,
            edges: kept,
        })
    }

    /// Applies a vertex renaming. The map must be injective on `V`; vertices
    /// missing from the map keep their id.
    pub fn relabel(&self, map: &BTreeMap<VertexId, VertexId>) -> Result<Hypergraph> {
        let f = |v: VertexId| map.get(&v).copied().unwrap_or(v);
        let vertices: BTreeSet<VertexId> = self.vertices.iter().map(|&v| f(v)).collect();
        if vertices.len() != self.vertices.len() {
            return Err(Error::invalid("relabeling is not injective"));
        }
        let edges = self
            .edges
            .iter()
            .map(|e| Edge::new(e.vertices().iter().map(|&v| f(v))))
            .collect::<Result<BTreeSet<_>>>()?;
        Ok(Hypergraph { vertices, edges })
    }

    /// Position of each vertex in ascending id order.
    pub(crate) fn dense_index(&self) -> BTreeMap<VertexId, usize> {
        self.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect()
    }

    /// Connected components as sets of vertices, ordered by smallest member.
    pub fn components(&self) -> Vec<BTreeSet<VertexId>> {
        let index = self.dense_index();
        let verts: Vec<VertexId> = self.vertices.iter().copied().collect();
        let mut dsu = Dsu::new(verts.len());
        for e in &self.edges {
            let first = index[&e.vertices()[0]];
            for v in &e.vertices()[1..] {
                dsu.union(first, index[v]);
            }
        }
        let mut groups: BTreeMap<usize, BTreeSet<VertexId>> = BTreeMap::new();
        for (i, &v) in verts.iter().enumerate() {
            groups.entry(dsu.find(i)).or_default().insert(v);
        }
        let mut out: Vec<_> = groups.into_values().collect();
        out.sort_by_key(|c| *c.iter().next().unwrap());
        out
    }

    pub fn num_components(&self) -> usize {
        self.components().len()
    }
}

impl TryFrom<HypergraphRepr> for Hypergraph {
    type Error = Error;

    fn try_from(r: HypergraphRepr) -> Result<Self> {
        let edges = r.edges.into_iter().map(Edge::new).collect::<Result<Vec<_>>>()?;
        Hypergraph::new(r.vertices, edges)
    }
}

impl From<Hypergraph> for HypergraphRepr {
    fn from(h: Hypergraph) -> Self {
        HypergraphRepr {
            vertices: h.vertices.into_iter().collect(),
            edges: h.edges.into_iter().map(Vec::from).collect(),
        }
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Hypergraph")
            .field("vertices", &self.vertices)
            .field("edges", &self.edges)
            .finish()
    }
}

/// A hypergraph in which every edge has exactly two vertices.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Hypergraph", into = "Hypergraph")]
pub struct Graph(Hypergraph);

impl Graph {
    pub fn new(
        vertices: impl IntoIterator<Item = VertexId>,
        pairs: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self> {
        let edges = pairs
            .into_iter()
            .map(|(a, b)| Edge::pair(a, b))
            .collect::<Result<Vec<_>>>()?;
        Graph::try_from(Hypergraph::new(vertices, edges)?)
    }

    /// Graph on exactly the endpoints of `pairs`.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Self> {
        let edges = pairs
            .into_iter()
            .map(|(a, b)| Edge::pair(a, b))
            .collect::<Result<Vec<_>>>()?;
        Graph::try_from(Hypergraph::from_edges(edges)?)
    }

    /// `K_{m,n}` with parts `1..=m` and `m+1..=m+n`.
    pub fn complete_bipartite(m: u32, n: u32) -> Graph {
        let pairs = (1..=m).flat_map(|a| (m + 1..=m + n).map(move |b| (a, b)));
        Graph::new(1..=m + n, pairs).expect("complete bipartite graph is well formed")
    }

    /// Cycle `1-2-...-k-1`.
    pub fn cycle(k: u32) -> Graph {
        assert!(k >= 3, "a cycle needs at least three vertices");
        Graph::from_pairs((1..=k).map(|i| (i, i % k + 1))).expect("cycle is well formed")
    }

    /// Complete graph on `1..=k`.
    pub fn complete(k: u32) -> Graph {
        let pairs = (1..=k).flat_map(|a| (a + 1..=k).map(move |b| (a, b)));
        Graph::new(1..=k, pairs).expect("complete graph is well formed")
    }

    pub fn as_hypergraph(&self) -> &Hypergraph {
        &self.0
    }

    pub fn into_hypergraph(self) -> Hypergraph {
        self.0
    }

    /// Endpoint pairs in edge order.
    pub fn pairs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.0.edges().iter().map(|e| e.endpoints().expect("graph edge"))
    }

    /// Adjacency lists over all vertices (isolated ones get an empty list).
    pub fn adjacency(&self) -> BTreeMap<VertexId, Vec<VertexId>> {
        let mut adj: BTreeMap<VertexId, Vec<VertexId>> =
            self.0.vertices().iter().map(|&v| (v, Vec::new())).collect();
        for (a, b) in self.pairs() {
            adj.get_mut(&a).unwrap().push(b);
            adj.get_mut(&b).unwrap().push(a);
        }
        adj
    }

    /// `g|_{E'}`.
    pub fn restrict<'a>(&self, edges: impl IntoIterator<Item = &'a Edge>) -> Result<Graph> {
        Ok(Graph(self.0.restrict(edges)?))
    }

    pub fn relabel(&self, map: &BTreeMap<VertexId, VertexId>) -> Result<Graph> {
        Ok(Graph(self.0.relabel(map)?))
    }

    pub fn without_isolated(&self) -> Graph {
        Graph(self.0.without_isolated())
    }
}

impl Deref for Graph {
    type Target = Hypergraph;

    fn deref(&self) -> &Hypergraph {
        &self.0
    }
}

impl AsRef<Hypergraph> for Graph {
    fn as_ref(&self) -> &Hypergraph {
        &self.0
    }
}

impl AsRef<Hypergraph> for Hypergraph {
    fn as_ref(&self) -> &Hypergraph {
        self
    }
}

impl TryFrom<Hypergraph> for Graph {
    type Error = Error;

    fn try_from(h: Hypergraph) -> Result<Self> {
        if let Some(e) = h.edges().iter().find(|e| e.len() != 2) {
            return Err(Error::invalid(format!(
                "edge {e:?} has {} vertices, a graph needs exactly 2",
                e.len()
            )));
        }
        Ok(Graph(h))
    }
}

impl From<Graph> for Hypergraph {
    fn from(g: Graph) -> Self {
        g.0
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", self.0.vertices())
            .field("edges", self.0.edges())
            .finish()
    }
}

/// Union-find over `0..n` with path halving.
#[derive(Clone, Debug)]
pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
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
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}
