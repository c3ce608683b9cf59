//! The edge space of a hypergraph as a GF(2) vector space.
//!
//! Edge subsets are bit vectors over a fixed [`EdgeIndex`]; addition is XOR.
//! This module computes constraint space bases (kernel of the incidence
//! matrix), fundamental cycle bases of graphs, span membership, and the
//! fundamental / weakly fundamental classification of bases.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Dsu, Edge, Graph, Hypergraph, VertexId};

/// Default bound on the number of vectors [`enumerate_space`] produces.
pub const DEFAULT_SPACE_CAP: usize = 1 << 20;

/// Ordered list of edges fixing the coordinates of edge vectors.
#[derive(Clone, PartialEq, Eq)]
pub struct EdgeIndex {
    edges: Vec<Edge>,
    pos: HashMap<Edge, usize>,
}

impl EdgeIndex {
    pub fn new(edges: impl IntoIterator<Item = Edge>) -> Result<Arc<Self>> {
        let edges: Vec<Edge> = edges.into_iter().collect();
        let mut pos = HashMap::with_capacity(edges.len());
        for (i, e) in edges.iter().enumerate() {
            if pos.insert(e.clone(), i).is_some() {
                return Err(Error::invalid(format!("edge {e:?} indexed twice")));
            }
        }
        Ok(Arc::new(EdgeIndex { edges, pos }))
    }

    /// Index over the edges of `h` in ascending order.
    pub fn of(h: &Hypergraph) -> Arc<Self> {
        EdgeIndex::new(h.edges().iter().cloned()).expect("hypergraph edges are distinct")
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edge(&self, i: usize) -> &Edge {
        &self.edges[i]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn position(&self, e: &Edge) -> Option<usize> {
        self.pos.get(e).copied()
    }

    /// Whether this index lists exactly the edges of `h` in ascending order.
    pub fn matches(&self, h: &Hypergraph) -> bool {
        self.edges.len() == h.num_edges() && self.edges.iter().eq(h.edges().iter())
    }
}

impl fmt::Debug for EdgeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.edges).finish()
    }
}

fn same_index(a: &Arc<EdgeIndex>, b: &Arc<EdgeIndex>) -> bool {
    Arc::ptr_eq(a, b) || a.edges == b.edges
}

fn words_for(len: usize) -> usize {
    len.div_ceil(64)
}

/// Characteristic vector of an edge subset.
#[derive(Clone)]
pub struct EdgeVector {
    index: Arc<EdgeIndex>,
    words: Vec<u64>,
}

impl EdgeVector {
    pub fn zero(index: &Arc<EdgeIndex>) -> Self {
        EdgeVector {
            index: Arc::clone(index),
            words: vec![0; words_for(index.len())],
        }
    }

    pub fn from_edges<'a>(
        index: &Arc<EdgeIndex>,
        edges: impl IntoIterator<Item = &'a Edge>,
    ) -> Result<Self> {
        let mut v = EdgeVector::zero(index);
        for e in edges {
            let i = index
                .position(e)
                .ok_or_else(|| Error::invalid(format!("edge {e:?} is not in the edge index")))?;
            v.set(i, true);
        }
        Ok(v)
    }

    pub fn from_positions(index: &Arc<EdgeIndex>, positions: impl IntoIterator<Item = usize>) -> Self {
        let mut v = EdgeVector::zero(index);
        for i in positions {
            v.set(i, true);
        }
        v
    }

    /// Shorthand for graph edge vectors given as endpoint pairs.
    pub fn from_pairs(
        index: &Arc<EdgeIndex>,
        pairs: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self> {
        let edges = pairs
            .into_iter()
            .map(|(a, b)| Edge::pair(a, b))
            .collect::<Result<Vec<_>>>()?;
        EdgeVector::from_edges(index, &edges)
    }

    pub fn index(&self) -> &Arc<EdgeIndex> {
        &self.index
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, bit: bool) {
        assert!(i < self.index.len(), "edge position {i} out of range");
        if bit {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Positions of the set bits, ascending.
    pub fn positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> + '_ {
        self.positions().map(|i| self.index.edge(i))
    }

    pub fn to_edge_set(&self) -> BTreeSet<Edge> {
        self.edges().cloned().collect()
    }

    fn lowest_bit(&self) -> Option<usize> {
        self.words
            .iter()
            .position(|&w| w != 0)
            .map(|wi| wi * 64 + self.words[wi].trailing_zeros() as usize)
    }

    /// In-place XOR; both vectors must share an index.
    pub(crate) fn xor_assign(&mut self, other: &EdgeVector) {
        debug_assert!(same_index(&self.index, &other.index));
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub(crate) fn or_assign(&mut self, other: &EdgeVector) {
        debug_assert!(same_index(&self.index, &other.index));
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn sym_diff(&self, other: &EdgeVector) -> Result<EdgeVector> {
        sym_diff(self, other)
    }
}

/// Symmetric difference of two edge subsets.
pub fn sym_diff(a: &EdgeVector, b: &EdgeVector) -> Result<EdgeVector> {
    if !same_index(&a.index, &b.index) {
        return Err(Error::invalid("edge vectors use different edge indices"));
    }
    let mut out = a.clone();
    out.xor_assign(b);
    Ok(out)
}

impl PartialEq for EdgeVector {
    fn eq(&self, other: &Self) -> bool {
        self.words == other.words && same_index(&self.index, &other.index)
    }
}

impl Eq for EdgeVector {}

impl Hash for EdgeVector {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.index.len().hash(state);
        self.words.hash(state);
    }
}

impl fmt::Debug for EdgeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.edges()).finish()
    }
}

impl Serialize for EdgeVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.edges())
    }
}

/// Order in which a basis satisfies the private-edge prefix condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisClass {
    /// Every element has an edge that no other element contains.
    Fundamental,
    /// Each element in this order has an edge absent from all earlier ones.
    WeaklyFundamental(Vec<usize>),
    Other,
}

/// An ordered, linearly independent list of nonzero edge vectors.
#[derive(Clone, PartialEq, Eq)]
pub struct Gf2Basis {
    index: Arc<EdgeIndex>,
    vectors: Vec<EdgeVector>,
    fundamental: bool,
    weak_order: Option<Vec<usize>>,
}

impl Gf2Basis {
    /// Validates independence and computes the classification flags.
    pub fn new(index: &Arc<EdgeIndex>, vectors: Vec<EdgeVector>) -> Result<Self> {
        for (k, v) in vectors.iter().enumerate() {
            if !same_index(index, &v.index) {
                return Err(Error::invalid(format!("basis vector {k} uses a different edge index")));
            }
            if v.is_zero() {
                return Err(Error::invalid(format!("basis vector {k} is zero")));
            }
        }
        let weak_order = peel_order(index.len(), &vectors);
        // A private-edge order is triangular, hence independent.
        if weak_order.is_none() && rank_of(&vectors) < vectors.len() {
            return Err(Error::invalid("basis vectors are linearly dependent"));
        }
        let fundamental = has_all_private_edges(index.len(), &vectors);
        Ok(Gf2Basis {
            index: Arc::clone(index),
            vectors,
            fundamental,
            weak_order,
        })
    }

    pub fn empty(index: &Arc<EdgeIndex>) -> Self {
        Gf2Basis {
            index: Arc::clone(index),
            vectors: Vec::new(),
            fundamental: true,
            weak_order: Some(Vec::new()),
        }
    }

    pub fn index(&self) -> &Arc<EdgeIndex> {
        &self.index
    }

    pub fn vectors(&self) -> &[EdgeVector] {
        &self.vectors
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_fundamental(&self) -> bool {
        self.fundamental
    }

    pub fn is_weakly_fundamental(&self) -> bool {
        self.weak_order.is_some()
    }

    /// `E_B`: union of the basis elements.
    pub fn support(&self) -> EdgeVector {
        let mut u = EdgeVector::zero(&self.index);
        for v in &self.vectors {
            u.or_assign(v);
        }
        u
    }

    /// Sum of the basis vectors selected by the bits of `coeffs`.
    pub fn combine(&self, coeffs: &[bool]) -> EdgeVector {
        let mut out = EdgeVector::zero(&self.index);
        for (v, &c) in self.vectors.iter().zip(coeffs) {
            if c {
                out.xor_assign(v);
            }
        }
        out
    }
}

impl fmt::Debug for Gf2Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.vectors).finish()
    }
}

#[derive(Serialize, Deserialize)]
struct BasisRepr {
    edge_index: Vec<Edge>,
    vectors: Vec<Vec<Edge>>,
}

impl Serialize for Gf2Basis {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BasisRepr {
            edge_index: self.index.edges.clone(),
            vectors: self.vectors.iter().map(|v| v.edges().cloned().collect()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Gf2Basis {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = BasisRepr::deserialize(d)?;
        let build = || -> Result<Gf2Basis> {
            let index = EdgeIndex::new(r.edge_index)?;
            let vectors = r
                .vectors
                .iter()
                .map(|es| EdgeVector::from_edges(&index, es))
                .collect::<Result<Vec<_>>>()?;
            Gf2Basis::new(&index, vectors)
        };
        build().map_err(serde::de::Error::custom)
    }
}

/// Every vector owns an edge covered by no other vector.
fn has_all_private_edges(len: usize, vectors: &[EdgeVector]) -> bool {
    let mut cover = vec![0u32; len];
    for v in vectors {
        for i in v.positions() {
            cover[i] += 1;
        }
    }
    vectors.iter().all(|v| v.positions().any(|i| cover[i] == 1))
}

/// Backward peeling: repeatedly remove a vector that owns an edge among the
/// remaining ones. A set admits a private-edge prefix order iff peeling
/// empties it, and the reversed removal sequence is such an order.
fn peel_order(len: usize, vectors: &[EdgeVector]) -> Option<Vec<usize>> {
    let mut cover = vec![0u32; len];
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); len];
    for (k, v) in vectors.iter().enumerate() {
        for i in v.positions() {
            cover[i] += 1;
            holders[i].push(k);
        }
    }
    let mut removed = vec![false; vectors.len()];
    let mut queued = vec![false; vectors.len()];
    let mut queue = VecDeque::new();
    for (k, v) in vectors.iter().enumerate() {
        if v.positions().any(|i| cover[i] == 1) {
            queued[k] = true;
            queue.push_back(k);
        }
    }
    let mut order = Vec::with_capacity(vectors.len());
    while let Some(k) = queue.pop_front() {
        removed[k] = true;
        order.push(k);
        for i in vectors[k].positions() {
            cover[i] -= 1;
            if cover[i] == 1 {
                let owner = holders[i].iter().copied().find(|&j| !removed[j]).unwrap();
                if !queued[owner] {
                    queued[owner] = true;
                    queue.push_back(owner);
                }
            }
        }
    }
    if order.len() < vectors.len() {
        return None;
    }
    order.reverse();
    Some(order)
}

fn rank_of(vectors: &[EdgeVector]) -> usize {
    let mut span = SpanChecker::default();
    vectors.iter().filter(|v| span.insert(v)).count()
}

/// Classifies a basis by its private-edge structure.
pub fn classify_basis(basis: &Gf2Basis) -> BasisClass {
    if basis.fundamental {
        BasisClass::Fundamental
    } else if let Some(order) = &basis.weak_order {
        BasisClass::WeaklyFundamental(order.clone())
    } else {
        BasisClass::Other
    }
}

/// Whether every vertex touched by `c` lies in an even number of its edges.
pub fn is_constraint(h: &Hypergraph, c: &EdgeVector) -> Result<bool> {
    if !c.index.matches(h) {
        return Err(Error::invalid("edge vector is not indexed over this hypergraph"));
    }
    Ok(is_even_subset(c))
}

pub(crate) fn is_even_subset(c: &EdgeVector) -> bool {
    let mut parity: HashMap<VertexId, bool> = HashMap::new();
    for e in c.edges() {
        for &v in e.vertices() {
            *parity.entry(v).or_insert(false) ^= true;
        }
    }
    parity.values().all(|odd| !odd)
}

/// Basis of the constraint space: kernel of the vertex-edge incidence matrix
/// over GF(2). One basis vector per free column, in column order.
pub fn constraint_space_basis(h: &Hypergraph) -> Gf2Basis {
    let index = EdgeIndex::of(h);
    let vpos = h.dense_index();
    let mut rows: Vec<EdgeVector> = vec![EdgeVector::zero(&index); h.num_vertices()];
    for (j, e) in index.edges().iter().enumerate() {
        for v in e.vertices() {
            rows[vpos[v]].set(j, true);
        }
    }
    // Reduced row echelon form.
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..index.len() {
        let Some(p) = (r..rows.len()).find(|&i| rows[i].get(col)) else {
            continue;
        };
        rows.swap(r, p);
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row.get(col) {
                row.xor_assign(&pivot_row);
            }
        }
        pivots.push(col);
        r += 1;
    }
    let is_pivot: BTreeSet<usize> = pivots.iter().copied().collect();
    let vectors = (0..index.len())
        .filter(|c| !is_pivot.contains(c))
        .map(|free| {
            let mut v = EdgeVector::zero(&index);
            v.set(free, true);
            for (row, &p) in rows.iter().zip(&pivots) {
                if row.get(free) {
                    v.set(p, true);
                }
            }
            v
        })
        .collect();
    Gf2Basis::new(&index, vectors).expect("kernel vectors are independent")
}

/// Breadth-first spanning forest of a graph.
pub(crate) struct SpanningForest {
    /// Dense vertex position of each id.
    pub pos: BTreeMap<VertexId, usize>,
    /// Parent vertex position and the edge position to it; roots have none.
    pub parent: Vec<Option<(usize, usize)>>,
    pub depth: Vec<usize>,
    /// Edge positions (in the graph's edge index) not in the forest, ascending.
    pub non_tree: Vec<usize>,
}

impl SpanningForest {
    /// Roots are the lowest-id vertex of each component; neighbours are
    /// visited in ascending id order. `ops` counts elementary steps.
    pub fn build(g: &Graph, index: &EdgeIndex, ops: &mut u64) -> Self {
        let pos = g.dense_index();
        let n = pos.len();
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (j, e) in index.edges().iter().enumerate() {
            let (a, b) = e.endpoints().expect("graph edge");
            let (a, b) = (pos[&a], pos[&b]);
            adj[a].push((b, j));
            adj[b].push((a, j));
            *ops += 1;
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let mut parent = vec![None; n];
        let mut depth = vec![0usize; n];
        let mut seen = vec![false; n];
        let mut tree_edge = vec![false; index.len()];
        let mut queue = VecDeque::new();
        for root in 0..n {
            *ops += 1;
            if seen[root] {
                continue;
            }
            seen[root] = true;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for &(w, j) in &adj[u] {
                    *ops += 1;
                    if !seen[w] {
                        seen[w] = true;
                        parent[w] = Some((u, j));
                        depth[w] = depth[u] + 1;
                        tree_edge[j] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        let non_tree = (0..index.len()).filter(|&j| !tree_edge[j]).collect();
        SpanningForest {
            pos,
            parent,
            depth,
            non_tree,
        }
    }

    /// Edge positions of the tree path between two vertex positions.
    pub fn tree_path(&self, mut a: usize, mut b: usize, ops: &mut u64) -> Vec<usize> {
        let mut left = Vec::new();
        let mut right = Vec::new();
        while a != b {
            *ops += 1;
            if self.depth[a] >= self.depth[b] {
                let (p, j) = self.parent[a].expect("vertices share a tree");
                left.push(j);
                a = p;
            } else {
                let (p, j) = self.parent[b].expect("vertices share a tree");
                right.push(j);
                b = p;
            }
        }
        left.extend(right.into_iter().rev());
        left
    }

    /// Fundamental cycle of a non-tree edge, as edge positions.
    pub fn fundamental_cycle(&self, index: &EdgeIndex, j: usize, ops: &mut u64) -> Vec<usize> {
        let (a, b) = index.edge(j).endpoints().expect("graph edge");
        let mut cycle = self.tree_path(self.pos[&a], self.pos[&b], ops);
        cycle.push(j);
        cycle
    }
}

/// Fundamental cycle basis from a breadth-first spanning forest, one cycle
/// per non-tree edge in ascending edge order.
pub fn cycle_basis(g: &Graph) -> Gf2Basis {
    let index = EdgeIndex::of(g);
    let mut ops = 0;
    let forest = SpanningForest::build(g, &index, &mut ops);
    let vectors = forest
        .non_tree
        .iter()
        .map(|&j| EdgeVector::from_positions(&index, forest.fundamental_cycle(&index, j, &mut ops)))
        .collect();
    Gf2Basis::new(&index, vectors).expect("fundamental cycles are independent")
}

/// `|E| - |V| + c` with `c` the number of connected components.
pub fn dim_formula(g: &Graph) -> usize {
    let pos = g.dense_index();
    let mut dsu = Dsu::new(pos.len());
    let mut c = pos.len();
    for (a, b) in g.pairs() {
        if dsu.union(pos[&a], pos[&b]) {
            c -= 1;
        }
    }
    g.num_edges() + c - g.num_vertices()
}

/// Incremental echelon form that tracks, for every stored row, which input
/// vectors were summed to produce it.
#[derive(Clone, Default)]
pub struct SpanChecker {
    rows: Vec<(usize, EdgeVector, Vec<u64>)>,
    inserted: usize,
}

impl SpanChecker {
    pub fn new(basis: &Gf2Basis) -> Self {
        let mut s = SpanChecker::default();
        for v in basis.vectors() {
            s.insert(v);
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &EdgeVector) -> (EdgeVector, Vec<u64>) {
        let mut r = v.clone();
        let mut coeff = vec![0u64; words_for(self.inserted + 1)];
        for (p, row, c) in &self.rows {
            if r.get(*p) {
                r.xor_assign(row);
                for (a, b) in coeff.iter_mut().zip(c) {
                    *a ^= b;
                }
            }
        }
        (r, coeff)
    }

    /// Adds `v` as the next input vector; returns false if it was already in
    /// the span (it still counts as an input position).
    pub fn insert(&mut self, v: &EdgeVector) -> bool {
        let k = self.inserted;
        self.inserted += 1;
        let (r, mut coeff) = self.reduce(v);
        let Some(p) = r.lowest_bit() else {
            return false;
        };
        coeff.resize(words_for(self.inserted), 0);
        coeff[k / 64] ^= 1 << (k % 64);
        self.rows.push((p, r, coeff));
        true
    }

    pub fn contains(&self, v: &EdgeVector) -> bool {
        self.reduce(v).0.is_zero()
    }

    /// Coefficients over the inserted vectors that sum to `v`, if any.
    pub fn coefficients(&self, v: &EdgeVector) -> Option<Vec<bool>> {
        let (r, coeff) = self.reduce(v);
        r.is_zero().then(|| {
            (0..self.inserted)
                .map(|k| coeff.get(k / 64).is_some_and(|w| w >> (k % 64) & 1 == 1))
                .collect()
        })
    }
}

/// Coefficients expressing `c` in `basis`, or `None` when `c` is outside the
/// span.
pub fn in_span(basis: &Gf2Basis, c: &EdgeVector) -> Result<Option<Vec<bool>>> {
    if !same_index(&basis.index, &c.index) {
        return Err(Error::invalid("vector and basis use different edge indices"));
    }
    Ok(SpanChecker::new(basis).coefficients(c))
}

pub fn enumerate_space(basis: &Gf2Basis) -> Result<Vec<EdgeVector>> {
    enumerate_space_with_cap(basis, DEFAULT_SPACE_CAP)
}

/// All `2^dim` elements of the span. Element `x` is the sum of the basis
/// vectors at the set bits of `x`, so the zero vector comes first.
pub fn enumerate_space_with_cap(basis: &Gf2Basis, cap: usize) -> Result<Vec<EdgeVector>> {
    let dim = basis.dim();
    if dim >= usize::BITS as usize - 1 || (1usize << dim) > cap {
        return Err(Error::too_large("span size", 1usize.checked_shl(dim as u32).unwrap_or(usize::MAX), cap));
    }
    let total = 1usize << dim;
    let mut out: Vec<EdgeVector> = Vec::with_capacity(total);
    out.push(EdgeVector::zero(&basis.index));
    for x in 1..total {
        let mut v = out[x & (x - 1)].clone();
        v.xor_assign(&basis.vectors[x.trailing_zeros() as usize]);
        out.push(v);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn two_squares() -> Graph {
        Graph::from_pairs([(1, 2), (1, 4), (1, 5), (2, 3), (3, 4), (3, 5)]).unwrap()
    }

    fn chorded_square() -> Graph {
        Graph::from_pairs([(1, 2), (2, 3), (3, 4), (1, 4), (2, 4)]).unwrap()
    }

    fn vec_of(index: &Arc<EdgeIndex>, pairs: &[(u32, u32)]) -> EdgeVector {
        EdgeVector::from_pairs(index, pairs.iter().copied()).unwrap()
    }

    #[test]
    fn sym_diff_of_two_cycles() {
        let g = two_squares();
        let idx = EdgeIndex::of(&g);
        let c1 = vec_of(&idx, &[(1, 2), (2, 3), (3, 4), (4, 1)]);
        let c2 = vec_of(&idx, &[(1, 4), (4, 3), (3, 5), (5, 1)]);
        let c3 = vec_of(&idx, &[(1, 2), (2, 3), (3, 5), (5, 1)]);
        assert_eq!(sym_diff(&c1, &c2).unwrap(), c3);
        assert!(sym_diff(&c1, &c1).unwrap().is_zero());
        assert_eq!(sym_diff(&c1, &EdgeVector::zero(&idx)).unwrap(), c1);

        let other = EdgeIndex::of(&chorded_square());
        assert!(sym_diff(&c1, &EdgeVector::zero(&other)).is_err());
    }

    #[test]
    fn constraint_check() {
        let h = Hypergraph::from_lists([vec![1, 2], vec![2, 5], vec![1, 3], vec![1, 2, 4], vec![3, 4, 5]])
            .unwrap();
        let idx = EdgeIndex::of(&h);
        let e = |v: &[u32]| Edge::new(v.to_vec()).unwrap();
        let c1 = EdgeVector::from_edges(&idx, &[e(&[2, 5]), e(&[1, 3]), e(&[1, 2, 4]), e(&[3, 4, 5])]).unwrap();
        let c2 = EdgeVector::from_edges(&idx, &[e(&[1, 2]), e(&[2, 5]), e(&[1, 3]), e(&[3, 4, 5])]).unwrap();
        assert!(is_constraint(&h, &c1).unwrap());
        assert!(!is_constraint(&h, &c2).unwrap());
        assert!(is_constraint(&h, &EdgeVector::zero(&idx)).unwrap());
        let basis = constraint_space_basis(&h);
        assert_eq!(basis.dim(), 1);
        assert_eq!(basis.vectors()[0], c1);
    }

    #[test]
    fn cycle_basis_dimensions() {
        assert_eq!(cycle_basis(&two_squares()).dim(), 2);
        assert_eq!(cycle_basis(&chorded_square()).dim(), 2);
        assert_eq!(cycle_basis(&Graph::complete_bipartite(4, 5)).dim(), 12);
        let tree = Graph::from_pairs([(1, 2), (2, 3), (2, 4)]).unwrap();
        assert_eq!(cycle_basis(&tree).dim(), 0);
        let two = Graph::from_pairs([(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]).unwrap();
        assert_eq!(dim_formula(&two), 2);
        assert_eq!(dim_formula(&Graph::cycle(3)), 1);
        assert_eq!(constraint_space_basis(&Hypergraph::default()).dim(), 0);
        let b = cycle_basis(&two_squares());
        assert!(b.is_fundamental());
        assert_eq!(classify_basis(&b), BasisClass::Fundamental);
    }

    #[test]
    fn span_membership() {
        let g = two_squares();
        let b = cycle_basis(&g);
        let [c1, c2] = [b.vectors()[0].clone(), b.vectors()[1].clone()];
        assert_eq!(in_span(&b, &c1).unwrap(), Some(vec![true, false]));
        assert_eq!(in_span(&b, &sym_diff(&c1, &c2).unwrap()).unwrap(), Some(vec![true, true]));
        let path = vec_of(b.index(), &[(1, 2), (2, 3)]);
        assert_eq!(in_span(&b, &path).unwrap(), None);
        assert_eq!(in_span(&b, &EdgeVector::zero(b.index())).unwrap(), Some(vec![false, false]));
    }

    #[test]
    fn enumeration_order() {
        let b = cycle_basis(&two_squares());
        let all = enumerate_space(&b).unwrap();
        assert_eq!(all.len(), 4);
        assert!(all[0].is_zero());
        assert_eq!(all[1], b.vectors()[0]);
        assert_eq!(all[3], sym_diff(&b.vectors()[0], &b.vectors()[1]).unwrap());
        assert!(matches!(enumerate_space_with_cap(&b, 3), Err(Error::TooLarge { .. })));
        let tree = Graph::from_pairs([(1, 2)]).unwrap();
        assert_eq!(enumerate_space(&cycle_basis(&tree)).unwrap().len(), 1);
    }

    #[test]
    fn basis_validation() {
        let g = chorded_square();
        let idx = EdgeIndex::of(&g);
        let big = vec_of(&idx, &[(1, 2), (2, 3), (3, 4), (1, 4)]);
        let small = vec_of(&idx, &[(1, 2), (2, 4), (1, 4)]);
        let other = vec_of(&idx, &[(2, 3), (3, 4), (2, 4)]);
        assert!(Gf2Basis::new(&idx, vec![big.clone(), EdgeVector::zero(&idx)]).is_err());
        assert!(Gf2Basis::new(&idx, vec![big.clone(), small.clone(), other.clone()]).is_err());
        assert!(Gf2Basis::new(&idx, vec![big.clone(), big.clone()]).is_err());
        let b1 = Gf2Basis::new(&idx, vec![big, small]).unwrap();
        assert!(b1.is_weakly_fundamental());
    }

    #[test]
    fn weakly_fundamental_but_not_fundamental() {
        // On K4: a triangle whose edges all reappear in two 4-cycles.
        let g = Graph::complete(4);
        let idx = EdgeIndex::of(&g);
        let tri = vec_of(&idx, &[(1, 2), (2, 3), (1, 3)]);
        let q1 = vec_of(&idx, &[(1, 2), (2, 3), (3, 4), (1, 4)]);
        let q2 = vec_of(&idx, &[(1, 3), (2, 3), (2, 4), (1, 4)]);
        let b = Gf2Basis::new(&idx, vec![tri, q1.clone(), q2.clone()]).unwrap();
        assert!(!b.is_fundamental());
        match classify_basis(&b) {
            BasisClass::WeaklyFundamental(order) => {
                assert_eq!(order[0], 0);
                assert!(prefix_private(&b, &order));
            }
            other => panic!("unexpected class {other:?}"),
        }
        // The three 4-cycles of K4 sum to zero.
        let q3 = vec_of(&idx, &[(1, 2), (2, 4), (3, 4), (1, 3)]);
        assert!(Gf2Basis::new(&idx, vec![q1, q2, q3]).is_err());
    }

    pub(crate) fn prefix_private(b: &Gf2Basis, order: &[usize]) -> bool {
        let mut seen = EdgeVector::zero(b.index());
        for &k in order {
            let v = &b.vectors()[k];
            if !v.positions().any(|i| !seen.get(i)) {
                return false;
            }
            seen.or_assign(v);
        }
        true
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (2u32..11).prop_flat_map(|n| {
            proptest::collection::btree_set((1..=n, 1..=n), 0..25).prop_map(move |pairs| {
                let pairs: BTreeSet<(u32, u32)> = pairs
                    .into_iter()
                    .filter(|(a, b)| a != b)
                    .map(|(a, b)| (a.min(b), a.max(b)))
                    .collect();
                Graph::new(1..=n, pairs).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn rank_matches_formula(g in arb_graph()) {
            let b = cycle_basis(&g);
            prop_assert_eq!(b.dim(), dim_formula(&g));
            prop_assert_eq!(constraint_space_basis(&g).dim(), b.dim());
            for v in b.vectors() {
                prop_assert!(is_constraint(&g, v).unwrap());
            }
        }

        #[test]
        fn xor_algebra(g in arb_graph(), a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
            let idx = EdgeIndex::of(&g);
            let mk = |bits: u64| EdgeVector::from_positions(&idx, (0..idx.len()).filter(|i| bits >> (i % 64) & 1 == 1));
            let (x, y, z) = (mk(a), mk(b), mk(c));
            prop_assert_eq!(sym_diff(&x, &y).unwrap(), sym_diff(&y, &x).unwrap());
            prop_assert_eq!(
                sym_diff(&sym_diff(&x, &y).unwrap(), &z).unwrap(),
                sym_diff(&x, &sym_diff(&y, &z).unwrap()).unwrap()
            );
            prop_assert!(sym_diff(&x, &x).unwrap().is_zero());
        }

        #[test]
        fn in_span_reconstructs(g in arb_graph(), pick in any::<u64>()) {
            let b = cycle_basis(&g);
            let coeffs: Vec<bool> = (0..b.dim()).map(|k| pick >> (k % 64) & 1 == 1).collect();
            let v = b.combine(&coeffs);
            prop_assert_eq!(in_span(&b, &v).unwrap(), Some(coeffs));
        }
    }
}
