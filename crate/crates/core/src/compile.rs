//! Compiled hypergraphs and par-equality.
//!
//! Given a basis `B` of the constraint (cycle) space, the compiled hypergraph
//! has one vertex per edge of `E_B` (the union of the basis elements) and one
//! hyperedge per basis element. Different bases of the same space can give
//! non-isomorphic compiled hypergraphs; [`compiled_set`] collects the classes
//! over all bases and [`par_equal`] decides whether two graphs share one.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::gf2::{constraint_space_basis, cycle_basis, dim_formula, is_even_subset, EdgeIndex, Gf2Basis};
use crate::hypergraph::{Edge, Graph, Hypergraph, VertexId};

/// Largest dimension for which [`enumerate_bases`] runs.
pub const MAX_ENUMERATION_DIM: usize = 12;

/// Largest dimension the lazy basis iterator supports (coefficients are `u64`).
const MAX_ITER_DIM: usize = 63;

/// Bases are compiled in parallel batches of this size.
const BATCH: usize = 4096;

/// A compiled hypergraph on vertices `1..=m`; vertex `i` stands for source
/// edge `source_edges[i - 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CompiledRepr", into = "CompiledRepr")]
pub struct CompiledHypergraph {
    hypergraph: Hypergraph,
    source_edges: Vec<Edge>,
}

#[derive(Serialize, Deserialize)]
struct CompiledRepr {
    num_vertices: usize,
    edges: Vec<Vec<VertexId>>,
    source_edges: Vec<Vec<VertexId>>,
}

impl CompiledHypergraph {
    /// Wraps a hypergraph on `1..=m` with the source edge of each vertex.
    pub fn new(hypergraph: Hypergraph, source_edges: Vec<Edge>) -> Result<Self> {
        let m = source_edges.len();
        if !hypergraph.vertices().iter().copied().eq(1..=m as VertexId) {
            return Err(Error::invalid(format!(
                "compiled hypergraph vertices must be exactly 1..={m}"
            )));
        }
        if source_edges.iter().collect::<BTreeSet<_>>().len() != m {
            return Err(Error::invalid("source edges repeat"));
        }
        Ok(CompiledHypergraph {
            hypergraph,
            source_edges,
        })
    }

    /// A layout given without provenance; source edges are left as the
    /// placeholders `{0, i}`.
    pub fn from_layout(h: &Hypergraph) -> Result<Self> {
        let ids: Vec<VertexId> = h.vertices().iter().copied().collect();
        let map = ids
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i as VertexId + 1))
            .collect();
        let hypergraph = h.relabel(&map)?;
        let source = (1..=ids.len() as VertexId)
            .map(|i| Edge::pair(0, i))
            .collect::<Result<Vec<_>>>()?;
        CompiledHypergraph::new(hypergraph, source)
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.hypergraph
    }

    pub fn source_edges(&self) -> &[Edge] {
        &self.source_edges
    }

    pub fn num_vertices(&self) -> usize {
        self.source_edges.len()
    }

    pub fn num_edges(&self) -> usize {
        self.hypergraph.num_edges()
    }

    pub fn source_edge(&self, v: VertexId) -> Option<&Edge> {
        (v as usize).checked_sub(1).and_then(|i| self.source_edges.get(i))
    }

    /// The generating constraints as a basis over the `E_B` index.
    pub fn basis(&self) -> Gf2Basis {
        let index = EdgeIndex::new(self.source_edges.iter().cloned()).expect("distinct source edges");
        let vectors = self
            .hypergraph
            .edges()
            .iter()
            .map(|e| {
                crate::gf2::EdgeVector::from_positions(&index, e.vertices().iter().map(|&v| v as usize - 1))
            })
            .collect();
        Gf2Basis::new(&index, vectors).expect("compiled edges are independent")
    }

    pub fn canonical_form(&self) -> Result<CanonicalForm> {
        canonical_form(&self.hypergraph)
    }
}

impl TryFrom<CompiledRepr> for CompiledHypergraph {
    type Error = Error;

    fn try_from(r: CompiledRepr) -> Result<Self> {
        let edges = r.edges.into_iter().map(Edge::new).collect::<Result<Vec<_>>>()?;
        let source = r
            .source_edges
            .into_iter()
            .map(Edge::new)
            .collect::<Result<Vec<_>>>()?;
        if source.len() != r.num_vertices {
            return Err(Error::invalid("source_edges length differs from num_vertices"));
        }
        let h = Hypergraph::new(1..=r.num_vertices as VertexId, edges)?;
        CompiledHypergraph::new(h, source)
    }
}

impl From<CompiledHypergraph> for CompiledRepr {
    fn from(c: CompiledHypergraph) -> Self {
        CompiledRepr {
            num_vertices: c.source_edges.len(),
            edges: c.hypergraph.edges().iter().cloned().map(Vec::from).collect(),
            source_edges: c.source_edges.into_iter().map(Vec::from).collect(),
        }
    }
}

fn check_basis(h: &Hypergraph, basis: &Gf2Basis) -> Result<()> {
    if !basis.index().matches(h) {
        return Err(Error::invalid("basis is not indexed over the hypergraph's edges"));
    }
    if let Some(k) = basis.vectors().iter().position(|v| !is_even_subset(v)) {
        return Err(Error::invalid(format!("basis vector {k} is not a constraint")));
    }
    Ok(())
}

/// Compiles `h` with basis `basis`, enumerating `E_B` in ascending edge order.
pub fn compile(h: &Hypergraph, basis: &Gf2Basis) -> Result<CompiledHypergraph> {
    check_basis(h, basis)?;
    let support: Vec<Edge> = basis.support().edges().cloned().collect();
    build(basis, &support)
}

/// Compiles with an explicit enumeration: vertex `i` is `enumeration[i - 1]`,
/// which must list `E_B` exactly once.
pub fn compile_with_enumeration(
    h: &Hypergraph,
    basis: &Gf2Basis,
    enumeration: &[Edge],
) -> Result<CompiledHypergraph> {
    check_basis(h, basis)?;
    let support = basis.support().to_edge_set();
    let given: BTreeSet<Edge> = enumeration.iter().cloned().collect();
    if given.len() != enumeration.len() || given != support {
        return Err(Error::invalid("enumeration does not list the basis support exactly once"));
    }
    build(basis, enumeration)
}

fn build(basis: &Gf2Basis, enumeration: &[Edge]) -> Result<CompiledHypergraph> {
    let local = EdgeIndex::new(enumeration.iter().cloned())?;
    let edges = basis
        .vectors()
        .iter()
        .map(|v| {
            Edge::new(
                v.edges()
                    .map(|e| local.position(e).expect("edge in support") as VertexId + 1),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    let m = enumeration.len() as VertexId;
    let hypergraph = Hypergraph::new(1..=m, edges)?;
    CompiledHypergraph::new(hypergraph, enumeration.to_vec())
}

/// Spanning basis of the constraint space: the fundamental cycle basis for
/// graphs, the incidence-kernel basis otherwise.
pub fn default_basis(h: &Hypergraph) -> Gf2Basis {
    match Graph::try_from(h.clone()) {
        Ok(g) => cycle_basis(&g),
        Err(_) => constraint_space_basis(h),
    }
}

/// Lazily yields every basis of the span of `space` exactly once.
///
/// A basis is written as a strictly increasing tuple of nonzero coefficient
/// words `c_1 < ... < c_k`, where bit `i` of `c_j` selects input vector `i`.
/// The first basis produced is the input itself.
pub struct Bases<'a> {
    space: &'a Gf2Basis,
    dim: usize,
    /// Chosen coefficients and, per depth, the echelon rows spanning them.
    chosen: Vec<u64>,
    rows: Vec<Vec<u64>>,
    next: u64,
    done: bool,
}

pub fn bases(space: &Gf2Basis) -> Result<Bases<'_>> {
    let dim = space.dim();
    if dim > MAX_ITER_DIM {
        return Err(Error::too_large("space dimension", dim, MAX_ITER_DIM));
    }
    Ok(Bases {
        space,
        dim,
        chosen: Vec::with_capacity(dim),
        rows: vec![Vec::new()],
        next: 1,
        done: false,
    })
}

fn reduce(rows: &[u64], mut x: u64) -> u64 {
    for &r in rows {
        x = x.min(x ^ r);
    }
    x
}

impl Bases<'_> {
    fn limit(&self) -> u64 {
        1u64 << self.dim
    }

    /// Advances the depth-first search to the next complete tuple.
    fn advance(&mut self) -> Option<Vec<u64>> {
        if self.done {
            return None;
        }
        if self.dim == 0 {
            self.done = true;
            return Some(Vec::new());
        }
        let limit = self.limit();
        loop {
            let depth = self.chosen.len();
            let remaining = (self.dim - depth) as u64;
            let mut found = None;
            let mut c = self.next;
            // Each further slot needs a strictly larger value.
            while c < limit && limit - c >= remaining {
                if reduce(&self.rows[depth], c) != 0 {
                    found = Some(c);
                    break;
                }
                c += 1;
            }
            match found {
                Some(c) => {
                    self.chosen.push(c);
                    // Rows have distinct leading bits and are kept in
                    // descending order, which is what `reduce` relies on.
                    let mut r = self.rows[depth].clone();
                    r.push(reduce(&r, c));
                    r.sort_unstable_by(|a, b| b.cmp(a));
                    self.rows.push(r);
                    self.next = c + 1;
                    if self.chosen.len() == self.dim {
                        let out = self.chosen.clone();
                        self.backtrack();
                        return Some(out);
                    }
                }
                None => {
                    if self.chosen.is_empty() {
                        self.done = true;
                        return None;
                    }
                    self.backtrack();
                }
            }
        }
    }

    fn backtrack(&mut self) {
        let last = self.chosen.pop().expect("nonempty");
        self.rows.pop();
        self.next = last + 1;
    }
}

impl Iterator for Bases<'_> {
    type Item = Gf2Basis;

    fn next(&mut self) -> Option<Gf2Basis> {
        let coeffs = self.advance()?;
        let vectors = coeffs
            .iter()
            .map(|&c| {
                let bits: Vec<bool> = (0..self.dim).map(|i| c >> i & 1 == 1).collect();
                self.space.combine(&bits)
            })
            .collect();
        Some(Gf2Basis::new(self.space.index(), vectors).expect("independent by construction"))
    }
}

/// Result of [`enumerate_bases`].
#[derive(Clone, Debug)]
pub struct BasisEnumeration {
    pub bases: Vec<Gf2Basis>,
    /// Set when the cap stopped the enumeration early.
    pub truncated: bool,
}

/// All unordered bases of the span of `space`, up to `cap` of them.
pub fn enumerate_bases(space: &Gf2Basis, cap: usize) -> Result<BasisEnumeration> {
    if space.dim() > MAX_ENUMERATION_DIM {
        return Err(Error::too_large("space dimension", space.dim(), MAX_ENUMERATION_DIM));
    }
    let mut it = bases(space)?;
    let bases: Vec<Gf2Basis> = it.by_ref().take(cap).collect();
    let truncated = bases.len() == cap && it.next().is_some();
    Ok(BasisEnumeration { bases, truncated })
}

/// Isomorphism classes of compiled hypergraphs over all bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompiledSet {
    pub forms: BTreeSet<CanonicalForm>,
    /// True when every basis of the space was compiled.
    pub exhaustive: bool,
    pub bases_examined: usize,
}

/// The compiled set of `h`, examining at most `cap` bases.
///
/// Spaces above the enumeration dimension guard are sampled instead: the
/// result is marked non-exhaustive rather than failing.
pub fn compiled_set(h: &Hypergraph, cap: usize) -> Result<CompiledSet> {
    let space = default_basis(h);
    let mut forms = BTreeSet::new();
    let mut examined = 0;
    let iter: Box<dyn Iterator<Item = Gf2Basis> + '_> = if space.dim() > MAX_ITER_DIM {
        Box::new(std::iter::once(space.clone()))
    } else {
        Box::new(bases(&space)?)
    };
    let mut iter = iter.peekable();
    while examined < cap && iter.peek().is_some() {
        let batch: Vec<Gf2Basis> = iter.by_ref().take(BATCH.min(cap - examined)).collect();
        examined += batch.len();
        let found = batch
            .par_iter()
            .map(|b| compile(h, b)?.canonical_form())
            .collect::<Result<Vec<_>>>()?;
        forms.extend(found);
    }
    let exhaustive =
        space.dim() <= MAX_ENUMERATION_DIM && iter.peek().is_none();
    Ok(CompiledSet {
        forms,
        exhaustive,
        bases_examined: examined,
    })
}

/// Number of edges lying on at least one cycle.
fn cycle_edge_count(g: &Graph) -> usize {
    cycle_basis(g).support().count_ones()
}

/// Whether some bases of `g1` and `g2` compile to isomorphic hypergraphs.
///
/// The fundamental basis of `g1` is compiled once; bases of `g2` are
/// searched (at most `cap`) for an isomorphic compilation. Since every class
/// of `g1` is reached from any fixed basis of `g2` when the sets agree, one
/// witness settles the question. Exhausting the cap without a witness or an
/// exhaustive negative is reported as a resource error.
pub fn par_equal(g1: &Graph, g2: &Graph, cap: usize) -> Result<bool> {
    let (d1, d2) = (dim_formula(g1), dim_formula(g2));
    if d1 != d2 {
        return Ok(false);
    }
    if d1 == 0 {
        return Ok(true);
    }
    if cycle_edge_count(g1) != cycle_edge_count(g2) {
        return Ok(false);
    }
    let target = compile(g1, &cycle_basis(g1))?.canonical_form()?;
    let space = cycle_basis(g2);
    let mut iter = bases(&space)?.peekable();
    let mut examined = 0;
    while iter.peek().is_some() {
        if examined >= cap {
            return Err(Error::too_large("bases examined", examined, cap));
        }
        let batch: Vec<Gf2Basis> = iter.by_ref().take(BATCH.min(cap - examined)).collect();
        examined += batch.len();
        let hit = batch.par_iter().try_fold(
            || false,
            |acc, b| -> Result<bool> { Ok(acc || compile(g2, b)?.canonical_form()? == target) },
        );
        let hit = hit.try_reduce(|| false, |a, b| Ok(a || b))?;
        if hit {
            return Ok(true);
        }
    }
    Ok(false)
}
