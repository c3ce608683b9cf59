//! Loop labelings and preimage reconstruction.
//!
//! A loop labeling assigns every vertex of a compiled hypergraph a distinct
//! graph edge `{i, j}` such that each hyperedge maps into the cycle space of
//! the induced graph. Graphs compiling to a given layout are exactly the
//! induced graphs of labelings whose cycle space has dimension equal to the
//! number of hyperedges.
//!
//! The search adds hyperedges one at a time in an order where every edge
//! brings at least one new vertex. Along such an order each prefix labeling
//! raises the cycle-space dimension by exactly one and every hyperedge maps
//! to a simple cycle. Writing the current hyperedge as `S` (already labelled)
//! plus `N` (new), the labels of `S` must form vertex-disjoint paths, and the
//! new labels close those paths into one cycle. The dimension count
//! `t + g - K + 1 = 1` (t paths, g reused vertices, K components touched)
//! forces all paths and reused vertices into pairwise distinct components,
//! which keeps the branching small: for a connected prefix there is one
//! path and every new vertex is fresh.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, CanonicalForm};
use crate::compile::CompiledHypergraph;
use crate::error::{Error, Result};
use crate::gf2::{cycle_basis, EdgeVector, SpanChecker};
use crate::hypergraph::{Dsu, Edge, Graph, Hypergraph, VertexId};

/// Map from hypergraph vertices to unordered pairs of integers.
///
/// The type does not enforce the loop-labeling conditions; use
/// [`is_loop_labeling`] to check a candidate.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct LoopLabeling {
    labels: BTreeMap<VertexId, Edge>,
}

impl LoopLabeling {
    pub fn new(labels: BTreeMap<VertexId, Edge>) -> Result<Self> {
        if let Some((v, e)) = labels.iter().find(|(_, e)| e.len() != 2) {
            return Err(Error::invalid(format!("label {e:?} of vertex {v} is not a pair")));
        }
        Ok(LoopLabeling { labels })
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (VertexId, (u32, u32))>) -> Result<Self> {
        let labels = pairs
            .into_iter()
            .map(|(v, (a, b))| Ok((v, Edge::pair(a, b)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        LoopLabeling::new(labels)
    }

    pub fn get(&self, v: VertexId) -> Option<&Edge> {
        self.labels.get(&v)
    }

    pub fn labels(&self) -> &BTreeMap<VertexId, Edge> {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn is_injective(&self) -> bool {
        self.labels.values().collect::<HashSet<_>>().len() == self.labels.len()
    }
}

impl AsRef<Hypergraph> for CompiledHypergraph {
    fn as_ref(&self) -> &Hypergraph {
        self.hypergraph()
    }
}

/// `G_{h,l}`: vertices are the integers used by the labels of `h`'s
/// vertices, edges are the labels themselves.
pub fn induced_graph(h: &Hypergraph, l: &LoopLabeling) -> Result<Graph> {
    let mut pairs = BTreeSet::new();
    for &v in h.vertices() {
        let e = l
            .get(v)
            .ok_or_else(|| Error::invalid(format!("vertex {v} has no label")))?;
        pairs.insert(e.endpoints().expect("labels are pairs"));
    }
    Graph::from_pairs(pairs)
}

/// Checks injectivity, totality on `h`'s vertices, and that every hyperedge
/// maps into the cycle space of the induced graph.
pub fn is_loop_labeling(h: &Hypergraph, l: &LoopLabeling) -> bool {
    if h.vertices().iter().any(|&v| l.get(v).is_none()) {
        return false;
    }
    let restricted: Vec<&Edge> = h.vertices().iter().map(|&v| l.get(v).unwrap()).collect();
    if restricted.iter().collect::<HashSet<_>>().len() != restricted.len() {
        return false;
    }
    let Ok(g) = induced_graph(h, l) else {
        return false;
    };
    let basis = cycle_basis(&g);
    let span = SpanChecker::new(&basis);
    h.edges().iter().all(|e| {
        let image = e.vertices().iter().map(|&v| l.get(v).unwrap());
        match EdgeVector::from_edges(basis.index(), image) {
            Ok(vec) => span.contains(&vec),
            Err(_) => false,
        }
    })
}

/// Limits for [`search_labelings`] and [`preimage`].
#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Largest number of distinct integers a labeling may need.
    pub max_labels: usize,
    /// Stop after this many labelings; the result is then non-exhaustive.
    pub max_labelings: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_labels: 64,
            max_labelings: 1_000_000,
        }
    }
}

#[derive(Clone, Debug)]
pub struct LabelingSearch {
    pub labelings: Vec<LoopLabeling>,
    pub exhaustive: bool,
}

/// All loop labelings of `p` whose induced cycle space has dimension
/// `|E_p|`, one per class under renaming of the label integers.
///
/// Fails with `Unsupported` when `p` has no hyperedge order in which each
/// edge has a new vertex and no earlier combination fits inside a later edge.
pub fn search_labelings<H: AsRef<Hypergraph> + ?Sized>(
    p: &H,
    opts: &SearchOptions,
) -> Result<LabelingSearch> {
    let h = p.as_ref();
    let ids: Vec<VertexId> = h.vertices().iter().copied().collect();
    let mut labelings = Vec::new();
    let exhaustive = run_search(h, opts, &mut |labels| {
        let l = LoopLabeling {
            labels: ids
                .iter()
                .zip(labels)
                .map(|(&v, &(a, b))| (v, Edge::pair(a, b).expect("distinct endpoints")))
                .collect(),
        };
        labelings.push(l);
    })?;
    Ok(LabelingSearch {
        labelings,
        exhaustive,
    })
}

/// Induced-graph classes over all labelings found by [`search_labelings`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreimageResult {
    pub graphs: BTreeSet<CanonicalForm>,
    pub labelings_examined: usize,
    pub exhaustive: bool,
}

pub fn preimage<H: AsRef<Hypergraph> + ?Sized>(p: &H, opts: &SearchOptions) -> Result<PreimageResult> {
    let h = p.as_ref();
    let mut graphs = BTreeSet::new();
    let mut examined = 0;
    let mut error = None;
    let exhaustive = run_search(h, opts, &mut |labels| {
        examined += 1;
        let g = Graph::from_pairs(labels.iter().copied()).expect("labels form a graph");
        match canonical_form(&g) {
            Ok(f) => {
                graphs.insert(f);
            }
            Err(e) => {
                error.get_or_insert(e);
            }
        }
    })?;
    if let Some(e) = error {
        return Err(e);
    }
    Ok(PreimageResult {
        graphs,
        labelings_examined: examined,
        exhaustive,
    })
}

/// One hyperedge in processing order, as dense vertex positions.
#[derive(Debug)]
struct Step {
    shared: Vec<usize>,
    new: Vec<usize>,
}

/// Orders the hyperedges and splits each into shared and new vertices.
fn plan(h: &Hypergraph) -> Result<Vec<Step>> {
    let index = h.dense_index();
    let n = h.num_vertices();
    let edges: Vec<Vec<usize>> = h
        .edges()
        .iter()
        .map(|e| e.vertices().iter().map(|v| index[v]).collect())
        .collect();
    if let Some(e) = h.edges().iter().find(|e| e.len() < 3) {
        return Err(Error::invalid(format!(
            "edge {e:?} has fewer than 3 vertices and cannot map to a cycle"
        )));
    }
    let covered = h.covered_vertices();
    if let Some(v) = h.vertices().iter().find(|v| !covered.contains(v)) {
        return Err(Error::invalid(format!("vertex {v} lies in no edge")));
    }

    let order = find_order(n, &edges)?;

    let mut seen = vec![false; n];
    Ok(order
        .iter()
        .map(|&k| {
            let (shared, new): (Vec<usize>, Vec<usize>) = edges[k].iter().partition(|&&v| seen[v]);
            for &v in &edges[k] {
                seen[v] = true;
            }
            Step { shared, new }
        })
        .collect())
}

/// Peeling states explored before [`find_order`] gives up.
const ORDER_SEARCH_LIMIT: usize = 100_000;

/// An edge order in which every edge has a vertex outside the earlier ones
/// and no nonzero sum of earlier edges lies inside a later edge. Found by
/// backward peeling with backtracking; removals that keep the remaining
/// edges connected are tried first, so the forward order mostly extends a
/// connected prefix.
fn find_order(n: usize, edges: &[Vec<usize>]) -> Result<Vec<usize>> {
    let mut cover = vec![0u32; n];
    for e in edges {
        for &v in e {
            cover[v] += 1;
        }
    }
    let mut p = Peeler {
        n,
        edges,
        cover,
        remaining: (0..edges.len()).collect(),
        out: Vec::with_capacity(edges.len()),
        failed: HashSet::new(),
        budget: ORDER_SEARCH_LIMIT,
        nested: false,
    };
    if p.peel() {
        p.out.reverse();
        return Ok(p.out);
    }
    Err(Error::Unsupported(if p.budget == 0 {
        "edge order search exceeded its budget".into()
    } else if p.nested {
        "every edge order has a combination of earlier edges inside a later edge".into()
    } else {
        "no edge order gives every edge a vertex outside the earlier ones".into()
    }))
}

struct Peeler<'a> {
    n: usize,
    edges: &'a [Vec<usize>],
    cover: Vec<u32>,
    /// Ascending edge positions still present.
    remaining: Vec<usize>,
    out: Vec<usize>,
    failed: HashSet<Vec<u64>>,
    budget: usize,
    nested: bool,
}

impl Peeler<'_> {
    fn peel(&mut self) -> bool {
        if self.remaining.is_empty() {
            return true;
        }
        let mut key = vec![0u64; self.edges.len().div_ceil(64)];
        for &k in &self.remaining {
            key[k / 64] |= 1 << (k % 64);
        }
        if self.budget == 0 || self.failed.contains(&key) {
            return false;
        }
        self.budget -= 1;
        let edges = self.edges;
        let mut candidates: Vec<usize> = self
            .remaining
            .iter()
            .copied()
            .filter(|&k| edges[k].iter().any(|&v| self.cover[v] == 1))
            .collect();
        let base = count_components(self.n, edges, &self.remaining, None);
        candidates.sort_by_key(|&k| {
            let isolated = !edges[k].iter().any(|&v| self.cover[v] > 1);
            let after = count_components(self.n, edges, &self.remaining, Some(k));
            after + usize::from(isolated) != base
        });
        for k in candidates {
            if !complement_independent(self.n, edges, &self.remaining, k) {
                self.nested = true;
                continue;
            }
            for &v in &edges[k] {
                self.cover[v] -= 1;
            }
            let at = self.remaining.binary_search(&k).expect("present");
            self.remaining.remove(at);
            self.out.push(k);
            if self.peel() {
                return true;
            }
            self.out.pop();
            self.remaining.insert(at, k);
            for &v in &edges[k] {
                self.cover[v] += 1;
            }
        }
        self.failed.insert(key);
        false
    }
}

fn count_components(n: usize, edges: &[Vec<usize>], set: &[usize], skip: Option<usize>) -> usize {
    let mut dsu = Dsu::new(n);
    let mut touched = vec![false; n];
    for &k in set {
        if Some(k) == skip {
            continue;
        }
        for &v in &edges[k] {
            touched[v] = true;
            dsu.union(edges[k][0], v);
        }
    }
    (0..n).filter(|&v| touched[v] && dsu.find(v) == v).count()
}

/// Whether the other edges of `set`, restricted to the complement of edge
/// `k`, are independent; equivalently no nonzero sum of them lies inside
/// edge `k`.
fn complement_independent(n: usize, edges: &[Vec<usize>], set: &[usize], k: usize) -> bool {
    let words = n.div_ceil(64);
    let bits = |e: &[usize]| {
        let mut w = vec![0u64; words];
        for &v in e {
            w[v / 64] |= 1 << (v % 64);
        }
        w
    };
    let mask = bits(&edges[k]);
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for &j in set.iter().filter(|&&j| j != k) {
        let mut r: Vec<u64> = bits(&edges[j]).iter().zip(&mask).map(|(a, m)| a & !m).collect();
        for row in &rows {
            let p = leading(row).expect("rows are nonzero");
            if r[p / 64] >> (p % 64) & 1 == 1 {
                for (a, b) in r.iter_mut().zip(row) {
                    *a ^= b;
                }
            }
        }
        if leading(&r).is_none() {
            return false;
        }
        rows.push(r);
    }
    true
}

fn leading(w: &[u64]) -> Option<usize> {
    w.iter()
        .position(|&x| x != 0)
        .map(|i| i * 64 + w[i].trailing_zeros() as usize)
}

fn label_bound(n: usize, edges: &[Vec<usize>]) -> usize {
    // Per component: |V| - |E| + 1 graph vertices when nothing is shared.
    let mut dsu = Dsu::new(n);
    for e in edges {
        for &v in e {
            dsu.union(e[0], v);
        }
    }
    let mut verts: HashMap<usize, usize> = HashMap::new();
    let mut count: HashMap<usize, usize> = HashMap::new();
    for v in 0..n {
        *verts.entry(dsu.find(v)).or_default() += 1;
    }
    for e in edges {
        *count.entry(dsu.find(e[0])).or_default() += 1;
    }
    verts
        .iter()
        .map(|(root, &m)| m + 1 - count.get(root).copied().unwrap_or(0))
        .sum()
}

type Pair = (u32, u32);

fn pair(a: u32, b: u32) -> Pair {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// A vertex of the cycle being built: an existing graph vertex or a slot
/// that becomes fresh or reuses an existing vertex.
#[derive(Clone, Copy, Debug)]
enum Term {
    Known(u32),
    Slot(usize),
}

/// New edges of one candidate cycle: `(term, term, compiled vertex)`.
struct Template {
    edges: Vec<(Term, Term, usize)>,
    slots: usize,
}

struct Searcher<'a> {
    steps: &'a [Step],
    n: usize,
    cap: usize,
    found: usize,
    stopped: bool,
    seen: HashSet<Vec<Vec<usize>>>,
    emit: &'a mut dyn FnMut(&[Pair]),
}

/// Runs the search; returns whether it finished without hitting the cap.
fn run_search(h: &Hypergraph, opts: &SearchOptions, emit: &mut dyn FnMut(&[Pair])) -> Result<bool> {
    let steps = plan(h)?;
    let index = h.dense_index();
    let edges: Vec<Vec<usize>> = h
        .edges()
        .iter()
        .map(|e| e.vertices().iter().map(|v| index[v]).collect())
        .collect();
    let bound = label_bound(h.num_vertices(), &edges);
    if bound > opts.max_labels {
        return Err(Error::too_large("labels needed", bound, opts.max_labels));
    }
    let mut s = Searcher {
        steps: &steps,
        n: h.num_vertices(),
        cap: opts.max_labelings,
        found: 0,
        stopped: false,
        seen: HashSet::new(),
        emit,
    };
    let mut labels = vec![None; s.n];
    s.step(0, &mut labels, 1);
    Ok(!s.stopped)
}

impl Searcher<'_> {
    fn step(&mut self, k: usize, labels: &mut Vec<Option<Pair>>, next: u32) {
        if self.stopped {
            return;
        }
        if k == self.steps.len() {
            self.finish(labels);
            return;
        }
        let existing: HashSet<Pair> = labels.iter().flatten().copied().collect();
        let comp = components(&existing);
        let step = &self.steps[k];
        let shared: Vec<Pair> = step.shared.iter().map(|&v| labels[v].unwrap()).collect();
        let Some(arcs) = arcs(&shared) else {
            return;
        };
        let arc_comps: Vec<usize> = arcs.iter().map(|a| comp[&a[0]]).collect();
        if arc_comps.iter().collect::<HashSet<_>>().len() != arc_comps.len() {
            return;
        }
        // Existing vertices grouped by component, for reuse in slots.
        let mut by_comp: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
        for (&v, &c) in &comp {
            by_comp.entry(c).or_default().push(v);
        }
        for list in by_comp.values_mut() {
            list.sort_unstable();
        }
        for template in templates(&arcs, &step.new) {
            let mut assignment = Vec::with_capacity(template.slots);
            let mut used: HashSet<usize> = arc_comps.iter().copied().collect();
            self.fill(k, labels, next, &existing, &by_comp, &template, &mut assignment, &mut used);
            if self.stopped {
                return;
            }
        }
    }

    /// Chooses each slot as fresh or as a vertex of an untouched component.
    #[allow(clippy::too_many_arguments)]
    fn fill(
        &mut self,
        k: usize,
        labels: &mut Vec<Option<Pair>>,
        next: u32,
        existing: &HashSet<Pair>,
        by_comp: &BTreeMap<usize, Vec<u32>>,
        t: &Template,
        assignment: &mut Vec<Option<u32>>,
        used: &mut HashSet<usize>,
    ) {
        if self.stopped {
            return;
        }
        if assignment.len() == t.slots {
            self.apply(k, labels, next, existing, t, assignment);
            return;
        }
        assignment.push(None);
        self.fill(k, labels, next, existing, by_comp, t, assignment, used);
        assignment.pop();
        for (&c, verts) in by_comp {
            if used.contains(&c) {
                continue;
            }
            used.insert(c);
            for &v in verts {
                assignment.push(Some(v));
                self.fill(k, labels, next, existing, by_comp, t, assignment, used);
                assignment.pop();
            }
            used.remove(&c);
        }
    }

    fn apply(
        &mut self,
        k: usize,
        labels: &mut Vec<Option<Pair>>,
        mut next: u32,
        existing: &HashSet<Pair>,
        t: &Template,
        assignment: &[Option<u32>],
    ) {
        let slot_value: Vec<u32> = assignment
            .iter()
            .map(|a| {
                a.unwrap_or_else(|| {
                    next += 1;
                    next - 1
                })
            })
            .collect();
        let resolve = |x: Term| match x {
            Term::Known(v) => v,
            Term::Slot(i) => slot_value[i],
        };
        let mut added: Vec<(usize, Pair)> = Vec::with_capacity(t.edges.len());
        for &(a, b, v) in &t.edges {
            let p = pair(resolve(a), resolve(b));
            if existing.contains(&p) || added.iter().any(|&(_, q)| q == p) {
                return;
            }
            added.push((v, p));
        }
        for &(v, p) in &added {
            labels[v] = Some(p);
        }
        self.step(k + 1, labels, next);
        for &(v, _) in &added {
            labels[v] = None;
        }
    }

    fn finish(&mut self, labels: &[Option<Pair>]) {
        // Renaming-invariant key: which compiled vertices meet at each graph vertex.
        let mut at: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (v, l) in labels.iter().enumerate() {
            let (a, b) = l.expect("complete labeling");
            at.entry(a).or_default().push(v);
            at.entry(b).or_default().push(v);
        }
        let mut key: Vec<Vec<usize>> = at.into_values().collect();
        key.sort_unstable();
        if !self.seen.insert(key) {
            return;
        }
        if self.found == self.cap {
            self.stopped = true;
            return;
        }
        self.found += 1;
        let full: Vec<Pair> = labels.iter().map(|l| l.unwrap()).collect();
        debug_assert_eq!(full.len(), self.n);
        (self.emit)(&full);
    }
}

/// Connected component id of every vertex of the graph with these edges.
fn components(edges: &HashSet<Pair>) -> HashMap<u32, usize> {
    let mut verts: Vec<u32> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    verts.sort_unstable();
    verts.dedup();
    let pos: HashMap<u32, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut dsu = Dsu::new(verts.len());
    for &(a, b) in edges {
        dsu.union(pos[&a], pos[&b]);
    }
    verts
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, dsu.find(i)))
        .collect()
}

/// Splits a set of edges into vertex-disjoint paths, each returned as its
/// vertex sequence starting from the smaller endpoint. `None` when the
/// edges contain a cycle or a vertex of degree above two.
fn arcs(edges: &[Pair]) -> Option<Vec<Vec<u32>>> {
    let mut adj: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for &(a, b) in edges {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    if adj.values().any(|n| n.len() > 2) {
        return None;
    }
    let mut visited: HashSet<u32> = HashSet::new();
    let mut out = Vec::new();
    for (&start, nb) in &adj {
        if nb.len() != 1 || visited.contains(&start) {
            continue;
        }
        let mut path = vec![start];
        visited.insert(start);
        let mut prev = start;
        let mut cur = nb[0];
        loop {
            path.push(cur);
            visited.insert(cur);
            let Some(&nxt) = adj[&cur].iter().find(|&&w| w != prev) else {
                break;
            };
            prev = cur;
            cur = nxt;
        }
        out.push(path);
    }
    // Any vertex not reached lies on a cycle.
    if visited.len() != adj.len() {
        return None;
    }
    Some(out)
}

/// Every way to close the arcs into one cycle using the new compiled vertices.
fn templates(arcs: &[Vec<u32>], new: &[usize]) -> Vec<Template> {
    let r = new.len();
    let mut out = Vec::new();
    if arcs.is_empty() {
        // A cycle of r new edges up to rotation (new[0] first) and
        // reflection (second element before the last).
        for perm in permutations(r - 1) {
            if r >= 3 && perm[0] > perm[r - 2] {
                continue;
            }
            let order: Vec<usize> = std::iter::once(new[0])
                .chain(perm.iter().map(|&i| new[i + 1]))
                .collect();
            let edges = (0..r)
                .map(|j| (Term::Slot(j), Term::Slot((j + 1) % r), order[j]))
                .collect();
            out.push(Template { edges, slots: r });
        }
        return out;
    }
    let t = arcs.len();
    // The first arc keeps its orientation; the others are permuted and flipped.
    for arc_perm in permutations(t - 1) {
        for flips in 0..1u32 << (t - 1) {
            let mut seq: Vec<(u32, u32)> = vec![(arcs[0][0], *arcs[0].last().unwrap())];
            for (i, &a) in arc_perm.iter().enumerate() {
                let arc = &arcs[a + 1];
                let (s, e) = (arc[0], *arc.last().unwrap());
                seq.push(if flips >> i & 1 == 1 { (e, s) } else { (s, e) });
            }
            for order in permutations(r) {
                for parts in compositions(r, t) {
                    let mut edges = Vec::with_capacity(r);
                    let mut slots = 0;
                    let mut idx = 0;
                    for (i, &len) in parts.iter().enumerate() {
                        let from = seq[i].1;
                        let to = seq[(i + 1) % t].0;
                        let mut prev = Term::Known(from);
                        for j in 0..len {
                            let nxt = if j + 1 == len {
                                Term::Known(to)
                            } else {
                                slots += 1;
                                Term::Slot(slots - 1)
                            };
                            edges.push((prev, nxt, new[order[idx]]));
                            idx += 1;
                            prev = nxt;
                        }
                    }
                    out.push(Template { edges, slots });
                }
            }
        }
    }
    out
}

/// All permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// Ordered ways to write `r` as a sum of `t` positive parts.
fn compositions(r: usize, t: usize) -> Vec<Vec<usize>> {
    fn go(r: usize, t: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if t == 1 {
            if r >= 1 {
                cur.push(r);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        for first in 1..r {
            cur.push(first);
            go(r - first, t - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(r, t, &mut Vec::new(), &mut out);
    out
}
