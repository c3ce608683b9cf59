//! Canonical forms and isomorphism testing for hypergraphs.
//!
//! The hypergraph is viewed as its bipartite incidence graph (one node per
//! vertex, one per edge). Colour refinement splits the nodes into an ordered
//! equitable partition; when vertex cells remain non-singleton we individualize
//! each member of the first smallest such cell in turn and recurse. Every leaf
//! yields a relabeling of the vertices, and the lexicographically least
//! relabeled edge list is the certificate. Leaves with equal certificates give
//! automorphisms, which are used to skip equivalent branches.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::hypergraph::{Edge, Hypergraph, VertexId};

/// Default upper bound on the number of vertices accepted by canonicalization.
pub const DEFAULT_VERTEX_CAP: usize = 64;

/// Generators beyond this many are dropped; pruning stays correct, only weaker.
const MAX_GENERATORS: usize = 256;

/// Isomorphism-invariant encoding of a hypergraph.
///
/// Two hypergraphs have equal forms iff they are isomorphic. The form is a
/// plain byte string, so it can key hash maps and be ordered.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    fn encode(n: usize, edges: &[Vec<u32>]) -> Self {
        let mut out = Vec::with_capacity(8 + edges.iter().map(|e| 4 + 4 * e.len()).sum::<usize>());
        out.extend_from_slice(&(n as u32).to_be_bytes());
        out.extend_from_slice(&(edges.len() as u32).to_be_bytes());
        for e in edges {
            out.extend_from_slice(&(e.len() as u32).to_be_bytes());
            for &v in e {
                out.extend_from_slice(&v.to_be_bytes());
            }
        }
        CanonicalForm(out)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    fn words(&self) -> impl Iterator<Item = u32> + '_ {
        self.0
            .chunks_exact(4)
            .map(|c| u32::from_be_bytes([c[0], c[1], c[2], c[3]]))
    }

    pub fn num_vertices(&self) -> usize {
        self.words().next().unwrap_or(0) as usize
    }

    pub fn num_edges(&self) -> usize {
        self.words().nth(1).unwrap_or(0) as usize
    }

    /// The canonical representative, with vertices `1..=n`.
    pub fn to_hypergraph(&self) -> Hypergraph {
        let mut w = self.words();
        let n = w.next().unwrap_or(0);
        let m = w.next().unwrap_or(0);
        let mut edges = Vec::with_capacity(m as usize);
        for _ in 0..m {
            let len = w.next().expect("truncated canonical form");
            let e: Vec<VertexId> = (0..len)
                .map(|_| w.next().expect("truncated canonical form") + 1)
                .collect();
            edges.push(Edge::new(e).expect("canonical form edge"));
        }
        Hypergraph::new(1..=n, edges).expect("canonical form decodes to a valid hypergraph")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h = self.to_hypergraph();
        write!(f, "CanonicalForm(n={}, edges={:?})", h.num_vertices(), h.edges())
    }
}

pub fn canonical_form(h: &Hypergraph) -> Result<CanonicalForm> {
    canonical_form_with_cap(h, DEFAULT_VERTEX_CAP)
}

pub fn canonical_form_with_cap(h: &Hypergraph, vertex_cap: usize) -> Result<CanonicalForm> {
    canonical_labeling_with_cap(h, vertex_cap).map(|(form, _)| form)
}

/// Canonical form together with the relabeling that produces it: vertex `v`
/// of `h` becomes vertex `map[v]` (1-based) of `form.to_hypergraph()`.
pub fn canonical_labeling(h: &Hypergraph) -> Result<(CanonicalForm, BTreeMap<VertexId, VertexId>)> {
    canonical_labeling_with_cap(h, DEFAULT_VERTEX_CAP)
}

pub fn canonical_labeling_with_cap(
    h: &Hypergraph,
    vertex_cap: usize,
) -> Result<(CanonicalForm, BTreeMap<VertexId, VertexId>)> {
    let n = h.num_vertices();
    if n > vertex_cap {
        return Err(Error::too_large("vertex count", n, vertex_cap));
    }
    let ids: Vec<VertexId> = h.vertices().iter().copied().collect();
    let index = h.dense_index();
    let edges: Vec<Vec<usize>> = h
        .edges()
        .iter()
        .map(|e| e.vertices().iter().map(|v| index[v]).collect())
        .collect();
    let mut search = Search::new(n, edges);
    search.run();
    let (cert, lab) = search.best.expect("search visits at least one leaf");
    let map = ids
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, lab[i] as VertexId + 1))
        .collect();
    Ok((CanonicalForm::encode(n, &cert), map))
}

pub fn is_isomorphic(h1: &Hypergraph, h2: &Hypergraph) -> Result<bool> {
    if h1.num_vertices() != h2.num_vertices() || h1.num_edges() != h2.num_edges() {
        return Ok(false);
    }
    if invariant_profile(h1) != invariant_profile(h2) {
        return Ok(false);
    }
    Ok(canonical_form(h1)? == canonical_form(h2)?)
}

/// Sorted vertex degrees and edge sizes.
fn invariant_profile(h: &Hypergraph) -> (Vec<usize>, Vec<usize>) {
    let index = h.dense_index();
    let mut deg = vec![0usize; h.num_vertices()];
    let mut sizes = Vec::with_capacity(h.num_edges());
    for e in h.edges() {
        sizes.push(e.len());
        for v in e.vertices() {
            deg[index[v]] += 1;
        }
    }
    deg.sort_unstable();
    sizes.sort_unstable();
    (deg, sizes)
}

type Labeling = Vec<usize>;
type Certificate = Vec<Vec<u32>>;

struct Search {
    n: usize,
    edges: Vec<Vec<usize>>,
    /// Incidence graph adjacency; nodes `0..n` are vertices, `n..` are edges.
    adj: Vec<Vec<usize>>,
    first: Option<(Certificate, Labeling)>,
    best: Option<(Certificate, Labeling)>,
    generators: Vec<Vec<usize>>,
}

impl Search {
    fn new(n: usize, edges: Vec<Vec<usize>>) -> Self {
        let mut adj = vec![Vec::new(); n + edges.len()];
        for (k, e) in edges.iter().enumerate() {
            for &v in e {
                adj[v].push(n + k);
                adj[n + k].push(v);
            }
        }
        Search {
            n,
            edges,
            adj,
            first: None,
            best: None,
            generators: Vec::new(),
        }
    }

    fn run(&mut self) {
        let n = self.n;
        let init: Vec<u64> = (0..self.adj.len())
            .map(|i| if i < n { 0 } else { 1 + self.adj[i].len() as u64 })
            .collect();
        let colours = self.refine(rank(&init));
        self.descend(colours, &mut Vec::new());
    }

    /// Iterated colour refinement to a stable partition. Colours are ranks,
    /// so cells keep their relative order and the result is canonical.
    fn refine(&self, mut colours: Vec<u32>) -> Vec<u32> {
        let mut cells = count_distinct(&colours);
        loop {
            let sigs: Vec<(u32, Vec<u32>)> = (0..self.adj.len())
                .map(|i| {
                    let mut nb: Vec<u32> = self.adj[i].iter().map(|&j| colours[j]).collect();
                    nb.sort_unstable();
                    (colours[i], nb)
                })
                .collect();
            let next = rank(&sigs);
            let next_cells = count_distinct(&next);
            colours = next;
            if next_cells == cells {
                return colours;
            }
            cells = next_cells;
        }
    }

    /// First smallest non-singleton vertex cell, by colour order.
    fn target_cell(&self, colours: &[u32]) -> Option<Vec<usize>> {
        let mut by_colour: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for v in 0..self.n {
            by_colour.entry(colours[v]).or_default().push(v);
        }
        by_colour
            .into_values()
            .filter(|c| c.len() > 1)
            .min_by_key(|c| c.len())
    }

    fn descend(&mut self, colours: Vec<u32>, prefix: &mut Vec<usize>) {
        let Some(cell) = self.target_cell(&colours) else {
            self.leaf(&colours);
            return;
        };
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if !explored.is_empty() && self.equivalent_to_explored(v, &explored, prefix) {
                continue;
            }
            explored.push(v);
            let keyed: Vec<(u32, bool)> = colours
                .iter()
                .enumerate()
                .map(|(i, &c)| (c, i != v))
                .collect();
            let child = self.refine(rank(&keyed));
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
        }
    }

    /// Whether `v` lies in the orbit of an explored vertex under the group
    /// generated by the known automorphisms that fix `prefix` pointwise.
    fn equivalent_to_explored(&self, v: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for g in &self.generators {
            if prefix.iter().any(|&p| g[p] != p) {
                continue;
            }
            for x in 0..self.n {
                let (a, b) = (find(&mut parent, x), find(&mut parent, g[x]));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&w| find(&mut parent, w) == rv)
    }

    fn leaf(&mut self, colours: &[u32]) {
        // Vertex colours are distinct here; their order gives the labeling.
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| colours[v]);
        let mut lab = vec![0usize; self.n];
        for (pos, &v) in order.iter().enumerate() {
            lab[v] = pos;
        }
        let mut cert: Certificate = self
            .edges
            .iter()
            .map(|e| {
                let mut r: Vec<u32> = e.iter().map(|&v| lab[v] as u32).collect();
                r.sort_unstable();
                r
            })
            .collect();
        cert.sort_unstable();

        for slot in [&self.first, &self.best] {
            if let Some((c, l)) = slot {
                if *c == cert && self.generators.len() < MAX_GENERATORS {
                    // v -> the vertex that the reference leaf puts at lab[v].
                    let mut inv = vec![0usize; self.n];
                    for (w, &p) in l.iter().enumerate() {
                        inv[p] = w;
                    }
                    let g: Vec<usize> = (0..self.n).map(|v| inv[lab[v]]).collect();
                    if g.iter().enumerate().any(|(i, &x)| i != x) {
                        self.generators.push(g);
                    }
                    break;
                }
            }
        }
        if self.first.is_none() {
            self.first = Some((cert.clone(), lab.clone()));
        }
        if self.best.as_ref().map_or(true, |(c, _)| cert < *c) {
            self.best = Some((cert, lab));
        }
    }
}

/// Replaces each key by its rank among the distinct keys.
fn rank<K: Ord>(keys: &[K]) -> Vec<u32> {
    let mut sorted: Vec<&K> = keys.iter().collect();
    sorted.sort_unstable();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(&k).unwrap() as u32)
        .collect()
}

fn count_distinct(colours: &[u32]) -> usize {
    let mut c = colours.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}
