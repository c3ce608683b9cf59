//! Brute-force reference implementations for small instances.
//!
//! Everything here is deliberately naive: exhaustive subset scans, vertex
//! permutations and a corpus of all small graphs. The optimized routines in
//! the other modules are tested against these.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::canon::{canonical_form, CanonicalForm};
use crate::compile::{compiled_set, CompiledSet};
use crate::error::{Error, Result};
use crate::gf2::{dim_formula, EdgeIndex, EdgeVector};
use crate::hypergraph::{Edge, Graph, Hypergraph, VertexId};
use crate::rect::cycle_edge_restriction;

pub const MAX_BRUTE_EDGES: usize = 20;
pub const MAX_BRUTE_VERTICES: usize = 10;
pub const MAX_CORPUS_VERTICES: usize = 10;

/// Every subset of edges in which each vertex has even degree, in subset
/// order (bit `j` of the counter selects edge `j`).
pub fn brute_constraint_space(h: &Hypergraph) -> Result<Vec<EdgeVector>> {
    let m = h.num_edges();
    if m > MAX_BRUTE_EDGES {
        return Err(Error::too_large("edge count", m, MAX_BRUTE_EDGES));
    }
    let index = EdgeIndex::of(h);
    let vertex_pos: BTreeMap<VertexId, usize> =
        h.vertices().iter().enumerate().map(|(i, &v)| (v, i)).collect();
    // Incidence of each edge as a bitmask over vertices (as u128 chunks).
    let words = h.num_vertices().div_ceil(128).max(1);
    let incidence: Vec<Vec<u128>> = index
        .edges()
        .iter()
        .map(|e| {
            let mut w = vec![0u128; words];
            for v in e.vertices() {
                let p = vertex_pos[v];
                w[p / 128] ^= 1 << (p % 128);
            }
            w
        })
        .collect();
    let out: Vec<EdgeVector> = (0u64..1 << m)
        .into_par_iter()
        .filter_map(|mask| {
            let mut parity = vec![0u128; words];
            for (j, inc) in incidence.iter().enumerate() {
                if mask >> j & 1 == 1 {
                    for (p, w) in parity.iter_mut().zip(inc) {
                        *p ^= w;
                    }
                }
            }
            parity
                .iter()
                .all(|&w| w == 0)
                .then(|| EdgeVector::from_positions(&index, (0..m).filter(|j| mask >> j & 1 == 1)))
        })
        .collect();
    Ok(out)
}

/// Edges contained in some nonzero even subset, by exhaustive scan.
pub fn brute_cycle_edges(g: &Graph) -> Result<BTreeSet<Edge>> {
    let mut out = BTreeSet::new();
    for c in brute_constraint_space(g)? {
        out.extend(c.edges().cloned());
    }
    Ok(out)
}

/// Isomorphism by trying vertex bijections, pruned only by degree.
pub fn brute_isomorphic(h1: &Hypergraph, h2: &Hypergraph) -> Result<bool> {
    let n = h1.num_vertices();
    if n > MAX_BRUTE_VERTICES {
        return Err(Error::too_large("vertex count", n, MAX_BRUTE_VERTICES));
    }
    if n != h2.num_vertices() || h1.num_edges() != h2.num_edges() {
        return Ok(false);
    }
    let a: Vec<VertexId> = h1.vertices().iter().copied().collect();
    let b: Vec<VertexId> = h2.vertices().iter().copied().collect();
    let mut map = BTreeMap::new();
    let mut used = vec![false; n];
    Ok(extend_bijection(h1, h2, &a, &b, &mut map, &mut used))
}

fn extend_bijection(
    h1: &Hypergraph,
    h2: &Hypergraph,
    a: &[VertexId],
    b: &[VertexId],
    map: &mut BTreeMap<VertexId, VertexId>,
    used: &mut [bool],
) -> bool {
    let k = map.len();
    if k == a.len() {
        return h1.relabel(map).map(|r| r.edges() == h2.edges()).unwrap_or(false);
    }
    for j in 0..b.len() {
        if used[j] || h1.degree(a[k]) != h2.degree(b[j]) {
            continue;
        }
        used[j] = true;
        map.insert(a[k], b[j]);
        if extend_bijection(h1, h2, a, b, map, used) {
            return true;
        }
        map.remove(&a[k]);
        used[j] = false;
    }
    false
}

/// Part sizes `(m, n)`, `m <= n`, if `g` is complete bipartite, found by
/// trying every two-colouring.
pub fn brute_complete_bipartite(g: &Graph) -> Result<Option<(usize, usize)>> {
    let vs: Vec<VertexId> = g.vertices().iter().copied().collect();
    let n = vs.len();
    if n > MAX_BRUTE_EDGES {
        return Err(Error::too_large("vertex count", n, MAX_BRUTE_EDGES));
    }
    if n < 2 {
        return Ok(None);
    }
    // The first vertex always sits on side 0.
    for mask in (0u32..1 << n).step_by(2) {
        let side = |i: usize| mask >> i & 1;
        let ones = mask.count_ones() as usize;
        if ones == 0 {
            continue;
        }
        let mut expected = BTreeSet::new();
        for i in 0..n {
            for j in i + 1..n {
                if side(i) != side(j) {
                    expected.insert(Edge::pair(vs[i], vs[j]).expect("distinct"));
                }
            }
        }
        if &expected == g.edges() {
            let (x, y) = (n - ones, ones);
            return Ok(Some((x.min(y), x.max(y))));
        }
    }
    Ok(None)
}

/// Whether every edge of `g` lies on a cycle and those edges form a single
/// connected piece.
pub fn has_connected_cycle_space(g: &Graph) -> bool {
    g.num_edges() > 0
        && g.num_components() == 1
        && g.covered_vertices().len() == g.num_vertices()
        && cycle_edge_restriction(g) == *g
}

/// All pairwise non-isomorphic graphs without isolated vertices, with at
/// least one and at most `e_max` edges and at most `v_max` vertices.
/// Members use vertex ids `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphCorpus {
    v_max: usize,
    e_max: usize,
    graphs: Vec<Graph>,
}

impl GraphCorpus {
    /// Generates the corpus by adding one edge at a time and keeping one
    /// representative per canonical form.
    pub fn build(v_max: usize, e_max: usize) -> Result<Self> {
        if v_max > MAX_CORPUS_VERTICES {
            return Err(Error::too_large("corpus vertex bound", v_max, MAX_CORPUS_VERTICES));
        }
        let mut graphs = Vec::new();
        let mut level: Vec<Graph> = vec![Graph::default()];
        for _ in 0..e_max {
            let candidates: Vec<(CanonicalForm, Graph)> = level
                .par_iter()
                .flat_map_iter(|g| extensions(g, v_max))
                .map(|g| {
                    let f = canonical_form(&g).expect("within vertex cap");
                    (f, g)
                })
                .collect();
            let mut next: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
            for (f, _) in candidates {
                next.entry(f.clone()).or_insert_with(|| {
                    Graph::try_from(f.to_hypergraph()).expect("canonical form of a graph")
                });
            }
            level = next.into_values().collect();
            if level.is_empty() {
                break;
            }
            graphs.extend(level.iter().cloned());
        }
        Ok(GraphCorpus {
            v_max,
            e_max,
            graphs,
        })
    }

    /// Loads the corpus for these bounds from the cache directory, building
    /// and saving it on a miss. The directory is `$PARITY_CORPUS_DIR` or a
    /// subdirectory of the system temp dir.
    pub fn cached(v_max: usize, e_max: usize) -> Result<Self> {
        let dir = std::env::var_os("PARITY_CORPUS_DIR")
            .map(PathBuf::from)
            .unwrap_or_else(|| std::env::temp_dir().join("parity-corpus"));
        Self::cached_in(&dir, v_max, e_max)
    }

    pub fn cached_in(dir: &Path, v_max: usize, e_max: usize) -> Result<Self> {
        let path = dir.join(format!("corpus-v{v_max}-e{e_max}.jsonl"));
        if let Ok(c) = Self::load(&path, v_max, e_max) {
            return Ok(c);
        }
        let corpus = Self::build(v_max, e_max)?;
        // A failed write only costs a rebuild next time.
        let _ = fs::create_dir_all(dir).and_then(|_| corpus.save(&path));
        Ok(corpus)
    }

    /// Reads one graph JSON per line.
    pub fn load(path: &Path, v_max: usize, e_max: usize) -> Result<Self> {
        let file = fs::File::open(path).map_err(|e| Error::invalid(format!("{}: {e}", path.display())))?;
        let mut graphs = Vec::new();
        for line in BufReader::new(file).lines() {
            let line = line.map_err(|e| Error::invalid(e.to_string()))?;
            if line.trim().is_empty() {
                continue;
            }
            let g: Graph = serde_json::from_str(&line).map_err(|e| Error::invalid(e.to_string()))?;
            if g.num_vertices() > v_max || g.num_edges() > e_max {
                return Err(Error::invalid("cached graph exceeds corpus bounds"));
            }
            graphs.push(g);
        }
        Ok(GraphCorpus {
            v_max,
            e_max,
            graphs,
        })
    }

    /// Writes one graph JSON per line, via a temporary file and a rename.
    pub fn save(&self, path: &Path) -> std::io::Result<()> {
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        {
            let mut out = std::io::BufWriter::new(fs::File::create(&tmp)?);
            for g in &self.graphs {
                serde_json::to_writer(&mut out, g)?;
                out.write_all(b"\n")?;
            }
            out.flush()?;
        }
        fs::rename(tmp, path)
    }

    pub fn graphs(&self) -> &[Graph] {
        &self.graphs
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn v_max(&self) -> usize {
        self.v_max
    }

    pub fn e_max(&self) -> usize {
        self.e_max
    }
}

/// Graphs obtained from `g` by adding one edge, possibly on new vertices.
fn extensions(g: &Graph, v_max: usize) -> Vec<Graph> {
    let n = g.num_vertices() as VertexId;
    let mut out = Vec::new();
    let mut push = |a: VertexId, b: VertexId| {
        let e = Edge::pair(a, b).expect("distinct");
        if g.contains_edge(&e) {
            return;
        }
        let mut edges = g.edges().clone();
        edges.insert(e);
        let h = Hypergraph::from_edges(edges).expect("valid edges");
        out.push(Graph::try_from(h).expect("pairs only"));
    };
    for a in 1..=n {
        for b in a + 1..=n {
            push(a, b);
        }
    }
    if (n as usize) < v_max {
        for a in 1..=n {
            push(a, n + 1);
        }
    }
    if (n as usize) + 2 <= v_max {
        push(n + 1, n + 2);
    }
    out
}

/// Corpus members with a connected cycle space whose compiled set contains
/// the class of `p`. Builds (or loads) the corpus with `e_max = |V_p|`.
pub fn brute_preimage<H: AsRef<Hypergraph> + ?Sized>(p: &H, v_max: usize) -> Result<BTreeSet<CanonicalForm>> {
    let corpus = GraphCorpus::cached(v_max, p.as_ref().num_vertices())?;
    brute_preimage_in(p, &corpus)
}

pub fn brute_preimage_in<H: AsRef<Hypergraph> + ?Sized>(
    p: &H,
    corpus: &GraphCorpus,
) -> Result<BTreeSet<CanonicalForm>> {
    let h = p.as_ref();
    let target = canonical_form(h)?;
    let (m, dim) = (h.num_vertices(), h.num_edges());
    let hits = corpus
        .graphs()
        .par_iter()
        .filter(|g| g.num_edges() == m && dim_formula(g) == dim && has_connected_cycle_space(g))
        .map(|g| -> Result<Option<CanonicalForm>> {
            let set = compiled_set(g, usize::MAX)?;
            Ok(set.forms.contains(&target).then(|| canonical_form(g)).transpose()?)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(hits.into_iter().flatten().collect())
}

/// Findings of [`brute_uniqueness_scan`]. Pairs are non-isomorphic corpus
/// graphs with identical compiled sets.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UniquenessReport {
    /// Graphs with a connected cycle space and dimension within the limit.
    pub graphs_scanned: usize,
    /// Collisions at dimension 1 or 2.
    pub violations: Vec<(Graph, Graph)>,
    /// Collisions at dimension 3 and above.
    pub witnesses: Vec<(Graph, Graph)>,
}

/// Buckets corpus graphs with a connected cycle space of dimension at most
/// `dim_limit` by their full compiled set and reports every bucket holding
/// more than one graph.
pub fn brute_uniqueness_scan(dim_limit: usize, corpus: &GraphCorpus) -> Result<UniquenessReport> {
    let eligible: Vec<&Graph> = corpus
        .graphs()
        .iter()
        .filter(|g| has_connected_cycle_space(g) && dim_formula(g) <= dim_limit)
        .collect();
    let sets = eligible
        .par_iter()
        .map(|g| {
            let set = compiled_set(g, usize::MAX)?;
            if !set.exhaustive {
                return Err(Error::Unsupported("compiled set enumeration was not exhaustive".into()));
            }
            Ok(set)
        })
        .collect::<Result<Vec<CompiledSet>>>()?;
    let mut buckets: BTreeMap<BTreeSet<CanonicalForm>, Vec<usize>> = BTreeMap::new();
    for (k, s) in sets.into_iter().enumerate() {
        buckets.entry(s.forms).or_default().push(k);
    }
    let mut report = UniquenessReport {
        graphs_scanned: eligible.len(),
        ..Default::default()
    };
    for members in buckets.values() {
        for (x, &i) in members.iter().enumerate() {
            for &j in &members[x + 1..] {
                let pair = (eligible[i].clone(), eligible[j].clone());
                if dim_formula(eligible[i]) <= 2 {
                    report.violations.push(pair);
                } else {
                    report.witnesses.push(pair);
                }
            }
        }
    }
    Ok(report)
}
