//! Optimized routines against their brute-force counterparts.

mod common;

use std::collections::BTreeSet;

use common::*;
use parity_core::oracle::*;
use parity_core::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

fn as_sets(vs: &[EdgeVector]) -> BTreeSet<BTreeSet<Edge>> {
    vs.iter().map(EdgeVector::to_edge_set).collect()
}

fn shuffled_ids(g: &Graph, rng: &mut StdRng) -> Graph {
    let mut targets: Vec<u32> = (1..=40).collect();
    targets.shuffle(rng);
    let map = g.vertices().iter().copied().zip(targets).collect();
    g.relabel(&map).unwrap()
}

#[test]
fn constraint_space_matches_brute_force_on_graphs() {
    let corpus = GraphCorpus::build(6, 9).unwrap();
    for g in corpus.graphs() {
        let brute = as_sets(&brute_constraint_space(g).unwrap());
        let fast = as_sets(&enumerate_space(&constraint_space_basis(g)).unwrap());
        let cycles = as_sets(&enumerate_space(&cycle_basis(g)).unwrap());
        assert_eq!(brute, fast, "{g:?}");
        assert_eq!(brute, cycles, "{g:?}");
    }
}

#[test]
fn constraint_space_matches_brute_force_on_hypergraphs() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..300 {
        let n = rng.gen_range(2..=7u32);
        let m = rng.gen_range(1..=10);
        let mut edges = BTreeSet::new();
        for _ in 0..m {
            let k = rng.gen_range(1..=n.min(4));
            let mut vs: Vec<u32> = (1..=n).collect();
            vs.shuffle(&mut rng);
            edges.insert(Edge::new(vs[..k as usize].to_vec()).unwrap());
        }
        let h = Hypergraph::from_edges(edges).unwrap();
        let brute = as_sets(&brute_constraint_space(&h).unwrap());
        let fast = as_sets(&enumerate_space(&constraint_space_basis(&h)).unwrap());
        assert_eq!(brute, fast, "{h:?}");
    }
}

#[test]
fn restriction_matches_brute_force() {
    let corpus = GraphCorpus::build(7, 9).unwrap();
    for g in corpus.graphs() {
        let r = cycle_edge_restriction(g);
        assert_eq!(r.edges().iter().cloned().collect::<BTreeSet<_>>(), brute_cycle_edges(g).unwrap());
    }
}

#[test]
fn bipartite_completeness_matches_brute_force() {
    let corpus = GraphCorpus::build(7, 12).unwrap();
    let mut hits = 0;
    for g in corpus.graphs() {
        let fast = is_complete_bipartite(g).map(|(a, b)| (a.len(), b.len()));
        assert_eq!(fast, brute_complete_bipartite(g).unwrap(), "{g:?}");
        hits += fast.is_some() as usize;
    }
    // K_{1,1..6}, K_{2,2..5}, K_{3,3..4}.
    assert_eq!(hits, 6 + 4 + 2);
}

#[test]
fn canonical_isomorphism_matches_brute_force() {
    let corpus = GraphCorpus::build(6, 7).unwrap();
    let mut rng = StdRng::seed_from_u64(11);
    let graphs = corpus.graphs();
    for _ in 0..400 {
        let a = graphs.choose(&mut rng).unwrap();
        let b = if rng.gen_bool(0.5) {
            shuffled_ids(a, &mut rng)
        } else {
            graphs.choose(&mut rng).unwrap().clone()
        };
        assert_eq!(
            is_isomorphic(a, &b).unwrap(),
            brute_isomorphic(a, &b).unwrap(),
            "{a:?} {b:?}"
        );
    }
    // Corpus members are pairwise non-isomorphic.
    for (i, a) in graphs.iter().enumerate().take(60) {
        for b in &graphs[i + 1..] {
            if a.num_vertices() == b.num_vertices() && a.num_edges() == b.num_edges() {
                assert!(!brute_isomorphic(a, b).unwrap(), "{a:?} {b:?}");
            }
        }
    }
}

#[test]
fn preimage_matches_brute_force() {
    let corpus = GraphCorpus::build(7, 6).unwrap();
    let connected = |f: &CanonicalForm| has_connected_cycle_space(&Graph::try_from(f.to_hypergraph()).unwrap());
    let mut checked = 0;
    for g in corpus.graphs().iter().filter(|g| has_connected_cycle_space(g)) {
        let p = compile(g, &cycle_basis(g)).unwrap();
        let fast = preimage(&p, &SearchOptions::default()).unwrap();
        assert!(fast.exhaustive);
        let fast: BTreeSet<CanonicalForm> = fast.graphs.into_iter().filter(connected).collect();
        let brute = brute_preimage_in(&p, &corpus).unwrap();
        assert_eq!(fast, brute, "{g:?}");
        assert!(brute.contains(&canonical_form(g).unwrap()));
        checked += 1;
    }
    assert!(checked > 0);
}

#[test]
fn small_layout_preimages_by_corpus_scan() {
    let tri = compile(&Graph::cycle(3), &cycle_basis(&Graph::cycle(3))).unwrap();
    assert_eq!(
        brute_preimage(&tri, 5).unwrap(),
        BTreeSet::from([canonical_form(&Graph::cycle(3)).unwrap()])
    );
    let square = parity_core::rect::RectLayout::standard(2, 2).to_hypergraph();
    assert_eq!(
        brute_preimage(&square, 5).unwrap(),
        BTreeSet::from([canonical_form(&kmn(2, 2)).unwrap()])
    );
}

#[test]
fn plaquette_chain_brute_preimage() {
    let p = plaquette_chain();
    let brute = brute_preimage(&p, 8).unwrap();
    assert!(brute.len() >= 2);
    let fast = preimage(&p, &SearchOptions::default()).unwrap();
    for f in &brute {
        assert!(fast.graphs.contains(f));
    }
}

#[test]
fn every_basis_is_recovered_by_a_labeling() {
    let corpus = GraphCorpus::build(6, 7).unwrap();
    let (mut supported, mut unsupported) = (0, 0);
    for g in corpus.graphs().iter().filter(|g| has_connected_cycle_space(g)) {
        let target = canonical_form(g).unwrap();
        let all = enumerate_bases(&cycle_basis(g), usize::MAX).unwrap();
        for b in all.bases.iter().filter(|b| b.is_weakly_fundamental()) {
            let p = compile(g, b).unwrap();
            let found = match search_labelings(&p, &SearchOptions::default()) {
                // Nested edges, e.g. a bowtie compiled from {T1, T1 + T2},
                // need non-simple cycles and are out of the search's scope.
                Err(Error::Unsupported(_)) => {
                    assert!(!b.is_fundamental(), "{g:?} {b:?}");
                    unsupported += 1;
                    continue;
                }
                r => r.unwrap(),
            };
            supported += 1;
            assert!(found.exhaustive);
            assert!(
                found
                    .labelings
                    .iter()
                    .any(|l| canonical_form(&induced_graph(p.hypergraph(), l).unwrap()).unwrap() == target),
                "{g:?} {b:?}"
            );
        }
    }
    assert!(supported > 2 * unsupported);
}

#[test]
fn uniqueness_scan_at_small_dimensions() {
    let corpus = GraphCorpus::build(7, 7).unwrap();
    let report = brute_uniqueness_scan(2, &corpus).unwrap();
    // Cycles of length 3..7, six theta graphs and two figure-eights.
    assert_eq!(report.graphs_scanned, 5 + 6 + 2);
    assert!(report.violations.is_empty());
    assert!(report.witnesses.is_empty());
}

#[test]
fn uniqueness_fails_at_dimension_three() {
    let corpus = GraphCorpus::build(7, 9).unwrap();
    let report = brute_uniqueness_scan(3, &corpus).unwrap();
    assert!(report.violations.is_empty());
    assert!(!report.witnesses.is_empty());
    for (a, b) in &report.witnesses {
        assert_eq!(dim_formula(a), 3);
        assert!(!brute_isomorphic(a, b).unwrap());
        assert!(par_equal(a, b, usize::MAX).unwrap());
    }
}
