//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Run with `cargo test -p parity-core --test acceptance`.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use parity_core::compile::compile_with_enumeration;
use parity_core::oracle::*;
use parity_core::rect::{rect_compile_with_stats, RectLayout};
use parity_core::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sets(vs: &[EdgeVector]) -> BTreeSet<BTreeSet<Edge>> {
    vs.iter().map(EdgeVector::to_edge_set).collect()
}

fn set_of(pairs: &[(u32, u32)]) -> BTreeSet<Edge> {
    edges(pairs).into_iter().collect()
}

fn two_squares_space() -> Outcome {
    let g = two_squares();
    ensure(dim_formula(&g) == 2, || format!("dim {}", dim_formula(&g)))?;
    let expected: BTreeSet<BTreeSet<Edge>> = [
        set_of(&[]),
        set_of(&[(1, 2), (2, 3), (3, 4), (1, 4)]),
        set_of(&[(1, 4), (3, 4), (3, 5), (1, 5)]),
        set_of(&[(1, 2), (2, 3), (3, 5), (1, 5)]),
    ]
    .into();
    let fast = sets(&enumerate_space(&cycle_basis(&g)).map_err(|e| e.to_string())?);
    let brute = sets(&brute_constraint_space(&g).map_err(|e| e.to_string())?);
    ensure(fast == expected, || format!("cycle space {fast:?}"))?;
    ensure(brute == expected, || format!("constraint space {brute:?}"))?;
    Ok("dim 2, four listed elements".into())
}

fn mixed_constraints() -> Outcome {
    let h = mixed_hypergraph();
    let index = EdgeIndex::of(&h);
    let e = |l: &[u32]| Edge::new(l.to_vec()).unwrap();
    let c1 = EdgeVector::from_edges(&index, &[e(&[2, 5]), e(&[1, 3]), e(&[1, 2, 4]), e(&[3, 4, 5])]).unwrap();
    let c2 = EdgeVector::from_edges(&index, &[e(&[1, 2]), e(&[2, 5]), e(&[1, 3]), e(&[3, 4, 5])]).unwrap();
    ensure(is_constraint(&h, &c1).unwrap(), || "C1 rejected".into())?;
    ensure(!is_constraint(&h, &c2).unwrap(), || "C2 accepted".into())?;
    let fast = sets(&enumerate_space(&constraint_space_basis(&h)).unwrap());
    let brute = sets(&brute_constraint_space(&h).unwrap());
    let expected = sets(&[EdgeVector::zero(&index), c1]);
    ensure(fast == expected && brute == expected, || format!("space {fast:?}"))?;
    Ok("C1 constraint, C2 not, space {0, C1}".into())
}

fn chorded_square_compilations() -> Outcome {
    let g = square_with_chord();
    let outer: &[(u32, u32)] = &[(1, 2), (2, 3), (3, 4), (1, 4)];
    let left: &[(u32, u32)] = &[(1, 2), (2, 4), (1, 4)];
    let right: &[(u32, u32)] = &[(2, 3), (3, 4), (2, 4)];
    let order = edges(&[(1, 2), (2, 3), (3, 4), (1, 4), (2, 4)]);
    let cases: [(&[&[(u32, u32)]], Hypergraph); 3] = [
        (&[outer, left], hyper(&[&[1, 2, 3, 4], &[1, 4, 5]])),
        (&[outer, right], hyper(&[&[1, 2, 3, 4], &[2, 3, 5]])),
        (&[left, right], hyper(&[&[1, 4, 5], &[2, 3, 5]])),
    ];
    for (cycles, want) in cases {
        let got = compile_with_enumeration(&g, &basis(&g, cycles), &order).map_err(|e| e.to_string())?;
        ensure(got.hypergraph() == &want, || format!("{:?} != {want:?}", got.hypergraph()))?;
    }
    let all = enumerate_bases(&cycle_basis(&g), 1000).map_err(|e| e.to_string())?;
    ensure(all.bases.len() == 3, || format!("{} bases", all.bases.len()))?;
    let set = compiled_set(&g, usize::MAX).map_err(|e| e.to_string())?;
    ensure(set.forms.len() == 2, || format!("{} classes", set.forms.len()))?;
    Ok("3 bases, tabulated compilations, 2 classes".into())
}

fn dimension_formula_and_equality() -> Outcome {
    let mut rng = StdRng::seed_from_u64(2024);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=10u32);
        let p: f64 = rng.gen_range(0.0..1.0);
        let mut pairs = Vec::new();
        for a in 1..=n {
            for b in a + 1..=n {
                if rng.gen_bool(p) {
                    pairs.push((a, b));
                }
            }
        }
        let g = Graph::new(1..=n, pairs).unwrap();
        let d = dim_formula(&g);
        let r = cycle_basis(&g).dim();
        let c = constraint_space_basis(&g).dim();
        ensure(d == r && d == c, || format!("{g:?}: formula {d}, cycle rank {r}, kernel {c}"))?;
    }
    let corpus = GraphCorpus::cached(7, 12).map_err(|e| e.to_string())?;
    for g in corpus.graphs() {
        let brute = sets(&brute_constraint_space(g).unwrap());
        let cycles = sets(&enumerate_space(&cycle_basis(g)).unwrap());
        ensure(brute == cycles, || format!("{g:?}: constraint and cycle spaces differ"))?;
    }
    Ok(format!("1000 random graphs; {} corpus graphs", corpus.len()))
}

fn nonisomorphic_par_equal_pairs() -> Outcome {
    let pairs = [
        (square_with_chord(), square_with_chord_and_pendant()),
        (kite_left(), kite_right()),
    ];
    for (a, b) in &pairs {
        ensure(!is_isomorphic(a, b).unwrap(), || format!("{a:?} ~ {b:?}"))?;
        ensure(par_equal(a, b, 10_000).map_err(|e| e.to_string())?, || format!("{a:?} vs {b:?} not par-equal"))?;
    }
    Ok("both pairs par-equal and non-isomorphic".into())
}

fn uniqueness_scan() -> Outcome {
    let corpus = GraphCorpus::cached(7, 7).map_err(|e| e.to_string())?;
    let report = brute_uniqueness_scan(2, &corpus).map_err(|e| e.to_string())?;
    ensure(report.violations.is_empty(), || format!("violations {:?}", report.violations))?;
    ensure(report.graphs_scanned > 0, || "nothing scanned".into())?;
    Ok(format!("{} graphs, 0 violations", report.graphs_scanned))
}

fn non_uniqueness_examples() -> Outcome {
    let chain = plaquette_chain();
    let pre = preimage(&chain, &SearchOptions::default()).map_err(|e| e.to_string())?;
    let degrees: BTreeSet<usize> = pre.graphs.iter().map(|f| max_degree(&f.to_hypergraph())).collect();
    ensure(pre.graphs.len() >= 2, || format!("{} classes", pre.graphs.len()))?;
    ensure(degrees.contains(&4) && degrees.iter().any(|&d| d <= 3), || format!("max degrees {degrees:?}"))?;

    let strip = bent_strip();
    let (low, high) = (bent_strip_low(), bent_strip_high());
    ensure(is_loop_labeling(&strip, &low) && is_loop_labeling(&strip, &high), || "labeling rejected".into())?;
    let gl = induced_graph(&strip, &low).unwrap();
    let gh = induced_graph(&strip, &high).unwrap();
    ensure(max_degree(&gh) == 6 && max_degree(&gl) <= 5, || "degree profile".into())?;
    ensure(!is_isomorphic(&gl, &gh).unwrap(), || "induced graphs isomorphic".into())?;
    Ok(format!("chain: {} classes, max degrees {degrees:?}; strip: 6 vs {}", pre.graphs.len(), max_degree(&gl)))
}

fn rectangular_layouts() -> Outcome {
    for m in 2..=6u32 {
        for n in m..=6 {
            let g = kmn(m, n);
            let rc = rect_compile(&g).map_err(|e| e.to_string())?.ok_or(format!("K_{{{m},{n}}} refused"))?;
            ensure((rc.layout.m, rc.layout.n) == (m as usize, n as usize), || format!("K_{{{m},{n}}} dims"))?;
            let l = is_rect_layout(rc.compiled.hypergraph()).ok_or(format!("K_{{{m},{n}}} not a layout"))?;
            ensure((l.m, l.n) == (m as usize, n as usize), || format!("K_{{{m},{n}}} layout dims"))?;
        }
    }
    for m in 2..=4 {
        for n in 2..=4 {
            let h = RectLayout::standard(m, n).to_hypergraph();
            let pre = preimage(&h, &SearchOptions::default()).map_err(|e| e.to_string())?;
            let want = BTreeSet::from([canonical_form(&kmn(m as u32, n as u32)).unwrap()]);
            ensure(pre.exhaustive && pre.graphs == want, || format!("{m}x{n}: {} classes", pre.graphs.len()))?;
        }
    }
    Ok("K_{m,n} for 2<=m<=n<=6; singleton preimages up to 4x4".into())
}

fn rect_complexity() -> Outcome {
    let ratio = |k: u32| -> Result<(f64, Duration), String> {
        let g = kmn(k, k);
        let start = Instant::now();
        let (rc, ops) = rect_compile_with_stats(&g).map_err(|e| e.to_string())?;
        let t = start.elapsed();
        rc.ok_or(format!("K_{{{k},{k}}} refused"))?;
        Ok((ops as f64 / (g.num_vertices() * g.num_edges()) as f64, t))
    };
    let (base, _) = ratio(10)?;
    let mut worst: f64 = 0.0;
    for k in (10..=40).step_by(5) {
        let (r, _) = ratio(k)?;
        worst = worst.max(r / base);
        ensure(r <= 2.0 * base, || format!("K_{{{k},{k}}}: ratio {r:.3} vs {base:.3}"))?;
    }
    let (_, t40) = ratio(40)?;
    ensure(t40 < Duration::from_secs(1), || format!("K_{{40,40}} took {t40:?}"))?;
    Ok(format!("K_{{40,40}} in {t40:.2?}; max ratio growth {worst:.2}"))
}

fn oracle_consistency() -> Outcome {
    let mut checks = 0usize;
    let small = GraphCorpus::cached(6, 9).map_err(|e| e.to_string())?;
    for g in small.graphs() {
        let fast = sets(&enumerate_space(&constraint_space_basis(g)).unwrap());
        ensure(fast == sets(&brute_constraint_space(g).unwrap()), || format!("constraint space {g:?}"))?;
        checks += 1;
    }
    let mut rng = StdRng::seed_from_u64(99);
    for _ in 0..300 {
        let n = rng.gen_range(3..=7u32);
        let lists: Vec<Vec<u32>> = (0..rng.gen_range(1..=10))
            .map(|_| {
                let k = rng.gen_range(1..=4);
                (0..k).map(|_| rng.gen_range(1..=n)).collect()
            })
            .collect();
        let Ok(h) = Hypergraph::from_lists(lists) else { continue };
        let fast = sets(&enumerate_space(&constraint_space_basis(&h)).unwrap());
        ensure(fast == sets(&brute_constraint_space(&h).unwrap()), || format!("constraint space {h:?}"))?;
        checks += 1;
    }
    let wide = GraphCorpus::cached(7, 12).map_err(|e| e.to_string())?;
    for g in wide.graphs() {
        let fast = is_complete_bipartite(g).map(|(a, b)| (a.len(), b.len()));
        ensure(fast == brute_complete_bipartite(g).unwrap(), || format!("bipartite {g:?}"))?;
        checks += 1;
    }
    let pre_corpus = GraphCorpus::cached(7, 6).map_err(|e| e.to_string())?;
    for g in pre_corpus.graphs().iter().filter(|g| has_connected_cycle_space(g)) {
        let p = compile(g, &cycle_basis(g)).unwrap();
        let fast: BTreeSet<CanonicalForm> = preimage(&p, &SearchOptions::default())
            .map_err(|e| e.to_string())?
            .graphs
            .into_iter()
            .filter(|f| has_connected_cycle_space(&Graph::try_from(f.to_hypergraph()).unwrap()))
            .collect();
        let brute = brute_preimage_in(&p, &pre_corpus).map_err(|e| e.to_string())?;
        ensure(fast == brute, || format!("preimage {g:?}"))?;
        checks += 1;
    }
    Ok(format!("{checks} comparisons, 0 mismatches"))
}

fn main() -> ExitCode {
    let criteria: [(&str, &str, Duration, fn() -> Outcome); 10] = [
        ("1", "two-square cycle space", Duration::from_secs(1), two_squares_space),
        ("2", "mixed hypergraph constraints", Duration::from_secs(1), mixed_constraints),
        ("3", "chorded square compilations", Duration::from_secs(1), chorded_square_compilations),
        ("4", "dimension formula and C = L", Duration::from_secs(60), dimension_formula_and_equality),
        ("5", "non-isomorphic par-equal pairs", Duration::from_secs(5), nonisomorphic_par_equal_pairs),
        ("6", "uniqueness for dimensions 1 and 2", Duration::from_secs(600), uniqueness_scan),
        ("7", "non-uniqueness for plaquette layouts", Duration::from_secs(120), non_uniqueness_examples),
        ("8", "rectangular layouts", Duration::from_secs(300), rectangular_layouts),
        ("9", "rectangular compiler complexity", Duration::from_secs(60), rect_complexity),
        ("10", "oracle consistency", Duration::from_secs(600), oracle_consistency),
    ];
    let mut failed = 0;
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panic: {msg}"))
        });
        let took = start.elapsed();
        let outcome = outcome.and_then(|detail| {
            if took <= limit {
                Ok(detail)
            } else {
                Err(format!("took {took:.2?}, limit {limit:?}"))
            }
        });
        match outcome {
            Ok(detail) => println!("PASS criterion {id}: {name} ({took:.2?}) {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {id}: {name} ({took:.2?}) {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
