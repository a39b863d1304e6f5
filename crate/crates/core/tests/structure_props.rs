mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use lpa_core::graph::named;
use lpa_core::paths::{condition_l, enumerate_csp, exitless_cycle, find_exit, is_csp};
use lpa_core::random::{random_graph, relabel, rng};
use lpa_core::structure::{condition_i, enumerate_hs, hs_closure, is_simple, quotient_graph, HSubset};
use lpa_core::{Field, Graph, LeavittAlgebra, VertexId};

use common::every_cycle_has_exit;

fn hereditary_by_definition(g: &Graph, set: &BTreeSet<VertexId>) -> bool {
    g.edges().all(|e| !set.contains(&g.source(e)) || set.contains(&g.range(e)))
}

fn saturated_by_definition(g: &Graph, set: &BTreeSet<VertexId>) -> bool {
    g.vertices().all(|v| {
        g.is_sink(v) || set.contains(&v) || !g.out_edges(v).iter().all(|&e| set.contains(&g.range(e)))
    })
}

fn all_subsets(g: &Graph) -> impl Iterator<Item = BTreeSet<VertexId>> + '_ {
    let n = g.vertex_count();
    (0u32..1 << n).map(move |mask| (0..n as u32).filter(|i| mask >> i & 1 == 1).map(VertexId).collect())
}

fn seed_set(g: &Graph, mask: u32) -> BTreeSet<VertexId> {
    g.vertices().filter(|v| mask >> v.0 & 1 == 1).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn closure_is_a_closure_operator(seed in any::<u64>(), m1 in any::<u32>(), m2 in any::<u32>()) {
        let g = random_graph(&mut rng(seed), 8);
        let a = seed_set(&g, m1);
        let b: BTreeSet<VertexId> = a.union(&seed_set(&g, m2)).copied().collect();
        let ca = hs_closure(&g, a.iter().copied()).unwrap();
        let cb = hs_closure(&g, b.iter().copied()).unwrap();
        prop_assert!(a.is_subset(ca.vertices()));
        prop_assert!(ca.vertices().is_subset(cb.vertices()));
        let cca = hs_closure(&g, ca.vertices().iter().copied()).unwrap();
        prop_assert_eq!(&cca, &ca);
        prop_assert!(hereditary_by_definition(&g, ca.vertices()));
        prop_assert!(saturated_by_definition(&g, ca.vertices()));
        prop_assert!(ca.is_hereditary() && ca.is_saturated());
    }

    #[test]
    fn closure_is_smallest(seed in any::<u64>(), m in any::<u32>()) {
        let g = random_graph(&mut rng(seed), 6);
        let s = seed_set(&g, m);
        let c = hs_closure(&g, s.iter().copied()).unwrap();
        for t in all_subsets(&g) {
            if s.is_subset(&t) && hereditary_by_definition(&g, &t) && saturated_by_definition(&g, &t) {
                prop_assert!(c.vertices().is_subset(&t));
            }
        }
    }

    #[test]
    fn simplicity_is_invariant_under_relabeling(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, 6);
        let h = relabel(&mut r, &g);
        let sizes = |g: &Graph| {
            let mut v: Vec<usize> = enumerate_hs(g).unwrap().iter().map(|h| h.len()).collect();
            v.sort();
            v
        };
        prop_assert_eq!(sizes(&g), sizes(&h));
        let a = is_simple(&LeavittAlgebra::new(g, Field::Rationals));
        let b = is_simple(&LeavittAlgebra::new(h, Field::Rationals));
        prop_assert_eq!(a.simple, b.simple);
        prop_assert_eq!(a.condition_l.holds, b.condition_l.holds);
        prop_assert_eq!(a.condition_i.holds, b.condition_i.holds);
    }

    #[test]
    fn quotients_by_closures_are_valid(seed in any::<u64>()) {
        let g = random_graph(&mut rng(seed), 6);
        if let Some(h) = condition_i(&g).witness {
            let f = quotient_graph(&g, &h).unwrap();
            prop_assert_eq!(f.vertex_count(), g.vertex_count() - h.len());
            let reload = Graph::from_json(&f.to_json()).unwrap();
            prop_assert_eq!(reload, f);
        }
    }
}

#[test]
fn enumeration_matches_definitions() {
    let mut r = rng(41);
    for _ in 0..500 {
        let g = random_graph(&mut r, 8);
        let brute: Vec<BTreeSet<VertexId>> = all_subsets(&g)
            .filter(|s| hereditary_by_definition(&g, s) && saturated_by_definition(&g, s))
            .collect();
        let listed: BTreeSet<BTreeSet<VertexId>> = enumerate_hs(&g).unwrap().iter().map(|h| h.vertices().clone()).collect();
        assert_eq!(listed, brute.iter().cloned().collect(), "{g:?}");
        let only_trivial = brute.len() == 2 || g.vertex_count() == 0;
        let ci = condition_i(&g);
        assert_eq!(ci.holds, only_trivial, "{g:?}");
        if let Some(w) = ci.witness {
            assert!(!w.is_empty() && w.len() < g.vertex_count());
            assert!(hereditary_by_definition(&g, w.vertices()) && saturated_by_definition(&g, w.vertices()));
        }
    }
}

#[test]
fn subset_flags_follow_definitions() {
    let mut r = rng(5);
    for _ in 0..100 {
        let g = random_graph(&mut r, 6);
        for s in all_subsets(&g) {
            let h = HSubset::new(&g, s.iter().copied()).unwrap();
            assert_eq!(h.is_hereditary(), hereditary_by_definition(&g, &s));
            assert_eq!(h.is_saturated(), saturated_by_definition(&g, &s));
        }
    }
}

#[test]
fn exit_conditions_agree_at_bounded_length() {
    let mut r = rng(13);
    for _ in 0..400 {
        let g = random_graph(&mut r, 6);
        let cl = condition_l(&g);
        assert_eq!(cl.holds, every_cycle_has_exit(&g));
        if cl.holds {
            for v in g.vertices() {
                for p in enumerate_csp(&g, v, 8).unwrap() {
                    assert!(find_exit(&g, &p).unwrap().is_some(), "{p:?} in {g:?}");
                }
            }
        } else {
            let w = cl.witness.unwrap();
            assert!(is_csp(&g, w.path(), w.base()));
            assert!(find_exit(&g, w.path()).unwrap().is_none());
            // With an exitless cycle at v, CSP(v) is exactly that cycle.
            let csp = enumerate_csp(&g, w.base(), 8).unwrap();
            assert_eq!(csp, vec![w.path().clone()]);
        }
        if let Some(c) = exitless_cycle(&g) {
            assert!(find_exit(&g, c.path()).unwrap().is_none());
        }
    }
}

#[test]
fn named_families() {
    let q = Field::Rationals;
    let flag = is_simple(&LeavittAlgebra::new(named::flag(), q));
    assert!(!flag.simple && flag.condition_l.holds);
    assert_eq!(flag.condition_i.witness.unwrap().names(&named::flag()), ["v2"]);
    let single = is_simple(&LeavittAlgebra::new(named::single_vertex(), q));
    assert!(single.simple);
}
