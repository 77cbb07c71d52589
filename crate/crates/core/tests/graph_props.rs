mod support;

use contraction_kernels::approx::{clique_deletion_2approx, split_deletion_5approx};
use contraction_kernels::hardness::induced_cycles;
use contraction_kernels::oracles::{
    brute_force_contraction, densest_k_subgraph_brute, density, optimum,
};
use contraction_kernels::recognize::{is_chordal, is_complete, is_split};
use contraction_kernels::witness::{contract_edges, quotient_by_witness};
use contraction_kernels::{Edge, Graph, TargetClass};
use num_rational::Ratio;
use proptest::prelude::*;

use support::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mask = bits
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, &b)| acc | (u64::from(b) << i));
            graph_from_mask(n, mask)
        })
    })
}

/// A graph with a subset of its edges and a permutation seed.
fn graph_and_edges(max_n: usize) -> impl Strategy<Value = (Graph, Vec<Edge>, Vec<Edge>)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let edges = g.edge_list();
        let m = edges.len();
        (
            Just(g),
            proptest::collection::vec(any::<bool>(), m),
            Just(edges),
        )
            .prop_flat_map(|(g, keep, edges)| {
                let f: Vec<Edge> = edges
                    .iter()
                    .zip(&keep)
                    .filter(|(_, &k)| k)
                    .map(|(e, _)| *e)
                    .collect();
                (Just(g), Just(f.clone()), Just(f).prop_shuffle())
            })
    })
}

fn class_of(cls: TargetClass) -> Cls {
    match cls {
        TargetClass::Complete => Cls::Complete,
        TargetClass::Split => Cls::Split,
        TargetClass::Chordal => Cls::Chordal,
    }
}

proptest! {
    #[test]
    fn contraction_is_order_independent((g, f, shuffled) in graph_and_edges(9)) {
        let (q1, w1) = contract_edges(&g, &f).unwrap();
        let (q2, w2) = contract_edges(&g, &shuffled).unwrap();
        prop_assert_eq!(&q1, &q2);
        prop_assert_eq!(&w1, &w2);
    }

    #[test]
    fn witness_quotient_matches((g, f, _) in graph_and_edges(9)) {
        let (q, w) = contract_edges(&g, &f).unwrap();
        prop_assert_eq!(&quotient_by_witness(&g, &w).unwrap(), &q);
        let (nq, blocks) = contract_naive(&g, &f);
        prop_assert_eq!(&nq, &q);
        prop_assert_eq!(blocks.as_slice(), w.blocks());
    }

    #[test]
    fn witness_blocks_are_small((g, f, _) in graph_and_edges(9)) {
        let (_, w) = contract_edges(&g, &f).unwrap();
        let k = f.len();
        prop_assert!(w.blocks().iter().all(|b| b.len() <= k + 1));
        let in_nontrivial: usize = w.blocks().iter().filter(|b| b.len() > 1).map(Vec::len).sum();
        prop_assert!(in_nontrivial <= 2 * k);
    }

    #[test]
    fn recognizers_match_definitions(g in graph_strategy(8)) {
        prop_assert_eq!(is_complete(&g), is_complete_def(&g));
        prop_assert_eq!(is_split(&g).is_some(), is_split_def(&g));
        prop_assert_eq!(is_chordal(&g), is_chordal_def(&g));
    }

    #[test]
    fn induced_cycles_match_subset_search(g in graph_strategy(8)) {
        prop_assert_eq!(induced_cycles(&g, 4).is_empty(), !has_long_induced_cycle_def(&g));
        // every reported cycle really is an induced cycle
        for c in induced_cycles(&g, 3) {
            let (h, _) = g.induced_subgraph(&c);
            prop_assert!((0..h.n()).all(|v| h.degree(v) == 2));
            prop_assert!(is_connected_def(&h));
        }
    }

    #[test]
    fn oracle_matches_bitmask_search(g in graph_strategy(6), k in 0usize..4) {
        for cls in [TargetClass::Complete, TargetClass::Split, TargetClass::Chordal] {
            if g.m() > 15 {
                continue;
            }
            let got = optimum(&g, k, cls).unwrap();
            prop_assert_eq!(got, contraction_opt_def(&g, k, class_of(cls)));
        }
    }

    #[test]
    fn optimum_is_monotone_in_k(g in graph_strategy(7)) {
        for cls in [TargetClass::Complete, TargetClass::Split] {
            let mut prev: Option<usize> = None;
            for k in 0..4 {
                let found = brute_force_contraction(&g, k, cls).unwrap().map(|(_, s)| s);
                if let (Some(p), Some(s)) = (prev, found) {
                    prop_assert!(s <= p);
                }
                if prev.is_some() {
                    prop_assert!(found.is_some());
                }
                prev = found.or(prev);
            }
        }
    }

    #[test]
    fn density_in_unit_interval(g in graph_strategy(7), mask in any::<u8>()) {
        let s: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
        if s.len() >= 2 {
            let d = density(&g, &s).unwrap();
            prop_assert!(d >= Ratio::from_integer(0) && d <= Ratio::from_integer(1));
            let (h, _) = g.induced_subgraph(&s);
            prop_assert_eq!(d == Ratio::from_integer(1), is_complete_def(&h));
        }
    }

    #[test]
    fn complement_is_an_involution(g in graph_strategy(8)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(g.m() + g.complement().m(), g.n() * (g.n() - 1) / 2);
    }
}

#[test]
fn recognizers_on_all_small_graphs() {
    let mut graphs: Vec<Graph> = (1..=6).flat_map(all_labeled_graphs).collect();
    graphs.extend(graphs_up_to_iso(7));
    for g in &graphs {
        assert_eq!(is_complete(g), is_complete_def(g), "{g:?}");
        assert_eq!(is_split(g).is_some(), is_split_def(g), "{g:?}");
        assert_eq!(is_chordal(g), is_chordal_def(g), "{g:?}");
    }
}

#[test]
fn isomorphism_class_counts() {
    let all: Vec<usize> = (1..=7).map(|n| graphs_up_to_iso(n).len()).collect();
    assert_eq!(all, vec![1, 2, 4, 11, 34, 156, 1044]);
    let connected: Vec<usize> = (1..=7).map(|n| connected_up_to_iso(n).len()).collect();
    assert_eq!(connected, vec![1, 1, 2, 6, 21, 112, 853]);
}

#[test]
fn classes_closed_under_vertex_deletion() {
    for n in 1..=6 {
        for g in all_labeled_graphs(n) {
            for v in 0..n {
                let (h, _) = g.remove_vertices(&[v]);
                if is_split(&g).is_some() {
                    assert!(is_split(&h).is_some());
                }
                if is_chordal(&g) {
                    assert!(is_chordal(&h));
                }
                if is_complete(&g) {
                    assert!(is_complete(&h));
                }
            }
        }
    }
}

#[test]
fn approximations_are_sound_and_within_ratio() {
    for n in 1..=7 {
        for g in connected_up_to_iso(n) {
            let x = clique_deletion_2approx(&g);
            let s = split_deletion_5approx(&g);
            assert!(is_complete(&g.remove_vertices(&x).0));
            assert!(is_split(&g.remove_vertices(&s).0).is_some());
            assert!(x.len() <= 2 * deletion_opt_def(&g, Cls::Complete), "{g:?}");
            assert!(s.len() <= 5 * deletion_opt_def(&g, Cls::Split), "{g:?}");
            assert_eq!(clique_deletion_2approx(&g), x);
        }
    }
}

#[test]
fn approximation_examples() {
    assert!(split_deletion_5approx(&Graph::complete(4)).is_empty());
    assert_eq!(
        split_deletion_5approx(&Graph::cycle(5)),
        vec![0, 1, 2, 3, 4]
    );
    assert_eq!(deletion_opt_def(&Graph::cycle(5), Cls::Split), 1);
    let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
    assert_eq!(split_deletion_5approx(&two_k2), vec![0, 1, 2, 3]);
    assert_eq!(deletion_opt_def(&two_k2, Cls::Split), 1);
}

#[test]
fn complement_of_c4_is_2k2() {
    let c = Graph::cycle(4).complement();
    assert_eq!(c, Graph::from_edges(4, [(0, 2), (1, 3)]).unwrap());
    assert_eq!(Graph::complete(3).complement(), Graph::empty(3));
}

#[test]
fn densest_matches_exhaustive_density() {
    let mut r = contraction_kernels::gen::rng(17);
    for _ in 0..50 {
        let g = contraction_kernels::gen::random_graph(7, 0.4, &mut r);
        for k in 2..=5 {
            let (s, count) = densest_k_subgraph_brute(&g, k).unwrap();
            assert_eq!(s.len(), k);
            assert_eq!(g.induced_edge_count(&s), count);
            let best = (0u32..1 << 7)
                .filter(|m| m.count_ones() as usize == k)
                .map(|m| {
                    let set: Vec<usize> = (0..7).filter(|&v| m >> v & 1 == 1).collect();
                    g.induced_edge_count(&set)
                })
                .max()
                .unwrap();
            assert_eq!(count, best);
        }
    }
}
