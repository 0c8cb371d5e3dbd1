use std::collections::BTreeSet;

use gpw::graphs::{
    all_graphs, canonical_code, catalog, enumerate::graph_from_code, enumerate_graphs, members, named, WeakChordality,
};
use gpw::{Execution, SimpleGraph, VertexSet};
use itertools::Itertools;
use proptest::prelude::*;

/// Burnside: number of unlabelled graphs on `n` vertices is the average over
/// permutations of `2^(cycles on unordered pairs)`.
fn burnside(n: usize) -> u64 {
    let mut total: u128 = 0;
    let mut count: u128 = 0;
    for perm in (0..n).permutations(n) {
        let mut seen = vec![vec![false; n]; n];
        let mut cycles = 0u32;
        for i in 0..n {
            for j in i + 1..n {
                if seen[i][j] {
                    continue;
                }
                cycles += 1;
                let (mut a, mut b) = (i, j);
                while !seen[a.min(b)][a.max(b)] {
                    seen[a.min(b)][a.max(b)] = true;
                    (a, b) = (perm[a], perm[b]);
                }
            }
        }
        total += 1u128 << cycles;
        count += 1;
    }
    (total / count.max(1)) as u64
}

fn labelled_graphs(n: usize) -> impl Iterator<Item = SimpleGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &p)| p).collect();
        SimpleGraph::from_index_edges(n, &edges).unwrap()
    })
}

/// Plain oracle: is the induced subgraph on `set` a single cycle?
fn induces_cycle(g: &SimpleGraph, set: VertexSet) -> bool {
    set.count_ones() >= 3 && members(set).all(|i| (g.neighbors(i) & set).count_ones() == 2) && g.is_connected_set(set)
}

fn shortest_cycle_at_least(g: &SimpleGraph, min_len: usize) -> Option<usize> {
    (min_len..=g.n())
        .find(|&k| (0..g.n()).combinations(k).any(|c| induces_cycle(g, c.iter().fold(0, |s, &i| s | 1 << i))))
}

#[test]
fn class_counts_match_burnside() {
    let expected = [1, 1, 2, 4, 11, 34, 156, 1044];
    for (n, &count) in expected.iter().enumerate().skip(1) {
        assert_eq!(burnside(n), count, "burnside n={n}");
        assert_eq!(enumerate_graphs(n).unwrap().count() as u64, burnside(n), "n={n}");
    }
}

#[test]
fn enumeration_hits_every_labelled_graph_exactly_once() {
    for n in 1..=5 {
        let reps: BTreeSet<u64> = enumerate_graphs(n).unwrap().map(|g| canonical_code(&g).unwrap()).collect();
        let seen: BTreeSet<u64> = labelled_graphs(n).map(|g| canonical_code(&g).unwrap()).collect();
        assert_eq!(reps, seen, "n={n}");
        let list: Vec<_> = enumerate_graphs(n).unwrap().collect();
        for (a, b) in list.iter().tuple_combinations() {
            assert!(!a.is_isomorphic(b));
        }
    }
}

#[test]
fn enumeration_order_is_graph6_sorted_and_parallel_stable() {
    let seq = all_graphs(6, Execution::Sequential).unwrap();
    let par = all_graphs(6, Execution::Parallel).unwrap();
    assert_eq!(seq, par);
    let codes: Vec<String> = seq.iter().map(SimpleGraph::to_graph6).collect();
    assert!(codes.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn hole_search_matches_subset_oracle() {
    let mut graphs: Vec<SimpleGraph> = (1..=6).flat_map(labelled_graphs).collect();
    graphs.extend(enumerate_graphs(7).unwrap());
    for g in &graphs {
        for min_len in [4, 5] {
            let found = g.find_hole(min_len).unwrap();
            assert_eq!(found.as_ref().map(|h| h.len()), shortest_cycle_at_least(g, min_len), "{g}");
            if let Some(h) = found {
                assert!(induces_cycle(g, h.vertex_set()));
                for (&a, &b) in h.cycle.iter().circular_tuple_windows() {
                    assert!(g.adjacent(a, b));
                }
            }
        }
        let opp = g.opposite();
        let hole = shortest_cycle_at_least(g, 5);
        let anti = shortest_cycle_at_least(&opp, 5);
        match g.weak_chordality() {
            WeakChordality::WeaklyChordal => assert!(hole.is_none() && anti.is_none()),
            WeakChordality::Hole(h) => {
                assert!(induces_cycle(g, h.vertex_set()) && h.len() >= 5);
                assert_eq!(Some(h.len()), hole);
                assert!(anti.is_none_or(|a| a >= h.len()));
            }
            WeakChordality::Antihole(h) => {
                assert!(induces_cycle(&opp, h.vertex_set()) && h.len() >= 5);
                assert_eq!(Some(h.len()), anti);
                assert!(hole.is_none_or(|l| l > h.len()));
            }
        }
    }
}

#[test]
fn clique_separators_match_brute_force() {
    for g in (1..=6).flat_map(labelled_graphs) {
        if !g.is_chordal() {
            assert!(g.complete_separator().is_err());
            continue;
        }
        let all = g.vertex_set();
        let smallest = (0u64..1 << g.n())
            .filter(|&s| g.is_clique(s) && s != all)
            .filter(|&s| !g.is_connected_set(all & !s))
            .map(|s| s.count_ones())
            .min();
        match g.complete_separator().unwrap() {
            None => {
                assert!(g.is_complete());
                assert_eq!(smallest, None);
            }
            Some(sep) => {
                assert_eq!(Some(sep.separator.count_ones()), smallest, "{g}");
                assert!(g.is_clique(sep.separator));
                assert_eq!(sep.first | sep.second, all);
                assert_eq!(sep.first & sep.second, sep.separator);
                let (a, b) = (sep.first & !sep.separator, sep.second & !sep.separator);
                assert!(a != 0 && b != 0);
                assert!(members(a).all(|i| g.neighbors(i) & b == 0));
            }
        }
    }
}

#[test]
fn named_graph_relations() {
    let c5 = catalog::cycle(5).unwrap();
    assert!(c5.opposite().is_isomorphic(&c5));
    let p3 = catalog::path(3).unwrap();
    let p3b = p3.relabel(["e", "f", "g"]).unwrap();
    assert!(p3.disjoint_union(&p3b).unwrap().opposite().is_isomorphic(&catalog::lambda0()));

    let phi4_opp = named("Phi4opp").unwrap();
    let contracted = phi4_opp.contract_edge("c", "c'").unwrap();
    assert!(contracted.is_isomorphic(&named("Lambda7opp").unwrap()));

    let phi2_opp = named("Phi2opp").unwrap();
    let lambda11_opp = named("Lambda11opp").unwrap();
    let hits: Vec<_> = phi2_opp
        .edges()
        .into_iter()
        .filter(|&(i, j)| {
            phi2_opp.contract_edge(phi2_opp.label(i), phi2_opp.label(j)).unwrap().is_isomorphic(&lambda11_opp)
        })
        .collect();
    assert!(!hits.is_empty());

    assert!(named("Lambda1").unwrap().find_induced(&c5).is_none());
    assert!(named("Phi4").unwrap().find_induced(&catalog::p1_7()).is_some());
    assert!(named("Phi3").unwrap().find_induced(&catalog::p2_7()).is_some());

    let double = named("P7opp").unwrap().double_along_link("d").unwrap();
    assert_eq!(double.graph, named("Phi3").unwrap());
}

#[test]
fn cycle_contraction_shortens() {
    for m in 4..=9 {
        let c = catalog::cycle(m).unwrap();
        assert!(c.contract_edge("a", "b").unwrap().is_isomorphic(&catalog::cycle(m - 1).unwrap()));
    }
}

#[test]
fn special_graphs_are_weakly_chordal() {
    for name in ["P1_7", "P2_7", "P6opp", "P7opp", "Fig8"] {
        assert!(named(name).unwrap().is_weakly_chordal(), "{name}");
    }
    for i in 1..=11 {
        assert!(catalog::lambda(i).unwrap().is_weakly_chordal(), "Lambda{i}");
    }
    for i in 1..=5 {
        assert!(catalog::phi(i).unwrap().is_weakly_chordal(), "Phi{i}");
    }
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges: Vec<_> = (0..n).tuple_combinations().zip(bits).filter(|(_, b)| *b).map(|(p, _)| p).collect();
            SimpleGraph::from_index_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn opposite_is_an_involution(g in arb_graph(12)) {
        prop_assert_eq!(g.opposite().opposite(), g.clone());
        let n = g.n();
        prop_assert_eq!(g.edge_count() + g.opposite().edge_count(), n * (n - 1) / 2);
    }

    #[test]
    fn canonical_code_is_a_complete_invariant(g in arb_graph(8), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        let mut s = seed;
        for i in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let edges: Vec<_> = g.edges().into_iter().map(|(i, j)| (perm[i], perm[j])).collect();
        let h = SimpleGraph::from_index_edges(g.n(), &edges).unwrap();
        prop_assert_eq!(canonical_code(&g).unwrap(), canonical_code(&h).unwrap());
        let iso = g.isomorphism(&h).expect("relabelled copy");
        for (i, j) in g.edges() {
            prop_assert!(h.adjacent(iso.map[i], iso.map[j]));
        }
        let canon = graph_from_code(g.n(), canonical_code(&g).unwrap());
        prop_assert!(canon.is_isomorphic(&g));
    }

    #[test]
    fn graph6_round_trips(g in arb_graph(20)) {
        let text = g.to_graph6();
        let back = SimpleGraph::from_graph6(&text).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn double_restricts_to_two_copies(g in arb_graph(7), t in 0usize..7) {
        let t = t % g.n();
        let d = g.double_along_link(g.label(t)).unwrap();
        let rest = g.vertex_set() & !(1 << t);
        prop_assert!(d.graph.induced(d.first_copy()).is_isomorphic(&g.induced(rest)));
        prop_assert!(d.graph.induced(d.second_copy()).is_isomorphic(&g.induced(rest)));
        let link = g.neighbors(t).count_ones() as usize;
        prop_assert_eq!(d.graph.n(), 2 * (g.n() - 1) - link);
    }
}
