use gpw::embeddings::{co_contraction_embedding, double_homomorphism, HomomorphismSpec};
use gpw::graphs::{catalog, enumerate_graphs, named};
use gpw::words::{Order, Word};
use gpw::{Execution, SimpleGraph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use Order::{Finite, Infinite};

fn check(mut h: HomomorphismSpec, what: &str) -> HomomorphismSpec {
    let report = h.relator_check(Execution::Parallel);
    assert!(report.passed(), "{what}: {:?}", report.failures);
    assert!(h.is_verified());
    h
}

fn opposite_edges(g: &SimpleGraph) -> Vec<(String, String)> {
    g.opposite().edges().into_iter().map(|(x, t)| (g.label(x).to_string(), g.label(t).to_string())).collect()
}

#[test]
fn every_small_graph_passes_with_involutions() {
    for n in 1..=6 {
        let orders = vec![Finite(2); n];
        for g in enumerate_graphs(n).unwrap() {
            for t in g.labels() {
                for mirror in [false, true] {
                    check(double_homomorphism(&g, t, &orders, mirror).unwrap(), &format!("{g} double {t}"));
                }
            }
            for (x, t) in opposite_edges(&g) {
                for (a, b) in [(&x, &t), (&t, &x)] {
                    check(co_contraction_embedding(&g, a, b, &orders, None, false).unwrap(), &format!("{g} {a},{b}"));
                }
            }
        }
    }
}

#[test]
fn doubles_on_seven_vertices() {
    let orders = vec![Finite(2); 7];
    for g in enumerate_graphs(7).unwrap() {
        for t in g.labels() {
            check(double_homomorphism(&g, t, &orders, false).unwrap(), &format!("{g} double {t}"));
        }
    }
}

#[test]
fn sampled_mixed_orders() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let graphs: Vec<SimpleGraph> = (4..=7).flat_map(|n| enumerate_graphs(n).unwrap()).collect();
    for _ in 0..300 {
        let g = graphs.choose(&mut rng).unwrap();
        let orders: Vec<Order> = (0..g.n()).map(|_| [Finite(2), Finite(3), Infinite][rng.gen_range(0..3)]).collect();
        let t = g.label(rng.gen_range(0..g.n()));
        check(double_homomorphism(g, t, &orders, rng.gen()).unwrap(), &format!("{g} double {t}"));
        if let Some((x, t)) = opposite_edges(g).choose(&mut rng) {
            let h = co_contraction_embedding(g, x, t, &orders, None, rng.gen()).unwrap();
            check(h, &format!("{g} {x},{t}"));
        }
    }
}

/// Co-contract `C_m^opp` down to five vertices, one opposite edge at a time.
fn chain_to_five(m: usize, orders: Order) -> HomomorphismSpec {
    let mut g = named(&format!("C{m}opp")).unwrap();
    let mut composite: Option<HomomorphismSpec> = None;
    while g.n() > 5 {
        let (x, t) = opposite_edges(&g).remove(0);
        let step = check(co_contraction_embedding(&g, &x, &t, &vec![orders; g.n()], None, false).unwrap(), &x);
        g = step.source().graph().clone();
        composite = Some(match composite {
            None => step,
            Some(outer) => step.then(&outer).unwrap(),
        });
    }
    composite.unwrap()
}

#[test]
fn antihole_chains_reach_the_pentagon() {
    let c5 = catalog::cycle(5).unwrap();
    for m in 6..=8 {
        for orders in [Finite(2), Infinite] {
            let h = check(chain_to_five(m, orders), &format!("C{m}opp"));
            assert!(h.source().graph().is_isomorphic(&c5), "C{m}opp");
            assert!(h.source().graph().is_isomorphic(&named("C5opp").unwrap()));
            assert_eq!(h.target().graph(), &named(&format!("C{m}opp")).unwrap());
        }
    }
    check(HomomorphismSpec::identity(&std::sync::Arc::new(gpw::GroupSpec::racg(named("C5opp").unwrap()))), "C5opp");
}

#[test]
fn p7opp_double_is_phi3() {
    let g = named("P7opp").unwrap();
    let h = check(double_homomorphism(&g, "d", &[Finite(2); 7], false).unwrap(), "P7opp");
    assert!(h.source().graph().is_isomorphic(&catalog::phi(3).unwrap()));
    let labels: Vec<&str> = h.source().graph().labels().iter().map(String::as_str).collect();
    assert_eq!(labels, ["a", "b", "c", "e", "f", "g", "c'", "e'"]);
    assert_eq!(h.image(6).to_string(), "d c d");
    assert_eq!(h.image(7).to_string(), "d e d");
}

#[test]
fn c6opp_co_contraction_is_injective_on_balls() {
    let g = named("C6opp").unwrap();
    for (orders, radius) in [(Finite(2), 4), (Infinite, 3)] {
        let h = check(co_contraction_embedding(&g, "a", "b", &[orders; 6], None, false).unwrap(), "C6opp");
        let report = h.injectivity_sample(radius, 1_000_000, Execution::Parallel).unwrap();
        assert!(report.passed(), "{orders}: {:?}", report.collision);
        assert!(report.sampled > 100);
    }
}

#[test]
fn raag_co_contractions_are_injective_on_small_balls() {
    for n in 4..=5 {
        for g in enumerate_graphs(n).unwrap() {
            for (x, t) in opposite_edges(&g) {
                let h = check(co_contraction_embedding(&g, &x, &t, &vec![Infinite; n], None, false).unwrap(), &x);
                let report = h.injectivity_sample(2, 1_000_000, Execution::Parallel).unwrap();
                assert!(report.passed(), "{g} {x},{t}: {:?}", report.collision);
            }
        }
    }
}

#[test]
fn corrupted_images_are_caught() {
    let g = named("C6opp").unwrap();
    let good = co_contraction_embedding(&g, "a", "b", &[Finite(2); 6], None, false).unwrap();
    let replace = |img: &str| {
        let mut images: Vec<Word> = good.images().iter().map(|w| w.word().clone()).collect();
        images[0] = Word::parse(good.target(), img).unwrap();
        HomomorphismSpec::new(good.source().clone(), good.target().clone(), images).unwrap()
    };

    // dropping the conjugator keeps every relator (y's neighbours are common
    // neighbours of a and b) but identifies y·u with u·y for u adjacent to a only
    let mut dropped = replace("a");
    assert!(dropped.relator_check(Execution::Sequential).passed());
    let inj = dropped.injectivity_sample(2, 10_000, Execution::Sequential).unwrap();
    assert!(!inj.passed());
    assert!(HomomorphismSpec::injectivity_line(&inj).starts_with("injectivity(L=2): FAIL("));

    let mut not_involution = replace("a b");
    let report = not_involution.relator_check(Execution::Sequential);
    assert!(!not_involution.is_verified());
    assert_eq!(HomomorphismSpec::relator_line(&report, not_involution.source()), "relators: FAIL[a*b^2]");

    let mut wrong_side = replace("f");
    let report = wrong_side.relator_check(Execution::Sequential);
    assert!(!report.passed());
    assert!(HomomorphismSpec::relator_line(&report, wrong_side.source()).contains("[a*b,"));

    let pair = std::sync::Arc::new(gpw::GroupSpec::racg(SimpleGraph::edgeless(["u", "v"]).unwrap()));
    let u = Word::generator(&pair, 0).unwrap();
    let collapse = HomomorphismSpec::new(pair.clone(), pair, vec![u.clone(), u]).unwrap();
    let inj = collapse.injectivity_sample(1, 100, Execution::Sequential).unwrap();
    assert_eq!(HomomorphismSpec::injectivity_line(&inj), "injectivity(L=1): FAIL(u,v)");
}

#[test]
fn parallel_and_sequential_reports_agree() {
    let g = named("C7opp").unwrap();
    let good = co_contraction_embedding(&g, "a", "b", &[Finite(3); 7], None, false).unwrap();
    let mut images: Vec<Word> = good.images().iter().map(|w| w.word().clone()).collect();
    images[0] = Word::parse(good.target(), "c").unwrap();
    images[1] = Word::parse(good.target(), "a").unwrap();
    let bad = HomomorphismSpec::new(good.source().clone(), good.target().clone(), images).unwrap();
    let seq = bad.clone().relator_check(Execution::Sequential);
    let par = bad.clone().relator_check(Execution::Parallel);
    assert_eq!(seq, par);
    assert!(!seq.passed());
}
