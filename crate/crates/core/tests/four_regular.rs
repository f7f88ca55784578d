use tripm_core::graph::generators::{generate, Family};
use tripm_core::graph::is_k_connected;
use tripm_core::matching::{gallai_edmonds, Matching};
use tripm_core::tripm::{
    four_regular_construct_from, four_regular_fastpath, verify_triple, FourRegularStep,
};
use tripm_core::{Budget, Graph};

/// The cubic graph without a perfect matching, plus a perfect matching
/// `M1` stitching its three gadgets together so that `G - M1` is that
/// cubic graph again.
fn barrier_example() -> (Graph, Matching) {
    let base = generate(Family::NoPmCubic16).unwrap();
    // gadget i: a, b, c, w, y = 5i..5i+5; hub 15
    let m1_pairs = [(15, 0), (1, 5), (2, 10), (3, 11), (4, 6), (7, 12), (8, 14), (9, 13)];
    let mut edges = base.edges().to_vec();
    edges.extend(m1_pairs);
    let g = Graph::new(16, edges).unwrap();
    let m1 = Matching::new(&g, g.edge_set_from_pairs(m1_pairs).unwrap()).unwrap();
    (g, m1)
}

#[test]
fn barrier_example_meets_the_preconditions() {
    let (g, m1) = barrier_example();
    assert!(g.is_regular(4) && g.is_simple());
    assert!(is_k_connected(&g, 3));
    assert!(m1.is_perfect(&g));
    let (rest, _) = g.spanning_subgraph(&m1.edges().complement());
    let ge = gallai_edmonds(&rest);
    assert_eq!(ge.barrier.to_vec(), vec![15]);
    assert!(ge.saturated.is_empty());
}

#[test]
fn single_barrier_step_builds_the_triple() {
    let (g, m1) = barrier_example();
    let w = four_regular_construct_from(&g, &m1).unwrap().expect("construction applies");
    let FourRegularStep::SingleBarrier { e, f } = w.step else {
        panic!("expected the barrier step, got {:?}", w.step);
    };
    assert!(verify_triple(&g, &w.triple).is_valid());
    assert_eq!(w.triple.m1(), m1.edges());
    assert_eq!(w.triple.m1().intersection(w.triple.m2()).to_vec(), vec![e]);
    assert_eq!(w.triple.m1().intersection(w.triple.m3()).to_vec(), vec![f]);
    assert!(w.triple.common_edges().is_empty());
}

#[test]
fn random_four_regular_graphs_are_admissible() {
    let mut checked = 0;
    for seed in 0..200 {
        for n in [10, 12, 14] {
            let g = generate(Family::RandomRegular { k: 4, n, seed }).unwrap();
            if !is_k_connected(&g, 3) {
                continue;
            }
            let v = four_regular_fastpath(&g, &Budget::new(10_000_000)).unwrap();
            assert!(v.is_admissible(), "n={n} seed={seed}");
            checked += 1;
        }
    }
    assert!(checked > 300);
}
