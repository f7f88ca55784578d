//! Library searches against brute-force oracles on small graphs.

use rand::Rng;
use tripm_core::graph::generators::{generate, Family};
use tripm_core::matching::{
    count_perfect_matchings, gallai_edmonds, is_matching_covered, matching_number,
    perfect_matching_with_forced,
};
use tripm_core::tripm::{
    color_cubic_3, find_even_2factor, find_triple_direct, hamilton_cycle, structural_check, verify_triple,
};
use tripm_core::{Budget, EdgeSet, Graph};
use tripm_testkit as oracle;

fn small_corpus() -> Vec<Graph> {
    let mut graphs: Vec<Graph> = (1..=7).flat_map(oracle::connected_graphs).collect();
    let mut rng = oracle::rng(11);
    for _ in 0..300 {
        let n = rng.gen_range(2..=10);
        graphs.push(oracle::random_graph(n, rng.gen_range(0.2..0.8), &mut rng));
    }
    graphs
}

#[test]
fn matching_number_matches_brute_force() {
    for g in small_corpus() {
        assert_eq!(matching_number(&g), oracle::max_matching_size(&g), "{:?}", g.edges());
    }
}

#[test]
fn perfect_matching_counts_match_brute_force() {
    for g in small_corpus().into_iter().filter(|g| g.vertex_count() <= 8) {
        let count = count_perfect_matchings(&g, &Budget::unlimited()).unwrap();
        assert_eq!(count, oracle::perfect_matchings(&g).len(), "{:?}", g.edges());
    }
}

#[test]
fn forced_completion_matches_brute_force() {
    let mut rng = oracle::rng(12);
    for g in small_corpus().into_iter().filter(|g| g.vertex_count() % 2 == 0 && g.edge_count() > 0) {
        let pms = oracle::perfect_matchings(&g);
        for _ in 0..3 {
            let forced_edge = rng.gen_range(0..g.edge_count());
            let forbidden_edge = rng.gen_range(0..g.edge_count());
            if forced_edge == forbidden_edge {
                continue;
            }
            let forced = EdgeSet::from_ids(g.edge_count(), [forced_edge]);
            let forbidden = EdgeSet::from_ids(g.edge_count(), [forbidden_edge]);
            let expected = pms
                .iter()
                .any(|p| p.contains(&forced_edge) && !p.contains(&forbidden_edge));
            let got = perfect_matching_with_forced(&g, &forced, &forbidden).unwrap();
            assert_eq!(got.is_some(), expected, "{:?}", g.edges());
            if let Some(m) = got {
                assert!(m.is_perfect(&g) && m.contains(forced_edge) && !m.contains(forbidden_edge));
            }
        }
    }
}

#[test]
fn gallai_edmonds_properties_hold() {
    for g in small_corpus() {
        let ge = gallai_edmonds(&g);
        let report = ge.verify(&g);
        assert!(report.all_hold(), "{report:?} on {:?}", g.edges());
        let deficiency = g.vertex_count() - 2 * oracle::max_matching_size(&g);
        assert_eq!(ge.deficiency(&g), deficiency);
    }
}

#[test]
fn matching_covered_matches_brute_force() {
    for g in small_corpus().into_iter().filter(|g| g.vertex_count() <= 8) {
        assert_eq!(is_matching_covered(&g), oracle::is_matching_covered(&g), "{:?}", g.edges());
    }
}

#[test]
fn cycle_searches_match_brute_force() {
    for g in small_corpus().into_iter().filter(|g| g.vertex_count() <= 8) {
        let budget = Budget::unlimited();
        let f = find_even_2factor(&g, &budget).unwrap();
        assert_eq!(f.is_some(), oracle::has_even_2factor(&g), "{:?}", g.edges());
        if let Some(f) = f {
            assert!(f.cycles(&g).is_ok());
        }
        let h = hamilton_cycle(&g, &budget).unwrap();
        assert_eq!(h.is_some(), oracle::has_hamilton_cycle(&g), "{:?}", g.edges());
    }
}

#[test]
fn edge_colouring_matches_brute_force() {
    let mut families = vec![Family::K4, Family::K33, Family::Prism, Family::B8, Family::Petersen, Family::Cube, Family::Theta];
    families.extend((0..30).map(|seed| Family::RandomRegular { k: 3, n: 10, seed }));
    for family in families {
        let h = generate(family).unwrap();
        let got = color_cubic_3(&h, &Budget::unlimited()).unwrap();
        assert_eq!(got.is_some(), oracle::is_three_edge_colorable(&h), "{family}");
    }
}

#[test]
fn direct_and_structural_match_brute_force() {
    let graphs = small_corpus()
        .into_iter()
        .filter(|g| g.vertex_count() <= 8 && oracle::is_matching_covered(g));
    let mut checked = 0;
    for g in graphs {
        let expected = oracle::has_triple(&g);
        let budget = Budget::unlimited();
        let direct = find_triple_direct(&g, &budget).unwrap();
        let structural = structural_check(&g, &budget).unwrap();
        assert_eq!(direct.is_admissible(), expected, "direct on {:?}", g.edges());
        assert_eq!(structural.is_admissible(), expected, "structural on {:?}", g.edges());
        for v in [&direct, &structural] {
            if let Some(a) = v.admissible() {
                assert!(verify_triple(&g, &a.triple).is_valid());
            }
        }
        checked += 1;
    }
    assert!(checked > 50);
}
