use super::{max_matching_within, perfect_matching_with_forced, Matching};
use crate::graph::{EdgeId, EdgeSet, Graph, VertexSet};

/// Result of the matching-covered test: which perfect matching witnesses
/// each edge.
#[derive(Debug, Clone)]
pub struct MatchingCover {
    pub connected: bool,
    /// Distinct witness matchings, in the order they were found.
    pub matchings: Vec<Matching>,
    /// For each edge id, the index into `matchings` of a perfect matching
    /// containing it, or `None` if no perfect matching does.
    pub witness: Vec<Option<usize>>,
}

impl MatchingCover {
    pub fn is_matching_covered(&self) -> bool {
        self.connected && self.witness.iter().all(Option::is_some)
    }

    pub fn uncovered_edges(&self) -> Vec<EdgeId> {
        (0..self.witness.len()).filter(|&e| self.witness[e].is_none()).collect()
    }

    pub fn has_perfect_matching(&self) -> bool {
        !self.matchings.is_empty()
    }
}

/// Finds a perfect matching through each edge, reusing every witness for
/// all the edges it contains.
pub fn matching_cover(g: &Graph) -> MatchingCover {
    let mut matchings: Vec<Matching> = Vec::new();
    let mut witness = vec![None; g.edge_count()];
    let none = g.empty_edge_set();
    for e in 0..g.edge_count() {
        if witness[e].is_some() {
            continue;
        }
        let forced = EdgeSet::from_ids(g.edge_count(), [e]);
        if let Some(m) = perfect_matching_with_forced(g, &forced, &none).expect("single edge is a matching") {
            let idx = matchings.len();
            for f in m.edges().iter() {
                witness[f].get_or_insert(idx);
            }
            matchings.push(m);
        }
    }
    MatchingCover {
        connected: g.is_connected(),
        matchings,
        witness,
    }
}

/// Connected, and every edge lies in some perfect matching.
pub fn is_matching_covered(g: &Graph) -> bool {
    g.vertex_count() >= 2 && matching_cover(g).is_matching_covered()
}

/// Whether the subgraph induced by `scope` minus any one of its vertices
/// has a perfect matching. An empty scope is not factor-critical.
pub fn is_factor_critical(g: &Graph, scope: &VertexSet) -> bool {
    if scope.is_empty() || scope.len().is_multiple_of(2) {
        return false;
    }
    scope.iter().all(|v| {
        let mut rest = scope.clone();
        rest.remove(v);
        2 * max_matching_within(g, Some(&rest), None).size() == rest.len()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{generate, Family};

    #[test]
    fn covered_examples() {
        assert!(is_matching_covered(&generate(Family::Petersen).unwrap()));
        assert!(is_matching_covered(&generate(Family::Theta).unwrap()));
        let no_pm = generate(Family::NoPmCubic16).unwrap();
        let cover = matching_cover(&no_pm);
        assert!(!cover.has_perfect_matching());
        assert!(!cover.is_matching_covered());
        let p4 = generate(Family::Path { n: 4 }).unwrap();
        let cover = matching_cover(&p4);
        assert_eq!(cover.uncovered_edges(), vec![1]);
        assert!(!is_matching_covered(&p4));
        assert!(!is_matching_covered(&Graph::empty(0)));
        assert!(!is_matching_covered(&Graph::empty(2)));
    }

    #[test]
    fn witnesses_contain_their_edges() {
        let g = generate(Family::Wheel { n: 7 }).unwrap();
        let cover = matching_cover(&g);
        assert!(cover.is_matching_covered());
        for (e, w) in cover.witness.iter().enumerate() {
            let m = &cover.matchings[w.unwrap()];
            assert!(m.contains(e) && m.is_perfect(&g));
        }
    }

    #[test]
    fn factor_critical_examples() {
        let c5 = generate(Family::Cycle { n: 5 }).unwrap();
        assert!(is_factor_critical(&c5, &c5.all_vertices()));
        let gadget = generate(Family::NoPmCubic16).unwrap();
        assert!(is_factor_critical(&gadget, &VertexSet::from_ids(16, 0..5)));
        let k2 = generate(Family::Path { n: 2 }).unwrap();
        assert!(!is_factor_critical(&k2, &k2.all_vertices()));
        // odd but not factor-critical: path on three vertices
        let p3 = generate(Family::Path { n: 3 }).unwrap();
        assert!(!is_factor_critical(&p3, &p3.all_vertices()));
    }
}
