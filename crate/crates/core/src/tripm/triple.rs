use crate::graph::{EdgeId, EdgeSet, Graph, VertexId};
use std::fmt;

/// Three edge sets claimed to be perfect matchings with empty common
/// intersection. Nothing is enforced on construction; see [`verify_triple`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleCertificate {
    matchings: [EdgeSet; 3],
}

impl TripleCertificate {
    pub fn new(m1: EdgeSet, m2: EdgeSet, m3: EdgeSet) -> Self {
        Self {
            matchings: [m1, m2, m3],
        }
    }

    pub fn matchings(&self) -> &[EdgeSet; 3] {
        &self.matchings
    }

    pub fn m1(&self) -> &EdgeSet {
        &self.matchings[0]
    }

    pub fn m2(&self) -> &EdgeSet {
        &self.matchings[1]
    }

    pub fn m3(&self) -> &EdgeSet {
        &self.matchings[2]
    }

    /// Edges lying in all three.
    pub fn common_edges(&self) -> EdgeSet {
        self.matchings[0]
            .intersection(&self.matchings[1])
            .intersection(&self.matchings[2])
    }

    pub fn union(&self) -> EdgeSet {
        self.matchings[0]
            .union(&self.matchings[1])
            .union(&self.matchings[2])
    }
}

/// One failed condition. `index` is 1-based: `1` means `M1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TripleViolation {
    WrongUniverse {
        index: usize,
        expected: usize,
        found: usize,
    },
    SharedVertex {
        index: usize,
        vertex: VertexId,
        edges: (EdgeId, EdgeId),
    },
    Uncovered {
        index: usize,
        vertices: Vec<VertexId>,
    },
    CommonEdges {
        edges: Vec<EdgeId>,
    },
}

impl fmt::Display for TripleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::WrongUniverse {
                index,
                expected,
                found,
            } => write!(f, "M{index}: sized for {found} edges, graph has {expected}"),
            Self::SharedVertex {
                index,
                vertex,
                edges: (a, b),
            } => write!(f, "M{index}: edges {a} and {b} share vertex {vertex}"),
            Self::Uncovered { index, vertices } => {
                write!(f, "M{index}: vertices {vertices:?} uncovered")
            }
            Self::CommonEdges { edges } => write!(f, "triple intersection = {edges:?}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TripleReport {
    pub violations: Vec<TripleViolation>,
}

impl TripleReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for TripleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks that each set is a perfect matching of `g` and that no edge lies
/// in all three. Reports every failure rather than stopping at the first.
pub fn verify_triple(g: &Graph, c: &TripleCertificate) -> TripleReport {
    let mut violations = Vec::new();
    let mut universes_ok = true;
    for (i, m) in c.matchings.iter().enumerate() {
        let index = i + 1;
        if m.universe() != g.edge_count() {
            violations.push(TripleViolation::WrongUniverse {
                index,
                expected: g.edge_count(),
                found: m.universe(),
            });
            universes_ok = false;
            continue;
        }
        let mut owner: Vec<Option<EdgeId>> = vec![None; g.vertex_count()];
        for e in m.iter() {
            let (u, v) = g.endpoints(e);
            for x in [u, v] {
                match owner[x] {
                    Some(other) => violations.push(TripleViolation::SharedVertex {
                        index,
                        vertex: x,
                        edges: (other, e),
                    }),
                    None => owner[x] = Some(e),
                }
            }
        }
        let uncovered: Vec<VertexId> = (0..g.vertex_count()).filter(|&v| owner[v].is_none()).collect();
        if !uncovered.is_empty() {
            violations.push(TripleViolation::Uncovered {
                index,
                vertices: uncovered,
            });
        }
    }
    if universes_ok {
        let common = c.common_edges();
        if !common.is_empty() {
            violations.push(TripleViolation::CommonEdges {
                edges: common.to_vec(),
            });
        }
    }
    TripleReport { violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{generate, Family};

    fn set(g: &Graph, pairs: &[(usize, usize)]) -> EdgeSet {
        g.edge_set_from_pairs(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn k4_three_matchings() {
        let k4 = generate(Family::K4).unwrap();
        let c = TripleCertificate::new(
            set(&k4, &[(0, 1), (2, 3)]),
            set(&k4, &[(0, 2), (1, 3)]),
            set(&k4, &[(0, 3), (1, 2)]),
        );
        assert!(verify_triple(&k4, &c).is_valid());
        assert_eq!(c.union(), k4.all_edges());
    }

    #[test]
    fn repeated_matching_names_intersection() {
        let k4 = generate(Family::K4).unwrap();
        let m = set(&k4, &[(0, 1), (2, 3)]);
        let report = verify_triple(&k4, &TripleCertificate::new(m.clone(), m.clone(), m.clone()));
        assert_eq!(
            report.violations,
            vec![TripleViolation::CommonEdges { edges: m.to_vec() }]
        );
        assert_eq!(report.to_string(), "triple intersection = [0, 5]");
    }

    #[test]
    fn octahedron_with_shared_pair() {
        let g = generate(Family::Octahedron).unwrap();
        let c = TripleCertificate::new(
            set(&g, &[(0, 4), (1, 2), (3, 5)]),
            set(&g, &[(0, 1), (4, 5), (2, 3)]),
            set(&g, &[(0, 5), (1, 4), (2, 3)]),
        );
        assert!(verify_triple(&g, &c).is_valid(), "{}", verify_triple(&g, &c));
    }

    #[test]
    fn broken_matchings_are_reported() {
        let k4 = generate(Family::K4).unwrap();
        let good = set(&k4, &[(0, 1), (2, 3)]);
        let clash = set(&k4, &[(0, 1), (0, 2)]);
        let short = set(&k4, &[(0, 3)]);
        let report = verify_triple(&k4, &TripleCertificate::new(good, clash, short));
        assert!(report.violations.contains(&TripleViolation::SharedVertex {
            index: 2,
            vertex: 0,
            edges: (0, 1)
        }));
        assert!(report.violations.contains(&TripleViolation::Uncovered {
            index: 3,
            vertices: vec![1, 2]
        }));
        let wrong = TripleCertificate::new(EdgeSet::new(2), k4.all_edges(), k4.all_edges());
        assert!(matches!(
            verify_triple(&k4, &wrong).violations[0],
            TripleViolation::WrongUniverse { index: 1, .. }
        ));
    }
}
