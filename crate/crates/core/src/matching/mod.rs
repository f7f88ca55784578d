//! Matchings: maximum matching, forced-edge completion, enumeration,
//! matching-covered and factor-critical tests, Gallai–Edmonds decomposition.

mod blossom;
mod cover;
mod enumerate;
mod gallai_edmonds;

pub use cover::{is_factor_critical, is_matching_covered, matching_cover, MatchingCover};
pub use enumerate::{count_perfect_matchings, PerfectMatchings};
pub use gallai_edmonds::{gallai_edmonds, DComponent, GallaiEdmonds, GallaiEdmondsReport};

use crate::graph::{EdgeId, EdgeSet, Graph, VertexId, VertexSet};
use blossom::Blossom;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("edge set sized for {found} edges, graph has {expected}")]
    WrongUniverse { expected: usize, found: usize },
    #[error("edges {0} and {1} share vertex {2}")]
    SharedVertex(EdgeId, EdgeId, VertexId),
    #[error("edge {0} is both forced and forbidden")]
    ForcedAndForbidden(EdgeId),
}

/// A set of pairwise disjoint edges of one graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    edges: EdgeSet,
}

impl std::fmt::Debug for Matching {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Matching{:?}", self.edges)
    }
}

impl Matching {
    /// Validates that `edges` is a matching of `g`.
    pub fn new(g: &Graph, edges: EdgeSet) -> Result<Self, MatchingError> {
        check_universe(g, &edges)?;
        let mut owner = vec![None; g.vertex_count()];
        for e in edges.iter() {
            let (u, v) = g.endpoints(e);
            for x in [u, v] {
                if let Some(other) = owner[x] {
                    return Err(MatchingError::SharedVertex(other, e, x));
                }
                owner[x] = Some(e);
            }
        }
        Ok(Self { edges })
    }

    pub(crate) fn from_trusted(edges: EdgeSet) -> Self {
        Self { edges }
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn into_edges(self) -> EdgeSet {
        self.edges
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_ids(&self) -> Vec<EdgeId> {
        self.edges.to_vec()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.contains(e)
    }

    /// Covers every vertex of `g`.
    pub fn is_perfect(&self, g: &Graph) -> bool {
        2 * self.size() == g.vertex_count()
    }

    pub fn covered(&self, g: &Graph) -> VertexSet {
        let mut set = g.empty_vertex_set();
        for e in self.edges.iter() {
            let (u, v) = g.endpoints(e);
            set.insert(u);
            set.insert(v);
        }
        set
    }

    /// The matching edge at `v`, if any.
    pub fn edge_at(&self, g: &Graph, v: VertexId) -> Option<EdgeId> {
        g.incident(v)
            .iter()
            .map(|&(_, e)| e)
            .find(|&e| self.edges.contains(e))
    }
}

fn check_universe(g: &Graph, set: &EdgeSet) -> Result<(), MatchingError> {
    if set.universe() != g.edge_count() {
        return Err(MatchingError::WrongUniverse {
            expected: g.edge_count(),
            found: set.universe(),
        });
    }
    Ok(())
}

/// A maximum cardinality matching of `g`. Deterministic: roots are tried in
/// increasing vertex order and edges in increasing id order.
pub fn max_matching(g: &Graph) -> Matching {
    max_matching_within(g, None, None)
}

/// A maximum matching of the subgraph induced by `vertices` using only
/// `edges` (either restriction may be `None`).
pub fn max_matching_within(
    g: &Graph,
    vertices: Option<&VertexSet>,
    edges: Option<&EdgeSet>,
) -> Matching {
    Matching::from_trusted(Blossom::new(g, vertices, edges).run(g.edge_count()))
}

/// Size of a maximum matching.
pub fn matching_number(g: &Graph) -> usize {
    max_matching(g).size()
}

/// A perfect matching containing every edge of `forced` and none of
/// `forbidden`, or `None` when no such matching exists.
pub fn perfect_matching_with_forced(
    g: &Graph,
    forced: &EdgeSet,
    forbidden: &EdgeSet,
) -> Result<Option<Matching>, MatchingError> {
    check_universe(g, forbidden)?;
    let forced = Matching::new(g, forced.clone())?;
    if let Some(e) = forced.edges().intersection(forbidden).first() {
        return Err(MatchingError::ForcedAndForbidden(e));
    }
    let remaining = forced.covered(g).complement();
    let usable = forbidden.union(forced.edges()).complement();
    let rest = max_matching_within(g, Some(&remaining), Some(&usable));
    if 2 * rest.size() != remaining.len() {
        return Ok(None);
    }
    Ok(Some(Matching::from_trusted(rest.into_edges().union(forced.edges()))))
}

/// Any perfect matching of `g`.
pub fn perfect_matching(g: &Graph) -> Option<Matching> {
    let m = max_matching(g);
    m.is_perfect(g).then_some(m)
}
