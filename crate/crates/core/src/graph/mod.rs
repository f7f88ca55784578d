//! Loopless undirected multigraphs with stable edge identifiers.
//!
//! Vertices are `0..n`. Edges are stored with `u < v` and sorted
//! lexicographically by endpoints; parallel edges keep their insertion
//! order. An edge's id is its position in that order, so two graphs built
//! from the same edge multiset always agree on ids.

mod connectivity;
pub mod edgelist;
pub mod generators;
pub mod graph6;
mod sets;

pub use connectivity::is_k_connected;
pub use sets::{EdgeSet, VertexSet};

use std::collections::VecDeque;
use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {index} is a loop at vertex {vertex}")]
    Loop { index: usize, vertex: VertexId },
    #[error("edge {index} has endpoint {vertex} outside 0..{n}")]
    VertexOutOfRange { index: usize, vertex: VertexId, n: usize },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    adjacency: Vec<Vec<(VertexId, EdgeId)>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Builds a graph on `n` vertices. Endpoint order within a pair is
    /// irrelevant; duplicate pairs become parallel edges.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self, GraphError> {
        let mut canonical = Vec::new();
        for (index, (a, b)) in edges.into_iter().enumerate() {
            for vertex in [a, b] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { index, vertex, n });
                }
            }
            if a == b {
                return Err(GraphError::Loop { index, vertex: a });
            }
            canonical.push((a.min(b), a.max(b)));
        }
        // stable: parallel edges keep insertion order
        canonical.sort();
        let mut adjacency = vec![Vec::new(); n];
        for (id, &(u, v)) in canonical.iter().enumerate() {
            adjacency[u].push((v, id));
            adjacency[v].push((u, id));
        }
        Ok(Self {
            n,
            edges: canonical,
            adjacency,
        })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// All edges as `(u, v)` with `u < v`, indexed by edge id.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    /// `(neighbour, edge id)` pairs at `v`, in increasing edge id order.
    pub fn incident(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// Lowest-id edge joining `u` and `v`.
    pub fn find_edge(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.edges_between(u, v).next()
    }

    pub fn edges_between(&self, u: VertexId, v: VertexId) -> impl Iterator<Item = EdgeId> + '_ {
        self.adjacency[u]
            .iter()
            .filter(move |&&(w, _)| w == v)
            .map(|&(_, e)| e)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.find_edge(u, v).is_some()
    }

    pub fn is_simple(&self) -> bool {
        self.edges.windows(2).all(|w| w[0] != w[1])
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.adjacency.first().map_or(0, Vec::len);
        self.adjacency
            .iter()
            .all(|a| a.len() == first)
            .then_some(first)
    }

    pub fn is_regular(&self, k: usize) -> bool {
        self.regular_degree() == Some(k)
    }

    pub fn empty_edge_set(&self) -> EdgeSet {
        EdgeSet::new(self.edge_count())
    }

    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::full(self.edge_count())
    }

    pub fn empty_vertex_set(&self) -> VertexSet {
        VertexSet::new(self.n)
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edge set from `(u, v)` pairs, resolving each pair to its lowest unused
    /// parallel edge. `None` if some pair is not an edge often enough.
    pub fn edge_set_from_pairs(
        &self,
        pairs: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Option<EdgeSet> {
        let mut set = self.empty_edge_set();
        for (u, v) in pairs {
            if u >= self.n || v >= self.n {
                return None;
            }
            let e = self.edges_between(u, v).find(|&e| !set.contains(e))?;
            set.insert(e);
        }
        Some(set)
    }

    /// Degree of every vertex in the spanning subgraph formed by `edges`.
    pub fn degrees_in(&self, edges: &EdgeSet) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in edges.iter() {
            let (u, v) = self.edges[e];
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Connected components of the subgraph with vertex set `vertices` and
    /// edges restricted to `edges` (all edges when `None`). Components are
    /// listed by their lowest vertex.
    pub fn components(&self, vertices: &VertexSet, edges: Option<&EdgeSet>) -> Vec<VertexSet> {
        let mut seen = self.empty_vertex_set();
        let mut out = Vec::new();
        for start in vertices.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = self.empty_vertex_set();
            let mut queue = VecDeque::from([start]);
            seen.insert(start);
            while let Some(x) = queue.pop_front() {
                comp.insert(x);
                for &(y, e) in self.incident(x) {
                    if !vertices.contains(y) || seen.contains(y) {
                        continue;
                    }
                    if edges.is_some_and(|s| !s.contains(e)) {
                        continue;
                    }
                    seen.insert(y);
                    queue.push_back(y);
                }
            }
            out.push(comp);
        }
        out
    }

    /// Connected with at least one vertex.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components(&self.all_vertices(), None).len() == 1
    }

    /// The spanning subgraph with edge set `keep`, plus the map from its
    /// edge ids to ids of `self`. Relative edge order is preserved.
    pub fn spanning_subgraph(&self, keep: &EdgeSet) -> (Graph, Vec<EdgeId>) {
        let ids: Vec<EdgeId> = keep.iter().collect();
        let sub = Graph::new(self.n, ids.iter().map(|&e| self.edges[e]))
            .expect("subgraph of a valid graph is valid");
        (sub, ids)
    }

    /// Edges with both endpoints in `vertices`.
    pub fn induced_edges(&self, vertices: &VertexSet) -> EdgeSet {
        let mut set = self.empty_edge_set();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if vertices.contains(u) && vertices.contains(v) {
                set.insert(e);
            }
        }
        set
    }

    /// Vertices adjacent to some member of `set` but not in it.
    pub fn neighbourhood(&self, set: &VertexSet) -> VertexSet {
        let mut out = self.empty_vertex_set();
        for v in set.iter() {
            for &(w, _) in self.incident(v) {
                if !set.contains(w) {
                    out.insert(w);
                }
            }
        }
        out
    }
}
