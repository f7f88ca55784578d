//! Gallai–Edmonds structure: the canonical `(D, A, C)` vertex partition.
//!
//! `D` holds the vertices some maximum matching leaves exposed, `A` the
//! neighbours of `D` outside it, `C` everything else. `D` is found by
//! deleting each vertex in turn and comparing matching numbers, which costs
//! `n + 1` blossom runs.

use super::{is_factor_critical, matching_number, max_matching_within};
use crate::graph::{Graph, VertexId, VertexSet};

/// One connected component of the subgraph induced by `D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DComponent {
    pub vertices: VertexSet,
    /// Number of edges joining the component to `A` (parallel edges count
    /// separately).
    pub edges_to_barrier: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GallaiEdmonds {
    /// `D`: vertices missed by at least one maximum matching.
    pub exposable: VertexSet,
    /// `A`: neighbours of `D` outside `D`.
    pub barrier: VertexSet,
    /// `C`: the remaining vertices.
    pub saturated: VertexSet,
    pub components: Vec<DComponent>,
    pub matching_number: usize,
}

/// Outcome of checking the structure theorem's guarantees on a computed
/// decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GallaiEdmondsReport {
    pub partition: bool,
    /// (a) every component of `G[D]` is factor-critical.
    pub components_factor_critical: bool,
    /// (b) `G[C]` has a perfect matching.
    pub saturated_has_perfect_matching: bool,
    /// (c) `A` can be matched into distinct components of `G[D]`.
    pub barrier_matchable: bool,
    /// `n - 2ν = ω - |A|`.
    pub deficiency_matches: bool,
    /// Cubic graphs only: every component satisfies
    /// `3|D'| = 2|E(G[D'])| + t` with `t` odd.
    pub cubic_parity: Option<bool>,
}

impl GallaiEdmondsReport {
    pub fn all_hold(&self) -> bool {
        self.partition
            && self.components_factor_critical
            && self.saturated_has_perfect_matching
            && self.barrier_matchable
            && self.deficiency_matches
            && self.cubic_parity != Some(false)
    }
}

impl GallaiEdmonds {
    /// ω: number of components of `G[D]`.
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// ω₁: components joined to `A` by exactly one edge.
    pub fn single_edge_component_count(&self) -> usize {
        self.components.iter().filter(|c| c.edges_to_barrier == 1).count()
    }

    /// Number of vertices a maximum matching leaves exposed.
    pub fn deficiency(&self, g: &Graph) -> usize {
        g.vertex_count() - 2 * self.matching_number
    }

    /// Index of the component containing `v`.
    pub fn component_of(&self, v: VertexId) -> Option<usize> {
        self.components.iter().position(|c| c.vertices.contains(v))
    }

    pub fn verify(&self, g: &Graph) -> GallaiEdmondsReport {
        let n = g.vertex_count();
        let partition = self.exposable.is_disjoint(&self.barrier)
            && self.exposable.is_disjoint(&self.saturated)
            && self.barrier.is_disjoint(&self.saturated)
            && self.exposable.len() + self.barrier.len() + self.saturated.len() == n;

        let components_factor_critical = self
            .components
            .iter()
            .all(|c| is_factor_critical(g, &c.vertices));

        let saturated_has_perfect_matching =
            2 * max_matching_within(g, Some(&self.saturated), None).size() == self.saturated.len();

        let barrier_matchable = self.barrier_matching(g) == self.barrier.len();

        let deficiency_matches =
            self.deficiency(g) + self.barrier.len() == self.component_count();

        let cubic_parity = g.is_regular(3).then(|| {
            self.components.iter().all(|c| {
                let inside = g.induced_edges(&c.vertices).len();
                let t = c.edges_to_barrier;
                3 * c.vertices.len() == 2 * inside + t && t % 2 == 1
            })
        });

        GallaiEdmondsReport {
            partition,
            components_factor_critical,
            saturated_has_perfect_matching,
            barrier_matchable,
            deficiency_matches,
            cubic_parity,
        }
    }

    /// Size of a maximum matching between `A` and the components of `G[D]`
    /// (Kuhn's augmenting paths on the bipartite incidence).
    fn barrier_matching(&self, g: &Graph) -> usize {
        let barrier: Vec<VertexId> = self.barrier.iter().collect();
        let options: Vec<Vec<usize>> = barrier
            .iter()
            .map(|&a| {
                let mut comps: Vec<usize> = g
                    .incident(a)
                    .iter()
                    .filter_map(|&(w, _)| self.component_of(w))
                    .collect();
                comps.sort_unstable();
                comps.dedup();
                comps
            })
            .collect();
        let mut owner: Vec<Option<usize>> = vec![None; self.components.len()];

        fn try_assign(
            i: usize,
            options: &[Vec<usize>],
            owner: &mut [Option<usize>],
            visited: &mut [bool],
        ) -> bool {
            for &c in &options[i] {
                if visited[c] {
                    continue;
                }
                visited[c] = true;
                if owner[c].is_none_or(|j| try_assign(j, options, owner, visited)) {
                    owner[c] = Some(i);
                    return true;
                }
            }
            false
        }

        (0..barrier.len())
            .filter(|&i| {
                let mut visited = vec![false; self.components.len()];
                try_assign(i, &options, &mut owner, &mut visited)
            })
            .count()
    }
}

pub fn gallai_edmonds(g: &Graph) -> GallaiEdmonds {
    let nu = matching_number(g);
    let mut exposable = g.empty_vertex_set();
    for v in 0..g.vertex_count() {
        let mut rest = g.all_vertices();
        rest.remove(v);
        if max_matching_within(g, Some(&rest), None).size() == nu {
            exposable.insert(v);
        }
    }
    let barrier = g.neighbourhood(&exposable);
    let saturated = exposable.union(&barrier).complement();
    let components = g
        .components(&exposable, None)
        .into_iter()
        .map(|vertices| {
            let edges_to_barrier = vertices
                .iter()
                .flat_map(|v| g.incident(v).iter())
                .filter(|&&(w, _)| barrier.contains(w))
                .count();
            DComponent {
                vertices,
                edges_to_barrier,
            }
        })
        .collect();
    GallaiEdmonds {
        exposable,
        barrier,
        saturated,
        components,
        matching_number: nu,
    }
}
