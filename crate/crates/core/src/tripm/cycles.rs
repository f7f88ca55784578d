//! Even 2-factors and Hamilton cycles, and the triple they induce.

use super::{TripleCertificate, TripmError};
use crate::budget::{Budget, BudgetExhausted};
use crate::graph::{EdgeId, EdgeSet, Graph, VertexId};
use std::fmt;

/// A spanning subgraph whose components are cycles of even length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenTwoFactorCertificate {
    pub factor: EdgeSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorViolation {
    WrongUniverse { expected: usize, found: usize },
    Degree { vertex: VertexId, degree: usize },
    OddCycle { vertex: VertexId, length: usize },
}

impl fmt::Display for FactorViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::WrongUniverse { expected, found } => {
                write!(f, "factor sized for {found} edges, graph has {expected}")
            }
            Self::Degree { vertex, degree } => {
                write!(f, "vertex {vertex} has factor degree {degree}, expected 2")
            }
            Self::OddCycle { vertex, length } => {
                write!(f, "cycle through vertex {vertex} has odd length {length}")
            }
        }
    }
}

impl EvenTwoFactorCertificate {
    /// The cycles of the factor, each as an edge sequence starting at its
    /// lowest vertex with that vertex's lowest-id factor edge.
    pub fn cycles(&self, g: &Graph) -> Result<Vec<Vec<EdgeId>>, FactorViolation> {
        if self.factor.universe() != g.edge_count() {
            return Err(FactorViolation::WrongUniverse {
                expected: g.edge_count(),
                found: self.factor.universe(),
            });
        }
        let deg = g.degrees_in(&self.factor);
        if let Some(v) = (0..g.vertex_count()).find(|&v| deg[v] != 2) {
            return Err(FactorViolation::Degree {
                vertex: v,
                degree: deg[v],
            });
        }
        let mut seen = g.empty_vertex_set();
        let mut out = Vec::new();
        for v in 0..g.vertex_count() {
            if seen.contains(v) {
                continue;
            }
            let cycle = walk_cycle(g, &self.factor, v);
            let mut x = v;
            for &e in &cycle {
                seen.insert(x);
                x = g.other_end(e, x);
            }
            if cycle.len() % 2 == 1 {
                return Err(FactorViolation::OddCycle {
                    vertex: v,
                    length: cycle.len(),
                });
            }
            out.push(cycle);
        }
        Ok(out)
    }
}

/// Follows the cycle of `edges` through `start`, beginning with the
/// lowest-id edge of `edges` at `start`. Every vertex on the cycle must have
/// exactly two incident edges in `edges`.
pub(crate) fn walk_cycle(g: &Graph, edges: &EdgeSet, start: VertexId) -> Vec<EdgeId> {
    let first = g
        .incident(start)
        .iter()
        .map(|&(_, e)| e)
        .find(|&e| edges.contains(e))
        .expect("start vertex lies on the cycle");
    let mut cycle = vec![first];
    let mut prev = first;
    let mut x = g.other_end(first, start);
    while x != start {
        let next = g
            .incident(x)
            .iter()
            .map(|&(_, e)| e)
            .find(|&e| e != prev && edges.contains(e))
            .expect("cycle vertices have degree two");
        cycle.push(next);
        prev = next;
        x = g.other_end(next, x);
    }
    cycle
}

/// Puts even positions of each even cycle in `M1` and odd positions in
/// `M2 = M3`.
pub(crate) fn alternate_into(cycle: &[EdgeId], m: &mut [EdgeSet; 3]) {
    for (i, &e) in cycle.iter().enumerate() {
        if i % 2 == 0 {
            m[0].insert(e);
        } else {
            m[1].insert(e);
            m[2].insert(e);
        }
    }
}

/// `M1` and `M2` alternate around each cycle, starting at the cycle's
/// lowest vertex with its lowest-id factor edge in `M1`; `M3 = M2`.
pub fn triple_from_even_2factor(
    g: &Graph,
    f: &EvenTwoFactorCertificate,
) -> Result<TripleCertificate, TripmError> {
    let cycles = f
        .cycles(g)
        .map_err(|v| TripmError::Malformed(v.to_string()))?;
    let mut m = [g.empty_edge_set(), g.empty_edge_set(), g.empty_edge_set()];
    for cycle in &cycles {
        alternate_into(cycle, &mut m);
    }
    let [m1, m2, m3] = m;
    Ok(TripleCertificate::new(m1, m2, m3))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonCycle {
    /// Vertices in cycle order, starting at vertex 0.
    pub vertices: Vec<VertexId>,
    /// `edges[i]` joins `vertices[i]` to `vertices[i + 1]` (cyclically).
    pub edges: Vec<EdgeId>,
}

impl HamiltonCycle {
    /// The cycle as a single-component 2-factor; `None` on odd order.
    pub fn to_factor(&self, g: &Graph) -> Option<EvenTwoFactorCertificate> {
        self.edges.len().is_multiple_of(2).then(|| {
            let mut factor = g.empty_edge_set();
            factor.extend(self.edges.iter().copied());
            EvenTwoFactorCertificate { factor }
        })
    }
}

/// Backtracking search for a spanning set of vertex-disjoint cycles. Each
/// cycle starts at the lowest uncovered vertex and is grown from its end;
/// a cycle is closed only in one of its two orientations.
struct CycleCover<'a> {
    g: &'a Graph,
    budget: &'a Budget,
    even_only: bool,
    single: bool,
    visited: Vec<bool>,
    path: Vec<VertexId>,
    path_edges: Vec<EdgeId>,
    cycles: Vec<Vec<EdgeId>>,
}

impl<'a> CycleCover<'a> {
    fn new(g: &'a Graph, budget: &'a Budget, even_only: bool, single: bool) -> Self {
        Self {
            g,
            budget,
            even_only,
            single,
            visited: vec![false; g.vertex_count()],
            path: Vec::new(),
            path_edges: Vec::new(),
            cycles: Vec::new(),
        }
    }

    fn start_cycle(&mut self) -> Result<bool, BudgetExhausted> {
        let Some(s) = self.visited.iter().position(|&v| !v) else {
            return Ok(true);
        };
        if self.single && !self.cycles.is_empty() {
            return Ok(false);
        }
        self.visited[s] = true;
        self.path.push(s);
        if self.extend(s)? {
            return Ok(true);
        }
        self.path.pop();
        self.visited[s] = false;
        Ok(false)
    }

    fn extend(&mut self, s: VertexId) -> Result<bool, BudgetExhausted> {
        let g = self.g;
        let x = *self.path.last().expect("path starts at s");
        let len = self.path.len();
        for &(y, e) in g.incident(x) {
            if y == s && len >= 2 {
                if (self.even_only && len % 2 == 1) || (self.single && len != g.vertex_count()) {
                    continue;
                }
                let canonical = if len == 2 {
                    e > self.path_edges[0]
                } else {
                    self.path[1] < x
                };
                if !canonical {
                    continue;
                }
                self.budget.tick()?;
                let mut cycle = std::mem::take(&mut self.path_edges);
                cycle.push(e);
                let path = std::mem::take(&mut self.path);
                self.cycles.push(cycle);
                if self.start_cycle()? {
                    return Ok(true);
                }
                let mut cycle = self.cycles.pop().expect("pushed above");
                cycle.pop();
                self.path_edges = cycle;
                self.path = path;
                continue;
            }
            if self.visited[y] {
                continue;
            }
            self.budget.tick()?;
            self.visited[y] = true;
            self.path.push(y);
            self.path_edges.push(e);
            if self.feasible(s) && self.extend(s)? {
                return Ok(true);
            }
            self.path.pop();
            self.path_edges.pop();
            self.visited[y] = false;
        }
        Ok(false)
    }

    /// Every unvisited vertex still has two usable neighbours.
    fn feasible(&self, s: VertexId) -> bool {
        let x = *self.path.last().expect("nonempty path");
        (0..self.g.vertex_count()).all(|v| {
            self.visited[v]
                || self
                    .g
                    .incident(v)
                    .iter()
                    .filter(|&&(w, _)| !self.visited[w] || w == s || w == x)
                    .nth(1)
                    .is_some()
        })
    }
}

/// A 2-factor all of whose cycles are even, `None` once the search space is
/// exhausted.
pub fn find_even_2factor(
    g: &Graph,
    budget: &Budget,
) -> Result<Option<EvenTwoFactorCertificate>, BudgetExhausted> {
    if g.vertex_count() == 0 || g.vertex_count() % 2 == 1 {
        return Ok(None);
    }
    let mut search = CycleCover::new(g, budget, true, false);
    if !search.start_cycle()? {
        return Ok(None);
    }
    let mut factor = g.empty_edge_set();
    factor.extend(search.cycles.into_iter().flatten());
    Ok(Some(EvenTwoFactorCertificate { factor }))
}

pub fn hamilton_cycle(g: &Graph, budget: &Budget) -> Result<Option<HamiltonCycle>, BudgetExhausted> {
    if g.vertex_count() < 2 {
        return Ok(None);
    }
    let mut search = CycleCover::new(g, budget, false, true);
    if !search.start_cycle()? {
        return Ok(None);
    }
    let edges = search.cycles.pop().expect("one cycle");
    let mut vertices = vec![0];
    for &e in &edges[..edges.len() - 1] {
        let last = *vertices.last().expect("nonempty");
        vertices.push(g.other_end(e, last));
    }
    Ok(Some(HamiltonCycle { vertices, edges }))
}
