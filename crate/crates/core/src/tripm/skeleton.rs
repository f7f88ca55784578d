//! Cubic skeletons: contracting a spanning {2,3}-degree subgraph to a cubic
//! multigraph, and lifting a 3-edge-colouring back through the chains.
//!
//! In a spanning subgraph built from three perfect matchings, every edge at a
//! degree-3 vertex lies in exactly one matching, and along a chain of
//! degree-2 vertices the edges alternate between one matching and the other
//! two. So chains between branch vertices have odd length and never return
//! to their start.

use super::cycles::{alternate_into, walk_cycle};
use super::{Clause, TripleCertificate, TripmError};
use crate::graph::{EdgeId, EdgeSet, Graph, VertexId};
use std::fmt;
use thiserror::Error;

/// A subset of the colours `{1, 2, 3}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ColorSet(u8);

impl ColorSet {
    pub const EMPTY: Self = Self(0);
    pub const ALL: Self = Self(0b111);

    /// Panics unless `color` is 1, 2 or 3.
    pub fn single(color: u8) -> Self {
        assert!((1..=3).contains(&color), "colour {color} out of range");
        Self(1 << (color - 1))
    }

    /// `None` if some colour is outside `1..=3`.
    pub fn from_colors(colors: impl IntoIterator<Item = u8>) -> Option<Self> {
        let mut bits = 0;
        for c in colors {
            if !(1..=3).contains(&c) {
                return None;
            }
            bits |= 1 << (c - 1);
        }
        Some(Self(bits))
    }

    pub fn contains(self, color: u8) -> bool {
        (1..=3).contains(&color) && self.0 & (1 << (color - 1)) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn complement(self) -> Self {
        Self(!self.0 & 0b111)
    }

    pub fn colors(self) -> impl Iterator<Item = u8> {
        (1..=3).filter(move |&c| self.contains(c))
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.colors()).finish()
    }
}

/// Labels of the three edges replacing an edge labelled `label` when two
/// subdivision vertices are inserted. One colour `{i}`: the outer edges keep
/// `{i}` and the middle edge takes the other two. Two colours: the outer
/// edges keep both and the middle edge takes the third.
pub fn bisubdivide(label: ColorSet) -> [ColorSet; 3] {
    assert!(
        matches!(label.len(), 1 | 2),
        "edge label {label:?} must have one or two colours"
    );
    [label, label.complement(), label]
}

/// Labels along a chain of odd length `len` whose skeleton edge carries
/// `label`, built by repeated subdivision of the last edge.
pub fn chain_labels(label: ColorSet, len: usize) -> Vec<ColorSet> {
    assert!(len % 2 == 1, "chain length {len} is even");
    let mut labels = vec![label];
    while labels.len() < len {
        let last = labels.pop().expect("nonempty");
        labels.extend(bisubdivide(last));
    }
    labels
}

/// Result of contracting a spanning subgraph: the cubic skeleton, the chain
/// each skeleton edge stands for, and any pure even cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bicontraction {
    pub spanning: EdgeSet,
    /// Cubic multigraph on `branch_vertices.len()` vertices.
    pub skeleton: Graph,
    /// Skeleton vertex `i` is vertex `branch_vertices[i]` of the input.
    pub branch_vertices: Vec<VertexId>,
    /// `chain_map[e]` is the path of input edges for skeleton edge `e`,
    /// running from its lower to its higher endpoint.
    pub chain_map: Vec<Vec<EdgeId>>,
    /// Components of the spanning subgraph with no branch vertex, each from
    /// its lowest vertex.
    pub cycles: Vec<Vec<EdgeId>>,
}

impl Bicontraction {
    pub fn with_coloring(self, coloring: Vec<ColorSet>) -> SkeletonCertificate {
        SkeletonCertificate {
            spanning: self.spanning,
            skeleton: self.skeleton,
            branch_vertices: self.branch_vertices,
            chain_map: self.chain_map,
            cycles: self.cycles,
            coloring,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkeletonReject {
    #[error("spanning set sized for {found} edges, graph has {expected}")]
    WrongUniverse { expected: usize, found: usize },
    #[error("vertex {vertex} has spanning degree {degree}")]
    Degree { vertex: VertexId, degree: usize },
    #[error("chain from {from} to {to} has even length {length}")]
    EvenChain {
        from: VertexId,
        to: VertexId,
        length: usize,
    },
    #[error("chain of length {length} returns to branch vertex {vertex}")]
    LoopChain { vertex: VertexId, length: usize },
    #[error("cycle component through {vertex} of length {length} has no branch vertex")]
    IsolatedCycle { vertex: VertexId, length: usize },
    #[error("cycle component through {vertex} has odd length {length}")]
    OddCycle { vertex: VertexId, length: usize },
}

/// Contracts every maximal chain of degree-2 vertices to a skeleton edge.
/// Every component must contain a branch vertex.
pub fn extract_skeleton(g: &Graph, spanning: &EdgeSet) -> Result<Bicontraction, SkeletonReject> {
    contract(g, spanning, false)
}

/// As [`extract_skeleton`], but components that are even cycles are kept
/// aside in `cycles` instead of rejected.
pub fn extract_mixed_skeleton(g: &Graph, spanning: &EdgeSet) -> Result<Bicontraction, SkeletonReject> {
    contract(g, spanning, true)
}

fn contract(g: &Graph, spanning: &EdgeSet, allow_cycles: bool) -> Result<Bicontraction, SkeletonReject> {
    if spanning.universe() != g.edge_count() {
        return Err(SkeletonReject::WrongUniverse {
            expected: g.edge_count(),
            found: spanning.universe(),
        });
    }
    let deg = g.degrees_in(spanning);
    if let Some(v) = (0..g.vertex_count()).find(|&v| deg[v] != 2 && deg[v] != 3) {
        return Err(SkeletonReject::Degree {
            vertex: v,
            degree: deg[v],
        });
    }
    let branch_vertices: Vec<VertexId> = (0..g.vertex_count()).filter(|&v| deg[v] == 3).collect();
    let mut index = vec![usize::MAX; g.vertex_count()];
    for (i, &b) in branch_vertices.iter().enumerate() {
        index[b] = i;
    }

    let mut used = g.empty_edge_set();
    let mut chains: Vec<(usize, usize, Vec<EdgeId>)> = Vec::new();
    for &b in &branch_vertices {
        for &(w, e0) in g.incident(b) {
            if !spanning.contains(e0) || used.contains(e0) {
                continue;
            }
            let mut chain = vec![e0];
            let mut prev = e0;
            let mut x = w;
            while deg[x] == 2 {
                let next = g
                    .incident(x)
                    .iter()
                    .map(|&(_, e)| e)
                    .find(|&e| e != prev && spanning.contains(e))
                    .expect("degree-2 vertex has a second edge");
                chain.push(next);
                prev = next;
                x = g.other_end(next, x);
            }
            used.extend(chain.iter().copied());
            if x == b {
                return Err(SkeletonReject::LoopChain {
                    vertex: b,
                    length: chain.len(),
                });
            }
            if chain.len() % 2 == 0 {
                return Err(SkeletonReject::EvenChain {
                    from: b,
                    to: x,
                    length: chain.len(),
                });
            }
            // Branch vertices are scanned in increasing order, so `x > b`.
            chains.push((index[b], index[x], chain));
        }
    }

    let mut cycles = Vec::new();
    for (v, &d) in deg.iter().enumerate() {
        if d != 2 {
            continue;
        }
        let first = g.incident(v).iter().map(|&(_, e)| e).find(|&e| spanning.contains(e));
        if first.is_none_or(|e| used.contains(e)) {
            continue;
        }
        let cycle = walk_cycle(g, spanning, v);
        used.extend(cycle.iter().copied());
        if !allow_cycles {
            return Err(SkeletonReject::IsolatedCycle {
                vertex: v,
                length: cycle.len(),
            });
        }
        if cycle.len() % 2 == 1 {
            return Err(SkeletonReject::OddCycle {
                vertex: v,
                length: cycle.len(),
            });
        }
        cycles.push(cycle);
    }

    chains.sort_by_key(|&(a, b, _)| (a, b));
    let skeleton = Graph::new(branch_vertices.len(), chains.iter().map(|&(a, b, _)| (a, b)))
        .expect("chains join distinct branch vertices");
    debug_assert!(skeleton
        .edges()
        .iter()
        .zip(&chains)
        .all(|(&(a, b), c)| (a, b) == (c.0, c.1)));
    Ok(Bicontraction {
        spanning: spanning.clone(),
        skeleton,
        branch_vertices,
        chain_map: chains.into_iter().map(|(_, _, c)| c).collect(),
        cycles,
    })
}

/// A spanning subgraph contracted to a cubic skeleton with a colouring
/// whose classes are three perfect matchings of the skeleton covering its
/// edges. Pure even cycles may sit alongside the skeleton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletonCertificate {
    pub spanning: EdgeSet,
    pub skeleton: Graph,
    pub branch_vertices: Vec<VertexId>,
    pub chain_map: Vec<Vec<EdgeId>>,
    pub cycles: Vec<Vec<EdgeId>>,
    /// Colours of each skeleton edge, indexed by skeleton edge id.
    pub coloring: Vec<ColorSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{0}")]
pub struct SkeletonViolation(pub String);

fn violation<T>(msg: impl Into<String>) -> Result<T, SkeletonViolation> {
    Err(SkeletonViolation(msg.into()))
}

impl SkeletonCertificate {
    pub fn clause(&self) -> Clause {
        match (self.skeleton.vertex_count() > 0, self.cycles.is_empty()) {
            (true, true) => Clause::Bisubdivision,
            (false, _) => Clause::EvenTwoFactor,
            (true, false) => Clause::Mixed,
        }
    }

    /// Checks every structural claim against `g` without trusting any of
    /// the certificate's own bookkeeping.
    pub fn validate(&self, g: &Graph) -> Result<(), SkeletonViolation> {
        let m = g.edge_count();
        if self.spanning.universe() != m {
            return violation(format!(
                "spanning set sized for {} edges, graph has {m}",
                self.spanning.universe()
            ));
        }
        let deg = g.degrees_in(&self.spanning);
        if let Some(v) = (0..g.vertex_count()).find(|&v| deg[v] != 2 && deg[v] != 3) {
            return violation(format!("vertex {v} has spanning degree {}", deg[v]));
        }
        let expected: Vec<VertexId> = (0..g.vertex_count()).filter(|&v| deg[v] == 3).collect();
        let mut given = self.branch_vertices.clone();
        given.sort_unstable();
        if given != expected {
            return violation(format!(
                "branch vertices {:?} differ from the degree-3 vertices {expected:?}",
                self.branch_vertices
            ));
        }
        let h = &self.skeleton;
        if h.vertex_count() != self.branch_vertices.len() {
            return violation(format!(
                "skeleton has {} vertices but {} branch vertices are listed",
                h.vertex_count(),
                self.branch_vertices.len()
            ));
        }
        if let Some(v) = (0..h.vertex_count()).find(|&v| h.degree(v) != 3) {
            return violation(format!("skeleton vertex {v} has degree {}", h.degree(v)));
        }
        if self.chain_map.len() != h.edge_count() {
            return violation(format!(
                "{} chains for {} skeleton edges",
                self.chain_map.len(),
                h.edge_count()
            ));
        }

        let mut seen = g.empty_edge_set();
        let mut claim = |e: EdgeId| -> Result<(), SkeletonViolation> {
            if e >= m {
                return violation(format!("edge id {e} out of range"));
            }
            if !self.spanning.contains(e) {
                return violation(format!("edge {e} is not in the spanning set"));
            }
            if !seen.insert(e) {
                return violation(format!("edge {e} is used twice"));
            }
            Ok(())
        };
        for (i, chain) in self.chain_map.iter().enumerate() {
            let (a, b) = h.endpoints(i);
            let (from, to) = (self.branch_vertices[a], self.branch_vertices[b]);
            if chain.len() % 2 == 0 {
                return violation(format!("chain {i} has even length {}", chain.len()));
            }
            for &e in chain {
                claim(e)?;
            }
            let starts_at = |v: VertexId| {
                let (x, y) = g.endpoints(chain[0]);
                x == v || y == v
            };
            let (start, end) = if starts_at(from) { (from, to) } else { (to, from) };
            let mut x = start;
            for (k, &e) in chain.iter().enumerate() {
                let (p, q) = g.endpoints(e);
                x = match x {
                    _ if x == p => q,
                    _ if x == q => p,
                    _ => return violation(format!("chain {i} is not a path at edge {e}")),
                };
                if k + 1 < chain.len() && deg[x] != 2 {
                    return violation(format!("chain {i} passes through branch vertex {x}"));
                }
            }
            if x != end {
                return violation(format!("chain {i} does not join {from} and {to}"));
            }
        }
        for (i, cycle) in self.cycles.iter().enumerate() {
            if cycle.is_empty() || cycle.len() % 2 == 1 {
                return violation(format!("cycle {i} has odd or zero length {}", cycle.len()));
            }
            for &e in cycle {
                claim(e)?;
            }
            let start = g.endpoints(cycle[0]).0;
            let mut x = start;
            // Orientation of the first edge is unknown; try both.
            let walk = |mut x: VertexId| -> Option<VertexId> {
                for &e in cycle {
                    let (p, q) = g.endpoints(e);
                    x = if x == p {
                        q
                    } else if x == q {
                        p
                    } else {
                        return None;
                    };
                    if deg[x] != 2 {
                        return None;
                    }
                }
                Some(x)
            };
            let closed = walk(x) == Some(x) || {
                x = g.endpoints(cycle[0]).1;
                walk(x) == Some(x)
            };
            if !closed {
                return violation(format!("cycle {i} is not a closed walk through degree-2 vertices"));
            }
        }
        if seen != self.spanning {
            return violation("chains and cycles do not cover the spanning set");
        }

        if self.coloring.len() != h.edge_count() {
            return violation(format!(
                "{} colour sets for {} skeleton edges",
                self.coloring.len(),
                h.edge_count()
            ));
        }
        if let Some(e) = (0..h.edge_count()).find(|&e| !matches!(self.coloring[e].len(), 1 | 2)) {
            return violation(format!(
                "skeleton edge {e} has colour set {:?}",
                self.coloring[e]
            ));
        }
        for c in 1..=3 {
            for v in 0..h.vertex_count() {
                let count = h
                    .incident(v)
                    .iter()
                    .filter(|&&(_, e)| self.coloring[e].contains(c))
                    .count();
                if count != 1 {
                    return violation(format!(
                        "colour {c} meets skeleton vertex {v} {count} times"
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Expands the colouring along every chain and alternates each pure cycle,
/// giving perfect matchings whose union is the spanning set.
pub fn lift_triple(g: &Graph, sc: &SkeletonCertificate) -> Result<TripleCertificate, TripmError> {
    sc.validate(g).map_err(|v| TripmError::Malformed(v.to_string()))?;
    let mut m = [g.empty_edge_set(), g.empty_edge_set(), g.empty_edge_set()];
    for (chain, &label) in sc.chain_map.iter().zip(&sc.coloring) {
        for (&e, l) in chain.iter().zip(chain_labels(label, chain.len())) {
            for c in l.colors() {
                m[usize::from(c) - 1].insert(e);
            }
        }
    }
    for cycle in &sc.cycles {
        alternate_into(cycle, &mut m);
    }
    let [m1, m2, m3] = m;
    Ok(TripleCertificate::new(m1, m2, m3))
}
