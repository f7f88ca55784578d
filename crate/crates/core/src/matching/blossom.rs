//! Edmonds' blossom algorithm for maximum cardinality matching.
//!
//! Breadth-first search for an augmenting path from each exposed vertex in
//! increasing id order, shrinking odd cycles by relabelling their base.
//! Runs in `O(n^3)`. Tree links remember the edge id they were created
//! through, so parallel edges are handled at edge level: the matching
//! always uses the lowest-id edge the scan meets.

use crate::graph::{EdgeId, EdgeSet, Graph, VertexId, VertexSet};
use std::collections::VecDeque;

const NONE: usize = usize::MAX;

pub(crate) struct Blossom {
    adjacency: Vec<Vec<(VertexId, EdgeId)>>,
    active: Vec<bool>,
    mate: Vec<VertexId>,
    mate_edge: Vec<EdgeId>,
    parent: Vec<VertexId>,
    parent_edge: Vec<EdgeId>,
    base: Vec<VertexId>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<VertexId>,
}

impl Blossom {
    /// Prepares a search over the subgraph with the given vertex and edge
    /// restrictions (`None` keeps everything).
    pub(crate) fn new(g: &Graph, vertices: Option<&VertexSet>, edges: Option<&EdgeSet>) -> Self {
        let n = g.vertex_count();
        let active: Vec<bool> = (0..n).map(|v| vertices.is_none_or(|s| s.contains(v))).collect();
        let adjacency = (0..n)
            .map(|v| {
                if !active[v] {
                    return Vec::new();
                }
                g.incident(v)
                    .iter()
                    .copied()
                    .filter(|&(w, e)| active[w] && edges.is_none_or(|s| s.contains(e)))
                    .collect()
            })
            .collect();
        Self {
            adjacency,
            active,
            mate: vec![NONE; n],
            mate_edge: vec![NONE; n],
            parent: vec![NONE; n],
            parent_edge: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    pub(crate) fn run(mut self, m: usize) -> EdgeSet {
        for root in 0..self.mate.len() {
            if self.active[root] && self.mate[root] == NONE {
                if let Some(leaf) = self.find_path(root) {
                    self.augment(leaf);
                }
            }
        }
        let mut out = EdgeSet::new(m);
        for (v, &e) in self.mate_edge.iter().enumerate() {
            if e != NONE && v < self.mate[v] {
                out.insert(e);
            }
        }
        out
    }

    fn lca(&self, a: VertexId, b: VertexId) -> VertexId {
        let mut seen = vec![false; self.mate.len()];
        let mut a = a;
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        let mut b = b;
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: VertexId, b: VertexId, mut child: VertexId, mut child_edge: EdgeId) {
        while self.base[v] != b {
            let m = self.mate[v];
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[m]] = true;
            self.parent[v] = child;
            self.parent_edge[v] = child_edge;
            child = m;
            child_edge = self.parent_edge[m];
            v = self.parent[m];
        }
    }

    fn find_path(&mut self, root: VertexId) -> Option<VertexId> {
        let n = self.mate.len();
        self.used.fill(false);
        self.parent.fill(NONE);
        self.parent_edge.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for i in 0..self.adjacency[v].len() {
                let (to, e) = self.adjacency[v][i];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                let to_is_outer =
                    to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE);
                if to_is_outer {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to, e);
                    self.mark_path(to, cur, v, e);
                    for x in 0..n {
                        if self.in_blossom[self.base[x]] {
                            self.base[x] = cur;
                            if !self.used[x] {
                                self.used[x] = true;
                                self.queue.push_back(x);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    self.parent_edge[to] = e;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    fn augment(&mut self, leaf: VertexId) {
        let mut v = leaf;
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            let e = self.parent_edge[v];
            self.mate[v] = pv;
            self.mate[pv] = v;
            self.mate_edge[v] = e;
            self.mate_edge[pv] = e;
            v = next;
        }
    }
}
