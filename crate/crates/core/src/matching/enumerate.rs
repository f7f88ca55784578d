//! Enumeration of perfect matchings.
//!
//! The search always branches on the lowest uncovered vertex and tries its
//! incident edges in increasing id order. That order is part of the
//! contract: it fixes the sequence in which matchings are produced.

use super::Matching;
use crate::budget::{Budget, BudgetExhausted};
use crate::graph::{EdgeId, EdgeSet, Graph, VertexId};

struct Frame {
    vertex: VertexId,
    next: usize,
    chosen: Option<EdgeId>,
}

/// Streams every perfect matching of a graph exactly once, charging one
/// budget node per edge placed. Yields `Err` once if the budget runs out and
/// then stops.
pub struct PerfectMatchings<'g, 'b> {
    g: &'g Graph,
    allowed: EdgeSet,
    budget: &'b Budget,
    covered: Vec<bool>,
    frames: Vec<Frame>,
    descend: bool,
    done: bool,
}

impl<'g, 'b> PerfectMatchings<'g, 'b> {
    pub fn new(g: &'g Graph, budget: &'b Budget) -> Self {
        Self {
            g,
            allowed: g.all_edges(),
            budget,
            covered: vec![false; g.vertex_count()],
            frames: Vec::new(),
            descend: true,
            done: false,
        }
    }

    /// Restricts the stream to perfect matchings avoiding `forbidden`.
    pub fn avoiding(mut self, forbidden: &EdgeSet) -> Self {
        self.allowed = self.allowed.difference(forbidden);
        self
    }

    fn current(&self) -> Matching {
        let mut set = self.g.empty_edge_set();
        set.extend(self.frames.iter().filter_map(|f| f.chosen));
        Matching::from_trusted(set)
    }

    /// Moves to the next complete matching. `Ok(false)` when exhausted.
    fn advance(&mut self) -> Result<bool, BudgetExhausted> {
        loop {
            if self.descend {
                self.descend = false;
                match self.covered.iter().position(|&c| !c) {
                    None => return Ok(true),
                    Some(v) => self.frames.push(Frame {
                        vertex: v,
                        next: 0,
                        chosen: None,
                    }),
                }
            }
            let Some(top) = self.frames.last_mut() else {
                return Ok(false);
            };
            let v = top.vertex;
            if let Some(e) = top.chosen.take() {
                self.covered[v] = false;
                self.covered[self.g.other_end(e, v)] = false;
            }
            let incident = self.g.incident(v);
            let mut pick = None;
            while top.next < incident.len() {
                let (w, e) = incident[top.next];
                top.next += 1;
                if self.allowed.contains(e) && !self.covered[w] {
                    pick = Some((w, e));
                    break;
                }
            }
            match pick {
                Some((w, e)) => {
                    top.chosen = Some(e);
                    self.covered[v] = true;
                    self.covered[w] = true;
                    self.descend = true;
                    self.budget.tick()?;
                }
                None => {
                    self.frames.pop();
                }
            }
        }
    }
}

impl Iterator for PerfectMatchings<'_, '_> {
    type Item = Result<Matching, BudgetExhausted>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        match self.advance() {
            Ok(true) => Some(Ok(self.current())),
            Ok(false) => {
                self.done = true;
                None
            }
            Err(e) => {
                self.done = true;
                Some(Err(e))
            }
        }
    }
}

pub fn count_perfect_matchings(g: &Graph, budget: &Budget) -> Result<usize, BudgetExhausted> {
    let mut count = 0;
    for m in PerfectMatchings::new(g, budget) {
        m?;
        count += 1;
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{generate, Family};
    use std::collections::HashSet;

    fn count(f: Family) -> usize {
        count_perfect_matchings(&generate(f).unwrap(), &Budget::unlimited()).unwrap()
    }

    #[test]
    fn known_counts() {
        assert_eq!(count(Family::K4), 3);
        assert_eq!(count(Family::K33), 6);
        assert_eq!(count(Family::Petersen), 6);
        assert_eq!(count(Family::Theta), 3);
        assert_eq!(count(Family::Cycle { n: 5 }), 0);
        assert_eq!(count(Family::Complete { n: 6 }), 15);
        assert_eq!(count_perfect_matchings(&Graph::empty(0), &Budget::unlimited()), Ok(1));
    }

    #[test]
    fn order_is_lowest_vertex_then_edge_id() {
        let k4 = generate(Family::K4).unwrap();
        let all: Vec<Vec<EdgeId>> = PerfectMatchings::new(&k4, &Budget::unlimited())
            .map(|m| m.unwrap().edge_ids())
            .collect();
        // edge ids: 01=0 02=1 03=2 12=3 13=4 23=5
        assert_eq!(all, vec![vec![0, 5], vec![1, 4], vec![2, 3]]);
    }

    #[test]
    fn no_duplicates_and_all_perfect() {
        let g = generate(Family::Cube).unwrap();
        let mut seen = HashSet::new();
        for m in PerfectMatchings::new(&g, &Budget::unlimited()) {
            let m = m.unwrap();
            assert!(m.is_perfect(&g));
            assert!(seen.insert(m.edge_ids()));
        }
        assert_eq!(seen.len(), 9);
    }

    #[test]
    fn avoiding_filters() {
        let k4 = generate(Family::K4).unwrap();
        let budget = Budget::unlimited();
        let rest: Vec<_> = PerfectMatchings::new(&k4, &budget)
            .avoiding(&EdgeSet::from_ids(6, [0]))
            .map(|m| m.unwrap().edge_ids())
            .collect();
        assert_eq!(rest, vec![vec![1, 4], vec![2, 3]]);
    }

    #[test]
    fn budget_exhaustion_is_reported_once() {
        let g = generate(Family::Complete { n: 8 }).unwrap();
        let budget = Budget::new(10);
        let items: Vec<_> = PerfectMatchings::new(&g, &budget).collect();
        assert!(items.last().unwrap().is_err());
        assert_eq!(items.iter().filter(|r| r.is_err()).count(), 1);
        assert_eq!(budget.used(), 10);
    }
}
