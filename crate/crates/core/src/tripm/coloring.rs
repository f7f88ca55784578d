use super::ColorSet;
use crate::budget::{Budget, BudgetExhausted};
use crate::graph::{Graph, VertexId};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    NotCubic { vertex: VertexId, degree: usize },
    #[error(transparent)]
    Budget(#[from] BudgetExhausted),
}

struct EdgeColoring<'a> {
    h: &'a Graph,
    budget: &'a Budget,
    colors: Vec<u8>,
    used: Vec<u8>,
}

impl EdgeColoring<'_> {
    /// Colours edges `e..` in id order. A new colour is only opened once all
    /// lower colours are in use, which removes colour permutations.
    fn assign(&mut self, e: usize, opened: u8) -> Result<bool, BudgetExhausted> {
        if e == self.h.edge_count() {
            return Ok(true);
        }
        let (u, v) = self.h.endpoints(e);
        for c in 1..=(opened + 1).min(3) {
            let bit = 1u8 << (c - 1);
            if (self.used[u] | self.used[v]) & bit != 0 {
                continue;
            }
            self.budget.tick()?;
            self.colors[e] = c;
            self.used[u] |= bit;
            self.used[v] |= bit;
            if self.assign(e + 1, opened.max(c))? {
                return Ok(true);
            }
            self.used[u] &= !bit;
            self.used[v] &= !bit;
        }
        Ok(false)
    }
}

/// A proper 3-edge-colouring of a cubic loopless multigraph, one colour per
/// edge id; `None` once the search space is exhausted.
pub fn color_cubic_3(h: &Graph, budget: &Budget) -> Result<Option<Vec<ColorSet>>, ColoringError> {
    if let Some(v) = (0..h.vertex_count()).find(|&v| h.degree(v) != 3) {
        return Err(ColoringError::NotCubic {
            vertex: v,
            degree: h.degree(v),
        });
    }
    let mut search = EdgeColoring {
        h,
        budget,
        colors: vec![0; h.edge_count()],
        used: vec![0; h.vertex_count()],
    };
    if !search.assign(0, 0)? {
        return Ok(None);
    }
    Ok(Some(search.colors.into_iter().map(ColorSet::single).collect()))
}
