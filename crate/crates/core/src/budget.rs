//! Node budgets for the exponential searches.
//!
//! Every search charges one unit per search-tree node it expands. Budgets
//! count nodes rather than time so that outcomes are reproducible.

use std::cell::Cell;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("search budget of {limit} nodes exhausted")]
pub struct BudgetExhausted {
    pub limit: u64,
}

/// Shared by reference between nested searches; not thread-safe.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    used: Cell<u64>,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Self {
            limit,
            used: Cell::new(0),
        }
    }

    pub fn unlimited() -> Self {
        Self::new(u64::MAX)
    }

    /// Charges one node.
    pub fn tick(&self) -> Result<(), BudgetExhausted> {
        let used = self.used.get();
        if used >= self.limit {
            return Err(BudgetExhausted { limit: self.limit });
        }
        self.used.set(used + 1);
        Ok(())
    }

    pub fn used(&self) -> u64 {
        self.used.get()
    }

    pub fn is_exhausted(&self) -> bool {
        self.used.get() >= self.limit
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn remaining(&self) -> u64 {
        self.limit - self.used.get()
    }

    /// A fresh budget of at most `limit` nodes, capped by what is left here.
    /// Charge it back with [`Budget::absorb`].
    pub fn child(&self, limit: u64) -> Budget {
        Budget::new(limit.min(self.remaining()))
    }

    /// A child holding `percent` of this budget's total limit.
    pub fn share(&self, percent: u64) -> Budget {
        let limit = if self.limit == u64::MAX {
            u64::MAX
        } else {
            (self.limit as u128 * percent as u128 / 100) as u64
        };
        self.child(limit)
    }

    pub fn absorb(&self, child: &Budget) {
        self.used
            .set(self.used.get().saturating_add(child.used()).min(self.limit));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ticks_until_limit() {
        let b = Budget::new(2);
        assert!(b.tick().is_ok());
        assert!(b.tick().is_ok());
        assert_eq!(b.tick(), Err(BudgetExhausted { limit: 2 }));
        assert_eq!(b.used(), 2);
    }

    #[test]
    fn children_are_capped_and_absorbed() {
        let parent = Budget::new(100);
        let child = parent.share(10);
        assert_eq!(child.limit(), 10);
        child.tick().unwrap();
        parent.absorb(&child);
        assert_eq!(parent.used(), 1);
        assert_eq!(parent.child(500).limit(), 99);
        assert_eq!(Budget::unlimited().share(45).limit(), u64::MAX);
    }
}
