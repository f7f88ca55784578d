//! The structural route: an even 2-factor, or a spanning subgraph that
//! contracts to a 3-edge-colourable cubic skeleton (possibly alongside pure
//! even cycles).

use super::{
    color_cubic_3, extract_mixed_skeleton, find_even_2factor, lift_triple, require_eligible,
    triple_from_even_2factor, BudgetReport, ColoringError, Exhaustion, Route, SkeletonCertificate,
    StructuralCertificate, TripmError, Verdict,
};
use crate::budget::{Budget, BudgetExhausted};
use crate::graph::{EdgeId, EdgeSet, Graph};

/// Include/exclude search over edges in id order, keeping every spanning
/// degree at most 3 and every vertex able to reach degree 2.
struct SpanningSearch<'a> {
    g: &'a Graph,
    budget: &'a Budget,
    degree: Vec<usize>,
    undecided: Vec<usize>,
    chosen: EdgeSet,
}

impl SpanningSearch<'_> {
    fn search(&mut self, e: EdgeId) -> Result<Option<SkeletonCertificate>, BudgetExhausted> {
        if e == self.g.edge_count() {
            return self.leaf();
        }
        let (u, v) = self.g.endpoints(e);
        self.undecided[u] -= 1;
        self.undecided[v] -= 1;
        let mut found = None;
        if self.degree[u] < 3 && self.degree[v] < 3 {
            self.budget.tick()?;
            self.chosen.insert(e);
            self.degree[u] += 1;
            self.degree[v] += 1;
            found = self.search(e + 1)?;
            self.chosen.remove(e);
            self.degree[u] -= 1;
            self.degree[v] -= 1;
        }
        if found.is_none()
            && self.degree[u] + self.undecided[u] >= 2
            && self.degree[v] + self.undecided[v] >= 2
        {
            self.budget.tick()?;
            found = self.search(e + 1)?;
        }
        self.undecided[u] += 1;
        self.undecided[v] += 1;
        Ok(found)
    }

    fn leaf(&mut self) -> Result<Option<SkeletonCertificate>, BudgetExhausted> {
        let Ok(contraction) = extract_mixed_skeleton(self.g, &self.chosen) else {
            return Ok(None);
        };
        match color_cubic_3(&contraction.skeleton, self.budget) {
            Ok(Some(coloring)) => Ok(Some(contraction.with_coloring(coloring))),
            Ok(None) => Ok(None),
            Err(ColoringError::Budget(b)) => Err(b),
            Err(ColoringError::NotCubic { .. }) => unreachable!("contraction yields a cubic skeleton"),
        }
    }
}

/// A spanning subgraph with degrees in {2, 3} whose branch components
/// contract to a 3-edge-colourable cubic skeleton and whose other
/// components are even cycles. `None` once the search space is exhausted.
pub fn find_bisubdivision_witness(
    g: &Graph,
    budget: &Budget,
) -> Result<Option<SkeletonCertificate>, BudgetExhausted> {
    let mut search = SpanningSearch {
        g,
        budget,
        degree: vec![0; g.vertex_count()],
        undecided: g.degrees(),
        chosen: g.empty_edge_set(),
    };
    search.search(0)
}

/// Tries an even 2-factor first, then a skeleton witness.
pub fn structural_check(g: &Graph, budget: &Budget) -> Result<Verdict, TripmError> {
    require_eligible(g)?;
    let start = budget.used();
    let unknown = |budget: &Budget| {
        Verdict::Unknown(BudgetReport {
            stage: "structural",
            limit: budget.limit(),
            used: budget.used() - start,
        })
    };
    match find_even_2factor(g, budget) {
        Err(_) => return Ok(unknown(budget)),
        Ok(Some(f)) => {
            let triple = triple_from_even_2factor(g, &f)?;
            return Ok(Verdict::found(
                triple,
                Some(StructuralCertificate::EvenTwoFactor(f)),
                Route::EvenTwoFactor,
            ));
        }
        Ok(None) => {}
    }
    match find_bisubdivision_witness(g, budget) {
        Err(_) => Ok(unknown(budget)),
        Ok(Some(sc)) => {
            let triple = lift_triple(g, &sc)?;
            Ok(Verdict::found(
                triple,
                Some(StructuralCertificate::Skeleton(sc)),
                Route::Bisubdivision,
            ))
        }
        Ok(None) => Ok(Verdict::NotAdmissible(Exhaustion {
            search: "structural",
            nodes: budget.used() - start,
            summary: "no even 2-factor and no colourable skeleton".into(),
        })),
    }
}
