//! The full pipeline: eligibility gate, cheap constructive paths, the
//! structural search, and the direct search as final authority.
//!
//! The budget is split 10% / 45% / 45% between the fast paths, the
//! structural search and the direct search. A structural exhaustion is
//! confirmed by the direct search when its share allows; otherwise it
//! stands on its own, since the structural search is exhaustive too.

use super::{
    eligibility, four_regular_construct, four_regular_preconditions, find_triple_direct,
    hamilton_cycle, find_even_2factor, structural_check, triple_from_even_2factor, verify_triple,
    BudgetReport, Ineligibility, Route, StructuralCertificate, Verdict,
};
use crate::budget::Budget;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    Gate,
    FourRegular,
    Hamilton,
    EvenTwoFactor,
    Structural,
    Direct,
}

impl Stage {
    pub fn name(self) -> &'static str {
        match self {
            Self::Gate => "gate",
            Self::FourRegular => "four-regular",
            Self::Hamilton => "hamilton",
            Self::EvenTwoFactor => "even-2-factor",
            Self::Structural => "structural",
            Self::Direct => "direct",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StageOutcome {
    Passed,
    Found,
    NotFound,
    Exhausted,
    OutOfBudget,
    Skipped,
}

impl StageOutcome {
    pub fn name(self) -> &'static str {
        match self {
            Self::Passed => "passed",
            Self::Found => "found",
            Self::NotFound => "not-found",
            Self::Exhausted => "exhausted",
            Self::OutOfBudget => "out-of-budget",
            Self::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageRecord {
    pub stage: Stage,
    pub nodes: u64,
    pub outcome: StageOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub verdict: Result<Verdict, Ineligibility>,
    /// Search nodes charged across all stages.
    pub nodes: u64,
    pub stages: Vec<StageRecord>,
}

struct Pipeline<'a> {
    g: &'a Graph,
    budget: &'a Budget,
    stages: Vec<StageRecord>,
}

impl Pipeline<'_> {
    fn record(&mut self, stage: Stage, child: &Budget, outcome: StageOutcome) {
        self.budget.absorb(child);
        self.stages.push(StageRecord {
            stage,
            nodes: child.used(),
            outcome,
        });
    }

    fn finish(self, verdict: Result<Verdict, Ineligibility>) -> CheckReport {
        if let Ok(Verdict::Admissible(a)) = &verdict {
            let report = verify_triple(self.g, &a.triple);
            assert!(report.is_valid(), "pipeline produced an invalid triple: {report}");
        }
        CheckReport {
            verdict,
            nodes: self.stages.iter().map(|s| s.nodes).sum(),
            stages: self.stages,
        }
    }

    /// Constructive and cycle-based shortcuts. Running out here only means
    /// moving on.
    fn fast_paths(&mut self) -> Option<Verdict> {
        let g = self.g;
        let fast = self.budget.share(10);
        if four_regular_preconditions(g).is_ok() {
            let child = fast.child(fast.remaining());
            let _ = child.tick();
            match four_regular_construct(g) {
                Ok(Some(w)) => {
                    self.record(Stage::FourRegular, &child, StageOutcome::Found);
                    return Some(Verdict::found(w.triple, None, Route::FourRegular));
                }
                _ => self.record(Stage::FourRegular, &child, StageOutcome::NotFound),
            }
            fast.absorb(&child);
        }

        let child = fast.child(fast.remaining() / 2);
        let outcome = match hamilton_cycle(g, &child) {
            Ok(Some(h)) => {
                let f = h.to_factor(g).expect("matching covered graphs have even order");
                let triple = triple_from_even_2factor(g, &f).expect("hamilton cycle is a valid factor");
                self.record(Stage::Hamilton, &child, StageOutcome::Found);
                return Some(Verdict::found(
                    triple,
                    Some(StructuralCertificate::EvenTwoFactor(f)),
                    Route::Hamilton,
                ));
            }
            Ok(None) => StageOutcome::NotFound,
            Err(_) => StageOutcome::OutOfBudget,
        };
        self.record(Stage::Hamilton, &child, outcome);
        fast.absorb(&child);

        let child = fast.child(fast.remaining());
        let outcome = match find_even_2factor(g, &child) {
            Ok(Some(f)) => {
                let triple = triple_from_even_2factor(g, &f).expect("search yields valid factors");
                self.record(Stage::EvenTwoFactor, &child, StageOutcome::Found);
                return Some(Verdict::found(
                    triple,
                    Some(StructuralCertificate::EvenTwoFactor(f)),
                    Route::EvenTwoFactor,
                ));
            }
            Ok(None) => StageOutcome::NotFound,
            Err(_) => StageOutcome::OutOfBudget,
        };
        self.record(Stage::EvenTwoFactor, &child, outcome);
        None
    }
}

fn outcome_of(v: &Verdict) -> StageOutcome {
    match v {
        Verdict::Admissible(_) => StageOutcome::Found,
        Verdict::NotAdmissible(_) => StageOutcome::Exhausted,
        Verdict::Unknown(_) => StageOutcome::OutOfBudget,
    }
}

/// Decides the property for `g` within `budget` search nodes.
pub fn check(g: &Graph, budget: &Budget) -> CheckReport {
    let mut p = Pipeline {
        g,
        budget,
        stages: Vec::new(),
    };
    if let Err(reason) = eligibility(g) {
        p.stages.push(StageRecord {
            stage: Stage::Gate,
            nodes: 0,
            outcome: StageOutcome::NotFound,
        });
        return p.finish(Err(reason));
    }
    p.stages.push(StageRecord {
        stage: Stage::Gate,
        nodes: 0,
        outcome: StageOutcome::Passed,
    });

    if let Some(v) = p.fast_paths() {
        return p.finish(Ok(v));
    }

    let child = budget.share(45);
    let structural = structural_check(g, &child).expect("eligibility was checked");
    p.record(Stage::Structural, &child, outcome_of(&structural));
    if structural.is_admissible() {
        return p.finish(Ok(structural));
    }

    let child = budget.child(budget.remaining());
    let direct = find_triple_direct(g, &child).expect("eligibility was checked");
    p.record(Stage::Direct, &child, outcome_of(&direct));
    let verdict = match (direct, structural) {
        (Verdict::Unknown(_), s @ Verdict::NotAdmissible(_)) => s,
        (Verdict::Unknown(_), Verdict::Unknown(_)) => Verdict::Unknown(BudgetReport {
            stage: "all",
            limit: budget.limit(),
            used: budget.used(),
        }),
        (d, _) => d,
    };
    p.finish(Ok(verdict))
}
