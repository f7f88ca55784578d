//! Search straight from the definition.
//!
//! Perfect matchings are streamed in enumeration order and cached. For the
//! `j`-th matching `M2` and every earlier-or-equal `M1`, a third matching
//! avoiding `M1 ∩ M2` is sought with one blossom run. Any admissible triple
//! has some ordering whose first two members are found this way, so an
//! exhausted stream proves there is none.

use super::{require_eligible, BudgetReport, Exhaustion, TripleCertificate, TripmError, Verdict, Route};
use crate::budget::Budget;
use crate::graph::{EdgeSet, Graph};
use crate::matching::{perfect_matching_with_forced, PerfectMatchings};

pub fn find_triple_direct(g: &Graph, budget: &Budget) -> Result<Verdict, TripmError> {
    require_eligible(g)?;
    let start = budget.used();
    let unknown = |budget: &Budget| {
        Verdict::Unknown(BudgetReport {
            stage: "direct",
            limit: budget.limit(),
            used: budget.used() - start,
        })
    };
    let none = g.empty_edge_set();
    let mut seen: Vec<EdgeSet> = Vec::new();
    let mut pairs = 0u64;
    for m2 in PerfectMatchings::new(g, budget) {
        let Ok(m2) = m2 else {
            return Ok(unknown(budget));
        };
        let m2 = m2.into_edges();
        seen.push(m2.clone());
        for m1 in &seen {
            if budget.tick().is_err() {
                return Ok(unknown(budget));
            }
            pairs += 1;
            let common = m1.intersection(&m2);
            let m3 = perfect_matching_with_forced(g, &none, &common)
                .expect("empty forced set is a matching");
            if let Some(m3) = m3 {
                let triple = TripleCertificate::new(m1.clone(), m2, m3.into_edges());
                return Ok(Verdict::found(triple, None, Route::Direct));
            }
        }
    }
    Ok(Verdict::NotAdmissible(Exhaustion {
        search: "direct",
        nodes: budget.used() - start,
        summary: format!(
            "{} perfect matchings, {pairs} ordered pairs examined",
            seen.len()
        ),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{generate, Family};
    use crate::tripm::{verify_triple, Ineligibility};

    fn triple(g: &Graph) -> TripleCertificate {
        match find_triple_direct(g, &Budget::unlimited()).unwrap() {
            Verdict::Admissible(a) => a.triple,
            other => panic!("expected admissible, got {other:?}"),
        }
    }

    #[test]
    fn petersen_admissible() {
        let p = generate(Family::Petersen).unwrap();
        assert!(verify_triple(&p, &triple(&p)).is_valid());
    }

    #[test]
    fn c4_uses_both_alternating_matchings() {
        let c4 = generate(Family::Cycle { n: 4 }).unwrap();
        let t = triple(&c4);
        assert!(verify_triple(&c4, &t).is_valid());
        let distinct: std::collections::HashSet<_> = t.matchings().iter().map(|m| m.to_vec()).collect();
        assert_eq!(distinct.len(), 2);
    }

    #[test]
    fn k2_is_exhausted() {
        let k2 = generate(Family::Path { n: 2 }).unwrap();
        match find_triple_direct(&k2, &Budget::unlimited()).unwrap() {
            Verdict::NotAdmissible(e) => {
                assert_eq!(e.search, "direct");
                assert!(e.summary.starts_with("1 perfect matchings, 1 ordered pairs"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn ineligible_and_budget() {
        let p4 = generate(Family::Path { n: 4 }).unwrap();
        assert_eq!(
            find_triple_direct(&p4, &Budget::unlimited()),
            Err(TripmError::Ineligible(Ineligibility::UncoveredEdges(vec![1])))
        );
        let p = generate(Family::Petersen).unwrap();
        assert!(matches!(
            find_triple_direct(&p, &Budget::new(2)).unwrap(),
            Verdict::Unknown(_)
        ));
    }
}
