//! Three perfect matchings with empty common intersection.
//!
//! Searches come in two flavours: the direct search over pairs of perfect
//! matchings, which is the ground truth, and the structural search for an
//! even 2-factor or a spanning bisubdivision of a 3-edge-colourable cubic
//! skeleton. Every positive answer carries a [`TripleCertificate`] that
//! [`verify_triple`] accepts.

mod check;
mod coloring;
mod cycles;
mod direct;
mod four_regular;
mod skeleton;
mod structural;
mod triple;
mod verdict;

pub use check::{check, CheckReport, Stage, StageOutcome, StageRecord};
pub use coloring::{color_cubic_3, ColoringError};
pub use cycles::{
    find_even_2factor, hamilton_cycle, triple_from_even_2factor, EvenTwoFactorCertificate,
    FactorViolation, HamiltonCycle,
};
pub use direct::find_triple_direct;
pub use four_regular::{
    four_regular_construct, four_regular_construct_from, four_regular_fastpath,
    four_regular_preconditions, FourRegularStep, FourRegularWitness,
};
pub use skeleton::{
    bisubdivide, chain_labels, extract_mixed_skeleton, extract_skeleton, lift_triple,
    Bicontraction, ColorSet, SkeletonCertificate, SkeletonReject, SkeletonViolation,
};
pub use structural::{find_bisubdivision_witness, structural_check};
pub use triple::{verify_triple, TripleCertificate, TripleReport, TripleViolation};
pub use verdict::{Admissible, BudgetReport, Clause, Exhaustion, Route, StructuralCertificate, Verdict};

use crate::graph::{EdgeId, Graph};
use crate::matching::{matching_cover, MatchingCover};
use std::fmt;
use thiserror::Error;

/// Why a graph falls outside the domain of the property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ineligibility {
    TooSmall { n: usize },
    Disconnected,
    NoPerfectMatching,
    UncoveredEdges(Vec<EdgeId>),
}

impl fmt::Display for Ineligibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::TooSmall { n } => write!(f, "graph has {n} vertices, need at least 2"),
            Self::Disconnected => write!(f, "graph is disconnected"),
            Self::NoPerfectMatching => write!(f, "graph has no perfect matching"),
            Self::UncoveredEdges(edges) => {
                write!(f, "edges {edges:?} lie in no perfect matching")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TripmError {
    #[error("graph is not matching covered: {0}")]
    Ineligible(Ineligibility),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("malformed certificate: {0}")]
    Malformed(String),
    #[error("four-regular construction failed on {n} vertices")]
    ConstructionFailed { n: usize },
}

/// The matching-covered gate shared by all searches.
pub fn eligibility(g: &Graph) -> Result<MatchingCover, Ineligibility> {
    if g.vertex_count() < 2 {
        return Err(Ineligibility::TooSmall { n: g.vertex_count() });
    }
    let cover = matching_cover(g);
    if !cover.connected {
        return Err(Ineligibility::Disconnected);
    }
    if !cover.has_perfect_matching() {
        return Err(Ineligibility::NoPerfectMatching);
    }
    let uncovered = cover.uncovered_edges();
    if !uncovered.is_empty() {
        return Err(Ineligibility::UncoveredEdges(uncovered));
    }
    Ok(cover)
}

fn require_eligible(g: &Graph) -> Result<(), TripmError> {
    eligibility(g).map(|_| ()).map_err(TripmError::Ineligible)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{generate, Family};

    #[test]
    fn gate_reasons() {
        assert_eq!(eligibility(&Graph::empty(1)).unwrap_err(), Ineligibility::TooSmall { n: 1 });
        assert_eq!(eligibility(&Graph::empty(2)).unwrap_err(), Ineligibility::Disconnected);
        assert_eq!(
            eligibility(&generate(Family::NoPmCubic16).unwrap()).unwrap_err(),
            Ineligibility::NoPerfectMatching
        );
        assert_eq!(
            eligibility(&generate(Family::Path { n: 4 }).unwrap()).unwrap_err(),
            Ineligibility::UncoveredEdges(vec![1])
        );
        assert!(eligibility(&generate(Family::Petersen).unwrap()).is_ok());
    }
}
