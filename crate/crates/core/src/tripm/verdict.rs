use super::{EvenTwoFactorCertificate, SkeletonCertificate, TripleCertificate};
use serde::{Deserialize, Serialize};

/// Which search produced a positive answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    FourRegular,
    Hamilton,
    EvenTwoFactor,
    Bisubdivision,
    Direct,
}

/// Which literal clause of the characterization a structural witness meets.
/// `Mixed` witnesses have both pure even cycles and branch vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Clause {
    #[serde(rename = "even2factor")]
    EvenTwoFactor,
    Bisubdivision,
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructuralCertificate {
    EvenTwoFactor(EvenTwoFactorCertificate),
    Skeleton(SkeletonCertificate),
}

impl StructuralCertificate {
    pub fn clause(&self) -> Clause {
        match self {
            Self::EvenTwoFactor(_) => Clause::EvenTwoFactor,
            Self::Skeleton(s) => s.clause(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Admissible {
    pub triple: TripleCertificate,
    pub structural: Option<StructuralCertificate>,
    pub route: Route,
}

/// Marker that a search space was exhausted without a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Exhaustion {
    pub search: &'static str,
    pub nodes: u64,
    pub summary: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BudgetReport {
    pub stage: &'static str,
    pub limit: u64,
    pub used: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Admissible(Box<Admissible>),
    NotAdmissible(Exhaustion),
    Unknown(BudgetReport),
}

impl Verdict {
    pub fn tag(&self) -> &'static str {
        match self {
            Self::Admissible(_) => "admissible",
            Self::NotAdmissible(_) => "not-admissible",
            Self::Unknown(_) => "unknown",
        }
    }

    pub fn is_admissible(&self) -> bool {
        matches!(self, Self::Admissible(_))
    }

    pub fn is_not_admissible(&self) -> bool {
        matches!(self, Self::NotAdmissible(_))
    }

    pub fn admissible(&self) -> Option<&Admissible> {
        match self {
            Self::Admissible(a) => Some(a),
            _ => None,
        }
    }

    pub(crate) fn found(
        triple: TripleCertificate,
        structural: Option<StructuralCertificate>,
        route: Route,
    ) -> Self {
        Self::Admissible(Box::new(Admissible {
            triple,
            structural,
            route,
        }))
    }
}
