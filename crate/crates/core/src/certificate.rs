//! JSON certificates.
//!
//! A certificate carries a `"type"` (`triple`, `even2factor` or `skeleton`),
//! an optional echo of the graph it was issued for, and the edge sets that
//! prove admissibility. Edges are written as `[u, v]` pairs with `u < v`,
//! sorted, plus the matching edge ids; when ids are absent, pairs are
//! resolved to the lowest unused parallel edge. Verification needs only the
//! certificate and the graph.
//!
//! Shape problems (missing fields, wrong arity) are [`SchemaError`]s; claims
//! that are well-formed but false are reported as violations.

use crate::graph::edgelist::{parse_edge_list, write_edge_list};
use crate::graph::graph6::write_graph6;
use crate::graph::{EdgeId, EdgeSet, Graph};
use crate::tripm::{
    lift_triple, triple_from_even_2factor, verify_triple, Admissible, Clause, ColorSet,
    EvenTwoFactorCertificate, SkeletonCertificate, StructuralCertificate, TripleCertificate,
};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CertificateKind {
    Triple,
    #[serde(rename = "even2factor")]
    EvenTwoFactor,
    Skeleton,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphFormat {
    Graph6,
    Edgelist,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphEcho {
    pub format: GraphFormat,
    pub data: String,
}

impl GraphEcho {
    /// graph6 for simple graphs, edge list otherwise.
    pub fn of(g: &Graph) -> Self {
        match write_graph6(g) {
            Ok(data) => Self {
                format: GraphFormat::Graph6,
                data,
            },
            Err(_) => Self {
                format: GraphFormat::Edgelist,
                data: write_edge_list(g),
            },
        }
    }

    fn matches(&self, g: &Graph) -> bool {
        match self.format {
            GraphFormat::Graph6 => write_graph6(g).is_ok_and(|s| s == self.data.trim_end()),
            GraphFormat::Edgelist => parse_edge_list(&self.data).is_ok_and(|h| &h == g),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeListJson {
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_ids: Option<Vec<EdgeId>>,
}

impl EdgeListJson {
    pub fn of(g: &Graph, set: &EdgeSet) -> Self {
        let ids = set.to_vec();
        Self {
            edges: ids
                .iter()
                .map(|&e| {
                    let (u, v) = g.endpoints(e);
                    [u, v]
                })
                .collect(),
            edge_ids: Some(ids),
        }
    }

    /// Resolves to edge ids of `g`, or a violation message.
    fn resolve(&self, g: &Graph, what: &str) -> Result<Vec<EdgeId>, String> {
        match &self.edge_ids {
            Some(ids) => {
                for (&e, &[u, v]) in ids.iter().zip(&self.edges) {
                    if e >= g.edge_count() {
                        return Err(format!("{what}: edge id {e} out of range"));
                    }
                    let (x, y) = g.endpoints(e);
                    if (u.min(v), u.max(v)) != (x, y) {
                        return Err(format!(
                            "{what}: pair [{u}, {v}] does not match edge {e} = [{x}, {y}]"
                        ));
                    }
                }
                Ok(ids.clone())
            }
            None => {
                let set = g
                    .edge_set_from_pairs(self.edges.iter().map(|&[u, v]| (u, v)))
                    .ok_or_else(|| format!("{what}: some pair in {:?} is not an edge", self.edges))?;
                Ok(set.to_vec())
            }
        }
    }

    fn resolve_set(&self, g: &Graph, what: &str) -> Result<EdgeSet, String> {
        let ids = self.resolve(g, what)?;
        let mut set = g.empty_edge_set();
        for e in ids {
            if !set.insert(e) {
                return Err(format!("{what}: edge {e} listed twice"));
            }
        }
        Ok(set)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkeletonJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    #[serde(rename = "type")]
    pub kind: CertificateKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphEcho>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub clause: Option<Clause>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matchings: Option<Vec<EdgeListJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factor: Option<EdgeListJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spanning: Option<EdgeListJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub skeleton: Option<SkeletonJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub branch_vertices: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chain_map: Option<Vec<Vec<EdgeId>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cycles: Option<Vec<Vec<EdgeId>>>,
    /// Skeleton edge id to its colours.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coloring: Option<BTreeMap<usize, Vec<u8>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemaError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("certificate of type {kind} lacks field `{field}`")]
    MissingField { kind: &'static str, field: &'static str },
    #[error("expected 3 matchings, found {0}")]
    MatchingCount(usize),
    #[error("`{field}` has {edges} edges but {ids} edge ids")]
    IdCount {
        field: &'static str,
        edges: usize,
        ids: usize,
    },
}

/// Outcome of checking a certificate against a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub violations: Vec<String>,
    /// The triple that was checked, when one could be formed.
    pub triple: Option<TripleCertificate>,
}

impl Verification {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl CertificateJson {
    pub fn from_triple(g: &Graph, t: &TripleCertificate) -> Self {
        Self {
            kind: CertificateKind::Triple,
            graph: Some(GraphEcho::of(g)),
            clause: None,
            matchings: Some(t.matchings().iter().map(|m| EdgeListJson::of(g, m)).collect()),
            factor: None,
            spanning: None,
            skeleton: None,
            branch_vertices: None,
            chain_map: None,
            cycles: None,
            coloring: None,
        }
    }

    /// The structural certificate when there is one, else the bare triple.
    /// The triple is included either way.
    pub fn from_admissible(g: &Graph, a: &Admissible) -> Self {
        let mut out = Self::from_triple(g, &a.triple);
        match &a.structural {
            None => {}
            Some(s @ StructuralCertificate::EvenTwoFactor(f)) => {
                out.kind = CertificateKind::EvenTwoFactor;
                out.clause = Some(s.clause());
                out.factor = Some(EdgeListJson::of(g, &f.factor));
            }
            Some(s @ StructuralCertificate::Skeleton(sc)) => {
                out.kind = CertificateKind::Skeleton;
                out.clause = Some(s.clause());
                out.spanning = Some(EdgeListJson::of(g, &sc.spanning));
                out.skeleton = Some(SkeletonJson {
                    n: sc.skeleton.vertex_count(),
                    edges: sc.skeleton.edges().iter().map(|&(u, v)| [u, v]).collect(),
                });
                out.branch_vertices = Some(sc.branch_vertices.clone());
                out.chain_map = Some(sc.chain_map.clone());
                out.cycles = Some(sc.cycles.clone());
                out.coloring = Some(
                    sc.coloring
                        .iter()
                        .enumerate()
                        .map(|(e, c)| (e, c.colors().collect()))
                        .collect(),
                );
            }
        }
        out
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

pub fn parse_certificate(text: &str) -> Result<CertificateJson, SchemaError> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| SchemaError::Json(e.to_string()))?;
    // A check report embeds the certificate under "certificate".
    let value = match value.get("certificate") {
        Some(inner) if value.get("type").is_none() => inner.clone(),
        _ => value,
    };
    serde_json::from_value(value).map_err(|e| SchemaError::Json(e.to_string()))
}

fn kind_name(kind: CertificateKind) -> &'static str {
    match kind {
        CertificateKind::Triple => "triple",
        CertificateKind::EvenTwoFactor => "even2factor",
        CertificateKind::Skeleton => "skeleton",
    }
}

fn check_ids(field: &'static str, list: &EdgeListJson) -> Result<(), SchemaError> {
    match &list.edge_ids {
        Some(ids) if ids.len() != list.edges.len() => Err(SchemaError::IdCount {
            field,
            edges: list.edges.len(),
            ids: ids.len(),
        }),
        _ => Ok(()),
    }
}

fn require<'a, T>(kind: CertificateKind, field: &'static str, value: &'a Option<T>) -> Result<&'a T, SchemaError> {
    value.as_ref().ok_or(SchemaError::MissingField {
        kind: kind_name(kind),
        field,
    })
}

/// Checks every claim in `doc` against `g`.
pub fn verify_certificate(g: &Graph, doc: &CertificateJson) -> Result<Verification, SchemaError> {
    let kind = doc.kind;
    if let Some(ms) = &doc.matchings {
        if ms.len() != 3 {
            return Err(SchemaError::MatchingCount(ms.len()));
        }
        for m in ms {
            check_ids("matchings", m)?;
        }
    }
    for (field, list) in [("factor", &doc.factor), ("spanning", &doc.spanning)] {
        if let Some(list) = list {
            check_ids(field, list)?;
        }
    }
    let mut violations = Vec::new();
    if let Some(echo) = &doc.graph {
        if !echo.matches(g) {
            violations.push("graph echo does not match the input graph".to_string());
        }
    }

    let given = match &doc.matchings {
        Some(ms) => {
            let mut sets = Vec::new();
            for (i, m) in ms.iter().enumerate() {
                match m.resolve_set(g, &format!("M{}", i + 1)) {
                    Ok(s) => sets.push(s),
                    Err(v) => violations.push(v),
                }
            }
            (sets.len() == 3).then(|| {
                let mut it = sets.into_iter();
                let (a, b, c) = (it.next().unwrap(), it.next().unwrap(), it.next().unwrap());
                TripleCertificate::new(a, b, c)
            })
        }
        None => None,
    };

    let derived = match kind {
        CertificateKind::Triple => {
            require(kind, "matchings", &doc.matchings)?;
            None
        }
        CertificateKind::EvenTwoFactor => {
            let factor = require(kind, "factor", &doc.factor)?;
            match factor.resolve_set(g, "factor") {
                Err(v) => {
                    violations.push(v);
                    None
                }
                Ok(set) => {
                    let f = EvenTwoFactorCertificate { factor: set };
                    match triple_from_even_2factor(g, &f) {
                        Ok(t) => Some(t),
                        Err(e) => {
                            violations.push(e.to_string());
                            None
                        }
                    }
                }
            }
        }
        CertificateKind::Skeleton => match skeleton_from_json(g, doc)? {
            Err(v) => {
                violations.push(v);
                None
            }
            Ok(sc) => {
                if let Some(clause) = doc.clause {
                    if clause != sc.clause() {
                        violations.push(format!(
                            "clause flag {clause:?} does not match the witness ({:?})",
                            sc.clause()
                        ));
                    }
                }
                match lift_triple(g, &sc) {
                    Ok(t) => Some(t),
                    Err(e) => {
                        violations.push(e.to_string());
                        None
                    }
                }
            }
        },
    };

    for (label, triple) in [("derived", &derived), ("given", &given)] {
        if let Some(t) = triple {
            let report = verify_triple(g, t);
            if !report.is_valid() {
                violations.push(format!("{label} matchings: {report}"));
            }
        }
    }
    Ok(Verification {
        violations,
        triple: derived.or(given),
    })
}

/// Outer error: schema; inner error: violation.
fn skeleton_from_json(g: &Graph, doc: &CertificateJson) -> Result<Result<SkeletonCertificate, String>, SchemaError> {
    let kind = doc.kind;
    let spanning = require(kind, "spanning", &doc.spanning)?;
    let sk = require(kind, "skeleton", &doc.skeleton)?;
    let branch = require(kind, "branch_vertices", &doc.branch_vertices)?;
    let chain_map = require(kind, "chain_map", &doc.chain_map)?;
    let coloring = require(kind, "coloring", &doc.coloring)?;
    let cycles = doc.cycles.clone().unwrap_or_default();

    let spanning = match spanning.resolve_set(g, "spanning") {
        Ok(s) => s,
        Err(v) => return Ok(Err(v)),
    };
    let skeleton = match Graph::new(sk.n, sk.edges.iter().map(|&[u, v]| (u, v))) {
        Ok(h) => h,
        Err(e) => return Ok(Err(format!("skeleton: {e}"))),
    };
    let canonical: Vec<(usize, usize)> = sk.edges.iter().map(|&[u, v]| (u.min(v), u.max(v))).collect();
    if skeleton.edges() != canonical.as_slice() {
        return Ok(Err("skeleton edges are not listed in sorted order".into()));
    }
    if branch.iter().any(|&v| v >= g.vertex_count()) {
        return Ok(Err("branch vertex out of range".into()));
    }
    let mut colors = vec![ColorSet::EMPTY; skeleton.edge_count()];
    for (&e, cs) in coloring {
        if e >= colors.len() {
            return Ok(Err(format!("coloring names skeleton edge {e}, which does not exist")));
        }
        match ColorSet::from_colors(cs.iter().copied()) {
            Some(c) => colors[e] = c,
            None => return Ok(Err(format!("skeleton edge {e} has colours {cs:?} outside 1..=3"))),
        }
    }
    Ok(Ok(SkeletonCertificate {
        spanning,
        skeleton,
        branch_vertices: branch.clone(),
        chain_map: chain_map.clone(),
        cycles,
        coloring: colors,
    }))
}
