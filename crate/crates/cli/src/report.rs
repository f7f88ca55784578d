//! JSON documents for `check` and `decompose`.

use serde_json::{json, Map, Value};
use tripm_core::certificate::{CertificateJson, GraphEcho};
use tripm_core::matching::gallai_edmonds;
use tripm_core::tripm::{CheckReport, Ineligibility, Verdict};
use tripm_core::Graph;

/// Verdict tag including the ineligible case.
pub fn tag(report: &CheckReport) -> &'static str {
    match &report.verdict {
        Ok(v) => v.tag(),
        Err(_) => "ineligible",
    }
}

pub fn exit_code(report: &CheckReport) -> u8 {
    match &report.verdict {
        Ok(Verdict::Admissible(_)) => 0,
        Ok(Verdict::NotAdmissible(_)) => 1,
        Ok(Verdict::Unknown(_)) => 2,
        Err(_) => 3,
    }
}

pub fn certificate(g: &Graph, report: &CheckReport) -> Option<CertificateJson> {
    match &report.verdict {
        Ok(Verdict::Admissible(a)) => Some(CertificateJson::from_admissible(g, a)),
        _ => None,
    }
}

fn ineligibility(reason: &Ineligibility) -> Value {
    let kind = match reason {
        Ineligibility::TooSmall { .. } => "too-small",
        Ineligibility::Disconnected => "disconnected",
        Ineligibility::NoPerfectMatching => "no-perfect-matching",
        Ineligibility::UncoveredEdges(_) => "uncovered-edges",
    };
    let mut v = json!({ "kind": kind, "message": reason.to_string() });
    if let Ineligibility::UncoveredEdges(edges) = reason {
        v["edges"] = json!(edges);
    }
    v
}

/// The fields shared by `check` reports and survey records, without the
/// certificate.
pub fn summary_fields(report: &CheckReport) -> Map<String, Value> {
    let mut out = Map::new();
    out.insert("verdict".into(), json!(tag(report)));
    match &report.verdict {
        Ok(Verdict::Admissible(a)) => {
            out.insert("route".into(), json!(a.route));
            if let Some(s) = &a.structural {
                out.insert("clause".into(), json!(s.clause()));
            }
        }
        Ok(Verdict::NotAdmissible(e)) => {
            out.insert(
                "exhaustion".into(),
                json!({ "search": e.search, "nodes": e.nodes, "summary": e.summary }),
            );
        }
        Ok(Verdict::Unknown(b)) => {
            out.insert(
                "budget".into(),
                json!({ "stage": b.stage, "limit": b.limit, "used": b.used }),
            );
        }
        Err(reason) => {
            out.insert("reason".into(), ineligibility(reason));
        }
    }
    out.insert("nodes".into(), json!(report.nodes));
    let stages: Vec<Value> = report
        .stages
        .iter()
        .map(|s| json!({ "stage": s.stage.name(), "nodes": s.nodes, "outcome": s.outcome.name() }))
        .collect();
    out.insert("stages".into(), Value::Array(stages));
    out
}

pub fn check_report(g: &Graph, report: &CheckReport, budget: u64) -> Value {
    let mut out = Map::new();
    out.insert("graph".into(), json!(GraphEcho::of(g)));
    out.insert("n".into(), json!(g.vertex_count()));
    out.insert("m".into(), json!(g.edge_count()));
    out.insert("budget_limit".into(), json!(budget));
    out.extend(summary_fields(report));
    if let Some(c) = certificate(g, report) {
        out.insert("certificate".into(), json!(c));
    }
    Value::Object(out)
}

pub fn decompose_report(g: &Graph) -> Value {
    let ge = gallai_edmonds(g);
    let checks = ge.verify(g);
    let components: Vec<Value> = ge
        .components
        .iter()
        .map(|c| json!({ "vertices": c.vertices.to_vec(), "size": c.vertices.len(), "t": c.edges_to_barrier }))
        .collect();
    json!({
        "graph": GraphEcho::of(g),
        "n": g.vertex_count(),
        "m": g.edge_count(),
        "matching_number": ge.matching_number,
        "deficiency": ge.deficiency(g),
        "D": ge.exposable.to_vec(),
        "A": ge.barrier.to_vec(),
        "C": ge.saturated.to_vec(),
        "omega": ge.component_count(),
        "omega1": ge.single_edge_component_count(),
        "components": components,
        "verify": {
            "partition": checks.partition,
            "components_factor_critical": checks.components_factor_critical,
            "saturated_has_perfect_matching": checks.saturated_has_perfect_matching,
            "barrier_matchable": checks.barrier_matchable,
            "deficiency_matches": checks.deficiency_matches,
            "cubic_parity": checks.cubic_parity,
            "all_hold": checks.all_hold(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use tripm_core::certificate::{parse_certificate, verify_certificate};
    use tripm_core::graph::generators::{generate, Family};
    use tripm_core::tripm::check;
    use tripm_core::Budget;

    fn run(family: Family) -> (Graph, CheckReport) {
        let g = generate(family).unwrap();
        let r = check(&g, &Budget::new(10_000_000));
        (g, r)
    }

    #[test]
    fn admissible_report_embeds_a_verifiable_certificate() {
        let (g, r) = run(Family::Petersen);
        assert_eq!(exit_code(&r), 0);
        let doc = check_report(&g, &r, 10_000_000);
        assert_eq!(doc["verdict"], "admissible");
        assert!(doc.get("type").is_none());
        let cert = parse_certificate(&doc.to_string()).unwrap();
        assert!(verify_certificate(&g, &cert).unwrap().is_valid());
    }

    #[test]
    fn negative_and_ineligible_reports() {
        let (g, r) = run(Family::Path { n: 2 });
        assert_eq!(exit_code(&r), 1);
        let doc = check_report(&g, &r, 5);
        assert_eq!(doc["exhaustion"]["search"], "direct");
        assert!(doc.get("certificate").is_none());

        let (g, r) = run(Family::NoPmCubic16);
        assert_eq!(exit_code(&r), 3);
        let doc = check_report(&g, &r, 5);
        assert_eq!(doc["verdict"], "ineligible");
        assert_eq!(doc["reason"]["kind"], "no-perfect-matching");
    }

    #[test]
    fn decomposition_of_the_barrier_graph() {
        let g = generate(Family::NoPmCubic16).unwrap();
        let doc = decompose_report(&g);
        assert_eq!(doc["A"], json!([15]));
        assert_eq!(doc["C"], json!([]));
        assert_eq!(doc["omega"], 3);
        assert_eq!(doc["omega1"], 3);
        assert_eq!(doc["verify"]["all_hold"], true);

        let c5 = generate(Family::Cycle { n: 5 }).unwrap();
        let doc = decompose_report(&c5);
        assert_eq!(doc["D"], json!([0, 1, 2, 3, 4]));
        assert_eq!(doc["A"], json!([]));
        assert_eq!(doc["C"], json!([]));
    }
}
