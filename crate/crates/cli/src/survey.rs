//! Streaming corpus checks: one JSONL record per graph6 line.

use crate::report;
use anyhow::{Context, Result};
use rayon::prelude::*;
use serde_json::{json, Map, Value};
use std::collections::BTreeMap;
use std::io::{BufRead, Write};
use std::path::PathBuf;
use std::time::Instant;
use tripm_core::graph::graph6::parse_graph6;
use tripm_core::tripm::{check, find_triple_direct, structural_check, Verdict};
use tripm_core::{Budget, Graph};

const BATCH: usize = 512;
const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, Default)]
pub struct Options {
    pub budget: u64,
    pub cross_validate: bool,
    /// Worker threads; rayon's default when 0.
    pub jobs: usize,
    /// Directory receiving one certificate file per admissible line;
    /// certificates are inlined when absent.
    pub cert_dir: Option<PathBuf>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Summary {
    pub total: usize,
    pub verdicts: BTreeMap<&'static str, usize>,
    pub errors: usize,
    pub disagreements: usize,
}

impl Summary {
    fn footer(&self) -> Value {
        let mut counts = Map::new();
        counts.insert("total".into(), json!(self.total));
        for tag in ["admissible", "not-admissible", "unknown", "ineligible"] {
            counts.insert(tag.into(), json!(self.verdicts.get(tag).copied().unwrap_or(0)));
        }
        counts.insert("error".into(), json!(self.errors));
        counts.insert("disagreements".into(), json!(self.disagreements));
        json!({ "summary": counts })
    }
}

struct Outcome {
    record: Value,
    tag: Option<&'static str>,
    disagreement: bool,
}

fn decisive(v: &Verdict) -> Option<bool> {
    match v {
        Verdict::Admissible(_) => Some(true),
        Verdict::NotAdmissible(_) => Some(false),
        Verdict::Unknown(_) => None,
    }
}

fn cross_validate(g: &Graph, limit: u64) -> Result<(Value, bool)> {
    let direct = find_triple_direct(g, &Budget::new(limit))?;
    let structural = structural_check(g, &Budget::new(limit))?;
    let disagree = matches!(
        (decisive(&direct), decisive(&structural)),
        (Some(a), Some(b)) if a != b
    );
    let doc = json!({ "direct": direct.tag(), "structural": structural.tag(), "agree": !disagree });
    Ok((doc, disagree))
}

fn process(line_no: usize, text: &str, opts: &Options) -> Outcome {
    let start = Instant::now();
    let mut record = Map::new();
    record.insert("line".into(), json!(line_no));
    record.insert("graph6".into(), json!(text));
    let fail = |mut record: Map<String, Value>, msg: String| Outcome {
        record: {
            record.insert("error".into(), json!(msg));
            Value::Object(record)
        },
        tag: None,
        disagreement: false,
    };
    let g = match parse_graph6(text) {
        Ok(g) => g,
        Err(e) => return fail(record, e.to_string()),
    };
    let report = check(&g, &Budget::new(opts.budget));
    let tag = report::tag(&report);
    record.extend(report::summary_fields(&report));
    let mut disagreement = false;
    if opts.cross_validate && report.verdict.is_ok() {
        match cross_validate(&g, opts.budget) {
            Ok((doc, d)) => {
                disagreement = d;
                record.insert("cross_validation".into(), doc);
            }
            Err(e) => return fail(record, e.to_string()),
        }
    }
    if let Some(cert) = report::certificate(&g, &report) {
        match &opts.cert_dir {
            Some(dir) => {
                let path = dir.join(format!("{line_no}.json"));
                if let Err(e) = std::fs::write(&path, cert.to_json_pretty()) {
                    return fail(record, format!("writing {}: {e}", path.display()));
                }
                record.insert("certificate_path".into(), json!(path));
            }
            None => {
                record.insert("certificate".into(), json!(cert));
            }
        }
    }
    record.insert("elapsed_ms".into(), json!(start.elapsed().as_millis() as u64));
    Outcome {
        record: Value::Object(record),
        tag: Some(tag),
        disagreement,
    }
}

/// Checks every graph6 line of `input`, writing records in input order and
/// a summary footer last. Blank lines and a leading `>>graph6<<` header
/// produce no record.
pub fn survey<R: BufRead, W: Write>(input: R, out: &mut W, opts: &Options) -> Result<Summary> {
    if let Some(dir) = &opts.cert_dir {
        std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(opts.jobs).build()?;
    let mut summary = Summary::default();
    let mut lines = input.lines().enumerate();
    loop {
        let mut batch = Vec::with_capacity(BATCH);
        for (idx, line) in lines.by_ref() {
            let line = line.context("reading survey input")?;
            let mut text = line.trim();
            if idx == 0 {
                text = text.strip_prefix(HEADER).unwrap_or(text);
            }
            if !text.is_empty() {
                batch.push((idx + 1, text.to_string()));
            }
            if batch.len() == BATCH {
                break;
            }
        }
        if batch.is_empty() {
            break;
        }
        let outcomes: Vec<Outcome> = pool.install(|| {
            batch
                .par_iter()
                .map(|(line_no, text)| process(*line_no, text, opts))
                .collect()
        });
        for o in outcomes {
            summary.total += 1;
            match o.tag {
                Some(tag) => *summary.verdicts.entry(tag).or_default() += 1,
                None => summary.errors += 1,
            }
            summary.disagreements += usize::from(o.disagreement);
            serde_json::to_writer(&mut *out, &o.record)?;
            writeln!(out)?;
        }
    }
    serde_json::to_writer(&mut *out, &summary.footer())?;
    writeln!(out)?;
    out.flush()?;
    Ok(summary)
}
