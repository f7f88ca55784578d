//! Reading graphs from files or stdin.

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use std::io::Read;
use std::path::Path;
use tripm_core::graph::edgelist::parse_edge_list;
use tripm_core::graph::graph6::parse_graph6;
use tripm_core::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Edgelist,
}

/// Reads a whole file, or stdin when the path is absent or `-`.
pub fn read_source(path: Option<&Path>) -> Result<String> {
    let mut text = String::new();
    match path {
        Some(p) if p != Path::new("-") => {
            text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
        }
        _ => {
            std::io::stdin().read_to_string(&mut text).context("reading stdin")?;
        }
    }
    Ok(text)
}

/// An edge list starts with an `n m` header; graph6 lines never contain
/// whitespace.
pub fn detect_format(text: &str) -> Format {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
    if first.split_whitespace().count() == 2 {
        Format::Edgelist
    } else {
        Format::Graph6
    }
}

/// Parses a single graph. A graph6 source must hold exactly one non-blank
/// line.
pub fn parse_graph(text: &str, format: Option<Format>) -> Result<Graph> {
    match format.unwrap_or_else(|| detect_format(text)) {
        Format::Edgelist => Ok(parse_edge_list(text)?),
        Format::Graph6 => {
            let mut lines = text
                .lines()
                .enumerate()
                .filter(|(_, l)| !l.trim().is_empty());
            let Some((idx, line)) = lines.next() else {
                bail!("empty input, expected one graph6 line");
            };
            if let Some((extra, _)) = lines.next() {
                bail!("line {}: expected a single graph, use `survey` for streams", extra + 1);
            }
            parse_graph6(line.trim()).with_context(|| format!("line {}", idx + 1))
        }
    }
}

pub fn read_graph(path: Option<&Path>, format: Option<Format>) -> Result<Graph> {
    let text = read_source(path)?;
    parse_graph(&text, format)
}
