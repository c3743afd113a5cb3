use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use cyclehom::graph::parse_graph;
use cyclehom::lists::parse_lists;
use cyclehom::{Coloring, CycleColors, Graph, ListAssignment};

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    parse_graph(&read_text(path)?).with_context(|| format!("parsing graph {}", path.display()))
}

/// Lists from a file, or full lists when no file is given.
pub fn read_lists(path: Option<&Path>, n: usize, k: usize) -> Result<ListAssignment> {
    match path {
        Some(p) => parse_lists(&read_text(p)?, n, k).with_context(|| format!("parsing lists {}", p.display())),
        None => Ok(ListAssignment::full(n, CycleColors::new(k)?)),
    }
}

/// Accepts `solve` output: an optional `SAT` line, then `v <vertex> <color>`.
pub fn read_coloring(path: &Path, n: usize) -> Result<Coloring> {
    let text = read_text(path)?;
    let mut f = vec![None; n];
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || line == "SAT" {
            continue;
        }
        let body = line.strip_prefix("v ").unwrap_or(line);
        let nums: Vec<usize> = body
            .split_whitespace()
            .map(|t| t.parse())
            .collect::<Result<_, _>>()
            .with_context(|| format!("line {}: expected `v <vertex> <color>`", i + 1))?;
        let [v, c] = nums[..] else { bail!("line {}: expected `v <vertex> <color>`", i + 1) };
        if v >= n {
            bail!("line {}: vertex {v} outside 0..{n}", i + 1);
        }
        f[v] = Some(c);
    }
    f.into_iter()
        .enumerate()
        .map(|(v, c)| c.with_context(|| format!("vertex {v} has no color")))
        .collect()
}

pub fn format_coloring(f: &[usize]) -> String {
    let mut out = String::from("SAT\n");
    for (v, c) in f.iter().enumerate() {
        out.push_str(&format!("v {v} {c}\n"));
    }
    out
}

/// Write to `path`, or to stdout when there is none.
pub fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
