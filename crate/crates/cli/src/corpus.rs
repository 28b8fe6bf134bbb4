//! Concurrent batch analysis of a directory of spec files.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use classgraph_core::analysis::AnalysisOptions;
use classgraph_core::report::AnalysisReport;
use rayon::prelude::*;

use crate::{analyze_checked, read_spec, Failure};

enum Row {
    Ok(AnalysisReport),
    Violations(AnalysisReport, Vec<String>),
    Error(Failure),
}

struct Entry {
    file: String,
    row: Row,
}

fn spec_paths(dir: &Path) -> Result<Vec<PathBuf>, Failure> {
    let entries = fs::read_dir(dir).map_err(|e| Failure { code: 2, message: format!("{}: {e}", dir.display()) })?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "json"))
        .filter(|p| !p.to_string_lossy().ends_with(".prediction.json"))
        .collect();
    paths.sort();
    Ok(paths)
}

fn process(path: &Path, opts: &AnalysisOptions) -> Row {
    let report = match read_spec(path).and_then(|spec| analyze_checked(&spec, opts)) {
        Ok(r) => r,
        Err(f) => return Row::Error(f),
    };
    let violations = report.violations();
    if violations.is_empty() {
        Row::Ok(report)
    } else {
        Row::Violations(report, violations)
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn summary(r: &AnalysisReport) -> [String; 7] {
    let g = &r.graph;
    [
        r.name.clone(),
        r.order.to_string(),
        format!("{}v/{}e/{}c", g.vertices().len(), g.edges().len(), g.components().len()),
        yes_no(r.dgroup.spectral).to_string(),
        yes_no(r.block_square.found).to_string(),
        serde_json::to_value(r.decomposition.status)
            .ok()
            .and_then(|v| v.as_str().map(String::from))
            .unwrap_or_default(),
        String::new(),
    ]
}

/// Renders rows in file-name order.
fn render(entries: &[Entry]) -> String {
    let header = ["FILE", "NAME", "ORDER", "DELTA", "DGROUP", "BLOCK_SQUARE", "DECOMPOSITION", "STATUS"];
    let mut rows: Vec<Vec<String>> = vec![header.iter().map(|s| s.to_string()).collect()];
    for e in entries {
        let mut row = vec![e.file.clone()];
        match &e.row {
            Row::Ok(r) => {
                let mut s = summary(r);
                s[6] = "ok".into();
                row.extend(s);
            }
            Row::Violations(r, v) => {
                let mut s = summary(r);
                s[6] = format!("FAIL: {}", v.join("; "));
                row.extend(s);
            }
            Row::Error(f) => {
                row.extend(["-", "-", "-", "-", "-", "-"].map(String::from));
                row.push(format!("ERROR: {}", f.message));
            }
        }
        rows.push(row);
    }
    let widths: Vec<usize> =
        (0..header.len()).map(|i| rows.iter().map(|r| r[i].chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for r in &rows {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(i, c)| if i + 1 == r.len() { c.clone() } else { format!("{c:<w$}", w = widths[i]) })
            .collect();
        let _ = writeln!(out, "{}", line.join("  ").trim_end());
    }
    out
}

pub fn run(dir: &Path, opts: &AnalysisOptions) -> Result<(), Failure> {
    let paths = spec_paths(dir)?;
    let entries: Vec<Entry> = paths
        .par_iter()
        .map(|p| Entry {
            file: p.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default(),
            row: process(p, opts),
        })
        .collect();
    print!("{}", render(&entries));
    let failures = entries.iter().filter(|e| !matches!(e.row, Row::Ok(_))).count();
    if failures == 0 {
        return Ok(());
    }
    let code = entries
        .iter()
        .find_map(|e| match &e.row {
            Row::Error(f) => Some(f.code),
            Row::Violations(..) => Some(4),
            Row::Ok(_) => None,
        })
        .unwrap_or(4);
    Err(Failure { code, message: format!("{failures} of {} spec files failed", entries.len()) })
}
