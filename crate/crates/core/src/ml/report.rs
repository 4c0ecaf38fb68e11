//! Evaluation report rows and their TSV form:
//! `trait<TAB>config<TAB>accuracy<TAB>majority<TAB>fold_accs<TAB>seed<TAB>feature_cap`.

use std::collections::BTreeMap;
use std::io::{self, BufRead, Write};

use thiserror::Error;

use crate::corpus::Trait;

pub const REPORT_HEADER: &str = "#trait\tconfig\taccuracy\tmajority\tfold_accs\tseed\tfeature_cap";

#[derive(Clone, Debug, PartialEq)]
pub struct EvalRow {
    pub personality_trait: Trait,
    pub config: String,
    pub accuracy: f64,
    pub majority: f64,
    pub fold_accuracies: Vec<f64>,
    pub seed: u64,
    pub feature_cap: usize,
}

#[derive(Debug, Error)]
pub enum ReportError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("report line {line}: {message}")]
    Malformed { line: usize, message: String },
}

/// Writes the header and one line per row; reals carry six decimals.
pub fn write_report(rows: &[EvalRow], mut out: impl Write) -> io::Result<()> {
    writeln!(out, "{REPORT_HEADER}")?;
    for r in rows {
        let folds: Vec<String> = r.fold_accuracies.iter().map(|a| format!("{a:.6}")).collect();
        writeln!(
            out,
            "{}\t{}\t{:.6}\t{:.6}\t{}\t{}\t{}",
            r.personality_trait,
            r.config,
            r.accuracy,
            r.majority,
            folds.join(","),
            r.seed,
            r.feature_cap
        )?;
    }
    Ok(())
}

/// Lines starting with `#` are skipped.
pub fn read_report(input: impl BufRead) -> Result<Vec<EvalRow>, ReportError> {
    let mut rows = Vec::new();
    for (k, line) in input.lines().enumerate() {
        let line = line?;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |message: String| ReportError::Malformed { line: k + 1, message };
        let f: Vec<&str> = line.split('\t').collect();
        if f.len() != 7 {
            return Err(bad(format!("expected 7 fields, found {}", f.len())));
        }
        let real = |s: &str, what: &str| s.parse::<f64>().map_err(|_| bad(format!("bad {what} {s:?}")));
        let fold_accuracies = if f[4].is_empty() {
            Vec::new()
        } else {
            f[4].split(',').map(|a| real(a, "fold accuracy")).collect::<Result<_, _>>()?
        };
        rows.push(EvalRow {
            personality_trait: f[0].parse().map_err(|e| bad(format!("{e}")))?,
            config: f[1].to_string(),
            accuracy: real(f[2], "accuracy")?,
            majority: real(f[3], "majority")?,
            fold_accuracies,
            seed: f[5].parse().map_err(|_| bad(format!("bad seed {:?}", f[5])))?,
            feature_cap: f[6].parse().map_err(|_| bad(format!("bad feature cap {:?}", f[6])))?,
        });
    }
    Ok(rows)
}

/// Best configuration per (dataset, trait) and win tallies per config.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Comparison {
    /// `(dataset, trait)` → configs sharing the best accuracy, and that accuracy.
    pub best: BTreeMap<(String, Trait), (Vec<String>, f64)>,
    /// Config → wins; a tie of k configs gives each 1/k.
    pub wins: BTreeMap<String, f64>,
}

/// Accuracies are compared at the six-decimal precision of the report.
pub fn compare(rows: &[(String, EvalRow)]) -> Comparison {
    let mut groups: BTreeMap<(String, Trait), Vec<&EvalRow>> = BTreeMap::new();
    let mut out = Comparison::default();
    for (dataset, row) in rows {
        groups.entry((dataset.clone(), row.personality_trait)).or_default().push(row);
        out.wins.entry(row.config.clone()).or_insert(0.0);
    }
    let key = |a: f64| (a * 1e6).round() as i64;
    for (group, rs) in groups {
        let top = rs.iter().map(|r| key(r.accuracy)).max().expect("non-empty group");
        let mut winners: Vec<String> = rs
            .iter()
            .filter(|r| key(r.accuracy) == top)
            .map(|r| r.config.clone())
            .collect();
        winners.sort();
        winners.dedup();
        let share = 1.0 / winners.len() as f64;
        for w in &winners {
            *out.wins.get_mut(w).expect("registered config") += share;
        }
        out.best.insert(group, (winners, top as f64 / 1e6));
    }
    out
}
