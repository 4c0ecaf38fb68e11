//! The 200×50 problem written by `scripts/svm_oracle.py` and the objective
//! that script's subgradient descent reached on it.

#![allow(dead_code)]

use std::path::Path;

use persona::features::SparseVector;

/// Best primal value after 3M subgradient steps; an upper bound on the
/// optimum.
pub const REFERENCE_OBJECTIVE: f64 = 64.029313365;

pub const DIMENSION: usize = 50;

/// Rows of `label<TAB>id:value,...` with labels 1 and -1.
pub fn load(path: &Path) -> (Vec<SparseVector>, Vec<bool>) {
    let text = std::fs::read_to_string(path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    let mut x = Vec::new();
    let mut y = Vec::new();
    for line in text.lines() {
        let (label, body) = line.split_once('\t').expect("label and features");
        y.push(label == "1");
        let entries = body
            .split(',')
            .filter(|p| !p.is_empty())
            .map(|p| {
                let (id, v) = p.split_once(':').expect("id:value");
                (id.parse().unwrap(), v.parse().unwrap())
            })
            .collect();
        x.push(SparseVector::from_entries(entries));
    }
    (x, y)
}
