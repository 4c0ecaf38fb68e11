//! χ² from observed and expected cell counts, with the contingency table
//! counted straight from the documents.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// `Σ (O − E)² / E` over the cells with E > 0.
pub fn chi2_cells(a: u64, b: u64, c: u64, d: u64) -> f64 {
    let observed = [[a as f64, b as f64], [c as f64, d as f64]];
    let n = (a + b + c + d) as f64;
    let rows = [observed[0][0] + observed[0][1], observed[1][0] + observed[1][1]];
    let cols = [observed[0][0] + observed[1][0], observed[0][1] + observed[1][1]];
    let mut total = 0.0;
    for i in 0..2 {
        for j in 0..2 {
            let expected = rows[i] * cols[j] / n;
            if expected > 0.0 {
                total += (observed[i][j] - expected).powi(2) / expected;
            }
        }
    }
    total
}

/// `(a, b, c, d)` of `term`: present/absent × positive/negative.
pub fn table(docs: &[Vec<String>], labels: &[bool], term: &str) -> (u64, u64, u64, u64) {
    let mut t = (0, 0, 0, 0);
    for (doc, &positive) in docs.iter().zip(labels) {
        match (doc.iter().any(|w| w == term), positive) {
            (true, true) => t.0 += 1,
            (true, false) => t.1 += 1,
            (false, true) => t.2 += 1,
            (false, false) => t.3 += 1,
        }
    }
    t
}

/// `(term, χ², leans positive)` for every term, by descending χ² then name.
pub fn ranking(docs: &[Vec<String>], labels: &[bool]) -> Vec<(String, f64, bool)> {
    let terms: BTreeSet<&String> = docs.iter().flatten().collect();
    let mut out: Vec<(String, f64, bool)> = terms
        .into_iter()
        .map(|term| {
            let (a, b, c, d) = table(docs, labels, term);
            // With one class empty there is no direction.
            let leans = a + c > 0 && b + d > 0 && (a as f64 / (a + c) as f64) > (b as f64 / (b + d) as f64);
            (term.clone(), chi2_cells(a, b, c, d), leans)
        })
        .collect();
    // Order by the exact statistic, as a fraction of integers.
    let exact = |term: &str| {
        let (a, b, c, d) = table(docs, labels, term);
        let (a, b, c, d) = (a as u128, b as u128, c as u128, d as u128);
        let den = (a + b) * (c + d) * (a + c) * (b + d);
        let cross = (a * d).abs_diff(b * c);
        if den == 0 {
            (0, 1)
        } else {
            ((a + b + c + d) * cross * cross, den)
        }
    };
    out.sort_by(|x, y| {
        let ((nx, dx), (ny, dy)) = (exact(&x.0), exact(&y.0));
        (ny * dx).cmp(&(nx * dy)).then_with(|| x.0.cmp(&y.0))
    });
    out
}

/// Every `(a, b, c, d)` with `1 ≤ a + b + c + d ≤ max_n`.
pub fn all_tables(max_n: u64) -> Vec<(u64, u64, u64, u64)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for a in 0..=n {
            for b in 0..=n - a {
                for c in 0..=n - a - b {
                    out.push((a, b, c, n - a - b - c));
                }
            }
        }
    }
    out
}

/// Documents realizing a table for one term `t`; absent documents hold `u`
/// or nothing.
pub fn corpus_for(t: (u64, u64, u64, u64)) -> (Vec<Vec<String>>, Vec<bool>) {
    let mut docs = Vec::new();
    let mut labels = Vec::new();
    for (count, present, label) in [(t.0, true, true), (t.1, true, false), (t.2, false, true), (t.3, false, false)] {
        for k in 0..count {
            docs.push(if present {
                vec!["t".to_string()]
            } else if k % 2 == 0 {
                vec!["u".to_string()]
            } else {
                Vec::new()
            });
            labels.push(label);
        }
    }
    (docs, labels)
}
