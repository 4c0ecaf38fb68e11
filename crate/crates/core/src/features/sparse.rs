use std::collections::HashMap;
use std::io::{self, BufRead, Write};

use thiserror::Error;

/// Feature id → value, sorted by id, without stored zeros.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SparseVector {
    entries: Vec<(u32, f64)>,
}

impl SparseVector {
    /// Sorts by id, sums duplicates and drops zeros.
    pub fn from_entries(mut entries: Vec<(u32, f64)>) -> Self {
        entries.sort_by_key(|(id, _)| *id);
        let mut out: Vec<(u32, f64)> = Vec::with_capacity(entries.len());
        for (id, v) in entries {
            match out.last_mut() {
                Some((last, acc)) if *last == id => *acc += v,
                _ => out.push((id, v)),
            }
        }
        out.retain(|(_, v)| *v != 0.0);
        SparseVector { entries: out }
    }

    pub fn entries(&self) -> &[(u32, f64)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, f64)> + '_ {
        self.entries.iter().copied()
    }

    pub fn get(&self, id: u32) -> f64 {
        self.entries
            .binary_search_by_key(&id, |(k, _)| *k)
            .map(|k| self.entries[k].1)
            .unwrap_or(0.0)
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn l2_norm(&self) -> f64 {
        self.entries.iter().map(|(_, v)| v * v).sum::<f64>().sqrt()
    }

    pub fn dot(&self, other: &SparseVector) -> f64 {
        let (mut i, mut j, mut acc) = (0, 0, 0.0);
        let (a, b) = (&self.entries, &other.entries);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    acc += a[i].1 * b[j].1;
                    i += 1;
                    j += 1;
                }
            }
        }
        acc
    }

    /// Dot product with a dense vector; ids past its end count as zero.
    pub fn dot_dense(&self, dense: &[f64]) -> f64 {
        self.entries
            .iter()
            .filter_map(|&(id, v)| dense.get(id as usize).map(|w| w * v))
            .sum()
    }

    pub fn scaled(&self, factor: f64) -> SparseVector {
        SparseVector::from_entries(self.entries.iter().map(|&(id, v)| (id, v * factor)).collect())
    }

    /// Appends entries whose ids exceed every stored id.
    pub fn extend_tail(&mut self, tail: impl IntoIterator<Item = (u32, f64)>) {
        for (id, v) in tail {
            assert!(self.entries.last().is_none_or(|(last, _)| *last < id), "tail ids must increase");
            if v != 0.0 {
                self.entries.push((id, v));
            }
        }
    }
}

/// Feature name ↔ contiguous id.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FeatureVocabulary {
    names: Vec<String>,
    ids: HashMap<String, u32>,
}

impl FeatureVocabulary {
    pub fn new() -> Self {
        Self::default()
    }

    /// Ids follow iteration order; repeated names keep their first id.
    pub fn from_names<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut vocab = FeatureVocabulary::new();
        for n in names {
            vocab.insert(n);
        }
        vocab
    }

    pub fn insert(&mut self, name: impl Into<String>) -> u32 {
        let name = name.into();
        if let Some(&id) = self.ids.get(&name) {
            return id;
        }
        let id = u32::try_from(self.names.len()).expect("vocabulary fits in u32");
        self.ids.insert(name.clone(), id);
        self.names.push(name);
        id
    }

    pub fn id(&self, name: &str) -> Option<u32> {
        self.ids.get(name).copied()
    }

    pub fn name(&self, id: u32) -> Option<&str> {
        self.names.get(id as usize).map(String::as_str)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
}

#[derive(Debug, Error)]
pub enum SparseFormatError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
}

/// Rows of sparse vectors over one vocabulary.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct FeatureMatrix {
    pub vocabulary: FeatureVocabulary,
    pub doc_ids: Vec<String>,
    pub rows: Vec<SparseVector>,
}

impl FeatureMatrix {
    pub fn push(&mut self, doc_id: impl Into<String>, row: SparseVector) {
        self.doc_ids.push(doc_id.into());
        self.rows.push(row);
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// `#features N`, then `docId<TAB>id:value,...` per row. Values use the
    /// shortest representation that parses back to the same `f64`.
    pub fn write_sparse_text(&self, mut out: impl Write) -> io::Result<()> {
        writeln!(out, "#features {}", self.vocabulary.len())?;
        for (doc, row) in self.doc_ids.iter().zip(&self.rows) {
            write!(out, "{doc}\t")?;
            for (k, (id, v)) in row.iter().enumerate() {
                if k > 0 {
                    out.write_all(b",")?;
                }
                write!(out, "{id}:{v}")?;
            }
            out.write_all(b"\n")?;
        }
        Ok(())
    }

    /// Reads rows written by [`write_sparse_text`](Self::write_sparse_text).
    /// Names are not part of the format, so the returned vocabulary holds
    /// placeholder names `f0`, `f1`, ...
    pub fn read_sparse_text(input: impl BufRead) -> Result<FeatureMatrix, SparseFormatError> {
        let mut lines = input.lines();
        let bad = |line: usize, message: String| SparseFormatError::Malformed { line, message };
        let header = lines.next().transpose()?.ok_or_else(|| bad(1, "empty input".into()))?;
        let size: usize = header
            .strip_prefix("#features ")
            .and_then(|n| n.trim().parse().ok())
            .ok_or_else(|| bad(1, format!("expected `#features N`, found {header:?}")))?;
        let mut matrix = FeatureMatrix {
            vocabulary: FeatureVocabulary::from_names((0..size).map(|k| format!("f{k}"))),
            ..FeatureMatrix::default()
        };
        for (k, line) in lines.enumerate() {
            let line = line?;
            let number = k + 2;
            let (doc, body) = line
                .split_once('\t')
                .ok_or_else(|| bad(number, "missing tab after document id".into()))?;
            let mut entries = Vec::new();
            let mut last: Option<u32> = None;
            for pair in body.split(',').filter(|p| !p.is_empty()) {
                let (id, v) = pair
                    .split_once(':')
                    .ok_or_else(|| bad(number, format!("entry {pair:?} is not id:value")))?;
                let id: u32 = id.parse().map_err(|_| bad(number, format!("bad feature id {id:?}")))?;
                let v: f64 = v.parse().map_err(|_| bad(number, format!("bad value {v:?}")))?;
                if id as usize >= size {
                    return Err(bad(number, format!("feature id {id} outside vocabulary of {size}")));
                }
                if last.is_some_and(|l| l >= id) {
                    return Err(bad(number, "feature ids must increase".into()));
                }
                last = Some(id);
                entries.push((id, v));
            }
            matrix.push(doc, SparseVector::from_entries(entries));
        }
        Ok(matrix)
    }
}
