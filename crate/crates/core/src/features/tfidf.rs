use super::SparseVector;

/// Inverse document frequencies `ln((1 + N) / (1 + df))` per feature id.
#[derive(Clone, Debug, PartialEq)]
pub struct IdfTable {
    idf: Vec<f64>,
    documents: usize,
}

impl IdfTable {
    pub fn idf(&self, id: u32) -> Option<f64> {
        self.idf.get(id as usize).copied()
    }

    pub fn dimension(&self) -> usize {
        self.idf.len()
    }

    pub fn documents(&self) -> usize {
        self.documents
    }
}

/// Fits over feature ids `0..dimension`; larger ids in the input are ignored.
pub fn tfidf_fit(train: &[SparseVector], dimension: usize) -> IdfTable {
    let mut df = vec![0usize; dimension];
    for v in train {
        for (id, _) in v.iter() {
            if let Some(slot) = df.get_mut(id as usize) {
                *slot += 1;
            }
        }
    }
    let n = train.len() as f64;
    IdfTable {
        idf: df.iter().map(|&d| ((1.0 + n) / (1.0 + d as f64)).ln()).collect(),
        documents: train.len(),
    }
}

/// `tf × idf`, dropping ids the table does not cover, then L2-normalized.
/// A vector that weighs to zero stays zero.
pub fn tfidf_apply(vector: &SparseVector, table: &IdfTable) -> SparseVector {
    let weighted: Vec<(u32, f64)> = vector
        .iter()
        .filter_map(|(id, tf)| table.idf(id).map(|idf| (id, tf * idf)))
        .collect();
    let v = SparseVector::from_entries(weighted);
    let norm = v.l2_norm();
    if norm > 0.0 {
        v.scaled(1.0 / norm)
    } else {
        v
    }
}
