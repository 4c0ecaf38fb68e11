use std::cmp::Ordering;
use std::collections::HashMap;

/// Document counts for one term against one binary class.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ContingencyTable {
    /// Term present, positive class.
    pub a: u64,
    /// Term present, negative class.
    pub b: u64,
    /// Term absent, positive class.
    pub c: u64,
    /// Term absent, negative class.
    pub d: u64,
}

impl ContingencyTable {
    pub fn new(a: u64, b: u64, c: u64, d: u64) -> Self {
        ContingencyTable { a, b, c, d }
    }

    pub fn n(&self) -> u64 {
        self.a + self.b + self.c + self.d
    }

    /// Presence rate is higher among positive documents.
    pub fn leans_positive(&self) -> bool {
        // a/(a+c) > b/(b+d), cross-multiplied.
        u128::from(self.a) * u128::from(self.b + self.d) > u128::from(self.b) * u128::from(self.a + self.c)
    }
}

/// `N(ad − bc)² / ((a+b)(c+d)(a+c)(b+d))`, or 0 when a marginal is 0.
///
/// Numerator and denominator are exact integers divided once, so tables
/// with equal statistics get bit-equal scores and ties fall to the name
/// order.
pub fn chi2(t: &ContingencyTable) -> f64 {
    let (a, b, c, d) = (u128::from(t.a), u128::from(t.b), u128::from(t.c), u128::from(t.d));
    let denom = (a + b).checked_mul(c + d).and_then(|x| x.checked_mul(a + c)).and_then(|x| x.checked_mul(b + d));
    let cross = (a * d).abs_diff(b * c);
    let num = cross.checked_mul(cross).and_then(|x| x.checked_mul(a + b + c + d));
    match (num, denom) {
        (_, Some(0)) => 0.0,
        (Some(num), Some(denom)) => num as f64 / denom as f64,
        _ => {
            let (a, b, c, d) = (t.a as f64, t.b as f64, t.c as f64, t.d as f64);
            let cross = a * d - b * c;
            t.n() as f64 * cross * cross / ((a + b) * (c + d) * (a + c) * (b + d))
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RankedFeature {
    pub name: String,
    /// Unsigned χ².
    pub score: f64,
    pub positive: bool,
}

impl RankedFeature {
    /// χ² carrying the class direction.
    pub fn signed(&self) -> f64 {
        if self.positive {
            self.score
        } else {
            -self.score
        }
    }
}

/// Sorts by descending score, then ascending name.
pub fn sort_ranked(features: &mut [RankedFeature]) {
    features.sort_by(|x, y| match y.score.total_cmp(&x.score) {
        Ordering::Equal => x.name.cmp(&y.name),
        o => o,
    });
}

/// Ranks every term that occurs in `docs` by χ² on document presence.
/// Each element of `docs` lists the terms of one document; repeats are
/// counted once.
pub fn rank_features<D, S>(docs: &[D], labels: &[bool]) -> Vec<RankedFeature>
where
    D: AsRef<[S]>,
    S: AsRef<str>,
{
    assert_eq!(docs.len(), labels.len(), "one label per document");
    let positives = labels.iter().filter(|&&l| l).count() as u64;
    let negatives = labels.len() as u64 - positives;
    let mut presence: HashMap<&str, (u64, u64, usize)> = HashMap::new();
    for (k, (doc, &label)) in docs.iter().zip(labels).enumerate() {
        for term in doc.as_ref() {
            let slot = presence.entry(term.as_ref()).or_insert((0, 0, usize::MAX));
            if slot.2 == k {
                continue;
            }
            slot.2 = k;
            if label {
                slot.0 += 1;
            } else {
                slot.1 += 1;
            }
        }
    }
    let mut out: Vec<RankedFeature> = presence
        .into_iter()
        .map(|(name, (a, b, _))| {
            let t = ContingencyTable::new(a, b, positives - a, negatives - b);
            RankedFeature {
                name: name.to_string(),
                score: chi2(&t),
                positive: t.leans_positive(),
            }
        })
        .collect();
    sort_ranked(&mut out);
    out
}
