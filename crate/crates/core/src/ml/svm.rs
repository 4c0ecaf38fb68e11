//! Linear soft-margin SVM with an unregularized bias.
//!
//! Minimizes `½‖w‖² + C Σ max(0, 1 − yᵢ(w·xᵢ + b))` by sequential minimal
//! optimization on the dual, using second-order working-set selection and
//! a cache of kernel columns. After every epoch (n pair updates) the primal
//! weights are rebuilt, the bias is set to its exact primal minimizer for
//! those weights, and training stops once the duality gap falls below the
//! relative tolerance.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::corpus::Trait;
use crate::features::SparseVector;

const TAU: f64 = 1e-12;
/// Pair steps stop once the maximal KKT violation is below this.
const KKT_EPS: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SvmError {
    #[error("training data holds a single class; predict that class for every input instead")]
    SingleClass,
    #[error("no training examples")]
    Empty,
    #[error("{examples} examples but {labels} labels")]
    LengthMismatch { examples: usize, labels: usize },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SvmParams {
    pub c: f64,
    /// Stop when `(primal − dual) / max(|primal|, 1)` is at most this.
    pub tolerance: f64,
    pub max_epochs: usize,
    /// Seeds the example order, which decides working-set ties.
    pub seed: u64,
    /// Memory budget of the kernel column cache, in bytes.
    pub cache_bytes: usize,
}

impl Default for SvmParams {
    fn default() -> Self {
        SvmParams {
            c: 1.0,
            tolerance: 1e-4,
            max_epochs: 1000,
            seed: 42,
            cache_bytes: 128 << 20,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TrainingSummary {
    pub epochs: usize,
    pub primal: f64,
    pub dual: f64,
    pub converged: bool,
}

impl TrainingSummary {
    pub fn relative_gap(&self) -> f64 {
        (self.primal - self.dual) / self.primal.abs().max(1.0)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LinearModel {
    pub weights: Vec<f64>,
    pub bias: f64,
    pub hyper_c: f64,
    pub personality_trait: Option<Trait>,
    pub summary: TrainingSummary,
}

impl LinearModel {
    pub fn decision(&self, x: &SparseVector) -> f64 {
        x.dot_dense(&self.weights) + self.bias
    }

    /// Positive iff the decision value is strictly positive.
    pub fn predict(&self, x: &SparseVector) -> bool {
        self.decision(x) > 0.0
    }

    pub fn objective(&self, x: &[SparseVector], y: &[bool]) -> f64 {
        primal_objective(&self.weights, self.bias, self.hyper_c, x, y)
    }
}

fn sign(label: bool) -> f64 {
    if label {
        1.0
    } else {
        -1.0
    }
}

/// `½‖w‖² + C Σ hinge`.
pub fn primal_objective(w: &[f64], b: f64, c: f64, x: &[SparseVector], y: &[bool]) -> f64 {
    let reg = 0.5 * w.iter().map(|v| v * v).sum::<f64>();
    let loss: f64 = x
        .iter()
        .zip(y)
        .map(|(xi, &yi)| (1.0 - sign(yi) * (xi.dot_dense(w) + b)).max(0.0))
        .sum();
    reg + c * loss
}

/// The `b` minimizing `Σ max(0, 1 − yᵢ(sᵢ + b))`, where `sᵢ = w·xᵢ`. Both
/// classes must be present. Within a flat optimal interval the midpoint is
/// returned.
pub fn optimal_bias(scores: &[f64], y: &[bool]) -> f64 {
    // Each term has a breakpoint at yᵢ − sᵢ. Positive terms slope −1 to its
    // left, negative terms slope +1 to its right.
    let mut points: Vec<(f64, bool)> = scores.iter().zip(y).map(|(&s, &l)| (sign(l) - s, l)).collect();
    points.sort_by(|p, q| p.0.total_cmp(&q.0));
    let positives = y.iter().filter(|&&l| l).count() as i64;
    let (mut pos_seen, mut neg_seen) = (0i64, 0i64);
    for k in 0..points.len() {
        if points[k].1 {
            pos_seen += 1;
        } else {
            neg_seen += 1;
        }
        // Slope just right of this breakpoint.
        let slope = neg_seen - (positives - pos_seen);
        if slope > 0 {
            return points[k].0;
        }
        if slope == 0 {
            let next = points.get(k + 1).map_or(points[k].0, |p| p.0);
            return 0.5 * (points[k].0 + next);
        }
    }
    points.last().map_or(0.0, |p| p.0)
}

/// FIFO-evicting cache of unsigned kernel columns `Kₖᵢ = xₖ·xᵢ`.
struct ColumnCache<'a> {
    x: &'a [SparseVector],
    dense: Vec<f64>,
    columns: Vec<Option<Box<[f64]>>>,
    order: VecDeque<usize>,
    capacity: usize,
}

impl<'a> ColumnCache<'a> {
    fn new(x: &'a [SparseVector], dimension: usize, budget: usize) -> Self {
        let per_column = (x.len() * std::mem::size_of::<f64>()).max(1);
        ColumnCache {
            x,
            dense: vec![0.0; dimension],
            columns: vec![None; x.len()],
            order: VecDeque::new(),
            capacity: (budget / per_column).max(2),
        }
    }

    fn ensure(&mut self, i: usize) {
        if self.columns[i].is_some() {
            return;
        }
        if self.order.len() >= self.capacity {
            if let Some(old) = self.order.pop_front() {
                self.columns[old] = None;
            }
        }
        for (id, v) in self.x[i].iter() {
            self.dense[id as usize] = v;
        }
        let col: Box<[f64]> = self.x.iter().map(|xk| xk.dot_dense(&self.dense)).collect();
        for (id, _) in self.x[i].iter() {
            self.dense[id as usize] = 0.0;
        }
        self.columns[i] = Some(col);
        self.order.push_back(i);
    }

    /// Columns `i` and `j`, both resident.
    fn pair(&mut self, i: usize, j: usize) -> (&[f64], &[f64]) {
        self.ensure(i);
        self.ensure(j);
        if self.columns[i].is_none() {
            // Evicted by `j`; capacity ≥ 2 makes the reload stick.
            self.ensure(i);
        }
        (
            self.columns[i].as_deref().expect("resident"),
            self.columns[j].as_deref().expect("resident"),
        )
    }

    fn column(&mut self, i: usize) -> &[f64] {
        self.ensure(i);
        self.columns[i].as_deref().expect("resident")
    }
}

/// Trains on rows `x` (feature ids below `dimension`) with labels `y`.
pub fn train_svm(x: &[SparseVector], y: &[bool], dimension: usize, params: &SvmParams) -> Result<LinearModel, SvmError> {
    if x.len() != y.len() {
        return Err(SvmError::LengthMismatch {
            examples: x.len(),
            labels: y.len(),
        });
    }
    if x.is_empty() {
        return Err(SvmError::Empty);
    }
    if y.iter().all(|&l| l) || y.iter().all(|&l| !l) {
        return Err(SvmError::SingleClass);
    }
    let dimension = x
        .iter()
        .filter_map(|v| v.entries().last().map(|(id, _)| *id as usize + 1))
        .max()
        .unwrap_or(0)
        .max(dimension);

    // Work in a seeded example order.
    let mut order: Vec<usize> = (0..x.len()).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(params.seed));
    let xs: Vec<SparseVector> = order.iter().map(|&k| x[k].clone()).collect();
    let ys: Vec<f64> = order.iter().map(|&k| sign(y[k])).collect();
    let labels: Vec<bool> = order.iter().map(|&k| y[k]).collect();

    let n = xs.len();
    let c = params.c;
    let diag: Vec<f64> = xs.iter().map(|v| v.dot(v)).collect();
    let mut cache = ColumnCache::new(&xs, dimension, params.cache_bytes);
    let mut alpha = vec![0.0f64; n];
    // Gradient of ½αᵀQα − eᵀα with Qₖᵢ = yₖyᵢKₖᵢ.
    let mut grad = vec![-1.0f64; n];

    let mut summary = TrainingSummary {
        epochs: 0,
        primal: f64::INFINITY,
        dual: f64::NEG_INFINITY,
        converged: false,
    };
    let mut w = vec![0.0f64; dimension];
    let mut b = 0.0;

    while summary.epochs < params.max_epochs {
        let mut optimal = false;
        for _ in 0..n {
            let Some((i, j)) = select_pair(&alpha, &grad, &ys, &diag, c, &mut cache) else {
                optimal = true;
                break;
            };
            let (ci, cj) = cache.pair(i, j);
            let kij = ci[j];
            let (old_i, old_j) = (alpha[i], alpha[j]);
            update_pair(&mut alpha, &grad, &ys, &diag, kij, i, j, c);
            let (di, dj) = (alpha[i] - old_i, alpha[j] - old_j);
            for k in 0..n {
                grad[k] += ys[k] * (ys[i] * ci[k] * di + ys[j] * cj[k] * dj);
            }
        }
        summary.epochs += 1;

        w.iter_mut().for_each(|v| *v = 0.0);
        for (k, xk) in xs.iter().enumerate() {
            if alpha[k] != 0.0 {
                for (id, v) in xk.iter() {
                    w[id as usize] += alpha[k] * ys[k] * v;
                }
            }
        }
        let scores: Vec<f64> = xs.iter().map(|v| v.dot_dense(&w)).collect();
        b = optimal_bias(&scores, &labels);
        let norm2: f64 = w.iter().map(|v| v * v).sum();
        let loss: f64 = scores.iter().zip(&ys).map(|(s, yk)| (1.0 - yk * (s + b)).max(0.0)).sum();
        summary.primal = 0.5 * norm2 + c * loss;
        summary.dual = alpha.iter().sum::<f64>() - 0.5 * norm2;
        if summary.relative_gap() <= params.tolerance {
            summary.converged = true;
            break;
        }
        if optimal {
            summary.converged = summary.relative_gap() <= params.tolerance;
            break;
        }
    }

    Ok(LinearModel {
        weights: w,
        bias: b,
        hyper_c: c,
        personality_trait: None,
        summary,
    })
}

fn in_up(alpha: f64, y: f64, c: f64) -> bool {
    (y > 0.0 && alpha < c) || (y < 0.0 && alpha > 0.0)
}

fn in_low(alpha: f64, y: f64, c: f64) -> bool {
    (y > 0.0 && alpha > 0.0) || (y < 0.0 && alpha < c)
}

/// Second-order working-set selection; `None` at KKT optimality.
fn select_pair(
    alpha: &[f64],
    grad: &[f64],
    ys: &[f64],
    diag: &[f64],
    c: f64,
    cache: &mut ColumnCache,
) -> Option<(usize, usize)> {
    let mut i = None;
    let mut gmax = f64::NEG_INFINITY;
    for t in 0..alpha.len() {
        if in_up(alpha[t], ys[t], c) {
            let v = -ys[t] * grad[t];
            if v > gmax {
                gmax = v;
                i = Some(t);
            }
        }
    }
    let i = i?;
    let ki = cache.column(i);
    let mut j = None;
    let mut gmin = f64::INFINITY;
    let mut best = f64::INFINITY;
    for t in 0..alpha.len() {
        if !in_low(alpha[t], ys[t], c) {
            continue;
        }
        let v = -ys[t] * grad[t];
        gmin = gmin.min(v);
        let diff = gmax - v;
        if diff > 0.0 {
            let mut quad = diag[i] + diag[t] - 2.0 * ki[t];
            if quad <= 0.0 {
                quad = TAU;
            }
            let gain = -(diff * diff) / quad;
            if gain < best {
                best = gain;
                j = Some(t);
            }
        }
    }
    if gmax - gmin < KKT_EPS {
        return None;
    }
    j.map(|j| (i, j))
}

/// Solves the two-variable subproblem and clips to the box.
#[allow(clippy::too_many_arguments)]
fn update_pair(alpha: &mut [f64], grad: &[f64], ys: &[f64], diag: &[f64], kij: f64, i: usize, j: usize, c: f64) {
    let mut quad = diag[i] + diag[j] - 2.0 * kij;
    if quad <= 0.0 {
        quad = TAU;
    }
    let (mut ai, mut aj) = (alpha[i], alpha[j]);
    if ys[i] != ys[j] {
        let delta = (-grad[i] - grad[j]) / quad;
        let diff = ai - aj;
        ai += delta;
        aj += delta;
        if diff > 0.0 {
            if aj < 0.0 {
                aj = 0.0;
                ai = diff;
            }
        } else if ai < 0.0 {
            ai = 0.0;
            aj = -diff;
        }
        if diff > 0.0 {
            if ai > c {
                ai = c;
                aj = c - diff;
            }
        } else if aj > c {
            aj = c;
            ai = c + diff;
        }
    } else {
        let delta = (grad[i] - grad[j]) / quad;
        let sum = ai + aj;
        ai -= delta;
        aj += delta;
        if sum > c {
            if ai > c {
                ai = c;
                aj = sum - c;
            }
        } else if aj < 0.0 {
            aj = 0.0;
            ai = sum;
        }
        if sum > c {
            if aj > c {
                aj = c;
                ai = sum - c;
            }
        } else if ai < 0.0 {
            ai = 0.0;
            aj = sum;
        }
    }
    alpha[i] = ai;
    alpha[j] = aj;
}
