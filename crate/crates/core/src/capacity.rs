//! Analytic growth rates.
//!
//! A code family whose words factor uniquely into ministrings of lengths
//! `l_1, l_2, ...` grows like `root^{-n}`, where `root` is the unique zero
//! in `(0, 1)` of `E(x) - 1` with `E(x) = sum_i x^{l_i}`. Rates are reported
//! in bits, `log2(1 / root)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{count_walks, Digraph};

/// Default tolerance on `|E(root) - 1|`.
pub const DEFAULT_TOL: f64 = 1e-12;

const MAX_BISECTIONS: usize = 2000;
const TAIL_GUARD: f64 = 1.0 - 1e-12;

/// `sum_{l in head} x^l + sum_{j >= 0} x^{start + j*step}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharacteristicEquation {
    pub head: Vec<u32>,
    /// `(start, step)` of an infinite arithmetic run of lengths.
    pub tail: Option<(u32, u32)>,
}

impl CharacteristicEquation {
    pub fn new(head: Vec<u32>, tail: Option<(u32, u32)>) -> Result<Self> {
        if head.iter().any(|&l| l == 0) {
            return Err(Error::InvalidArgument("ministring lengths must be >= 1".into()));
        }
        if let Some((start, step)) = tail {
            if start == 0 || step == 0 {
                return Err(Error::InvalidArgument("tail start and step must be >= 1".into()));
            }
        }
        if head.is_empty() && tail.is_none() {
            return Err(Error::InvalidArgument("empty characteristic equation".into()));
        }
        Ok(CharacteristicEquation { head, tail })
    }

    pub fn finite(head: &[u32]) -> Result<Self> {
        Self::new(head.to_vec(), None)
    }

    /// `x + x^2 + x^3 = 1`.
    pub fn tribonacci() -> Self {
        Self::finite(&[1, 2, 3]).expect("valid")
    }

    /// `x + x^2 / (1 - x^2) = 1`: lengths 1, 2, 4, 6, ...
    pub fn odd_runs() -> Self {
        Self::new(vec![1], Some((2, 2))).expect("valid")
    }

    /// `x + x^3 / (1 - x) = 1`: lengths 1, 3, 4, 5, ...
    pub fn no_isolated_ones() -> Self {
        Self::new(vec![1], Some((3, 1))).expect("valid")
    }

    /// `x + x^2 = 1`.
    pub fn golden() -> Self {
        Self::finite(&[1, 2]).expect("valid")
    }

    /// Truncated odd-run family with lengths `1, 2, 4, ..., 2k + 2`.
    pub fn truncated_odd_runs(k: u32) -> Self {
        let mut head = vec![1];
        head.extend((0..=k).map(|j| 2 * j + 2));
        Self::finite(&head).expect("valid")
    }

    /// `E(x)` on `[0, 1)`; the tail uses the closed geometric form.
    pub fn eval(&self, x: f64) -> f64 {
        let head: f64 = self.head.iter().map(|&l| x.powi(l as i32)).sum();
        let tail = match self.tail {
            Some((start, step)) => {
                let x = x.min(TAIL_GUARD);
                x.powi(start as i32) / (1.0 - x.powi(step as i32))
            }
            None => 0.0,
        };
        head + tail
    }

    /// Whether `E(x) = 1` has a root in `(0, 1)`.
    pub fn has_root(&self) -> bool {
        self.tail.is_some() || self.head.len() >= 2
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CapacityValue {
    pub root: f64,
    pub rate_bits: f64,
    pub residual: f64,
    pub iterations: usize,
}

/// Bisects `E(x) = 1` on `(0, 1)` until `|E(x) - 1| <= tol`.
pub fn solve_characteristic(eq: &CharacteristicEquation, tol: f64) -> Result<CapacityValue> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    if !eq.has_root() {
        return Err(Error::NoRoot);
    }
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    let mut iterations = 0;
    let mut mid = 0.5;
    let mut residual = f64::INFINITY;
    while iterations < MAX_BISECTIONS {
        iterations += 1;
        mid = 0.5 * (lo + hi);
        let value = eq.eval(mid) - 1.0;
        residual = value.abs();
        if residual <= tol {
            break;
        }
        if value < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= f64::EPSILON * hi {
            break;
        }
    }
    if residual > tol {
        return Err(Error::NoConvergence { iterations, residual });
    }
    Ok(CapacityValue {
        root: mid,
        rate_bits: -mid.log2(),
        residual,
        iterations,
    })
}

/// Rates for the truncated odd-run equations, `k = 0..=k_max`.
pub fn beta_sequence(k_max: u32, tol: f64) -> Result<Vec<CapacityValue>> {
    (0..=k_max)
        .map(|k| solve_characteristic(&CharacteristicEquation::truncated_odd_runs(k), tol))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GrowthMethod {
    PowerIteration,
    CountingRatio,
    /// No cycle; walk counts reach zero.
    Acyclic,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GrowthRate {
    pub spectral_radius: f64,
    /// `log2` of the spectral radius; 0 for acyclic digraphs.
    pub rate_bits: f64,
    pub iterations: usize,
    pub method: GrowthMethod,
}

const MAX_POWER_ITERATIONS: usize = 100_000;
const COUNTING_HORIZON: usize = 64;

/// Spectral radius of the adjacency matrix of `p` by power iteration.
///
/// The iteration runs on `A + I`, whose dominant eigenvalue is `rho + 1`
/// and is strictly dominant in modulus even when `A` is periodic. If it
/// does not settle within the iteration cap, the rate is estimated from
/// walk counts as `log2(w_64 / w_63)`.
pub fn perron_growth(p: &Digraph, tol: f64) -> Result<GrowthRate> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    let k = p.k();
    if k == 0 || count_walks(p, k + 1) == 0 {
        return Ok(GrowthRate {
            spectral_radius: 0.0,
            rate_bits: 0.0,
            iterations: 0,
            method: GrowthMethod::Acyclic,
        });
    }
    let arcs = p.arcs();
    let mut v = vec![1.0 / k as f64; k];
    let mut previous = f64::NAN;
    for iteration in 1..=MAX_POWER_ITERATIONS {
        // w = (A + I) v, where (A v)_a = sum over arcs a -> b of v_b
        let mut w = v.clone();
        for &(a, b) in &arcs {
            w[a] += v[b];
        }
        let lambda: f64 = w.iter().sum();
        w.iter_mut().for_each(|x| *x /= lambda);
        v = w;
        if (lambda - previous).abs() <= tol * lambda {
            let radius = lambda - 1.0;
            return Ok(GrowthRate {
                spectral_radius: radius,
                rate_bits: radius.log2(),
                iterations: iteration,
                method: GrowthMethod::PowerIteration,
            });
        }
        previous = lambda;
    }
    let last = count_walks(p, COUNTING_HORIZON) as f64;
    let before = count_walks(p, COUNTING_HORIZON - 1) as f64;
    let radius = last / before;
    if !radius.is_finite() || radius <= 0.0 {
        return Err(Error::NoConvergence {
            iterations: MAX_POWER_ITERATIONS,
            residual: f64::NAN,
        });
    }
    Ok(GrowthRate {
        spectral_radius: radius,
        rate_bits: radius.log2(),
        iterations: MAX_POWER_ITERATIONS,
        method: GrowthMethod::CountingRatio,
    })
}

/// Finite-length rate estimates from exact counts `a_n`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EmpiricalRates {
    /// Block length of the first count.
    pub first_n: usize,
    /// `log2(a_n) / n`, one per count.
    pub naive: Vec<f64>,
    /// `log2(a_{n+1} / a_n)`, one per consecutive pair.
    pub ratio: Vec<f64>,
}

fn log2_u128(x: u128) -> f64 {
    // Exact enough: the leading 53 bits carry the value.
    if x < 1 << 53 {
        return (x as f64).log2();
    }
    let shift = 128 - x.leading_zeros() - 53;
    ((x >> shift) as f64).log2() + shift as f64
}

/// Rates for counts `a_{first_n}, a_{first_n + 1}, ...`.
pub fn empirical_rates(counts: &[u128], first_n: usize) -> Result<EmpiricalRates> {
    if counts.len() < 2 {
        return Err(Error::InvalidArgument("need at least two counts".into()));
    }
    if first_n == 0 {
        return Err(Error::InvalidArgument("block lengths start at 1".into()));
    }
    if counts.iter().any(|&c| c == 0) {
        return Err(Error::InvalidArgument("counts must be positive".into()));
    }
    let logs: Vec<f64> = counts.iter().map(|&c| log2_u128(c)).collect();
    Ok(EmpiricalRates {
        first_n,
        naive: logs.iter().enumerate().map(|(i, l)| l / (first_n + i) as f64).collect(),
        ratio: logs.windows(2).map(|w| w[1] - w[0]).collect(),
    })
}
