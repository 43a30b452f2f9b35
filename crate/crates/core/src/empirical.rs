//! Kuiper's statistic computed from data, the resulting test decision, and
//! a seeded Monte Carlo estimate of the null exceedance probability.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{KuiperError, Result};
use crate::quantile::{kuiper_pair, IterationMethod, TestKind, DEFAULT_GUESS};
use crate::sample::SampleSize;
use crate::survival_vn;

/// `D+`, `D-`, `V = D+ + D-` and `K = sqrt(n) V` for one data set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmpiricalResult {
    pub d_plus: f64,
    pub d_minus: f64,
    pub v: f64,
    pub k: f64,
    pub n: usize,
}

impl EmpiricalResult {
    fn new(d_plus: f64, d_minus: f64, n: usize) -> Self {
        let d_plus = d_plus.max(0.0);
        let d_minus = d_minus.max(0.0);
        let v = d_plus + d_minus;
        EmpiricalResult {
            d_plus,
            d_minus,
            v,
            k: (n as f64).sqrt() * v,
            n,
        }
    }

    /// Two-term approximation of `Pr{sqrt(n) V_n > k}`, clamped to `[0, 1]`.
    pub fn p_value(&self) -> f64 {
        survival_vn::survival(self.k, SampleSize::Finite(self.n as u64)).clamp(0.0, 1.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TestDecision {
    pub statistic: EmpiricalResult,
    pub alpha: f64,
    pub quantile: f64,
    pub reject: bool,
}

fn check_sorted(xs: &[f64]) -> Result<()> {
    if let Some(i) = xs.windows(2).position(|w| !(w[0] <= w[1])) {
        return Err(KuiperError::UnsortedInput { index: i + 1 });
    }
    Ok(())
}

/// Statistic for probability-integral-transformed values `u_(1) <= ... <= u_(n)`
/// against the uniform distribution on `[0, 1]`.
///
/// `D+ = max_i (i/n - u_(i))` and `D- = max_i (u_(i) - (i-1)/n)`.
pub fn kuiper_statistic_one_sample(probabilities: &[f64]) -> Result<EmpiricalResult> {
    if probabilities.is_empty() {
        return Err(KuiperError::EmptyInput);
    }
    if let Some((index, &value)) = probabilities
        .iter()
        .enumerate()
        .find(|(_, u)| !(0.0..=1.0).contains(*u))
    {
        return Err(KuiperError::OutOfRange { index, value });
    }
    check_sorted(probabilities)?;
    Ok(one_sample_unchecked(probabilities))
}

fn one_sample_unchecked(u: &[f64]) -> EmpiricalResult {
    let n = u.len();
    let nf = n as f64;
    let (mut d_plus, mut d_minus) = (0.0f64, 0.0f64);
    for (i, &x) in u.iter().enumerate() {
        d_plus = d_plus.max((i + 1) as f64 / nf - x);
        d_minus = d_minus.max(x - i as f64 / nf);
    }
    EmpiricalResult::new(d_plus, d_minus, n)
}

/// Statistic comparing the empirical distributions of two sorted samples of
/// equal size. Ties across samples are resolved by evaluating both
/// right-continuous ECDFs at every distinct merged value.
pub fn kuiper_statistic_two_sample(sample_a: &[f64], sample_b: &[f64]) -> Result<EmpiricalResult> {
    if sample_a.is_empty() || sample_b.is_empty() {
        return Err(KuiperError::EmptyInput);
    }
    if sample_a.len() != sample_b.len() {
        return Err(KuiperError::LengthMismatch {
            left: sample_a.len(),
            right: sample_b.len(),
        });
    }
    for s in [sample_a, sample_b] {
        if let Some((index, &value)) = s.iter().enumerate().find(|(_, x)| x.is_nan()) {
            return Err(KuiperError::OutOfRange { index, value });
        }
        check_sorted(s)?;
    }

    let n = sample_a.len();
    let nf = n as f64;
    let (mut i, mut j) = (0usize, 0usize);
    let (mut d_plus, mut d_minus) = (0.0f64, 0.0f64);
    while i < n || j < n {
        let x = match (sample_a.get(i), sample_b.get(j)) {
            (Some(&a), Some(&b)) => a.min(b),
            (Some(&a), None) => a,
            (None, Some(&b)) => b,
            (None, None) => unreachable!(),
        };
        while i < n && sample_a[i] <= x {
            i += 1;
        }
        while j < n && sample_b[j] <= x {
            j += 1;
        }
        let diff = (i as f64 - j as f64) / nf;
        d_plus = d_plus.max(diff);
        d_minus = d_minus.max(-diff);
    }
    Ok(EmpiricalResult::new(d_plus, d_minus, n))
}

/// Rejects when `V` strictly exceeds the upper-tail quantile for `alpha`.
pub fn run_test(result: &EmpiricalResult, alpha: f64, kind: TestKind) -> Result<TestDecision> {
    let n = SampleSize::finite(result.n as u64)?;
    let pair = kuiper_pair(DEFAULT_GUESS, alpha, n, kind, IterationMethod::Newton)?;
    Ok(TestDecision {
        statistic: *result,
        alpha,
        quantile: pair.quantile,
        reject: result.v > pair.quantile,
    })
}

const CHUNK: usize = 4096;

/// `V_n` for `replications` uniform samples of size `n`.
///
/// Replications are split into fixed chunks, each with its own ChaCha
/// stream derived from `seed`, so the output does not depend on the number
/// of worker threads.
pub fn simulate_statistics(n: usize, replications: usize, seed: u64) -> Vec<f64> {
    let chunks = replications.div_ceil(CHUNK);
    (0..chunks)
        .into_par_iter()
        .flat_map_iter(|chunk| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(chunk as u64);
            let count = CHUNK.min(replications - chunk * CHUNK);
            let mut buf = vec![0.0f64; n];
            (0..count)
                .map(|_| {
                    buf.iter_mut().for_each(|u| *u = rng.random::<f64>());
                    buf.sort_unstable_by(f64::total_cmp);
                    one_sample_unchecked(&buf).v
                })
                .collect::<Vec<_>>()
        })
        .collect()
}

/// Fraction of simulated null statistics with `V > v_threshold`.
pub fn monte_carlo_exceedance(n: usize, v_threshold: f64, replications: usize, seed: u64) -> f64 {
    if n == 0 || replications == 0 {
        return 0.0;
    }
    let hits = simulate_statistics(n, replications, seed)
        .into_iter()
        .filter(|&v| v > v_threshold)
        .count();
    hits as f64 / replications as f64
}
