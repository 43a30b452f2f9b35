//! Kuiper pairs `(c, v)` and tail quantiles of the `V_n` statistic.

use std::fmt;
use std::str::FromStr;

use crate::error::{KuiperError, Result};
use crate::fixed_point::{direct_update, distance, newton_update, solve_fixed_point, SolverConfig};
use crate::sample::SampleSize;
use crate::{survival_vn, survival_vnn};

/// Upper-tail probabilities at or above this give a zero quantile.
pub const UPPER_TAIL_GUARD: f64 = 0.9999;
/// Lower-tail probabilities at or below this give a zero quantile.
pub const LOWER_TAIL_GUARD: f64 = 0.0001;
/// Default starting point, inside every recommended window but the
/// two-sample direct one.
pub const DEFAULT_GUESS: f64 = 2.45;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TestKind {
    /// `V_n`: one empirical distribution against a continuous hypothesis.
    OneSample,
    /// `V_{n,n}`: two empirical distributions of equal size.
    TwoSampleEqual,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum IterationMethod {
    Direct,
    #[default]
    Newton,
}

impl IterationMethod {
    /// Open interval of starting points known to converge.
    pub fn recommended_window(self, kind: TestKind) -> (f64, f64) {
        match (kind, self) {
            (TestKind::OneSample, IterationMethod::Direct) => (0.5, 2.5),
            (TestKind::OneSample, IterationMethod::Newton) => (1.1, 2.5),
            (TestKind::TwoSampleEqual, IterationMethod::Direct) => (2.4, 2.6),
            (TestKind::TwoSampleEqual, IterationMethod::Newton) => (2.2, 2.6),
        }
    }

    pub fn recommended_guess(self, kind: TestKind) -> f64 {
        let (lo, hi) = self.recommended_window(kind);
        (lo + hi) / 2.0
    }
}

impl FromStr for TestKind {
    type Err = KuiperError;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "vn" | "one" | "one-sample" => Ok(TestKind::OneSample),
            "vnn" | "two" | "two-sample" => Ok(TestKind::TwoSampleEqual),
            _ => Err(KuiperError::InvalidArgument(format!("unknown test kind `{s}`"))),
        }
    }
}

impl fmt::Display for TestKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TestKind::OneSample => "vn",
            TestKind::TwoSampleEqual => "vnn",
        })
    }
}

impl FromStr for IterationMethod {
    type Err = KuiperError;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "direct" | "1" => Ok(IterationMethod::Direct),
            "newton" | "2" => Ok(IterationMethod::Newton),
            _ => Err(KuiperError::InvalidArgument(format!("unknown method `{s}`"))),
        }
    }
}

/// Critical value `c` on the `sqrt(n) V` scale and tail quantile `v = c / sqrt(n)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KuiperPair {
    pub critical_value: f64,
    pub quantile: f64,
    pub alpha: f64,
    pub n: SampleSize,
    pub kind: TestKind,
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha < 1.0 {
        Ok(())
    } else {
        Err(KuiperError::InvalidArgument(format!(
            "tail probability must lie in (0, 1), got {alpha}"
        )))
    }
}

type ScalarFn = dyn Fn(f64, f64, SampleSize) -> Result<f64>;

/// Solves the critical value with an explicit solver configuration.
///
/// Dispatches to the contraction (direct) or residual (Newton) form of the
/// one- or two-sample equation. One-sample roots at or below `1/2` are
/// rejected.
pub fn solve_critical_value(
    config: &SolverConfig,
    alpha: f64,
    n: SampleSize,
    kind: TestKind,
    method: IterationMethod,
) -> Result<f64> {
    check_alpha(alpha)?;
    let (lo, hi) = method.recommended_window(kind);
    if !(config.guess > lo && config.guess < hi) {
        log::warn!(
            "initial guess {} is outside the recommended window ({lo}, {hi}) for {kind}/{method:?}",
            config.guess
        );
    }

    let f: &ScalarFn = match (kind, method) {
        (TestKind::OneSample, IterationMethod::Direct) => &survival_vn::contraction,
        (TestKind::OneSample, IterationMethod::Newton) => &survival_vn::residual,
        (TestKind::TwoSampleEqual, IterationMethod::Direct) => &survival_vnn::contraction,
        (TestKind::TwoSampleEqual, IterationMethod::Newton) => &survival_vnn::residual,
    };
    let h = config.derivative_step;
    let (c, _) = match method {
        IterationMethod::Direct => solve_fixed_point(
            |f: &ScalarFn, c, a, n| direct_update(f, c, a, n),
            f,
            distance,
            config,
            alpha,
            n,
        )?,
        IterationMethod::Newton => solve_fixed_point(
            |f: &ScalarFn, c, a, n| newton_update(f, c, a, n, h),
            f,
            distance,
            config,
            alpha,
            n,
        )?,
    };

    if kind == TestKind::OneSample && c <= 0.5 {
        return Err(KuiperError::InadmissibleRoot { c });
    }
    Ok(c)
}

/// Solves the Kuiper pair for `(alpha, n)` from `guess` with tolerance `1e-5`.
pub fn kuiper_pair(
    guess: f64,
    alpha: f64,
    n: SampleSize,
    kind: TestKind,
    method: IterationMethod,
) -> Result<KuiperPair> {
    let config = SolverConfig::with_guess(guess);
    let c = solve_critical_value(&config, alpha, n, kind, method)?;
    Ok(KuiperPair {
        critical_value: c,
        quantile: c * n.inv_sqrt(),
        alpha,
        n,
        kind,
    })
}

/// `v` with `Pr{V_n > v} = alpha`; zero once `alpha >= 0.9999`.
pub fn upper_tail_quantile(alpha: f64, n: SampleSize) -> Result<f64> {
    if alpha >= UPPER_TAIL_GUARD {
        return Ok(0.0);
    }
    check_alpha(alpha)?;
    let config = SolverConfig::with_guess(DEFAULT_GUESS);
    let c = solve_critical_value(&config, alpha, n, TestKind::OneSample, IterationMethod::Newton)?;
    Ok(c * n.inv_sqrt())
}

/// `v` with `Pr{V_n <= v} = alpha`; zero once `alpha <= 0.0001`.
pub fn lower_tail_quantile(alpha: f64, n: SampleSize) -> Result<f64> {
    if alpha <= LOWER_TAIL_GUARD {
        return Ok(0.0);
    }
    upper_tail_quantile(1.0 - alpha, n)
}

/// Inverse CDF of `V_n`. `p = 1` has no finite quantile.
pub fn inverse_cdf(p: f64, n: SampleSize) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(KuiperError::InvalidArgument(format!(
            "probability must lie in [0, 1], got {p}"
        )));
    }
    if p == 1.0 {
        return Err(KuiperError::UnboundedQuantile);
    }
    upper_tail_quantile(1.0 - p, n)
}
