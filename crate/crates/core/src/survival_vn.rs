//! One-sample `V_n` test: second-order survival approximation and the
//! residual / contraction forms of the critical-value equation.
//!
//! With `K_n = sqrt(n) V_n`,
//!
//! ```text
//! Pr{K_n > c} ~ A1(c, n) exp(-2c^2) + A2(c, n) exp(-8c^2)
//! A1 = -2 + 8c/sqrt(n) + 8c^2 - 32c^3 / (3 sqrt(n))
//! A2 = -2 + 32c/sqrt(n) + 32c^2 - 512c^3 / (3 sqrt(n))
//! ```
//!
//! Taking logs of `alpha = A1 e^{-2c^2} + A2 e^{-8c^2}` gives the equation
//! `2c^2 + ln(alpha) = ln(A1 + A2 e^{-6c^2})` that both [`residual`] and
//! [`contraction`] encode.

use crate::error::{KuiperError, Result};
use crate::sample::SampleSize;

/// The polynomial factors of the two exponentials.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VnFactors {
    pub a1: f64,
    pub a2: f64,
}

pub fn a1(c: f64, n: SampleSize) -> f64 {
    let s = n.inv_sqrt();
    -2.0 + 8.0 * c * s + 8.0 * c * c - 32.0 * c * c * c * s / 3.0
}

pub fn a2(c: f64, n: SampleSize) -> f64 {
    let s = n.inv_sqrt();
    -2.0 + 32.0 * c * s + 32.0 * c * c - 512.0 * c * c * c * s / 3.0
}

pub fn factors(c: f64, n: SampleSize) -> VnFactors {
    VnFactors {
        a1: a1(c, n),
        a2: a2(c, n),
    }
}

/// Two-term approximation of `Pr{sqrt(n) V_n > c}`.
///
/// Not clamped: outside the region where the truncation is meaningful the
/// value can leave `(0, 1)`.
pub fn survival(c: f64, n: SampleSize) -> f64 {
    let VnFactors { a1, a2 } = factors(c, n);
    a1 * (-2.0 * c * c).exp() + a2 * (-8.0 * c * c).exp()
}

/// The asymptotic series for `Pr{sqrt(n) V_n > c}` truncated after `terms`
/// terms of each sum. `terms == 2` is algebraically [`survival`].
pub fn series_survival(c: f64, n: SampleSize, terms: usize) -> f64 {
    let c2 = c * c;
    let mut leading = 0.0;
    let mut correction = 0.0;
    for j in 1..=terms {
        let j2 = (j * j) as f64;
        let decay = (-2.0 * j2 * c2).exp();
        leading += 2.0 * (4.0 * j2 * c2 - 1.0) * decay;
        correction += j2 * (4.0 * j2 * c2 - 3.0) * decay;
    }
    leading - 8.0 * c * n.inv_sqrt() / 3.0 * correction
}

fn log_factor(c: f64, n: SampleSize) -> Result<f64> {
    if !(c.is_finite() && c > 0.0) {
        return Err(KuiperError::NumericalDomain {
            c,
            reason: "critical value must be positive and finite",
        });
    }
    let VnFactors { a1, a2 } = factors(c, n);
    let arg = a1 + a2 * (-6.0 * c * c).exp();
    if arg > 0.0 {
        Ok(arg.ln())
    } else {
        Err(KuiperError::NumericalDomain {
            c,
            reason: "A1 + A2 exp(-6c^2) is not positive",
        })
    }
}

/// `2c^2 + ln(alpha) - ln(A1 + A2 e^{-6c^2})`; zero at the critical value.
pub fn residual(c: f64, alpha: f64, n: SampleSize) -> Result<f64> {
    Ok(2.0 * c * c + alpha.ln() - log_factor(c, n)?)
}

/// `sqrt((ln(A1 + A2 e^{-6c^2}) - ln(alpha)) / 2)`, whose fixed points are the
/// roots of [`residual`].
pub fn contraction(c: f64, alpha: f64, n: SampleSize) -> Result<f64> {
    let radicand = (log_factor(c, n)? - alpha.ln()) / 2.0;
    if radicand < 0.0 {
        return Err(KuiperError::NumericalDomain {
            c,
            reason: "negative radicand in the direct map",
        });
    }
    Ok(radicand.sqrt())
}
