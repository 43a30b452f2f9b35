//! Two-sample `V_{n,n}` test with equal sample sizes.
//!
//! With `x = c^2`,
//!
//! ```text
//! U1(c, n) = 2(2x - 1) - x(2x - 7)/(6n) - e^x/(6n)
//! U2(c, n) = 2(8x - 1) - 2x(8x - 7)/(3n)
//! Pr{sqrt(n) V_{n,n} > c} ~ U1 e^{-x} + U2 e^{-4x}
//! ```
//!
//! The constant `-1/(6n)` of the expansion is carried inside `U1` as
//! `-e^x/(6n)`, so the approximation has the same two-exponential shape as
//! the one-sample case.

use crate::error::{KuiperError, Result};
use crate::sample::SampleSize;

/// Largest `c^2` for which `e^{c^2}` is evaluated.
pub const MAX_EXPONENT: f64 = 700.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VnnFactors {
    pub u1: f64,
    pub u2: f64,
}

fn check_exponent(c: f64) -> Result<f64> {
    let x = c * c;
    if x > MAX_EXPONENT || !x.is_finite() {
        return Err(KuiperError::Overflow { c });
    }
    Ok(x)
}

pub fn u1(c: f64, n: SampleSize) -> Result<f64> {
    let x = check_exponent(c)?;
    let k = n.recip();
    Ok(2.0 * (2.0 * x - 1.0) - x * (2.0 * x - 7.0) * k / 6.0 - x.exp() * k / 6.0)
}

pub fn u2(c: f64, n: SampleSize) -> f64 {
    let x = c * c;
    2.0 * (8.0 * x - 1.0) - 2.0 * x * (8.0 * x - 7.0) * n.recip() / 3.0
}

pub fn factors(c: f64, n: SampleSize) -> Result<VnnFactors> {
    Ok(VnnFactors {
        u1: u1(c, n)?,
        u2: u2(c, n),
    })
}

/// Two-term approximation of `Pr{sqrt(n) V_{n,n} > c}`.
pub fn survival(c: f64, n: SampleSize) -> Result<f64> {
    let VnnFactors { u1, u2 } = factors(c, n)?;
    let x = c * c;
    Ok(u1 * (-x).exp() + u2 * (-4.0 * x).exp())
}

fn log_factor(c: f64, n: SampleSize) -> Result<f64> {
    if !(c.is_finite() && c > 0.0) {
        return Err(KuiperError::NumericalDomain {
            c,
            reason: "critical value must be positive and finite",
        });
    }
    let VnnFactors { u1, u2 } = factors(c, n)?;
    let arg = u1 + u2 * (-3.0 * c * c).exp();
    if arg > 0.0 {
        Ok(arg.ln())
    } else {
        Err(KuiperError::NumericalDomain {
            c,
            reason: "U1 + U2 exp(-3c^2) is not positive",
        })
    }
}

/// `c^2 + ln(alpha) - ln(U1 + U2 e^{-3c^2})`.
pub fn residual(c: f64, alpha: f64, n: SampleSize) -> Result<f64> {
    Ok(c * c + alpha.ln() - log_factor(c, n)?)
}

/// `sqrt(ln(U1 + U2 e^{-3c^2}) - ln(alpha))`.
pub fn contraction(c: f64, alpha: f64, n: SampleSize) -> Result<f64> {
    let radicand = log_factor(c, n)? - alpha.ln();
    if radicand < 0.0 {
        return Err(KuiperError::NumericalDomain {
            c,
            reason: "negative radicand in the direct map",
        });
    }
    Ok(radicand.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixed_point::{distance, newton_update, solve_fixed_point, SolverConfig};

    const INF: SampleSize = SampleSize::Infinite;

    #[test]
    fn factor_examples() {
        assert_eq!(u1(1.0, INF).unwrap(), 2.0);
        assert!((u1(2.0, SampleSize::Finite(10)).unwrap() - 13.0233).abs() < 1e-3);
        assert_eq!(u2(1.0, INF), 14.0);
        assert!((u2(1.0, SampleSize::Finite(3)) - 13.7778).abs() < 1e-4);
        let c = 1.0 / 8f64.sqrt();
        let n = SampleSize::Finite(7);
        let x = c * c;
        assert!((u2(c, n) + 2.0 * x * (8.0 * x - 7.0) / 21.0).abs() < 1e-12);
    }

    #[test]
    fn limit_factors_are_exact() {
        for c in [0.4, 1.0, 1.7, 2.9] {
            let x = c * c;
            assert_eq!(u1(c, INF).unwrap(), 2.0 * (2.0 * x - 1.0));
            assert_eq!(u2(c, INF), 2.0 * (8.0 * x - 1.0));
        }
    }

    #[test]
    fn survival_examples() {
        let n30 = SampleSize::Finite(30);
        assert!((survival(2.2740, n30).unwrap() - 0.10).abs() < 5e-4);
        assert!((survival(2.4430, n30).unwrap() - 0.05).abs() < 5e-4);
        assert!((survival(2.7351, n30).unwrap() - 0.01).abs() < 5e-4);
        assert!((survival(2.2905, INF).unwrap() - 0.10).abs() < 5e-4);
    }

    #[test]
    fn folded_constant_matches_expanded_form() {
        // U1 e^{-x} + U2 e^{-4x} against the form with an explicit -1/(6n)
        for &(c, n) in &[(2.0, 10u64), (2.5, 30), (1.3, 7)] {
            let x: f64 = c * c;
            let nf = n as f64;
            let expanded = -1.0 / (6.0 * nf)
                + (2.0 * (2.0 * x - 1.0) - x * (2.0 * x - 7.0) / (6.0 * nf)) * (-x).exp()
                + (2.0 * (8.0 * x - 1.0) - 2.0 * x * (8.0 * x - 7.0) / (3.0 * nf)) * (-4.0 * x).exp();
            let s = survival(c, SampleSize::Finite(n)).unwrap();
            assert!((s - expanded).abs() < 1e-14, "{s} {expanded}");
        }
    }

    #[test]
    fn overflow_guard() {
        assert!(matches!(u1(30.0, SampleSize::Finite(5)), Err(KuiperError::Overflow { .. })));
        assert!(survival(26.0, SampleSize::Finite(5)).is_ok());
        assert!(residual(27.0, 0.05, SampleSize::Finite(5)).is_err());
    }

    #[test]
    fn residual_roots() {
        assert!(residual(2.4430, 0.05, SampleSize::Finite(30)).unwrap().abs() < 1e-3);
        assert!(residual(2.6124, 0.01, SampleSize::Finite(10)).unwrap().abs() < 1e-3);
    }

    fn newton_solve(alpha: f64, n: SampleSize) -> f64 {
        let f = |c, a, n| residual(c, a, n);
        solve_fixed_point(
            |f: &_, c, a, n| newton_update(f, c, a, n, 1e-5),
            &f,
            distance,
            &SolverConfig::default(),
            alpha,
            n,
        )
        .unwrap()
        .0
    }

    #[test]
    fn solved_values_are_fixed_points_and_round_trip() {
        for n in [10, 20, 30, 40, 100] {
            let n = SampleSize::Finite(n);
            let mut last = f64::INFINITY;
            for k in 1..=10 {
                let alpha = k as f64 / 100.0;
                let c = newton_solve(alpha, n);
                assert!((contraction(c, alpha, n).unwrap() - c).abs() < 1e-6);
                assert!((survival(c, n).unwrap() - alpha).abs() < 1e-6);
                assert!(c < last);
                last = c;
            }
        }
    }
}
