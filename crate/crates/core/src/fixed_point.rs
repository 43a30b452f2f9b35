//! Generic scalar fixed-point iteration.
//!
//! A problem is described by three function objects: an *updater* `T`, the
//! function `f` it is applied to, and a distance `d`. Starting from a guess
//! the solver evaluates `improve = T(f, guess, alpha, n)` and repeats
//! `guess <- improve` until `d(improve, guess) < epsilon`.
//!
//! Two updaters are provided: [`direct_update`], which returns `f(c)` for a
//! contraction `f`, and [`newton_update`], which takes a forward-difference
//! Newton step on a residual `f`.

use crate::error::{KuiperError, Result};
use crate::sample::SampleSize;

/// Smallest finite-difference slope a Newton step will divide by.
pub const MIN_SLOPE: f64 = 1e-12;

/// Tolerance, starting point and limits for [`solve_fixed_point`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    pub epsilon: f64,
    pub guess: f64,
    pub max_iterations: usize,
    /// Step `h` of the forward difference used by Newton updates.
    pub derivative_step: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            epsilon: 1e-5,
            guess: 2.45,
            max_iterations: 200,
            derivative_step: 1e-5,
        }
    }
}

impl SolverConfig {
    pub fn with_guess(guess: f64) -> Self {
        SolverConfig {
            guess,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.epsilon > 0.0 && self.epsilon.is_finite()) {
            return Err(KuiperError::InvalidArgument(format!(
                "epsilon must be positive, got {}",
                self.epsilon
            )));
        }
        if !(self.derivative_step > 0.0 && self.derivative_step.is_finite()) {
            return Err(KuiperError::InvalidArgument(format!(
                "derivative step must be positive, got {}",
                self.derivative_step
            )));
        }
        if self.max_iterations == 0 {
            return Err(KuiperError::InvalidArgument(
                "max_iterations must be >= 1".into(),
            ));
        }
        if !(self.guess > 0.0 && self.guess.is_finite()) {
            return Err(KuiperError::InvalidArgument(format!(
                "initial guess must be positive, got {}",
                self.guess
            )));
        }
        Ok(())
    }
}

/// The sequence `c0, c1, c2, ...` produced by a solve.
#[derive(Debug, Clone, PartialEq)]
pub struct IterationTrace {
    pub iterates: Vec<f64>,
    pub converged: bool,
    pub final_distance: f64,
}

/// `|x - y|`.
pub fn distance(x: f64, y: f64) -> f64 {
    (x - y).abs()
}

/// Returns `f(c, alpha, n)`; the fixed point of `c -> f(c)` is the answer.
pub fn direct_update<F>(contraction: &F, c: f64, alpha: f64, n: SampleSize) -> Result<f64>
where
    F: Fn(f64, f64, SampleSize) -> Result<f64> + ?Sized,
{
    contraction(c, alpha, n)
}

/// One Newton step `c - f(c) / f'(c)` with `f'` taken as the forward
/// difference `(f(c + h) - f(c)) / h`.
pub fn newton_update<F>(residual: &F, c: f64, alpha: f64, n: SampleSize, h: f64) -> Result<f64>
where
    F: Fn(f64, f64, SampleSize) -> Result<f64> + ?Sized,
{
    let fc = residual(c, alpha, n)?;
    let slope = (residual(c + h, alpha, n)? - fc) / h;
    if !(slope.abs() >= MIN_SLOPE) {
        return Err(KuiperError::DerivativeNearZero { c, slope });
    }
    Ok(c - fc / slope)
}

/// Iterates `improve = updater(f, guess, alpha, n)` until successive iterates
/// are closer than `config.epsilon` under `dist`.
///
/// The updater is applied at most `config.max_iterations` times. A
/// non-finite iterate is reported as [`KuiperError::NumericalDomain`] rather
/// than being allowed to stall the distance test.
pub fn solve_fixed_point<U, F, D>(
    updater: U,
    f: &F,
    dist: D,
    config: &SolverConfig,
    alpha: f64,
    n: SampleSize,
) -> Result<(f64, IterationTrace)>
where
    U: Fn(&F, f64, f64, SampleSize) -> Result<f64>,
    F: Fn(f64, f64, SampleSize) -> Result<f64> + ?Sized,
    D: Fn(f64, f64) -> f64,
{
    config.validate()?;
    let step = |c: f64| -> Result<f64> {
        let next = updater(f, c, alpha, n)?;
        if next.is_finite() {
            Ok(next)
        } else {
            Err(KuiperError::NumericalDomain {
                c,
                reason: "updater produced a non-finite iterate",
            })
        }
    };

    let mut guess = config.guess;
    let mut iterates = vec![guess];
    let mut improve = step(guess)?;
    iterates.push(improve);
    let mut applications = 1;
    let mut gap = dist(improve, guess);
    while gap >= config.epsilon {
        if applications >= config.max_iterations {
            return Err(KuiperError::NonConvergence {
                iterations: applications,
                last: improve,
            });
        }
        guess = improve;
        improve = step(guess)?;
        iterates.push(improve);
        applications += 1;
        gap = dist(improve, guess);
    }

    Ok((
        improve,
        IterationTrace {
            iterates,
            converged: true,
            final_distance: gap,
        },
    ))
}
