//! Critical values and tail quantiles for Kuiper's goodness-of-fit tests.
//!
//! The one-sample `V_n` test and the equal-size two-sample `V_{n,n}` test
//! both reduce to a scalar nonlinear equation in the critical value `c`,
//! obtained by keeping the first two terms of the asymptotic survival
//! series. The equation is solved by fixed-point iteration, either with a
//! direct contraction or with a forward-difference Newton step.
//!
//! ```
//! use kuiper_core::{kuiper_pair, IterationMethod, SampleSize, TestKind};
//!
//! let pair = kuiper_pair(2.45, 0.05, SampleSize::finite(30).unwrap(),
//!                        TestKind::OneSample, IterationMethod::Newton).unwrap();
//! assert!((pair.critical_value - 1.6758).abs() < 5e-4);
//! assert!((pair.quantile - 0.3060).abs() < 5e-4);
//! ```

pub mod empirical;
pub mod error;
pub mod fixed_point;
pub mod quantile;
pub mod sample;
pub mod survival_vn;
pub mod survival_vnn;

pub use empirical::{
    kuiper_statistic_one_sample, kuiper_statistic_two_sample, monte_carlo_exceedance, run_test,
    EmpiricalResult, TestDecision,
};
pub use error::{KuiperError, Result};
pub use fixed_point::{distance, solve_fixed_point, IterationTrace, SolverConfig};
pub use quantile::{
    inverse_cdf, kuiper_pair, lower_tail_quantile, upper_tail_quantile, IterationMethod,
    KuiperPair, TestKind,
};
pub use sample::SampleSize;
