//! Sample size with an explicit large-sample limit.

use std::fmt;
use std::str::FromStr;

use crate::error::{KuiperError, Result};

/// Sizes at or above this are treated as the `n -> inf` limit.
pub const INFINITY_THRESHOLD: u64 = 10_000_000_000_000_000;

/// Number of observations `n`, or the asymptotic limit.
///
/// In the limit every `1/sqrt(n)` and `1/n` correction is exactly zero
/// rather than evaluated at a huge finite `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SampleSize {
    Finite(u64),
    Infinite,
}

impl SampleSize {
    /// `n >= 1`; values at or above [`INFINITY_THRESHOLD`] map to `Infinite`.
    pub fn finite(n: u64) -> Result<Self> {
        match n {
            0 => Err(KuiperError::InvalidArgument("sample size must be >= 1".into())),
            n if n >= INFINITY_THRESHOLD => Ok(SampleSize::Infinite),
            n => Ok(SampleSize::Finite(n)),
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, SampleSize::Infinite)
    }

    pub fn sqrt(self) -> f64 {
        match self {
            SampleSize::Finite(n) => (n as f64).sqrt(),
            SampleSize::Infinite => f64::INFINITY,
        }
    }

    /// `1/sqrt(n)`, zero in the limit.
    pub fn inv_sqrt(self) -> f64 {
        match self {
            SampleSize::Finite(n) => 1.0 / (n as f64).sqrt(),
            SampleSize::Infinite => 0.0,
        }
    }

    /// `1/n`, zero in the limit.
    pub fn recip(self) -> f64 {
        match self {
            SampleSize::Finite(n) => 1.0 / n as f64,
            SampleSize::Infinite => 0.0,
        }
    }
}

impl fmt::Display for SampleSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SampleSize::Finite(n) => write!(f, "{n}"),
            SampleSize::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for SampleSize {
    type Err = KuiperError;

    /// Accepts a positive integer (`30`, `1e8`) or `inf`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s.eq_ignore_ascii_case("infinity") {
            return Ok(SampleSize::Infinite);
        }
        if let Ok(n) = s.parse::<u64>() {
            return SampleSize::finite(n);
        }
        // scientific notation such as 1e8
        match s.parse::<f64>() {
            Ok(x) if x.is_finite() && x >= 1.0 && x.fract() == 0.0 => {
                if x >= INFINITY_THRESHOLD as f64 {
                    Ok(SampleSize::Infinite)
                } else {
                    SampleSize::finite(x as u64)
                }
            }
            _ => Err(KuiperError::InvalidArgument(format!(
                "sample size must be a positive integer or `inf`, got `{s}`"
            ))),
        }
    }
}
