//! Data files and the probability-integral transform.

use std::fs;
use std::path::Path;

/// Reference distributions available to `test`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Reference {
    Uniform { low: f64, high: f64 },
    Normal { mean: f64, sd: f64 },
}

impl Reference {
    pub fn from_args(name: &str, params: &[f64]) -> Result<Self, String> {
        match (name, params) {
            ("uniform", []) => Ok(Reference::Uniform { low: 0.0, high: 1.0 }),
            ("uniform", &[low, high]) if low < high => Ok(Reference::Uniform { low, high }),
            ("uniform", _) => Err("uniform needs --params a,b with a < b".into()),
            ("normal", []) => Ok(Reference::Normal { mean: 0.0, sd: 1.0 }),
            ("normal", &[mean, sd]) if sd > 0.0 => Ok(Reference::Normal { mean, sd }),
            ("normal", _) => Err("normal needs --params mu,sigma with sigma > 0".into()),
            _ => Err(format!("unknown distribution `{name}`")),
        }
    }

    pub fn cdf(&self, x: f64) -> f64 {
        match *self {
            Reference::Uniform { low, high } => ((x - low) / (high - low)).clamp(0.0, 1.0),
            // erf from libm: absolute error far below 1e-7
            Reference::Normal { mean, sd } => {
                0.5 * (1.0 + libm::erf((x - mean) / (sd * std::f64::consts::SQRT_2)))
            }
        }
    }
}

/// One number per line; blank lines and `#` comments are skipped.
pub fn parse_values(text: &str) -> Result<Vec<f64>, String> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match line.parse::<f64>() {
            Ok(x) if x.is_finite() => out.push(x),
            _ => return Err(format!("line {}: `{line}` is not a finite number", lineno + 1)),
        }
    }
    Ok(out)
}

pub fn read_values(path: &Path) -> Result<Vec<f64>, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_values(&text)
}
