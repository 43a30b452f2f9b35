//! Fixed-precision number formatting shared by every subcommand.

/// Rounds half away from zero to `decimals` places and prints exactly that
/// many digits. `f64::round` already rounds halves away from zero.
pub fn fixed(x: f64, decimals: usize) -> String {
    if !x.is_finite() {
        return "NA".to_string();
    }
    let scale = 10f64.powi(decimals as i32);
    let rounded = (x * scale).round() / scale;
    // avoid printing "-0.0000"
    let rounded = if rounded == 0.0 { 0.0 } else { rounded };
    format!("{rounded:.decimals$}")
}

/// Shortest decimal form of a probability on an input grid, trailing zeros
/// removed (`0.95`, not `0.9500000000`).
pub fn trimmed(x: f64) -> String {
    let s = format!("{x:.10}");
    let s = s.trim_end_matches('0');
    s.trim_end_matches('.').to_string()
}
