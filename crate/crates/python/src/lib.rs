//! Python bindings for `kuiper-core`.
//!
//! Sample sizes are accepted as a positive int, a float (`float("inf")` for
//! the limiting distribution) or a string such as `"inf"` or `"1e8"`.

use kuiper_core::{self as core, survival_vn, survival_vnn, IterationMethod, KuiperError, SampleSize, TestKind};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn to_py(e: KuiperError) -> PyErr {
    let msg = format!("{}: {e}", e.name());
    match e {
        KuiperError::InvalidArgument(_)
        | KuiperError::EmptyInput
        | KuiperError::UnsortedInput { .. }
        | KuiperError::OutOfRange { .. }
        | KuiperError::LengthMismatch { .. } => PyValueError::new_err(msg),
        _ => PyRuntimeError::new_err(msg),
    }
}

fn sample_size(n: &Bound<'_, PyAny>) -> PyResult<SampleSize> {
    if let Ok(k) = n.extract::<u64>() {
        return SampleSize::finite(k).map_err(to_py);
    }
    if let Ok(x) = n.extract::<f64>() {
        if x.is_infinite() && x > 0.0 {
            return Ok(SampleSize::Infinite);
        }
        if x.is_finite() && x >= 1.0 && x.fract() == 0.0 {
            return SampleSize::finite(x as u64).map_err(to_py);
        }
        return Err(PyValueError::new_err(format!("invalid sample size {x}")));
    }
    if let Ok(s) = n.extract::<String>() {
        return s.parse().map_err(to_py);
    }
    Err(PyValueError::new_err("sample size must be an int, float or str"))
}

fn n_to_py(n: SampleSize) -> f64 {
    match n {
        SampleSize::Finite(k) => k as f64,
        SampleSize::Infinite => f64::INFINITY,
    }
}

fn parse<T: std::str::FromStr<Err = KuiperError>>(s: &str) -> PyResult<T> {
    s.parse().map_err(to_py)
}

#[pyclass(name = "KuiperPair", frozen, get_all)]
pub struct PyKuiperPair {
    critical_value: f64,
    quantile: f64,
    alpha: f64,
    n: f64,
    test: String,
}

#[pymethods]
impl PyKuiperPair {
    fn __repr__(&self) -> String {
        format!(
            "KuiperPair(critical_value={}, quantile={}, alpha={}, n={}, test='{}')",
            self.critical_value, self.quantile, self.alpha, self.n, self.test
        )
    }
}

#[pyclass(name = "EmpiricalResult", frozen, get_all)]
pub struct PyEmpiricalResult {
    d_plus: f64,
    d_minus: f64,
    v: f64,
    k: f64,
    n: usize,
    p_value: f64,
}

impl From<core::EmpiricalResult> for PyEmpiricalResult {
    fn from(r: core::EmpiricalResult) -> Self {
        PyEmpiricalResult {
            d_plus: r.d_plus,
            d_minus: r.d_minus,
            v: r.v,
            k: r.k,
            n: r.n,
            p_value: r.p_value(),
        }
    }
}

impl From<&PyEmpiricalResult> for core::EmpiricalResult {
    fn from(r: &PyEmpiricalResult) -> Self {
        core::EmpiricalResult {
            d_plus: r.d_plus,
            d_minus: r.d_minus,
            v: r.v,
            k: r.k,
            n: r.n,
        }
    }
}

#[pymethods]
impl PyEmpiricalResult {
    fn __repr__(&self) -> String {
        format!(
            "EmpiricalResult(d_plus={}, d_minus={}, v={}, k={}, n={})",
            self.d_plus, self.d_minus, self.v, self.k, self.n
        )
    }
}

/// Critical value and tail quantile for tail probability `alpha`.
#[pyfunction]
#[pyo3(signature = (alpha, n, test = "vn", method = "newton", guess = 2.45))]
fn kuiper_pair(alpha: f64, n: &Bound<'_, PyAny>, test: &str, method: &str, guess: f64) -> PyResult<PyKuiperPair> {
    let kind: TestKind = parse(test)?;
    let method: IterationMethod = parse(method)?;
    let p = core::kuiper_pair(guess, alpha, sample_size(n)?, kind, method).map_err(to_py)?;
    Ok(PyKuiperPair {
        critical_value: p.critical_value,
        quantile: p.quantile,
        alpha: p.alpha,
        n: n_to_py(p.n),
        test: p.kind.to_string(),
    })
}

#[pyfunction]
fn kuiper_utq(alpha: f64, n: &Bound<'_, PyAny>) -> PyResult<f64> {
    core::upper_tail_quantile(alpha, sample_size(n)?).map_err(to_py)
}

#[pyfunction]
fn kuiper_ltq(alpha: f64, n: &Bound<'_, PyAny>) -> PyResult<f64> {
    core::lower_tail_quantile(alpha, sample_size(n)?).map_err(to_py)
}

#[pyfunction]
fn kuiper_inv_cdf(p: f64, n: &Bound<'_, PyAny>) -> PyResult<f64> {
    core::inverse_cdf(p, sample_size(n)?).map_err(to_py)
}

/// `Pr{sqrt(n) V_n > c}`, two-term approximation.
#[pyfunction]
fn survival_one_sample(c: f64, n: &Bound<'_, PyAny>) -> PyResult<f64> {
    Ok(survival_vn::survival(c, sample_size(n)?))
}

/// `Pr{sqrt(n) V_{n,n} > c}`, two-term approximation.
#[pyfunction]
fn survival_two_sample(c: f64, n: &Bound<'_, PyAny>) -> PyResult<f64> {
    survival_vnn::survival(c, sample_size(n)?).map_err(to_py)
}

/// Statistic for sorted probability-integral-transformed values in `[0, 1]`.
#[pyfunction]
fn statistic_one_sample(u: Vec<f64>) -> PyResult<PyEmpiricalResult> {
    core::kuiper_statistic_one_sample(&u).map(Into::into).map_err(to_py)
}

#[pyfunction]
fn statistic_two_sample(a: Vec<f64>, b: Vec<f64>) -> PyResult<PyEmpiricalResult> {
    core::kuiper_statistic_two_sample(&a, &b).map(Into::into).map_err(to_py)
}

/// Returns `(reject, quantile)`.
#[pyfunction]
#[pyo3(signature = (result, alpha, test = "vn"))]
fn run_test(result: &PyEmpiricalResult, alpha: f64, test: &str) -> PyResult<(bool, f64)> {
    let d = core::run_test(&result.into(), alpha, parse(test)?).map_err(to_py)?;
    Ok((d.reject, d.quantile))
}

/// Fraction of uniform samples of size `n` whose `V` exceeds `v_threshold`.
#[pyfunction]
fn monte_carlo_exceedance(py: Python<'_>, n: usize, v_threshold: f64, reps: usize, seed: u64) -> PyResult<f64> {
    if n == 0 || reps == 0 {
        return Err(PyValueError::new_err("n and reps must be positive"));
    }
    Ok(py.detach(|| core::monte_carlo_exceedance(n, v_threshold, reps, seed)))
}

#[pymodule]
fn kuiper(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyKuiperPair>()?;
    m.add_class::<PyEmpiricalResult>()?;
    m.add_function(wrap_pyfunction!(kuiper_pair, m)?)?;
    m.add_function(wrap_pyfunction!(kuiper_utq, m)?)?;
    m.add_function(wrap_pyfunction!(kuiper_ltq, m)?)?;
    m.add_function(wrap_pyfunction!(kuiper_inv_cdf, m)?)?;
    m.add_function(wrap_pyfunction!(survival_one_sample, m)?)?;
    m.add_function(wrap_pyfunction!(survival_two_sample, m)?)?;
    m.add_function(wrap_pyfunction!(statistic_one_sample, m)?)?;
    m.add_function(wrap_pyfunction!(statistic_two_sample, m)?)?;
    m.add_function(wrap_pyfunction!(run_test, m)?)?;
    m.add_function(wrap_pyfunction!(monte_carlo_exceedance, m)?)?;
    Ok(())
}
