//! Python bindings: `import gamma_ratio_py`.
//!
//! Domain errors (poles, zero divisors, vanishing sines) raise `ValueError`.

use gamma_ratio::verify::{FixtureSource, TableId};
use gamma_ratio::{EvalPoint, Variant};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_variant(s: &str) -> PyResult<Variant> {
    s.parse().map_err(value_error)
}

fn point(a: f64, b: f64, c: f64, n: f64) -> PyResult<EvalPoint> {
    EvalPoint::from_parts(a, b, c, n).map_err(value_error)
}

/// Sum of the first M+1 terms of one series.
#[pyclass(name = "PartialSum", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPartialSum {
    #[pyo3(get)]
    value: f64,
    #[pyo3(get)]
    terms: Vec<f64>,
    #[pyo3(get)]
    order: usize,
    #[pyo3(get)]
    smallest_term_index: usize,
    #[pyo3(get)]
    diverging_tail: bool,
}

#[pymethods]
impl PyPartialSum {
    /// Partial sum through term m (m <= order).
    fn value_at(&self, m: usize) -> PyResult<f64> {
        if m > self.order {
            return Err(PyValueError::new_err(format!("m = {m} exceeds order {}", self.order)));
        }
        Ok(self.terms[..=m].iter().sum())
    }

    fn __repr__(&self) -> String {
        format!("PartialSum(value={}, order={})", self.value, self.order)
    }
}

#[pyclass(name = "RegionReport", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyRegionReport {
    #[pyo3(get)]
    variant: &'static str,
    #[pyo3(get)]
    series_convergent: bool,
    #[pyo3(get)]
    expansion_valid: bool,
    #[pyo3(get)]
    transition_n: f64,
    /// "lhs_ratio", "eq6_limit" or "boundary".
    #[pyo3(get)]
    represented_value: &'static str,
    #[pyo3(get)]
    is_degenerate_coincidence: bool,
}

#[pymethods]
impl PyRegionReport {
    fn __repr__(&self) -> String {
        format!(
            "RegionReport(variant={}, convergent={}, valid={}, transition_n={}, represented={})",
            self.variant,
            self.series_convergent,
            self.expansion_valid,
            self.transition_n,
            self.represented_value
        )
    }
}

/// (sign, ln|Gamma(x)|); sign is +1 or -1.
#[pyfunction]
fn log_gamma(x: f64) -> PyResult<(i8, f64)> {
    let v = gamma_ratio::log_gamma_signed(x).map_err(value_error)?;
    Ok((v.sign(), v.log_magnitude()))
}

#[pyfunction]
fn gamma(x: f64) -> PyResult<f64> {
    gamma_ratio::gamma(x).map_err(value_error)
}

/// Rising factorial (x)_m.
#[pyfunction]
fn pochhammer(x: f64, m: usize) -> f64 {
    gamma_ratio::pochhammer(x, m).to_f64()
}

/// Gamma(a+n)Gamma(b+n) / (Gamma(c+n)Gamma(a+b-c+n)).
#[pyfunction]
fn exact_ratio(a: f64, b: f64, c: f64, n: f64) -> PyResult<f64> {
    gamma_ratio::exact_ratio(&point(a, b, c, n)?).map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (a, b, c, n, order, variant = "e4"))]
fn partial_sum(a: f64, b: f64, c: f64, n: f64, order: usize, variant: &str) -> PyResult<PyPartialSum> {
    let r = gamma_ratio::partial_sum(&point(a, b, c, n)?, parse_variant(variant)?, order)
        .map_err(value_error)?;
    Ok(PyPartialSum {
        value: r.value,
        terms: r.terms,
        order: r.truncation_order,
        smallest_term_index: r.smallest_term_index,
        diverging_tail: r.diverging_tail,
    })
}

/// Gamma(d+n) times the ratio, via the alternating shifted-gamma series.
#[pyfunction]
fn partial_sum_e3(a: f64, b: f64, c: f64, n: f64, order: usize) -> PyResult<f64> {
    let v = gamma_ratio::partial_sum_e3(&point(a, b, c, n)?, order).map_err(value_error)?;
    Ok(v.to_f64())
}

/// Closed-form value a convergent series sums to.
#[pyfunction]
fn gauss_limit(a: f64, b: f64, c: f64, n: f64) -> PyResult<f64> {
    gamma_ratio::gauss_limit_e6(&point(a, b, c, n)?).map_err(value_error)
}

/// (M, partial sum at M) for smallest-term truncation.
#[pyfunction]
#[pyo3(signature = (a, b, c, n, variant = "e4", max_order = 10))]
fn optimal_truncation(
    a: f64,
    b: f64,
    c: f64,
    n: f64,
    variant: &str,
    max_order: usize,
) -> PyResult<(usize, f64)> {
    let t = gamma_ratio::optimal_truncation(&point(a, b, c, n)?, parse_variant(variant)?, max_order)
        .map_err(value_error)?;
    Ok((t.order, t.value))
}

#[pyfunction]
#[pyo3(signature = (a, b, c, n, variant = "e4"))]
fn classify(a: f64, b: f64, c: f64, n: f64, variant: &str) -> PyResult<PyRegionReport> {
    let r = gamma_ratio::classify(&point(a, b, c, n)?, parse_variant(variant)?);
    Ok(PyRegionReport {
        variant: r.variant.name(),
        series_convergent: r.series_convergent,
        expansion_valid: r.expansion_valid,
        transition_n: r.transition_n,
        represented_value: r.represented_value.name(),
        is_degenerate_coincidence: r.is_degenerate_coincidence,
    })
}

/// Reproduce a built-in table. Returns (rows, exact, eq6) where each row is
/// (M, rhs_e4, rhs_e5, marked_e4, marked_e5).
#[pyfunction]
#[allow(clippy::type_complexity)]
fn reproduce_table(
    id: &str,
) -> PyResult<(Vec<(usize, f64, f64, bool, bool)>, f64, Option<f64>)> {
    let id: TableId = id.parse().map_err(value_error)?;
    let fixture = FixtureSource::Embedded.load(id).map_err(value_error)?;
    let table = gamma_ratio::verify::reproduce_table(&fixture.spec).map_err(value_error)?;
    let rows = table
        .rows
        .iter()
        .map(|r| (r.order, r.rhs_e4, r.rhs_e5, r.marked_e4, r.marked_e5))
        .collect();
    Ok((rows, table.exact_lhs, table.exact_eq6))
}

#[pymodule]
fn gamma_ratio_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPartialSum>()?;
    m.add_class::<PyRegionReport>()?;
    m.add_function(wrap_pyfunction!(log_gamma, m)?)?;
    m.add_function(wrap_pyfunction!(gamma, m)?)?;
    m.add_function(wrap_pyfunction!(pochhammer, m)?)?;
    m.add_function(wrap_pyfunction!(exact_ratio, m)?)?;
    m.add_function(wrap_pyfunction!(partial_sum, m)?)?;
    m.add_function(wrap_pyfunction!(partial_sum_e3, m)?)?;
    m.add_function(wrap_pyfunction!(gauss_limit, m)?)?;
    m.add_function(wrap_pyfunction!(optimal_truncation, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(reproduce_table, m)?)?;
    Ok(())
}
