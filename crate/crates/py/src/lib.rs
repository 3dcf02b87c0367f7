use abelian_core::bench::{parse_algorithms, Algorithm};
use abelian_core::lfap::candidate_set;
use abelian_core::qlfap::Analysis;
use abelian_core::{
    analyze, divisors_at_least, generate, is_full_abelian_period, repeated_alphabet_word, parikh_vector, smallest_full_abelian_period,
    Alphabet, GenSpec, Word,
};
use pyo3::exceptions::{PyTypeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyBytes, PyString};

fn to_py(e: abelian_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Accepts `bytes` or `str`.
fn input_bytes(obj: &Bound<'_, PyAny>) -> PyResult<Vec<u8>> {
    if let Ok(b) = obj.cast::<PyBytes>() {
        return Ok(b.as_bytes().to_vec());
    }
    if let Ok(s) = obj.cast::<PyString>() {
        return Ok(s.to_str()?.as_bytes().to_vec());
    }
    Err(PyTypeError::new_err("expected bytes or str"))
}

fn word_of(obj: &Bound<'_, PyAny>) -> PyResult<Word> {
    let bytes = input_bytes(obj)?;
    Word::from_bytes(&bytes).map(|(w, _)| w).map_err(to_py)
}

/// Result of analyzing a word: `n`, `g`, `s`, `T` and the scaled profile.
#[pyclass(name = "Analysis", frozen)]
struct PyAnalysis {
    inner: Analysis,
}

#[pymethods]
impl PyAnalysis {
    #[getter]
    fn n(&self) -> usize {
        self.inner.n
    }

    #[getter]
    fn g(&self) -> usize {
        self.inner.g
    }

    #[getter]
    fn s(&self) -> usize {
        self.inner.s
    }

    #[getter]
    fn threshold(&self) -> usize {
        self.inner.threshold()
    }

    #[getter]
    fn sigma_effective(&self) -> usize {
        self.inner.sigma_effective
    }

    #[getter]
    fn parikh(&self) -> Vec<u64> {
        self.inner.parikh.counts().to_vec()
    }

    /// `L` as a list of 0/1 integers.
    #[getter]
    fn marks(&self) -> Vec<u8> {
        self.inner.profile.marks().iter().map(|&m| m as u8).collect()
    }

    fn factor_lengths(&self) -> Vec<usize> {
        self.inner.profile.factor_lengths()
    }

    fn __repr__(&self) -> String {
        format!(
            "Analysis(n={}, g={}, s={}, T={})",
            self.inner.n,
            self.inner.g,
            self.inner.s,
            self.inner.threshold()
        )
    }
}

#[pyfunction]
fn analyze_word(word: &Bound<'_, PyAny>) -> PyResult<PyAnalysis> {
    let w = word_of(word)?;
    analyze(&w).map(|inner| PyAnalysis { inner }).map_err(to_py)
}

/// Full Abelian periods, ascending. `algorithm` is `qlfap`, `lfap` or `oracle`.
#[pyfunction]
#[pyo3(signature = (word, algorithm = "qlfap"))]
fn full_abelian_periods(word: &Bound<'_, PyAny>, algorithm: &str) -> PyResult<Vec<usize>> {
    let w = word_of(word)?;
    let algorithm: Algorithm = algorithm.parse().map_err(to_py)?;
    algorithm.run(&w).map(|p| p.into_vec()).map_err(to_py)
}

#[pyfunction]
fn smallest_period(word: &Bound<'_, PyAny>) -> PyResult<usize> {
    smallest_full_abelian_period(&word_of(word)?).map_err(to_py)
}

#[pyfunction]
fn is_period(word: &Bound<'_, PyAny>, p: usize) -> PyResult<bool> {
    is_full_abelian_period(&word_of(word)?, p).map_err(to_py)
}

/// Letter counts over the alphabet inferred from the input.
#[pyfunction]
fn parikh(word: &Bound<'_, PyAny>) -> PyResult<Vec<u64>> {
    Ok(parikh_vector(&word_of(word)?).counts().to_vec())
}

#[pyfunction]
#[pyo3(signature = (m, lower = 1))]
fn divisors(m: u64, lower: u64) -> PyResult<Vec<u64>> {
    divisors_at_least(m, lower).map(|d| d.into_vec()).map_err(to_py)
}

/// Prefix lengths proportional to the whole word.
#[pyfunction]
fn candidates(word: &Bound<'_, PyAny>) -> PyResult<Vec<usize>> {
    candidate_set(&word_of(word)?).map(|a| a.members()).map_err(to_py)
}

/// Runs every algorithm in `algorithms` and checks they agree.
#[pyfunction]
#[pyo3(signature = (word, algorithms = "all"))]
fn cross_check(word: &Bound<'_, PyAny>, algorithms: &str) -> PyResult<Vec<usize>> {
    let bytes = input_bytes(word)?;
    let algorithms = parse_algorithms(algorithms).map_err(to_py)?;
    abelian_core::report::periods_report(&bytes, &algorithms, false)
        .map(|r| r.periods.into_vec())
        .map_err(to_py)
}

fn encode<'py>(py: Python<'py>, w: &Word) -> PyResult<Bound<'py, PyBytes>> {
    let alphabet = Alphabet::standard(w.sigma()).map_err(to_py)?;
    let bytes = w.to_bytes(&alphabet).map_err(to_py)?;
    Ok(PyBytes::new(py, &bytes))
}

/// Random word with planted full Abelian period `period`, as bytes over
/// `a, b, c, ...` (or byte values `0..sigma` when `sigma > 26`).
#[pyfunction]
fn generate_word<'py>(
    py: Python<'py>,
    n: usize,
    sigma: usize,
    period: usize,
    seed: u64,
) -> PyResult<Bound<'py, PyBytes>> {
    let spec = GenSpec::new(n, sigma, period, seed).map_err(to_py)?;
    let w = generate(&spec).map_err(to_py)?;
    encode(py, &w)
}

#[pyfunction]
fn repeated_alphabet<'py>(py: Python<'py>, sigma: usize, n: usize) -> PyResult<Bound<'py, PyBytes>> {
    let w = repeated_alphabet_word(sigma, n).map_err(to_py)?;
    encode(py, &w)
}

#[pymodule]
fn abelian_periods(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAnalysis>()?;
    m.add_function(wrap_pyfunction!(analyze_word, m)?)?;
    m.add_function(wrap_pyfunction!(full_abelian_periods, m)?)?;
    m.add_function(wrap_pyfunction!(smallest_period, m)?)?;
    m.add_function(wrap_pyfunction!(is_period, m)?)?;
    m.add_function(wrap_pyfunction!(parikh, m)?)?;
    m.add_function(wrap_pyfunction!(divisors, m)?)?;
    m.add_function(wrap_pyfunction!(candidates, m)?)?;
    m.add_function(wrap_pyfunction!(cross_check, m)?)?;
    m.add_function(wrap_pyfunction!(generate_word, m)?)?;
    m.add_function(wrap_pyfunction!(repeated_alphabet, m)?)?;
    Ok(())
}
