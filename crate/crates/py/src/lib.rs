//! Python bindings for `rothe_lab`.
//!
//! Words are passed as `Word` objects (or plain strings over `a`/`b`), the
//! grading parameter is always the keyword `m`, and rational arguments accept
//! `int`, `str` (`"1/2"`) or `fractions.Fraction`.

use pyo3::create_exception;
use pyo3::exceptions::{PyTypeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyTuple};
use std::collections::BTreeMap;

use rothe_lab::bijection::{self, Decomposition};
use rothe_lab::identity::{self, GridOffsets};
use rothe_lab::rational::{self, Rational};
use rothe_lab::sweep::{ParamSpec, SweepConfig};
use rothe_lab::{qengine, word, EnumerationCap, Grading, IdentityId, ParamValue, ReportValue};

create_exception!(rothe_lab, RotheLabError, PyValueError);
create_exception!(
    rothe_lab,
    InvariantViolation,
    pyo3::exceptions::PyRuntimeError
);

fn map_err(e: rothe_lab::Error) -> PyErr {
    match e {
        rothe_lab::Error::InvariantViolation(_) => InvariantViolation::new_err(e.to_string()),
        _ => RotheLabError::new_err(e.to_string()),
    }
}

trait IntoPy<T> {
    fn py(self) -> PyResult<T>;
}

impl<T> IntoPy<T> for rothe_lab::Result<T> {
    fn py(self) -> PyResult<T> {
        self.map_err(map_err)
    }
}

fn rational_arg(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    if let Ok(n) = obj.extract::<i64>() {
        return Ok(rational::int(n));
    }
    let text = obj.str()?.to_string();
    rational::parse_rational(&text).py()
}

fn cap(max_length: Option<usize>) -> EnumerationCap {
    max_length.map_or_else(EnumerationCap::default, |max_length| EnumerationCap {
        max_length,
    })
}

/// A word over the letters `a` (weight 1) and `b` (weight m+1).
#[pyclass(
    name = "Word",
    module = "rothe_lab",
    frozen,
    eq,
    ord,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct PyWord(word::Word);

#[pymethods]
impl PyWord {
    #[new]
    #[pyo3(signature = (text=""))]
    fn new(text: &str) -> PyResult<Self> {
        Ok(PyWord(text.parse().py()?))
    }

    fn weight(&self, m: u64) -> u64 {
        self.0.weight(Grading::new(m))
    }

    fn b_count(&self) -> usize {
        self.0.b_count()
    }

    fn a_count(&self) -> usize {
        self.0.a_count()
    }

    fn inversions(&self) -> u64 {
        self.0.inversions()
    }

    fn prefix_weights(&self, m: u64) -> Vec<u64> {
        self.0.prefix_weights(Grading::new(m))
    }

    fn has_prefix_of_weight(&self, r: u64, m: u64) -> bool {
        self.0.has_prefix_of_weight(r, Grading::new(m))
    }

    fn reverse(&self) -> Self {
        PyWord(self.0.reverse())
    }

    fn __add__(&self, other: WordArg) -> Self {
        PyWord(self.0.concat(&other.0))
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    /// The empty word prints as `ε`, which the constructor also accepts.
    fn __str__(&self) -> String {
        self.0.to_human()
    }

    fn __repr__(&self) -> String {
        format!("Word('{}')", self.0.to_human())
    }
}

/// Accepts either a `Word` or a string.
struct WordArg(word::Word);

impl<'a, 'py> FromPyObject<'a, 'py> for WordArg {
    type Error = PyErr;

    fn extract(obj: Borrowed<'a, 'py, PyAny>) -> PyResult<Self> {
        if let Ok(w) = obj.cast::<PyWord>() {
            return Ok(WordArg(w.get().0.clone()));
        }
        if let Ok(s) = obj.extract::<String>() {
            return Ok(WordArg(s.parse().py()?));
        }
        Err(PyTypeError::new_err("expected a Word or a str"))
    }
}

fn words(ws: Vec<word::Word>) -> Vec<PyWord> {
    ws.into_iter().map(PyWord).collect()
}

/// Laurent polynomial in q with integer coefficients.
#[pyclass(
    name = "LaurentPolynomial",
    module = "rothe_lab",
    frozen,
    eq,
    hash,
    from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyLaurent(rothe_lab::LaurentPolynomial);

#[pymethods]
impl PyLaurent {
    /// Builds a polynomial from `{exponent: coefficient}`.
    #[new]
    #[pyo3(signature = (terms=BTreeMap::new()))]
    fn new(terms: BTreeMap<i64, i64>) -> Self {
        PyLaurent(rothe_lab::LaurentPolynomial::from_terms(terms))
    }

    fn coeffs<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let d = PyDict::new(py);
        for (e, c) in self.0.terms() {
            d.set_item(e, c.clone())?;
        }
        Ok(d)
    }

    fn coeff(&self, exp: i64) -> num_bigint::BigInt {
        self.0.coeff(exp)
    }

    fn min_exponent(&self) -> Option<i64> {
        self.0.min_exponent()
    }

    fn max_exponent(&self) -> Option<i64> {
        self.0.max_exponent()
    }

    fn eval_at_one(&self) -> num_bigint::BigInt {
        self.0.eval_at_one()
    }

    fn is_palindromic(&self) -> bool {
        self.0.is_palindromic()
    }

    fn shift(&self, e: i64) -> Self {
        PyLaurent(self.0.shift(e))
    }

    fn __add__(&self, other: &Self) -> Self {
        PyLaurent(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &Self) -> Self {
        PyLaurent(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &Self) -> Self {
        PyLaurent(&self.0 * &other.0)
    }

    fn __neg__(&self) -> Self {
        PyLaurent(-&self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("LaurentPolynomial('{}')", self.0)
    }
}

/// Outcome of checking one identity instance.
#[pyclass(name = "VerificationReport", module = "rothe_lab", frozen)]
struct PyReport(rothe_lab::VerificationReport);

fn side<'py>(py: Python<'py>, v: &ReportValue) -> PyResult<Bound<'py, PyAny>> {
    match v {
        ReportValue::Rational(r) => Ok(rational::format_rational(r).into_pyobject(py)?.into_any()),
        ReportValue::Laurent(p) => Ok(Bound::new(py, PyLaurent(p.clone()))?.into_any()),
    }
}

fn params_dict<'py>(
    py: Python<'py>,
    params: &[(String, ParamValue)],
) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    for (name, value) in params {
        match value {
            ParamValue::Int(n) => d.set_item(name, n)?,
            ParamValue::Rational(r) => d.set_item(name, rational::format_rational(r))?,
        }
    }
    Ok(d)
}

#[pymethods]
impl PyReport {
    #[getter]
    fn identity(&self) -> &'static str {
        self.0.identity.as_str()
    }

    #[getter]
    fn status(&self) -> &'static str {
        self.0.status.as_str()
    }

    #[getter]
    fn passed(&self) -> bool {
        self.0.passed()
    }

    /// Rationals come back as strings, q-identities as `LaurentPolynomial`.
    #[getter]
    fn lhs<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        side(py, &self.0.lhs)
    }

    #[getter]
    fn rhs<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        side(py, &self.0.rhs)
    }

    #[getter]
    fn params<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        params_dict(py, &self.0.params)
    }

    #[getter]
    fn counterexample<'py>(&self, py: Python<'py>) -> PyResult<Option<Bound<'py, PyDict>>> {
        self.0
            .counterexample
            .as_deref()
            .map(|c| params_dict(py, c))
            .transpose()
    }

    fn to_json(&self) -> String {
        self.0.to_json().to_string()
    }

    fn __bool__(&self) -> bool {
        self.0.passed()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("<VerificationReport {}>", self.0)
    }
}

fn report(r: rothe_lab::Result<rothe_lab::VerificationReport>) -> PyResult<PyReport> {
    r.map(PyReport).py()
}

/// Either branch of the factorization of a word.
#[pyclass(
    name = "Decomposition",
    module = "rothe_lab",
    frozen,
    eq,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
struct PyDecomposition(Decomposition);

#[pymethods]
impl PyDecomposition {
    #[staticmethod]
    fn branch_a(w: WordArg) -> Self {
        PyDecomposition(Decomposition::BranchA { w: w.0 })
    }

    #[staticmethod]
    fn branch_b(j: u64, k: u64, u_prime: WordArg, v: WordArg) -> Self {
        PyDecomposition(Decomposition::BranchB {
            j,
            k,
            u_prime: u_prime.0,
            v: v.0,
        })
    }

    /// `"A"` or `"B"`.
    #[getter]
    fn branch(&self) -> &'static str {
        match self.0 {
            Decomposition::BranchA { .. } => "A",
            Decomposition::BranchB { .. } => "B",
        }
    }

    #[getter]
    fn w(&self) -> Option<PyWord> {
        match &self.0 {
            Decomposition::BranchA { w } => Some(PyWord(w.clone())),
            _ => None,
        }
    }

    #[getter]
    fn j(&self) -> Option<u64> {
        match self.0 {
            Decomposition::BranchB { j, .. } => Some(j),
            _ => None,
        }
    }

    #[getter]
    fn k(&self) -> Option<u64> {
        match self.0 {
            Decomposition::BranchB { k, .. } => Some(k),
            _ => None,
        }
    }

    #[getter]
    fn u_prime(&self) -> Option<PyWord> {
        match &self.0 {
            Decomposition::BranchB { u_prime, .. } => Some(PyWord(u_prime.clone())),
            _ => None,
        }
    }

    #[getter]
    fn v(&self) -> Option<PyWord> {
        match &self.0 {
            Decomposition::BranchB { v, .. } => Some(PyWord(v.clone())),
            _ => None,
        }
    }

    fn to_json(&self) -> String {
        self.0.to_json().to_string()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("<Decomposition {}>", self.0)
    }
}

/// All words of weight `p` with `k` b's, in lexicographic order; with
/// `prefix_weight` only those having a prefix of that weight.
#[pyfunction]
#[pyo3(signature = (p, k, m, prefix_weight=None, max_length=None))]
fn enumerate_gamma(
    p: u64,
    k: u64,
    m: u64,
    prefix_weight: Option<u64>,
    max_length: Option<usize>,
) -> PyResult<Vec<PyWord>> {
    let g = Grading::new(m);
    let ws = match prefix_weight {
        Some(r) => word::enumerate_gamma_prefix_with_cap(p, k, r, g, cap(max_length)),
        None => word::enumerate_gamma_with_cap(p, k, g, cap(max_length)),
    };
    ws.map(words).py()
}

#[pyfunction]
fn binomial_count(n: i64, k: i64) -> u128 {
    word::binomial_count(n, k)
}

/// Lengths `(i, j)` of the shortest prefixes of `u` and `v` with equal weight,
/// and that weight.
#[pyfunction]
fn equal_weight_prefixes(u: WordArg, v: WordArg, m: u64) -> PyResult<(usize, usize, u64)> {
    let pm = bijection::equal_weight_prefixes(&u.0, &v.0, Grading::new(m)).py()?;
    Ok((pm.u_prefix_len, pm.v_prefix_len, pm.common_weight))
}

#[pyfunction]
fn theorem1_forward(w: WordArg, p: u64, q: u64, m: u64) -> PyResult<PyWord> {
    bijection::theorem1_forward(&w.0, p, q, Grading::new(m))
        .map(PyWord)
        .py()
}

#[pyfunction]
fn theorem1_inverse(w: WordArg, p: u64, q: u64, m: u64) -> PyResult<PyWord> {
    bijection::theorem1_inverse(&w.0, p, q, Grading::new(m))
        .map(PyWord)
        .py()
}

#[pyfunction]
#[pyo3(signature = (p, q, n, m, max_length=None))]
fn theorem1_domain(
    p: u64,
    q: u64,
    n: u64,
    m: u64,
    max_length: Option<usize>,
) -> PyResult<Vec<PyWord>> {
    bijection::theorem1_domain(p, q, n, Grading::new(m), cap(max_length))
        .map(words)
        .py()
}

#[pyfunction]
#[pyo3(signature = (p, q, n, m, max_length=None))]
fn theorem1_codomain(
    p: u64,
    q: u64,
    n: u64,
    m: u64,
    max_length: Option<usize>,
) -> PyResult<Vec<PyWord>> {
    bijection::theorem1_codomain(p, q, n, Grading::new(m), cap(max_length))
        .map(words)
        .py()
}

#[pyfunction]
fn decompose(w: WordArg, p: u64, q: u64, m: u64) -> PyResult<PyDecomposition> {
    bijection::decompose(&w.0, p, q, Grading::new(m))
        .map(PyDecomposition)
        .py()
}

#[pyfunction]
fn compose(d: &PyDecomposition, p: u64, q: u64, m: u64) -> PyResult<PyWord> {
    bijection::compose(&d.0, p, q, Grading::new(m))
        .map(PyWord)
        .py()
}

#[pyfunction]
fn check_rothe1(
    x: &Bound<'_, PyAny>,
    y: &Bound<'_, PyAny>,
    z: &Bound<'_, PyAny>,
    n: i64,
) -> PyResult<PyReport> {
    report(identity::check_rothe1(
        &rational_arg(x)?,
        &rational_arg(y)?,
        &rational_arg(z)?,
        n,
    ))
}

#[pyfunction]
fn check_rothe2(
    x: &Bound<'_, PyAny>,
    y: &Bound<'_, PyAny>,
    z: &Bound<'_, PyAny>,
    n: i64,
) -> PyResult<PyReport> {
    report(identity::check_rothe2(
        &rational_arg(x)?,
        &rational_arg(y)?,
        &rational_arg(z)?,
        n,
    ))
}

#[pyfunction]
fn check_gould(
    x: &Bound<'_, PyAny>,
    y: &Bound<'_, PyAny>,
    z: &Bound<'_, PyAny>,
    eps: &Bound<'_, PyAny>,
    n: i64,
) -> PyResult<PyReport> {
    report(identity::check_gould(
        &rational_arg(x)?,
        &rational_arg(y)?,
        &rational_arg(z)?,
        &rational_arg(eps)?,
        n,
    ))
}

#[pyfunction]
fn check_pqkm(p: u64, q: u64, m: u64, n: u64) -> PyReport {
    PyReport(identity::check_pqkm(p, q, m, n))
}

#[pyfunction]
fn check_kmx(p: u64, q: u64, m: u64, n: u64) -> PyResult<PyReport> {
    report(identity::check_kmx(p, q, m, n))
}

#[pyfunction]
fn check_kmpink(p: u64, q: u64, m: u64, n: u64, j: u64) -> PyResult<PyReport> {
    report(identity::check_kmpink(p, q, m, n, j))
}

#[pyfunction]
#[pyo3(signature = (p, k, m, max_length=None))]
fn check_cardinality(p: u64, k: u64, m: u64, max_length: Option<usize>) -> PyResult<PyReport> {
    report(identity::check_cardinality(p, k, m, cap(max_length)))
}

/// Certifies a polynomial identity of degree ≤ n by exact evaluation on an
/// (n+1)-point grid per variable starting at the given offsets.
#[pyfunction]
#[pyo3(signature = (identity, n, x0=None, y0=None, z0=None, eps0=None))]
fn grid_prove(
    identity: &str,
    n: i64,
    x0: Option<&Bound<'_, PyAny>>,
    y0: Option<&Bound<'_, PyAny>>,
    z0: Option<&Bound<'_, PyAny>>,
    eps0: Option<&Bound<'_, PyAny>>,
) -> PyResult<PyReport> {
    let id: IdentityId = identity.parse().py()?;
    let off = |o: Option<&Bound<'_, PyAny>>| o.map_or(Ok(rational::int(0)), rational_arg);
    let offsets = GridOffsets {
        x: off(x0)?,
        y: off(y0)?,
        z: off(z0)?,
        eps: off(eps0)?,
    };
    report(identity::grid_prove(id, n, &offsets))
}

#[pyfunction]
fn gaussian_binomial(a: i64, k: i64) -> PyResult<PyLaurent> {
    qengine::gaussian_binomial(a, k).map(PyLaurent).py()
}

/// Σ q^inv(w) over words of weight `p` with `k` b's.
#[pyfunction]
#[pyo3(signature = (p, k, m, max_length=None))]
fn inv_generating_function(
    p: u64,
    k: u64,
    m: u64,
    max_length: Option<usize>,
) -> PyResult<PyLaurent> {
    qengine::inv_generating_function(p, k, Grading::new(m), cap(max_length))
        .map(PyLaurent)
        .py()
}

#[pyfunction]
#[pyo3(signature = (p, k, m, max_length=None))]
fn check_invw(p: u64, k: u64, m: u64, max_length: Option<usize>) -> PyResult<PyReport> {
    report(qengine::check_invw(p, k, m, cap(max_length)))
}

#[pyfunction]
fn qchu_terms(x: u64, y: u64, m: u64, n: u64) -> PyResult<Vec<PyLaurent>> {
    qengine::qchu_terms(x, y, m, n)
        .map(|ts| ts.into_iter().map(PyLaurent).collect())
        .py()
}

#[pyfunction]
fn check_qchu(x: u64, y: u64, m: u64, n: u64) -> PyResult<PyReport> {
    report(qengine::check_qchu(x, y, m, n))
}

#[pyfunction]
fn check_qchu_m1(x: u64, y: u64, n: u64) -> PyResult<PyReport> {
    report(qengine::check_qchu_m1(x, y, n))
}

#[pyfunction]
#[pyo3(signature = (p, q, m, n, max_length=None))]
fn qweighted_bijection_check(
    p: u64,
    q: u64,
    m: u64,
    n: u64,
    max_length: Option<usize>,
) -> PyResult<PyReport> {
    report(qengine::qweighted_bijection_check(
        p,
        q,
        m,
        n,
        cap(max_length),
    ))
}

fn param_spec(obj: &Bound<'_, PyAny>) -> PyResult<ParamSpec> {
    if let Ok(t) = obj.cast::<PyTuple>() {
        let (lo, hi): (i64, i64) = t.extract()?;
        return Ok(ParamSpec::Range(lo, hi));
    }
    if let Ok(n) = obj.extract::<i64>() {
        return Ok(ParamSpec::single(n));
    }
    obj.str()?.to_string().parse().py()
}

/// Checks every tuple of a parameter sweep. Each value in `params` is an int,
/// an inclusive `(lo, hi)` range, or a string such as `"0..5"` or `"1/2"`.
/// Returns `(reports, skipped)`.
#[pyfunction]
#[pyo3(signature = (identity, params, fail_fast=false, cap=None, max_length=None))]
fn sweep(
    py: Python<'_>,
    identity: &str,
    params: &Bound<'_, PyDict>,
    fail_fast: bool,
    cap: Option<u128>,
    max_length: Option<usize>,
) -> PyResult<(Vec<PyReport>, usize)> {
    let mut config = SweepConfig::new(identity.parse().py()?);
    for (name, value) in params.iter() {
        config = config.param(&name.extract::<String>()?, param_spec(&value)?);
    }
    config.fail_fast = fail_fast;
    if let Some(c) = cap {
        config.work_cap = c;
    }
    if let Some(l) = max_length {
        config.enumeration_cap = EnumerationCap { max_length: l };
    }
    let outcome = py.detach(|| rothe_lab::sweep::run(&config)).py()?;
    Ok((
        outcome.reports.into_iter().map(PyReport).collect(),
        outcome.skipped,
    ))
}

#[pymodule]
#[pyo3(name = "rothe_lab")]
fn rothe_lab_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyWord>()?;
    m.add_class::<PyLaurent>()?;
    m.add_class::<PyReport>()?;
    m.add_class::<PyDecomposition>()?;
    m.add("RotheLabError", m.py().get_type::<RotheLabError>())?;
    m.add(
        "InvariantViolation",
        m.py().get_type::<InvariantViolation>(),
    )?;
    m.add(
        "IDENTITIES",
        IdentityId::ALL
            .iter()
            .map(|id| id.as_str())
            .collect::<Vec<_>>(),
    )?;
    m.add_function(wrap_pyfunction!(enumerate_gamma, m)?)?;
    m.add_function(wrap_pyfunction!(binomial_count, m)?)?;
    m.add_function(wrap_pyfunction!(equal_weight_prefixes, m)?)?;
    m.add_function(wrap_pyfunction!(theorem1_forward, m)?)?;
    m.add_function(wrap_pyfunction!(theorem1_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(theorem1_domain, m)?)?;
    m.add_function(wrap_pyfunction!(theorem1_codomain, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(compose, m)?)?;
    m.add_function(wrap_pyfunction!(check_rothe1, m)?)?;
    m.add_function(wrap_pyfunction!(check_rothe2, m)?)?;
    m.add_function(wrap_pyfunction!(check_gould, m)?)?;
    m.add_function(wrap_pyfunction!(check_pqkm, m)?)?;
    m.add_function(wrap_pyfunction!(check_kmx, m)?)?;
    m.add_function(wrap_pyfunction!(check_kmpink, m)?)?;
    m.add_function(wrap_pyfunction!(check_cardinality, m)?)?;
    m.add_function(wrap_pyfunction!(grid_prove, m)?)?;
    m.add_function(wrap_pyfunction!(gaussian_binomial, m)?)?;
    m.add_function(wrap_pyfunction!(inv_generating_function, m)?)?;
    m.add_function(wrap_pyfunction!(check_invw, m)?)?;
    m.add_function(wrap_pyfunction!(qchu_terms, m)?)?;
    m.add_function(wrap_pyfunction!(check_qchu, m)?)?;
    m.add_function(wrap_pyfunction!(check_qchu_m1, m)?)?;
    m.add_function(wrap_pyfunction!(qweighted_bijection_check, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    Ok(())
}
