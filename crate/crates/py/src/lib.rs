//! Python bindings for `diffalg`.
//!
//! Lattice points and words cross the boundary as tuples/lists of Python
//! ints (arbitrary precision both ways). Structured results that have a
//! stable JSON form (expansions, degree and verification reports) are
//! returned as JSON strings so Python callers can `json.loads` them.

use num_bigint::BigInt;
use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;

use diffalg::{DifferenceWord, ExponentTuple, LatticePoint};

fn err(e: diffalg::Error) -> PyErr {
    match e {
        diffalg::Error::UnknownIdentity(id) => PyKeyError::new_err(id),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn point(coords: Vec<BigInt>) -> PyResult<LatticePoint> {
    if coords.is_empty() {
        return Err(err(diffalg::Error::ZeroDimension));
    }
    Ok(LatticePoint::new(coords))
}

fn word(letters: Vec<Vec<BigInt>>) -> PyResult<DifferenceWord> {
    let letters = letters
        .into_iter()
        .map(point)
        .collect::<PyResult<Vec<_>>>()?;
    DifferenceWord::new(letters).map_err(err)
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializes")
}

/// An element of the group ring Z[Z^N], i.e. a finite integer combination of shifts.
#[pyclass(
    name = "GroupRingElement",
    module = "pydiffalg",
    eq,
    frozen,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
struct PyGroupRingElement(diffalg::GroupRingElement);

#[pymethods]
impl PyGroupRingElement {
    /// Build from `[(coords, coeff), ...]`; zero coefficients are dropped.
    #[new]
    fn new(dim: usize, terms: Vec<(Vec<BigInt>, BigInt)>) -> PyResult<Self> {
        let terms = terms.into_iter().map(|(c, k)| (LatticePoint::new(c), k));
        diffalg::GroupRingElement::from_terms(dim, terms)
            .map(Self)
            .map_err(err)
    }

    #[staticmethod]
    fn shift(a: Vec<BigInt>) -> PyResult<Self> {
        Ok(Self(diffalg::GroupRingElement::shift(&point(a)?)))
    }

    #[staticmethod]
    fn delta(a: Vec<BigInt>) -> PyResult<Self> {
        Ok(Self(diffalg::GroupRingElement::delta(&point(a)?)))
    }

    #[staticmethod]
    fn identity(dim: usize) -> Self {
        Self(diffalg::GroupRingElement::identity(dim))
    }

    #[staticmethod]
    fn word_operator(letters: Vec<Vec<BigInt>>) -> PyResult<Self> {
        Ok(Self(diffalg::GroupRingElement::word_operator(&word(
            letters,
        )?)))
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    /// Terms as `[(coords, coeff), ...]` in lexicographic order of coords.
    fn terms(&self) -> Vec<(Vec<BigInt>, BigInt)> {
        self.0
            .terms()
            .map(|(a, c)| (a.coords().to_vec(), c.clone()))
            .collect()
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.0.checked_add(&other.0).map(Self).map_err(err)
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        self.0.checked_sub(&other.0).map(Self).map_err(err)
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.0.checked_mul(&other.0).map(Self).map_err(err)
    }

    fn __neg__(&self) -> Self {
        Self(-&self.0)
    }

    fn __pow__(&self, k: u32, _modulo: Option<u32>) -> Self {
        Self(self.0.pow(k))
    }

    /// (T f)(x) for a polyfract f.
    fn apply(&self, f: &PyPolyfract, x: Vec<BigInt>) -> PyResult<BigInt> {
        let f = diffalg::IntegerFunction::Polyfract(f.0.clone());
        self.0.apply(&f, &point(x)?).map_err(err)
    }

    fn to_json(&self) -> String {
        to_json(&self.0)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("GroupRingElement({})", self.0)
    }
}

/// An integer-valued polynomial in the binomial basis.
#[pyclass(
    name = "Polyfract",
    module = "pydiffalg",
    eq,
    frozen,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
struct PyPolyfract(diffalg::Polyfract);

#[pymethods]
impl PyPolyfract {
    /// Build from `[(n, b), ...]` meaning sum of b * C(x1,n1)...C(xN,nN).
    #[new]
    fn new(dim: usize, terms: Vec<(Vec<u32>, BigInt)>) -> PyResult<Self> {
        diffalg::Polyfract::from_terms(
            dim,
            terms.into_iter().map(|(n, b)| (ExponentTuple::new(n), b)),
        )
        .map(Self)
        .map_err(err)
    }

    /// Parse an expression such as `"x1*x2 - C(x1,3)"` and convert it.
    #[staticmethod]
    fn parse(source: &str, dim: usize) -> PyResult<Self> {
        let e = diffalg::parse(source, dim).map_err(|e| err(e.into()))?;
        diffalg::lower(&e).map(Self).map_err(err)
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    /// Largest |n| in the support, or None for the zero polyfract.
    fn count(&self) -> Option<u64> {
        self.0.count().finite()
    }

    fn terms(&self) -> Vec<(Vec<u32>, BigInt)> {
        self.0
            .terms()
            .map(|(n, b)| (n.exps().to_vec(), b.clone()))
            .collect()
    }

    fn eval(&self, x: Vec<BigInt>) -> PyResult<BigInt> {
        self.0.eval(&point(x)?).map_err(err)
    }

    fn delta_standard(&self, m: Vec<u32>) -> PyResult<Self> {
        self.0
            .delta_standard(&ExponentTuple::new(m))
            .map(Self)
            .map_err(err)
    }

    fn delta_direction(&self, a: Vec<BigInt>) -> PyResult<Self> {
        self.0.delta_direction(&point(a)?).map(Self).map_err(err)
    }

    fn shift_by(&self, a: Vec<BigInt>) -> PyResult<Self> {
        self.0.shift_by(&point(a)?).map(Self).map_err(err)
    }

    fn apply_operator(&self, op: &PyGroupRingElement) -> PyResult<Self> {
        self.0.apply_operator(&op.0).map(Self).map_err(err)
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        if self.0.dim() != other.0.dim() {
            return Err(err(diffalg::Error::DimensionMismatch {
                expected: self.0.dim(),
                found: other.0.dim(),
            }));
        }
        Ok(Self(&self.0 + &other.0))
    }

    fn to_json(&self) -> String {
        to_json(&self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polyfract({})", self.0)
    }
}

#[pyfunction]
fn binom(x: BigInt, k: i64) -> BigInt {
    diffalg::binom(&x, k)
}

/// The coefficients alpha_i with D_a = sum_i alpha_i * D_{e_i}.
#[pyfunction]
fn expand_single(a: Vec<BigInt>) -> PyResult<Vec<PyGroupRingElement>> {
    Ok(diffalg::expand_single(&point(a)?)
        .into_iter()
        .map(PyGroupRingElement)
        .collect())
}

#[pyfunction]
fn expand_word_grouped(letters: Vec<Vec<BigInt>>) -> PyResult<String> {
    Ok(to_json(&diffalg::expand_word_grouped(&word(letters)?)))
}

#[pyfunction]
fn expand_word_sequence(letters: Vec<Vec<BigInt>>) -> PyResult<String> {
    Ok(to_json(&diffalg::expand_word_sequence(&word(letters)?)))
}

#[pyfunction]
fn cyclic_factor(r: Vec<BigInt>, s: Vec<BigInt>) -> PyResult<PyGroupRingElement> {
    diffalg::cyclic_factor(&r, &point(s)?)
        .map(PyGroupRingElement)
        .map_err(err)
}

#[pyfunction]
fn fdeg_standard(p: &PyPolyfract) -> Option<u64> {
    diffalg::fdeg_standard(&p.0).finite()
}

#[pyfunction]
#[pyo3(signature = (p, direction_box = 2, budget = 500))]
fn fdeg_general(p: &PyPolyfract, direction_box: u32, budget: u64) -> PyResult<String> {
    diffalg::fdeg_general(&p.0, direction_box, budget)
        .map(|r| to_json(&r))
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (identity_id, trials = 100, seed = 0))]
fn verify_identity(py: Python<'_>, identity_id: &str, trials: u64, seed: u64) -> PyResult<String> {
    let report = py
        .detach(|| diffalg::verify_identity(identity_id, trials, seed))
        .map_err(err)?;
    Ok(report.to_json())
}

#[pyfunction]
fn list_identities() -> Vec<(&'static str, &'static str)> {
    diffalg::identities::suites()
        .iter()
        .map(|s| (s.id, s.description))
        .collect()
}

#[pymodule]
fn pydiffalg(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGroupRingElement>()?;
    m.add_class::<PyPolyfract>()?;
    m.add_function(wrap_pyfunction!(binom, m)?)?;
    m.add_function(wrap_pyfunction!(expand_single, m)?)?;
    m.add_function(wrap_pyfunction!(expand_word_grouped, m)?)?;
    m.add_function(wrap_pyfunction!(expand_word_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(cyclic_factor, m)?)?;
    m.add_function(wrap_pyfunction!(fdeg_standard, m)?)?;
    m.add_function(wrap_pyfunction!(fdeg_general, m)?)?;
    m.add_function(wrap_pyfunction!(verify_identity, m)?)?;
    m.add_function(wrap_pyfunction!(list_identities, m)?)?;
    Ok(())
}
