//! Python bindings: `import cliffdet`.

use clifford::json::{multivector_from_json, multivector_to_json};
use clifford::verify::{self, Suite};
use clifford::{BladeIndex, Complex, ComplexMatrix, Error, Multivector, Profile, Signature};
use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::NotInvertible { .. } => PyZeroDivisionError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn signature(p: usize, q: usize) -> PyResult<Signature> {
    Signature::new(p, q).map_err(to_py)
}

fn rows(m: &ComplexMatrix) -> Vec<Vec<Complex>> {
    (0..m.dim())
        .map(|i| (0..m.dim()).map(|j| m.get(i, j)).collect())
        .collect()
}

/// Multivector of a complex Clifford algebra Cl(p,q).
#[pyclass(name = "Multivector", module = "cliffdet", frozen)]
struct PyMultivector {
    inner: Multivector,
}

impl PyMultivector {
    fn wrap(inner: Multivector) -> Self {
        Self { inner }
    }

    fn same_sig(&self, other: &Self) -> PyResult<()> {
        if self.inner.sig() != other.inner.sig() {
            return Err(PyValueError::new_err(format!(
                "signature mismatch: {} vs {}",
                self.inner.sig(),
                other.inner.sig()
            )));
        }
        Ok(())
    }
}

#[pymethods]
impl PyMultivector {
    /// Parses an expression such as ``"(1+2i)*e13 - 4"`` over Cl(p,q).
    #[new]
    fn new(expr: &str, p: usize, q: usize) -> PyResult<Self> {
        let sig = signature(p, q)?;
        clifford::parse_and_evaluate(expr, sig)
            .map(Self::wrap)
            .map_err(to_py)
    }

    #[staticmethod]
    #[pyo3(signature = (p, q, seed, profile = "full"))]
    fn random(p: usize, q: usize, seed: u64, profile: &str) -> PyResult<Self> {
        let profile: Profile = profile.parse().map_err(PyValueError::new_err)?;
        Ok(Self::wrap(clifford::random_multivector(
            signature(p, q)?,
            seed,
            profile,
        )))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        multivector_from_json(text).map(Self::wrap).map_err(to_py)
    }

    fn to_json(&self) -> String {
        multivector_to_json(&self.inner)
    }

    #[getter]
    fn p(&self) -> usize {
        self.inner.sig().p()
    }

    #[getter]
    fn q(&self) -> usize {
        self.inner.sig().q()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.sig().n()
    }

    /// Nonzero coefficients keyed by comma-separated ascending indices.
    fn coeffs(&self) -> Vec<(String, Complex)> {
        self.inner.terms().map(|(b, c)| (b.key(), c)).collect()
    }

    fn coeff(&self, mask: u32) -> PyResult<Complex> {
        let blade = BladeIndex(mask);
        if !blade.fits(self.inner.sig()) {
            return Err(PyValueError::new_err(format!("mask {mask} out of range")));
        }
        Ok(self.inner.coeff(blade))
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "Multivector({:?}, {}, {})",
            self.inner.to_string(),
            self.p(),
            self.q()
        )
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.same_sig(other)?;
        Ok(Self::wrap(&self.inner + &other.inner))
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        self.same_sig(other)?;
        Ok(Self::wrap(&self.inner - &other.inner))
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.same_sig(other)?;
        Ok(Self::wrap(&self.inner * &other.inner))
    }

    fn __neg__(&self) -> Self {
        Self::wrap(-&self.inner)
    }

    fn scale(&self, alpha: Complex) -> Self {
        Self::wrap(self.inner.scale(alpha))
    }

    #[pyo3(signature = (other, tol = 1e-9))]
    fn approx_eq(&self, other: &Self, tol: f64) -> PyResult<bool> {
        self.inner.approx_eq(&other.inner, tol).map_err(to_py)
    }

    fn grade_project(&self, k: usize) -> PyResult<Self> {
        self.inner.grade_project(k).map(Self::wrap).map_err(to_py)
    }

    fn even_part(&self) -> Self {
        Self::wrap(self.inner.even_part())
    }

    fn odd_part(&self) -> Self {
        Self::wrap(self.inner.odd_part())
    }

    fn reverse(&self) -> Self {
        Self::wrap(clifford::reverse(&self.inner))
    }

    fn grade_involution(&self) -> Self {
        Self::wrap(clifford::grade_involution(&self.inner))
    }

    fn clifford_conjugation(&self) -> Self {
        Self::wrap(clifford::clifford_conjugation(&self.inner))
    }

    fn complex_conjugate(&self) -> Self {
        Self::wrap(clifford::complex_conjugate(&self.inner))
    }

    fn pseudo_hermitian(&self) -> Self {
        Self::wrap(clifford::pseudo_hermitian(&self.inner))
    }

    fn hermitian(&self) -> Self {
        Self::wrap(clifford::hermitian(&self.inner))
    }

    fn grade_flip(&self, grades: Vec<usize>) -> Self {
        Self::wrap(clifford::grade_flip(&self.inner, &grades))
    }

    fn nabla(&self) -> PyResult<Self> {
        clifford::nabla(&self.inner).map(Self::wrap).map_err(to_py)
    }

    fn triangle(&self) -> PyResult<Self> {
        clifford::triangle(&self.inner)
            .map(Self::wrap)
            .map_err(to_py)
    }

    fn plus_conj(&self) -> PyResult<Self> {
        clifford::plus_conj(&self.inner)
            .map(Self::wrap)
            .map_err(to_py)
    }

    fn trace(&self) -> Complex {
        clifford::trace(&self.inner)
    }

    fn trace_via_matrix(&self) -> Complex {
        clifford::trace_via_matrix(&self.inner)
    }

    fn det(&self) -> PyResult<Complex> {
        clifford::det(&self.inner).map_err(to_py)
    }

    fn det_via_matrix(&self) -> Complex {
        clifford::det_via_matrix(&self.inner)
    }

    fn det_parity_n4(&self) -> PyResult<Complex> {
        clifford::det_parity_n4(&self.inner).map_err(to_py)
    }

    /// Raises ``ZeroDivisionError`` when ``|Det U| <= tol``.
    #[pyo3(signature = (tol = None))]
    fn inverse(&self, tol: Option<f64>) -> PyResult<Self> {
        let tol = tol.unwrap_or_else(|| clifford::default_invertibility_tol(&self.inner));
        clifford::inverse(&self.inner, tol)
            .map(Self::wrap)
            .map_err(to_py)
    }

    #[pyo3(signature = (tol = None))]
    fn is_invertible(&self, tol: Option<f64>) -> bool {
        let tol = tol.unwrap_or_else(|| clifford::default_invertibility_tol(&self.inner));
        clifford::is_invertible(&self.inner, tol)
    }

    /// Image under the recurrent representation, as nested lists.
    fn matrix(&self) -> Vec<Vec<Complex>> {
        rows(&clifford::represent(&self.inner))
    }
}

/// ``(mask, sign)`` with ``e^A e^B = sign * e^{A xor B}``.
#[pyfunction]
fn blade_mul(a: u32, b: u32, p: usize, q: usize) -> PyResult<(u32, i8)> {
    let sig = signature(p, q)?;
    if !BladeIndex(a).fits(sig) || !BladeIndex(b).fits(sig) {
        return Err(PyValueError::new_err("blade mask out of range"));
    }
    let (m, s) = clifford::blade_mul(BladeIndex(a), BladeIndex(b), sig);
    Ok((m.mask(), s))
}

/// Generator matrices of the recurrent representation.
#[pyfunction]
fn generators(p: usize, q: usize) -> PyResult<Vec<Vec<Vec<Complex>>>> {
    let rep = clifford::build_generators(signature(p, q)?);
    Ok(rep.generators().iter().map(rows).collect())
}

/// Generators ``±T^{-1} γ^a T`` for a random ``T``.
#[pyfunction]
#[pyo3(signature = (p, q, seed, negate = false))]
fn alternate_generators(
    p: usize,
    q: usize,
    seed: u64,
    negate: bool,
) -> PyResult<Vec<Vec<Vec<Complex>>>> {
    let rep = clifford::alternate_representation(signature(p, q)?, seed, negate).map_err(to_py)?;
    Ok(rep.generators().iter().map(rows).collect())
}

/// Runs the verification suites; returns the report lines and the failure
/// count.
#[pyfunction]
#[pyo3(signature = (trials = 100, seed = 0, only = None, p = None, q = None))]
fn run_verify(
    py: Python<'_>,
    trials: usize,
    seed: u64,
    only: Option<&str>,
    p: Option<usize>,
    q: Option<usize>,
) -> PyResult<(Vec<String>, usize)> {
    let suites = match only {
        Some(name) => vec![Suite::from_name(name)
            .ok_or_else(|| PyValueError::new_err(format!("unknown suite `{name}`")))?],
        None => Suite::ALL.to_vec(),
    };
    let sigs = match (p, q) {
        (Some(p), Some(q)) => vec![signature(p, q)?],
        (None, None) => Signature::all_up_to(clifford::detinv::MAX_CLOSED_FORM_DIM),
        _ => return Err(PyValueError::new_err("give both p and q or neither")),
    };
    let reports = py.detach(|| verify::run_all(&sigs, &suites, trials, seed));
    let failures = reports.iter().map(|r| r.failures.len()).sum();
    Ok((reports.iter().map(ToString::to_string).collect(), failures))
}

#[pymodule]
fn cliffdet(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMultivector>()?;
    m.add_function(wrap_pyfunction!(blade_mul, m)?)?;
    m.add_function(wrap_pyfunction!(generators, m)?)?;
    m.add_function(wrap_pyfunction!(alternate_generators, m)?)?;
    m.add_function(wrap_pyfunction!(run_verify, m)?)?;
    Ok(())
}
