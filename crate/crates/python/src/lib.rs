//! Python bindings for `csf_core`.
//!
//! Hessenberg functions can be passed as `HessenbergFunction` objects or
//! as plain sequences such as `[2, 3, 3]`. Laurent coefficients come back
//! as `{power: int}` dicts; powers are ints, or floats for half-integers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyTuple};

use csf_core::affine_weyl::{self, QConvention};
use csf_core::chromatic::{self, SuiteSelection};
use csf_core::combinatorics;
use csf_core::symfunc::{self, Basis, LaurentT, Partition};

fn err(e: csf_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn laurent_dict<'py>(py: Python<'py>, c: &LaurentT) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    for (half, v) in c.terms() {
        if half % 2 == 0 {
            d.set_item(half / 2, v.clone())?;
        } else {
            d.set_item(half as f64 / 2.0, v.clone())?;
        }
    }
    Ok(d)
}

fn partition(parts: Vec<usize>) -> PyResult<Partition> {
    Partition::new(parts).map_err(err)
}

#[pyclass(name = "HessenbergFunction", module = "csf", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyHessenberg(combinatorics::HessenbergFunction);

#[derive(FromPyObject)]
enum HessArg {
    Obj(PyHessenberg),
    Seq(Vec<usize>),
}

impl HessArg {
    fn resolve(self) -> PyResult<combinatorics::HessenbergFunction> {
        match self {
            HessArg::Obj(h) => Ok(h.0),
            HessArg::Seq(v) => combinatorics::HessenbergFunction::new(v).map_err(err),
        }
    }
}

#[pymethods]
impl PyHessenberg {
    #[new]
    fn new(values: Vec<usize>) -> PyResult<Self> {
        combinatorics::HessenbergFunction::new(values)
            .map(PyHessenberg)
            .map_err(err)
    }

    #[staticmethod]
    fn from_area_sequence(area: Vec<usize>) -> PyResult<Self> {
        combinatorics::HessenbergFunction::from_area_sequence(&area)
            .map(PyHessenberg)
            .map_err(err)
    }

    /// Hessenberg function whose root ideal is the given set of (i, j) pairs.
    #[staticmethod]
    #[pyo3(signature = (roots, n))]
    fn from_root_ideal(roots: Vec<(usize, usize)>, n: usize) -> PyResult<Self> {
        let ideal = combinatorics::RootIdeal::new(n, roots.into_iter().collect()).map_err(err)?;
        Ok(PyHessenberg(ideal.to_hessenberg()))
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn values(&self) -> Vec<usize> {
        self.0.values().to_vec()
    }

    fn area_sequence(&self) -> Vec<usize> {
        self.0.area_sequence()
    }

    fn root_ideal(&self) -> Vec<(usize, usize)> {
        self.0.to_root_ideal().roots().iter().copied().collect()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.unit_interval_graph().edges.into_iter().collect()
    }

    fn edge_count(&self) -> usize {
        self.0.edge_count()
    }

    fn is_connected(&self) -> bool {
        self.0.is_connected()
    }

    fn connected_components(&self) -> Vec<PyHessenberg> {
        self.0.connected_components().into_iter().map(PyHessenberg).collect()
    }

    fn __len__(&self) -> usize {
        self.0.n()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("HessenbergFunction({:?})", self.0.values())
    }
}

#[pyclass(name = "SymFunc", module = "csf", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PySymFunc(symfunc::SymFunc);

fn basis(name: &str) -> PyResult<Basis> {
    name.parse().map_err(err)
}

#[pymethods]
impl PySymFunc {
    /// Build from `{partition_tuple: {power: int}}` in the given basis.
    #[staticmethod]
    #[pyo3(signature = (basis_name, degree, terms))]
    fn from_terms(
        basis_name: &str,
        degree: usize,
        terms: BTreeMap<Vec<usize>, BTreeMap<i64, BigInt>>,
    ) -> PyResult<Self> {
        let mut f = symfunc::SymFunc::zero(basis(basis_name)?, degree);
        for (lam, coeffs) in terms {
            let c = LaurentT::from_half_pairs(coeffs.into_iter().map(|(k, v)| (2 * k, v)));
            f.add_term(partition(lam)?, &c).map_err(err)?;
        }
        Ok(PySymFunc(f))
    }

    #[getter]
    fn basis(&self) -> &'static str {
        self.0.basis().symbol()
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    fn terms<'py>(&self, py: Python<'py>) -> PyResult<Vec<(Vec<usize>, Bound<'py, PyDict>)>> {
        self.0
            .terms()
            .map(|(lam, c)| Ok((lam.parts().to_vec(), laurent_dict(py, c)?)))
            .collect()
    }

    fn coeff<'py>(&self, py: Python<'py>, lam: Vec<usize>) -> PyResult<Bound<'py, PyDict>> {
        laurent_dict(py, &self.0.coeff(&partition(lam)?))
    }

    fn convert(&self, target: &str) -> PyResult<Self> {
        Ok(PySymFunc(self.0.convert(basis(target)?)))
    }

    fn multiply(&self, other: &PySymFunc) -> Self {
        PySymFunc(self.0.multiply(&other.0))
    }

    fn at_t_one(&self) -> Self {
        PySymFunc(self.0.at_t_one())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.0.to_json()).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        let j = serde_json::from_str(s).map_err(|e| PyValueError::new_err(e.to_string()))?;
        symfunc::SymFunc::from_json(&j).map(PySymFunc).map_err(err)
    }

    /// Equality as symmetric functions, regardless of basis.
    fn __eq__(&self, other: &PySymFunc) -> bool {
        self.0.same_function(&other.0)
    }

    fn __mul__(&self, other: &PySymFunc) -> Self {
        self.multiply(other)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("SymFunc({})", self.0)
    }
}

#[pyclass(name = "FormulaEvaluation", module = "csf", frozen)]
struct PyFormula(affine_weyl::FormulaEvaluation);

#[pymethods]
impl PyFormula {
    #[getter]
    fn profile(&self) -> Vec<usize> {
        self.0.profile.clone()
    }

    #[getter]
    fn term_count(&self) -> BigInt {
        self.0.term_count.clone()
    }

    /// Projection as `{exponent_tuple: int}` over all weights.
    fn projected<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let d = PyDict::new(py);
        for (exps, c) in &self.0.projected {
            d.set_item(PyTuple::new(py, exps)?, c.clone())?;
        }
        Ok(d)
    }

    fn projected_symfunc(&self) -> PyResult<PySymFunc> {
        self.0.projected_symfunc().map(PySymFunc).map_err(err)
    }

    fn decorated_lines(&self) -> Vec<String> {
        self.0.decorated.dump_lines()
    }

    /// m-expansion graded by q. `convention` is "negative" (q = e^-delta)
    /// or "positive" (q = e^delta).
    #[pyo3(signature = (convention = "negative"))]
    fn q_graded(&self, convention: &str) -> PyResult<(PySymFunc, bool)> {
        let conv = match convention {
            "negative" => QConvention::NegativeDelta,
            "positive" => QConvention::PositiveDelta,
            other => return Err(PyValueError::new_err(format!("unknown convention {other:?}"))),
        };
        let (f, sym) = self.0.q_graded(conv);
        Ok((PySymFunc(f), sym))
    }
}

#[pyclass(name = "VerifyReport", module = "csf", frozen)]
struct PyVerifyReport(chromatic::VerifyReport);

#[pymethods]
impl PyVerifyReport {
    #[getter]
    fn n(&self) -> usize {
        self.0.n
    }

    #[getter]
    fn functions(&self) -> usize {
        self.0.functions
    }

    fn is_success(&self) -> bool {
        self.0.is_success()
    }

    fn failure_count(&self) -> usize {
        self.0.failures().count()
    }

    fn finding_count(&self) -> usize {
        self.0.findings().count()
    }

    /// One `(suite, total, pass, fail, finding)` row per suite.
    fn summary(&self) -> Vec<(String, usize, usize, usize, usize)> {
        self.0
            .summary()
            .into_iter()
            .map(|r| (r.suite.name().to_string(), r.total, r.pass, r.fail, r.finding))
            .collect()
    }

    fn to_json(&self) -> String {
        self.0.to_json_pretty()
    }
}

#[pyfunction]
fn enumerate_hessenberg(n: usize) -> Vec<PyHessenberg> {
    combinatorics::enumerate_hessenberg(n).map(PyHessenberg).collect()
}

#[pyfunction]
fn catalan(n: usize) -> u64 {
    combinatorics::catalan(n)
}

/// `(h0, h, h1, i, branch)` for every modular triple of size n.
#[pyfunction]
fn find_modular_triples(n: usize) -> Vec<(PyHessenberg, PyHessenberg, PyHessenberg, usize, u8)> {
    combinatorics::find_modular_triples(n)
        .into_iter()
        .map(|t| {
            let (h0, h, h1) = t.hessenberg_triple();
            (PyHessenberg(h0), PyHessenberg(h), PyHessenberg(h1), t.i, t.branch())
        })
        .collect()
}

#[pyfunction]
fn partitions(n: usize) -> Vec<Vec<usize>> {
    symfunc::partitions(n).into_iter().map(|p| p.parts().to_vec()).collect()
}

#[pyfunction]
fn kostka(shape: Vec<usize>, content: Vec<usize>) -> PyResult<u64> {
    symfunc::kostka(&partition(shape)?, &partition(content)?).map_err(err)
}

#[pyfunction]
fn lr_coefficient(lam: Vec<usize>, mu: Vec<usize>, nu: Vec<usize>) -> PyResult<u64> {
    symfunc::lr_coefficient(&partition(lam)?, &partition(mu)?, &partition(nu)?).map_err(err)
}

#[pyfunction]
fn chromatic_qsym(h: HessArg) -> PyResult<PySymFunc> {
    Ok(PySymFunc(chromatic::chromatic_qsym(&h.resolve()?)))
}

/// `{partition_tuple: {power: int}}` with the shift by |Psi| applied.
#[pyfunction]
fn graded_multiplicities<'py>(py: Python<'py>, h: HessArg) -> PyResult<Bound<'py, PyDict>> {
    let g = chromatic::graded_multiplicities(&h.resolve()?);
    let d = PyDict::new(py);
    for (lam, c) in &g.entries {
        d.set_item(PyTuple::new(py, lam.parts())?, laurent_dict(py, c)?)?;
    }
    Ok(d)
}

#[pyfunction]
fn evaluate_formula(h: HessArg) -> PyResult<PyFormula> {
    Ok(PyFormula(affine_weyl::evaluate_formula(&h.resolve()?)))
}

#[pyfunction]
fn euler_char(h: HessArg) -> PyResult<u64> {
    Ok(chromatic::euler_char(&h.resolve()?))
}

#[pyfunction]
fn coloring_count(h: HessArg, k: usize) -> PyResult<u64> {
    Ok(chromatic::coloring_count(&h.resolve()?, k))
}

#[pyfunction]
fn count_fixed_points(h: HessArg, gamma: Vec<i64>) -> PyResult<u64> {
    affine_weyl::count_fixed_points(&h.resolve()?, &gamma).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, suite = "all"))]
fn verify_laws(py: Python<'_>, n: usize, suite: &str) -> PyResult<PyVerifyReport> {
    let sel: SuiteSelection = suite.parse().map_err(err)?;
    let report = py.detach(|| chromatic::verify_laws(n, &sel));
    Ok(PyVerifyReport(report))
}

#[pymodule]
fn csf(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyHessenberg>()?;
    m.add_class::<PySymFunc>()?;
    m.add_class::<PyFormula>()?;
    m.add_class::<PyVerifyReport>()?;
    m.add_function(wrap_pyfunction!(enumerate_hessenberg, m)?)?;
    m.add_function(wrap_pyfunction!(catalan, m)?)?;
    m.add_function(wrap_pyfunction!(find_modular_triples, m)?)?;
    m.add_function(wrap_pyfunction!(partitions, m)?)?;
    m.add_function(wrap_pyfunction!(kostka, m)?)?;
    m.add_function(wrap_pyfunction!(lr_coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(chromatic_qsym, m)?)?;
    m.add_function(wrap_pyfunction!(graded_multiplicities, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate_formula, m)?)?;
    m.add_function(wrap_pyfunction!(euler_char, m)?)?;
    m.add_function(wrap_pyfunction!(coloring_count, m)?)?;
    m.add_function(wrap_pyfunction!(count_fixed_points, m)?)?;
    m.add_function(wrap_pyfunction!(verify_laws, m)?)?;
    Ok(())
}
