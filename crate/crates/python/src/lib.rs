use std::sync::Arc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use ::curcoh::algebra::{catalog_algebra, catalog_module, current_lie_algebra, AlgebraSpec, ModuleActionSpec};
use ::curcoh::bulk::run_seed_matrix;
use ::curcoh::io::{algebra_to_json, module_to_json, parse_document, Document};
use ::curcoh::prolong::{cartan_prolong, gl_pair, grading_from_root, ker_t_root_relations, loop_structure_functions, sym_spencer_sh12, RootDatum};
use ::curcoh::verify::{verify as run_verify, Instance, TheoremId, VerificationReport};

fn err(e: ::curcoh::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Algebra", frozen)]
struct PyAlgebra {
    inner: Arc<AlgebraSpec>,
}

#[pymethods]
impl PyAlgebra {
    /// Catalog algebra such as `sl2`, `heis3`, `ab(2)`, `tp(3)`, `circ(2)`, `K`.
    #[staticmethod]
    fn catalog(name: &str) -> PyResult<Self> {
        Ok(PyAlgebra { inner: Arc::new(catalog_algebra(name).map_err(err)?) })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        match parse_document(text).map_err(err)? {
            Document::Algebra(a) => Ok(PyAlgebra { inner: Arc::new(a) }),
            Document::Module(_) => Err(PyValueError::new_err("expected an algebra document")),
        }
    }

    fn to_json(&self) -> String {
        algebra_to_json(&self.inner)
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name.clone()
    }

    #[getter]
    fn kind(&self) -> String {
        self.inner.kind.to_string()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn basis(&self) -> Vec<String> {
        self.inner.basis_labels.clone()
    }

    /// Violated identities, empty when the structure constants are valid.
    fn validate(&self) -> Vec<String> {
        self.inner.validate().iter().map(|v| v.to_string()).collect()
    }

    /// Structure constant `c_ij^k` as a string `"p/q"`.
    fn coeff(&self, i: usize, j: usize, k: usize) -> PyResult<String> {
        let n = self.inner.dim();
        if i >= n || j >= n || k >= n {
            return Err(PyValueError::new_err("index out of range"));
        }
        Ok(::curcoh::linalg::format_rational(&self.inner.coeff(i, j, k)))
    }

    /// The current algebra `self ⊗ assoc`.
    fn current(&self, assoc: &PyAlgebra) -> PyResult<PyAlgebra> {
        Ok(PyAlgebra { inner: Arc::new(current_lie_algebra(&self.inner, &assoc.inner).map_err(err)?) })
    }

    fn derived_dim(&self) -> usize {
        self.inner.derived().dim()
    }

    fn __repr__(&self) -> String {
        format!("Algebra({}, dim={})", self.inner.name, self.inner.dim())
    }
}

#[pyclass(name = "Module", frozen)]
struct PyModuleSpec {
    inner: ModuleActionSpec,
}

#[pymethods]
impl PyModuleSpec {
    /// `adjoint`, `trivial(n)` or `regular` over `algebra`.
    #[staticmethod]
    fn catalog(name: &str, algebra: &PyAlgebra) -> PyResult<Self> {
        Ok(PyModuleSpec { inner: catalog_module(name, &algebra.inner).map_err(err)? })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        match parse_document(text).map_err(err)? {
            Document::Module(m) => Ok(PyModuleSpec { inner: m }),
            Document::Algebra(_) => Err(PyValueError::new_err("expected a module document")),
        }
    }

    fn to_json(&self) -> String {
        module_to_json(&self.inner)
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name.clone()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn algebra(&self) -> PyAlgebra {
        PyAlgebra { inner: self.inner.algebra.clone() }
    }

    fn validate(&self) -> Vec<String> {
        self.inner.validate().iter().map(|v| v.to_string()).collect()
    }

    fn invariants_dim(&self) -> usize {
        self.inner.invariants().dim()
    }

    /// `dim H^n(g, M)` for `n <= 3`.
    fn cohomology_dim(&self, degree: usize) -> PyResult<usize> {
        Ok(::curcoh::cohomology::cohomology(degree, &self.inner.algebra, &self.inner).map_err(err)?.dim)
    }

    fn __repr__(&self) -> String {
        format!("Module({} over {}, dim={})", self.inner.name, self.inner.algebra.name, self.inner.dim())
    }
}

#[pyclass(name = "Report", frozen)]
struct PyReport {
    inner: VerificationReport,
}

#[pymethods]
impl PyReport {
    #[getter]
    fn theorem(&self) -> String {
        self.inner.theorem_id.to_string()
    }

    #[getter]
    fn direct_dim(&self) -> usize {
        self.inner.direct_dim
    }

    #[getter]
    fn formula_dim(&self) -> usize {
        self.inner.formula_dim
    }

    #[getter]
    fn matched(&self) -> bool {
        self.inner.matched
    }

    /// `(label, left, right, dim)` per summand.
    #[getter]
    fn summands(&self) -> Vec<(String, usize, usize, usize)> {
        self.inner.summand_dims.iter().map(|s| (s.label.clone(), s.left, s.right, s.dim)).collect()
    }

    /// `(name, holds, required)` per side check.
    #[getter]
    fn checks(&self) -> Vec<(String, bool, bool)> {
        self.inner.checks.iter().map(|c| (c.name.clone(), c.holds, c.required)).collect()
    }

    fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.inner).expect("serializable")
    }

    fn __repr__(&self) -> String {
        format!(
            "Report({}, direct={}, formula={}, match={})",
            self.inner.theorem_id, self.inner.direct_dim, self.inner.formula_dim, self.inner.matched
        )
    }
}

/// Runs one verifier on catalog names, e.g. `verify("T2_1", "sl2", "adjoint", "tp2")`.
#[pyfunction]
#[pyo3(signature = (theorem, lie, module, assoc, coeff = "regular"))]
fn verify(py: Python<'_>, theorem: &str, lie: &str, module: &str, assoc: &str, coeff: &str) -> PyResult<PyReport> {
    let t: TheoremId = theorem.parse().map_err(err)?;
    let inst = Instance::catalog(lie, module, assoc, coeff).map_err(err)?;
    let inner = py.detach(|| run_verify(t, &inst)).map_err(err)?;
    Ok(PyReport { inner })
}

/// The reference matrix as a JSON document.
#[pyfunction]
fn seed_matrix(py: Python<'_>) -> PyResult<String> {
    let r = py.detach(run_seed_matrix).map_err(err)?;
    Ok(serde_json::to_string_pretty(&r).expect("serializable"))
}

/// Component dimensions `[dim g_-1, dim g_0, ...]` of the prolongation of `(K^n, gl(n))`.
#[pyfunction]
fn prolong_gl(n: usize, max_degree: usize) -> PyResult<Vec<usize>> {
    Ok(cartan_prolong(&gl_pair(n).map_err(err)?, max_degree).map_err(err)?.dims)
}

/// Component dimensions of the grading of `sl(rank+1)` by simple root `beta` (from 1).
#[pyfunction]
fn grading_dims(rank: usize, beta: usize) -> PyResult<Vec<usize>> {
    let rd = RootDatum::a(rank).map_err(err)?;
    Ok(grading_from_root(&rd, beta.wrapping_sub(1)).map_err(err)?.graded.dims)
}

/// `(dim SH^{1,2}, dim Ker T, dim of the root-relation solution space)` for a grading.
#[pyfunction]
fn spencer(rank: usize, beta: usize) -> PyResult<(usize, usize, usize)> {
    let rd = RootDatum::a(rank).map_err(err)?;
    let g = grading_from_root(&rd, beta.wrapping_sub(1)).map_err(err)?;
    let s = sym_spencer_sh12(&g.graded).map_err(err)?;
    let rel = ker_t_root_relations(&rd, beta.wrapping_sub(1)).map_err(err)?;
    Ok((s.dim, s.ker_t.dim(), rel.dim()))
}

/// Loop structure-function report for a grading, as JSON.
#[pyfunction]
fn loop_structure(rank: usize, beta: usize, assoc: &str) -> PyResult<String> {
    let rd = RootDatum::a(rank).map_err(err)?;
    let g = grading_from_root(&rd, beta.wrapping_sub(1)).map_err(err)?;
    let a = catalog_algebra(assoc).map_err(err)?;
    let r = loop_structure_functions(&g.graded, &a).map_err(err)?;
    Ok(serde_json::to_string_pretty(&r).expect("serializable"))
}

/// `(dim ∧³(L⊗A), [three Cauchy summands])`.
#[pyfunction]
fn cauchy3(dl: u64, da: u64) -> (u64, [u64; 3]) {
    ::curcoh::multilinear::young_cauchy3_dims(dl, da)
}

#[pymodule]
fn curcoh(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAlgebra>()?;
    m.add_class::<PyModuleSpec>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(seed_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(prolong_gl, m)?)?;
    m.add_function(wrap_pyfunction!(grading_dims, m)?)?;
    m.add_function(wrap_pyfunction!(spencer, m)?)?;
    m.add_function(wrap_pyfunction!(loop_structure, m)?)?;
    m.add_function(wrap_pyfunction!(cauchy3, m)?)?;
    Ok(())
}
