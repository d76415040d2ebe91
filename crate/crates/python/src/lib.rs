//! Python bindings: representations, the analysis report, named examples,
//! the finite-field oracle, spin bookkeeping and the NS2 Gram matrix.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use cubicplane::algebra::{parse_poly, Field, VarSet};
use cubicplane::analysis::{self, AnalysisError, Flat, Value};
use cubicplane::detrep;
use cubicplane::examples::{self, Provenance};
use cubicplane::fourfold::brute_force_oracle;
use cubicplane::lattice;
use cubicplane::repfile::{parse_repfile, write_repfile};
use cubicplane::spin::{self, Config};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn field(text: &str) -> PyResult<Field> {
    text.parse().map_err(value_err)
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Int(n) => n.into_pyobject(py)?.into_any(),
        Value::BigInt(s) => py.import("builtins")?.getattr("int")?.call1((s.as_str(),))?,
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Text(s) => s.into_pyobject(py)?.into_any(),
        Value::List(items) => items.clone().into_pyobject(py)?.into_any(),
        Value::Unknown => py.None().into_bound(py),
    })
}

fn flat_dict<'py>(py: Python<'py>, flat: &Flat) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    for (k, v) in &flat.0 {
        d.set_item(k, to_py(py, v)?)?;
    }
    Ok(d)
}

/// A symmetric 4×4 matrix of forms whose determinant is a plane sextic.
#[pyclass(name = "SymDetRep", module = "cubicplane", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PySymDetRep(detrep::SymDetRep);

#[pymethods]
impl PySymDetRep {
    /// From four rows of four polynomial strings in x1, x2, x3.
    #[new]
    #[pyo3(signature = (rows, field = "rational"))]
    fn new(rows: Vec<Vec<String>>, field: &str) -> PyResult<Self> {
        let f = self::field(field)?;
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|e| parse_poly(e, VarSet::Plane, f).map_err(value_err)).collect())
            .collect::<PyResult<Vec<Vec<_>>>>()?;
        detrep::SymDetRep::validate(rows).map(Self).map_err(value_err)
    }

    /// Parses the text of a representation file.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        parse_repfile(text).map(Self).map_err(value_err)
    }

    #[getter]
    fn field(&self) -> String {
        self.0.field().to_string()
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.0.rows().iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect()
    }

    fn sextic(&self) -> String {
        self.0.sextic().to_string()
    }

    fn d_cubic(&self) -> String {
        self.0.d_cubic().to_string()
    }

    fn fourfold(&self) -> String {
        self.0.fourfold().to_string()
    }

    fn reduce(&self, field: &str) -> PyResult<Self> {
        self.0.reduce(self::field(field)?).map(Self).map_err(value_err)
    }

    #[pyo3(signature = (comment = None))]
    fn to_repfile(&self, comment: Option<&str>) -> String {
        write_repfile(&self.0, comment)
    }

    fn __repr__(&self) -> String {
        format!("SymDetRep(field={}, sextic={})", self.0.field(), self.0.sextic())
    }
}

/// The invariant bundle of a representation.
#[pyclass(name = "AnalysisReport", module = "cubicplane", frozen)]
struct PyReport(analysis::AnalysisReport);

#[pymethods]
impl PyReport {
    /// `True`, `False`, or `None` when smoothness cannot be decided.
    #[getter]
    fn smooth(&self) -> Option<bool> {
        self.0.smooth()
    }

    #[getter]
    fn bounds_ok(&self) -> bool {
        self.0.bounds_ok()
    }

    #[getter]
    fn diagnostics(&self) -> Vec<String> {
        self.0.diagnostics.clone()
    }

    /// Sorted as strings, like the report lists.
    #[getter]
    fn sing_x(&self) -> Vec<String> {
        let mut v: Vec<String> = self.0.sing_x.points().iter().map(|p| p.to_string()).collect();
        v.sort();
        v
    }

    fn as_dict<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        flat_dict(py, &self.0.flat())
    }

    fn text(&self) -> String {
        self.0.flat().to_text()
    }

    fn json(&self) -> String {
        self.0.flat().to_json()
    }
}

/// Raises `ValueError` when the input violates a standing hypothesis and
/// `RuntimeError` on an internal inconsistency.
#[pyfunction]
fn analyze(rep: &PySymDetRep) -> PyResult<PyReport> {
    analysis::analyze(&rep.0).map(PyReport).map_err(|e| match e {
        AnalysisError::Rejected(_) => value_err(e),
        AnalysisError::Internal(_) => PyRuntimeError::new_err(e.to_string()),
    })
}

#[pyclass(name = "Example", module = "cubicplane", frozen)]
struct PyExample(examples::NamedExample);

#[pymethods]
impl PyExample {
    #[getter]
    fn name(&self) -> &'static str {
        self.0.name
    }

    #[getter]
    fn rep(&self) -> PySymDetRep {
        PySymDetRep(self.0.rep.clone())
    }

    #[getter]
    fn params(&self) -> Vec<(String, String)> {
        self.0.params.clone()
    }

    #[getter]
    fn notes(&self) -> Vec<String> {
        self.0.notes.clone()
    }

    /// `(key, value, provenance)` triples, provenance `"stated"` or `"derived"`.
    #[getter]
    fn expected(&self) -> Vec<(String, String, String)> {
        self.0
            .expected
            .iter()
            .map(|e| {
                let prov = match e.provenance {
                    Provenance::Stated => "stated",
                    Provenance::Derived => "derived",
                };
                (e.key.to_string(), e.value.render(), prov.to_string())
            })
            .collect()
    }

    /// `(key, expected, got)` for every frozen value the report contradicts.
    fn mismatches(&self, report: &PyReport) -> Vec<(String, String, String)> {
        self.0.mismatches(&report.0.flat())
    }
}

#[pyfunction]
#[pyo3(signature = (name, params = None))]
fn build_example(name: &str, params: Option<Vec<(String, String)>>) -> PyResult<PyExample> {
    examples::build_example(name, &params.unwrap_or_default())
        .map(PyExample)
        .map_err(value_err)
}

#[pyfunction]
fn example_names() -> Vec<&'static str> {
    examples::NAMES.to_vec()
}

/// `Sing(X)` over `F_q` by exhaustive enumeration.
#[pyfunction]
fn oracle(py: Python<'_>, rep: &PySymDetRep, q: u64) -> PyResult<Vec<String>> {
    let pts = py.detach(|| brute_force_oracle(&rep.0, q)).map_err(value_err)?;
    Ok(pts.iter().map(|p| p.to_string()).collect())
}

#[pyfunction]
fn theta_counts(g: u32) -> PyResult<(u128, u128, u128)> {
    if g > 63 {
        return Err(PyValueError::new_err("genus above 63"));
    }
    Ok(spin::theta_counts(g))
}

/// Subsets of `k` nodes whose removal leaves an even dual graph.
#[pyfunction]
#[pyo3(signature = (config, k = 10, all = false))]
fn spin_subsets<'py>(py: Python<'py>, config: &str, k: usize, all: bool) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let cfg: Config = config.parse().map_err(value_err)?;
    let g = spin::build_dual_graph(&cfg.components, true).map_err(value_err)?;
    spin::spin_subsets(&g, k, all)
        .iter()
        .map(|s| {
            let d = PyDict::new(py);
            let removed: Vec<(usize, usize)> = s.removed.iter().map(|&i| (g.edges[i].a, g.edges[i].b)).collect();
            d.set_item("removed", removed)?;
            d.set_item("residual_even", s.residual_even)?;
            d.set_item("residual_genera", s.residual_genera.clone())?;
            d.set_item("odd_choices", s.odd_choices)?;
            Ok(d)
        })
        .collect()
}

#[pyfunction]
fn config_predicates<'py>(py: Python<'py>, config: &str) -> PyResult<Bound<'py, PyDict>> {
    let cfg: Config = config.parse().map_err(value_err)?;
    let p = spin::config_predicates(&cfg).map_err(value_err)?;
    let d = PyDict::new(py);
    d.set_item("satisfies_prop41i", p.satisfies_prop41i)?;
    d.set_item("in_remark41_list", p.in_remark41_list)?;
    d.set_item("admits_ten_node_witness", p.admits_ten_node_witness)?;
    d.set_item("all_components_rational", p.all_components_rational)?;
    Ok(d)
}

#[pyfunction]
fn ns2_gram<'py>(py: Python<'py>, m: usize) -> PyResult<Bound<'py, PyDict>> {
    let r = lattice::ns2_gram(m).map_err(value_err)?;
    let d = PyDict::new(py);
    d.set_item("m", r.m)?;
    d.set_item("class_count", r.class_count)?;
    d.set_item("gram", r.gram.clone())?;
    d.set_item("det", to_py(py, &Value::BigInt(r.det.to_string()))?)?;
    d.set_item("rank", r.rank)?;
    d.set_item("rank_lower_bound", r.rank_lower_bound)?;
    Ok(d)
}

#[pymodule(name = "cubicplane")]
fn cubicplane_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySymDetRep>()?;
    m.add_class::<PyReport>()?;
    m.add_class::<PyExample>()?;
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    m.add_function(wrap_pyfunction!(build_example, m)?)?;
    m.add_function(wrap_pyfunction!(example_names, m)?)?;
    m.add_function(wrap_pyfunction!(oracle, m)?)?;
    m.add_function(wrap_pyfunction!(theta_counts, m)?)?;
    m.add_function(wrap_pyfunction!(spin_subsets, m)?)?;
    m.add_function(wrap_pyfunction!(config_predicates, m)?)?;
    m.add_function(wrap_pyfunction!(ns2_gram, m)?)?;
    Ok(())
}
