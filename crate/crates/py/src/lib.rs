//! Python bindings: the `Model` type plus checking, enumeration and search.
//! Reports come back as plain dicts keyed by statement id.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use rrs_core::directoid::build_quasi_directoids;
use rrs_core::props::{report_for, SuiteOutput};
use rrs_core::quotient::{is_pocrim, quotient as theta_quotient, theta_equational};
use rrs_core::relation::{self, DEFAULT_POLARITY_CAP};
use rrs_core::search::{self, ArrowChoice, ModelClass, SearchSpec};
use rrs_core::{fixtures, negation, BinRel, PropertyReport, QuasiDirectoid, SubsetMask, ZeroedModel};

fn err(e: rrs_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_dict<'py, T: serde::Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyDict>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))?.cast_into::<PyDict>().map_err(Into::into)
}

fn report<'py>(py: Python<'py>, r: &PropertyReport) -> PyResult<Bound<'py, PyDict>> {
    to_dict(py, r)
}

fn parse_class(name: &str) -> PyResult<ModelClass> {
    name.parse().map_err(err)
}

/// A finite model: commutative monoid, arrow, relation, optional 0 and join.
#[pyclass(name = "Model", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyModel {
    inner: rrs_core::Model,
}

impl From<rrs_core::Model> for PyModel {
    fn from(inner: rrs_core::Model) -> Self {
        PyModel { inner }
    }
}

#[pymethods]
impl PyModel {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        rrs_core::Model::from_json(text).map(Into::into).map_err(err)
    }

    /// One of the built-in models: M1, B2, G3, P3, D5.
    #[staticmethod]
    fn fixture(name: &str) -> PyResult<Self> {
        fixtures::by_name(name).map(Into::into).map_err(err)
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    #[getter]
    fn unit(&self) -> usize {
        self.inner.unit()
    }

    #[getter]
    fn zero(&self) -> Option<usize> {
        self.inner.zero()
    }

    #[getter]
    fn has_join(&self) -> bool {
        self.inner.join_table().is_some()
    }

    fn mul(&self, x: usize, y: usize) -> PyResult<usize> {
        self.bounds(&[x, y])?;
        Ok(self.inner.mul(x, y))
    }

    fn arrow(&self, x: usize, y: usize) -> PyResult<usize> {
        self.bounds(&[x, y])?;
        Ok(self.inner.arrow(x, y))
    }

    fn rel(&self, x: usize, y: usize) -> PyResult<bool> {
        self.bounds(&[x, y])?;
        Ok(self.inner.rel(x, y))
    }

    fn join(&self, x: usize, y: usize) -> PyResult<usize> {
        self.bounds(&[x, y])?;
        let j = self.inner.join_table().ok_or_else(|| PyValueError::new_err("model has no join"))?;
        Ok(j.get(x, y))
    }

    fn with_zero(&self, zero: usize) -> PyResult<Self> {
        self.inner.clone().with_zero(zero).map(Into::into).map_err(err)
    }

    fn without_join(&self) -> Self {
        self.inner.clone().without_join().into()
    }

    fn __repr__(&self) -> String {
        format!("Model({})", self.inner.to_json())
    }
}

impl PyModel {
    fn bounds(&self, xs: &[usize]) -> PyResult<()> {
        let u = self.inner.universe();
        xs.iter().try_for_each(|&x| u.check(x)).map_err(err)
    }
}

fn spec(
    class: &str,
    size: usize,
    labeled: bool,
    least_arrow: bool,
    jobs: Option<usize>,
    cap: Option<usize>,
) -> PyResult<SearchSpec> {
    let mut s = SearchSpec::new(size, parse_class(class)?);
    s.up_to_iso = !labeled;
    s.jobs = jobs;
    s.cap = cap;
    if least_arrow {
        s.arrows = ArrowChoice::Least;
    }
    Ok(s)
}

/// All models of `cls` with `size` elements, sorted canonically.
#[pyfunction]
#[pyo3(signature = (cls, size, labeled=false, least_arrow=false, jobs=None, cap=None))]
fn enumerate(
    py: Python<'_>,
    cls: &str,
    size: usize,
    labeled: bool,
    least_arrow: bool,
    jobs: Option<usize>,
    cap: Option<usize>,
) -> PyResult<Vec<PyModel>> {
    let s = spec(cls, size, labeled, least_arrow, jobs, cap)?;
    let models = py.detach(|| search::enumerate(&s)).map_err(err)?;
    Ok(models.into_iter().map(Into::into).collect())
}

#[pyfunction]
#[pyo3(signature = (cls, size, labeled=false, least_arrow=false, jobs=None, cap=None))]
fn count(
    py: Python<'_>,
    cls: &str,
    size: usize,
    labeled: bool,
    least_arrow: bool,
    jobs: Option<usize>,
    cap: Option<usize>,
) -> PyResult<usize> {
    let s = spec(cls, size, labeled, least_arrow, jobs, cap)?;
    py.detach(|| search::count(&s)).map_err(err)
}

/// First (size, model, witness) where `prop` fails, or None.
#[pyfunction]
#[allow(clippy::too_many_arguments)]
#[pyo3(signature = (cls, prop, max_size, exact=false, labeled=false, jobs=None, cap=None))]
fn counterexample_search(
    py: Python<'_>,
    cls: &str,
    prop: &str,
    max_size: usize,
    exact: bool,
    labeled: bool,
    jobs: Option<usize>,
    cap: Option<usize>,
) -> PyResult<Option<(usize, PyModel, Vec<usize>)>> {
    let s = spec(cls, max_size, labeled, false, jobs, cap)?.with_property(prop);
    let found = py
        .detach(|| if exact { search::counterexample_at_size(&s) } else { search::counterexample_search(&s) })
        .map_err(err)?;
    Ok(found.map(|c| (c.size, c.model.into(), c.witness)))
}

fn relation(size: usize, rel: Vec<u8>) -> PyResult<BinRel> {
    BinRel::from_flat(size, &rel).map_err(err)
}

fn subset(size: usize, xs: &[usize]) -> PyResult<SubsetMask> {
    SubsetMask::from_indices(size, xs).map_err(err)
}

/// `X*` for a relation given as a flat row-major 0/1 list.
#[pyfunction]
fn star(size: usize, rel: Vec<u8>, xs: Vec<usize>) -> PyResult<Vec<usize>> {
    let r = relation(size, rel)?;
    Ok(relation::star(&r, &subset(size, &xs)?).to_indices())
}

#[pyfunction]
fn dagger(size: usize, rel: Vec<u8>, ys: Vec<usize>) -> PyResult<Vec<usize>> {
    let r = relation(size, rel)?;
    Ok(relation::dagger(&r, &subset(size, &ys)?).to_indices())
}

#[pyfunction]
#[pyo3(signature = (size, rel, cap=DEFAULT_POLARITY_CAP))]
fn is_polarity_pair(size: usize, rel: Vec<u8>, cap: usize) -> PyResult<bool> {
    relation::is_polarity_pair_capped(&relation(size, rel)?, cap).map_err(err)
}

/// Every statement checker, or just one when `statement` is given.
#[pyfunction]
#[pyo3(signature = (model, statement=None))]
fn props<'py>(py: Python<'py>, model: &PyModel, statement: Option<&str>) -> PyResult<Bound<'py, PyDict>> {
    match statement {
        None => report(py, &SuiteOutput::new(&model.inner).statements),
        Some(id) => {
            let mut r = report_for(id, &model.inner).map_err(err)?;
            r.retain(|s| s == id);
            report(py, &r)
        }
    }
}

/// (member, report) for class membership.
#[pyfunction]
fn validate<'py>(py: Python<'py>, model: &PyModel, cls: &str) -> PyResult<(bool, Bound<'py, PyDict>)> {
    let r = parse_class(cls)?.validate(&model.inner);
    Ok((r.all_hold(), report(py, &r)?))
}

#[pyfunction]
fn directoids(model: &PyModel) -> PyResult<Vec<PyModel>> {
    let qs = build_quasi_directoids(&model.inner).map_err(err)?;
    Ok(qs.into_iter().map(|q| q.into_model().into()).collect())
}

/// (quotient model, class of each element, pocrim) for a model with a join.
#[pyfunction]
fn quotient(model: &PyModel) -> PyResult<(PyModel, Vec<usize>, bool)> {
    let q = QuasiDirectoid::new(model.inner.clone()).map_err(err)?;
    let p = theta_equational(&q).map_err(err)?;
    let quo = theta_quotient(&q, &p).map_err(err)?;
    let pocrim = is_pocrim(&quo.model).all_hold();
    Ok((quo.model.into(), quo.classes, pocrim))
}

/// `x' = x -> 0`; the model must designate 0.
#[pyfunction]
fn negate(model: &PyModel, x: usize) -> PyResult<usize> {
    let z = ZeroedModel::new(model.inner.clone()).map_err(err)?;
    negation::negate(&z, x).map_err(err)
}

/// (relabeled canonical model, canonical form bytes).
#[pyfunction]
fn canonicalize(model: &PyModel) -> (PyModel, Vec<u8>) {
    let (m, form) = search::canonical_model(&model.inner);
    (m.into(), form.bytes().to_vec())
}

#[pymodule]
pub fn rrs(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyModel>()?;
    m.add("CLASSES", ModelClass::ALL.iter().map(|c| c.name()).collect::<Vec<_>>())?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(count, m)?)?;
    m.add_function(wrap_pyfunction!(counterexample_search, m)?)?;
    m.add_function(wrap_pyfunction!(star, m)?)?;
    m.add_function(wrap_pyfunction!(dagger, m)?)?;
    m.add_function(wrap_pyfunction!(is_polarity_pair, m)?)?;
    m.add_function(wrap_pyfunction!(props, m)?)?;
    m.add_function(wrap_pyfunction!(validate, m)?)?;
    m.add_function(wrap_pyfunction!(directoids, m)?)?;
    m.add_function(wrap_pyfunction!(quotient, m)?)?;
    m.add_function(wrap_pyfunction!(negate, m)?)?;
    m.add_function(wrap_pyfunction!(canonicalize, m)?)?;
    Ok(())
}
