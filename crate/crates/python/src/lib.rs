//! Python bindings: load or build systems, run suites, convert.

use pyo3::exceptions::{PyKeyError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use kantor_core::catalog;
use kantor_core::format::SystemFile;
use kantor_core::triple::SignPair;
use kantor_core::workbench::{self, Direction, Options};
use kantor_core::{Error, Report};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Parse(m) => PyValueError::new_err(m),
        Error::Unsupported(m) => PyKeyError::new_err(m),
        other => PyRuntimeError::new_err(other.to_string()),
    }
}

#[pyclass(name = "SystemFile", module = "kantor")]
#[derive(Clone)]
struct PySystemFile {
    inner: SystemFile,
}

#[pymethods]
impl PySystemFile {
    #[getter]
    fn kind(&self) -> &'static str {
        self.inner.kind()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn label(&self) -> Option<String> {
        self.inner.label().map(String::from)
    }

    /// Canonical text of the file.
    fn to_json(&self) -> String {
        self.inner.to_canonical_string()
    }

    fn save(&self, path: &str) -> PyResult<()> {
        self.inner.save(path).map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!(
            "SystemFile(kind={:?}, dim={}, label={:?})",
            self.inner.kind(),
            self.inner.dim(),
            self.inner.label()
        )
    }
}

/// One suite's outcome.
#[pyclass(name = "Report", module = "kantor", get_all)]
#[derive(Clone)]
struct PyReport {
    subject: String,
    suite: String,
    passed: bool,
    /// `(name, passed, witness or None)` per check.
    checks: Vec<(String, bool, Option<String>)>,
    text: String,
}

#[pymethods]
impl PyReport {
    fn __str__(&self) -> String {
        self.text.clone()
    }

    fn __bool__(&self) -> bool {
        self.passed
    }
}

impl From<Report> for PyReport {
    fn from(r: Report) -> Self {
        PyReport {
            subject: r.subject.clone(),
            suite: r.suite.clone(),
            passed: r.passed(),
            checks: r
                .checks
                .iter()
                .map(|c| (c.name.clone(), c.passed, c.witness.as_ref().map(|w| w.to_string())))
                .collect(),
            text: r.render(false),
        }
    }
}

fn options(signs: Option<&str>, unit: Option<&str>, map: Option<&str>) -> Result<Options, Error> {
    Ok(Options {
        signs: signs.map(str::parse::<SignPair>).transpose()?,
        unit: unit.map(workbench::parse_vector).transpose()?,
        map: map.map(workbench::resolve_map).transpose()?,
    })
}

/// Ids of the built-in systems.
#[pyfunction]
fn catalog_ids() -> Vec<&'static str> {
    catalog::catalog().iter().map(|i| i.id).collect()
}

/// A catalog id or a file path.
#[pyfunction]
fn load(spec: &str) -> PyResult<PySystemFile> {
    let (inner, _) = workbench::resolve_input(spec).map_err(to_py)?;
    Ok(PySystemFile { inner })
}

#[pyfunction]
fn parse(text: &str) -> PyResult<PySystemFile> {
    Ok(PySystemFile {
        inner: SystemFile::parse(text).map_err(to_py)?,
    })
}

#[pyfunction]
#[pyo3(signature = (file, suite, signs=None, unit=None, map=None))]
fn verify(
    file: &PySystemFile,
    suite: &str,
    signs: Option<&str>,
    unit: Option<&str>,
    map: Option<&str>,
) -> PyResult<PyReport> {
    let opts = options(signs, unit, map).map_err(to_py)?;
    workbench::run_suite(&file.inner, suite, &opts)
        .map(PyReport::from)
        .map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (file, direction, signs=None, unit=None, map=None))]
fn convert(
    file: &PySystemFile,
    direction: &str,
    signs: Option<&str>,
    unit: Option<&str>,
    map: Option<&str>,
) -> PyResult<PySystemFile> {
    let d: Direction = direction.parse().map_err(to_py)?;
    let opts = options(signs, unit, map).map_err(to_py)?;
    let inner = workbench::convert(&file.inner, d, &opts).map_err(to_py)?;
    Ok(PySystemFile { inner })
}

#[pyfunction]
#[pyo3(signature = (file, signs=None))]
fn build_lie(file: &PySystemFile, signs: Option<&str>) -> PyResult<PySystemFile> {
    let opts = options(signs, None, None).map_err(to_py)?;
    let inner = workbench::build_lie(&file.inner, &opts).map_err(to_py)?;
    Ok(PySystemFile { inner })
}

/// `(adjoint, natural, trivial dim)` under osp(1,2).
#[pyfunction]
#[pyo3(signature = (file, unit=None))]
fn decompose(file: &PySystemFile, unit: Option<&str>) -> PyResult<(usize, usize, usize)> {
    let opts = options(None, unit, None).map_err(to_py)?;
    let d = workbench::decompose(&file.inner, &opts).map_err(to_py)?;
    Ok(d.counts())
}

/// Runs every catalog item through its declared suites.
#[pyfunction]
fn self_test() -> PyResult<Vec<PyReport>> {
    Ok(catalog::self_test()
        .map_err(to_py)?
        .into_iter()
        .map(PyReport::from)
        .collect())
}

#[pymodule]
fn kantor(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySystemFile>()?;
    m.add_class::<PyReport>()?;
    m.add("SUITES", workbench::SUITES.to_vec())?;
    m.add_function(wrap_pyfunction!(catalog_ids, m)?)?;
    m.add_function(wrap_pyfunction!(load, m)?)?;
    m.add_function(wrap_pyfunction!(parse, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(convert, m)?)?;
    m.add_function(wrap_pyfunction!(build_lie, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(self_test, m)?)?;
    Ok(())
}
