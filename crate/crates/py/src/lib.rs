//! Python bindings for `sweeplab-core`.
//!
//! ```python
//! import sweeplab
//! p = sweeplab.Path("NENEE", 3, 2)
//! assert p.dinv() == p.sweep().area()
//! ```

use std::collections::HashMap;

use pyo3::exceptions::{PyIndexError, PyOverflowError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use sweeplab_core::paths::{self, DEFAULT_LIMIT};
use sweeplab_core::recursion::{self, RemovalMove, Strategy};
use sweeplab_core::render::{self, Style};
use sweeplab_core::{statistics, sweep, verify, Error, StepWord};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::LimitExceeded { .. } | Error::CountOverflow | Error::TooLarge => PyOverflowError::new_err(e.to_string()),
        Error::IndexOutOfRange { .. } | Error::RowOutOfRange { .. } => PyIndexError::new_err(e.to_string()),
        Error::NotInImage(_) | Error::NonIntegral { .. } | Error::NoMoveAvailable { .. } => {
            PyRuntimeError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// The triple (m, n, d) with m, n co-prime.
#[pyclass(frozen, eq, hash, skip_from_py_object, name = "Params")]
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct PyParams(paths::Params);

#[pymethods]
impl PyParams {
    #[new]
    #[pyo3(signature = (m, n, d=1))]
    fn new(m: i64, n: i64, d: i64) -> PyResult<Self> {
        paths::Params::new(m, n, d).map(PyParams).map_err(to_py)
    }

    #[getter]
    fn m(&self) -> u32 {
        self.0.m()
    }

    #[getter]
    fn n(&self) -> u32 {
        self.0.n()
    }

    #[getter]
    fn d(&self) -> u32 {
        self.0.d()
    }

    fn __repr__(&self) -> String {
        format!("Params(m={}, n={}, d={})", self.0.m(), self.0.n(), self.0.d())
    }
}

fn params(m: i64, n: i64, d: i64) -> PyResult<paths::Params> {
    paths::Params::new(m, n, d).map_err(to_py)
}

/// A path word over N/E (S/W accepted) for given (m, n, d).
#[pyclass(frozen, eq, hash, skip_from_py_object, name = "Path")]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPath(StepWord);

#[pymethods]
impl PyPath {
    #[new]
    #[pyo3(signature = (word, m, n, d=1))]
    fn new(word: &str, m: i64, n: i64, d: i64) -> PyResult<Self> {
        StepWord::parse(word, params(m, n, d)?).map(PyPath).map_err(to_py)
    }

    #[getter]
    fn word(&self) -> String {
        self.0.to_string()
    }

    #[getter]
    fn params(&self) -> PyParams {
        PyParams(self.0.params())
    }

    /// Start ranks of the steps, left to right.
    #[getter]
    fn ranks(&self) -> Vec<i64> {
        self.0.ranks().to_vec()
    }

    fn is_dyck(&self) -> bool {
        self.0.is_dyck()
    }

    fn south_end_ranks(&self) -> PyResult<Vec<i64>> {
        self.0.south_end_ranks().map_err(to_py)
    }

    fn sweep(&self) -> PyPath {
        PyPath(sweep::sweep(&self.0))
    }

    /// 1-indexed columns in sweep order.
    fn sweep_order(&self) -> Vec<usize> {
        sweep::sweep_order(&self.0).columns().to_vec()
    }

    fn image_start_rank(&self, position: usize) -> PyResult<i64> {
        sweep::image_start_rank(&self.0, position).map_err(to_py)
    }

    fn green_line_rank(&self, column: usize) -> PyResult<i64> {
        sweep::green_line_rank(&self.0, column).map_err(to_py)
    }

    #[pyo3(signature = (limit=DEFAULT_LIMIT))]
    fn unsweep(&self, limit: usize) -> PyResult<PyPath> {
        sweep::unsweep(&self.0, limit).map(PyPath).map_err(to_py)
    }

    fn area(&self) -> PyResult<u64> {
        statistics::area_cells(&self.0).map_err(to_py)
    }

    fn area_formula(&self) -> PyResult<u64> {
        statistics::area_rank_formula(&self.0).map_err(to_py)
    }

    fn dinv(&self) -> PyResult<u64> {
        statistics::dinv_pairs(&self.0).map_err(to_py)
    }

    fn dinv_cells(&self) -> PyResult<u64> {
        statistics::dinv_cells(&self.0).map_err(to_py)
    }

    /// Valid removal moves as (p, k) pairs.
    fn valid_moves(&self) -> PyResult<Vec<(usize, i64)>> {
        Ok(recursion::valid_moves(&self.0)
            .map_err(to_py)?
            .into_iter()
            .map(|mv| (mv.p, mv.k))
            .collect())
    }

    fn apply_move(&self, p: usize) -> PyResult<PyPath> {
        let mv = RemovalMove::at(&self.0, p).map_err(to_py)?;
        recursion::apply_move(&self.0, mv).map(PyPath).map_err(to_py)
    }

    /// Region segment counts for the move at column `p`.
    fn region_counts(&self, p: usize) -> PyResult<HashMap<&'static str, i64>> {
        let mv = RemovalMove::at(&self.0, p).map_err(to_py)?;
        let c = recursion::region_counts(&self.0, mv).map_err(to_py)?;
        Ok(HashMap::from([
            ("red_t1", c.red_t1),
            ("blue_t1", c.blue_t1),
            ("red_t2", c.red_t2),
            ("blue_b1", c.blue_b1),
            ("blue_b2", c.blue_b2),
            ("red_b2", c.red_b2),
            ("area_delta", c.area_delta()),
            ("dinv_delta", c.dinv_delta()),
        ]))
    }

    /// Columns of the moves leading down to the base path.
    #[pyo3(signature = (strategy="first-valid"))]
    fn reduce_to_base(&self, strategy: &str) -> PyResult<Vec<usize>> {
        let strategy = match strategy {
            "first-valid" => Strategy::FirstValid,
            "max-sweep-w" => Strategy::MaxSweepW,
            other => return Err(PyValueError::new_err(format!("unknown strategy {other:?}"))),
        };
        Ok(recursion::reduce_to_base(&self.0, strategy)
            .map_err(to_py)?
            .into_iter()
            .map(|mv| mv.p)
            .collect())
    }

    #[pyo3(signature = (style="grid", highlight=None))]
    fn svg(&self, style: &str, highlight: Option<usize>) -> PyResult<String> {
        let style = match style {
            "grid" => Style::Grid,
            "diagram" => Style::Diagram,
            other => return Err(PyValueError::new_err(format!("unknown style {other:?}"))),
        };
        render::render(&self.0, style, highlight).map_err(to_py)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        let p = self.0.params();
        format!("Path({:?}, m={}, n={}, d={})", self.0.to_string(), p.m(), p.n(), p.d())
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }
}

#[pyfunction]
#[pyo3(signature = (m, n, d=1, limit=DEFAULT_LIMIT))]
fn enumerate_dyck(m: i64, n: i64, d: i64, limit: usize) -> PyResult<Vec<PyPath>> {
    Ok(paths::enumerate_dyck(params(m, n, d)?, limit)
        .map_err(to_py)?
        .map(PyPath)
        .collect())
}

#[pyfunction]
#[pyo3(signature = (m, n, d=1))]
fn count_dyck(m: i64, n: i64, d: i64) -> PyResult<u128> {
    paths::count_dyck(params(m, n, d)?).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (m, n, d=1))]
fn base_path(m: i64, n: i64, d: i64) -> PyResult<PyPath> {
    Ok(PyPath(paths::base_path(params(m, n, d)?)))
}

#[pyfunction]
#[pyo3(signature = (m, n, d=1))]
fn max_stat(m: i64, n: i64, d: i64) -> PyResult<u64> {
    Ok(statistics::max_stat(params(m, n, d)?))
}

/// Joint distribution {(area, dinv): count}.
#[pyfunction]
#[pyo3(signature = (m, n, d=1, limit=DEFAULT_LIMIT))]
fn joint_distribution(m: i64, n: i64, d: i64, limit: usize) -> PyResult<HashMap<(u64, u64), u64>> {
    let table = statistics::joint_distribution(params(m, n, d)?, limit).map_err(to_py)?;
    Ok(table.counts.into_iter().collect())
}

/// Runs every check; returns (passed, report text).
#[pyfunction]
#[pyo3(signature = (m, n, d=1, limit=DEFAULT_LIMIT, jobs=0))]
fn run_verify(py: Python<'_>, m: i64, n: i64, d: i64, limit: usize, jobs: usize) -> PyResult<(bool, String)> {
    let params = params(m, n, d)?;
    let report = py
        .detach(|| verify::verify(params, limit, jobs, verify::Stats::default()))
        .map_err(to_py)?;
    Ok((report.passed(), report.to_string()))
}

#[pymodule]
pub fn sweeplab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyParams>()?;
    m.add_class::<PyPath>()?;
    m.add_function(wrap_pyfunction!(enumerate_dyck, m)?)?;
    m.add_function(wrap_pyfunction!(count_dyck, m)?)?;
    m.add_function(wrap_pyfunction!(base_path, m)?)?;
    m.add_function(wrap_pyfunction!(max_stat, m)?)?;
    m.add_function(wrap_pyfunction!(joint_distribution, m)?)?;
    m.add("verify", wrap_pyfunction!(run_verify, m)?)?;
    Ok(())
}
