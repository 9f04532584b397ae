//! Python bindings: the main types and operations, exactly as exact as
//! the Rust side. Rationals cross the boundary as `"p/q"` strings and
//! polynomials as the JSON documents the CLI emits, so nothing is lost
//! to floating point.
//!
//! Build `libhurwitz_py.so` with `cargo build -p hurwitz-py --release`,
//! rename it to `hurwitz_py.so` somewhere on `sys.path`, and
//! `import hurwitz_py`. See `python/smoke_test.py`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use hurwitz_core::cutjoin;
use hurwitz_core::oracle;
use hurwitz_core::perm::CycleType;
use hurwitz_core::rat::{factorial_rat, format_rat};
use hurwitz_core::spectral::{self, TreeMethod};
use hurwitz_core::surfaces::{self, MultiGraph};
use hurwitz_core::wring::{collect, WPolynomial};

fn err(e: hurwitz_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_lambda(lambda_: Option<&str>) -> PyResult<Option<CycleType>> {
    lambda_.map(CycleType::parse).transpose().map_err(err)
}

fn oracle_poly(
    n: Option<usize>,
    g: i64,
    lambda_: Option<&str>,
    budget: Option<u128>,
) -> PyResult<(usize, WPolynomial)> {
    let budget = budget.unwrap_or(oracle::DEFAULT_BUDGET);
    match parse_lambda(lambda_)? {
        Some(l) => {
            let n = l.n();
            Ok((n, oracle::hurwitz_poly_lambda(&l, g, budget).map_err(err)?))
        }
        None => {
            let n = n.ok_or_else(|| PyValueError::new_err("need n or lambda"))?;
            if g < 0 {
                return Err(PyValueError::new_err(
                    "the n-cycle target needs g >= 0; pass lambda for negative genus",
                ));
            }
            Ok((n, oracle::hurwitz_poly(n, g as u32, budget).map_err(err)?))
        }
    }
}

/// Enumerated factorization polynomial as the JSON document the CLI
/// prints. Target is the n-cycle, or the class of `lambda` ("2,1") when
/// given.
#[pyfunction]
#[pyo3(signature = (g, n=None, lambda_=None, budget=None))]
fn hurwitz_poly_json(
    g: i64,
    n: Option<usize>,
    lambda_: Option<&str>,
    budget: Option<u128>,
) -> PyResult<String> {
    let (_, p) = oracle_poly(n, g, lambda_, budget)?;
    Ok(p.to_json().to_string())
}

/// The weighted factorization count `P(1) / n!` as an exact `"p/q"`.
#[pyfunction]
#[pyo3(signature = (g, n=None, lambda_=None, budget=None))]
fn hurwitz_number(
    g: i64,
    n: Option<usize>,
    lambda_: Option<&str>,
    budget: Option<u128>,
) -> PyResult<String> {
    let (n, p) = oracle_poly(n, g, lambda_, budget)?;
    Ok(format_rat(&(p.eval_ones() / factorial_rat(n))))
}

/// The labeled-tree polynomial, JSON encoded. `method` is `"kirchhoff"`
/// or `"pruefer"`.
#[pyfunction]
#[pyo3(signature = (n, method="kirchhoff"))]
fn tree_poly_json(n: usize, method: &str) -> PyResult<String> {
    let method = match method {
        "kirchhoff" => TreeMethod::Kirchhoff,
        "pruefer" => TreeMethod::Pruefer,
        other => return Err(PyValueError::new_err(format!("unknown method {other:?}"))),
    };
    if n < 1 {
        return Err(PyValueError::new_err("n must be positive"));
    }
    Ok(spectral::tree_poly(n, method).to_json().to_string())
}

/// Exact Bernoulli number as `"p/q"`.
#[pyfunction]
fn bernoulli(k: usize) -> String {
    format_rat(&spectral::bernoulli(k))
}

/// True when the enumerated polynomial equals `(n+2g-1)! T_n R_{g,n}`.
#[pyfunction]
#[pyo3(signature = (n, g, budget=None))]
fn verify_div(n: usize, g: u32, budget: Option<u128>) -> PyResult<bool> {
    let budget = budget.unwrap_or(oracle::DEFAULT_BUDGET);
    Ok(spectral::verify_div(n, g, budget).map_err(err)?.equal)
}

/// Closed form for the weighted count, `"p/q"`.
#[pyfunction]
fn hurwitz_closed(n: usize, g: u32) -> PyResult<String> {
    if n < 1 {
        return Err(PyValueError::new_err("n must be positive"));
    }
    Ok(format_rat(&spectral::hurwitz_closed(g, n)))
}

/// The degree-2g part of `det phi` of the Laplacian, collected into graph
/// classes: JSON list of `{edges, coeff}`.
#[pyfunction]
fn exp_r_collected_json(g: usize, n: usize) -> PyResult<String> {
    let series = collect(&spectral::exp_r_part(g, n)).map_err(err)?;
    Ok(series.to_json().to_string())
}

/// True when the cut-and-join equation holds exactly on the truncation.
#[pyfunction]
#[pyo3(signature = (n_max, m_max, budget=None))]
fn verify_cutjoin(n_max: usize, m_max: usize, budget: Option<u128>) -> PyResult<bool> {
    let budget = budget.unwrap_or(oracle::DEFAULT_BUDGET);
    Ok(cutjoin::verify_cutjoin(n_max, m_max, budget)
        .map_err(err)?
        .equal)
}

/// A multigraph in the shared edge-list format, loops allowed.
#[pyclass]
struct Graph {
    inner: MultiGraph,
}

#[pymethods]
impl Graph {
    /// Parse `"1-2;1-2;2-3"`; loops are written `"1-1"`.
    #[new]
    fn new(edges: &str) -> PyResult<Self> {
        Ok(Graph {
            inner: MultiGraph::parse(edges).map_err(err)?,
        })
    }

    fn vertex_count(&self) -> usize {
        self.inner.v()
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn beta1(&self) -> usize {
        self.inner.beta1()
    }

    /// Total number of embeddings (rotation systems).
    fn emb_count(&self) -> u128 {
        self.inner.emb_count()
    }

    /// Number of one-faced embeddings, by exhaustive enumeration.
    #[pyo3(signature = (budget=None))]
    fn one_faced_count(&self, budget: Option<u128>) -> PyResult<u64> {
        surfaces::one_faced_count(&self.inner, budget.unwrap_or(1 << 24)).map_err(err)
    }

    /// Sum of decoration weights as `"p/q"`.
    fn decoration_sum(&self) -> PyResult<String> {
        Ok(format_rat(&surfaces::decoration_sum(&self.inner).map_err(err)?))
    }

    fn decoration_count(&self) -> PyResult<usize> {
        Ok(surfaces::decorations(&self.inner).map_err(err)?.len())
    }

    /// Check `decoration_sum * emb_count = one_faced_count`; returns
    /// `(emb, one_faced, decoration_sum, check)`.
    #[pyo3(signature = (budget=None))]
    fn verify_spiders(&self, budget: Option<u128>) -> PyResult<(u128, u64, String, bool)> {
        let report =
            surfaces::verify_spiders(&self.inner, budget.unwrap_or(1 << 24)).map_err(err)?;
        Ok((
            report.emb,
            report.one_faced,
            format_rat(&report.decoration_sum),
            report.check,
        ))
    }

    fn is_long(&self) -> PyResult<bool> {
        surfaces::is_long(&self.inner).map_err(err)
    }

    /// The minimal subdivision that is loopless and long.
    fn subdivide_to_long(&self) -> PyResult<Graph> {
        let (g, _) = surfaces::subdivide_to_long(&self.inner).map_err(err)?;
        Ok(Graph { inner: g })
    }

    fn edges_string(&self) -> String {
        self.inner.edges_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(\"{}\", v={}, beta1={})",
            self.inner.edges_string(),
            self.inner.v(),
            self.inner.beta1()
        )
    }
}

#[pymodule]
fn hurwitz_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_function(wrap_pyfunction!(hurwitz_poly_json, m)?)?;
    m.add_function(wrap_pyfunction!(hurwitz_number, m)?)?;
    m.add_function(wrap_pyfunction!(tree_poly_json, m)?)?;
    m.add_function(wrap_pyfunction!(bernoulli, m)?)?;
    m.add_function(wrap_pyfunction!(verify_div, m)?)?;
    m.add_function(wrap_pyfunction!(hurwitz_closed, m)?)?;
    m.add_function(wrap_pyfunction!(exp_r_collected_json, m)?)?;
    m.add_function(wrap_pyfunction!(verify_cutjoin, m)?)?;
    m.add_class::<Graph>()?;
    Ok(())
}
