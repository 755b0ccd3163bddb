use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use ::pathhom::field::{Field, FieldMode};
use ::pathhom::{generate, homology_static, minbasis, oracle, with_field};
use ::pathhom::{Chain1, FilteredDigraph, PersistenceDiagram};

fn py_err(e: ::pathhom::Error) -> PyErr {
    if e.is_input_error() {
        PyValueError::new_err(e.to_string())
    } else {
        PyRuntimeError::new_err(e.to_string())
    }
}

fn field_mode(s: &str) -> PyResult<FieldMode> {
    s.parse().map_err(py_err)
}

/// A directed graph whose edges are ordered by weight.
#[pyclass(name = "Digraph", frozen)]
struct PyDigraph {
    inner: FilteredDigraph,
}

#[pymethods]
impl PyDigraph {
    /// `edges` holds `(src, dst)` or `(src, dst, weight)` over vertices
    /// `0..n`; unweighted edges get their 1-based position as weight.
    #[new]
    #[pyo3(signature = (edges, n = None))]
    fn new(edges: Vec<Vec<f64>>, n: Option<usize>) -> PyResult<Self> {
        let mut triples = Vec::with_capacity(edges.len());
        for (i, e) in edges.iter().enumerate() {
            let vertex = |x: f64| -> PyResult<usize> {
                if x >= 0.0 && x.fract() == 0.0 {
                    Ok(x as usize)
                } else {
                    Err(PyValueError::new_err(format!("edge {i}: bad vertex {x}")))
                }
            };
            let (u, v, w) = match e.as_slice() {
                [u, v] => (vertex(*u)?, vertex(*v)?, (i + 1) as f64),
                [u, v, w] => (vertex(*u)?, vertex(*v)?, *w),
                _ => return Err(PyValueError::new_err(format!("edge {i}: expected 2 or 3 entries"))),
            };
            triples.push((u, v, w));
        }
        let n = n.unwrap_or_else(|| triples.iter().map(|t| t.0.max(t.1) + 1).max().unwrap_or(0));
        FilteredDigraph::from_edges(n, &triples)
            .map(|inner| Self { inner })
            .map_err(py_err)
    }

    /// Parses the `SRC DST [WEIGHT]` edge-list format.
    #[staticmethod]
    #[pyo3(signature = (text, line_order = false))]
    fn from_edge_list(text: &str, line_order: bool) -> PyResult<Self> {
        FilteredDigraph::parse_edge_list(text, line_order)
            .map(|inner| Self { inner })
            .map_err(py_err)
    }

    #[staticmethod]
    fn er(n: usize, p: f64, seed: u64) -> PyResult<Self> {
        generate::er(n, p, seed).map(|inner| Self { inner }).map_err(py_err)
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Self> {
        generate::cycle(n).map(|inner| Self { inner }).map_err(py_err)
    }

    #[staticmethod]
    fn fan(ls: usize, lt: usize) -> Self {
        Self {
            inner: generate::fan(ls, lt),
        }
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    /// `(src, dst, weight)` in filtration order, with vertex labels.
    fn edges(&self) -> Vec<(String, String, f64)> {
        let g = &self.inner;
        g.edges()
            .iter()
            .map(|e| (g.label(e.src).to_string(), g.label(e.dst).to_string(), e.weight))
            .collect()
    }

    fn to_edge_list(&self) -> String {
        self.inner.to_edge_list()
    }

    fn __repr__(&self) -> String {
        format!("Digraph(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

type Term = (String, String, String);
type Cycle = Vec<Term>;

fn cycle_terms<F: Field>(f: &F, g: &FilteredDigraph, c: &Chain1<F::Elem>) -> Cycle {
    c.iter()
        .map(|(e, x)| {
            let edge = g.edge(*e);
            (g.label(edge.src).to_string(), g.label(edge.dst).to_string(), f.render(x))
        })
        .collect()
}

/// Persistence diagram: finite pairs and essential classes with their
/// representative cycles as `(src, dst, coeff)` terms.
#[pyclass(name = "Diagram", frozen, get_all)]
struct PyDiagram {
    pairs: Vec<(f64, f64)>,
    essentials: Vec<(f64, Cycle)>,
    rank_h1: usize,
}

#[pymethods]
impl PyDiagram {
    fn __repr__(&self) -> String {
        format!(
            "Diagram(pairs={}, essentials={}, rank_h1={})",
            self.pairs.len(),
            self.essentials.len(),
            self.rank_h1
        )
    }
}

fn to_py_diagram<F: Field>(
    f: &F,
    g: &FilteredDigraph,
    mut d: PersistenceDiagram<F::Elem>,
    drop_diagonal: bool,
) -> PyDiagram {
    if drop_diagonal {
        d.drop_diagonal();
    }
    let mut pairs: Vec<(f64, f64)> = d.pairs.iter().map(|p| (p.birth, p.death)).collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    PyDiagram {
        pairs,
        rank_h1: d.essentials.len(),
        essentials: d
            .essentials
            .iter()
            .map(|e| (e.birth, cycle_terms(f, g, &e.cycle)))
            .collect(),
    }
}

/// `(rank_z1, rank_b1, rank_h1)` from the static algorithm.
#[pyfunction]
#[pyo3(signature = (g, field = "zp:1000000007"))]
fn h1_rank(g: &PyDigraph, field: &str) -> PyResult<(usize, usize, usize)> {
    let mode = field_mode(field)?;
    let run = || -> ::pathhom::Result<_> {
        Ok(with_field!(mode, f => {
            let r = homology_static::h1_rank_static(&f, &g.inner);
            (r.z1, r.b1, r.h1)
        }))
    };
    run().map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (g, field = "zp:1000000007", drop_diagonal = false))]
fn persistence(g: &PyDigraph, field: &str, drop_diagonal: bool) -> PyResult<PyDiagram> {
    let mode = field_mode(field)?;
    let run = || -> ::pathhom::Result<PyDiagram> {
        with_field!(mode, f => {
            let p = ::pathhom::persistence(&f, &g.inner)?;
            Ok(to_py_diagram(&f, &g.inner, p.diagram, drop_diagonal))
        })
    };
    run().map_err(py_err)
}

/// `[(mu, cycle), ...]`, one cycle per homology class.
#[pyfunction]
#[pyo3(signature = (g, field = "zp:1000000007"))]
fn minimal_basis(g: &PyDigraph, field: &str) -> PyResult<Vec<(f64, Cycle)>> {
    let mode = field_mode(field)?;
    let run = || -> ::pathhom::Result<_> {
        with_field!(mode, f => {
            let basis = minbasis::minimal_basis(&f, &g.inner)?;
            Ok(basis.iter().map(|(c, mu)| (*mu, cycle_terms(&f, &g.inner, c))).collect())
        })
    };
    run().map_err(py_err)
}

/// Dense brute-force ranks, for checking.
#[pyfunction]
#[pyo3(signature = (g, field = "zp:1000000007"))]
fn oracle_h1_rank(g: &PyDigraph, field: &str) -> PyResult<(usize, usize, usize)> {
    let mode = field_mode(field)?;
    let run = || -> ::pathhom::Result<_> {
        Ok(with_field!(mode, f => {
            let r = oracle::h1_rank_oracle(&f, &g.inner);
            (r.z1, r.b1, r.h1)
        }))
    };
    run().map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (g, field = "zp:1000000007", drop_diagonal = false))]
fn oracle_persistence(g: &PyDigraph, field: &str, drop_diagonal: bool) -> PyResult<PyDiagram> {
    let mode = field_mode(field)?;
    let run = || -> ::pathhom::Result<PyDiagram> {
        with_field!(mode, f => {
            let d = oracle::persistence_oracle(&f, &g.inner);
            Ok(to_py_diagram(&f, &g.inner, d, drop_diagonal))
        })
    };
    run().map_err(py_err)
}

/// 1-dimensional path homology of directed graphs.
#[pymodule]
#[pyo3(name = "pathhom")]
fn pathhom_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<PyDigraph>()?;
    m.add_class::<PyDiagram>()?;
    m.add_function(wrap_pyfunction!(h1_rank, m)?)?;
    m.add_function(wrap_pyfunction!(persistence, m)?)?;
    m.add_function(wrap_pyfunction!(minimal_basis, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_h1_rank, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_persistence, m)?)?;
    Ok(())
}
