//! Python bindings: `import pyjohan`.

use std::collections::BTreeMap;

use johan::coloring::{self, Colouring};
use johan::extremal::{self, Extremum, Semantics};
use johan::graph::{self, Family, GraphFormat};
use johan::ops::{self, CombineKind, DerivativeKind};
use johan::rainbow::{self, Mode};
use johan::verify::{run_verification, CorpusConfig};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

create_exception!(pyjohan, ScaleExceeded, PyValueError, "Input exceeds a configured size cap.");

fn err(e: johan::Error) -> PyErr {
    match e {
        johan::Error::ScaleExceeded(msg) => ScaleExceeded::new_err(msg),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn parse<T: std::str::FromStr<Err = johan::Error>>(s: &str) -> PyResult<T> {
    s.parse().map_err(err)
}

type Edge = (usize, usize);

/// Simple undirected graph on vertices `0..order`.
#[pyclass(module = "pyjohan", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct Graph {
    inner: graph::Graph,
}

impl From<graph::Graph> for Graph {
    fn from(inner: graph::Graph) -> Self {
        Graph { inner }
    }
}

#[pymethods]
impl Graph {
    #[new]
    #[pyo3(signature = (order, edges = Vec::new()))]
    fn new(order: usize, edges: Vec<Edge>) -> PyResult<Self> {
        graph::Graph::new(order, edges).map(Graph::from).map_err(err)
    }

    /// Build a standard family from a spec such as `"cycle:6"` or `"star:4"`.
    #[staticmethod]
    fn family(spec: &str) -> PyResult<Self> {
        let f: Family = parse(spec)?;
        graph::generate(&f).map(Graph::from).map_err(err)
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        graph::parse_graph(text, GraphFormat::Graph6).map(Graph::from).map_err(err)
    }

    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        graph::parse_graph(text, GraphFormat::EdgeList).map(Graph::from).map_err(err)
    }

    fn to_graph6(&self) -> String {
        graph::serialize_graph(&self.inner, GraphFormat::Graph6).trim_end().to_string()
    }

    fn to_edge_list(&self) -> String {
        graph::serialize_graph(&self.inner, GraphFormat::EdgeList)
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    fn edges(&self) -> Vec<Edge> {
        self.inner.edges()
    }

    fn degrees(&self) -> Vec<usize> {
        self.inner.degrees()
    }

    fn neighbours(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.order() {
            return Err(err(johan::Error::IndexOutOfRange {
                index: v,
                order: self.inner.order(),
            }));
        }
        Ok(self.inner.neighbours(v).to_vec())
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn is_tree(&self) -> bool {
        self.inner.is_tree()
    }

    fn complement(&self) -> Self {
        self.inner.complement().into()
    }

    fn without_edges(&self, removed: Vec<Edge>) -> Self {
        self.inner.without_edges(&removed).into()
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!("Graph(order={}, edges={:?})", self.inner.order(), self.inner.edges())
    }
}

fn colours(c: &Colouring) -> Vec<usize> {
    c.colours().to_vec()
}

fn to_colouring(g: &Graph, cs: Vec<usize>, k: Option<usize>) -> PyResult<Colouring> {
    let c = match k {
        Some(k) => Colouring::with_count(cs, k),
        None => Colouring::new(cs),
    }
    .map_err(err)?;
    if c.order() != g.inner.order() {
        return Err(PyValueError::new_err(format!(
            "colouring has {} entries for a graph of order {}",
            c.order(),
            g.inner.order()
        )));
    }
    Ok(c)
}

/// Feasible colour counts and witnesses for one rainbow mode.
#[pyclass(module = "pyjohan", frozen, get_all)]
struct JProfile {
    mode: String,
    feasible_k: Vec<usize>,
    j: Option<usize>,
    witnesses: BTreeMap<usize, Vec<usize>>,
}

#[pymethods]
impl JProfile {
    fn admits(&self) -> bool {
        self.j.is_some()
    }

    fn __repr__(&self) -> String {
        format!("JProfile(mode={:?}, feasible_k={:?}, j={:?})", self.mode, self.feasible_k, self.j)
    }
}

#[pyfunction]
#[pyo3(signature = (g, mode = "all", max_order = 12))]
fn j_profile(g: &Graph, mode: &str, max_order: usize) -> PyResult<JProfile> {
    let m: Mode = parse(mode)?;
    let p = rainbow::j_profile_with(&g.inner, m, &rainbow::Limits::with_max_order(max_order)).map_err(err)?;
    Ok(JProfile {
        mode: match m {
            Mode::AllVertices => "all".into(),
            Mode::InternalOnly => "internal".into(),
        },
        feasible_k: p.feasible_k,
        j: p.j,
        witnesses: p.witnesses.iter().map(|(&k, c)| (k, colours(c))).collect(),
    })
}

/// J(G), or `None` when no J-colouring exists.
#[pyfunction]
fn j_number(g: &Graph) -> PyResult<Option<usize>> {
    rainbow::j_number(&g.inner).map_err(err)
}

/// J*(G), or `None` when no J*-colouring exists.
#[pyfunction]
fn j_star_number(g: &Graph) -> PyResult<Option<usize>> {
    rainbow::j_star_number(&g.inner).map_err(err)
}

/// `(chi, colouring)` with colours `1..=chi`.
#[pyfunction]
fn chromatic_number(g: &Graph) -> (usize, Vec<usize>) {
    let (chi, c) = coloring::chromatic_number(&g.inner);
    (chi, colours(&c))
}

#[pyfunction]
fn chi_minus_colouring(g: &Graph) -> Vec<usize> {
    colours(&coloring::chi_minus_colouring(&g.inner))
}

#[pyfunction]
#[pyo3(signature = (g, colouring, k = None))]
fn is_proper(g: &Graph, colouring: Vec<usize>, k: Option<usize>) -> PyResult<bool> {
    let c = to_colouring(g, colouring, k)?;
    coloring::is_proper(&g.inner, &c).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (g, colouring, k, mode = "all"))]
fn validate_witness(g: &Graph, colouring: Vec<usize>, k: usize, mode: &str) -> PyResult<bool> {
    let c = to_colouring(g, colouring, Some(k))?;
    Ok(rainbow::validate_witness(&g.inner, &c, k, parse(mode)?))
}

/// Vertices whose closed neighbourhood sees every colour.
#[pyfunction]
#[pyo3(signature = (g, colouring, k = None))]
fn rainbow_vertices(g: &Graph, colouring: Vec<usize>, k: Option<usize>) -> PyResult<Vec<usize>> {
    let c = to_colouring(g, colouring, k)?;
    Ok(rainbow::rainbow_vertices(&g.inner, &c).to_vec())
}

/// `r_chi` under the canonical chi-minus colouring, plus the min/max sweep
/// over every chi-colouring when the graph is small enough.
#[pyfunction]
fn rainbow_neighbourhood_number(g: &Graph) -> PyResult<BTreeMap<&'static str, Option<usize>>> {
    let r = rainbow::rainbow_neighbourhood_number(&g.inner).map_err(err)?;
    Ok(BTreeMap::from([
        ("chromatic_number", Some(r.chromatic_number)),
        ("canonical", Some(r.canonical)),
        ("min", r.sweep.as_ref().map(|s| s.min)),
        ("max", r.sweep.as_ref().map(|s| s.max)),
    ]))
}

#[pyfunction]
fn tree_jstar_colouring(t: &Graph) -> PyResult<Vec<usize>> {
    rainbow::tree_jstar_colouring(&t.inner).map(|c| colours(&c)).map_err(err)
}

/// Derived graph: complement, line, jump, middle, total, central, subdivision.
#[pyfunction]
fn derive(g: &Graph, kind: &str) -> PyResult<Graph> {
    let k: DerivativeKind = parse(kind)?;
    ops::derive(&g.inner, k).map(Graph::from).map_err(err)
}

/// Binary operation: disjoint_union, join, corona, cartesian.
#[pyfunction]
fn combine(g: &Graph, h: &Graph, kind: &str) -> PyResult<Graph> {
    let k: CombineKind = parse(kind)?;
    ops::combine(&g.inner, &h.inner, k).map(Graph::from).map_err(err)
}

fn extremum(e: Option<Extremum>) -> Option<(usize, Vec<Edge>)> {
    e.map(|e| (e.count, e.witness))
}

fn extremal_limits(max_size: usize) -> extremal::ExtremalLimits {
    extremal::ExtremalLimits {
        max_size,
        ..Default::default()
    }
}

/// Fewest removed edges leaving J = k, as `(count, edges)`.
#[pyfunction]
#[pyo3(signature = (g, k, semantics = "connected_for_k_ge_2", max_size = 21))]
fn r_minus(g: &Graph, k: usize, semantics: &str, max_size: usize) -> PyResult<Option<(usize, Vec<Edge>)>> {
    let s: Semantics = parse(semantics)?;
    extremal::r_minus_with(&g.inner, k, s, &extremal_limits(max_size))
        .map(extremum)
        .map_err(err)
}

/// Most removed edges leaving J = k, as `(count, edges)`.
#[pyfunction]
#[pyo3(signature = (g, k, semantics = "connected_for_k_ge_2", max_size = 21))]
fn r_plus(g: &Graph, k: usize, semantics: &str, max_size: usize) -> PyResult<Option<(usize, Vec<Edge>)>> {
    let s: Semantics = parse(semantics)?;
    extremal::r_plus_with(&g.inner, k, s, &extremal_limits(max_size))
        .map(extremum)
        .map_err(err)
}

/// Minimum edge removal making a connected graph admit a J-colouring,
/// as `(removed_edges, j)`.
#[pyfunction]
fn minimal_repair(g: &Graph) -> PyResult<(Vec<Edge>, usize)> {
    extremal::minimal_repair(&g.inner).map(|r| (r.removed, r.j)).map_err(err)
}

/// The default harness configuration as JSON, for editing and passing to
/// `verify`.
#[pyfunction]
fn default_config() -> String {
    CorpusConfig::default().to_json()
}

/// Run the claim verification harness and return the JSON report.
#[pyfunction]
#[pyo3(signature = (config_json = None))]
fn verify(py: Python<'_>, config_json: Option<&str>) -> PyResult<String> {
    let cfg = match config_json {
        Some(text) => CorpusConfig::from_json(text).map_err(err)?,
        None => CorpusConfig::default(),
    };
    let report = py.detach(|| run_verification(&cfg)).map_err(err)?;
    Ok(report.to_json())
}

#[pymodule]
fn pyjohan(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_class::<JProfile>()?;
    m.add("ScaleExceeded", m.py().get_type::<ScaleExceeded>())?;
    m.add_function(wrap_pyfunction!(j_profile, m)?)?;
    m.add_function(wrap_pyfunction!(j_number, m)?)?;
    m.add_function(wrap_pyfunction!(j_star_number, m)?)?;
    m.add_function(wrap_pyfunction!(chromatic_number, m)?)?;
    m.add_function(wrap_pyfunction!(chi_minus_colouring, m)?)?;
    m.add_function(wrap_pyfunction!(is_proper, m)?)?;
    m.add_function(wrap_pyfunction!(validate_witness, m)?)?;
    m.add_function(wrap_pyfunction!(rainbow_vertices, m)?)?;
    m.add_function(wrap_pyfunction!(rainbow_neighbourhood_number, m)?)?;
    m.add_function(wrap_pyfunction!(tree_jstar_colouring, m)?)?;
    m.add_function(wrap_pyfunction!(derive, m)?)?;
    m.add_function(wrap_pyfunction!(combine, m)?)?;
    m.add_function(wrap_pyfunction!(r_minus, m)?)?;
    m.add_function(wrap_pyfunction!(r_plus, m)?)?;
    m.add_function(wrap_pyfunction!(minimal_repair, m)?)?;
    m.add_function(wrap_pyfunction!(default_config, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
