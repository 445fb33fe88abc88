//! Python bindings: defining graphs, group elements, cosets, Cayley and
//! extension graphs, wreath products and the seeded verify suite.

use std::sync::Arc;

use graphprod::cayley::CayleyGraph;
use graphprod::coset::{decompose, in_rf, left_coset_rep};
use graphprod::dynamics::{bounded_order, OrderStatus};
use graphprod::explore::{ball_bfs, four_point_delta, FourPointConfig};
use graphprod::extension::{canonicalize_ext, ext_act, ext_adjacent, ExtVertex};
use graphprod::fixtures;
use graphprod::verify::{render, verify, VerifyBudget};
use graphprod::word::{enumerate_normal_forms, Word};
use graphprod::wreath::{GraphAction, Wreath as CoreWreath};
use graphprod::{DefiningGraph, NormalForm, VertexId, VertexSet};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn err(e: graphprod::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn vertex_set(g: &DefiningGraph, ids: Vec<u32>) -> PyResult<VertexSet> {
    VertexSet::from_ids(g, ids.into_iter().map(VertexId)).map_err(err)
}

/// A defining graph with a finite group on every vertex.
#[pyclass(frozen, module = "graphprod_py")]
struct Graph {
    inner: Arc<DefiningGraph>,
}

impl Graph {
    fn wrap(g: DefiningGraph) -> Self {
        Graph { inner: Arc::new(g) }
    }

    fn elem(&self, x: NormalForm) -> Element {
        Element {
            graph: self.inner.clone(),
            nf: x,
        }
    }
}

#[pymethods]
impl Graph {
    /// One of the built-in fixtures, e.g. "pentagon" or "path3".
    #[staticmethod]
    fn fixture(name: &str) -> PyResult<Self> {
        fixtures::by_name(name)
            .map(Graph::wrap)
            .ok_or_else(|| PyValueError::new_err(format!("unknown fixture {name:?}")))
    }

    #[staticmethod]
    fn fixture_names() -> Vec<&'static str> {
        fixtures::NAMES.to_vec()
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        DefiningGraph::from_json(text).map(Graph::wrap).map_err(err)
    }

    /// Cyclic vertex groups of the given orders on the given edges.
    #[staticmethod]
    fn cyclic(orders: Vec<usize>, edges: Vec<(u32, u32)>) -> PyResult<Self> {
        DefiningGraph::with_cyclic(&orders, &edges)
            .map(Graph::wrap)
            .map_err(err)
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edges(&self) -> Vec<(u32, u32)> {
        self.inner
            .edges()
            .into_iter()
            .map(|(a, b)| (a.0, b.0))
            .collect()
    }

    fn group_order(&self, v: u32) -> PyResult<usize> {
        self.inner.check_vertex(VertexId(v)).map_err(err)?;
        Ok(self.inner.group(VertexId(v)).order())
    }

    fn link(&self, v: u32) -> PyResult<Vec<u32>> {
        self.inner.check_vertex(VertexId(v)).map_err(err)?;
        Ok(self.inner.link(VertexId(v)).iter().map(|w| w.0).collect())
    }

    /// Girth of the defining graph as a string, "inf" for forests.
    fn girth(&self) -> String {
        self.inner.girth().to_string()
    }

    fn to_dot(&self) -> String {
        self.inner.to_dot()
    }

    /// Parses `"0:1 2:1"` (or `"e"`) into its normal form.
    fn element(&self, word: &str) -> PyResult<Element> {
        NormalForm::parse(word, &self.inner)
            .map(|x| self.elem(x))
            .map_err(err)
    }

    fn identity(&self) -> Element {
        self.elem(NormalForm::identity())
    }

    fn cayley(&self) -> Cayley {
        Cayley {
            inner: CayleyGraph::from_arc(self.inner.clone()),
        }
    }

    /// The extension-graph vertex `(v, conj)`, canonicalized.
    #[pyo3(signature = (v, conj=None))]
    fn ext_vertex(&self, v: u32, conj: Option<&Element>) -> PyResult<ExtensionVertex> {
        let rho = conj.map(|c| c.nf.clone()).unwrap_or_default();
        let x = canonicalize_ext(VertexId(v), &rho, &self.inner).map_err(err)?;
        Ok(ExtensionVertex {
            graph: self.inner.clone(),
            inner: x,
        })
    }

    /// Runs the seeded invariant suite and returns its JSON-lines report.
    #[pyo3(signature = (seed=0, samples=200, name="graph"))]
    fn verify(&self, seed: u64, samples: usize, name: &str) -> String {
        let budget = VerifyBudget {
            samples,
            ..Default::default()
        };
        render(&verify(&self.inner, seed, &budget), name)
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(vertices={}, edges={:?})",
            self.inner.vertex_count(),
            self.edges()
        )
    }
}

/// A group element, always held in normal form.
#[pyclass(frozen, skip_from_py_object, module = "graphprod_py")]
#[derive(Clone)]
struct Element {
    graph: Arc<DefiningGraph>,
    nf: NormalForm,
}

impl Element {
    fn with(&self, nf: NormalForm) -> Element {
        Element {
            graph: self.graph.clone(),
            nf,
        }
    }

    fn same_graph(&self, other: &Element) -> PyResult<()> {
        if Arc::ptr_eq(&self.graph, &other.graph) || *self.graph == *other.graph {
            Ok(())
        } else {
            Err(err(graphprod::Error::GraphMismatch))
        }
    }
}

#[pymethods]
impl Element {
    fn __mul__(&self, other: &Element) -> PyResult<Element> {
        self.same_graph(other)?;
        Ok(self.with(self.nf.mul(&other.nf, &self.graph)))
    }

    fn __pow__(&self, k: i64, _modulo: Option<i64>) -> Element {
        let base = if k < 0 {
            self.nf.inverse(&self.graph)
        } else {
            self.nf.clone()
        };
        self.with(base.pow(k.unsigned_abs() as usize, &self.graph))
    }

    fn inverse(&self) -> Element {
        self.with(self.nf.inverse(&self.graph))
    }

    fn __len__(&self) -> usize {
        self.nf.len()
    }

    fn __eq__(&self, other: &Element) -> bool {
        self.nf == other.nf && *self.graph == *other.graph
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.nf.hash(&mut h);
        h.finish()
    }

    fn __str__(&self) -> String {
        self.nf.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Element({:?})", self.nf.to_string())
    }

    fn is_identity(&self) -> bool {
        self.nf.is_identity()
    }

    fn syllables(&self) -> Vec<(u32, u32)> {
        self.nf
            .syllables()
            .iter()
            .map(|s| (s.vertex.0, s.elem))
            .collect()
    }

    fn support(&self) -> Vec<u32> {
        self.nf.support().into_iter().map(|v| v.0).collect()
    }

    /// Every reduced word for this element, as strings.
    #[pyo3(signature = (cap=100_000))]
    fn shuffles(&self, cap: usize) -> PyResult<Vec<String>> {
        let set = enumerate_normal_forms(&self.nf, &self.graph, cap);
        if set.overflow {
            return Err(err(graphprod::Error::CapExceeded { cap }));
        }
        Ok(set.words.into_iter().map(|w| Word(w).to_string()).collect())
    }

    /// The order if it is at most `bound`, else `None`.
    #[pyo3(signature = (bound=100))]
    fn order(&self, bound: usize) -> Option<usize> {
        match bounded_order(&self.nf, bound, &self.graph) {
            OrderStatus::Finite(n) => Some(n),
            OrderStatus::ExceedsBound(_) => None,
        }
    }

    /// `(p, r)` with `self = p r`, `p` supported on `f` and `r` in `R_F`.
    fn decompose(&self, f: Vec<u32>) -> PyResult<(Element, Element)> {
        let f = vertex_set(&self.graph, f)?;
        let d = decompose(&self.nf, &f, &self.graph);
        Ok((self.with(d.p), self.with(d.r)))
    }

    fn in_rf(&self, f: Vec<u32>) -> PyResult<bool> {
        let f = vertex_set(&self.graph, f)?;
        Ok(in_rf(&self.nf, &f, &self.graph))
    }

    fn left_coset_rep(&self, f: Vec<u32>) -> PyResult<Element> {
        let f = vertex_set(&self.graph, f)?;
        Ok(self.with(left_coset_rep(&self.nf, &f, &self.graph)))
    }
}

/// The Cayley graph for the vertex-group generators, explored on demand.
#[pyclass(frozen, module = "graphprod_py")]
struct Cayley {
    inner: CayleyGraph,
}

#[pymethods]
impl Cayley {
    fn distance(&self, x: &Element, y: &Element) -> u32 {
        self.inner.distance(&x.nf, &y.nf)
    }

    fn neighbors(&self, x: &Element) -> Vec<String> {
        self.inner
            .cayley_neighbors(&x.nf)
            .into_iter()
            .map(|(y, _)| y.to_string())
            .collect()
    }

    /// Ball about `center` (default the identity) as a dict.
    #[pyo3(signature = (radius, center=None, cap=100_000))]
    fn ball<'py>(
        &self,
        py: Python<'py>,
        radius: u32,
        center: Option<&Element>,
        cap: usize,
    ) -> PyResult<Bound<'py, PyDict>> {
        let c = center.map(|e| e.nf.clone()).unwrap_or_default();
        let ball = py.detach(|| ball_bfs(&self.inner, &c, radius, cap));
        let d = PyDict::new(py);
        d.set_item(
            "vertices",
            ball.vertices
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>(),
        )?;
        d.set_item("distances", ball.dist.clone())?;
        d.set_item("sphere_sizes", ball.sphere_sizes())?;
        d.set_item("edge_count", ball.edge_count())?;
        d.set_item("budget_exhausted", ball.budget_exhausted)?;
        Ok(d)
    }

    /// Four-point δ on the ball of `radius`, as `(delta, exhaustive, tuples_checked)`.
    #[pyo3(signature = (radius, seed=0))]
    fn four_point_delta(
        &self,
        py: Python<'_>,
        radius: u32,
        seed: u64,
    ) -> PyResult<(f64, bool, u64)> {
        let mut cfg = FourPointConfig::new(radius);
        cfg.seed = seed;
        let est = py
            .detach(|| four_point_delta(&self.inner, &cfg))
            .map_err(err)?;
        Ok((
            est.delta_four_point.as_f64(),
            est.exhaustive,
            est.tuples_checked,
        ))
    }
}

/// A vertex `(v, rho)` of the extension graph, standing for `rho G_v rho^-1`.
#[pyclass(frozen, module = "graphprod_py")]
struct ExtensionVertex {
    graph: Arc<DefiningGraph>,
    inner: ExtVertex,
}

#[pymethods]
impl ExtensionVertex {
    #[getter]
    fn base(&self) -> u32 {
        self.inner.base.0
    }

    #[getter]
    fn conjugator(&self) -> String {
        self.inner.conjugator.to_string()
    }

    /// Conjugation action `g . (v, rho) = (v, g rho)`.
    fn act(&self, g: &Element) -> ExtensionVertex {
        ExtensionVertex {
            graph: self.graph.clone(),
            inner: ext_act(&g.nf, &self.inner, &self.graph),
        }
    }

    fn adjacent(&self, other: &ExtensionVertex) -> bool {
        ext_adjacent(&self.inner, &other.inner, &self.graph)
    }

    fn __eq__(&self, other: &ExtensionVertex) -> bool {
        self.inner == other.inner
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.inner.hash(&mut h);
        h.finish()
    }

    fn __repr__(&self) -> String {
        self.inner.to_string()
    }
}

/// The semidirect product of the graph product with a finite graph action.
#[pyclass(frozen, module = "graphprod_py")]
struct Wreath {
    graph: Arc<DefiningGraph>,
    action: GraphAction,
}

#[pymethods]
impl Wreath {
    /// `action_json` is `{"perms": [{"name": ..., "map": [...]}, ...]}`.
    #[new]
    fn new(graph: &Graph, action_json: &str) -> PyResult<Self> {
        let action = GraphAction::from_json(action_json, &graph.inner).map_err(err)?;
        Ok(Wreath {
            graph: graph.inner.clone(),
            action,
        })
    }

    fn perms(&self) -> Vec<String> {
        self.action.perms().iter().map(|p| p.name.clone()).collect()
    }

    /// `(w1, g1)(w2, g2)` with elements given as `(word, perm)` pairs.
    fn mul(&self, x: (String, String), y: (String, String)) -> PyResult<(String, String)> {
        let w = CoreWreath::new(&self.graph, &self.action);
        let parse = |(word, perm): (String, String)| {
            let nf = NormalForm::parse(&word, &self.graph)?;
            w.elem(nf, &perm)
        };
        let xy = w
            .mul(&parse(x).map_err(err)?, &parse(y).map_err(err)?)
            .map_err(err)?;
        Ok((xy.word.to_string(), xy.actor))
    }

    /// Image of a Cayley vertex under `(word, perm)`.
    fn act(&self, x: (String, String), v: &str) -> PyResult<String> {
        let w = CoreWreath::new(&self.graph, &self.action);
        let elem = w
            .elem(NormalForm::parse(&x.0, &self.graph).map_err(err)?, &x.1)
            .map_err(err)?;
        let v = NormalForm::parse(v, &self.graph).map_err(err)?;
        Ok(w.act_on_cayley(&elem, &v).map_err(err)?.to_string())
    }
}

#[pymodule]
fn graphprod_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_class::<Element>()?;
    m.add_class::<Cayley>()?;
    m.add_class::<ExtensionVertex>()?;
    m.add_class::<Wreath>()?;
    Ok(())
}
