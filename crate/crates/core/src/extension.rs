//! The extension graph: vertices are conjugates `g G_v g^-1`, adjacent when
//! they commute elementwise. Conjugation by the graph product acts on it.
//!
//! A conjugate is stored as `(v, rho)` with `rho` the shortest element of the
//! coset `g St(v)`, where `St(v)` is generated by the groups on the star of
//! `v`; that subgroup is the normalizer of `G_v`, so the pair is a complete
//! invariant. Links can be infinite, so explorations use a window: only
//! conjugators of length at most `L`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use rayon::prelude::*;

use serde::Serialize;

use crate::cayley::CayleyGraph;
use crate::coset::left_coset_rep;
use crate::error::{Error, Result};
use crate::explore::{ball_bfs, ExplorableGraph};
use crate::graph::{DefiningGraph, VertexId};
use crate::word::{NormalForm, Syllable};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ExtVertex {
    pub base: VertexId,
    pub conjugator: NormalForm,
}

impl ExtVertex {
    /// `(v, e)`, the copy of `v` itself.
    pub fn root(v: VertexId) -> Self {
        ExtVertex {
            base: v,
            conjugator: NormalForm::identity(),
        }
    }
}

impl fmt::Display for ExtVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.base, self.conjugator)
    }
}

pub fn canonicalize_ext(v: VertexId, g: &NormalForm, graph: &DefiningGraph) -> Result<ExtVertex> {
    graph.check_vertex(v)?;
    Ok(ExtVertex {
        base: v,
        conjugator: left_coset_rep(g, &graph.star_set(v), graph),
    })
}

pub fn ext_equal_and_vmap(x: &ExtVertex, y: &ExtVertex) -> (bool, VertexId) {
    (x == y, x.base)
}

/// The nontrivial elements of `rho G_v rho^-1`.
fn conjugates(x: &ExtVertex, graph: &DefiningGraph) -> Vec<NormalForm> {
    graph
        .group(x.base)
        .nontrivial()
        .map(|e| {
            let s = NormalForm::syllable(Syllable {
                vertex: x.base,
                elem: e,
            });
            x.conjugator.conjugate(&s, graph)
        })
        .collect()
}

pub fn ext_adjacent(x: &ExtVertex, y: &ExtVertex, graph: &DefiningGraph) -> bool {
    if x == y {
        return false;
    }
    let (cx, cy) = (conjugates(x, graph), conjugates(y, graph));
    cx.iter()
        .all(|a| cy.iter().all(|b| a.mul(b, graph) == b.mul(a, graph)))
}

/// `g . x = g x g^-1`.
pub fn ext_act(g: &NormalForm, x: &ExtVertex, graph: &DefiningGraph) -> ExtVertex {
    ExtVertex {
        base: x.base,
        conjugator: left_coset_rep(&g.mul(&x.conjugator, graph), &graph.star_set(x.base), graph),
    }
}

/// Whether `g` fixes `(v, e)`.
pub fn ext_stabilizer_test(g: &NormalForm, v: VertexId, graph: &DefiningGraph) -> bool {
    ext_act(g, &ExtVertex::root(v), graph) == ExtVertex::root(v)
}

/// Every extension vertex whose canonical conjugator has length at most `window`,
/// sorted. Errors when the conjugator ball exceeds `cap`.
pub fn window_vertices(graph: &DefiningGraph, window: u32, cap: usize) -> Result<Vec<ExtVertex>> {
    let cayley = CayleyGraph::new(graph);
    let ball = ball_bfs(&cayley, &NormalForm::identity(), window, cap);
    if ball.budget_exhausted {
        return Err(Error::CapExceeded { cap });
    }
    let mut out = Vec::new();
    for v in graph.vertices() {
        let star = graph.star_set(v);
        for rho in &ball.vertices {
            // canonical representatives are exactly the conjugators with nothing on St(v) at the end
            if left_coset_rep(rho, &star, graph) == *rho {
                out.push(ExtVertex {
                    base: v,
                    conjugator: rho.clone(),
                });
            }
        }
    }
    out.sort();
    Ok(out)
}

pub fn ext_neighbors_windowed(
    x: &ExtVertex,
    window: u32,
    graph: &DefiningGraph,
    cap: usize,
) -> Result<Vec<ExtVertex>> {
    Ok(window_vertices(graph, window, cap)?
        .into_iter()
        .filter(|y| ext_adjacent(x, y, graph))
        .collect())
}

/// The finite induced subgraph of the extension graph on conjugators of length
/// at most `window`. Adjacency is computed lazily and cached per vertex.
pub struct ExtensionWindow {
    graph: Arc<DefiningGraph>,
    window: u32,
    origin: ExtVertex,
    vertices: Vec<ExtVertex>,
    conj: Vec<Vec<NormalForm>>,
    adj: RwLock<HashMap<usize, Arc<Vec<usize>>>>,
}

impl ExtensionWindow {
    pub fn new(graph: &DefiningGraph, window: u32, cap: usize) -> Result<Self> {
        let vertices = window_vertices(graph, window, cap)?;
        let conj = vertices.iter().map(|x| conjugates(x, graph)).collect();
        Ok(ExtensionWindow {
            graph: Arc::new(graph.clone()),
            window,
            origin: ExtVertex::root(VertexId(0)),
            vertices,
            conj,
            adj: RwLock::new(HashMap::new()),
        })
    }

    pub fn with_origin(mut self, origin: ExtVertex) -> Self {
        self.origin = origin;
        self
    }

    pub fn graph(&self) -> &DefiningGraph {
        &self.graph
    }

    pub fn window(&self) -> u32 {
        self.window
    }

    pub fn vertices(&self) -> &[ExtVertex] {
        &self.vertices
    }

    pub fn contains(&self, x: &ExtVertex) -> bool {
        self.vertices.binary_search(x).is_ok()
    }

    fn adjacent_indices(&self, i: usize) -> Arc<Vec<usize>> {
        if let Some(hit) = self.adj.read().unwrap().get(&i) {
            return hit.clone();
        }
        let g = &*self.graph;
        let mine = &self.conj[i];
        let found: Vec<usize> = (0..self.vertices.len())
            .into_par_iter()
            .filter(|&j| {
                i != j
                    && mine
                        .iter()
                        .all(|a| self.conj[j].iter().all(|b| a.mul(b, g) == b.mul(a, g)))
            })
            .collect();
        let found = Arc::new(found);
        self.adj.write().unwrap().insert(i, found.clone());
        found
    }
}

impl ExplorableGraph for ExtensionWindow {
    type Vertex = ExtVertex;

    fn origin(&self) -> ExtVertex {
        self.origin.clone()
    }

    fn neighbors(&self, x: &ExtVertex) -> Vec<ExtVertex> {
        match self.vertices.binary_search(x) {
            Ok(i) => self
                .adjacent_indices(i)
                .iter()
                .map(|&j| self.vertices[j].clone())
                .collect(),
            Err(_) => Vec::new(),
        }
    }

    fn seeds(&self) -> Vec<ExtVertex> {
        self.vertices.clone()
    }
}
