//! The Cayley graph of a graph product with respect to all nontrivial syllables.
//!
//! Never materialized: neighbours come from the word engine on demand. An
//! optional neighbour cache is keyed by normal form and bounded in size.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use serde::Serialize;

use crate::explore::ExplorableGraph;
use crate::graph::DefiningGraph;
use crate::word::{NormalForm, Syllable};

pub struct CayleyGraph {
    graph: Arc<DefiningGraph>,
    generators: Vec<Syllable>,
    cache: RwLock<HashMap<NormalForm, Arc<Vec<NormalForm>>>>,
    cache_cap: usize,
}

impl CayleyGraph {
    pub fn new(graph: &DefiningGraph) -> Self {
        Self::from_arc(Arc::new(graph.clone()))
    }

    pub fn from_arc(graph: Arc<DefiningGraph>) -> Self {
        let generators = graph
            .vertices()
            .flat_map(|v| {
                graph
                    .group(v)
                    .nontrivial()
                    .map(move |e| Syllable { vertex: v, elem: e })
            })
            .collect();
        CayleyGraph {
            graph,
            generators,
            cache: RwLock::new(HashMap::new()),
            cache_cap: 0,
        }
    }

    /// Caches neighbour lists of up to `cap` vertices.
    pub fn with_cache(mut self, cap: usize) -> Self {
        self.cache_cap = cap;
        self
    }

    pub fn graph(&self) -> &DefiningGraph {
        &self.graph
    }

    /// Every nontrivial syllable, ordered by vertex then element.
    pub fn generators(&self) -> &[Syllable] {
        &self.generators
    }

    pub fn degree(&self) -> usize {
        self.generators.len()
    }

    pub fn cached(&self) -> usize {
        self.cache.read().unwrap().len()
    }

    /// `x * s` for every generator `s`, with `s` as the edge label.
    pub fn cayley_neighbors(&self, x: &NormalForm) -> Vec<(NormalForm, Syllable)> {
        self.generators
            .iter()
            .map(|&s| (x.mul_syllable(s, &self.graph), s))
            .collect()
    }

    /// The label of the edge from `x` to `y`, if they are adjacent.
    pub fn edge_label(&self, x: &NormalForm, y: &NormalForm) -> Option<Syllable> {
        let step = x.inverse(&self.graph).mul(y, &self.graph);
        match step.syllables() {
            [s] => Some(*s),
            _ => None,
        }
    }

    pub fn distance(&self, x: &NormalForm, y: &NormalForm) -> u32 {
        x.inverse(&self.graph).mul(y, &self.graph).len() as u32
    }
}

impl ExplorableGraph for CayleyGraph {
    type Vertex = NormalForm;

    fn origin(&self) -> NormalForm {
        NormalForm::identity()
    }

    fn neighbors(&self, x: &NormalForm) -> Vec<NormalForm> {
        if self.cache_cap > 0 {
            if let Some(hit) = self.cache.read().unwrap().get(x) {
                return hit.as_ref().clone();
            }
        }
        let out: Vec<NormalForm> = self
            .generators
            .iter()
            .map(|&s| x.mul_syllable(s, &self.graph))
            .collect();
        if self.cache_cap > 0 {
            let mut cache = self.cache.write().unwrap();
            if cache.len() < self.cache_cap {
                cache.insert(x.clone(), Arc::new(out.clone()));
            }
        }
        out
    }

    /// Word metric: `d(x, y) = ||x^-1 y||`.
    fn exact_distance(&self, a: &NormalForm, b: &NormalForm) -> Option<u32> {
        Some(self.distance(a, b))
    }
}

/// Distance in the defining graph between the vertices carrying two labels.
pub fn edge_label_distance_check(l1: Syllable, l2: Syllable, graph: &DefiningGraph) -> Option<u32> {
    graph.set_distance(&[l1.vertex], &[l2.vertex])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabeledEdge {
    pub from: NormalForm,
    pub to: NormalForm,
    pub label: Syllable,
}
