//! Right cosets of the special subgroups `F𝒢 = <G_v | v in F>`.
//!
//! `R_F` is the set of elements none of whose normal forms starts with a
//! syllable on `F`. Every element factors uniquely as `p * r` with `p` in `F𝒢`
//! and `r` in `R_F`; `p` is obtained by peeling off front-movable syllables on
//! `F` until none are left.

use serde::Serialize;

use crate::graph::{DefiningGraph, VertexSet};
use crate::word::{NormalForm, Syllable};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetDecomposition {
    pub p: NormalForm,
    pub r: NormalForm,
}

pub fn in_fg(g: &NormalForm, f: &VertexSet) -> bool {
    g.support_within(f)
}

/// Index of the first syllable on `F` that commutes with everything before it.
fn front_movable_in(s: &[Syllable], f: &VertexSet, graph: &DefiningGraph) -> Option<usize> {
    (0..s.len()).find(|&j| {
        f.contains(s[j].vertex) && s[..j].iter().all(|t| graph.adjacent(t.vertex, s[j].vertex))
    })
}

pub fn in_rf(g: &NormalForm, f: &VertexSet, graph: &DefiningGraph) -> bool {
    front_movable_in(g.syllables(), f, graph).is_none()
}

pub fn decompose(g: &NormalForm, f: &VertexSet, graph: &DefiningGraph) -> CosetDecomposition {
    let mut rest: Vec<Syllable> = g.syllables().to_vec();
    let mut prefix = Vec::new();
    while let Some(j) = front_movable_in(&rest, f, graph) {
        prefix.push(rest.remove(j));
    }
    CosetDecomposition {
        p: NormalForm::from_syllables(prefix, graph),
        r: NormalForm::from_syllables(rest, graph),
    }
}

pub fn p_f(g: &NormalForm, f: &VertexSet, graph: &DefiningGraph) -> NormalForm {
    decompose(g, f, graph).p
}

pub fn r_f(g: &NormalForm, f: &VertexSet, graph: &DefiningGraph) -> NormalForm {
    decompose(g, f, graph).r
}

/// Canonical representative of the left coset `g F𝒢`: the shortest element in it.
pub fn left_coset_rep(g: &NormalForm, f: &VertexSet, graph: &DefiningGraph) -> NormalForm {
    r_f(&g.inverse(graph), f, graph).inverse(graph)
}
