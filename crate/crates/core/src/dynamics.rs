//! Desk-scale dynamics of the conjugation action on the extension graph.
//!
//! Reports give order bounds, fixed sets inside a window and orbit traces. They
//! never classify an element as parabolic or loxodromic.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::explore::{ball_bfs, restricted_p_set};
use crate::extension::{ext_act, ext_stabilizer_test, ExtVertex, ExtensionWindow};
use crate::graph::{DefiningGraph, VertexId};
use crate::word::NormalForm;

pub const REPORT_HEADER: &str = "finite-window observations only: fixed sets and order bounds are reported, \
no element is classified as elliptic, parabolic or loxodromic, and no finite run can confirm or refute \
a convergence statement";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "status", content = "value")]
pub enum OrderStatus {
    Finite(usize),
    ExceedsBound(usize),
}

/// Least `n <= bound` with `g^n = e`; never claims infinite order.
pub fn bounded_order(g: &NormalForm, bound: usize, graph: &DefiningGraph) -> OrderStatus {
    let mut p = g.clone();
    for n in 1..=bound {
        if p.is_identity() {
            return OrderStatus::Finite(n);
        }
        p = p.mul(g, graph);
    }
    OrderStatus::ExceedsBound(bound)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixedReport {
    pub header: &'static str,
    pub element: NormalForm,
    pub root: ExtVertex,
    pub window: u32,
    pub radius: u32,
    pub explored: usize,
    pub fixed: Vec<ExtVertex>,
    pub budget_exhausted: bool,
}

/// Vertices of the radius-`radius` ball about `root` in the window graph that `g` fixes.
pub fn fixed_ext_vertices(
    g: &NormalForm,
    root: &ExtVertex,
    window: u32,
    radius: u32,
    graph: &DefiningGraph,
    cap: usize,
) -> Result<FixedReport> {
    let win = ExtensionWindow::new(graph, window, cap)?;
    let ball = ball_bfs(&win, root, radius, cap);
    let mut fixed: Vec<ExtVertex> = ball
        .vertices
        .iter()
        .filter(|x| ext_act(g, x, graph) == **x)
        .cloned()
        .collect();
    fixed.sort();
    Ok(FixedReport {
        header: REPORT_HEADER,
        element: g.clone(),
        root: root.clone(),
        window,
        radius,
        explored: ball.len(),
        fixed,
        budget_exhausted: ball.budget_exhausted,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WanderStep {
    pub index: usize,
    pub element: NormalForm,
    pub image: ExtVertex,
    pub distinct: bool,
    /// Membership of the image in `P(v, I)` for each supplied edge set.
    pub in_p_set: Vec<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WanderTrace {
    pub header: &'static str,
    pub v: VertexId,
    pub w: VertexId,
    pub window: u32,
    pub steps: Vec<WanderStep>,
    pub all_distinct: bool,
    /// For each edge set, the first index from which every image lies in `P(v, I)`.
    pub settled_from: Vec<Option<usize>>,
}

/// Moves `(w, e)` by each element of `seq`, which must fix `(v, e)`, and records
/// where the images land relative to `P((v, e), I)` for each edge set `I`.
pub fn wandering_orbit_experiment(
    v: VertexId,
    w: VertexId,
    seq: &[NormalForm],
    edge_sets: &[Vec<(ExtVertex, ExtVertex)>],
    graph: &DefiningGraph,
    cap: usize,
) -> Result<WanderTrace> {
    graph.check_vertex(v)?;
    graph.check_vertex(w)?;
    if !graph.adjacent(v, w) {
        return Err(Error::NotInLink { v, w });
    }
    if seq.iter().any(|g| !ext_stabilizer_test(g, v, graph)) {
        return Err(Error::NotInStabilizer(v));
    }
    let root = ExtVertex::root(v);
    let images: Vec<ExtVertex> = seq
        .iter()
        .map(|g| ext_act(g, &ExtVertex::root(w), graph))
        .collect();
    let window = images
        .iter()
        .chain(edge_sets.iter().flatten().flat_map(|(a, b)| [a, b]))
        .map(|x| x.conjugator.len() as u32)
        .max()
        .unwrap_or(0);
    let win = ExtensionWindow::new(graph, window, cap)?.with_origin(root.clone());
    let mut members: Vec<HashSet<ExtVertex>> = Vec::new();
    for set in edge_sets {
        let p = restricted_p_set(&win, &root, set, 1, cap);
        if p.budget_exhausted {
            return Err(Error::CapExceeded { cap });
        }
        members.push(p.members.into_iter().collect());
    }
    let mut seen = HashSet::new();
    let mut steps = Vec::with_capacity(seq.len());
    for (index, (g, image)) in seq.iter().zip(images).enumerate() {
        let distinct = seen.insert(image.clone());
        let in_p_set = members.iter().map(|m| m.contains(&image)).collect();
        steps.push(WanderStep {
            index,
            element: g.clone(),
            image,
            distinct,
            in_p_set,
        });
    }
    let settled_from = (0..edge_sets.len())
        .map(|k| {
            let last_out = steps.iter().rposition(|s| !s.in_p_set[k]);
            match last_out {
                None => Some(0),
                Some(i) if i + 1 < steps.len() => Some(i + 1),
                Some(_) => None,
            }
        })
        .collect();
    Ok(WanderTrace {
        header: REPORT_HEADER,
        v,
        w,
        window,
        all_distinct: steps.iter().all(|s| s.distinct),
        steps,
        settled_from,
    })
}
