//! JSON-lines records and DOT export.

use std::fmt::Write as _;

use serde::Serialize;

use crate::explore::Ball;
use crate::extension::ExtVertex;

/// Budgets behind a report. Every record carries them.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Budget {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radius: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cap: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub window: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order_bound: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub budget_exhausted: bool,
}

#[derive(Serialize)]
struct Record<'a, T: Serialize> {
    kind: &'a str,
    budget: &'a Budget,
    #[serde(flatten)]
    body: &'a T,
}

/// One JSON object on one line, `{"kind": ..., "budget": ..., <body fields>}`.
/// `body` must serialize as a map.
pub fn json_line<T: Serialize>(kind: &str, budget: &Budget, body: &T) -> String {
    serde_json::to_string(&Record { kind, budget, body }).expect("report bodies serialize")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DotNode {
    pub label: String,
    /// Nodes in the same class share a colour.
    pub class: usize,
}

/// A small undirected graph ready for DOT output.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DotGraph {
    pub name: String,
    pub nodes: Vec<DotNode>,
    pub edges: Vec<(usize, usize)>,
}

const PALETTE: &[&str] = &[
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#ffff33", "#a65628", "#f781bf",
    "#999999",
];

impl DotGraph {
    pub fn to_dot(&self) -> String {
        let mut out = format!("digraph {} {{\n  edge [dir=none];\n", self.name);
        for (i, n) in self.nodes.iter().enumerate() {
            let _ = writeln!(
                out,
                "  n{i} [label=\"{}\", style=filled, fillcolor=\"{}\"];",
                n.label.replace('"', "\\\""),
                PALETTE[n.class % PALETTE.len()]
            );
        }
        for (a, b) in &self.edges {
            let _ = writeln!(out, "  n{a} -> n{b};");
        }
        out.push_str("}\n");
        out
    }
}

/// Ball export with one colour per sphere. Vertex order is the ball's, which
/// is sorted by canonical key inside each sphere.
pub fn ball_dot<V>(ball: &Ball<V>, name: &str, label: impl Fn(&V) -> String) -> DotGraph
where
    V: Clone + Eq + std::hash::Hash,
{
    DotGraph {
        name: name.to_string(),
        nodes: ball
            .vertices
            .iter()
            .zip(&ball.dist)
            .map(|(v, &d)| DotNode {
                label: label(v),
                class: d as usize,
            })
            .collect(),
        edges: ball.edge_indices(),
    }
}

/// Extension-graph ball export, coloured by base vertex.
pub fn ext_ball_dot(ball: &Ball<ExtVertex>, name: &str) -> DotGraph {
    let mut g = ball_dot(ball, name, |x| x.to_string());
    for (node, x) in g.nodes.iter_mut().zip(&ball.vertices) {
        node.class = x.base.idx();
    }
    g
}
