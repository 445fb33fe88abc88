//! Finite-radius algorithms over implicitly given graphs.
//!
//! Everything here works through [`ExplorableGraph`]: a vertex type with a
//! canonical encoding (its `Ord`/`Hash`), a neighbour function and an origin.
//! Infinite graphs are only ever explored inside explicit budgets, and every
//! report says whether a budget was hit.

mod ball;
mod circuits;
mod hyperbolic;
mod paths;

use std::fmt::Debug;
use std::hash::Hash;

pub use ball::{ball_bfs, Ball, BallReport, Distances};
pub use circuits::{
    canonical_circuit, circuits_through_edge, count_circuits_through_edge, fineness_probe, girth,
    CircuitReport, FinenessRow, FinenessTable, Girth,
};
pub use hyperbolic::{
    bigon_check, four_point_delta, gromov_product, Basepoints, BigonConfig, BigonOutcome,
    BigonReport, BigonWitness, DeltaEstimate, FourPointConfig, HalfInt, WitnessKind,
};
pub use paths::{geodesics, restricted_p_set, GeodesicSet, PSet};

use crate::graph::{DefiningGraph, VertexId};

pub trait ExplorableGraph: Sync {
    type Vertex: Clone + Eq + Hash + Ord + Debug + Send + Sync;

    fn origin(&self) -> Self::Vertex;

    /// Neighbours of `v`, without duplicates.
    fn neighbors(&self, v: &Self::Vertex) -> Vec<Self::Vertex>;

    /// Vertices from which whole-graph searches (girth) start.
    fn seeds(&self) -> Vec<Self::Vertex> {
        vec![self.origin()]
    }

    /// Exact graph distance when the graph knows a closed form for it.
    fn exact_distance(&self, _a: &Self::Vertex, _b: &Self::Vertex) -> Option<u32> {
        None
    }
}

/// A plain finite graph on `0..n`, mostly for tests and small experiments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGraph {
    adj: Vec<Vec<u32>>,
    origin: u32,
}

impl FiniteGraph {
    pub fn new(n: usize, edges: &[(u32, u32)]) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a != b && !adj[a as usize].contains(&b) {
                adj[a as usize].push(b);
                adj[b as usize].push(a);
            }
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        FiniteGraph { adj, origin: 0 }
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<(u32, u32)> = (0..n as u32).map(|i| (i, (i + 1) % n as u32)).collect();
        Self::new(n, &edges)
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<(u32, u32)> = (1..n as u32).map(|i| (i - 1, i)).collect();
        Self::new(n, &edges)
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for a in 0..n as u32 {
            for b in a + 1..n as u32 {
                edges.push((a, b));
            }
        }
        Self::new(n, &edges)
    }

    pub fn with_origin(mut self, origin: u32) -> Self {
        self.origin = origin;
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for (a, l) in self.adj.iter().enumerate() {
            for &b in l {
                if (a as u32) < b {
                    out.push((a as u32, b));
                }
            }
        }
        out
    }
}

impl ExplorableGraph for FiniteGraph {
    type Vertex = u32;

    fn origin(&self) -> u32 {
        self.origin
    }

    fn neighbors(&self, v: &u32) -> Vec<u32> {
        self.adj[*v as usize].clone()
    }

    fn seeds(&self) -> Vec<u32> {
        (0..self.adj.len() as u32).collect()
    }
}

impl ExplorableGraph for DefiningGraph {
    type Vertex = VertexId;

    fn origin(&self) -> VertexId {
        VertexId(0)
    }

    fn neighbors(&self, v: &VertexId) -> Vec<VertexId> {
        self.link(*v).to_vec()
    }

    fn seeds(&self) -> Vec<VertexId> {
        self.vertices().collect()
    }
}
