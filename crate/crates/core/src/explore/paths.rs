use std::collections::HashSet;

use serde::Serialize;

use super::ball::{ball_bfs, ball_until, Ball};
use super::ExplorableGraph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeodesicSet<V> {
    pub distance: u32,
    /// Each path lists its vertices from the source to the target.
    pub paths: Vec<Vec<V>>,
    pub overflow: bool,
}

impl<V: Clone + Eq + std::hash::Hash> Ball<V> {
    /// All geodesics from the centre to vertex `t`, as index paths, at most `cap` of them.
    pub fn geodesic_paths(&self, t: usize, cap: usize) -> (Vec<Vec<usize>>, bool) {
        let mut out = Vec::new();
        let mut overflow = false;
        let mut stack = vec![t];
        self.collect_back(&mut stack, cap, &mut out, &mut overflow);
        (out, overflow)
    }

    fn collect_back(
        &self,
        stack: &mut Vec<usize>,
        cap: usize,
        out: &mut Vec<Vec<usize>>,
        overflow: &mut bool,
    ) {
        if *overflow {
            return;
        }
        let top = *stack.last().unwrap();
        if self.dist[top] == 0 {
            if out.len() >= cap {
                *overflow = true;
                return;
            }
            out.push(stack.iter().rev().copied().collect());
            return;
        }
        let preds: Vec<usize> = self.predecessors(top).collect();
        for p in preds {
            stack.push(p);
            self.collect_back(stack, cap, out, overflow);
            stack.pop();
        }
    }
}

/// All geodesics from `a` to `b`. `vertex_cap` bounds the search, `path_cap` the output.
pub fn geodesics<G: ExplorableGraph>(
    g: &G,
    a: &G::Vertex,
    b: &G::Vertex,
    vertex_cap: usize,
    path_cap: usize,
) -> Result<GeodesicSet<G::Vertex>> {
    let max_radius = g.exact_distance(a, b).unwrap_or(u32::MAX);
    let ball = ball_until(g, a, b, max_radius, vertex_cap);
    let Some(t) = ball.index_of(b) else {
        return Err(if ball.budget_exhausted {
            Error::CapExceeded { cap: vertex_cap }
        } else {
            Error::Unreachable
        });
    };
    let (paths, overflow) = ball.geodesic_paths(t, path_cap);
    Ok(GeodesicSet {
        distance: ball.dist[t],
        paths: paths
            .into_iter()
            .map(|p| p.into_iter().map(|i| ball.vertices[i].clone()).collect())
            .collect(),
        overflow,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PSet<V> {
    pub members: Vec<V>,
    pub excluded: Vec<V>,
    pub budget_exhausted: bool,
}

/// Vertices `b` within `domain_radius` of `a` such that no geodesic from `a`
/// to `b` crosses an edge of `forbidden` (in either orientation).
pub fn restricted_p_set<G: ExplorableGraph>(
    g: &G,
    a: &G::Vertex,
    forbidden: &[(G::Vertex, G::Vertex)],
    domain_radius: u32,
    cap: usize,
) -> PSet<G::Vertex> {
    let ball = ball_bfs(g, a, domain_radius, cap);
    let blocked: HashSet<(usize, usize)> = forbidden
        .iter()
        .filter_map(|(x, y)| {
            let (i, j) = (ball.index_of(x)?, ball.index_of(y)?);
            Some((i.min(j), i.max(j)))
        })
        .collect();
    // vertices are in BFS order, so predecessors are settled first
    let mut tainted = vec![false; ball.len()];
    for i in 1..ball.len() {
        tainted[i] = ball
            .predecessors(i)
            .any(|j| tainted[j] || blocked.contains(&(i.min(j), i.max(j))));
    }
    let mut members = Vec::new();
    let mut excluded = Vec::new();
    for (i, v) in ball.vertices.iter().enumerate() {
        if tainted[i] {
            excluded.push(v.clone());
        } else {
            members.push(v.clone());
        }
    }
    PSet {
        members,
        excluded,
        budget_exhausted: ball.budget_exhausted,
    }
}
