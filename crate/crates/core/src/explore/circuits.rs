//! Girth and circuit enumeration through a fixed edge.
//!
//! Circuits are counted as cyclic subgraphs: one per vertex cycle, up to
//! rotation and reversal. The count of based, oriented circuits is
//! `2 * length` times larger and is reported alongside.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::ExplorableGraph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "kind", content = "value")]
pub enum Girth {
    Finite(u32),
    /// The whole graph was explored and has no circuit.
    Infinite,
    /// No circuit of length at most the given bound passes through the origin.
    Unknown {
        exceeds: u32,
    },
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "inf"),
            Girth::Unknown { exceeds } => write!(f, "unknown(>{exceeds})"),
        }
    }
}

/// Shortest circuit through any vertex explored within `search_radius` of the seeds.
pub fn girth<G: ExplorableGraph>(g: &G, search_radius: u32, cap: usize) -> Girth {
    // multi-source exploration of the region
    let mut index: HashMap<G::Vertex, usize> = HashMap::new();
    let mut vertices = Vec::new();
    let mut dist = Vec::new();
    let mut truncated = false;
    for s in g.seeds() {
        if !index.contains_key(&s) {
            index.insert(s.clone(), vertices.len());
            vertices.push(s);
            dist.push(0u32);
        }
    }
    let mut adj: Vec<Vec<usize>> = Vec::new();
    let mut leaves_region = false;
    let mut expanded = 0;
    while expanded < vertices.len() {
        let i = expanded;
        expanded += 1;
        let nbrs = g.neighbors(&vertices[i]);
        let mut inside = Vec::with_capacity(nbrs.len());
        for w in nbrs {
            if let Some(&j) = index.get(&w) {
                inside.push(j);
            } else if dist[i] < search_radius && vertices.len() < cap {
                index.insert(w.clone(), vertices.len());
                vertices.push(w);
                dist.push(dist[i] + 1);
                inside.push(vertices.len() - 1);
            } else {
                leaves_region = true;
                truncated |= dist[i] < search_radius;
            }
        }
        adj.push(inside);
    }
    // neighbour lists of early vertices miss later discoveries; symmetrize
    let n = vertices.len();
    let mut sym: Vec<HashSet<usize>> = vec![HashSet::new(); n];
    for (i, l) in adj.iter().enumerate() {
        for &j in l {
            sym[i].insert(j);
            sym[j].insert(i);
        }
    }
    let sym: Vec<Vec<usize>> = sym
        .into_iter()
        .map(|s| {
            let mut v: Vec<usize> = s.into_iter().collect();
            v.sort_unstable();
            v
        })
        .collect();

    let mut best: Option<u32> = None;
    for root in 0..n {
        let mut d = vec![u32::MAX; n];
        let mut parent = vec![usize::MAX; n];
        d[root] = 0;
        let mut q = VecDeque::from([root]);
        while let Some(x) = q.pop_front() {
            if best.is_some_and(|b| 2 * d[x] >= b) {
                break;
            }
            for &y in &sym[x] {
                if d[y] == u32::MAX {
                    d[y] = d[x] + 1;
                    parent[y] = x;
                    q.push_back(y);
                } else if parent[x] != y {
                    let len = d[x] + d[y] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    match best {
        Some(b) => Girth::Finite(b),
        None if !leaves_region && !truncated => Girth::Infinite,
        None => Girth::Unknown {
            exceeds: 2 * search_radius + 1,
        },
    }
}

/// Rotates a vertex cycle to start at its least vertex and picks the smaller direction.
pub fn canonical_circuit<V: Clone + Ord>(cycle: &[V]) -> Vec<V> {
    let n = cycle.len();
    if n == 0 {
        return Vec::new();
    }
    let start = (0..n).min_by(|&a, &b| cycle[a].cmp(&cycle[b])).unwrap();
    let forward: Vec<V> = (0..n).map(|k| cycle[(start + k) % n].clone()).collect();
    let backward: Vec<V> = (0..n).map(|k| cycle[(start + n - k) % n].clone()).collect();
    forward.min(backward)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CircuitReport<V> {
    pub edge: (V, V),
    pub max_length: usize,
    pub circuits: Vec<Vec<V>>,
    pub count: usize,
    pub based_count: usize,
    pub truncated: bool,
}

/// Walks every simple path `y -> ... -> x` closing a circuit with the edge `(x, y)`.
/// The callback gets the circuit as `[x, y, ...]` and returns `false` to stop.
fn walk_circuits<G: ExplorableGraph>(
    g: &G,
    x: &G::Vertex,
    y: &G::Vertex,
    n: usize,
    mut visit: impl FnMut(&[G::Vertex]) -> bool,
) -> Result<()> {
    if !g.neighbors(x).contains(y) {
        return Err(Error::NotAnEdge);
    }
    let mut path = vec![x.clone(), y.clone()];
    let mut on_path: HashSet<G::Vertex> = path.iter().cloned().collect();
    // explicit stack of neighbour iterators
    let mut stack: Vec<(Vec<G::Vertex>, usize)> = vec![(g.neighbors(y), 0)];
    while let Some((nbrs, pos)) = stack.last_mut() {
        if *pos >= nbrs.len() {
            stack.pop();
            let v = path.pop().unwrap();
            on_path.remove(&v);
            continue;
        }
        let w = nbrs[*pos].clone();
        *pos += 1;
        if &w == x {
            if path.len() >= 3 && !visit(&path) {
                return Ok(());
            }
        } else if !on_path.contains(&w) && path.len() < n {
            on_path.insert(w.clone());
            let next = g.neighbors(&w);
            path.push(w);
            stack.push((next, 0));
        }
    }
    Ok(())
}

/// All circuits of length `3..=n` through the edge `e`, stopping after `cap` of them.
pub fn circuits_through_edge<G: ExplorableGraph>(
    g: &G,
    e: &(G::Vertex, G::Vertex),
    n: usize,
    cap: usize,
) -> Result<CircuitReport<G::Vertex>> {
    let mut circuits = Vec::new();
    let mut truncated = false;
    walk_circuits(g, &e.0, &e.1, n, |c| {
        if circuits.len() >= cap {
            truncated = true;
            return false;
        }
        circuits.push(canonical_circuit(c));
        true
    })?;
    circuits.sort();
    let based_count = circuits.iter().map(|c| 2 * c.len()).sum();
    Ok(CircuitReport {
        edge: e.clone(),
        max_length: n,
        count: circuits.len(),
        based_count,
        circuits,
        truncated,
    })
}

/// Circuit counts through `e` bucketed by exact length (index = length).
pub fn count_circuits_through_edge<G: ExplorableGraph>(
    g: &G,
    e: &(G::Vertex, G::Vertex),
    n: usize,
    cap: usize,
) -> Result<Vec<usize>> {
    let mut by_len = vec![0usize; n + 1];
    let mut total = 0usize;
    let mut over = false;
    walk_circuits(g, &e.0, &e.1, n, |c| {
        if total >= cap {
            over = true;
            return false;
        }
        total += 1;
        by_len[c.len()] += 1;
        true
    })?;
    if over {
        return Err(Error::CapExceeded { cap });
    }
    Ok(by_len)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FinenessRow<V> {
    pub edge: (V, V),
    /// `counts[k]` is the number of circuits of length at most `k + 3`.
    pub counts: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FinenessTable<V> {
    pub n_max: usize,
    pub rows: Vec<FinenessRow<V>>,
    /// Empirical `f(n)` for `n = 3..=n_max`: the maximum over the sampled edges.
    pub max_per_n: Vec<usize>,
}

pub fn fineness_probe<G: ExplorableGraph>(
    g: &G,
    edges: &[(G::Vertex, G::Vertex)],
    n_max: usize,
    cap: usize,
) -> Result<FinenessTable<G::Vertex>> {
    let n_max = n_max.max(3);
    let rows = edges
        .par_iter()
        .map(|e| {
            let by_len = count_circuits_through_edge(g, e, n_max, cap)?;
            let mut acc = 0;
            let counts = (3..=n_max)
                .map(|k| {
                    acc += by_len[k];
                    acc
                })
                .collect();
            Ok(FinenessRow {
                edge: e.clone(),
                counts,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut max_per_n = vec![0usize; n_max - 2];
    for row in &rows {
        for (m, &c) in max_per_n.iter_mut().zip(&row.counts) {
            *m = (*m).max(c);
        }
    }
    Ok(FinenessTable {
        n_max,
        rows,
        max_per_n,
    })
}
