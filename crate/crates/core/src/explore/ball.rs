use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use super::ExplorableGraph;

/// An explored ball: vertices in BFS order (sorted within each sphere),
/// their distances from the centre and the adjacency induced on the ball.
#[derive(Debug, Clone)]
pub struct Ball<V> {
    pub center: V,
    pub radius: u32,
    pub vertices: Vec<V>,
    pub dist: Vec<u32>,
    pub adj: Vec<Vec<usize>>,
    index: HashMap<V, usize>,
    sphere_starts: Vec<usize>,
    /// The vertex cap cut the exploration short.
    pub budget_exhausted: bool,
    /// No edge leaves the ball, so it is a whole connected component.
    pub complete: bool,
}

/// Serializable summary of a [`Ball`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BallReport {
    pub radius: u32,
    pub sphere_sizes: Vec<usize>,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub budget_exhausted: bool,
    pub complete: bool,
}

pub fn ball_bfs<G: ExplorableGraph>(
    g: &G,
    center: &G::Vertex,
    radius: u32,
    cap: usize,
) -> Ball<G::Vertex> {
    explore(g, center, radius, cap, None)
}

/// Like [`ball_bfs`], but stops at the first sphere containing `target`.
pub(crate) fn ball_until<G: ExplorableGraph>(
    g: &G,
    center: &G::Vertex,
    target: &G::Vertex,
    max_radius: u32,
    cap: usize,
) -> Ball<G::Vertex> {
    explore(g, center, max_radius, cap, Some(target))
}

fn explore<G: ExplorableGraph>(
    g: &G,
    center: &G::Vertex,
    mut radius: u32,
    cap: usize,
    target: Option<&G::Vertex>,
) -> Ball<G::Vertex> {
    let mut vertices = vec![center.clone()];
    let mut dist = vec![0u32];
    let mut index = HashMap::from([(center.clone(), 0usize)]);
    let mut sphere_starts = vec![0usize, 1];
    let mut neighbor_lists: Vec<Option<Vec<G::Vertex>>> = vec![None];
    let mut budget_exhausted = cap == 0;

    for k in 0..radius {
        if target.is_some_and(|t| index.contains_key(t)) {
            radius = k;
            break;
        }
        if budget_exhausted {
            break;
        }
        let (lo, hi) = (sphere_starts[k as usize], sphere_starts[k as usize + 1]);
        let mut next = BTreeSet::new();
        for i in lo..hi {
            let nbrs = g.neighbors(&vertices[i]);
            for w in &nbrs {
                if !index.contains_key(w) {
                    next.insert(w.clone());
                }
            }
            neighbor_lists[i] = Some(nbrs);
        }
        if next.is_empty() {
            break;
        }
        let room = cap.saturating_sub(vertices.len());
        if next.len() > room {
            budget_exhausted = true;
        }
        for w in next.into_iter().take(room) {
            index.insert(w.clone(), vertices.len());
            vertices.push(w);
            dist.push(k + 1);
            neighbor_lists.push(None);
        }
        sphere_starts.push(vertices.len());
    }

    let mut complete = !budget_exhausted;
    let mut adj = Vec::with_capacity(vertices.len());
    for i in 0..vertices.len() {
        let nbrs = match neighbor_lists[i].take() {
            Some(n) => n,
            None => g.neighbors(&vertices[i]),
        };
        let mut inside = Vec::with_capacity(nbrs.len());
        for w in &nbrs {
            match index.get(w) {
                Some(&j) => inside.push(j),
                None => complete = false,
            }
        }
        inside.sort_unstable();
        adj.push(inside);
    }

    Ball {
        center: center.clone(),
        radius,
        vertices,
        dist,
        adj,
        index,
        sphere_starts,
        budget_exhausted,
        complete,
    }
}

impl<V: Clone + Eq + std::hash::Hash> Ball<V> {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, v: &V) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn contains(&self, v: &V) -> bool {
        self.index.contains_key(v)
    }

    pub fn distance_to(&self, v: &V) -> Option<u32> {
        self.index_of(v).map(|i| self.dist[i])
    }

    /// Number of non-empty spheres (radius reached plus one).
    pub fn sphere_count(&self) -> usize {
        self.sphere_starts.len() - 1
    }

    pub fn sphere(&self, k: usize) -> &[V] {
        if k + 1 >= self.sphere_starts.len() {
            return &[];
        }
        &self.vertices[self.sphere_starts[k]..self.sphere_starts[k + 1]]
    }

    pub fn sphere_sizes(&self) -> Vec<usize> {
        self.sphere_starts.windows(2).map(|w| w[1] - w[0]).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges inside the ball as index pairs `(i, j)` with `i < j`.
    pub fn edge_indices(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, l) in self.adj.iter().enumerate() {
            for &j in l {
                if i < j {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Ball neighbours one step closer to the centre.
    pub fn predecessors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let d = self.dist[i];
        self.adj[i]
            .iter()
            .copied()
            .filter(move |&j| self.dist[j] + 1 == d)
    }

    pub fn report(&self) -> BallReport {
        BallReport {
            radius: self.radius,
            sphere_sizes: self.sphere_sizes(),
            vertex_count: self.len(),
            edge_count: self.edge_count(),
            budget_exhausted: self.budget_exhausted,
            complete: self.complete,
        }
    }
}

/// Cached pairwise distances, using the graph's exact formula when it has one
/// and bounded breadth-first search otherwise.
pub struct Distances<'g, G: ExplorableGraph> {
    g: &'g G,
    limit: u32,
    cap: usize,
    cache: HashMap<G::Vertex, Ball<G::Vertex>>,
}

impl<'g, G: ExplorableGraph> Distances<'g, G> {
    /// Searches reach at most `limit` steps and `cap` vertices from each source.
    pub fn new(g: &'g G, limit: u32, cap: usize) -> Self {
        Distances {
            g,
            limit,
            cap,
            cache: HashMap::new(),
        }
    }

    pub fn get(&mut self, a: &G::Vertex, b: &G::Vertex) -> Option<u32> {
        if a == b {
            return Some(0);
        }
        if let Some(d) = self.g.exact_distance(a, b) {
            return Some(d);
        }
        if let Some(ball) = self.cache.get(b) {
            return ball.distance_to(a);
        }
        let (g, limit, cap) = (self.g, self.limit, self.cap);
        self.cache
            .entry(a.clone())
            .or_insert_with(|| ball_bfs(g, a, limit, cap))
            .distance_to(b)
    }
}
