//! The defining graph: a finite simplicial graph with a vertex group on each vertex.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{GroupSpec, GroupTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A subset of the vertices of a defining graph, stored as a membership mask.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    mask: Vec<bool>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            mask: vec![false; n],
        }
    }

    pub fn from_ids(
        graph: &DefiningGraph,
        ids: impl IntoIterator<Item = VertexId>,
    ) -> Result<Self> {
        let mut set = Self::empty(graph.vertex_count());
        for v in ids {
            if v.idx() >= graph.vertex_count() {
                return Err(Error::UnknownVertex(v));
            }
            set.mask[v.idx()] = true;
        }
        Ok(set)
    }

    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        self.mask.get(v.idx()).copied().unwrap_or(false)
    }

    pub fn insert(&mut self, v: VertexId) {
        self.mask[v.idx()] = true;
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.mask
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| VertexId(i as u32))
    }

    pub fn len(&self) -> usize {
        self.mask.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn to_vec(&self) -> Vec<VertexId> {
        self.iter().collect()
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VertexDoc {
    pub id: u32,
    pub group: GroupSpec,
}

/// JSON input document for a defining graph.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphDoc {
    pub vertices: Vec<VertexDoc>,
    #[serde(default)]
    pub edges: Vec<[u32; 2]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "kind", content = "value")]
pub enum GirthValue {
    Finite(u32),
    Infinite,
}

impl GirthValue {
    pub fn exceeds(self, k: u32) -> bool {
        match self {
            GirthValue::Finite(g) => g > k,
            GirthValue::Infinite => true,
        }
    }
}

impl fmt::Display for GirthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GirthValue::Finite(g) => write!(f, "{g}"),
            GirthValue::Infinite => write!(f, "inf"),
        }
    }
}

/// Hypothesis flags computed when a graph is loaded.
#[derive(Debug, Clone, Serialize)]
pub struct LoadSummary {
    pub vertices: usize,
    pub edges: usize,
    pub girth: GirthValue,
    pub girth_gt_4: bool,
    pub girth_gt_20: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NeighborhoodMode {
    Link,
    Star,
    /// Edges incident to the vertex, reported as the far endpoints.
    Elink,
    IsLeaf,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PredicateReport {
    pub leaves: Vec<VertexId>,
    pub non_leaves: Vec<VertexId>,
    pub non_leaf_count: usize,
    /// `|Lk(v) \ leaf|` per vertex, indexed by vertex id.
    pub link_non_leaf: Vec<usize>,
    /// `None` when the graph is disconnected.
    pub diameter: Option<u32>,
    pub diam_gt_1: bool,
    pub diam_gt_2: bool,
}

/// A validated defining graph. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefiningGraph {
    groups: Vec<Arc<GroupTable>>,
    adj: Vec<bool>,
    links: Vec<Vec<VertexId>>,
}

impl DefiningGraph {
    /// Builds a graph from already-constructed groups and an edge list.
    pub fn new(groups: Vec<Arc<GroupTable>>, edges: &[(u32, u32)]) -> Result<Self> {
        let n = groups.len();
        for (i, g) in groups.iter().enumerate() {
            if g.is_trivial() {
                return Err(Error::TrivialVertexGroup(VertexId(i as u32)));
            }
        }
        let mut adj = vec![false; n * n];
        for &(a, b) in edges {
            for x in [a, b] {
                if x as usize >= n {
                    return Err(Error::UnknownVertex(VertexId(x)));
                }
            }
            if a == b {
                return Err(Error::LoopEdge(VertexId(a)));
            }
            let (a, b) = (a as usize, b as usize);
            if adj[a * n + b] {
                return Err(Error::DuplicateEdge(VertexId(a as u32), VertexId(b as u32)));
            }
            adj[a * n + b] = true;
            adj[b * n + a] = true;
        }
        let links = (0..n)
            .map(|a| {
                (0..n)
                    .filter(|&b| adj[a * n + b])
                    .map(|b| VertexId(b as u32))
                    .collect()
            })
            .collect();
        Ok(DefiningGraph { groups, adj, links })
    }

    pub fn from_doc(doc: &GraphDoc) -> Result<Self> {
        let n = doc.vertices.len();
        let mut groups: Vec<Option<Arc<GroupTable>>> = vec![None; n];
        for v in &doc.vertices {
            let slot = groups
                .get_mut(v.id as usize)
                .ok_or_else(|| Error::NonDenseVertices(format!("id {} with {n} vertices", v.id)))?;
            if slot.is_some() {
                return Err(Error::NonDenseVertices(format!("id {} listed twice", v.id)));
            }
            *slot = Some(Arc::new(GroupTable::build(&v.group)?));
        }
        let groups = groups.into_iter().map(|g| g.expect("dense ids")).collect();
        let edges: Vec<(u32, u32)> = doc.edges.iter().map(|e| (e[0], e[1])).collect();
        Self::new(groups, &edges)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GraphDoc = serde_json::from_str(text)?;
        Self::from_doc(&doc)
    }

    /// Convenience constructor: every vertex gets the cyclic group of the given order.
    pub fn with_cyclic(orders: &[usize], edges: &[(u32, u32)]) -> Result<Self> {
        let groups = orders
            .iter()
            .map(|&n| GroupTable::cyclic(n).map(Arc::new))
            .collect::<Result<Vec<_>>>()?;
        Self::new(groups, edges)
    }

    pub fn to_doc(&self) -> GraphDoc {
        GraphDoc {
            vertices: self
                .groups
                .iter()
                .enumerate()
                .map(|(i, g)| VertexDoc {
                    id: i as u32,
                    group: if GroupTable::cyclic(g.order()).is_ok_and(|c| c == **g) {
                        GroupSpec::Cyclic { n: g.order() }
                    } else {
                        GroupSpec::Table { table: g.rows() }
                    },
                })
                .collect(),
            edges: self.edges().into_iter().map(|(a, b)| [a.0, b.0]).collect(),
        }
    }

    /// Loads a document and reports the girth hypothesis flags alongside the graph.
    pub fn load(doc: &GraphDoc) -> Result<(Self, LoadSummary)> {
        let g = Self::from_doc(doc)?;
        let summary = g.summary();
        Ok((g, summary))
    }

    pub fn summary(&self) -> LoadSummary {
        let girth = self.girth();
        LoadSummary {
            vertices: self.vertex_count(),
            edges: self.edge_count(),
            girth,
            girth_gt_4: girth.exceeds(4),
            girth_gt_20: girth.exceeds(20),
        }
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.groups.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.groups.len() as u32).map(VertexId)
    }

    pub fn edge_count(&self) -> usize {
        self.links.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as pairs `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for a in self.vertices() {
            for &b in &self.links[a.idx()] {
                if a < b {
                    out.push((a, b));
                }
            }
        }
        out
    }

    #[inline]
    pub fn group(&self, v: VertexId) -> &Arc<GroupTable> {
        &self.groups[v.idx()]
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.idx() < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    #[inline]
    pub fn adjacent(&self, a: VertexId, b: VertexId) -> bool {
        self.adj[a.idx() * self.groups.len() + b.idx()]
    }

    pub fn link(&self, v: VertexId) -> &[VertexId] {
        &self.links[v.idx()]
    }

    pub fn link_set(&self, v: VertexId) -> VertexSet {
        let mut s = VertexSet::empty(self.vertex_count());
        for &w in self.link(v) {
            s.insert(w);
        }
        s
    }

    pub fn star_set(&self, v: VertexId) -> VertexSet {
        let mut s = self.link_set(v);
        s.insert(v);
        s
    }

    pub fn is_leaf(&self, v: VertexId) -> bool {
        self.links[v.idx()].len() <= 1
    }

    pub fn neighborhood(&self, v: VertexId, mode: NeighborhoodMode) -> Result<BTreeSet<VertexId>> {
        self.check_vertex(v)?;
        Ok(match mode {
            NeighborhoodMode::Link | NeighborhoodMode::Elink => {
                self.link(v).iter().copied().collect()
            }
            NeighborhoodMode::Star => self.star_set(v).iter().collect(),
            NeighborhoodMode::IsLeaf => {
                if self.is_leaf(v) {
                    [v].into_iter().collect()
                } else {
                    BTreeSet::new()
                }
            }
        })
    }

    /// Breadth-first distances from `v`; `None` for other components.
    pub fn distances_from(&self, v: VertexId) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[v.idx()] = Some(0);
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x.idx()].unwrap();
            for &y in self.link(x) {
                if dist[y.idx()].is_none() {
                    dist[y.idx()] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Distance between two vertex subsets, `None` if no path joins them.
    pub fn set_distance(&self, a: &[VertexId], b: &[VertexId]) -> Option<u32> {
        a.iter()
            .filter_map(|&x| {
                let d = self.distances_from(x);
                b.iter().filter_map(|y| d[y.idx()]).min()
            })
            .min()
    }

    /// Girth by breadth-first search from every vertex.
    pub fn girth(&self) -> GirthValue {
        let n = self.vertex_count();
        let mut best: Option<u32> = None;
        for root in self.vertices() {
            let mut dist = vec![u32::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[root.idx()] = 0;
            let mut queue = VecDeque::from([root.idx()]);
            while let Some(x) = queue.pop_front() {
                for &y in &self.links[x] {
                    let y = y.idx();
                    if dist[y] == u32::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        let len = dist[x] + dist[y] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best.map_or(GirthValue::Infinite, GirthValue::Finite)
    }

    pub fn predicates(&self) -> PredicateReport {
        let leaves: Vec<VertexId> = self.vertices().filter(|&v| self.is_leaf(v)).collect();
        let non_leaves: Vec<VertexId> = self.vertices().filter(|&v| !self.is_leaf(v)).collect();
        let link_non_leaf = self
            .vertices()
            .map(|v| self.link(v).iter().filter(|&&w| !self.is_leaf(w)).count())
            .collect();
        let mut diameter = Some(0u32);
        for v in self.vertices() {
            for d in self.distances_from(v) {
                diameter = match (diameter, d) {
                    (Some(m), Some(d)) => Some(m.max(d)),
                    _ => None,
                };
            }
        }
        PredicateReport {
            non_leaf_count: non_leaves.len(),
            leaves,
            non_leaves,
            link_non_leaf,
            diameter,
            diam_gt_1: diameter.is_none_or(|d| d > 1),
            diam_gt_2: diameter.is_none_or(|d| d > 2),
        }
    }

    /// DOT rendering with leaf vertices drawn as boxes.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph defining {\n");
        for v in self.vertices() {
            let shape = if self.is_leaf(v) { "box" } else { "ellipse" };
            out.push_str(&format!(
                "  v{} [label=\"{} ({})\", shape={shape}];\n",
                v,
                v,
                self.group(v).label()
            ));
        }
        for (a, b) in self.edges() {
            out.push_str(&format!("  v{a} -- v{b};\n"));
        }
        out.push_str("}\n");
        out
    }
}
