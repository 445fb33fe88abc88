//! Independent oracles shared by the integration tests.
//!
//! Nothing here calls the word engine: words are plain `(vertex, element)`
//! pairs rewritten with the defining relations only.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use graphprod::{DefiningGraph, NormalForm, Syllable, VertexId};

pub type RawWord = Vec<(u32, u32)>;

pub fn raw(x: &NormalForm) -> RawWord {
    x.syllables().iter().map(|s| (s.vertex.0, s.elem)).collect()
}

pub fn syllables(w: &RawWord) -> Vec<Syllable> {
    w.iter().map(|&(v, e)| Syllable::new(v, e)).collect()
}

fn adjacent(g: &DefiningGraph, a: u32, b: u32) -> bool {
    g.edges()
        .iter()
        .any(|&(x, y)| (x.0 == a && y.0 == b) || (x.0 == b && y.0 == a))
}

/// Exhaustive rewriting with the defining relations: merge neighbouring
/// syllables on the same vertex (dropping trivial results) and swap
/// neighbouring syllables on adjacent vertices.
pub struct Rewriter<'g> {
    g: &'g DefiningGraph,
    adj: HashSet<(u32, u32)>,
}

impl<'g> Rewriter<'g> {
    pub fn new(g: &'g DefiningGraph) -> Self {
        let mut adj = HashSet::new();
        for a in 0..g.vertex_count() as u32 {
            for b in 0..g.vertex_count() as u32 {
                if adjacent(g, a, b) {
                    adj.insert((a, b));
                }
            }
        }
        Rewriter { g, adj }
    }

    fn moves(&self, w: &RawWord, swaps_only: bool) -> Vec<RawWord> {
        let mut out = Vec::new();
        for i in 0..w.len().saturating_sub(1) {
            let ((a, x), (b, y)) = (w[i], w[i + 1]);
            if a == b && !swaps_only {
                let m = self.g.group(VertexId(a)).mul(x, y);
                let mut n = w.clone();
                if m == 0 {
                    n.drain(i..i + 2);
                } else {
                    n[i] = (a, m);
                    n.remove(i + 1);
                }
                out.push(n);
            }
            if self.adj.contains(&(a, b)) {
                let mut n = w.clone();
                n.swap(i, i + 1);
                out.push(n);
            }
        }
        out
    }

    fn closure(&self, w: &RawWord, swaps_only: bool) -> HashSet<RawWord> {
        let mut seen = HashSet::from([w.clone()]);
        let mut queue = VecDeque::from([w.clone()]);
        while let Some(x) = queue.pop_front() {
            for y in self.moves(&x, swaps_only) {
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// Lexicographically least word of minimal length reachable from `w`.
    pub fn key(&self, w: &RawWord) -> RawWord {
        self.closure(w, false)
            .into_iter()
            .min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)))
            .unwrap()
    }

    pub fn is_trivial(&self, w: &RawWord) -> bool {
        self.closure(w, false).contains(&Vec::new())
    }

    /// Every word obtained from `w` by swapping commuting neighbours.
    pub fn shuffles(&self, w: &RawWord) -> HashSet<RawWord> {
        self.closure(w, true)
    }

    pub fn inverse(&self, w: &RawWord) -> RawWord {
        w.iter()
            .rev()
            .map(|&(v, e)| (v, self.g.group(VertexId(v)).inv(e)))
            .collect()
    }
}

/// All words of exactly `len` nontrivial syllables.
pub fn all_words(g: &DefiningGraph, len: usize) -> Vec<RawWord> {
    let gens: Vec<(u32, u32)> = (0..g.vertex_count() as u32)
        .flat_map(|v| (1..g.group(VertexId(v)).order() as u32).map(move |e| (v, e)))
        .collect();
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                gens.iter().map(move |&s| {
                    let mut n = w.clone();
                    n.push(s);
                    n
                })
            })
            .collect();
    }
    out
}

/// Membership in `R_F` straight from the definition: no shuffle starts on `F`.
pub struct CosetOracle<'g> {
    rw: Rewriter<'g>,
    memo: HashMap<RawWord, bool>,
}

impl<'g> CosetOracle<'g> {
    pub fn new(g: &'g DefiningGraph) -> Self {
        CosetOracle {
            rw: Rewriter::new(g),
            memo: HashMap::new(),
        }
    }

    /// First vertices over all shuffles of a geodesic word.
    pub fn first_vertices(&mut self, w: &RawWord) -> BTreeSet<u32> {
        self.rw
            .shuffles(w)
            .iter()
            .filter_map(|s| s.first().map(|x| x.0))
            .collect()
    }

    pub fn in_rf(&mut self, x: &NormalForm, f: &BTreeSet<u32>) -> bool {
        let w = raw(x);
        let mut key = w.clone();
        // memo key: the word plus the set
        key.extend(f.iter().map(|&v| (u32::MAX, v)));
        if let Some(&hit) = self.memo.get(&key) {
            return hit;
        }
        let firsts = self.first_vertices(&w);
        let ans = firsts.is_disjoint(f);
        self.memo.insert(key, ans);
        ans
    }
}

/// All-pairs distances by Floyd-Warshall on an explicit adjacency list.
pub fn floyd(adj: &[Vec<usize>]) -> Vec<Vec<u32>> {
    let n = adj.len();
    let inf = u32::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for i in 0..n {
        d[i][i] = 0;
        for &j in &adj[i] {
            d[i][j] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// Every graph on `n` vertices with each group order from `orders`.
pub fn small_graphs(n: usize, orders: &[usize]) -> Vec<DefiningGraph> {
    let pairs: Vec<(u32, u32)> = (0..n as u32)
        .flat_map(|a| (a + 1..n as u32).map(move |b| (a, b)))
        .collect();
    let mut out = Vec::new();
    let mut order_choices = vec![Vec::new()];
    for _ in 0..n {
        order_choices = order_choices
            .into_iter()
            .flat_map(|c: Vec<usize>| {
                orders.iter().map(move |&o| {
                    let mut c = c.clone();
                    c.push(o);
                    c
                })
            })
            .collect();
    }
    for mask in 0..1u32 << pairs.len() {
        let edges: Vec<(u32, u32)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        for o in &order_choices {
            out.push(DefiningGraph::with_cyclic(o, &edges).unwrap());
        }
    }
    out
}
