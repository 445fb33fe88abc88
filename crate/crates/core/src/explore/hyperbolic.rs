//! Gromov products, thin-bigon checks and four-point δ estimates on balls.
//!
//! Gromov products of vertices are half-integers; they are computed doubled so
//! all arithmetic stays exact.

use std::fmt;

use rand::Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::ball::{ball_bfs, Ball, Distances};
use super::ExplorableGraph;
use crate::error::{Error, Result};

/// An exact half-integer, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt(pub i64);

impl HalfInt {
    pub fn from_doubled(twice: i64) -> Self {
        HalfInt(twice)
    }

    pub fn from_int(v: i64) -> Self {
        HalfInt(2 * v)
    }

    pub fn doubled(self) -> i64 {
        self.0
    }

    pub fn as_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}", self.as_f64())
        }
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.0 % 2 == 0 {
            s.serialize_i64(self.0 / 2)
        } else {
            s.serialize_f64(self.as_f64())
        }
    }
}

/// `(x, y)_z = (d(x,z) + d(y,z) - d(x,y)) / 2`.
pub fn gromov_product<G: ExplorableGraph>(
    g: &G,
    x: &G::Vertex,
    y: &G::Vertex,
    z: &G::Vertex,
    cap: usize,
) -> Result<HalfInt> {
    let mut d = Distances::new(g, u32::MAX, cap);
    let xz = d.get(x, z).ok_or(Error::Unreachable)? as i64;
    let yz = d.get(y, z).ok_or(Error::Unreachable)? as i64;
    let xy = d.get(x, y).ok_or(Error::Unreachable)? as i64;
    Ok(HalfInt::from_doubled(xz + yz - xy))
}

/// Which basepoints a probe quantifies over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Basepoints {
    /// Only the graph's origin; enough for vertex-transitive graphs such as Cayley graphs.
    Origin,
    /// Every vertex of the ball.
    AllInBall,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BigonConfig {
    pub radius: u32,
    pub delta: u32,
    /// Constant for the interior claim on pairs of geodesics with equal endpoints.
    pub interior: u32,
    pub basepoints: Basepoints,
    pub vertex_cap: usize,
    pub path_cap: usize,
}

impl BigonConfig {
    pub fn new(radius: u32, delta: u32) -> Self {
        BigonConfig {
            radius,
            delta,
            interior: 2,
            basepoints: Basepoints::Origin,
            vertex_cap: 200_000,
            path_cap: 10_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    /// A vertex of one side of a bigon is farther than δ from the other side.
    Thin,
    /// An interior vertex of a geodesic is farther than the interior constant
    /// from the interior of another geodesic with the same endpoints.
    Interior,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BigonWitness<V> {
    pub kind: WitnessKind,
    pub a: V,
    pub b: V,
    pub c: V,
    pub p: Vec<V>,
    pub q: Vec<V>,
    pub vertex: V,
    pub distance: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "result", content = "witness")]
pub enum BigonOutcome<V> {
    Pass,
    Fail(BigonWitness<V>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BigonReport<V> {
    pub config: BigonConfig,
    pub outcome: BigonOutcome<V>,
    /// Largest distance from a vertex of one side to the other side, over all bigons.
    pub max_thin: u32,
    /// Same for interiors of geodesics with equal endpoints.
    pub max_interior: u32,
    pub bigons_checked: u64,
}

impl<V> BigonReport<V> {
    pub fn passed(&self) -> bool {
        matches!(self.outcome, BigonOutcome::Pass)
    }
}

struct BigonScan<'a, 'g, G: ExplorableGraph> {
    dist: Distances<'g, G>,
    cfg: &'a BigonConfig,
    first_thin: Option<BigonWitness<G::Vertex>>,
    first_interior: Option<BigonWitness<G::Vertex>>,
    max_thin: u32,
    max_interior: u32,
    checked: u64,
}

impl<G: ExplorableGraph> BigonScan<'_, '_, G> {
    /// Largest distance from a vertex of `p` to the set `q`, with the vertex attaining it.
    fn one_sided(&mut self, p: &[G::Vertex], q: &[G::Vertex]) -> (u32, Option<G::Vertex>) {
        let mut worst = (0u32, None);
        for x in p {
            let m = q
                .iter()
                .map(|y| self.dist.get(x, y).unwrap_or(u32::MAX))
                .min()
                .unwrap_or(u32::MAX);
            if m > worst.0 || worst.1.is_none() {
                worst = (m, Some(x.clone()));
            }
        }
        worst
    }

    fn thin(
        &mut self,
        a: &G::Vertex,
        b: &G::Vertex,
        c: &G::Vertex,
        p: &[G::Vertex],
        q: &[G::Vertex],
    ) {
        self.checked += 1;
        for (s, t) in [(p, q), (q, p)] {
            let (m, x) = self.one_sided(s, t);
            self.max_thin = self.max_thin.max(m);
            if m > self.cfg.delta && self.first_thin.is_none() {
                self.first_thin = Some(BigonWitness {
                    kind: WitnessKind::Thin,
                    a: a.clone(),
                    b: b.clone(),
                    c: c.clone(),
                    p: s.to_vec(),
                    q: t.to_vec(),
                    vertex: x.unwrap(),
                    distance: m,
                });
            }
        }
    }

    fn interior(&mut self, a: &G::Vertex, b: &G::Vertex, p: &[G::Vertex], q: &[G::Vertex]) {
        if p.len() <= 2 {
            return;
        }
        let (ip, iq) = (&p[1..p.len() - 1], &q[1..q.len() - 1]);
        for (s, t) in [(ip, iq), (iq, ip)] {
            let (m, x) = self.one_sided(s, t);
            self.max_interior = self.max_interior.max(m);
            if m > self.cfg.interior && self.first_interior.is_none() {
                self.first_interior = Some(BigonWitness {
                    kind: WitnessKind::Interior,
                    a: a.clone(),
                    b: b.clone(),
                    c: b.clone(),
                    p: p.to_vec(),
                    q: q.to_vec(),
                    vertex: x.unwrap(),
                    distance: m,
                });
            }
        }
    }
}

/// Checks that all geodesic bigons `(a; b, c)` with `d(b, c) <= 1`,
/// `d(a, b) = d(a, c)` and endpoints in the ball are δ-thin, and that any two
/// geodesics with the same endpoints have interiors within the interior constant.
pub fn bigon_check<G: ExplorableGraph>(g: &G, cfg: &BigonConfig) -> Result<BigonReport<G::Vertex>> {
    let origin = g.origin();
    let home = ball_bfs(g, &origin, cfg.radius, cfg.vertex_cap);
    if home.budget_exhausted {
        return Err(Error::CapExceeded {
            cap: cfg.vertex_cap,
        });
    }
    let bases: Vec<G::Vertex> = match cfg.basepoints {
        Basepoints::Origin => vec![origin.clone()],
        Basepoints::AllInBall => home.vertices.clone(),
    };
    let mut scan = BigonScan {
        dist: Distances::new(g, 4 * cfg.radius + 2, cfg.vertex_cap),
        cfg,
        first_thin: None,
        first_interior: None,
        max_thin: 0,
        max_interior: 0,
        checked: 0,
    };
    for a in &bases {
        let from_a: Ball<G::Vertex> = if *a == origin {
            home.clone()
        } else {
            ball_bfs(g, a, 2 * cfg.radius, cfg.vertex_cap)
        };
        if from_a.budget_exhausted {
            return Err(Error::CapExceeded {
                cap: cfg.vertex_cap,
            });
        }
        let mut geos: Vec<Option<Vec<Vec<G::Vertex>>>> = vec![None; from_a.len()];
        for (t, slot) in geos.iter_mut().enumerate() {
            if !home.contains(&from_a.vertices[t]) {
                continue;
            }
            let (paths, overflow) = from_a.geodesic_paths(t, cfg.path_cap);
            if overflow {
                return Err(Error::CapExceeded { cap: cfg.path_cap });
            }
            *slot = Some(
                paths
                    .into_iter()
                    .map(|p| p.into_iter().map(|i| from_a.vertices[i].clone()).collect())
                    .collect(),
            );
        }
        for b in 0..from_a.len() {
            let Some(pb) = &geos[b] else { continue };
            let vb = &from_a.vertices[b];
            for i in 0..pb.len() {
                for j in i + 1..pb.len() {
                    scan.thin(a, vb, vb, &pb[i], &pb[j]);
                    scan.interior(a, vb, &pb[i], &pb[j]);
                }
            }
            for &c in &from_a.adj[b] {
                if c <= b || from_a.dist[c] != from_a.dist[b] {
                    continue;
                }
                let Some(pc) = &geos[c] else { continue };
                let vc = &from_a.vertices[c];
                for p in pb {
                    for q in pc {
                        scan.thin(a, vb, vc, p, q);
                    }
                }
            }
        }
    }
    let outcome = match (scan.first_thin, scan.first_interior) {
        (Some(w), _) | (None, Some(w)) => BigonOutcome::Fail(w),
        (None, None) => BigonOutcome::Pass,
    };
    Ok(BigonReport {
        config: *cfg,
        outcome,
        max_thin: scan.max_thin,
        max_interior: scan.max_interior,
        bigons_checked: scan.checked,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FourPointConfig {
    pub radius: u32,
    pub basepoints: Basepoints,
    /// Above this many tuples the condition is checked on a random sample of this size.
    pub sample_cap: u64,
    pub seed: u64,
    pub vertex_cap: usize,
}

impl FourPointConfig {
    pub fn new(radius: u32) -> Self {
        FourPointConfig {
            radius,
            basepoints: Basepoints::Origin,
            sample_cap: 2_000_000_000,
            seed: 0,
            vertex_cap: 200_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaEstimate<V> {
    pub radius_tested: u32,
    /// Least δ with `(x,z)_w >= min((x,y)_w, (y,z)_w) - δ` on every checked tuple.
    pub delta_four_point: HalfInt,
    /// Least δ passing the thin-bigon condition, when a bigon scan was run.
    pub delta_bigon: Option<u32>,
    pub exhaustive: bool,
    pub tuples_checked: u64,
    /// A tuple `(x, y, z, w)` attaining the estimate.
    pub witness: Option<(V, V, V, V)>,
    pub budget_exhausted: bool,
}

fn distance_matrix<G: ExplorableGraph>(
    g: &G,
    ball: &Ball<G::Vertex>,
    cap: usize,
) -> Result<Vec<Vec<u32>>> {
    let limit = 2 * ball.radius;
    ball.vertices
        .par_iter()
        .map(|x| {
            let exact: Option<Vec<u32>> = ball
                .vertices
                .iter()
                .map(|y| {
                    if x == y {
                        Some(0)
                    } else {
                        g.exact_distance(x, y)
                    }
                })
                .collect();
            if let Some(row) = exact {
                return Ok(row);
            }
            let around = ball_bfs(g, x, limit, cap);
            ball.vertices
                .iter()
                .map(|y| around.distance_to(y).ok_or(Error::CapExceeded { cap }))
                .collect()
        })
        .collect()
}

type Best = (i64, Option<(usize, usize, usize, usize)>);

fn better(a: Best, b: Best) -> Best {
    // larger defect wins; ties keep the lexicographically first tuple
    match a.0.cmp(&b.0) {
        std::cmp::Ordering::Greater => a,
        std::cmp::Ordering::Less => b,
        std::cmp::Ordering::Equal => {
            if a.1 <= b.1 || b.1.is_none() {
                if a.1.is_none() {
                    b
                } else {
                    a
                }
            } else {
                b
            }
        }
    }
}

/// Four-point δ over the ball of the given radius about the origin.
pub fn four_point_delta<G: ExplorableGraph>(
    g: &G,
    cfg: &FourPointConfig,
) -> Result<DeltaEstimate<G::Vertex>> {
    let ball = ball_bfs(g, &g.origin(), cfg.radius, cfg.vertex_cap);
    let d = distance_matrix(g, &ball, cfg.vertex_cap)?;
    let n = ball.len();
    let bases: Vec<usize> = match cfg.basepoints {
        Basepoints::Origin => vec![0],
        Basepoints::AllInBall => (0..n).collect(),
    };
    // doubled Gromov product (x, y)_w
    let gp = |x: usize, y: usize, w: usize| d[x][w] as i64 + d[y][w] as i64 - d[x][y] as i64;
    let defect =
        |x: usize, y: usize, z: usize, w: usize| gp(x, y, w).min(gp(y, z, w)) - gp(x, z, w);

    let total = (bases.len() as u64).saturating_mul((n as u64).saturating_pow(3));
    let exhaustive = total <= cfg.sample_cap;
    let best: Best = if exhaustive {
        bases
            .iter()
            .flat_map(|&w| (0..n).map(move |x| (w, x)))
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|(w, x)| {
                let mut best: Best = (0, None);
                for y in 0..n {
                    for z in 0..n {
                        let v = defect(x, y, z, w);
                        if v > best.0 || best.1.is_none() {
                            best = better(best, (v, Some((x, y, z, w))));
                        }
                    }
                }
                best
            })
            .reduce(|| (0, None), better)
    } else {
        let mut rng = crate::fixtures::rng(cfg.seed);
        let mut best: Best = (0, None);
        for _ in 0..cfg.sample_cap {
            let w = bases[rng.gen_range(0..bases.len())];
            let (x, y, z) = (
                rng.gen_range(0..n),
                rng.gen_range(0..n),
                rng.gen_range(0..n),
            );
            best = better(best, (defect(x, y, z, w), Some((x, y, z, w))));
        }
        best
    };
    let v = |i: usize| ball.vertices[i].clone();
    Ok(DeltaEstimate {
        radius_tested: cfg.radius,
        delta_four_point: HalfInt::from_doubled(best.0.max(0)),
        delta_bigon: None,
        exhaustive,
        tuples_checked: if exhaustive { total } else { cfg.sample_cap },
        witness: best.1.map(|(x, y, z, w)| (v(x), v(y), v(z), v(w))),
        budget_exhausted: ball.budget_exhausted,
    })
}
