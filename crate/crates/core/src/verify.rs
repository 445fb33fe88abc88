//! A seeded invariant suite over one defining graph.
//!
//! Every check samples with its own generator derived from the seed, so the
//! report is a pure function of `(graph, seed, budget)`.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::cayley::CayleyGraph;
use crate::coset::{decompose, in_fg, in_rf, left_coset_rep};
use crate::dynamics::{bounded_order, OrderStatus};
use crate::explore::{ball_bfs, count_circuits_through_edge, ExplorableGraph};
use crate::extension::{
    canonicalize_ext, ext_adjacent, ext_stabilizer_test, ExtVertex, ExtensionWindow,
};
use crate::fixtures::{random_element, random_element_on, random_word, rng};
use crate::graph::{DefiningGraph, VertexSet};
use crate::report::{json_line, Budget};
use crate::word::{enumerate_normal_forms, normal_form, NormalForm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VerifyBudget {
    pub samples: usize,
    pub radius: u32,
    pub window: u32,
    pub cap: usize,
}

impl Default for VerifyBudget {
    fn default() -> Self {
        VerifyBudget {
            samples: 200,
            radius: 3,
            window: 1,
            cap: 20_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub cases: usize,
    pub budget_exhausted: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub budget: VerifyBudget,
    pub checks: Vec<CheckResult>,
    pub all_passed: bool,
}

struct Check {
    name: &'static str,
    cases: usize,
    budget_exhausted: bool,
    witness: Option<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check {
            name,
            cases: 0,
            budget_exhausted: false,
            witness: None,
        }
    }

    fn case(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name,
            passed: self.witness.is_none(),
            cases: self.cases,
            budget_exhausted: self.budget_exhausted,
            witness: self.witness,
        }
    }
}

fn random_subset(r: &mut impl Rng, g: &DefiningGraph) -> VertexSet {
    let mut f = VertexSet::empty(g.vertex_count());
    for v in g.vertices() {
        if r.gen_bool(0.5) {
            f.insert(v);
        }
    }
    f
}

fn words(g: &DefiningGraph, seed: u64, b: &VerifyBudget) -> Vec<CheckResult> {
    let mut r = rng(seed);
    let mut inv = Check::new("inverse_cancels");
    let mut idem = Check::new("normal_form_idempotent");
    let mut shuffle = Check::new("shuffles_recanonicalize");
    for _ in 0..b.samples {
        let len = r.gen_range(0..12);
        let w = random_word(&mut r, g, len);
        let x = normal_form(&w, g).expect("sampled words are valid");
        inv.case(x.mul(&x.inverse(g), g).is_identity(), || format!("{w}"));
        idem.case(normal_form(&x.to_word(), g).as_ref() == Ok(&x), || {
            format!("{w}")
        });
        let all = enumerate_normal_forms(&x, g, 200);
        shuffle.budget_exhausted |= all.overflow;
        let support = x.support();
        let ok = all.words.iter().all(|s| {
            let y = NormalForm::from_syllables(s.iter().copied(), g);
            y == x
                && s.len() == x.len()
                && s.iter()
                    .map(|t| t.vertex)
                    .collect::<std::collections::BTreeSet<_>>()
                    == support
        });
        shuffle.case(ok, || format!("{x}"));
    }
    vec![inv.finish(), idem.finish(), shuffle.finish()]
}

fn cosets(g: &DefiningGraph, seed: u64, b: &VerifyBudget) -> Vec<CheckResult> {
    let mut r = rng(seed);
    let mut fact = Check::new("coset_factorization");
    let mut rep = Check::new("left_coset_rep_constant");
    for _ in 0..b.samples {
        let x = random_element(&mut r, g, 8);
        let f = random_subset(&mut r, g);
        let d = decompose(&x, &f, g);
        let ok = in_fg(&d.p, &f)
            && in_rf(&d.r, &f, g)
            && d.p.mul(&d.r, g) == x
            && d.p.len() + d.r.len() == x.len();
        fact.case(ok, || format!("g={x} F={:?}", f.to_vec()));
        let fv = f.to_vec();
        let h = random_element_on(&mut r, g, &fv, 4);
        let xh = x.mul(&h, g);
        rep.case(
            left_coset_rep(&x, &f, g) == left_coset_rep(&xh, &f, g),
            || format!("g={x} h={h}"),
        );
    }
    vec![fact.finish(), rep.finish()]
}

fn cayley(g: &DefiningGraph, seed: u64, b: &VerifyBudget) -> Vec<CheckResult> {
    let mut r = rng(seed);
    let c = CayleyGraph::new(g);
    let ball = ball_bfs(&c, &NormalForm::identity(), b.radius, b.cap);
    let mut metric = Check::new("word_metric");
    let mut sym = Check::new("cayley_neighbors_symmetric");
    let mut trans = Check::new("vertex_transitive_spheres");
    let mut tri = Check::new("triangle_bound");
    metric.budget_exhausted = ball.budget_exhausted;
    for (x, &d) in ball.vertices.iter().zip(&ball.dist) {
        metric.case(x.len() as u32 == d, || format!("{x}"));
    }
    let sample: Vec<&NormalForm> = ball
        .vertices
        .choose_multiple(&mut r, b.samples.min(ball.len()))
        .collect();
    for x in &sample {
        for y in c.neighbors(x) {
            sym.case(c.neighbors(&y).contains(x), || format!("{x} -> {y}"));
        }
    }
    let base = ball_bfs(&c, &NormalForm::identity(), 2, b.cap).sphere_sizes();
    for x in sample.iter().take(10) {
        let other = ball_bfs(&c, x, 2, b.cap);
        trans.budget_exhausted |= other.budget_exhausted;
        trans.case(other.sphere_sizes() == base, || format!("{x}"));
    }
    for x in sample.iter().take(10) {
        for (y, s) in c.cayley_neighbors(x) {
            let bound = g.group(s.vertex).order().pow(2);
            match count_circuits_through_edge(&c, &((*x).clone(), y.clone()), 3, b.cap) {
                Ok(counts) => {
                    let n: usize = counts.iter().sum();
                    tri.case(n <= bound, || format!("edge {x} -> {y}: {n} > {bound}"));
                }
                Err(_) => tri.budget_exhausted = true,
            }
        }
    }
    vec![metric.finish(), sym.finish(), trans.finish(), tri.finish()]
}

fn extension(g: &DefiningGraph, seed: u64, b: &VerifyBudget) -> Vec<CheckResult> {
    let mut r = rng(seed);
    let mut canon = Check::new("ext_canonicalization_coset_constant");
    let mut stab = Check::new("ext_stabilizer_law");
    let mut adj = Check::new("ext_adjacency_symmetric_irreflexive");
    let mut embed = Check::new("ext_embeds_defining_graph");
    let vs: Vec<_> = g.vertices().collect();
    for _ in 0..b.samples {
        let v = *vs.choose(&mut r).unwrap();
        let star = g.star_set(v);
        let x = random_element(&mut r, g, 6);
        let h = random_element_on(&mut r, g, &star.to_vec(), 4);
        let a = canonicalize_ext(v, &x, g).unwrap();
        let bb = canonicalize_ext(v, &x.mul(&h, g), g).unwrap();
        let again = canonicalize_ext(v, &a.conjugator, g).unwrap();
        canon.case(a == bb && a == again, || format!("v={v} g={x} h={h}"));
        let y = random_element(&mut r, g, 6);
        stab.case(
            ext_stabilizer_test(&y, v, g) == y.support_within(&star),
            || format!("v={v} g={y}"),
        );
    }
    match ExtensionWindow::new(g, b.window, b.cap) {
        Ok(win) => {
            let verts = win.vertices();
            let pick: Vec<&ExtVertex> =
                verts.choose_multiple(&mut r, 40.min(verts.len())).collect();
            for x in &pick {
                for y in &pick {
                    let ok = ext_adjacent(x, y, g) == ext_adjacent(y, x, g)
                        && (x != y || !ext_adjacent(x, y, g));
                    adj.case(ok, || format!("{x} {y}"));
                }
            }
            for u in g.vertices() {
                let nb = win.neighbors(&ExtVertex::root(u));
                for w in g.vertices() {
                    embed.case(nb.contains(&ExtVertex::root(w)) == g.adjacent(u, w), || {
                        format!("{u} {w}")
                    });
                }
            }
        }
        Err(_) => {
            adj.budget_exhausted = true;
            embed.budget_exhausted = true;
        }
    }
    vec![canon.finish(), stab.finish(), adj.finish(), embed.finish()]
}

fn orders(g: &DefiningGraph, seed: u64, b: &VerifyBudget) -> Vec<CheckResult> {
    let mut r = rng(seed);
    let mut c = Check::new("order_power_law");
    for _ in 0..b.samples {
        let x = random_element(&mut r, g, 4);
        if let OrderStatus::Finite(n) = bounded_order(&x, 24, g) {
            let k = r.gen_range(1..=n + 2);
            let expected = n / gcd(n, k);
            c.case(
                bounded_order(&x.pow(k, g), 24, g) == OrderStatus::Finite(expected),
                || format!("g={x} k={k}"),
            );
        }
    }
    vec![c.finish()]
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn verify(g: &DefiningGraph, seed: u64, budget: &VerifyBudget) -> VerifyReport {
    let mut checks = Vec::new();
    checks.extend(words(g, seed, budget));
    checks.extend(cosets(g, seed.wrapping_add(1), budget));
    checks.extend(cayley(g, seed.wrapping_add(2), budget));
    checks.extend(extension(g, seed.wrapping_add(3), budget));
    checks.extend(orders(g, seed.wrapping_add(4), budget));
    VerifyReport {
        seed,
        budget: *budget,
        all_passed: checks.iter().all(|c| c.passed),
        checks,
    }
}

/// JSON lines: one record per check, then a summary. Byte-stable for a given report.
pub fn render(report: &VerifyReport, fixture: &str) -> String {
    let budget = Budget {
        radius: Some(report.budget.radius),
        cap: Some(report.budget.cap),
        window: Some(report.budget.window),
        order_bound: None,
        seed: Some(report.seed),
        budget_exhausted: report.checks.iter().any(|c| c.budget_exhausted),
    };
    let mut out = String::new();
    for c in &report.checks {
        out.push_str(&json_line("check", &budget, c));
        out.push('\n');
    }
    #[derive(Serialize)]
    struct Summary<'a> {
        fixture: &'a str,
        samples: usize,
        checks: usize,
        failed: Vec<&'static str>,
        all_passed: bool,
    }
    let summary = Summary {
        fixture,
        samples: report.budget.samples,
        checks: report.checks.len(),
        failed: report
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name)
            .collect(),
        all_passed: report.all_passed,
    };
    out.push_str(&json_line("verify_summary", &budget, &summary));
    out.push('\n');
    out
}
