//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs as a plain binary (`harness = false`) so the lines always print:
//! `cargo test -p graphprod-core --test acceptance`.

mod common;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use graphprod::cayley::CayleyGraph;
use graphprod::coset::{decompose, in_rf, p_f, r_f};
use graphprod::dynamics::{bounded_order, wandering_orbit_experiment, OrderStatus};
use graphprod::explore::{
    ball_bfs, bigon_check, fineness_probe, four_point_delta, BigonConfig, ExplorableGraph,
    FourPointConfig,
};
use graphprod::extension::{
    canonicalize_ext, ext_act, ext_adjacent, ext_stabilizer_test, ExtVertex, ExtensionWindow,
};
use graphprod::fixtures::{
    self, random_element, random_element_on, random_graph, random_word, rng,
};
use graphprod::graph::GirthValue;
use graphprod::verify::{render, verify, VerifyBudget};
use graphprod::word::{enumerate_normal_forms, normal_form};
use graphprod::wreath::{
    wreath_stabilizer_probe, ActionDoc, GraphAction, Permutation, Wreath, WreathElem,
};
use graphprod::{DefiningGraph, GroupElem, NormalForm, VertexId, VertexSet, Word};
use rand::Rng;

use common::{all_words, raw, small_graphs, CosetOracle, Rewriter};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn cayley_ball(g: &DefiningGraph, radius: u32) -> Vec<NormalForm> {
    let c = CayleyGraph::new(g);
    let ball = ball_bfs(&c, &NormalForm::identity(), radius, 1_000_000);
    assert!(!ball.budget_exhausted);
    ball.vertices
}

fn c1_soundness() -> Outcome {
    let mut r = rng(101);
    let mut words = 0;
    for _ in 0..10 {
        let g = random_graph(&mut r, 8, 4);
        for _ in 0..100 {
            let len = r.gen_range(0..20);
            let w = random_word(&mut r, &g, len);
            let x = normal_form(&w, &g).map_err(|e| e.to_string())?;
            ensure!(
                x.mul(&x.inverse(&g), &g).is_identity(),
                "g g^-1 != e for {w}"
            );
            ensure!(
                x.inverse(&g).mul(&x, &g).is_identity(),
                "g^-1 g != e for {w}"
            );
            ensure!(
                normal_form(&x.to_word(), &g) == Ok(x.clone()),
                "not idempotent on {w}"
            );
            words += 1;
        }
    }
    Ok(format!("{words} words over 10 random fixtures"))
}

fn c2_uniqueness() -> Outcome {
    let mut r = rng(202);
    let mut total = 0usize;
    for i in 0..200 {
        let g = random_graph(&mut r, 6, 4);
        let x = random_element(&mut r, &g, 12);
        let set = enumerate_normal_forms(&x, &g, 1_000_000);
        ensure!(!set.overflow, "enumeration overflowed on element {i}");
        let oracle = Rewriter::new(&g).shuffles(&raw(&x));
        let ours: BTreeSet<_> = set
            .words
            .iter()
            .map(|w| w.iter().map(|s| (s.vertex.0, s.elem)).collect::<Vec<_>>())
            .collect();
        ensure!(
            ours == oracle.into_iter().collect(),
            "shuffle set differs from oracle for {x}"
        );
        for w in &set.words {
            ensure!(
                normal_form(&Word(w.clone()), &g) == Ok(x.clone()),
                "shuffle of {x} re-canonicalizes differently"
            );
            ensure!(w.len() == x.len(), "length changed under shuffling");
            let support: BTreeSet<VertexId> = w.iter().map(|s| s.vertex).collect();
            ensure!(support == x.support(), "support changed under shuffling");
        }
        total += set.words.len();
    }
    Ok(format!(
        "200 elements, {total} normal forms checked against the shuffle oracle"
    ))
}

fn c3_oracle() -> Outcome {
    let mut fixtures_seen = 0;
    let mut pairs = 0u64;
    let mut r = rng(303);
    for n in 1..=3 {
        for g in small_graphs(n, &[2, 3]) {
            let rw = Rewriter::new(&g);
            let words: Vec<_> = (0..=3).flat_map(|k| all_words(&g, k)).collect();
            let mut by_key: HashMap<Vec<(u32, u32)>, NormalForm> = HashMap::new();
            let mut by_nf: HashMap<NormalForm, Vec<(u32, u32)>> = HashMap::new();
            let mut forms = Vec::with_capacity(words.len());
            for w in &words {
                let key = rw.key(w);
                let nf = normal_form(&Word(common::syllables(w)), &g).unwrap();
                // equal keys <=> equal forms, for every pair, via two functional maps
                if let Some(prev) = by_key.insert(key.clone(), nf.clone()) {
                    ensure!(prev == nf, "oracle-equal words {w:?} differ in normal form");
                }
                if let Some(prev) = by_nf.insert(nf.clone(), key.clone()) {
                    ensure!(
                        prev == key,
                        "normal-form-equal words {w:?} differ in the oracle"
                    );
                }
                forms.push(nf);
            }
            let ball: BTreeSet<NormalForm> = cayley_ball(&g, 3).into_iter().collect();
            let reached: BTreeSet<NormalForm> = by_nf.keys().cloned().collect();
            ensure!(
                ball == reached,
                "radius-3 ball differs from the words of length <= 3"
            );
            pairs += (words.len() * words.len()) as u64;
            for _ in 0..50 {
                let (i, j) = (r.gen_range(0..words.len()), r.gen_range(0..words.len()));
                let mut prod = words[i].clone();
                prod.extend(rw.inverse(&words[j]));
                ensure!(
                    rw.is_trivial(&prod) == (forms[i] == forms[j]),
                    "w v^-1 triviality mismatch"
                );
            }
            fixtures_seen += 1;
        }
    }
    Ok(format!("{fixtures_seen} fixtures, {pairs} word pairs"))
}

fn subsets(n: usize) -> Vec<BTreeSet<u32>> {
    (0..1u32 << n)
        .map(|m| (0..n as u32).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

fn c4_cosets() -> Outcome {
    let names = ["dihedral", "path3", "path4", "pentagon", "square-z3"];
    let mut counts = [0u64; 4];
    for name in names {
        let g = fixtures::by_name(name).unwrap();
        let ball = cayley_ball(&g, 4);
        let mut oracle = CosetOracle::new(&g);
        let inv: Vec<NormalForm> = ball.iter().map(|x| x.inverse(&g)).collect();
        for f in subsets(g.vertex_count()) {
            let fs = VertexSet::from_ids(&g, f.iter().map(|&v| VertexId(v))).unwrap();
            let fball: Vec<usize> = (0..ball.len())
                .filter(|&i| ball[i].syllables().iter().all(|s| f.contains(&s.vertex.0)))
                .collect();
            for x in &ball {
                let d = decompose(x, &fs, &g);
                let found: Vec<usize> = fball
                    .iter()
                    .copied()
                    .filter(|&i| oracle.in_rf(&inv[i].mul(x, &g), &f))
                    .collect();
                ensure!(
                    found.len() == 1 && ball[found[0]] == d.p && d.p.mul(&d.r, &g) == *x,
                    "{name}: factorization of {x} over F={f:?} is not unique or disagrees"
                );
                counts[0] += 1;

                let x_in_rf = oracle.in_rf(x, &f);
                ensure!(
                    x_in_rf == in_rf(x, &fs, &g),
                    "{name}: in_rf({x}) disagrees with the oracle"
                );
                for v in g.vertices() {
                    let lk = g.link_set(v);
                    for e in g.group(v).nontrivial() {
                        let h = NormalForm::syllable(graphprod::Syllable { vertex: v, elem: e });
                        let xh = x.mul(&h, &g);
                        if x_in_rf {
                            let cond_i = xh.len() < x.len() + 1;
                            let cond_ii = !x.support_within(&lk);
                            let cond_iii = !f.contains(&v.0);
                            if cond_i || cond_ii || cond_iii {
                                ensure!(
                                    oracle.in_rf(&xh, &f),
                                    "{name}: closure fails for g={x}, h={h}, F={f:?}"
                                );
                                counts[1] += 1;
                            }
                        }
                        let (p, ph) = (p_f(x, &fs, &g), p_f(&xh, &fs, &g));
                        let i = p != ph;
                        let ii = f.contains(&v.0) && r_f(x, &fs, &g).support_within(&lk);
                        let iii = ph == p.mul(&h, &g);
                        ensure!(
                            i == ii && ii == iii,
                            "{name}: p_F-change equivalence fails for g={x}, h={h}, F={f:?}"
                        );
                        counts[3] += 1;
                    }
                }
                for &j in fball.iter().filter(|&&j| ball[j].len() <= 2) {
                    let h = &ball[j];
                    ensure!(
                        p_f(&h.mul(x, &g), &fs, &g) == h.mul(&d.p, &g),
                        "{name}: p_F(hg) != h p_F(g) for g={x}, h={h}"
                    );
                    counts[2] += 1;
                }
            }
        }
    }
    Ok(format!(
        "{} factorizations, {} closure cases, {} left-equivariance cases, {} p_F-change cases",
        counts[0], counts[1], counts[2], counts[3]
    ))
}

fn c5_hyperbolicity() -> Outcome {
    let mut notes = Vec::new();
    for name in ["pentagon", "hexagon", "star3-z3"] {
        let g = fixtures::by_name(name).unwrap();
        ensure!(g.girth().exceeds(4), "{name} does not have girth > 4");
        let c = CayleyGraph::new(&g);
        let mut cfg = BigonConfig::new(5, 4);
        cfg.vertex_cap = 1_000_000;
        cfg.path_cap = 1_000_000;
        let rep = bigon_check(&c, &cfg).map_err(|e| format!("{name}: {e}"))?;
        ensure!(
            rep.passed(),
            "{name}: bigon check failed: {:?}",
            rep.outcome
        );
        notes.push(format!(
            "{name} max thin {} interior {} over {} bigons",
            rep.max_thin, rep.max_interior, rep.bigons_checked
        ));
    }
    let g = fixtures::by_name("square-z3").unwrap();
    ensure!(
        g.girth() == GirthValue::Finite(4),
        "counterexample fixture should have girth 4"
    );
    let c = CayleyGraph::new(&g);
    let delta = |r| {
        let mut cfg = FourPointConfig::new(r);
        cfg.vertex_cap = 1_000_000;
        four_point_delta(&c, &cfg).unwrap()
    };
    let (d3, d5) = (delta(3), delta(5));
    ensure!(
        d3.exhaustive && d5.exhaustive,
        "four-point estimates were sampled"
    );
    ensure!(
        d5.delta_four_point > d3.delta_four_point,
        "four-point delta did not grow: {} vs {}",
        d3.delta_four_point,
        d5.delta_four_point
    );
    notes.push(format!(
        "square-z3 four-point delta {} at r=3, {} at r=5",
        d3.delta_four_point, d5.delta_four_point
    ));
    Ok(notes.join("; "))
}

fn c6_fineness() -> Outcome {
    // (name, defining graph is vertex-transitive with equal groups)
    let cases = [
        ("klein", true),
        ("z3", true),
        ("pentagon", true),
        ("square-z3", true),
        ("path3", false),
        ("star3-z3", false),
    ];
    let mut notes = Vec::new();
    for (name, transitive) in cases {
        let g = fixtures::by_name(name).unwrap();
        let c = CayleyGraph::new(&g).with_cache(2_000_000);
        let ball = ball_bfs(&c, &NormalForm::identity(), 4, 1_000_000);
        let edges: Vec<(NormalForm, NormalForm)> = ball
            .edge_indices()
            .into_iter()
            .map(|(i, j)| (ball.vertices[i].clone(), ball.vertices[j].clone()))
            .collect();
        let table =
            fineness_probe(&c, &edges, 6, 10_000_000).map_err(|e| format!("{name}: {e}"))?;
        let mut per_label: BTreeMap<VertexId, BTreeSet<Vec<usize>>> = BTreeMap::new();
        for row in &table.rows {
            let label = c.edge_label(&row.edge.0, &row.edge.1).unwrap();
            let bound = g.group(label.vertex).order().pow(2);
            ensure!(
                row.counts[0] <= bound,
                "{name}: {} triangles through an edge, bound {bound}",
                row.counts[0]
            );
            per_label
                .entry(label.vertex)
                .or_default()
                .insert(row.counts.clone());
        }
        for (v, rows) in &per_label {
            ensure!(
                rows.len() == 1,
                "{name}: counts vary across edges labelled on {v}: {rows:?}"
            );
        }
        let distinct: BTreeSet<&Vec<usize>> = per_label.values().flatten().collect();
        if transitive {
            ensure!(
                distinct.len() == 1,
                "{name}: f(n) not constant across edges: {distinct:?}"
            );
        }
        notes.push(format!(
            "{name} f(3..6)={:?} over {} edges",
            table.max_per_n,
            edges.len()
        ));
    }
    Ok(notes.join("; "))
}

fn c7_word_metric() -> Outcome {
    let mut total = 0;
    for name in fixtures::NAMES {
        let g = fixtures::by_name(name).unwrap();
        let c = CayleyGraph::new(&g);
        let ball = ball_bfs(&c, &NormalForm::identity(), 5, 1_000_000);
        ensure!(!ball.budget_exhausted, "{name}: cap hit");
        for (x, &d) in ball.vertices.iter().zip(&ball.dist) {
            ensure!(x.len() as u32 == d, "{name}: d(1, {x}) = {d}");
        }
        total += ball.len();
    }
    Ok(format!(
        "{total} elements over {} fixtures",
        fixtures::NAMES.len()
    ))
}

fn c8_dihedral() -> Outcome {
    let g = fixtures::dihedral();
    let c = CayleyGraph::new(&g);
    let sizes = ball_bfs(&c, &NormalForm::identity(), 10, 1000).sphere_sizes();
    let mut expected = vec![2; 11];
    expected[0] = 1;
    ensure!(sizes == expected, "sphere sizes {sizes:?}");
    let ab = NormalForm::parse("0:1 1:1", &g).unwrap();
    ensure!(
        bounded_order(&ab, 50, &g) == OrderStatus::ExceedsBound(50),
        "ab has small order"
    );
    Ok(format!("spheres {sizes:?}, ab exceeds 50"))
}

fn c9_extension() -> Outcome {
    let cases = [
        ("path3", 2),
        ("path4", 2),
        ("pentagon", 2),
        ("star3-z3", 1),
        ("square-z3", 1),
    ];
    let mut r = rng(909);
    let (mut pairs, mut coset_cases, mut stab_cases) = (0u64, 0, 0u64);
    for (name, window) in cases {
        let g = fixtures::by_name(name).unwrap();
        let w0 = ExtensionWindow::new(&g, 0, 1_000_000).unwrap();
        for a in g.vertices() {
            for b in g.vertices() {
                let e = w0
                    .neighbors(&ExtVertex::root(a))
                    .contains(&ExtVertex::root(b));
                ensure!(
                    e == g.adjacent(a, b),
                    "{name}: embedding fails at ({a}, {b})"
                );
            }
        }
        let vs: Vec<VertexId> = g.vertices().collect();
        for _ in 0..100 {
            let v = vs[r.gen_range(0..vs.len())];
            let x = random_element(&mut r, &g, 8);
            let h = random_element_on(&mut r, &g, &g.star_set(v).to_vec(), 6);
            let a = canonicalize_ext(v, &x, &g).unwrap();
            let b = canonicalize_ext(v, &x.mul(&h, &g), &g).unwrap();
            ensure!(
                a == b,
                "{name}: canonicalization not coset-constant at v={v}, g={x}, h={h}"
            );
            ensure!(
                canonicalize_ext(v, &a.conjugator, &g).unwrap() == a,
                "{name}: not idempotent"
            );
            coset_cases += 1;
        }
        for x in cayley_ball(&g, 4) {
            for v in g.vertices() {
                ensure!(
                    ext_stabilizer_test(&x, v, &g) == x.support_within(&g.star_set(v)),
                    "{name}: stabilizer law fails for g={x}, v={v}"
                );
                stab_cases += 1;
            }
        }
        let win = ExtensionWindow::new(&g, window, 1_000_000).unwrap();
        let verts = win.vertices();
        for x in verts {
            for y in verts {
                let xy = ext_adjacent(x, y, &g);
                ensure!(
                    xy == ext_adjacent(y, x, &g),
                    "{name}: asymmetric at {x}, {y}"
                );
                ensure!(!(x == y && xy), "{name}: {x} adjacent to itself");
                pairs += 1;
            }
        }
        let smaller = ExtensionWindow::new(&g, window - 1, 1_000_000).unwrap();
        for x in smaller.vertices() {
            let inner: BTreeSet<_> = smaller.neighbors(x).into_iter().collect();
            let outer: BTreeSet<_> = win.neighbors(x).into_iter().collect();
            ensure!(
                inner.is_subset(&outer),
                "{name}: window not monotone at {x}"
            );
        }
    }
    Ok(format!(
        "{coset_cases} coset pairs, {stab_cases} stabilizer cases, {pairs} windowed pairs"
    ))
}

fn c10_dynamics() -> Outcome {
    // (fixture, v, w, the other vertex whose alternation with w wanders)
    let cases = [
        ("path3", 1u32, 0u32, 2u32),
        ("path4", 1, 2, 0),
        ("path4", 2, 1, 3),
    ];
    let mut notes = Vec::new();
    for (name, v, w, other) in cases {
        let g = fixtures::by_name(name).unwrap();
        let (v, w) = (VertexId(v), VertexId(w));
        let alt = NormalForm::parse(&format!("{other}:1 {}:1", w.0), &g).unwrap();
        let seq: Vec<NormalForm> = (0..6).map(|n| alt.pow(n, &g)).collect();
        let root = ExtVertex::root(v);
        let images: Vec<ExtVertex> = seq
            .iter()
            .map(|x| ext_act(x, &ExtVertex::root(w), &g))
            .collect();
        let mut sets: Vec<Vec<(ExtVertex, ExtVertex)>> = vec![
            vec![],
            vec![(root.clone(), ExtVertex::root(w))],
            vec![
                (root.clone(), images[1].clone()),
                (images[2].clone(), root.clone()),
            ],
        ];
        for u in g.link(v) {
            sets.push(vec![
                (root.clone(), ExtVertex::root(*u)),
                (root.clone(), images[3].clone()),
            ]);
        }
        let t = wandering_orbit_experiment(v, w, &seq, &sets, &g, 1_000_000)
            .map_err(|e| e.to_string())?;
        ensure!(t.all_distinct, "{name}: images repeat");
        for (k, s) in t.settled_from.iter().enumerate() {
            ensure!(
                s.is_some(),
                "{name}: images never settle in P(v, I) for set {k}"
            );
        }
        notes.push(format!("{name} v={v} w={w}: settled {:?}", t.settled_from));
    }
    Ok(notes.join("; "))
}

fn dihedral_perms(n: usize) -> ActionDoc {
    let mut perms = Vec::new();
    for k in 0..n {
        perms.push(Permutation {
            name: format!("r{k}"),
            map: (0..n).map(|v| ((v + k) % n) as u32).collect(),
        });
        perms.push(Permutation {
            name: format!("s{k}"),
            map: (0..n).map(|v| ((k + n - v) % n) as u32).collect(),
        });
    }
    ActionDoc { perms }
}

fn all_perms(points: &[u32], n: usize) -> ActionDoc {
    // permutations of `points` fixing everything else
    fn go(rest: &mut Vec<u32>, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            cur.push(x);
            go(rest, cur, out);
            cur.pop();
            rest.insert(i, x);
        }
    }
    let mut images = Vec::new();
    go(&mut points.to_vec(), &mut Vec::new(), &mut images);
    let perms = images
        .into_iter()
        .enumerate()
        .map(|(i, img)| {
            let mut map: Vec<u32> = (0..n as u32).collect();
            for (p, q) in points.iter().zip(img) {
                map[*p as usize] = q;
            }
            Permutation {
                name: format!("p{i}"),
                map,
            }
        })
        .collect();
    ActionDoc { perms }
}

fn c11_wreath() -> Outcome {
    let cases = [
        ("dihedral", all_perms(&[0, 1], 2)),
        ("pentagon", dihedral_perms(5)),
        ("square-z3", dihedral_perms(4)),
        ("star3-z3", all_perms(&[1, 2, 3], 4)),
    ];
    let mut r = rng(1111);
    let mut checked = 0;
    for (name, doc) in cases {
        let g = fixtures::by_name(name).unwrap();
        let action = GraphAction::from_doc(&doc, &g).map_err(|e| format!("{name}: {e}"))?;
        let wr = Wreath::new(&g, &action);
        let names: Vec<String> = action.perms().iter().map(|p| p.name.clone()).collect();
        let pick = |r: &mut rand_chacha::ChaCha8Rng| -> WreathElem {
            let w = random_element(r, &g, 6);
            wr.elem(w, &names[r.gen_range(0..names.len())]).unwrap()
        };
        let ball = cayley_ball(&g, 4);
        for _ in 0..200 {
            let (x, y, z) = (pick(&mut r), pick(&mut r), pick(&mut r));
            let w = random_element(&mut r, &g, 6);
            let (p, q) = (&x.actor, &y.actor);
            let pq = action.compose(p, q).unwrap();
            let lhs = action.apply_automorphism(pq, &w, &g).unwrap();
            let rhs = action
                .apply_automorphism(p, &action.apply_automorphism(q, &w, &g).unwrap(), &g)
                .unwrap();
            ensure!(
                lhs == rhs,
                "{name}: alpha is not a homomorphism at {p}, {q}, {w}"
            );
            ensure!(lhs.len() == w.len(), "{name}: alpha changed a length");
            let xy_z = wr.mul(&wr.mul(&x, &y).unwrap(), &z).unwrap();
            let x_yz = wr.mul(&x, &wr.mul(&y, &z).unwrap()).unwrap();
            ensure!(xy_z == x_yz, "{name}: not associative");
            ensure!(
                wr.mul(&wr.identity(), &x).unwrap() == x
                    && wr.mul(&x, &wr.identity()).unwrap() == x,
                "{name}: identity law"
            );
            let xi = wr.inverse(&x).unwrap();
            ensure!(
                wr.mul(&x, &xi).unwrap() == wr.identity()
                    && wr.mul(&xi, &x).unwrap() == wr.identity(),
                "{name}: inverse law"
            );
            let (a, b) = (
                &ball[r.gen_range(0..ball.len())],
                &ball[r.gen_range(0..ball.len())],
            );
            let (ta, tb) = (
                wr.act_on_cayley(&x, a).unwrap(),
                wr.act_on_cayley(&x, b).unwrap(),
            );
            let d = |s: &NormalForm, t: &NormalForm| s.inverse(&g).mul(t, &g).len();
            ensure!(d(&ta, &tb) == d(a, b), "{name}: distance not preserved");
            checked += 1;
        }
        for v in g.vertices() {
            for e in g.group(v).nontrivial() {
                let probe = wreath_stabilizer_probe(
                    &g,
                    &action,
                    v,
                    &GroupElem::new(g.group(v).clone(), e).unwrap(),
                )
                .unwrap();
                let mut expected: Vec<String> = action
                    .perms()
                    .iter()
                    .filter(|p| p.map[v.idx()] == v.0)
                    .map(|p| p.name.clone())
                    .collect();
                expected.sort();
                ensure!(
                    probe.fixing_both == expected,
                    "{name}: stabilizer probe at {v} gave {:?}",
                    probe.fixing_both
                );
            }
        }
    }
    Ok(format!("{checked} sampled cases over 4 actions"))
}

fn c12_determinism() -> Outcome {
    let mut sizes = Vec::new();
    for name in ["dihedral", "path3", "square-z3"] {
        let g = fixtures::by_name(name).unwrap();
        let b = VerifyBudget::default();
        let first = render(&verify(&g, 42, &b), name);
        let second = render(&verify(&g, 42, &b), name);
        ensure!(first == second, "{name}: reports differ");
        ensure!(
            verify(&g, 42, &b).all_passed,
            "{name}: invariant suite failed:\n{first}"
        );
        sizes.push(first.len());
    }
    Ok(format!("byte-identical reports of {sizes:?} bytes"))
}

/// Name, time limit in seconds, check.
type Criterion = (&'static str, Option<u64>, fn() -> Outcome);

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("normal-form soundness", Some(10), c1_soundness),
        ("normal-form uniqueness", None, c2_uniqueness),
        ("oracle equivalence", None, c3_oracle),
        ("coset suite", Some(60), c4_cosets),
        ("hyperbolicity echo", None, c5_hyperbolicity),
        ("fineness echo", None, c6_fineness),
        ("word metric", None, c7_word_metric),
        ("infinite dihedral", None, c8_dihedral),
        ("extension graph", Some(60), c9_extension),
        ("dynamics", None, c10_dynamics),
        ("wreath product", None, c11_wreath),
        ("determinism", None, c12_determinism),
    ];
    let only: Option<usize> = std::env::var("ACCEPTANCE_ONLY")
        .ok()
        .and_then(|s| s.parse().ok());
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.into_iter().enumerate() {
        let n = i + 1;
        if only.is_some_and(|k| k != n) {
            continue;
        }
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let elapsed = start.elapsed();
        let result = match (result, limit) {
            (Ok(_), Some(l)) if elapsed > Duration::from_secs(l) => {
                Err(format!("took longer than {l} s"))
            }
            (r, _) => r,
        };
        let (tag, detail) = match &result {
            Ok(d) => ("PASS", d.clone()),
            Err(e) => ("FAIL", e.clone()),
        };
        if result.is_err() {
            failed += 1;
        }
        println!(
            "{tag} {n:>2} {name} [{:.2}s] {detail}",
            elapsed.as_secs_f64()
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
