use graphprod::cayley::CayleyGraph;
use graphprod::coset::{decompose, in_rf, left_coset_rep};
use graphprod::dynamics::{
    bounded_order, fixed_ext_vertices, wandering_orbit_experiment, OrderStatus, REPORT_HEADER,
};
use graphprod::explore::{
    ball_bfs, bigon_check, circuits_through_edge, four_point_delta, geodesics, girth, Basepoints,
    BigonConfig, FourPointConfig, Girth,
};
use graphprod::extension::{
    canonicalize_ext, ext_act, ext_neighbors_windowed, ext_stabilizer_test, ExtVertex,
    ExtensionWindow,
};
use graphprod::report::{ball_dot, ext_ball_dot, Budget};
use graphprod::verify::{render, verify, VerifyBudget};
use graphprod::word::{enumerate_normal_forms, Word};
use graphprod::wreath::{wreath_stabilizer_probe, Wreath};
use graphprod::{DefiningGraph, GroupElem, NormalForm, Syllable};
use serde_json::json;

use crate::input::{self, usage, CliError};
use crate::output::Report;
use crate::{CayleyCmd, Cli, Command, DynCmd, ExtCmd, ExtTarget, Opts, WreathCmd};

const DEFAULT_RADIUS: u32 = 3;
const DEFAULT_WINDOW: u32 = 1;
const DEFAULT_CAP: usize = 100_000;
const DEFAULT_ORDER_BOUND: usize = 100;

struct Ctx<'a> {
    opts: &'a Opts,
    graph: DefiningGraph,
    name: String,
}

impl Ctx<'_> {
    fn radius(&self) -> u32 {
        self.opts.radius.unwrap_or(DEFAULT_RADIUS)
    }

    fn window(&self) -> u32 {
        self.opts.window.unwrap_or(DEFAULT_WINDOW)
    }

    fn cap(&self) -> Result<usize, CliError> {
        input::positive(self.opts.cap.unwrap_or(DEFAULT_CAP), "--cap")
    }

    fn word(&self) -> Result<NormalForm, CliError> {
        input::word(self.opts.word.as_deref(), "--word", &self.graph)
    }

    fn budget(&self) -> Budget {
        Budget {
            seed: Some(self.opts.seed),
            ..Default::default()
        }
    }

    fn ext_target(&self, t: &ExtTarget) -> Result<ExtVertex, CliError> {
        let v = input::vertex(t.vertex, "--vertex", &self.graph)?;
        let rho = input::word_or_identity(t.conj.as_deref(), &self.graph)?;
        Ok(canonicalize_ext(v, &rho, &self.graph)?)
    }
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let (graph, name) = input::load_graph(cli.opts.graph.as_deref())?;
    let ctx = Ctx {
        opts: &cli.opts,
        graph,
        name,
    };
    match &cli.command {
        Command::Graph => graph_info(&ctx),
        Command::Nf => nf(&ctx),
        Command::Coset => coset(&ctx),
        Command::Cayley(c) => cayley(&ctx, c),
        Command::Ext(c) => ext(&ctx, c),
        Command::Dyn(c) => dynamics(&ctx, c),
        Command::Wreath(c) => wreath(&ctx, c),
        Command::Verify { samples } => run_verify(&ctx, *samples),
    }
}

fn graph_info(ctx: &Ctx) -> Result<Report, CliError> {
    let g = &ctx.graph;
    let mut rep = Report::new(ctx.budget());
    let summary = g.summary();
    let preds = g.predicates();
    let groups: Vec<String> = g
        .vertices()
        .map(|v| g.group(v).label().to_string())
        .collect();
    rep.record(
        "graph",
        &json!({
            "name": ctx.name,
            "groups": groups,
            "edges": g.edges(),
            "summary": summary,
            "predicates": preds,
        }),
    );
    rep.line(format!(
        "{}: {} vertices, {} edges, girth {}",
        ctx.name, summary.vertices, summary.edges, summary.girth
    ));
    rep.line(format!("groups: {}", groups.join(" ")));
    rep.line(format!("leaves: {:?}", preds.leaves));
    rep.line(match preds.diameter {
        Some(d) => format!("diameter: {d}"),
        None => "diameter: inf".to_string(),
    });
    rep.set_dot(g.to_dot());
    Ok(rep)
}

fn nf(ctx: &Ctx) -> Result<Report, CliError> {
    let g = &ctx.graph;
    let text = ctx.opts.word.as_deref().unwrap_or_default();
    let input: Word = text.parse()?;
    let x = ctx.word()?;
    let cap = ctx.cap()?;
    let shuffles = enumerate_normal_forms(&x, g, cap);
    let mut rep = Report::new(Budget {
        cap: Some(cap),
        ..ctx.budget()
    });
    let words: Vec<String> = shuffles
        .words
        .iter()
        .map(|w| Word(w.clone()).to_string())
        .collect();
    rep.exhausted(shuffles.overflow);
    rep.record(
        "normal_form",
        &json!({
            "input": input.to_string(),
            "normal_form": x,
            "length": x.len(),
            "support": x.support(),
            "shuffles": words,
        }),
    );
    rep.line(x.to_string());
    rep.line(format!("length {}", x.len()));
    rep.line(format!("shuffles {}", words.len()));
    Ok(rep)
}

fn coset(ctx: &Ctx) -> Result<Report, CliError> {
    let g = &ctx.graph;
    let x = ctx.word()?;
    let f = input::vertex_set(ctx.opts.f.as_deref(), g)?;
    let d = decompose(&x, &f, g);
    let rep_left = left_coset_rep(&x, &f, g);
    let mut rep = Report::new(ctx.budget());
    rep.record(
        "coset",
        &json!({
            "element": x,
            "F": f.to_vec(),
            "p": d.p,
            "r": d.r,
            "in_rf": in_rf(&x, &f, g),
            "left_coset_rep": rep_left,
        }),
    );
    rep.line(format!("p = {}", d.p));
    rep.line(format!("r = {}", d.r));
    rep.line(format!("left coset rep = {rep_left}"));
    Ok(rep)
}

fn cayley(ctx: &Ctx, cmd: &CayleyCmd) -> Result<Report, CliError> {
    let g = &ctx.graph;
    let c = CayleyGraph::new(g);
    let cap = ctx.cap()?;
    let radius = ctx.radius();
    let mut rep = Report::new(Budget {
        cap: Some(cap),
        ..ctx.budget()
    });
    match cmd {
        CayleyCmd::Ball => {
            rep.budget.radius = Some(radius);
            let center = input::word_or_identity(ctx.opts.word.as_deref(), g)?;
            let ball = ball_bfs(&c, &center, radius, cap);
            rep.exhausted(ball.budget_exhausted);
            for (x, d) in ball.vertices.iter().zip(&ball.dist) {
                rep.record("vertex", &json!({ "element": x, "distance": d }));
            }
            let summary = ball.report();
            rep.record("ball", &json!({ "center": center, "report": summary }));
            rep.line(format!(
                "ball of radius {radius} about {center}: {} vertices, {} edges, spheres {:?}",
                summary.vertex_count, summary.edge_count, summary.sphere_sizes
            ));
            rep.set_dot(ball_dot(&ball, "cayley", |x| x.to_string()).to_dot());
        }
        CayleyCmd::Geodesics => {
            let target = ctx.word()?;
            let one = NormalForm::identity();
            let set = geodesics(&c, &one, &target, cap, cap)?;
            rep.exhausted(set.overflow);
            for (i, p) in set.paths.iter().enumerate() {
                rep.record("geodesic", &json!({ "index": i, "path": p }));
                let shown: Vec<String> = p.iter().map(ToString::to_string).collect();
                rep.line(shown.join(" -> "));
            }
            rep.record(
                "geodesics",
                &json!({
                    "target": target,
                    "distance": set.distance,
                    "count": set.paths.len(),
                }),
            );
            rep.line(format!(
                "{} geodesics of length {}",
                set.paths.len(),
                set.distance
            ));
        }
        CayleyCmd::Girth => {
            rep.budget.radius = Some(radius);
            let gi = girth(&c, radius, cap);
            rep.exhausted(matches!(gi, Girth::Unknown { .. }));
            rep.record("girth", &json!({ "girth": gi }));
            rep.line(format!("girth {gi}"));
        }
        CayleyCmd::Circuits { edge, length } => {
            let label: Word = edge.parse()?;
            let [s] = label.0[..] else {
                return usage("--edge must be a single syllable");
            };
            s.validate(g)?;
            let from = input::word_or_identity(ctx.opts.word.as_deref(), g)?;
            let to = from.mul_syllable(s, g);
            let report = circuits_through_edge(&c, &(from.clone(), to), *length, cap)?;
            rep.exhausted(report.truncated);
            let mut by_length = vec![0usize; length + 1];
            for cyc in &report.circuits {
                by_length[cyc.len()] += 1;
                rep.record("circuit", &json!({ "length": cyc.len(), "vertices": cyc }));
            }
            rep.record(
                "circuits",
                &json!({
                    "edge": report.edge,
                    "label": s.to_string(),
                    "max_length": length,
                    "count": report.count,
                    "by_length": by_length,
                }),
            );
            rep.line(format!(
                "{} circuits of length <= {length} through ({from}, {}); by length {:?}",
                report.count, report.edge.1, by_length
            ));
        }
        CayleyCmd::Delta {
            samples,
            all_basepoints,
        } => {
            rep.budget.radius = Some(radius);
            let mut cfg = FourPointConfig::new(radius);
            cfg.seed = ctx.opts.seed;
            cfg.vertex_cap = cap;
            if let Some(s) = samples {
                cfg.sample_cap = input::positive(*s, "--samples")?;
            }
            if *all_basepoints {
                cfg.basepoints = Basepoints::AllInBall;
            }
            let est = four_point_delta(&c, &cfg)?;
            rep.exhausted(est.budget_exhausted);
            rep.record("delta", &est);
            rep.line(format!(
                "four-point delta {} at radius {radius} ({} tuples, {})",
                est.delta_four_point,
                est.tuples_checked,
                if est.exhaustive {
                    "exhaustive"
                } else {
                    "sampled"
                }
            ));
        }
        CayleyCmd::Bigon {
            delta,
            all_basepoints,
        } => {
            rep.budget.radius = Some(radius);
            let mut cfg = BigonConfig::new(radius, *delta);
            cfg.vertex_cap = cap;
            if *all_basepoints {
                cfg.basepoints = Basepoints::AllInBall;
            }
            let report = bigon_check(&c, &cfg)?;
            rep.record("bigon", &report);
            rep.line(format!(
                "{} at delta {delta}: max thin {}, max interior {}, {} bigons",
                if report.passed() { "pass" } else { "fail" },
                report.max_thin,
                report.max_interior,
                report.bigons_checked
            ));
        }
    }
    Ok(rep)
}

fn ext(ctx: &Ctx, cmd: &ExtCmd) -> Result<Report, CliError> {
    let g = &ctx.graph;
    let cap = ctx.cap()?;
    let window = ctx.window();
    let mut rep = Report::new(Budget {
        cap: Some(cap),
        window: Some(window),
        ..ctx.budget()
    });
    match cmd {
        ExtCmd::Ball(t) => {
            let radius = ctx.radius();
            rep.budget.radius = Some(radius);
            let root = ctx.ext_target(t)?;
            let win = ExtensionWindow::new(g, window, cap)?.with_origin(root.clone());
            if !win.contains(&root) {
                return usage(format!("{root} lies outside the window {window}"));
            }
            let ball = ball_bfs(&win, &root, radius, cap);
            rep.exhausted(ball.budget_exhausted);
            for (x, d) in ball.vertices.iter().zip(&ball.dist) {
                rep.record(
                    "ext_vertex",
                    &json!({ "vertex": x, "label": x.to_string(), "distance": d }),
                );
            }
            let summary = ball.report();
            rep.record(
                "ext_ball",
                &json!({ "center": root, "window_vertices": win.vertices().len(), "report": summary }),
            );
            rep.line(format!(
                "ball of radius {radius} about {root} in window {window}: {} vertices, {} edges, spheres {:?}",
                summary.vertex_count, summary.edge_count, summary.sphere_sizes
            ));
            rep.set_dot(ext_ball_dot(&ball, "extension").to_dot());
        }
        ExtCmd::Link(t) => {
            let x = ctx.ext_target(t)?;
            let nbrs = ext_neighbors_windowed(&x, window, g, cap)?;
            for y in &nbrs {
                rep.record(
                    "ext_neighbor",
                    &json!({ "vertex": y, "label": y.to_string() }),
                );
                rep.line(y.to_string());
            }
            rep.record(
                "ext_link",
                &json!({ "vertex": x, "count": nbrs.len(), "lower_bound": true }),
            );
            rep.line(format!(
                "{} neighbours of {x} with conjugators of length <= {window}",
                nbrs.len()
            ));
        }
        ExtCmd::Act(t) => {
            let x = ctx.ext_target(t)?;
            let h = ctx.word()?;
            let y = ext_act(&h, &x, g);
            rep.record(
                "ext_act",
                &json!({ "element": h, "vertex": x, "image": y, "fixed": x == y }),
            );
            rep.line(format!("{h} . {x} = {y}"));
        }
        ExtCmd::Stab { vertex } => {
            let v = input::vertex(*vertex, "--vertex", g)?;
            let h = ctx.word()?;
            let fixes = ext_stabilizer_test(&h, v, g);
            rep.record(
                "ext_stab",
                &json!({ "element": h, "vertex": v, "in_stabilizer": fixes }),
            );
            rep.line(format!(
                "{h} {} ({v}, e)",
                if fixes { "fixes" } else { "moves" }
            ));
        }
    }
    Ok(rep)
}

fn dynamics(ctx: &Ctx, cmd: &DynCmd) -> Result<Report, CliError> {
    let g = &ctx.graph;
    let mut rep = Report::new(ctx.budget());
    match cmd {
        DynCmd::Order => {
            let bound = input::positive(
                ctx.opts.order_bound.unwrap_or(DEFAULT_ORDER_BOUND),
                "--order-bound",
            )?;
            rep.budget.order_bound = Some(bound);
            let x = ctx.word()?;
            let status = bounded_order(&x, bound, g);
            rep.record(
                "order",
                &json!({ "header": REPORT_HEADER, "element": x, "order": status }),
            );
            rep.line(match status {
                OrderStatus::Finite(n) => format!("order {n}"),
                OrderStatus::ExceedsBound(n) => format!("order exceeds {n}"),
            });
        }
        DynCmd::Fixed(t) => {
            let (cap, window, radius) = (ctx.cap()?, ctx.window(), ctx.radius());
            rep.budget.cap = Some(cap);
            rep.budget.window = Some(window);
            rep.budget.radius = Some(radius);
            let root = ctx.ext_target(t)?;
            let x = ctx.word()?;
            let fixed = fixed_ext_vertices(&x, &root, window, radius, g, cap)?;
            rep.exhausted(fixed.budget_exhausted);
            rep.record("fixed", &fixed);
            rep.line(REPORT_HEADER);
            rep.line(format!(
                "{x} fixes {} of {} explored vertices",
                fixed.fixed.len(),
                fixed.explored
            ));
            for y in &fixed.fixed {
                rep.line(format!("  {y}"));
            }
        }
        DynCmd::Wander { v, w, seq, steps } => {
            let cap = ctx.cap()?;
            rep.budget.cap = Some(cap);
            let (v, w) = (
                input::vertex(Some(*v), "--v", g)?,
                input::vertex(Some(*w), "--w", g)?,
            );
            let seq: Vec<NormalForm> = match seq {
                Some(s) => s
                    .split(';')
                    .map(|t| NormalForm::parse(t, g))
                    .collect::<Result<_, _>>()?,
                None => {
                    let x = ctx.word()?;
                    (1..=*steps).map(|k| x.pow(k, g)).collect()
                }
            };
            let cut = vec![(ExtVertex::root(v), ExtVertex::root(w))];
            let trace = wandering_orbit_experiment(v, w, &seq, &[vec![], cut], g, cap)?;
            rep.budget.window = Some(trace.window);
            for s in &trace.steps {
                rep.record("wander_step", s);
                rep.line(format!(
                    "{}: {} -> {}{}",
                    s.index,
                    s.element,
                    s.image,
                    if s.distinct { "" } else { " (repeat)" }
                ));
            }
            rep.record(
                "wander",
                &json!({
                    "header": trace.header,
                    "v": v,
                    "w": w,
                    "edge_sets": ["none", format!("({v}, e)-({w}, e)")],
                    "all_distinct": trace.all_distinct,
                    "settled_from": trace.settled_from,
                }),
            );
            rep.line(REPORT_HEADER);
            rep.line(format!("all distinct: {}", trace.all_distinct));
        }
    }
    Ok(rep)
}

fn wreath(ctx: &Ctx, cmd: &WreathCmd) -> Result<Report, CliError> {
    let g = &ctx.graph;
    let action = input::load_action(ctx.opts.action.as_deref(), g)?;
    let w = Wreath::new(g, &action);
    let mut rep = Report::new(ctx.budget());
    match cmd {
        WreathCmd::Mul { perm, word2, perm2 } => {
            let x = w.elem(input::word_or_identity(ctx.opts.word.as_deref(), g)?, perm)?;
            let y = w.elem(input::word_or_identity(word2.as_deref(), g)?, perm2)?;
            let xy = w.mul(&x, &y)?;
            rep.record("wreath_mul", &json!({ "x": x, "y": y, "product": xy }));
            rep.line(format!("({}, {})", xy.word, xy.actor));
        }
        WreathCmd::Act { perm, target } => {
            let x = w.elem(input::word_or_identity(ctx.opts.word.as_deref(), g)?, perm)?;
            let t = input::word(target.as_deref(), "--target", g)?;
            let image = w.act_on_cayley(&x, &t)?;
            rep.record(
                "wreath_act",
                &json!({ "element": x, "vertex": t, "image": image }),
            );
            rep.line(image.to_string());
        }
        WreathCmd::Probe { vertex, elem } => {
            let v = input::vertex(Some(*vertex), "--vertex", g)?;
            let ge = GroupElem::new(g.group(v).clone(), *elem)?;
            let probe = wreath_stabilizer_probe(g, &action, v, &ge)?;
            rep.record("wreath_probe", &probe);
            rep.line(format!(
                "fixing 1 and {}: {:?}; fixing {v}: {:?}",
                NormalForm::syllable(Syllable {
                    vertex: v,
                    elem: *elem
                }),
                probe.fixing_both,
                probe.fixing_vertex
            ));
        }
    }
    Ok(rep)
}

fn run_verify(ctx: &Ctx, samples: usize) -> Result<Report, CliError> {
    let budget = VerifyBudget {
        samples: input::positive(samples, "--samples")?,
        radius: ctx.opts.radius.unwrap_or(VerifyBudget::default().radius),
        window: ctx.opts.window.unwrap_or(VerifyBudget::default().window),
        cap: input::positive(ctx.opts.cap.unwrap_or(VerifyBudget::default().cap), "--cap")?,
    };
    let report = verify(&ctx.graph, ctx.opts.seed, &budget);
    let mut rep = Report::new(Budget {
        radius: Some(budget.radius),
        cap: Some(budget.cap),
        window: Some(budget.window),
        ..ctx.budget()
    });
    rep.failed = !report.all_passed;
    rep.exhausted(report.checks.iter().any(|c| c.budget_exhausted));
    for c in &report.checks {
        let mut line = format!(
            "{} {} ({} cases)",
            if c.passed { "PASS" } else { "FAIL" },
            c.name,
            c.cases
        );
        if let Some(w) = &c.witness {
            line.push_str(&format!(": {w}"));
        }
        rep.line(line);
    }
    rep.set_raw_json(render(&report, &ctx.name));
    Ok(rep)
}
