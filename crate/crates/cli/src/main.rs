//! `graphprod`: normal forms, cosets, Cayley and extension graphs of graph
//! products of finite groups, from the command line.
//!
//! Exit codes: 0 success, 1 invalid input, 2 budget exhausted (partial
//! results are still printed and flagged), 3 invariant failure.

mod commands;
mod input;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use output::Format;

#[derive(Debug, Parser)]
#[command(name = "graphprod", version, about, propagate_version = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Opts,
}

/// Flags shared by every subcommand. Each subcommand reads the ones it needs.
#[derive(Debug, Clone, Args)]
pub struct Opts {
    /// Defining graph: a built-in fixture name or a JSON file
    #[arg(long, global = true)]
    pub graph: Option<String>,
    /// Graph action for wreath commands: a JSON file or `trivial`
    #[arg(long, global = true)]
    pub action: Option<String>,
    /// A word of `vertex:index` syllables, e.g. "0:1 1:1"; `e` is the identity
    #[arg(long, global = true)]
    pub word: Option<String>,
    /// Vertex subset for coset commands, e.g. "0,2"
    #[arg(long = "F", global = true)]
    pub f: Option<String>,
    /// Exploration radius
    #[arg(long, global = true)]
    pub radius: Option<u32>,
    /// Conjugator-length window for extension-graph commands
    #[arg(long, global = true)]
    pub window: Option<u32>,
    /// Vertex cap for explorations
    #[arg(long, global = true)]
    pub cap: Option<usize>,
    /// Largest order tried before reporting "exceeds bound"
    #[arg(long, global = true)]
    pub order_bound: Option<usize>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Seed for sampled checks; recorded in every report
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Summary, leaf predicates and DOT export of the defining graph
    Graph,
    /// Normal form of --word and its shuffles
    Nf,
    /// Factor --word as p r with p in the subgroup on --F and r in R_F
    Coset,
    /// Balls, geodesics, girth, circuits and hyperbolicity probes in the Cayley graph
    #[command(subcommand)]
    Cayley(CayleyCmd),
    /// The extension graph inside a conjugator-length window
    #[command(subcommand)]
    Ext(ExtCmd),
    /// Orders, fixed sets and orbit traces of the conjugation action
    #[command(subcommand)]
    Dyn(DynCmd),
    /// The semidirect product with a finite group of graph symmetries
    #[command(subcommand)]
    Wreath(WreathCmd),
    /// Run the seeded invariant suite on the graph
    Verify {
        /// Random samples per check
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum CayleyCmd {
    /// Ball of --radius about --word (default the identity)
    Ball,
    /// All geodesics from the identity to --word
    Geodesics,
    /// Girth of the Cayley graph, searched to --radius
    Girth,
    /// Circuits through the edge from --word along a generator
    Circuits {
        /// Edge label, a single syllable such as "0:1"
        #[arg(long)]
        edge: String,
        /// Longest circuit length
        #[arg(long, default_value_t = 6)]
        length: usize,
    },
    /// Four-point hyperbolicity estimate on the ball of --radius
    Delta {
        /// Above this many tuples, a seeded sample of this size is checked
        #[arg(long)]
        samples: Option<u64>,
        /// Use every ball vertex as a basepoint, not just the identity
        #[arg(long)]
        all_basepoints: bool,
    },
    /// Thin-bigon scan on the ball of --radius
    Bigon {
        #[arg(long, default_value_t = 2)]
        delta: u32,
        #[arg(long)]
        all_basepoints: bool,
    },
}

#[derive(Debug, Args)]
pub struct ExtTarget {
    /// Base vertex of the extension-graph vertex
    #[arg(long)]
    pub vertex: Option<u32>,
    /// Conjugator of the extension-graph vertex (default the identity)
    #[arg(long)]
    pub conj: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum ExtCmd {
    /// Ball of --radius in the windowed extension graph
    Ball(ExtTarget),
    /// Neighbours of a vertex among conjugators within --window
    Link(ExtTarget),
    /// Image of a vertex under conjugation by --word
    Act(ExtTarget),
    /// Whether --word fixes (v, e)
    Stab {
        #[arg(long)]
        vertex: Option<u32>,
    },
}

#[derive(Debug, Subcommand)]
pub enum DynCmd {
    /// Order of --word, up to --order-bound
    Order,
    /// Vertices of the windowed extension graph fixed by --word
    Fixed(ExtTarget),
    /// Orbit of (w, e) under a sequence fixing (v, e)
    Wander {
        #[arg(long)]
        v: u32,
        #[arg(long)]
        w: u32,
        /// Semicolon separated words; defaults to the powers of --word
        #[arg(long)]
        seq: Option<String>,
        /// Number of powers of --word when --seq is absent
        #[arg(long, default_value_t = 4)]
        steps: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum WreathCmd {
    /// Product (--word, --perm)(--word2, --perm2)
    Mul {
        #[arg(long)]
        perm: String,
        #[arg(long)]
        word2: Option<String>,
        #[arg(long)]
        perm2: String,
    },
    /// Image of the Cayley vertex --target under (--word, --perm)
    Act {
        #[arg(long)]
        perm: String,
        #[arg(long)]
        target: Option<String>,
    },
    /// Symmetries fixing both 1 and a vertex-group element g
    Probe {
        #[arg(long)]
        vertex: u32,
        /// Index of g in the vertex group
        #[arg(long)]
        elem: u32,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let report = match commands::run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match report.render(cli.opts.format) {
        Ok(text) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(text.as_bytes());
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
