//! `gallai`: construct, verify and search Gallai colorings from the shell.
//!
//! Exit codes: 0 success or feasible, 1 infeasible or not constructed,
//! 2 usage or input error, 3 undecided within the budget.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use gallai::construct::{construct_balanced, construct_division, Registry};
use gallai::format::{from_any, to_dot, to_json, to_text, verdict_to_json};
use gallai::generator::random_gallai;
use gallai::oracle::{compute_g, enumerate_realizable, search_with, Budget, EdgeOrder, LevelStatus, SearchOptions};
use gallai::verify::{check_necessary, find_gallai_partition, rainbow_triangle};
use gallai::{ConstructError, Coloring, Distribution, DivisionParams, NotConstructedReason, VerdictTag};

const OK: u8 = 0;
const NEGATIVE: u8 = 1;
const USAGE: u8 = 2;
const UNKNOWN: u8 = 3;

#[derive(Parser)]
#[command(name = "gallai", version, about = "Gallai colorings of complete graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Output {
    /// Write the coloring here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Emit JSON instead of the text format.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Lex,
    Colex,
}

#[derive(Args)]
struct SearchArgs {
    /// Node budget per search.
    #[arg(long, default_value_t = 1_000_000_000)]
    budget_nodes: u64,
    /// Wall-clock budget per search, in milliseconds.
    #[arg(long)]
    budget_ms: Option<u64>,
    /// Worker threads for the search.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Edge visiting order.
    #[arg(long, value_enum, default_value_t = Order::Lex)]
    order: Order,
}

impl SearchArgs {
    fn options(&self) -> SearchOptions {
        SearchOptions {
            budget: Budget {
                nodes: self.budget_nodes,
                time: self.budget_ms.map(Duration::from_millis),
            },
            jobs: self.jobs.max(1),
            order: match self.order {
                Order::Lex => EdgeOrder::Lexicographic,
                Order::Colex => EdgeOrder::Colex,
            },
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a Gallai coloring with the given class sizes.
    Construct {
        #[arg(long)]
        n: usize,
        /// Class sizes, comma separated, any order.
        #[arg(long)]
        dist: String,
        /// Realizer to use (see `strategies`).
        #[arg(long, default_value = "auto")]
        strategy: String,
        #[command(flatten)]
        output: Output,
    },
    /// k classes of size p and one class of size q.
    ConstructDiv {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[command(flatten)]
        output: Output,
    },
    /// k classes whose sizes differ by at most one.
    ConstructBalanced {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Check a coloring file.
    Verify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate the prefix-sum necessary condition.
    CheckNecessary {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dist: String,
    },
    /// Decide realizability by exhaustive search.
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dist: String,
        #[command(flatten)]
        search: SearchArgs,
        /// Write the witness coloring here when feasible.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Classify every k-part distribution on K_n.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        json: bool,
    },
    /// Smallest n at which every k-part distribution is realizable.
    ComputeG {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n_max: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Random Gallai coloring by repeated substitution.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        max_colors: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Convert a coloring file to Graphviz DOT.
    ExportDot {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the registered realizers.
    Strategies,
}

/// An error that maps to a specific exit code.
#[derive(Debug)]
struct Exit(u8, String);

impl std::fmt::Display for Exit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.1)
    }
}

impl std::error::Error for Exit {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Exit(USAGE, msg.into()).into()
}

fn parse_dist(n: usize, text: &str) -> Result<Distribution> {
    let sizes = text
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| usage(format!("bad --dist {text:?}: {e}")))?;
    let d = Distribution::canonicalize(sizes, n).map_err(|e| usage(format!("bad --dist: {e}")))?;
    eprintln!("distribution: {d} on n={n}");
    Ok(d)
}

fn read_coloring(path: &PathBuf) -> Result<Coloring> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(|e| usage(format!("{e:#}")))?;
    from_any(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_coloring(c: &Coloring, output: &Output) -> Result<()> {
    let text = if output.json { to_json(c) + "\n" } else { to_text(c) };
    emit(&text, output.out.as_ref())
}

fn construct_failure(e: ConstructError) -> anyhow::Error {
    let code = match &e {
        ConstructError::NotConstructed(NotConstructedReason::Unknown) | ConstructError::BudgetExceeded => UNKNOWN,
        ConstructError::PreconditionViolated(_)
        | ConstructError::TooManyColors { .. }
        | ConstructError::UnknownStrategy(_)
        | ConstructError::Model(_) => USAGE,
        _ => NEGATIVE,
    };
    Exit(code, e.to_string()).into()
}

fn tag_code(tag: VerdictTag) -> u8 {
    match tag {
        VerdictTag::Feasible => OK,
        VerdictTag::Infeasible => NEGATIVE,
        VerdictTag::Unknown => UNKNOWN,
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.cmd {
        Cmd::Construct { n, dist, strategy, output } => {
            let d = parse_dist(n, &dist)?;
            let c = Registry::default().realize(&strategy, &d).map_err(construct_failure)?;
            emit_coloring(&c, &output)?;
            Ok(OK)
        }
        Cmd::ConstructDiv { n, k, p, q, output } => {
            let params = DivisionParams::new(n, k, p, q).map_err(|e| usage(e.to_string()))?;
            let c = construct_division(&params).map_err(construct_failure)?;
            emit_coloring(&c, &output)?;
            Ok(OK)
        }
        Cmd::ConstructBalanced { n, k, output } => {
            let c = construct_balanced(n, k).map_err(construct_failure)?;
            emit_coloring(&c, &output)?;
            Ok(OK)
        }
        Cmd::Verify { file, json } => {
            let c = read_coloring(&file)?;
            let rainbow = rainbow_triangle(&c);
            let d = c.distribution();
            let necessary = check_necessary(&d);
            let partition = find_gallai_partition(&c).ok();
            if json {
                let report = json!({
                    "gallai": rainbow.is_none(),
                    "rainbow_triangle": rainbow,
                    "n": c.n(),
                    "k": c.k(),
                    "sizes": d.sizes(),
                    "necessary_condition": necessary.is_ok(),
                    "necessary_failure_ell": necessary.err().map(|f| f.ell),
                    "gallai_partition": partition,
                });
                println!("{report}");
            } else {
                println!("gallai={}", rainbow.is_none());
                if let Some(t) = rainbow {
                    println!("rainbow-triangle={} {} {}", t[0], t[1], t[2]);
                }
                println!("n={} k={}", c.n(), c.k());
                println!("sizes={d}");
                match necessary {
                    Ok(()) => println!("necessary-condition=pass"),
                    Err(f) => println!("necessary-condition=fail l={} ({} < {})", f.ell, f.prefix, f.bound),
                }
                if let Some(p) = partition {
                    println!("gallai-partition blocks={} cross-colors={:?}", p.blocks.len(), p.cross_colors);
                }
            }
            Ok(if rainbow.is_none() { OK } else { NEGATIVE })
        }
        Cmd::CheckNecessary { n, dist } => {
            let d = parse_dist(n, &dist)?;
            match check_necessary(&d) {
                Ok(()) => {
                    println!("pass");
                    Ok(OK)
                }
                Err(f) => {
                    println!("fail l={} ({} < {})", f.ell, f.prefix, f.bound);
                    Ok(NEGATIVE)
                }
            }
        }
        Cmd::Oracle { n, dist, search, out, json } => {
            let d = parse_dist(n, &dist)?;
            let v = search_with(&d, &search.options());
            if json {
                println!("{}", verdict_to_json(&v));
            } else {
                println!("{}", v.tag);
                eprintln!("nodes explored: {}", v.nodes_explored);
            }
            if let (Some(path), Some(w)) = (out.as_ref(), v.witness.as_ref()) {
                emit(&to_text(w), Some(path))?;
            }
            Ok(tag_code(v.tag))
        }
        Cmd::Enumerate { n, k, search, json } => {
            if k == 0 {
                return Err(usage("k must be at least 1"));
            }
            let e = enumerate_realizable(n, k, &search.options());
            for (d, v) in &e.entries {
                if json {
                    println!("{}", json!({"sizes": d.sizes(), "tag": v.tag, "nodes_explored": v.nodes_explored}));
                } else {
                    println!("{d} {}", v.tag);
                }
            }
            let count = |t| e.with_tag(t).count();
            eprintln!(
                "{} distributions: {} feasible, {} infeasible, {} unknown",
                e.entries.len(),
                count(VerdictTag::Feasible),
                count(VerdictTag::Infeasible),
                count(VerdictTag::Unknown)
            );
            Ok(if count(VerdictTag::Unknown) > 0 { UNKNOWN } else { OK })
        }
        Cmd::ComputeG { k, n_max, search } => {
            if k < 3 {
                return Err(usage("k must be at least 3"));
            }
            let r = compute_g(k, n_max, &search.options());
            for (n, status) in &r.levels {
                match status {
                    LevelStatus::AllFeasible => eprintln!("n={n}: all feasible"),
                    LevelStatus::Infeasible(d) => eprintln!("n={n}: {d} infeasible"),
                    LevelStatus::Undecided(d) => eprintln!("n={n}: {d} undecided"),
                }
            }
            match r.value {
                Some(g) => {
                    println!("{g}");
                    Ok(OK)
                }
                None => {
                    println!("unknown");
                    Ok(UNKNOWN)
                }
            }
        }
        Cmd::Random { n, seed, max_colors, output } => {
            if n == 0 || max_colors == 0 {
                return Err(usage("n and --max-colors must be at least 1"));
            }
            emit_coloring(&random_gallai(n, seed, max_colors).coloring, &output)?;
            Ok(OK)
        }
        Cmd::ExportDot { file, out } => {
            let c = read_coloring(&file)?;
            emit(&to_dot(&c), out.as_ref())?;
            Ok(OK)
        }
        Cmd::Strategies => {
            for r in Registry::default().iter() {
                println!("{:<10} {}", r.name(), r.summary());
            }
            Ok(OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            let code = e.downcast_ref::<Exit>().map_or(NEGATIVE, |x| x.0);
            ExitCode::from(code)
        }
    }
}
