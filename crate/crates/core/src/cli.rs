//! The `majdim` command line. [`run`] takes the argument list and two
//! writers and returns the process exit code, so it can be driven from tests.
//!
//! Exit codes: 0 success, 1 a negative answer (invalid realizer, unknown
//! dimension), 2 bad input, 3 an internal invariant failed.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::chains::es_chain_or_antichain;
use crate::constructions::{
    condense_lift, generic_realizer, realize_acyclic_tournament, realize_cycle, realize_empty,
    realize_path, union_realizer,
};
use crate::digraph::{generate, Digraph, Family};
use crate::io::{format_edge_list, parse_edge_list, parse_points};
use crate::profiles::{
    majority_digraph, margin_matrix, profile_to_realizer, realizer_to_profile, Profile,
};
use crate::realizer::{verify, Realizer};
use crate::solver::{dimension, Dimension, Verdict, DEFAULT_BUDGET};
use crate::sweep::{summarize, sweep, SweepRow};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// Budget used by `dim --hard`.
pub const HARD_BUDGET: u64 = 1_000_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "majdim",
    version,
    about = "Weak majority dimension of digraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a realizer against a digraph.
    Verify { digraph: PathBuf, realizer: PathBuf },
    /// Build a realizer by an explicit construction.
    Realize {
        #[command(subcommand)]
        method: Method,
    },
    /// Exact weak majority dimension.
    Dim {
        digraph: PathBuf,
        #[arg(long, default_value_t = 8)]
        max_d: usize,
        #[command(flatten)]
        budget: Budget,
        /// Use a budget of 10^9 nodes per dimension.
        #[arg(long)]
        hard: bool,
    },
    /// Merge homogeneous vertices.
    Condense {
        digraph: PathBuf,
        #[arg(long)]
        dot: bool,
    },
    /// Print a named digraph as an edge list.
    Generate {
        #[command(subcommand)]
        family: FamilyArg,
        #[arg(long, global = true)]
        dot: bool,
    },
    /// Dimension of every digraph on n vertices.
    Sweep {
        n: usize,
        #[arg(long, default_value_t = 8)]
        max_d: usize,
        /// One row per isomorphism class.
        #[arg(long)]
        dedup: bool,
        #[arg(long)]
        csv: bool,
        #[command(flatten)]
        budget: Budget,
    },
    /// Voting-profile tools.
    Profile {
        action: ProfileAction,
        file: PathBuf,
    },
    /// Longest chain or antichain of a points file.
    Es { points: PathBuf },
}

#[derive(Debug, Args)]
struct Budget {
    /// Search nodes allowed per dimension.
    #[arg(long = "budget", env = "MAJDIM_BUDGET", default_value_t = DEFAULT_BUDGET)]
    nodes: u64,
}

#[derive(Debug, Subcommand)]
enum Method {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Tournament {
        n: usize,
    },
    Empty {
        n: usize,
    },
    /// Two dimensions per arc.
    Generic {
        digraph: PathBuf,
    },
    /// Realize each part exactly and combine.
    Union {
        #[arg(required = true, num_args = 2..)]
        parts: Vec<PathBuf>,
        #[command(flatten)]
        budget: Budget,
    },
    /// Realize the condensation exactly and copy vectors to each class.
    CondenseLift {
        digraph: PathBuf,
        #[command(flatten)]
        budget: Budget,
    },
}

#[derive(Debug, Subcommand)]
enum FamilyArg {
    Empty { n: usize },
    Path { n: usize },
    Cycle { n: usize },
    Tournament { n: usize },
    SingleArc { n: usize },
    Subsets { r: usize, d: usize },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ProfileAction {
    /// Margin matrix of a profile.
    Margin,
    /// Majority digraph of a profile, as an edge list.
    Digraph,
    /// Realizer whose coordinates are the voters of a profile.
    ToRealizer,
    /// Profile whose voters are the coordinates of a realizer.
    FromRealizer,
}

struct Failure {
    code: i32,
    msg: String,
}

impl Failure {
    fn input(e: impl std::fmt::Display) -> Failure {
        Failure {
            code: EXIT_INPUT,
            msg: e.to_string(),
        }
    }

    fn internal(e: impl std::fmt::Display) -> Failure {
        Failure {
            code: EXIT_INTERNAL,
            msg: e.to_string(),
        }
    }
}

type Out<'a> = &'a mut dyn Write;

pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "majdim: {}", f.msg);
            f.code
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    let text = if path == Path::new("-") {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    };
    text.map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn read_digraph(path: &Path) -> Result<Digraph, Failure> {
    parse_edge_list(&read(path)?).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn read_realizer(path: &Path) -> Result<Realizer, Failure> {
    Realizer::from_json(&read(path)?)
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn read_profile(path: &Path) -> Result<Profile, Failure> {
    Profile::from_json(&read(path)?).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn emit(out: Out, value: &Value) -> Result<(), Failure> {
    writeln!(out, "{value}").map_err(Failure::internal)
}

fn emit_text(out: Out, text: &str) -> Result<(), Failure> {
    write!(out, "{text}").map_err(Failure::internal)
}

fn dispatch(command: Command, out: Out) -> Result<i32, Failure> {
    match command {
        Command::Verify { digraph, realizer } => {
            let d = read_digraph(&digraph)?;
            let f = read_realizer(&realizer)?;
            let report = verify(&d, &f).map_err(Failure::input)?;
            if report.valid() {
                emit(out, &json!({ "valid": true }))?;
                Ok(EXIT_OK)
            } else {
                emit(
                    out,
                    &json!({ "valid": false, "violations": report.violations }),
                )?;
                Ok(EXIT_NEGATIVE)
            }
        }
        Command::Realize { method } => {
            let (d, f) = realize(method)?;
            let report = verify(&d, &f).map_err(Failure::internal)?;
            if !report.valid() {
                return Err(Failure::internal(format!(
                    "constructed realizer failed self-verification with {} violations",
                    report.violations.len()
                )));
            }
            emit_text(out, &format!("{}\n", f.to_json()))?;
            Ok(EXIT_OK)
        }
        Command::Dim {
            digraph,
            max_d,
            budget,
            hard,
        } => {
            let d = read_digraph(&digraph)?;
            let nodes = if hard { HARD_BUDGET } else { budget.nodes };
            dim_report(&d, max_d, nodes, out)
        }
        Command::Condense { digraph, dot } => {
            let d = read_digraph(&digraph)?;
            let c = d.condense();
            if dot {
                emit_text(out, &c.condensed.to_dot())?;
            } else {
                emit(
                    out,
                    &json!({
                        "classes": c.classes(),
                        "representative": c.representative,
                        "condensed": { "n": c.condensed.n(), "arcs": c.condensed.arcs() },
                    }),
                )?;
            }
            Ok(EXIT_OK)
        }
        Command::Generate { family, dot } => {
            let family = match family {
                FamilyArg::Empty { n } => Family::Empty(n),
                FamilyArg::Path { n } => Family::Path(n),
                FamilyArg::Cycle { n } => Family::Cycle(n),
                FamilyArg::Tournament { n } => Family::AcyclicTournament(n),
                FamilyArg::SingleArc { n } => Family::SingleArc(n),
                FamilyArg::Subsets { r, d } => Family::SubsetFamily { r, d },
            };
            let d = generate(family).map_err(Failure::input)?;
            emit_text(
                out,
                &if dot {
                    d.to_dot()
                } else {
                    format_edge_list(&d)
                },
            )?;
            Ok(EXIT_OK)
        }
        Command::Sweep {
            n,
            max_d,
            dedup,
            csv,
            budget,
        } => {
            let rows = sweep(n, max_d, dedup, budget.nodes).map_err(Failure::input)?;
            if csv {
                emit_text(out, &format!("{}\n", SweepRow::CSV_HEADER))?;
            }
            for r in &rows {
                if csv {
                    emit_text(out, &format!("{}\n", r.to_csv()))?;
                } else {
                    emit(out, &serde_json::to_value(r).map_err(Failure::internal)?)?;
                }
            }
            let summary = summarize(&rows);
            let line =
                serde_json::to_string(&json!({ "summary": summary })).map_err(Failure::internal)?;
            if csv {
                emit_text(out, &format!("# {line}\n"))?;
            } else {
                emit_text(out, &format!("{line}\n"))?;
            }
            Ok(if !summary.ok() {
                EXIT_INTERNAL
            } else if summary.unknown > 0 {
                EXIT_NEGATIVE
            } else {
                EXIT_OK
            })
        }
        Command::Profile { action, file } => {
            match action {
                ProfileAction::Margin => {
                    let r = read_profile(&file)?;
                    emit(out, &json!({ "margins": margin_matrix(&r) }))?;
                }
                ProfileAction::Digraph => {
                    let r = read_profile(&file)?;
                    emit_text(out, &format_edge_list(&majority_digraph(&r)))?;
                }
                ProfileAction::ToRealizer => {
                    let r = read_profile(&file)?;
                    emit_text(out, &format!("{}\n", profile_to_realizer(&r).to_json()))?;
                }
                ProfileAction::FromRealizer => {
                    let f = read_realizer(&file)?;
                    let r = realizer_to_profile(&f).map_err(Failure::input)?;
                    emit_text(out, &format!("{}\n", r.to_json()))?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Es { points } => {
            let pts = parse_points(&read(&points)?).map_err(Failure::input)?;
            let w = es_chain_or_antichain(&pts).map_err(Failure::input)?;
            emit(
                out,
                &json!({ "kind": w.kind, "size": w.points.len(), "points": w.points }),
            )?;
            Ok(EXIT_OK)
        }
    }
}

/// Exact witness when the budget allows, else the two-per-arc construction.
fn best_realizer(d: &Digraph, budget: u64) -> Realizer {
    dimension(d, 2 * d.arc_count(), budget)
        .witness()
        .cloned()
        .unwrap_or_else(|| generic_realizer(d))
}

fn realize(method: Method) -> Result<(Digraph, Realizer), Failure> {
    let family = |f: Family| generate(f).map_err(Failure::input);
    Ok(match method {
        Method::Path { n } => (
            family(Family::Path(n))?,
            realize_path(n).map_err(Failure::input)?,
        ),
        Method::Cycle { n } => (
            family(Family::Cycle(n))?,
            realize_cycle(n).map_err(Failure::input)?,
        ),
        Method::Tournament { n } => {
            let d = family(Family::AcyclicTournament(n))?;
            let f = realize_acyclic_tournament(&d).map_err(Failure::input)?;
            (d, f)
        }
        Method::Empty { n } => {
            let d = Digraph::empty(n);
            let f = realize_empty(&d).map_err(Failure::input)?;
            (d, f)
        }
        Method::Generic { digraph } => {
            let d = read_digraph(&digraph)?;
            let f = generic_realizer(&d);
            (d, f)
        }
        Method::Union { parts, budget } => {
            let parts = parts
                .iter()
                .map(|p| {
                    let d = read_digraph(p)?;
                    let f = best_realizer(&d, budget.nodes);
                    Ok((d, f))
                })
                .collect::<Result<Vec<_>, Failure>>()?;
            let graphs: Vec<Digraph> = parts.iter().map(|(d, _)| d.clone()).collect();
            let f = union_realizer(&parts).map_err(Failure::input)?;
            (Digraph::disjoint_union(&graphs), f)
        }
        Method::CondenseLift { digraph, budget } => {
            let d = read_digraph(&digraph)?;
            let c = d.condense();
            let inner = best_realizer(&c.condensed, budget.nodes);
            let f = condense_lift(&d, &c, &inner).map_err(Failure::internal)?;
            (d, f)
        }
    })
}

fn dim_report(d: &Digraph, max_d: usize, budget: u64, out: Out) -> Result<i32, Failure> {
    let r = dimension(d, max_d, budget);
    let per_d: Vec<Value> = r
        .per_d
        .iter()
        .map(|(k, o)| {
            let verdict = match o.verdict {
                Verdict::Realizable(_) => "realizable",
                Verdict::NotRealizable => "not_realizable",
                Verdict::BudgetExceeded => "budget_exceeded",
            };
            json!({ "d": k, "verdict": verdict, "nodes": o.nodes })
        })
        .collect();
    let (mut report, code) = match r.dimension {
        Dimension::Exact(k) => (json!({ "dimension": k }), EXIT_OK),
        Dimension::Unknown { lower, upper } => (
            json!({ "unknown": { "lower": lower, "upper": upper } }),
            EXIT_NEGATIVE,
        ),
    };
    report["per_d"] = Value::Array(per_d);
    if let Some(f) = r.witness() {
        report["witness"] = serde_json::from_str(&f.to_json()).map_err(Failure::internal)?;
    }
    emit(out, &report)?;
    Ok(code)
}
