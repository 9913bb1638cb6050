//! The `pcx` command line front end.
//!
//! Exit codes: `0` every check passed or the requested object was produced,
//! `1` a mathematical check failed (the report says which), `2` bad input, an
//! unmet precondition, or an exceeded cell budget.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::action::PartialSystem;
use crate::crossprod::verify_relations;
use crate::error::{Error, Result};
use crate::graph;
use crate::json;
use crate::paradox;
use crate::space::DEFAULT_MAX_CELLS;

/// Environment variable holding the cell budget.
pub const MAX_CELLS_VAR: &str = "PCX_MAX_CELLS";

#[derive(Debug, Parser)]
#[command(name = "pcx", version, about = "Exact checks for partial actions on Cantor-type spaces")]
struct Cli {
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the defining relations of the standard generators.
    VerifyRelations {
        /// System JSON file (or inline JSON).
        system: String,
        #[arg(long, value_delimiter = ',', default_value = "2,3", allow_hyphen_values = true)]
        m_values: Vec<i128>,
        #[arg(long, value_delimiter = ',', default_value = "-2,-1,0,1,2", allow_hyphen_values = true)]
        n_values: Vec<i128>,
    },
    /// Paradoxical decompositions.
    #[command(subcommand)]
    Paradox(ParadoxCommand),
    /// Graph checks for path-space systems.
    #[command(subcommand)]
    Graph(GraphCommand),
    /// Search for a nontrivial element fixing a cylinder pointwise.
    Topfree {
        system: String,
        #[arg(long)]
        max_word_len: usize,
        #[arg(long)]
        depth: usize,
    },
    /// Invariant unions of cylinders of a fixed depth.
    Invariants {
        system: String,
        #[arg(long)]
        depth: usize,
    },
}

#[derive(Debug, Subcommand)]
enum ParadoxCommand {
    /// Construct a witness for a clopen set.
    Find {
        system: String,
        #[arg(long)]
        set: String,
    },
    /// Check a witness.
    Verify(WitnessArgs),
    /// Lift a witness to isometries and check the five identities.
    Lift(WitnessArgs),
}

#[derive(Debug, Args)]
struct WitnessArgs {
    system: String,
    witness: String,
}

#[derive(Debug, Subcommand)]
enum GraphCommand {
    /// Condition (K), exits of cycles and hereditary saturated sets.
    Check { system: String },
}

/// A finished command: its report and whether every check passed.
struct Outcome {
    report: Value,
    pass: bool,
}

fn load(arg: &str) -> Result<Value> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        fs::read_to_string(arg).map_err(|e| Error::Parse(format!("cannot read {arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{arg}: {e}")))
}

fn max_cells() -> Result<usize> {
    match std::env::var(MAX_CELLS_VAR) {
        Err(_) => Ok(DEFAULT_MAX_CELLS),
        Ok(s) => s.trim().parse().map_err(|_| Error::Parse(format!("{MAX_CELLS_VAR}={s:?} is not a cell count"))),
    }
}

fn load_system(arg: &str) -> Result<PartialSystem> {
    Ok(json::parse_system(&load(arg)?)?.with_max_cells(max_cells()?))
}

fn path_matrix(sys: &PartialSystem) -> Result<&crate::space::AdjacencyMatrix> {
    sys.space().matrix().ok_or_else(|| Error::Unsupported("graph checks need a path-space system".into()))
}

fn execute(command: Command) -> Result<Outcome> {
    match command {
        Command::VerifyRelations { system, m_values, n_values } => {
            let sys = load_system(&system)?;
            let checks = verify_relations(&sys, &m_values, &n_values)?;
            Ok(Outcome { pass: checks.iter().all(|c| c.pass), report: json::relations(&sys, &checks) })
        }
        Command::Paradox(ParadoxCommand::Find { system, set }) => {
            let sys = load_system(&system)?;
            let v = json::parse_set(sys.space(), &load(&set)?)?;
            let w = paradox::find_witness(&sys, &v)?;
            Ok(Outcome { report: json::witness(&sys, &w), pass: true })
        }
        Command::Paradox(ParadoxCommand::Verify(args)) => {
            let sys = load_system(&args.system)?;
            let w = json::parse_witness(&sys, &load(&args.witness)?)?;
            let verdict = paradox::verify_witness(&sys, &w)?;
            Ok(Outcome { pass: verdict.pass, report: json::witness_verdict(&sys, &verdict) })
        }
        Command::Paradox(ParadoxCommand::Lift(args)) => {
            let sys = load_system(&args.system)?;
            let w = json::parse_witness(&sys, &load(&args.witness)?)?;
            let verdict = paradox::verify_witness(&sys, &w)?;
            if !verdict.pass {
                let report = json!({"witness": json::witness_verdict(&sys, &verdict)});
                return Ok(Outcome { report, pass: false });
            }
            let iso = paradox::witness_to_isometries(&sys, &w)?;
            let check = paradox::verify_proper_infinite(&sys, &iso.x, &iso.y, &iso.p)?;
            let report = json!({
                "x": json::alg_elem(&sys, &iso.x),
                "y": json::alg_elem(&sys, &iso.y),
                "p": json::alg_elem(&sys, &iso.p),
                "verdict": json::infinite_verdict(&check),
            });
            Ok(Outcome { report, pass: check.pass })
        }
        Command::Graph(GraphCommand::Check { system }) => {
            let sys = load_system(&system)?;
            let a = path_matrix(&sys)?;
            let k = graph::condition_k(a);
            let exit = graph::every_cycle_has_exit(a);
            let hs = graph::hereditary_saturated_sets(a)?;
            Ok(Outcome { pass: k.holds && exit.holds, report: json::graph_report(&k, &exit, &hs) })
        }
        Command::Topfree { system, max_word_len, depth } => {
            let sys = load_system(&system)?;
            let r = graph::topfree_bruteforce(&sys, max_word_len, depth)?;
            Ok(Outcome { pass: r.holds, report: json::topfree_report(&sys, &r, max_word_len, depth) })
        }
        Command::Invariants { system, depth } => {
            let sys = load_system(&system)?;
            let sets = graph::invariant_clopen_sets(&sys, depth)?;
            let list: Vec<Value> = sets.iter().map(|s| json::set(sys.space(), s)).collect();
            Ok(Outcome { report: json!({"depth": depth, "sets": list}), pass: true })
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::SearchExhausted { .. } => 1,
        _ => 2,
    }
}

fn emit(output: Option<&PathBuf>, report: &Value) -> std::io::Result<()> {
    let mut text = serde_json::to_string_pretty(report).expect("values always serialize");
    text.push('\n');
    match output {
        Some(path) => fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

/// Runs the command line `argv` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(cli.command) {
        Ok(outcome) => {
            if let Err(e) = emit(cli.output.as_ref(), &outcome.report) {
                eprintln!("pcx: cannot write report: {e}");
                return 2;
            }
            if outcome.pass {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let report = json!({"error": e.code(), "message": e.to_string()});
            eprintln!("{}", serde_json::to_string(&report).expect("values always serialize"));
            exit_code(&e)
        }
    }
}
