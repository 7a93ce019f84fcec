//! `matchrb`: batch front end over JSON fixture workspaces.
//!
//! All results go to stdout as JSON and a one-line summary goes to stderr.
//! Exit codes: 0 pass, 1 fail (with witnesses), 2 input error.

mod commands;
mod error;
mod workspace;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use commands::{Outcome, Settings};
use error::CliError;
use workspace::Workspace;

#[derive(Parser, Debug)]
#[command(name = "matchrb", version, about = "Matching Rota-Baxter and dendriform structures: checks, constructions, cohomology")]
struct Cli {
    /// Directory of `<name>.json` fixtures; built-in fixtures are always available.
    #[arg(long, global = true, default_value = "workspace")]
    workspace: PathBuf,
    #[arg(long, global = true, default_value_t = 3)]
    max_degree: usize,
    #[arg(long, global = true, default_value_t = matchrb::homotopy::DEFAULT_ARITY_BOUND)]
    arity_bound: usize,
    #[arg(long, global = true, default_value_t = matchrb::deformation::DEFAULT_ORDER)]
    order: usize,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run one checker on a named fixture.
    Check {
        target: String,
        /// One of: algebra, bimodule, mrrba, mc, aybe, skew, mda, morphism,
        /// deformation, homotopy-mda, homotopy-mrrba, a-infinity, operad-axioms,
        /// multiplication.
        checker: String,
        /// Extra fixture names, e.g. target and maps for `morphism`.
        args: Vec<String>,
    },
    /// Run a construction and persist its certified output.
    Build {
        construction: String,
        args: Vec<String>,
        /// Name of the persisted fixture.
        #[arg(long)]
        name: Option<String>,
    },
    /// Cohomology dimension report of one degree, or the long exact sequence.
    Cohomology { target: String, complex: String, degree: usize },
    /// Certify a deformation and classify its infinitesimal.
    Deform { target: String },
    /// Run every applicable checker on a fixture.
    Report { target: String },
    /// List fixtures, checkers, constructions and complexes.
    List,
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let s = Settings { max_degree: cli.max_degree, arity_bound: cli.arity_bound, order: cli.order, seed: cli.seed };
    let ws = Workspace::load(&cli.workspace)?;
    match &cli.command {
        Command::Check { target, checker, args } => commands::check(&ws, target, checker, args, s),
        Command::Build { construction, args, name } => commands::build(&ws, construction, args, name.as_deref(), s),
        Command::Cohomology { target, complex, degree } => commands::cohomology(&ws, target, complex, *degree, s),
        Command::Deform { target } => commands::deform(&ws, target, s),
        Command::Report { target } => commands::report(&ws, target, s),
        Command::List => {
            let fixtures: Vec<_> = ws.names().map(|n| json!({ "name": n, "kind": ws.get(n).map(|o| o.kind()).unwrap_or("?") })).collect();
            let json = json!({
                "fixtures": fixtures,
                "checkers": commands::CHECKERS,
                "constructions": commands::CONSTRUCTIONS,
                "complexes": commands::COMPLEXES,
            });
            Ok(Outcome { json, passed: true, summary: format!("{} fixtures", fixtures.len()) })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (json, code, summary) = match run(&cli) {
        Ok(o) => (o.json, u8::from(!o.passed), o.summary),
        Err(e) => {
            let json = json!({ "error": e.to_string(), "report": e.report() });
            (json, e.exit_code() as u8, format!("error: {e}"))
        }
    };
    // a closed pipe downstream is not an error of ours
    let _ = writeln!(io::stdout().lock(), "{}", serde_json::to_string_pretty(&json).expect("values serialize"));
    let _ = writeln!(io::stderr().lock(), "{summary}");
    ExitCode::from(code)
}
