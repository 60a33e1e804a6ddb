//! `lgh`: extended h-vectors, flag vectors and verification suites from the
//! command line.

mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use lgh_core::links::ConeRule;

#[derive(Parser, Debug)]
#[command(name = "lgh", version, about = "Extended h-vectors of cone/cylinder/bipyramid polytopes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Rule {
    Conjugation,
    Direct,
}

impl From<Rule> for ConeRule {
    fn from(r: Rule) -> Self {
        match r {
            Rule::Conjugation => ConeRule::Conjugation,
            Rule::Direct => ConeRule::Direct,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Extended h-vector (the linear extension when B occurs).
    Hvec { source: String },
    /// Auxiliary vector of a B-free word.
    Aux { word: String },
    /// Flag vector from the face lattice.
    Flagvec { source: String },
    /// Face lattice as JSON; a JSON file is validated and re-emitted.
    Lattice { source: String },
    /// IC basis words of dimension N.
    Basis { n: usize },
    /// Coordinates in the IC basis, or one coefficient of the linear h.
    Express {
        source: String,
        /// Print only the coefficient of this term of h, e.g. `xA{1}`.
        #[arg(long, value_name = "TERM")]
        coeff: Option<String>,
    },
    /// Extended h-vector by the link recursion.
    Links {
        source: String,
        #[arg(long, value_enum, default_value_t = Rule::Conjugation)]
        rule: Rule,
    },
    /// Pseudo h-vector.
    Pseudo { source: String },
    /// All terms x^i y^j W of degree N.
    Terms { n: usize },
    /// Strata vectors and implication between two terms.
    Order { first: String, second: String },
    /// Run a verification suite.
    Verify {
        /// One of tables, ic-equation, palindromy, fibonacci, gds-rank,
        /// oracle, link-agreement, unimodality, terms, all.
        suite: String,
        #[arg(long, default_value_t = 5)]
        max_dim: usize,
    },
}

/// A failed invocation and the exit status it maps to.
#[derive(Debug)]
pub enum Failure {
    /// Bad arguments or unparsable input: status 2.
    Usage(String),
    /// A verification suite found a counterexample: status 1.
    Verification(String),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let (output, status) = match commands::run(&cli) {
        Ok(out) => (out, 0),
        Err(Failure::Verification(out)) => (out, 1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &output).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => std::io::stdout().write_all(output.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(status)
}
