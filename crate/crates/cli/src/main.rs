//! `incidence`: command-line front end for incidence-core.
//!
//! Exit codes: 0 success, 1 a check failed, 2 bad input.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use incidence_core::poset::DEFAULT_UP_SET_CAP;

#[derive(Debug, Parser)]
#[command(name = "incidence", version, about = "Incidence algebras of finite posets")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Summary counts for a poset file.
    Info {
        #[arg(long)]
        input: PathBuf,
    },
    /// List every two-sided ideal of the reflexive incidence algebra.
    Ideals {
        #[arg(long)]
        input: PathBuf,
        /// Largest pair-poset to enumerate.
        #[arg(long, default_value_t = DEFAULT_UP_SET_CAP, value_parser = positive)]
        cap: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the theorem suite on a poset, a built-in corpus, or a table file.
    Check {
        #[arg(long, conflicts_with_all = ["corpus", "table"])]
        input: Option<PathBuf>,
        /// `exhaustive4` or `random7`.
        #[arg(long, conflicts_with = "table")]
        corpus: Option<String>,
        #[arg(long)]
        table: Option<PathBuf>,
        /// Base seed; scrambles use seed+1 ..= seed+5.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest pair-poset on which ideals are enumerated.
        #[arg(long, default_value_t = 12, value_parser = positive)]
        cap: usize,
    },
    /// Recover a poset from a multiplication table file.
    Recover {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Export a derived structure of a poset file.
    Export {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        what: ExportKind,
        #[arg(long, value_enum, default_value_t = ConventionArg::Reflexive)]
        convention: ConventionArg,
        /// Scramble the exported table with this seed.
        #[arg(long)]
        seed: Option<u64>,
        /// With --seed, permute the basis without rescaling.
        #[arg(long, requires = "seed")]
        no_rescale: bool,
        #[arg(long, default_value_t = DEFAULT_UP_SET_CAP, value_parser = positive)]
        cap: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Rewriting and bounded dimension counts for the algebra presented by a poset.
    Presented {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = TripleArg::AllowRepeats)]
        triple: TripleArg,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        /// Reduce this word (whitespace-separated labels) instead of counting.
        #[arg(long)]
        word: Option<String>,
        /// Also search all words up to this length for order-dependent rewriting.
        #[arg(long)]
        probe: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Dot,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExportKind {
    Hasse,
    Gamma,
    IdealLattice,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Reflexive,
    Irreflexive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TripleArg {
    AllowRepeats,
    DistinctOnly,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

fn main() -> ExitCode {
    let config = match RunConfig::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match commands::run(config.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
