//! `strata`: stratified labelings, System Z and enforcement from the
//! command line.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use strata_core::formats::Format;
use strata_core::ordsem::Property;
use strata_core::{Semantics, DEFAULT_BUDGET};

#[derive(Debug, Parser)]
#[command(name = "strata", version, about = "Stratified labelings, System Z and enforcement for argumentation frameworks")]
pub struct Cli {
    /// Print a JSON object with keys `command`, `input` and `result`.
    #[arg(long, global = true)]
    pub json: bool,

    /// Input format; guessed from the file extension when omitted.
    #[arg(long, global = true, value_parser = parse_format)]
    pub format: Option<Format>,

    /// Enumeration budget for stratified labelings.
    #[arg(long, global = true, env = "STRATA_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub strat_budget: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct SemArg {
    /// complete, grounded, preferred, stable or semi_stable (or c, gr, p, s, ss)
    #[arg(long, value_parser = parse_sem)]
    pub sem: Semantics,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    Apx,
    Tgf,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the σ-labelings of a framework.
    Solve {
        #[command(flatten)]
        sem: SemArg,
        file: PathBuf,
    },
    /// List the σ-stratified labelings of a framework.
    Stratify {
        #[command(flatten)]
        sem: SemArg,
        file: PathBuf,
    },
    /// Rank every world of a knowledge base with System Z.
    Zrank {
        /// Print the Z-partition instead of the world ranks.
        #[arg(long)]
        partition: bool,
        file: PathBuf,
    },
    /// Print the framework induced by the System Z order on worlds.
    Induce {
        #[arg(long, value_enum, default_value_t = OutFormat::Apx)]
        out: OutFormat,
        file: PathBuf,
    },
    /// Compare System Z ranks with the grounded-stratified labeling of the
    /// induced framework. Exits 1 on a mismatch.
    Bridge { file: PathBuf },
    /// Check a postulate for the σ-stratified ordinal semantics. Exits 1
    /// when it fails.
    Check {
        /// ab, ir, vp, wvp, dp or qp
        #[arg(long, value_parser = parse_prop)]
        prop: Property,
        #[command(flatten)]
        sem: SemArg,
        /// Random isomorphic copies tried for `ab`.
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        file: PathBuf,
    },
    /// Minimal number of attack edits until the target arguments are
    /// credulously accepted.
    Enforce {
        #[command(flatten)]
        sem: SemArg,
        /// Comma-separated argument names.
        #[arg(long, value_delimiter = ',', required_unless_present = "scan")]
        target: Vec<String>,
        /// Largest number of edits searched.
        #[arg(long, default_value_t = 3)]
        budget: usize,
        /// Instead of one target, list argument pairs whose edit costs
        /// disagree with some stratified labeling.
        #[arg(long, conflicts_with = "target")]
        scan: bool,
        file: PathBuf,
    },
    /// DOT graph of a framework, nodes colored by stratified rank.
    Dot {
        #[command(flatten)]
        sem: SemArg,
        /// Which stratified labeling to draw, in listing order.
        #[arg(long, default_value_t = 0)]
        index: usize,
        file: PathBuf,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Solve { .. } => "solve",
            Command::Stratify { .. } => "stratify",
            Command::Zrank { .. } => "zrank",
            Command::Induce { .. } => "induce",
            Command::Bridge { .. } => "bridge",
            Command::Check { .. } => "check",
            Command::Enforce { .. } => "enforce",
            Command::Dot { .. } => "dot",
        }
    }
}

fn parse_sem(s: &str) -> Result<Semantics, String> {
    s.parse()
}

fn parse_prop(s: &str) -> Result<Property, String> {
    s.parse()
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            if cli.json {
                let doc = serde_json::json!({
                    "command": cli.command.name(),
                    "input": out.input,
                    "result": out.json,
                });
                println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
            } else {
                print!("{}", out.text);
            }
            if out.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
