use std::path::PathBuf;
use std::process::ExitCode;

use aeppli_core::{Error, GroupSelection};
use clap::{Args, Parser, Subcommand};

mod commands;
mod input;
mod verify;

#[derive(Parser)]
#[command(
    name = "aeppli",
    version,
    about = "Invariant Bott-Chern/Aeppli cohomology of complex Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// `corpus:NAME` or a path to a `.lie` file
    input: String,
    /// Emit JSON instead of a table
    #[arg(long)]
    json: bool,
    /// `identity`, `file:PATH`, or inline rows such as `2,0;0,1`
    #[arg(long)]
    metric: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and echo normalized structure equations with their flags
    Parse {
        #[command(flatten)]
        common: Common,
    },
    /// Compute cohomology tables and Aeppli decisions
    Cohomology {
        #[command(flatten)]
        common: Common,
        /// Comma-separated subset of bc,a,dolbeault,derham
        #[arg(long, default_value = "bc,a,dolbeault,derham")]
        groups: GroupSelection,
    },
    /// Classify the metric (Kähler, balanced, Gauduchon, SKT)
    Classify {
        #[command(flatten)]
        common: Common,
    },
    /// Decide whether the Aeppli class of ω^{n−p} vanishes
    Aeppli {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        p: usize,
    },
    /// Run the invariant checks and corpus expectations
    Verify {
        /// `all` or a corpus entry name
        #[arg(default_value = "all")]
        scope: String,
        /// Seed for randomized metrics and samples
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug)]
pub enum CliError {
    Engine(Error),
    Read(PathBuf, std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Engine(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Read(..) => 2,
            CliError::Engine(e) if e.is_parse() => 2,
            CliError::Engine(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Engine(e) => write!(f, "{e}"),
            CliError::Read(path, e) => write!(f, "cannot read {}: {e}", path.display()),
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let out = match cli.command {
        Command::Parse { common } => commands::parse(&common.input, common.json)?,
        Command::Cohomology { common, groups } => {
            commands::cohomology(&common.input, common.metric.as_deref(), groups, common.json)?
        }
        Command::Classify { common } => commands::classify(&common.input, common.metric.as_deref(), common.json)?,
        Command::Aeppli { common, p } => commands::aeppli(&common.input, common.metric.as_deref(), p, common.json)?,
        Command::Verify { scope, seed, json } => {
            let results = verify::run(&scope, seed)?;
            print!("{}", verify::render(&results, json));
            return Ok(if results.iter().all(|r| r.outcome.is_ok()) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            });
        }
    };
    print!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
