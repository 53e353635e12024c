use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use nurbs_limit_cli::config::ExperimentConfig;
use nurbs_limit_cli::{commands, CliError};

/// NURBS curves whose weights grow along power-law paths.
#[derive(Parser, Debug)]
#[command(name = "nurbs-limit", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate the curve at weights w_j(t).
    Eval {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        t: f64,
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        u: Vec<f64>,
    },
    /// Limit of the curve as t grows, with the determining index group.
    Limit {
        #[command(flatten)]
        common: Common,
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        u: Vec<f64>,
    },
    /// Sup and L1 errors over the configured t schedule.
    Sweep {
        #[command(flatten)]
        common: Common,
    },
    /// Limits along `path` and `path_b` at one parameter value.
    Pathdemo {
        #[command(flatten)]
        common: Common,
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        u: Vec<f64>,
    },
}

#[derive(Args, Debug)]
struct Common {
    /// Experiment config (JSON).
    #[arg(long)]
    config: PathBuf,
    /// Output file; overrides the config's destination. Defaults to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn run(cli: Cli) -> Result<(), CliError> {
    let common = match &cli.command {
        Command::Eval { common, .. }
        | Command::Limit { common, .. }
        | Command::Sweep { common }
        | Command::Pathdemo { common, .. } => common,
    };
    let exp = ExperimentConfig::load(&common.config)?.validate()?;
    let text = match &cli.command {
        Command::Eval { t, u, .. } => commands::eval(&exp, *t, u)?,
        Command::Limit { u, .. } => commands::limit(&exp, u)?,
        Command::Sweep { .. } => commands::sweep(&exp)?,
        Command::Pathdemo { u, .. } => commands::pathdemo(&exp, u)?,
    };
    let destination = common
        .out
        .clone()
        .or_else(|| exp.destination.as_ref().map(PathBuf::from));
    match destination {
        Some(path) => std::fs::write(&path, text)
            .map_err(|e| CliError::Internal(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code())
        }
    }
}
