use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use dsc_tools::commands::{self, CliError, Options, Output};
use dsc_tools::scenario::Scenario;

#[derive(Debug, Parser)]
#[command(
    name = "dsc",
    version,
    about = "Drone small-cell placement and coverage"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Scenario file; the built-in urban scenario when omitted.
    #[arg(long, global = true)]
    scenario: Option<PathBuf>,
    /// Output path, or `stdout`.
    #[arg(long, global = true, default_value = "stdout")]
    out: String,
    /// Cross-check results against the grid / Monte-Carlo area oracles.
    #[arg(long, global = true)]
    verify: bool,
    /// Emit every grid row of a joint search.
    #[arg(long, global = true)]
    full: bool,
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Restrict coverage to the strip |y| <= b/2.
    #[arg(long, global = true)]
    clip_width: bool,
    /// Ignore co-channel interference (best-server association).
    #[arg(long, global = true)]
    no_interference: bool,
    /// Monte-Carlo seed.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minimum transmit power against altitude for each target radius.
    AltitudeSweep,
    /// Coverage ratio against DSC separation.
    SeparationSweep,
    /// Optimal separation for each target-area length.
    AreaLengthSweep,
    /// Non-interfering two-DSC placement.
    DualFree,
    /// Joint search over separation and both altitudes.
    JointSearch,
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    let mut sc = match &cli.scenario {
        Some(path) => Scenario::load(path)?,
        None => Scenario::default_scenario(),
    };
    if cli.clip_width {
        sc.flags.clip_width = true;
    }
    if cli.no_interference {
        sc.flags.interference = false;
    }
    let opts = Options {
        verify: cli.verify,
        full: cli.full,
        seed: cli.seed,
    };
    let go = || match cli.command {
        Command::AltitudeSweep => commands::altitude_sweep(&sc),
        Command::SeparationSweep => commands::separation_sweep(&sc, &opts),
        Command::AreaLengthSweep => commands::area_length_sweep(&sc, &opts),
        Command::DualFree => commands::dual_free(&sc, &opts),
        Command::JointSearch => commands::joint_search(&sc, &opts),
    };
    match cli.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| CliError::Solver(e.to_string()))?
            .install(go),
        None => go(),
    }
}

fn write_out(target: &str, csv: &str) -> anyhow::Result<()> {
    if target == "stdout" || target == "-" {
        let mut stdout = std::io::stdout().lock();
        stdout.write_all(csv.as_bytes())?;
        stdout.flush()?;
    } else {
        std::fs::write(target, csv).with_context(|| format!("writing {target}"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            for w in &out.warnings {
                eprintln!("warning: {w}");
            }
            if let Err(e) = write_out(&cli.out, &out.csv) {
                eprintln!("error: {e:#}");
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
