//! `qgame`: payoffs, symmetric equilibria and parameter sweeps for quantum
//! 2×2 symmetric games.

mod commands;
mod config;
mod error;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use config::{file_pairs, RunConfig};
use error::CliError;

#[derive(Parser)]
#[command(name = "qgame", version, about = "Quantum 2x2 symmetric game analyzer")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classical, conjugate and quantum payoffs of one strategy pair.
    Payoff {
        #[command(flatten)]
        game: GameArgs,
        /// Player 1 density `x0,x1`.
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        /// Player 2 density `y0,y1`.
        #[arg(long, allow_hyphen_values = true)]
        y: Option<String>,
    },
    /// Symmetric equilibria, Pareto optimum and whether they coincide.
    Nash {
        #[command(flatten)]
        game: GameArgs,
    },
    /// Equilibrium along a uniform gamma grid, as CSV.
    SweepGamma {
        #[command(flatten)]
        game: GameArgs,
    },
    /// Equilibrium over a (xi0, xi1, gamma) grid with symmetric phases, as CSV.
    SweepPhases {
        #[command(flatten)]
        game: GameArgs,
        /// Grid for xi0: a value or `min:max:count`. Default -0.4:0.4:21.
        #[arg(long, allow_hyphen_values = true)]
        xi0: Option<String>,
        /// Grid for xi1. Default is pi/2 ± 0.4 with 21 points.
        #[arg(long, allow_hyphen_values = true)]
        xi1: Option<String>,
    },
    /// Randomized identity checks and closed-form/oracle comparisons.
    Verify {
        /// `key = value` config file; flags override it.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        seed: Option<String>,
        /// Random draws per identity check.
        #[arg(long)]
        samples: Option<String>,
        #[arg(long)]
        grid: Option<String>,
        #[arg(long)]
        tol: Option<String>,
        /// Flip the correlation sign inside the equivalence check.
        #[arg(long, hide = true)]
        inject_sign_fault: bool,
    },
}

impl Command {
    fn game(&self) -> Option<&GameArgs> {
        match self {
            Command::Payoff { game, .. }
            | Command::Nash { game }
            | Command::SweepGamma { game }
            | Command::SweepPhases { game, .. } => Some(game),
            Command::Verify { .. } => None,
        }
    }

    /// Flag values outside [`GameArgs`], keyed like the config file.
    fn extra_pairs(&self) -> Vec<(&'static str, &str)> {
        let fields: Vec<(&'static str, &Option<String>)> = match self {
            Command::Payoff { x, y, .. } => vec![("x", x), ("y", y)],
            Command::SweepPhases { xi0, xi1, .. } => vec![("xi0", xi0), ("xi1", xi1)],
            Command::Verify { seed, samples, grid, tol, .. } => {
                vec![("seed", seed), ("samples", samples), ("grid", grid), ("tol", tol)]
            }
            Command::Nash { .. } | Command::SweepGamma { .. } => Vec::new(),
        };
        fields
            .into_iter()
            .filter_map(|(k, v)| v.as_deref().map(|v| (k, v)))
            .collect()
    }
}

#[derive(Args)]
struct GameArgs {
    /// `key = value` config file; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Prisoner's dilemma `a,b,c` with 0 < a < b < c.
    #[arg(long, allow_hyphen_values = true)]
    pd: Option<String>,
    /// Row-major payoff matrix `a00,a01,a10,a11`.
    #[arg(long, allow_hyphen_values = true)]
    matrix: Option<String>,
    /// Entanglement angle, or `min:max:count` for sweeps. Accepts `pi/4` etc.
    #[arg(long, allow_hyphen_values = true)]
    gamma: Option<String>,
    /// `trivial`, `pseudo`, `case3`, `case4` or `xi0,xi1`.
    #[arg(long, allow_hyphen_values = true)]
    phases: Option<String>,
    /// Scan points of the equilibrium search.
    #[arg(long)]
    grid: Option<String>,
    /// Payoff tolerance of the equilibrium search.
    #[arg(long)]
    tol: Option<String>,
    /// Output CSV path.
    #[arg(long)]
    out: Option<String>,
    /// Print the resolved configuration in config-file form and exit.
    #[arg(long)]
    print_config: bool,
}

impl GameArgs {
    fn pairs(&self) -> Vec<(&'static str, &str)> {
        [
            ("pd", &self.pd),
            ("matrix", &self.matrix),
            ("gamma", &self.gamma),
            ("phases", &self.phases),
            ("grid", &self.grid),
            ("tol", &self.tol),
            ("out", &self.out),
        ]
        .into_iter()
        .filter_map(|(k, v)| v.as_deref().map(|v| (k, v)))
        .collect()
    }
}

/// Merges the config file (if any) with flag values; flags win. A game given
/// by flag replaces whichever game the file names.
fn load(file: Option<&PathBuf>, flags: Vec<(&str, &str)>) -> Result<RunConfig, CliError> {
    let text = match file {
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| CliError::config(format!("cannot read config {}: {e}", p.display())))?,
        None => String::new(),
    };
    let flag_game = flags.iter().any(|(k, _)| *k == "pd" || *k == "matrix");
    let mut pairs: Vec<(&str, &str)> = file_pairs(&text)?
        .into_iter()
        .filter(|(k, _)| !(flag_game && (*k == "pd" || *k == "matrix")))
        .collect();
    pairs.extend(flags);
    RunConfig::from_pairs(pairs)
}

fn run(cli: Cli) -> Result<String, CliError> {
    if let Some(game) = cli.command.game().filter(|g| g.print_config) {
        let mut flags = game.pairs();
        flags.extend(cli.command.extra_pairs());
        return Ok(load(game.config.as_ref(), flags)?.to_file_string());
    }
    match cli.command {
        Command::Payoff { ref game, .. } => {
            let mut flags = game.pairs();
            flags.extend(cli.command.extra_pairs());
            commands::payoff(&load(game.config.as_ref(), flags)?)
        }
        Command::Nash { ref game } => commands::nash(&load(game.config.as_ref(), game.pairs())?),
        Command::SweepGamma { ref game } => commands::sweep_gamma(&load(game.config.as_ref(), game.pairs())?),
        Command::SweepPhases { ref game, .. } => {
            let mut flags = game.pairs();
            flags.extend(cli.command.extra_pairs());
            commands::sweep_phases(&load(game.config.as_ref(), flags)?)
        }
        Command::Verify { ref config, inject_sign_fault, .. } => {
            commands::verify(&load(config.as_ref(), cli.command.extra_pairs())?, inject_sign_fault)
        }
    }
}

fn fail(tag: &str, msg: &str, code: u8) -> ExitCode {
    let line = msg.split_whitespace().collect::<Vec<_>>().join(" ");
    eprintln!("error[{tag}]: {line}");
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            _ => {
                let rendered = e.to_string();
                let first = rendered.lines().next().unwrap_or("invalid arguments");
                return fail("config", first.trim_start_matches("error: "), 2);
            }
        },
    };
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => fail(e.tag(), &e.to_string(), e.exit_code() as u8),
    }
}
