use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fourspace::constants::PhysicalConstants;
use fourspace_cli::scenario::{OutputFormat, Scenario, ScenarioKind, ScenarioParams};
use fourspace_cli::{execute, CliError, ExecContext, RunReport};

/// Scenario-driven checks for Euclidean four-space kinematics, conservation
/// ledgers, and 4D wave mechanics.
///
/// Exit codes: 0 all required checks pass, 1 a required check fails,
/// 2 input or usage error.
#[derive(Parser)]
#[command(name = "fourspace", version, arg_required_else_help = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Constants override file (key = value lines).
    #[arg(long, global = true, value_name = "PATH")]
    constants: Option<PathBuf>,

    /// Particle table CSV replacing the bundled one.
    #[arg(long, global = true, value_name = "PATH")]
    table: Option<PathBuf>,

    /// Seed for randomized directions (overrides the scenario).
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Report format (overrides the scenario).
    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,

    /// Relative tolerance for the conservation ledger (overrides the scenario).
    #[arg(long, global = true)]
    tolerance: Option<f64>,

    /// Write the report here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario file.
    Run {
        /// Path to a scenario JSON document.
        file: PathBuf,
    },
    /// Conservation ledger over the bundled (or given) reaction list.
    ReactionSuite {
        /// Reaction list JSON replacing the bundled fixtures.
        #[arg(long, value_name = "PATH")]
        reactions: Option<PathBuf>,
    },
    /// Boost direction-independence and mass-factor checks.
    Boost,
    /// Wave-equation residual and convergence checks.
    WaveResidual {
        /// Wave-state component file replacing the random superposition.
        #[arg(long, value_name = "PATH")]
        waves: Option<PathBuf>,
    },
    /// Axial-shell reduction residuals.
    KgResidual,
    /// Non-relativistic reduction residuals and scaling sweep.
    SchrodingerResidual,
    /// Composite rest-mass and boost-closure checks.
    Composite,
    /// Length-scale report.
    Scales,
}

fn scenario_for(command: &Command) -> Result<Scenario, CliError> {
    Ok(match command {
        Command::Run { file } => Scenario::from_file(file)?,
        Command::ReactionSuite { reactions } => {
            let mut s = Scenario::default_for(ScenarioKind::ReactionSuite);
            if let ScenarioParams::ReactionSuite(ref mut p) = s.params {
                p.reactions = reactions.clone();
            }
            s
        }
        Command::Boost => Scenario::default_for(ScenarioKind::Boost),
        Command::WaveResidual { waves } => {
            let mut s = Scenario::default_for(ScenarioKind::WaveResidual);
            if let ScenarioParams::WaveResidual(ref mut p) = s.params {
                p.waves = waves.clone();
            }
            s
        }
        Command::KgResidual => Scenario::default_for(ScenarioKind::KgResidual),
        Command::SchrodingerResidual => Scenario::default_for(ScenarioKind::SchrodingerResidual),
        Command::Composite => Scenario::default_for(ScenarioKind::Composite),
        Command::Scales => Scenario::default_for(ScenarioKind::Scales),
    })
}

fn emit(report: &RunReport, format: OutputFormat, path: Option<&PathBuf>) -> Result<(), CliError> {
    let text = match format {
        OutputFormat::Json => report.to_json_string(),
        OutputFormat::Csv => report.to_csv_string(),
    };
    match path {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Write {
            path: path.clone(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<RunReport, CliError> {
    let constants = match &cli.constants {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
                path: path.clone(),
                source,
            })?;
            PhysicalConstants::with_overrides(&text).map_err(|source| CliError::Constants {
                path: path.clone(),
                source,
            })?
        }
        None => PhysicalConstants::default(),
    };

    let mut scenario = scenario_for(&cli.command)?;
    if let Some(seed) = cli.seed {
        scenario.seed = seed;
    }
    if let Some(format) = cli.format {
        scenario.output.format = match format {
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Csv => OutputFormat::Csv,
        };
    }
    if let Some(path) = &cli.output {
        scenario.output.path = Some(path.clone());
    }

    let ctx = ExecContext {
        constants,
        table: cli.table.clone(),
        tolerance: cli.tolerance,
    };
    let report = execute(&scenario, &ctx)?;
    emit(
        &report,
        scenario.output.format,
        scenario.output.path.as_ref(),
    )?;
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(report) => ExitCode::from(report.exit_code() as u8),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
