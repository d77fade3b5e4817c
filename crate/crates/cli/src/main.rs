//! Batch analysis front end: geodesics, equilibria, union balance,
//! horizon surfaces and the state-variable dictionary.
//!
//! Exit codes: 0 success, 2 validation error, 3 numerical failure,
//! 4 domain violation. Verbosity via ROEGEN_LOG (quiet, info, debug).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use roegen_cli::commands::{
    self, blackhole_payload, geodesic_payload, group_check_payload, load_scenario,
    two_phase_payload, union_payload,
};
use roegen_cli::dictionary::{self, Direction};
use roegen_cli::error::CliError;
use roegen_cli::log::Logger;
use roegen_cli::scenario::{BlackholeScenario, GroupCheckScenario};
use roegen_core::horizon::{ChargeSet, HorizonFamily, Labeling};

#[derive(Parser)]
#[command(
    name = "roegen",
    version,
    about = "Numerical toolkit for a thermodynamics-isomorphic (Roegenian) economy"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Integrate a geodesic scenario and emit the trajectory as CSV
    Geodesic {
        /// Scenario JSON with a "geodesic" payload
        #[arg(long)]
        scenario: PathBuf,
        /// Output path (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve a two-phase equilibrium scenario and emit a JSON record
    Equilibrium {
        /// Scenario JSON with a "two-phase" payload
        #[arg(long)]
        scenario: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify balance of a union of economies and emit a JSON record
    Union {
        /// Scenario JSON with a "union" payload
        #[arg(long)]
        scenario: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate a horizon surface at a state or over a grid
    Blackhole {
        /// Scenario JSON with a "blackhole" payload; alternatively pass
        /// the state directly through the flags below
        #[arg(long, conflicts_with_all = ["kind", "mass", "charge", "spin"])]
        scenario: Option<PathBuf>,
        /// Surface family: RN, Kerr or BTZ
        #[arg(long)]
        kind: Option<String>,
        /// Variable naming: thermodynamic or economic
        #[arg(long, value_enum, default_value_t = LabelingArg::Thermodynamic)]
        labeling: LabelingArg,
        /// Mass M (national income Y)
        #[arg(long = "M", allow_hyphen_values = true)]
        mass: Option<f64>,
        /// Electric charge Q / total investment (RN family)
        #[arg(long = "Q", allow_hyphen_values = true)]
        charge: Option<f64>,
        /// Spin J (Kerr and BTZ families)
        #[arg(long = "J", allow_hyphen_values = true)]
        spin: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Audit the composition laws on random samples (deterministic seed)
    GroupCheck {
        /// Scenario JSON with a "group-check" payload
        #[arg(long)]
        scenario: Option<PathBuf>,
        #[arg(long, conflicts_with = "scenario")]
        samples: Option<u32>,
        #[arg(long, conflicts_with = "scenario")]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Look a term up in the thermodynamics-economics dictionary
    Dict {
        #[arg(long)]
        term: String,
        /// Search direction; both sides are tried when omitted
        #[arg(long, value_enum)]
        direction: Option<DirectionArg>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum LabelingArg {
    Thermodynamic,
    Economic,
}

impl From<LabelingArg> for Labeling {
    fn from(arg: LabelingArg) -> Self {
        match arg {
            LabelingArg::Thermodynamic => Labeling::Thermodynamic,
            LabelingArg::Economic => Labeling::Economic,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    #[value(name = "thermo-to-econ")]
    ThermoToEcon,
    #[value(name = "econ-to-thermo")]
    EconToThermo,
}

fn blackhole_from_flags(
    kind: Option<String>,
    labeling: LabelingArg,
    mass: Option<f64>,
    charge: Option<f64>,
    spin: Option<f64>,
) -> Result<BlackholeScenario, CliError> {
    let kind_name =
        kind.ok_or_else(|| CliError::Validation("--kind is required without --scenario".into()))?;
    let family = HorizonFamily::parse(&kind_name)?;
    let mass =
        mass.ok_or_else(|| CliError::Validation("--M is required without --scenario".into()))?;
    let secondary = match family {
        HorizonFamily::ReissnerNordstrom => {
            if spin.is_some() {
                return Err(CliError::Validation(
                    "the RN family takes --Q, not --J".into(),
                ));
            }
            charge.unwrap_or(0.0)
        }
        HorizonFamily::Kerr | HorizonFamily::Btz => {
            if charge.is_some() {
                return Err(CliError::Validation(
                    "the Kerr and BTZ families take --J, not --Q".into(),
                ));
            }
            spin.unwrap_or(0.0)
        }
    };
    Ok(BlackholeScenario {
        kind: family,
        labeling: labeling.into(),
        charges: Some(ChargeSet::new(mass, secondary)),
        grid: None,
    })
}

fn dispatch(cli: Cli, log: &Logger) -> Result<(), CliError> {
    match cli.command {
        Command::Geodesic { scenario, out } => {
            let payload = geodesic_payload(load_scenario(&scenario)?)?;
            commands::run_geodesic(&payload, out.as_deref(), log)
        }
        Command::Equilibrium { scenario, out } => {
            let payload = two_phase_payload(load_scenario(&scenario)?)?;
            commands::run_two_phase(&payload, out.as_deref(), log)
        }
        Command::Union { scenario, out } => {
            let payload = union_payload(load_scenario(&scenario)?)?;
            commands::run_union(&payload, out.as_deref(), log)
        }
        Command::Blackhole {
            scenario,
            kind,
            labeling,
            mass,
            charge,
            spin,
            out,
        } => {
            let payload = match scenario {
                Some(path) => blackhole_payload(load_scenario(&path)?)?,
                None => blackhole_from_flags(kind, labeling, mass, charge, spin)?,
            };
            commands::run_blackhole(&payload, out.as_deref(), log)
        }
        Command::GroupCheck {
            scenario,
            samples,
            seed,
            out,
        } => {
            let payload = match scenario {
                Some(path) => group_check_payload(load_scenario(&path)?)?,
                None => GroupCheckScenario {
                    samples: samples.unwrap_or(10_000),
                    seed: seed.unwrap_or(42),
                },
            };
            commands::run_group_check(&payload, out.as_deref(), log)
        }
        Command::Dict { term, direction } => {
            let entry = match direction {
                Some(DirectionArg::ThermoToEcon) => {
                    dictionary::translate(&term, Direction::ThermoToEcon)?
                }
                Some(DirectionArg::EconToThermo) => {
                    dictionary::translate(&term, Direction::EconToThermo)?
                }
                None => dictionary::lookup(&term)?,
            };
            println!("{}", entry.display_row());
            if let Some(note) = entry.note {
                log.debug(format!("note: {note}"));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let log = Logger::from_env();
    match dispatch(cli, &log) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
