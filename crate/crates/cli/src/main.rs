use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use splitlr::connect::{root_classes, weight_classes};
use splitlr::decomp::{decompose, is_tight};
use splitlr::format::{emit_instance, parse_instance};
use splitlr::model::{validate, Instance};
use splitlr::simple::fine_decomposition;
use splitlr::{fixtures, Error};

mod render;

#[derive(Parser)]
#[command(
    name = "splitlr",
    version,
    about = "Split Lie-Rinehart algebras over the rationals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check every axiom and report the first counterexample of each check.
    Validate { file: PathBuf },
    /// Root and weight connection classes with witness chains.
    Classes { file: PathBuf },
    /// Decompositions of L and A, their pairing and the tightness record.
    Decompose { file: PathBuf },
    /// The tightness conditions.
    Tight { file: PathBuf },
    /// Decompositions with simplicity verdicts for the algebras and their components.
    Simple { file: PathBuf },
    /// The built-in fixture library.
    Fixtures {
        #[command(subcommand)]
        action: FixtureAction,
    },
}

#[derive(Subcommand)]
enum FixtureAction {
    /// List fixture names with a short description.
    List,
    /// Print a fixture in the instance file format.
    Emit { name: String },
}

enum Failure {
    /// The instance loaded but violates an axiom.
    Invalid(String),
    /// Unreadable input, schema violation or bad arguments.
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn load(path: &Path) -> Result<Instance, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_instance(&text)?)
}

/// Loads and validates; analyses are only meaningful on valid instances.
fn load_valid(path: &Path, format: Format) -> Result<Instance, Failure> {
    let inst = load(path)?;
    let report = validate(&inst);
    if !report.is_valid() {
        let text = match format {
            Format::Text => render::validation(&report),
            Format::Json => pretty(&report),
        };
        return Err(Failure::Invalid(text));
    }
    Ok(inst)
}

fn pretty<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let fmt = cli.format;
    let text_or_json = |text: String, value: serde_json::Value| match fmt {
        Format::Text => text,
        Format::Json => pretty(&value),
    };
    match &cli.command {
        Command::Validate { file } => {
            let inst = load(file)?;
            let report = validate(&inst);
            let out = match fmt {
                Format::Text => render::validation(&report),
                Format::Json => pretty(&report),
            };
            if report.is_valid() {
                Ok(out)
            } else {
                Err(Failure::Invalid(out))
            }
        }
        Command::Classes { file } => {
            let inst = load_valid(file, fmt)?;
            let roots = root_classes(&inst)?;
            let weights = weight_classes(&inst)?;
            Ok(text_or_json(
                render::classes(&inst, &roots, &weights),
                json!({ "instance": inst.name(), "root_classes": roots, "weight_classes": weights }),
            ))
        }
        Command::Decompose { file } => {
            let inst = load_valid(file, fmt)?;
            let d = decompose(&inst)?;
            Ok(match fmt {
                Format::Text => render::decomposition(&d),
                Format::Json => pretty(&d),
            })
        }
        Command::Tight { file } => {
            let inst = load_valid(file, fmt)?;
            let t = is_tight(&inst);
            Ok(match fmt {
                Format::Text => render::tightness(inst.name(), &t),
                Format::Json => pretty(&t),
            })
        }
        Command::Simple { file } => {
            let inst = load_valid(file, fmt)?;
            let fd = fine_decomposition(&inst)?;
            Ok(match fmt {
                Format::Text => render::fine(&fd),
                Format::Json => pretty(&fd),
            })
        }
        Command::Fixtures { action } => match action {
            FixtureAction::List => {
                let entries: Vec<(&str, &str)> = fixtures::NAMES
                    .iter()
                    .map(|n| (*n, fixtures::describe(n).unwrap_or("")))
                    .collect();
                let text = entries
                    .iter()
                    .map(|(n, d)| format!("{n:<10} {d}\n"))
                    .collect();
                let value = entries
                    .iter()
                    .map(|(n, d)| json!({ "name": n, "description": d }))
                    .collect();
                Ok(text_or_json(text, serde_json::Value::Array(value)))
            }
            FixtureAction::Emit { name } => Ok(emit_instance(&fixtures::fixture(name)?)),
        },
    }
}

fn write_out(cli: &Cli, text: &str) -> Result<(), String> {
    match &cli.output {
        Some(path) => {
            fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, code) = match run(&cli) {
        Ok(text) => (text, 0),
        Err(Failure::Invalid(text)) => (text, 1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    if let Err(msg) = write_out(&cli, &text) {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
