use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use cocart::SearchLimit;
use cocart_cli::commands::{self, CliError, Outcome, Which};
use cocart_cli::{parse_bundle, serialize_bundle, Bundle};

#[derive(Parser)]
#[command(
    name = "cocart",
    version,
    about = "Decide cocartesianness of finite monoidal categories"
)]
struct Cli {
    /// Output style for reports and errors.
    #[arg(long, global = true, value_enum, default_value_t = Style::Text)]
    report: Style,

    /// Bound on the number of candidates any exhaustive search may visit.
    #[arg(long, global = true, default_value_t = SearchLimit::DEFAULT.0)]
    limit: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Style {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a bundle and validate every section it contains.
    Validate { file: PathBuf },
    /// Decide one or all of the five equivalent conditions.
    Check {
        file: PathBuf,
        #[arg(long, default_value = "all")]
        condition: Which,
    },
    /// Build binary coproducts by splitting the coproduct idempotent.
    Synthesize {
        file: PathBuf,
        /// Complete to the Karoubi envelope first.
        #[arg(long)]
        karoubi: bool,
        /// Write the (possibly completed) bundle here.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write the Karoubi envelope with transported structure.
    Karoubi {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Built-in demonstrations.
    Demo {
        #[command(subcommand)]
        demo: Demo,
    },
}

#[derive(Subcommand)]
enum Demo {
    /// Finite sets with A ⊗ B = A + A×B + B.
    Egger {
        #[arg(long)]
        size_a: usize,
        #[arg(long)]
        size_b: usize,
        /// Largest carrier used when probing laws and universal properties.
        #[arg(long, default_value_t = 3)]
        probe_bound: usize,
    },
}

fn load(path: &Path) -> Result<Bundle, CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: shown.clone(),
        source,
    })?;
    parse_bundle(&text).map_err(|source| CliError::Bundle { path: shown, source })
}

fn store(path: &Path, b: &Bundle) -> Result<(), CliError> {
    std::fs::write(path, serialize_bundle(b)).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let limit = SearchLimit(cli.limit);
    match &cli.command {
        Command::Validate { file } => commands::run_validate(&load(file)?, Some(&file.display().to_string()), limit),
        Command::Check { file, condition } => {
            commands::run_check(&load(file)?, *condition, Some(&file.display().to_string()), limit)
        }
        Command::Synthesize { file, karoubi, output } => {
            let out = commands::run_synthesize(&load(file)?, *karoubi, Some(&file.display().to_string()), limit)?;
            if let (Some(path), Some(b)) = (output, &out.bundle) {
                store(path, b)?;
            }
            Ok(out)
        }
        Command::Karoubi { file, output } => {
            let out = commands::run_karoubi(&load(file)?, Some(&file.display().to_string()), limit)?;
            if let Some(b) = &out.bundle {
                store(output, b)?;
            }
            Ok(out)
        }
        Command::Demo {
            demo:
                Demo::Egger {
                    size_a,
                    size_b,
                    probe_bound,
                },
        } => commands::run_demo_egger(*size_a, *size_b, *probe_bound, limit),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // 2 is reserved for resource limits
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(out) => {
            let r = &out.report;
            match cli.report {
                Style::Text => print!("{}", r.render_text()),
                Style::Machine => println!("{}", r.render_machine()),
            }
            if r.limits_hit.is_empty() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            match cli.report {
                Style::Text => eprintln!("error: {e}"),
                Style::Machine => {
                    println!("{}", json!({ "error": { "kind": e.kind(), "message": e.to_string() } }))
                }
            }
            ExitCode::from(e.exit_code())
        }
    }
}
