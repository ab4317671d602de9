use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use g2lab_cli::commands::{self, exit, CliError, Outcome};
use g2lab_cli::config::{DEFAULT_SAMPLES, DEFAULT_SEED};
use g2lab_cli::{cmd_verify, Format, Mode, RunConfig};

#[derive(Parser, Debug)]
#[command(
    name = "g2lab",
    version,
    about = "Exact verification and calculation for G2-structures on R^7"
)]
struct Cli {
    /// Seed for the random samples.
    #[arg(long, env = "G2LAB_SEED", default_value_t = DEFAULT_SEED, global = true)]
    seed: u64,
    /// Number of random samples per suite (torsion and map suites use a tenth).
    #[arg(long, default_value_t = DEFAULT_SAMPLES, global = true)]
    samples: usize,
    #[arg(long, value_enum, default_value_t = Mode::Exact, global = true)]
    mode: Mode,
    /// Random integer entries are drawn from [-N, N].
    #[arg(long, value_name = "N", default_value_t = g2lab::sample::DEFAULT_RANGE, global = true, allow_negative_numbers = true)]
    range: i64,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Reject inputs outside an identity's domain instead of projecting them.
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the randomized identity suite.
    Verify,
    /// Split an endomorphism into its four components, with norms and invariants.
    Decompose { input: PathBuf },
    /// Intrinsic torsion T to dφ, d⋆φ and the τ-forms.
    Derive { input: PathBuf },
    /// Recover T from a (dφ, d⋆φ) pair.
    Recover { input: PathBuf },
    /// Scalar-curvature formulas against the reference.
    Compare { input: PathBuf },
    /// Torsion class of T.
    Classify { input: PathBuf },
}

fn emit(format: Format, title: &str, value: &serde_json::Value) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(value).expect("serializable")
        ),
        Format::Markdown => print!("{}", commands::to_markdown(title, value)),
    }
}

fn run_data(
    cli: &Cli,
    input: &Path,
    f: fn(&str, &Path) -> Result<Outcome, CliError>,
    title: &str,
) -> u8 {
    let result = commands::read_input(input).and_then(|text| f(&text, input));
    match result {
        Ok(out) => {
            emit(cli.format, title, &out.value);
            out.exit
        }
        Err(e) => {
            eprintln!("g2lab: {e}");
            e.exit_code()
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match &cli.command {
        Command::Verify => {
            let cfg = RunConfig {
                seed: cli.seed,
                samples: cli.samples,
                mode: cli.mode,
                range: cli.range,
                format: cli.format,
                strict: cli.strict,
            };
            match cmd_verify(&cfg) {
                Ok(report) => {
                    match cfg.format {
                        Format::Json => println!(
                            "{}",
                            serde_json::to_string_pretty(&report.to_json()).expect("serializable")
                        ),
                        Format::Markdown => print!("{}", report.to_markdown()),
                    }
                    if report.passed() {
                        exit::OK
                    } else {
                        exit::IDENTITY_FAILURE
                    }
                }
                Err(e) => {
                    eprintln!("g2lab: {e}");
                    exit::USAGE
                }
            }
        }
        Command::Decompose { input } => run_data(&cli, input, commands::decompose, "decompose"),
        Command::Derive { input } => run_data(&cli, input, commands::derive, "derive"),
        Command::Recover { input } => run_data(&cli, input, commands::recover, "recover"),
        Command::Compare { input } => run_data(&cli, input, commands::compare, "compare"),
        Command::Classify { input } => run_data(&cli, input, commands::classify, "classify"),
    };
    ExitCode::from(code)
}
