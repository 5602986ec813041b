use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gradspec::{Error, GradedRing, SpecMethod};
use gradspec_cli::verify::InstanceSummary;
use gradspec_cli::{export_dot, parse_instance, run_verify, spectrum_listing, InstanceError, Suite};

#[derive(Parser)]
#[command(name = "gradspec", version, about = "Verify graded ideal theory on finite Z/2-graded rings")]
struct Cli {
    /// Override the enumeration bound on ring size.
    #[arg(long, global = true)]
    bound: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Definitional,
    Constructive,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an instance file and print a summary of the graded ring.
    Build { file: PathBuf },
    /// Run verification suites.
    Verify {
        file: PathBuf,
        #[arg(long = "suite", value_enum)]
        suites: Vec<Suite>,
    },
    /// List the prime spectrum, or the graded spectrum with --graded.
    Spec {
        file: PathBuf,
        #[arg(long)]
        graded: bool,
        #[arg(long, value_enum, default_value_t = Method::Definitional)]
        method: Method,
    },
    /// Graphviz rendering of the graded spectrum and Spec R0.
    ExportDot { file: PathBuf },
}

const INPUT_ERROR: u8 = 2;
const RESOURCE_LIMIT: u8 = 3;

fn load(path: &Path, bound: Option<usize>) -> Result<(String, GradedRing), ExitCode> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", path.display());
        ExitCode::from(INPUT_ERROR)
    })?;
    let spec = parse_instance(&text).map_err(|e| input_failure(path, &e))?;
    let g = spec.build().map_err(|e| input_failure(path, &e))?;
    let g = match bound {
        Some(b) => g.with_bound(b),
        None => g,
    };
    let name = spec.name.clone().unwrap_or_else(|| {
        path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| spec.display_name())
    });
    Ok((name, g))
}

fn input_failure(path: &Path, e: &InstanceError) -> ExitCode {
    eprintln!("error: {}: {e}", path.display());
    ExitCode::from(if e.is_resource_limit() { RESOURCE_LIMIT } else { INPUT_ERROR })
}

fn library_failure(e: Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(if matches!(e, Error::ResourceLimit { .. }) { RESOURCE_LIMIT } else { 1 })
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output types always serialize");
    s.push('\n');
    s
}

fn run(cli: Cli) -> Result<ExitCode, ExitCode> {
    match cli.command {
        Command::Build { file } => {
            let (name, g) = load(&file, cli.bound)?;
            let summary = InstanceSummary::of(&name, &g);
            match cli.format {
                Format::Json => print!("{}", json(&summary)),
                Format::Text => println!(
                    "{}: {}\n|R| = {}, |R0| = {}, |R1| = {}, strongly graded: {}",
                    summary.name,
                    summary.description,
                    summary.order,
                    summary.r0_order,
                    summary.r1_order,
                    summary.strongly_graded
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { file, suites } => {
            let (name, g) = load(&file, cli.bound)?;
            let report = run_verify(&name, &g, &suites);
            match cli.format {
                Format::Json => print!("{}", report.to_json()),
                Format::Text => print!("{}", report.to_text()),
            }
            Ok(ExitCode::from(report.exit_code() as u8))
        }
        Command::Spec { file, graded, method } => {
            let (_, g) = load(&file, cli.bound)?;
            let method = match method {
                Method::Definitional => SpecMethod::Definitional,
                Method::Constructive => SpecMethod::Constructive,
            };
            let listing = spectrum_listing(&g, graded, method).map_err(library_failure)?;
            match cli.format {
                Format::Json => print!("{}", json(&listing)),
                Format::Text => print!("{}", listing.to_text()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::ExportDot { file } => {
            let (_, g) = load(&file, cli.bound)?;
            print!("{}", export_dot(&g).map_err(library_failure)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { INPUT_ERROR } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    run(cli).unwrap_or_else(|code| code)
}
