use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use ccp_cli::report::{verify_report, RunReport, Timing};
use ccp_cli::{perturb, point_command, solve, two_color, CliError, Method, PointCommand, SolveOptions};
use ccp_core::complex::DEFAULT_C_EXPONENT;
use ccp_core::io::{parse_instance, parse_points, parse_two_color};
use ccp_core::pls::PivotRule;
use ccp_core::reductions::Backend;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "ccp", version, about = "Exact colorful Carathéodory solvers and their reductions")]
struct Cli {
    /// Worker threads for parallel evaluation.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Add wall-clock time to the report (outside the certified fields).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Ppad,
    Pls,
}

#[derive(Clone, Copy, ValueEnum)]
enum PivotArg {
    First,
    Best,
}

#[derive(Subcommand)]
enum Command {
    /// Find a colorful choice that ray-embraces b.
    Solve {
        instance: PathBuf,
        #[arg(long, value_enum, default_value = "ppad")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "first")]
        pivot: PivotArg,
        /// Step budget for the walk or the local search.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_C_EXPONENT)]
        c_exponent: u32,
        #[arg(long)]
        trace: bool,
    },
    /// Find a split with exactly k points of the first class.
    TwoColor {
        instance: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        trace: bool,
    },
    /// Partition a point set into parts whose convex hulls meet.
    Tverberg {
        points: PathBuf,
        #[arg(long, value_enum, default_value = "pls")]
        method: MethodArg,
    },
    /// A point of Tukey depth at least ⌈n/(d+1)⌉.
    Centerpoint {
        points: PathBuf,
        #[arg(long, value_enum, default_value = "pls")]
        method: MethodArg,
    },
    /// A point contained in many simplices spanned by the set.
    Simdepth {
        points: PathBuf,
        #[arg(long, value_enum, default_value = "pls")]
        method: MethodArg,
    },
    /// Move an instance into general position; writes the ground instance and the map.
    Perturb {
        instance: PathBuf,
        #[arg(long)]
        ground: PathBuf,
        #[arg(long)]
        map: PathBuf,
        /// Perturb even when the input is already in general position.
        #[arg(long)]
        force: bool,
    },
    /// Re-check the certificate in a report.
    Verify { report: PathBuf },
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn backend(m: MethodArg) -> Backend {
    match m {
        MethodArg::Ppad => Backend::Ppad,
        MethodArg::Pls => Backend::Pls,
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Io(e.to_string()))?;
    }
    let start = Instant::now();
    let mut report: RunReport = match cli.command {
        Command::Solve { instance, method, pivot, budget, c_exponent, trace } => {
            let inst = parse_instance(&read(&instance)?)?;
            let opts = SolveOptions {
                method: match method {
                    MethodArg::Ppad => Method::Ppad,
                    MethodArg::Pls => Method::Pls,
                },
                pivot: match pivot {
                    PivotArg::First => PivotRule::First,
                    PivotArg::Best => PivotRule::Best,
                },
                budget,
                c_exponent,
                trace,
            };
            solve(&inst, &opts)?
        }
        Command::TwoColor { instance, k, trace } => {
            let text = read(&instance)?;
            let (c1, c2, b) = parse_two_color(&text)?;
            two_color(b.len(), &c1, &c2, &b, k, trace)?
        }
        Command::Tverberg { points, method } => point_command(PointCommand::Tverberg, &parse_points(&read(&points)?)?, backend(method))?,
        Command::Centerpoint { points, method } => {
            point_command(PointCommand::Centerpoint, &parse_points(&read(&points)?)?, backend(method))?
        }
        Command::Simdepth { points, method } => point_command(PointCommand::Simdepth, &parse_points(&read(&points)?)?, backend(method))?,
        Command::Perturb { instance, ground, map, force } => {
            let out = perturb(&parse_instance(&read(&instance)?)?, force)?;
            write(&ground, &out.ground_text)?;
            write(&map, &out.map_text)?;
            out.report
        }
        Command::Verify { report } => {
            let r = RunReport::from_json(&read(&report)?)?;
            println!("{}", verify_report(&r)?);
            return Ok(());
        }
    };
    if cli.timing {
        report.timing = Some(Timing { wall_ms: start.elapsed().as_millis() as u64 });
    }
    let text = report.to_json();
    match &cli.out {
        Some(p) => write(p, &text),
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
            eprintln!("ccp: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
