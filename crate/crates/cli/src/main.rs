use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use fptas_core::knapsack::{
    approx2_min, approx_half_max, exact_dp_max, exact_dp_min, fptas_max, fptas_min,
};
use fptas_core::selftest::run_selftest;
use fptas_core::{
    bench_compare, generate_instance, parse_instance, serialize_instance, write_csv, AnyInstance,
    BenchConfig, Error, GeneratorConfig, ProblemKind, Rational, SolutionReport, WorkMetrics,
};

#[derive(Parser)]
#[command(
    name = "fptas",
    version,
    about = "Weight-scaling FPTAS for Min/Max Knapsack"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance exactly with the weight-indexed DP.
    Solve { file: PathBuf },
    /// Run the constant-ratio approximation (2 for minkp, 1/2 for maxkp).
    Approx { file: PathBuf },
    /// Run the scaling FPTAS.
    Fptas {
        file: PathBuf,
        /// Accuracy as p/q.
        #[arg(long)]
        eps: Rational,
    },
    /// Generate a random instance.
    Gen {
        #[arg(long)]
        kind: ProblemKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        wmax: u64,
        #[arg(long)]
        smax: u64,
        /// Demand or capacity as a fraction p/q of the total size.
        #[arg(long, default_value = "1/2")]
        tight: Rational,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare exact-DP work with FPTAS work and write CSV.
    Bench {
        #[arg(long)]
        kind: ProblemKind,
        #[arg(long, value_delimiter = ',', required = true)]
        n_list: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        eps_list: Vec<Rational>,
        #[arg(long)]
        wmax: u64,
        #[arg(long, default_value_t = BenchConfig::DEFAULT_SIZE_MAX)]
        smax: u64,
        #[arg(long, default_value = "1/2")]
        tight: Rational,
        #[arg(long, value_delimiter = ',', default_value = "1")]
        seeds: Vec<u64>,
        #[arg(long, default_value_t = BenchConfig::DEFAULT_CELL_BUDGET)]
        cell_budget: u128,
        /// Fill the time columns with wall-clock milliseconds (non-reproducible).
        #[arg(long)]
        timing: bool,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every solver against brute force on a seeded corpus.
    Selftest {
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Parse { .. } | Error::Validation(_) | Error::Domain(_) => 2,
        Error::Infeasible(_) => 3,
        Error::BudgetExceeded { .. } => 4,
        _ => 1,
    }
}

fn read_instance(path: &Path) -> Result<AnyInstance, Error> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_instance(&text)
}

fn write_output(out: Option<&Path>, bytes: &[u8]) -> Result<(), Error> {
    match out {
        Some(path) => {
            fs::write(path, bytes).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
        }
        None => Ok(io::stdout().write_all(bytes)?),
    }
}

fn print_report(instance: &AnyInstance, report: &SolutionReport, metrics: &WorkMetrics) {
    let selected: Vec<String> = report.selected.iter().map(|i| i.to_string()).collect();
    let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
    println!("kind {}", instance.kind());
    println!("value {}", report.value);
    println!("selected {}", selected.join(" "));
    println!("feasible {}", report.feasible);
    println!("guarantee {}", report.guarantee);
    println!("bound {}", opt(report.bound_used.map(|b| b.to_string())));
    println!("n {}", metrics.n);
    println!("W {}", metrics.total_weight);
    println!(
        "Wprime {}",
        opt(metrics.total_scaled_weight.map(|w| w.to_string()))
    );
    if let Some(s) = &report.scaling {
        println!("z {}", s.z);
        println!("Wprime_bound {}", s.scaled_weight_bound);
    }
    println!("dp_cells {}", metrics.dp_cells);
    println!("approx_steps {}", metrics.approx_steps);
    println!("structure_bytes {}", metrics.structure_bytes);
    println!("wall_time_ms {}", metrics.wall_time_ms);
}

fn solve_with(
    file: &Path,
    epsilon: Option<Rational>,
    run: impl FnOnce(&AnyInstance) -> Result<SolutionReport, Error>,
) -> Result<(), Error> {
    let instance = read_instance(file)?;
    let start = Instant::now();
    let report = run(&instance)?;
    let metrics =
        WorkMetrics::from_report(&instance, &report, epsilon, start.elapsed().as_millis());
    print_report(&instance, &report, &metrics);
    Ok(())
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Solve { file } => solve_with(&file, None, |inst| match inst {
            AnyInstance::MinKp(i) => exact_dp_min(i),
            AnyInstance::MaxKp(i) => exact_dp_max(i),
        }),
        Command::Approx { file } => solve_with(&file, None, |inst| match inst {
            AnyInstance::MinKp(i) => approx2_min(i),
            AnyInstance::MaxKp(i) => approx_half_max(i),
        }),
        Command::Fptas { file, eps } => solve_with(&file, Some(eps), |inst| match inst {
            AnyInstance::MinKp(i) => fptas_min(i, eps),
            AnyInstance::MaxKp(i) => fptas_max(i, eps),
        }),
        Command::Gen {
            kind,
            n,
            wmax,
            smax,
            tight,
            seed,
            out,
        } => {
            let instance = generate_instance(&GeneratorConfig {
                kind,
                n,
                weight_max: wmax,
                size_max: smax,
                tightness: tight,
                seed,
            })?;
            write_output(out.as_deref(), serialize_instance(&instance).as_bytes())
        }
        Command::Bench {
            kind,
            n_list,
            eps_list,
            wmax,
            smax,
            tight,
            seeds,
            cell_budget,
            timing,
            out,
        } => {
            let config = BenchConfig {
                size_max: smax,
                tightness: tight,
                cell_budget,
                timing,
                ..BenchConfig::new(kind, n_list, eps_list, wmax, seeds)
            };
            let rows = bench_compare(&config)?;
            let mut csv = Vec::new();
            write_csv(&rows, &mut csv)?;
            write_output(out.as_deref(), &csv)
        }
        Command::Selftest { count, seed } => {
            let outcomes = run_selftest(count, seed)?;
            let mut failed = 0;
            for o in &outcomes {
                let status = if o.passed() { "PASS" } else { "FAIL" };
                println!(
                    "{status} {} ({} cases, {} failures)",
                    o.name, o.cases, o.failures
                );
                failed += usize::from(!o.passed());
            }
            if failed > 0 {
                return Err(Error::Invariant(format!("{failed} selftest checks failed")));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
