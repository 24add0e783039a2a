use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};

use admeans::harness::generate::InstanceSpec;
use admeans::harness::matrix_file::{read_matrix, MatrixFile};
use admeans::harness::suites::{run_suite, PropertyReport, RunOptions, Suite};
use admeans::harness::Execution;
use admeans::means::{ad_mean, MeanKind};
use admeans::order::{ad_sqrt, compare_extended_order, toeplitz_decompose, AccretiveDissipativeMatrix};
use admeans::schur::{parallel_sum, schur_complement, BlockPartition};
use admeans::{ComplexSquareMatrix, ToleranceConfig};

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Means, Schur complements and order checks for accretive-dissipative matrices.
#[derive(Parser)]
#[command(name = "admeans", version)]
struct Cli {
    /// Equality tolerance (eq_tol); overrides AD_MEANS_TOL
    #[arg(long, global = true, env = "AD_MEANS_TOL")]
    tol: Option<f64>,

    /// Print machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Toeplitz real and imaginary parts
    Decompose { file: PathBuf },
    /// Compare two matrices in the extended Loewner order
    Compare { t: PathBuf, s: PathBuf },
    /// Component-wise mean of two accretive-dissipative matrices
    Mean {
        #[arg(long)]
        kind: MeanKind,
        t: PathBuf,
        s: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Principal square root of an accretive-dissipative matrix
    Sqrt {
        t: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Parallel sum (T⁻¹ + S⁻¹)⁻¹
    ParallelSum {
        t: PathBuf,
        s: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Schur complement of the trailing block
    Schur {
        file: PathBuf,
        /// Size of the leading block
        #[arg(long)]
        split: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a property suite
    Verify(SuiteArgs),
    /// Run a counterexample search (inverted-polarity suites only)
    Fuzz(SuiteArgs),
}

#[derive(Args)]
struct SuiteArgs {
    #[arg(long)]
    suite: String,
    /// Largest (and by default only) dimension
    #[arg(long, default_value_t = 4)]
    dim: usize,
    /// Cycle dimensions from this value up to --dim
    #[arg(long)]
    min_dim: Option<usize>,
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Condition number cap for generated positive definite parts
    #[arg(long, default_value_t = 100.0)]
    conditioning: f64,
    /// Re-check witnesses in double-double arithmetic
    #[arg(long)]
    high_precision: bool,
    /// Write the JSON report here
    #[arg(long)]
    report: Option<PathBuf>,
    /// Run trials on one thread
    #[arg(long)]
    sequential: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn tolerance(cli: &Cli) -> anyhow::Result<ToleranceConfig> {
    match cli.tol {
        Some(eq) => ToleranceConfig::with_eq_tol(eq).context("invalid --tol"),
        None => Ok(ToleranceConfig::default()),
    }
}

fn load(path: &Path) -> anyhow::Result<ComplexSquareMatrix> {
    read_matrix(path).with_context(|| format!("reading {}", path.display()))
}

fn load_ad(path: &Path, tol: &ToleranceConfig) -> anyhow::Result<AccretiveDissipativeMatrix> {
    AccretiveDissipativeMatrix::new(load(path)?, tol).with_context(|| format!("{}", path.display()))
}

fn fmt_complex(re: f64, im: f64) -> String {
    // Adding zero turns -0 into 0.
    let (re, im) = (re + 0.0, im + 0.0);
    let sign = if im.is_sign_negative() { '-' } else { '+' };
    format!("{re}{sign}{}i", im.abs())
}

fn render(m: &ComplexSquareMatrix) -> String {
    let n = m.dim();
    (0..n)
        .map(|i| {
            let row: Vec<String> = (0..n).map(|j| {
                let z = m.get(i, j);
                fmt_complex(z.re, z.im)
            }).collect();
            format!("[{}]", row.join(", "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn emit_matrix(cli: &Cli, m: &ComplexSquareMatrix, out: Option<&Path>) -> anyhow::Result<ExitCode> {
    let file = MatrixFile::from_matrix(m);
    if let Some(path) = out {
        file.write(path).with_context(|| format!("writing {}", path.display()))?;
    }
    if cli.json {
        println!("{}", file.to_json());
    } else {
        println!("{}", render(m));
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: &Cli) -> anyhow::Result<ExitCode> {
    let tol = tolerance(cli)?;
    match &cli.command {
        Command::Decompose { file } => {
            let parts = toeplitz_decompose(&load(file)?);
            if cli.json {
                let value = serde_json::json!({
                    "real": MatrixFile::from_matrix(parts.real.as_complex()),
                    "imag": MatrixFile::from_matrix(parts.imag.as_complex()),
                });
                println!("{}", serde_json::to_string_pretty(&value)?);
            } else {
                println!("real part:\n{}\nimaginary part:\n{}", render(parts.real.as_complex()), render(parts.imag.as_complex()));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Compare { t, s } => {
            let relation = compare_extended_order(&load(t)?, &load(s)?, &tol)?;
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&relation)?);
            } else {
                println!("{relation}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Mean { kind, t, s, out } => {
            let mean = ad_mean(*kind, &load_ad(t, &tol)?, &load_ad(s, &tol)?, &tol)?;
            emit_matrix(cli, mean.matrix(), out.as_deref())
        }
        Command::Sqrt { t, out } => {
            let root = ad_sqrt(&load_ad(t, &tol)?, &tol)?;
            emit_matrix(cli, root.matrix(), out.as_deref())
        }
        Command::ParallelSum { t, s, out } => {
            let sum = parallel_sum(&load(t)?, &load(s)?, &tol)?;
            emit_matrix(cli, &sum, out.as_deref())
        }
        Command::Schur { file, split, out } => {
            let sc = schur_complement(&load(file)?, BlockPartition::new(*split), &tol)?;
            emit_matrix(cli, &sc, out.as_deref())
        }
        Command::Verify(args) => run_suite_command(cli, args, tol, false),
        Command::Fuzz(args) => run_suite_command(cli, args, tol, true),
    }
}

fn run_suite_command(cli: &Cli, args: &SuiteArgs, tol: ToleranceConfig, fuzz: bool) -> anyhow::Result<ExitCode> {
    let suite: Suite = args.suite.parse()?;
    if fuzz && !suite.inverted_polarity() {
        bail!("fuzz only runs counterexample searches; use verify for suite '{suite}'");
    }
    let mut spec = InstanceSpec::new(args.dim, args.seed, args.conditioning, args.count)?;
    if let Some(min) = args.min_dim {
        spec = spec.with_min_dim(min)?;
    }
    let opts = RunOptions {
        tol,
        execution: if args.sequential { Execution::Sequential } else { Execution::Parallel },
        high_precision: args.high_precision,
    };
    let report = run_suite(suite, &spec, &opts)?;
    if let Some(path) = &args.report {
        std::fs::write(path, report.to_json()).with_context(|| format!("writing {}", path.display()))?;
    }
    if cli.json {
        println!("{}", report.to_json());
    } else {
        print_report(&report);
    }
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(EXIT_VIOLATION) })
}

fn print_report(report: &PropertyReport) {
    println!("{}", report.summary());
    println!("  {}", report.description);
    for (label, count) in &report.outcome_counts {
        println!("  {count:>6}  {label}");
    }
    const SHOWN: usize = 5;
    for w in report.witnesses.iter().take(SHOWN) {
        println!("  witness seed={} index={} dim={}: {}", w.seed, w.index, w.dim, w.observed.trim_end());
        if let Some(v) = &w.high_precision {
            println!("    high precision: {:?} ({})", v.classification, v.detail);
        }
    }
    if report.witnesses.len() > SHOWN {
        println!("  ... {} more witnesses (use --report or --json for all)", report.witnesses.len() - SHOWN);
    }
}
