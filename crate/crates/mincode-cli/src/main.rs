//! `mincode`: construct linear codes over prime fields, compute exact
//! weight distributions, and decide minimality.
//!
//! Exit codes: `check-minimal` uses 0 = minimal, 1 = not minimal,
//! 2 = inconclusive. Every error (usage, I/O, parsing, bound violations,
//! method/input mismatch) exits 3 with a message on stderr.

mod report;

use clap::error::ErrorKind;
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use mincode::code::WeightDistribution;
use mincode::format::{parse_function, parse_generator, write_generator};
use mincode::krawtchouk::{krawtchouk, lloyd};
use mincode::minimality::{
    ashikhmin_barg, is_minimal_definitional, is_minimal_weight_criterion, two_weight_sufficient,
    Method, MinimalityVerdict, Outcome,
};
use mincode::ternary::{
    build_cf, build_cf_general, distribution_from_walsh, gmk_certificate, is_minimal_walsh,
    make_gmk, FieldFunction, GmkParams,
};
use mincode::{LinearCode, PrimeField};
use report::{CertifyReport, CheckReport, ConstructReport, ValueReport, WeightsReport};
use serde::Serialize;
use std::path::{Path, PathBuf};
use std::time::Instant;

type CliError = Box<dyn std::error::Error>;

#[derive(Parser)]
#[command(
    name = "mincode",
    version,
    about = "Construct linear codes over prime fields, compute exact weight distributions, and certify minimality"
)]
struct Cli {
    /// Emit machine-readable JSON
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for the parallel kernels (default: all cores)
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    /// Include timings in the output
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a Krawtchouk or Lloyd polynomial exactly
    Krawtchouk(KrawtchoukArgs),
    /// Build a generator matrix and write it to a file
    Construct {
        #[command(subcommand)]
        kind: ConstructCommand,
    },
    /// Compute the exact weight distribution of a code
    Weights(WeightsArgs),
    /// Decide minimality with a chosen procedure
    CheckMinimal(CheckArgs),
    /// Emit the closed-form certificate for a g_(m,k) code
    CertifyGmk(CertifyArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("degree").required(true)))]
struct KrawtchoukArgs {
    /// Alphabet parameter q (any integer >= 2)
    #[arg(long)]
    q: u64,

    /// Length parameter m
    #[arg(long)]
    m: u32,

    /// Degree t of the Krawtchouk polynomial
    #[arg(long, group = "degree")]
    t: Option<u32>,

    /// Evaluate the degree-K Lloyd polynomial (partial sum) instead
    #[arg(long, group = "degree", value_name = "K")]
    lloyd: Option<u32>,

    /// Evaluation point x
    #[arg(long)]
    x: u32,
}

#[derive(Subcommand)]
enum ConstructCommand {
    /// The ternary code of the weight-at-most-k indicator g_(m,k)
    Gmk {
        /// Dimension m >= 5
        #[arg(long)]
        m: usize,
        /// Weight bound k with 2 <= k <= (m-1)/2
        #[arg(long)]
        k: usize,
        /// Output path for the generator-matrix file
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
    },
    /// The code of a function table f: GF(p)^m -> GF(p) with f(0) = 0
    Cf {
        /// Function-table file
        #[arg(long, value_name = "FILE")]
        func: PathBuf,
        /// Output path for the generator-matrix file
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
    },
}

/// Either a generator-matrix file or a function-table file.
#[derive(Args)]
#[command(group(ArgGroup::new("input").required(true)))]
struct InputArgs {
    /// Generator-matrix file
    #[arg(long, group = "input", value_name = "FILE")]
    code: Option<PathBuf>,

    /// Function-table file
    #[arg(long, group = "input", value_name = "FILE")]
    func: Option<PathBuf>,
}

#[derive(Args)]
struct WeightsArgs {
    #[command(flatten)]
    input: InputArgs,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    input: InputArgs,

    /// Decision procedure
    #[arg(long, value_enum)]
    method: MethodArg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    /// Pair scan testing support containment directly
    Definitional,
    /// Pair scan via the weight-sum criterion
    Weights,
    /// Spectral scan (ternary function input only)
    Walsh,
    /// Ashikhmin-Barg ratio screen (sufficient only)
    Ab,
    /// Two-weight shortcut (sufficient only)
    TwoWeight,
}

#[derive(Args)]
struct CertifyArgs {
    /// Dimension m >= 5
    #[arg(long)]
    m: usize,

    /// Weight bound k with 2 <= k <= (m-1)/2
    #[arg(long)]
    k: usize,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    if let Some(n) = cli.threads {
        if n == 0 {
            eprintln!("error: --threads must be at least 1");
            std::process::exit(3);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            std::process::exit(3);
        }
    }
    match run(&cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(3);
        }
    }
}

fn run(cli: &Cli) -> Result<i32, CliError> {
    match &cli.command {
        Command::Krawtchouk(args) => cmd_krawtchouk(cli, args),
        Command::Construct { kind } => cmd_construct(cli, kind),
        Command::Weights(args) => cmd_weights(cli, args),
        Command::CheckMinimal(args) => cmd_check_minimal(cli, args),
        Command::CertifyGmk(args) => cmd_certify(cli, args),
    }
}

fn emit<T: Serialize>(cli: &Cli, report: &T, text: String) -> Result<(), CliError> {
    if cli.json {
        println!("{}", serde_json::to_string(report)?);
    } else {
        print!("{text}");
    }
    Ok(())
}

fn elapsed(cli: &Cli, started: Instant) -> Option<u128> {
    cli.timing.then(|| started.elapsed().as_millis())
}

fn cmd_krawtchouk(cli: &Cli, args: &KrawtchoukArgs) -> Result<i32, CliError> {
    let started = Instant::now();
    let (kind, degree, value) = match (args.t, args.lloyd) {
        (Some(t), None) => ("krawtchouk", t, krawtchouk(args.q, args.m, t, args.x)?),
        (None, Some(k)) => ("lloyd", k, lloyd(args.q, args.m, k, args.x)?),
        _ => unreachable!("clap enforces exactly one of --t/--lloyd"),
    };
    let report = ValueReport {
        q: args.q,
        m: args.m,
        kind,
        degree,
        x: args.x,
        value,
        timing_ms: elapsed(cli, started),
    };
    emit(cli, &report, format!("{value}\n"))?;
    Ok(0)
}

fn cmd_construct(cli: &Cli, kind: &ConstructCommand) -> Result<i32, CliError> {
    let started = Instant::now();
    let (code, out) = match kind {
        ConstructCommand::Gmk { m, k, out } => {
            GmkParams::new(*m, *k)?;
            (build_cf(&make_gmk(*m, *k)?)?, out)
        }
        ConstructCommand::Cf { func, out } => {
            let f = parse_function(&read_file(func)?)?;
            let code = match f.to_ternary() {
                Some(tern) => build_cf(&tern)?,
                None => build_cf_general(&f)?,
            };
            (code, out)
        }
    };
    std::fs::write(out, write_generator(&code))?;
    let report = ConstructReport {
        q: code.field().q(),
        n: code.n(),
        k: code.k(),
        out: out.display().to_string(),
        timing_ms: elapsed(cli, started),
    };
    emit(cli, &report, report.render_text())?;
    Ok(0)
}

fn cmd_weights(cli: &Cli, args: &WeightsArgs) -> Result<i32, CliError> {
    let input = load_input(&args.input)?;
    let started = Instant::now();
    let (q, n, k, dist) = input_distribution(input)?;
    let (Some(wmin), Some(wmax)) = (dist.w_min(), dist.w_max()) else {
        return Err("code has no nonzero codeword".into());
    };
    let report = WeightsReport {
        q,
        n,
        k,
        weights: dist.counts().clone(),
        wmin,
        wmax,
        timing_ms: elapsed(cli, started),
    };
    emit(cli, &report, report.render_text())?;
    Ok(0)
}

fn cmd_check_minimal(cli: &Cli, args: &CheckArgs) -> Result<i32, CliError> {
    let input = load_input(&args.input)?;
    let started = Instant::now();
    let mut report = match args.method {
        MethodArg::Walsh => {
            let Input::Func(f) = &input else {
                return Err("method walsh needs a function table; pass --func".into());
            };
            let tern = f
                .to_ternary()
                .ok_or("method walsh applies only to ternary (p = 3) functions")?;
            let verdict = is_minimal_walsh(&tern)?;
            let size = 3usize.pow(tern.m() as u32);
            CheckReport::from_verdict(3, size - 1, tern.m() + 1, &verdict)
        }
        MethodArg::Definitional | MethodArg::Weights => {
            let code = input_code(input)?;
            let verdict = if args.method == MethodArg::Definitional {
                is_minimal_definitional(&code)
            } else {
                is_minimal_weight_criterion(&code)
            };
            CheckReport::from_verdict(code.field().q(), code.n(), code.k(), &verdict)
        }
        MethodArg::Ab => {
            let (q, n, k, dist) = input_distribution(input)?;
            let field = PrimeField::new(q as u64)?;
            let verdict = MinimalityVerdict {
                outcome: ashikhmin_barg(&dist, field)?.outcome(),
                method: Method::AbRatio,
                witness: None,
            };
            let mut r = CheckReport::from_verdict(q, n, k, &verdict).with_extremes(&dist);
            r.ab_satisfied = Some(verdict.outcome == Outcome::Minimal);
            r
        }
        MethodArg::TwoWeight => {
            let (q, n, k, dist) = input_distribution(input)?;
            let (w1, w2) = dist
                .two_weights()
                .ok_or("two-weight method needs a code with exactly two nonzero weights")?;
            let verdict = MinimalityVerdict {
                outcome: two_weight_sufficient(q, w1, w2)?.outcome(),
                method: Method::TwoWeight,
                witness: None,
            };
            CheckReport::from_verdict(q, n, k, &verdict).with_extremes(&dist)
        }
    };
    report.timing_ms = elapsed(cli, started);
    let exit = match report.verdict {
        "minimal" => 0,
        "not_minimal" => 1,
        _ => 2,
    };
    emit(cli, &report, report.render_text())?;
    Ok(exit)
}

fn cmd_certify(cli: &Cli, args: &CertifyArgs) -> Result<i32, CliError> {
    let started = Instant::now();
    let cert = gmk_certificate(args.m, args.k)?;
    let mut report = CertifyReport::from_certificate(&cert);
    report.timing_ms = elapsed(cli, started);
    emit(cli, &report, report.render_text())?;
    Ok(0)
}

enum Input {
    Code(LinearCode),
    Func(FieldFunction),
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn load_input(args: &InputArgs) -> Result<Input, CliError> {
    match (&args.code, &args.func) {
        (Some(path), None) => Ok(Input::Code(parse_generator(&read_file(path)?)?)),
        (None, Some(path)) => Ok(Input::Func(parse_function(&read_file(path)?)?)),
        _ => unreachable!("clap enforces exactly one input"),
    }
}

/// Materializes a code from either input kind.
fn input_code(input: Input) -> Result<LinearCode, CliError> {
    match input {
        Input::Code(code) => Ok(code),
        Input::Func(f) => match f.to_ternary() {
            Some(tern) => Ok(build_cf(&tern)?),
            None => Ok(build_cf_general(&f)?),
        },
    }
}

/// Code parameters and weight distribution from either input kind. Ternary
/// function tables go through the spectral route; everything else is
/// enumerated.
fn input_distribution(input: Input) -> Result<(u16, usize, usize, WeightDistribution), CliError> {
    match input {
        Input::Code(code) => {
            Ok((code.field().q(), code.n(), code.k(), code.weight_distribution()))
        }
        Input::Func(f) => match f.to_ternary() {
            Some(tern) => {
                let dist = distribution_from_walsh(&tern)?;
                let size = 3usize.pow(tern.m() as u32);
                Ok((3, size - 1, tern.m() + 1, dist))
            }
            None => {
                let code = build_cf_general(&f)?;
                Ok((code.field().q(), code.n(), code.k(), code.weight_distribution()))
            }
        },
    }
}
