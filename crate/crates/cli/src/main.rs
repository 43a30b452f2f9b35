//! `kuiper`: critical values, tables and goodness-of-fit tests from the
//! command line.
//!
//! Exit status: 0 success or ACCEPT, 1 numerical failure, 2 usage error,
//! 3 REJECT.

mod data;
mod format;
mod table;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kuiper_core::{
    inverse_cdf, kuiper_pair, kuiper_statistic_one_sample, lower_tail_quantile,
    monte_carlo_exceedance, run_test, upper_tail_quantile, IterationMethod, KuiperError,
    SampleSize, TestKind,
};

use crate::data::Reference;
use crate::format::{fixed, trimmed};
use crate::table::{TableFormat, TableSpec};

const EXIT_NUMERICAL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_REJECT: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "kuiper", version, about = "Kuiper's V_n / V_{n,n} critical values and tests")]
struct Cli {
    /// Digits after the decimal point in printed values (1..=12)
    #[arg(long, global = true, default_value_t = 4, value_parser = clap::value_parser!(u8).range(1..=12))]
    decimals: u8,

    /// Table layout
    #[arg(long, global = true, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Vn,
    Vnn,
}

impl From<KindArg> for TestKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Vn => TestKind::OneSample,
            KindArg::Vnn => TestKind::TwoSampleEqual,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Direct,
    Newton,
}

impl From<MethodArg> for IterationMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Direct => IterationMethod::Direct,
            MethodArg::Newton => IterationMethod::Newton,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SimKind {
    Vn,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DistArg {
    Uniform,
    Normal,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[arg(long, value_enum, default_value_t = KindArg::Vn)]
    test: KindArg,
    #[arg(long, value_enum, default_value_t = MethodArg::Newton)]
    method: MethodArg,
    #[arg(long, default_value_t = 2.45, value_parser = parse_guess)]
    guess: f64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve one Kuiper pair (c, v)
    Pair {
        #[arg(long, value_parser = parse_open_unit)]
        alpha: f64,
        #[arg(long, value_parser = parse_size)]
        n: SampleSize,
        #[command(flatten)]
        solve: SolveArgs,
    },
    /// Grid of Kuiper pairs over alphas x sample sizes
    Table {
        #[arg(long, value_delimiter = ',', value_parser = parse_open_unit,
              default_values_t = [0.10, 0.05, 0.01])]
        alphas: Vec<f64>,
        #[arg(long, value_delimiter = ',', value_parser = parse_size,
              default_values = ["10", "20", "30", "40", "100", "180", "1000000"])]
        ns: Vec<SampleSize>,
        #[command(flatten)]
        solve: SolveArgs,
    },
    /// Upper tail quantile v with Pr{V_n > v} = alpha
    Utq {
        #[arg(long, value_parser = parse_open_unit)]
        alpha: f64,
        #[arg(long, value_parser = parse_size)]
        n: SampleSize,
    },
    /// Lower tail quantile v with Pr{V_n <= v} = alpha
    Ltq {
        #[arg(long, value_parser = parse_open_unit)]
        alpha: f64,
        #[arg(long, value_parser = parse_size)]
        n: SampleSize,
    },
    /// Inverse CDF of V_n
    Invcdf {
        #[arg(long, value_parser = parse_closed_unit)]
        p: f64,
        #[arg(long, value_parser = parse_size)]
        n: SampleSize,
    },
    /// CSV of (p, F^-1(p)) on a uniform grid in [0.0002, 0.9998]
    Curve {
        #[arg(long, value_parser = parse_size)]
        n: SampleSize,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u32).range(2..))]
        points: u32,
    },
    /// One-sample goodness-of-fit test on a data file
    Test {
        #[arg(long)]
        data: PathBuf,
        #[arg(long, value_parser = parse_open_unit)]
        alpha: f64,
        /// Hypothesized distribution, applied as a probability-integral transform
        #[arg(long, value_enum, conflicts_with = "pit", required_unless_present = "pit")]
        dist: Option<DistArg>,
        /// Distribution parameters: a,b for uniform or mu,sigma for normal
        #[arg(long, value_delimiter = ',', requires = "dist", allow_negative_numbers = true)]
        params: Vec<f64>,
        /// Values are already transformed to [0, 1]
        #[arg(long)]
        pit: bool,
    },
    /// Monte Carlo check of Pr{V_n > v_alpha} against alpha
    Simulate {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_parser = parse_open_unit)]
        alpha: f64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        reps: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = SimKind::Vn)]
        test: SimKind,
    },
}

fn parse_open_unit(s: &str) -> Result<f64, String> {
    let x: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if x > 0.0 && x < 1.0 {
        Ok(x)
    } else {
        Err(format!("{x} is not in (0, 1)"))
    }
}

fn parse_closed_unit(s: &str) -> Result<f64, String> {
    let x: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if (0.0..=1.0).contains(&x) {
        Ok(x)
    } else {
        Err(format!("{x} is not in [0, 1]"))
    }
}

fn parse_size(s: &str) -> Result<SampleSize, String> {
    s.parse::<SampleSize>().map_err(|e| e.to_string())
}

fn parse_guess(s: &str) -> Result<f64, String> {
    let x: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if x > 0.0 && x.is_finite() {
        Ok(x)
    } else {
        Err(format!("guess must be positive, got {x}"))
    }
}

fn fail(err: &KuiperError) -> ExitCode {
    eprintln!("error: {}: {err}", err.name());
    match err {
        KuiperError::InvalidArgument(_)
        | KuiperError::EmptyInput
        | KuiperError::UnsortedInput { .. }
        | KuiperError::OutOfRange { .. }
        | KuiperError::LengthMismatch { .. } => ExitCode::from(EXIT_USAGE),
        _ => ExitCode::from(EXIT_NUMERICAL),
    }
}

fn usage(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .format_timestamp(None)
        .init();
    let cli = Cli::parse();
    let d = cli.decimals as usize;

    match cli.command {
        Command::Pair { alpha, n, solve } => {
            match kuiper_pair(solve.guess, alpha, n, solve.test.into(), solve.method.into()) {
                Ok(p) => {
                    println!("c={} v={}", fixed(p.critical_value, d), fixed(p.quantile, d));
                    ExitCode::SUCCESS
                }
                Err(e) => fail(&e),
            }
        }
        Command::Table { alphas, ns, solve } => {
            let spec = TableSpec {
                alphas,
                ns,
                kind: solve.test.into(),
                method: solve.method.into(),
                guess: solve.guess,
                format: cli.format,
                decimals: d,
            };
            if let Err(msg) = spec.validate() {
                return usage(&msg);
            }
            let (text, failures) = spec.render();
            print!("{text}");
            if failures.is_empty() {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: {} cell(s) could not be solved:", failures.len());
                for f in &failures {
                    eprintln!("  {f}");
                }
                ExitCode::from(EXIT_NUMERICAL)
            }
        }
        Command::Utq { alpha, n } => print_value(upper_tail_quantile(alpha, n), d),
        Command::Ltq { alpha, n } => print_value(lower_tail_quantile(alpha, n), d),
        Command::Invcdf { p, n } => print_value(inverse_cdf(p, n), d),
        Command::Curve { n, points } => {
            let (lo, hi) = (0.0002, 0.9998);
            let last = (points - 1) as f64;
            let mut missing = 0;
            println!("p,x");
            for i in 0..points {
                let p = (lo * (last - i as f64) + hi * i as f64) / last;
                let x = match inverse_cdf(p, n) {
                    Ok(x) => fixed(x, d),
                    Err(_) => {
                        missing += 1;
                        "NA".to_string()
                    }
                };
                println!("{},{x}", trimmed(p));
            }
            if missing > 0 {
                eprintln!("note: {missing} point(s) could not be solved and are NA");
            }
            ExitCode::SUCCESS
        }
        Command::Test {
            data,
            alpha,
            dist,
            params,
            pit,
        } => run_data_test(&data, alpha, dist, &params, pit, d),
        Command::Simulate {
            n,
            alpha,
            reps,
            seed,
            test: SimKind::Vn,
        } => {
            let size = match SampleSize::finite(n) {
                Ok(s) => s,
                Err(e) => return fail(&e),
            };
            let v = match upper_tail_quantile(alpha, size) {
                Ok(v) => v,
                Err(e) => return fail(&e),
            };
            let empirical = monte_carlo_exceedance(n as usize, v, reps as usize, seed);
            println!(
                "target={} empirical={} reps={reps} seed={seed}",
                trimmed(alpha),
                fixed(empirical, d.max(4))
            );
            ExitCode::SUCCESS
        }
    }
}

fn print_value(res: kuiper_core::Result<f64>, d: usize) -> ExitCode {
    match res {
        Ok(x) => {
            println!("{}", fixed(x, d));
            ExitCode::SUCCESS
        }
        Err(e) => fail(&e),
    }
}

fn run_data_test(
    path: &std::path::Path,
    alpha: f64,
    dist: Option<DistArg>,
    params: &[f64],
    pit: bool,
    d: usize,
) -> ExitCode {
    let values = match data::read_values(path) {
        Ok(v) => v,
        Err(msg) => return usage(&msg),
    };
    let mut u: Vec<f64> = if pit {
        values
    } else {
        let name = match dist {
            Some(DistArg::Uniform) => "uniform",
            Some(DistArg::Normal) => "normal",
            None => return usage("one of --dist or --pit is required"),
        };
        let reference = match Reference::from_args(name, params) {
            Ok(r) => r,
            Err(msg) => return usage(&msg),
        };
        values.iter().map(|&x| reference.cdf(x)).collect()
    };
    // range is checked before sorting so the reported index refers to the file order
    if let Some((index, &value)) = u.iter().enumerate().find(|(_, x)| !(0.0..=1.0).contains(*x)) {
        return fail(&KuiperError::OutOfRange { index, value });
    }
    u.sort_by(f64::total_cmp);

    let stat = match kuiper_statistic_one_sample(&u) {
        Ok(s) => s,
        Err(e) => return fail(&e),
    };
    let decision = match run_test(&stat, alpha, TestKind::OneSample) {
        Ok(dec) => dec,
        Err(e) => return fail(&e),
    };
    println!("n={}", stat.n);
    println!("D+={}", fixed(stat.d_plus, d));
    println!("D-={}", fixed(stat.d_minus, d));
    println!("V={}", fixed(stat.v, d));
    println!("sqrt(n)*V={}", fixed(stat.k, d));
    println!("v_alpha={}", fixed(decision.quantile, d));
    println!("p_value={}", fixed(stat.p_value(), d));
    if decision.reject {
        println!("decision=REJECT");
        ExitCode::from(EXIT_REJECT)
    } else {
        println!("decision=ACCEPT");
        ExitCode::SUCCESS
    }
}
