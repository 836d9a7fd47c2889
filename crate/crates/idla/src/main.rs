//! Thin command-line front end; all computation lives in the library.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use idla::algebra::Rational;
use idla::chain::Bias;
use idla::cli::{self, OutputFormat};
use idla::montecarlo::SimConfig;
use idla::verify::Suite;

#[derive(Parser)]
#[command(
    name = "idla",
    version,
    about = "One-dimensional internal DLA: exact laws, run times and seeded simulation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Csv,
    Json,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> OutputFormat {
        match f {
            Format::Csv => OutputFormat::Csv,
            Format::Json => OutputFormat::Json,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Exact law of the right-of-origin count once n sites are occupied
    ExactDist {
        /// Number of occupied sites (>= 1)
        #[arg(long)]
        n: u64,
        /// Rightward step probability as a rational, e.g. 2/3 (default 1/2)
        #[arg(long)]
        bias: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Seeded Monte Carlo batch compared against the exact law
    Simulate {
        /// Number of occupied sites per game (>= 1)
        #[arg(long)]
        n: u64,
        /// Number of independent games (>= 1)
        #[arg(long)]
        trials: u64,
        /// Master seed; trial substreams derive from it deterministically
        #[arg(long)]
        seed: u64,
        /// Rightward step probability as a rational (default 1/2)
        #[arg(long)]
        bias: Option<String>,
        /// Worker threads; affects wall-clock time only, never results
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Expected-toss table: cubic closed form vs per-particle construction
    Runtime {
        /// Largest occupied-site count to tabulate
        #[arg(long)]
        max_n: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Exact law of the occupied-site count after N tosses, N = 1..=max-n
    Ntoss {
        /// Largest toss count (capped; IDLA_NTOSS_CAP raises the cap)
        #[arg(long)]
        max_n: u32,
        /// Rightward step probability as a rational (default 1/2)
        #[arg(long)]
        bias: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Run identity suites; exits 1 if any check fails
    Verify {
        /// all, eulerian, genfun, chain or biased
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn parse_bias(raw: Option<&str>) -> Result<Bias, String> {
    let Some(raw) = raw else {
        return Ok(Bias::fair());
    };
    let value: Rational = raw
        .parse()
        .map_err(|_| format!("bias must be a rational like 2/3, got '{raw}'"))?;
    Bias::new(value).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::ExactDist { n, bias, format } => {
            if n < 1 {
                return usage_error("--n must be at least 1");
            }
            let bias = match parse_bias(bias.as_deref()) {
                Ok(b) => b,
                Err(e) => return usage_error(&e),
            };
            print!("{}", cli::exact_dist(n, &bias).render(format.into()));
            ExitCode::SUCCESS
        }
        Command::Simulate {
            n,
            trials,
            seed,
            bias,
            workers,
            format,
        } => {
            if n < 1 {
                return usage_error("--n must be at least 1");
            }
            if trials < 1 {
                return usage_error("--trials must be at least 1");
            }
            if workers < 1 {
                return usage_error("--workers must be at least 1");
            }
            let bias = match parse_bias(bias.as_deref()) {
                Ok(b) => b,
                Err(e) => return usage_error(&e),
            };
            let config = SimConfig {
                sites: n,
                trials,
                bias,
                master_seed: seed,
                workers,
            };
            print!("{}", cli::simulate(&config).render(format.into()));
            ExitCode::SUCCESS
        }
        Command::Runtime { max_n, format } => {
            if max_n < 1 {
                return usage_error("--max-n must be at least 1");
            }
            print!("{}", cli::runtime(max_n).render(format.into()));
            ExitCode::SUCCESS
        }
        Command::Ntoss {
            max_n,
            bias,
            format,
        } => {
            if max_n < 1 {
                return usage_error("--max-n must be at least 1");
            }
            let cap = match cli::ntoss_cap() {
                Ok(cap) => cap,
                Err(e) => return usage_error(&e),
            };
            let bias = match parse_bias(bias.as_deref()) {
                Ok(b) => b,
                Err(e) => return usage_error(&e),
            };
            match cli::ntoss(max_n, &bias, cap) {
                Ok(envelope) => {
                    print!("{}", envelope.render(format.into()));
                    ExitCode::SUCCESS
                }
                Err(e) => usage_error(&e.to_string()),
            }
        }
        Command::Verify { suite, format } => {
            let suite: Suite = match suite.parse() {
                Ok(s) => s,
                Err(e) => return usage_error(&e),
            };
            let (envelope, all_passed) = cli::verify(suite);
            print!("{}", envelope.render(format.into()));
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
