use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod golden;
mod output;

use commands::Failure;

#[derive(Parser, Debug)]
#[command(name = "equator", version, about = "Stability of the equator map for extrinsic k-energies")]
struct Cli {
    /// Worker threads for range commands (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    jobs: Option<u32>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// A_k(n), α_k(n), P_k(n) and the resulting classification.
    Poly {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
    /// Critical dimensions n_k*.
    Threshold {
        #[command(flatten)]
        sel: KSelection,
        #[arg(long, value_enum, default_value_t = Method::Binary)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Gaps n_k* - n_{k-1}* over a range of k.
    Gaps {
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], required = true)]
        k_range: Vec<u32>,
    },
    /// Run an invariant suite, or diff the golden tables.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        /// Largest k checked; the golden suite defaults to every row.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k_max: Option<u32>,
    },
    /// Numeric Hardy quotient of a cutoff power r^β.
    HardyDemo {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// Exponent; defaults to (2k - n)/2.
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<f64>,
        #[arg(long, default_value_t = 1e-6)]
        epsilon: f64,
        /// Blend width in log r; defaults to 0.3 log(1/ε).
        #[arg(long)]
        width: Option<f64>,
        /// Vanishing derivatives at each junction; defaults to 2k.
        #[arg(long)]
        smoothness: Option<u32>,
        #[arg(long, default_value_t = 4096)]
        points: usize,
    },
    /// Search for a test function with negative second variation.
    Instability {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, default_value_t = 64)]
        budget: usize,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct KSelection {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    k: Option<u32>,
    #[arg(long, num_args = 2, value_names = ["LO", "HI"])]
    k_range: Option<Vec<u32>>,
}

impl KSelection {
    fn bounds(&self) -> (u32, u32) {
        match (&self.k, &self.k_range) {
            (Some(k), _) => (*k, *k),
            (None, Some(r)) => (r[0], r[1]),
            (None, None) => unreachable!("clap enforces the group"),
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Linear,
    Binary,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteArg {
    Lemma,
    Bound,
    Radial,
    Hardy,
    Ratio,
    Golden,
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs as usize)
            .build_global()
            .map_err(|e| Failure::internal(e.into()))?;
    }
    match cli.command {
        Command::Poly { k, n } => commands::poly(k, n, out),
        Command::Threshold { sel, method, format } => {
            let (lo, hi) = sel.bounds();
            commands::threshold(lo, hi, method, format, out)
        }
        Command::Gaps { k_range } => commands::gaps(k_range[0], k_range[1], out),
        Command::Verify { suite, k_max } => commands::verify(suite, k_max, out),
        Command::HardyDemo { k, n, beta, epsilon, width, smoothness, points } => {
            commands::hardy_demo(commands::DemoArgs { k, n, beta, epsilon, width, smoothness, points }, out)
        }
        Command::Instability { k, n, budget } => commands::instability(k, n, budget, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let _ = out.flush();
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}
