use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use l2disc::{PointSet, Summation};
use l2disc_cli::commands::{
    discrepancies, generate, parse_kinds, write_disc, DiscMethod, DiscOptions,
};
use l2disc_cli::params::Params;
use l2disc_cli::record::write_records;
use l2disc_cli::suites::{run_suite, SuiteOptions, DEFAULT_SAMPLES};
use l2disc_cli::tables::build_table;
use l2disc_cli::CliResult;

/// Standard, extreme and periodic L2 discrepancies of point sets.
#[derive(Debug, Parser)]
#[command(name = "l2disc", version)]
struct Cli {
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Cap on worker threads.
    #[arg(long, global = true, env = "L2DISC_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a point set: hammersley m=, lattice p= q=, fibonacci n=, grid m= d=, random n= d=.
    Gen {
        kind: String,
        params: Vec<String>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Evaluate squared discrepancies of a point-set file as CSV.
    Disc {
        input: PathBuf,
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "standard,extreme,periodic"
        )]
        kinds: Vec<String>,
        /// pair_sum, cell_exact, spectral, one_dim or shift_mc.
        #[arg(long, default_value = "pair_sum")]
        method: String,
        /// Frequency truncation for the spectral method.
        #[arg(long = "K", default_value_t = 64)]
        k_max: u64,
        /// Sample count for the shift_mc method.
        #[arg(long = "R", default_value_t = DEFAULT_SAMPLES)]
        samples: u64,
        #[arg(long)]
        seed: Option<u64>,
        /// Use plain instead of compensated summation.
        #[arg(long)]
        naive: bool,
    },
    /// Run a verification suite; exits nonzero if an unexpected failure occurs.
    Verify {
        suite: String,
        params: Vec<String>,
        #[arg(long)]
        tol_rel: Option<f64>,
        #[arg(long)]
        tol_abs: Option<f64>,
        /// Monte Carlo acceptance band in standard errors.
        #[arg(long, default_value_t = 4.0)]
        sigmas: f64,
        #[arg(long = "R")]
        samples: Option<u64>,
        #[arg(long = "K")]
        k_max: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Emit a table: hammersley, fibonacci_slope or grid_ratio.
    Table { name: String, params: Vec<String> },
}

fn output(path: Option<&Path>) -> CliResult<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            log::warn!("could not configure the thread pool: {e}");
        }
    }
    let out = cli.out.as_deref();
    match cli.command {
        Command::Gen { kind, params, seed } => {
            let set = generate(&kind, &Params::parse(&params)?, seed)?;
            let mut w = output(out)?;
            w.write_all(set.to_text().as_bytes())?;
            w.flush()?;
        }
        Command::Disc {
            input,
            kinds,
            method,
            k_max,
            samples,
            seed,
            naive,
        } => {
            let set = PointSet::from_text(&std::fs::read_to_string(&input)?)?;
            let method = DiscMethod::parse(&method)?;
            let opts = DiscOptions {
                method,
                summation: if naive {
                    Summation::Naive
                } else {
                    Summation::Compensated
                },
                k_max,
                samples,
                seed,
            };
            let rows = discrepancies(&set, &parse_kinds(&kinds)?, &opts)?;
            write_disc(output(out)?, method, &rows)?;
        }
        Command::Verify {
            suite,
            params,
            tol_rel,
            tol_abs,
            sigmas,
            samples,
            k_max,
            seed,
        } => {
            let opts = SuiteOptions {
                tol_rel,
                tol_abs,
                sigmas,
                samples,
                seed,
                k_max,
            };
            let records = run_suite(&suite, &Params::parse(&params)?, &opts)?;
            write_records(output(out)?, &records)?;
            let failures = records.iter().filter(|r| r.is_failure()).count();
            for r in records.iter().filter(|r| r.expected_fail && r.pass) {
                log::warn!("expected-fail record passed: {} {}", r.suite, r.params);
            }
            if failures > 0 {
                eprintln!("{failures} of {} records failed", records.len());
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Table { name, params } => {
            build_table(&name, &Params::parse(&params)?)?.write(output(out)?)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
