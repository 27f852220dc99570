use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ratinterp::bench::{run_bench, write_csv, BenchConfig, FixedParams, Param};
use ratinterp::interpolate::{interpolate, Algo, RunParams};
use ratinterp::{selftest, spec_file, CliError, Result};

#[derive(Debug, Parser)]
#[command(name = "ratinterp", version, about = "Sparse rational function interpolation from few black-box queries")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Recover the function in a spec file through a counting black box.
    Interpolate {
        #[arg(long, value_enum)]
        algo: Algo,
        #[arg(long)]
        input: PathBuf,
        /// Term bound
        #[arg(long = "T")]
        terms: Option<u64>,
        /// Degree bound
        #[arg(long = "D")]
        degree: Option<u64>,
        /// Degree bound in the last variable
        #[arg(long = "Dn")]
        last_degree: Option<u64>,
        /// Coefficient bound
        #[arg(long = "C")]
        coef: Option<u64>,
        /// Shifts are drawn from 1..=N
        #[arg(long = "N")]
        shift_range: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        max_iter: Option<u64>,
        /// Check the answer at ten extra random points.
        #[arg(long)]
        validate_extra: bool,
    },
    /// Time an interpolator over random instances and write CSV.
    Bench {
        #[arg(long, value_enum)]
        algo: Algo,
        #[arg(long, value_enum)]
        vary: Param,
        #[arg(long, value_delimiter = ',', required = true)]
        values: Vec<u64>,
        /// Held parameters as T=..,D=..,C=..,n=..
        #[arg(long, default_value = "")]
        fixed: String,
        #[arg(long, default_value_t = 5)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        max_iter: Option<u64>,
        /// Write to this file instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the acceptance suites.
    Selftest {
        /// Skip the statistical and timing suites.
        #[arg(long)]
        quick: bool,
    },
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Interpolate {
            algo,
            input,
            terms,
            degree,
            last_degree,
            coef,
            shift_range,
            seed,
            max_iter,
            validate_extra,
        } => {
            let h = spec_file::load(&input)?;
            let params = RunParams {
                terms,
                degree,
                last_degree,
                coef,
                shift_range,
                max_iter,
                seed,
                validate_extra,
            };
            let out = interpolate(algo, h, &params)?;
            println!("{}", out.recovered.function);
            println!("{}", out.stats_line());
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench {
            algo,
            vary,
            values,
            fixed,
            trials,
            seed,
            max_iter,
            output,
        } => {
            let cfg = BenchConfig {
                algo,
                vary,
                values,
                fixed: fixed.parse::<FixedParams>()?,
                trials,
                seed,
                max_iter,
            };
            let rows = run_bench(&cfg)?;
            match output {
                Some(path) => write_csv(&rows, BufWriter::new(File::create(path)?))?,
                None => write_csv(&rows, io::stdout().lock())?,
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Selftest { quick } => {
            let mut reports = Vec::new();
            for id in selftest::CRITERIA {
                let r = selftest::run_criterion(id, quick);
                println!("{r}");
                io::stdout().flush()?;
                reports.push(r);
            }
            Ok(if selftest::all_passed(&reports) {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_byte(&e))
        }
    }
}

fn exit_byte(e: &CliError) -> u8 {
    e.exit_code() as u8
}
