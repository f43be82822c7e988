//! `abelsq`: count, tabulate, plot-data, sample and benchmark abelian squares.
//!
//! Exit status: 0 on success, 2 on a usage error, 3 when an enumeration
//! oracle is asked for more objects than `--budget` allows, 1 on I/O failure.

mod args;
mod output;

use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use abelsq::bench::{run_grid_with, BenchAlgorithm, BenchOptions};
use abelsq::float_eval::{default_curve_alphabets, DEFAULT_CURVE_N_MAX};
use abelsq::{count_fast_row, count_with_budget, curve, Algorithm, Budget, Error, Params, Sampler};
use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use args::{
    parse_alphabet, parse_alphabet_list, parse_length, parse_length_list, AlphabetList, LengthList,
};
use output::{
    sample_record, write_bench_plain, write_csv, write_json, BenchRecord, Format, OutputRecord,
};

const EXIT_IO: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INFEASIBLE: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "abelsq", version, about = "Count and sample abelian squares")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,

    /// Maximum number of words or signatures an enumeration oracle may visit.
    #[arg(long, default_value_t = Budget::default().0, global = true)]
    budget: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgorithmArg {
    Auto,
    Fast,
    Richmond,
    Signature,
    Anagram,
    Brute,
}

impl From<AlgorithmArg> for Algorithm {
    fn from(a: AlgorithmArg) -> Self {
        match a {
            AlgorithmArg::Auto => Algorithm::Auto,
            AlgorithmArg::Fast => Algorithm::Fast,
            AlgorithmArg::Richmond => Algorithm::Richmond,
            AlgorithmArg::Signature => Algorithm::Signature,
            AlgorithmArg::Anagram => Algorithm::Anagram,
            AlgorithmArg::Brute => Algorithm::Brute,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Preset {
    /// d = 2^0..2^9, n = 0..=99, log-fast: 1000 points.
    Curve,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Number of abelian squares of length n+n over d symbols.
    Count {
        #[arg(long, value_parser = parse_alphabet)]
        d: u128,
        #[arg(long, value_parser = parse_length)]
        n: usize,
        #[arg(long, value_enum, default_value_t = AlgorithmArg::Fast)]
        algorithm: AlgorithmArg,
    },
    /// Exact counts for d = 1..=d_max and n = 0..=n_max.
    Table {
        #[arg(long, default_value_t = 6, value_parser = parse_alphabet)]
        d_max: u128,
        #[arg(long, default_value_t = 7, value_parser = parse_length)]
        n_max: usize,
    },
    /// ln f_d(n) for each d in a list and n = 0..=n_max.
    Curve {
        /// Alphabet sizes; defaults to 2^0..2^9.
        #[arg(long, value_parser = parse_alphabet_list)]
        d_list: Option<AlphabetList>,
        #[arg(long, default_value_t = DEFAULT_CURVE_N_MAX, value_parser = parse_length)]
        n_max: usize,
    },
    /// Uniformly random abelian squares, reproducible from the seed.
    Sample {
        #[arg(long, value_parser = parse_alphabet)]
        d: u128,
        #[arg(long, value_parser = parse_length)]
        n: usize,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Operation counts and wall times over a grid of (d, n).
    Bench {
        /// Alphabet sizes: a comma list and/or ranges, e.g. `2,4,8` or `1..=16`.
        #[arg(long, value_parser = parse_alphabet_list)]
        d_values: Option<AlphabetList>,
        /// Half-lengths: a comma list and/or ranges, e.g. `0..=20`.
        #[arg(long, value_parser = parse_length_list)]
        n_values: Option<LengthList>,
        /// Comma-separated: fast, richmond, signature, anagram, brute, log-fast.
        #[arg(long, value_delimiter = ',', default_value = "fast")]
        algorithms: Vec<BenchAlgorithm>,
        /// Timed runs per grid point; the fastest is reported.
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
        repetitions: u32,
        /// Evaluate grid points in parallel; wall times are then not comparable.
        #[arg(long)]
        parallel: bool,
        /// Use a predefined grid instead of --d-values/--n-values.
        #[arg(long, value_enum, conflicts_with_all = ["d_values", "n_values"])]
        preset: Option<Preset>,
    },
}

enum Failure {
    Usage(String),
    Infeasible(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Infeasible { .. } => Failure::Infeasible(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<Box<dyn std::error::Error + Send + Sync>> for Failure {
    fn from(e: Box<dyn std::error::Error + Send + Sync>) -> Self {
        Failure::Io(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(&cli, &mut out).and_then(|()| out.flush().map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("run `abelsq --help` for usage");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Infeasible(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("use --algorithm fast, or raise --budget");
            ExitCode::from(EXIT_INFEASIBLE)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_IO)
        }
    }
}

fn run(cli: &Cli, out: &mut impl Write) -> Result<(), Failure> {
    let budget = Budget(cli.budget);
    match &cli.command {
        &Command::Count { d, n, algorithm } => {
            let algorithm = Algorithm::from(algorithm);
            let start = Instant::now();
            let value = count_with_budget(Params::new(d, n), algorithm, budget)?;
            let elapsed = start.elapsed().as_secs_f64();
            let record = OutputRecord {
                d,
                n,
                algorithm: algorithm.resolve().to_string(),
                value: Some(value.to_string()),
                log_value: None,
                elapsed_seconds: Some(elapsed),
            };
            match cli.format {
                Format::Plain => writeln!(out, "{value}")?,
                Format::Csv => write_csv(out, &[record])?,
                Format::Json => write_json(out, &[record])?,
            }
        }
        &Command::Table { d_max, n_max } => {
            if d_max == 0 {
                return Err(Failure::Usage("--d-max must be at least 1".into()));
            }
            let rows: Vec<_> = (1..=d_max).map(|d| (d, count_fast_row(d, n_max))).collect();
            if cli.format == Format::Plain {
                for (_, row) in &rows {
                    let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                    writeln!(out, "{}", cells.join(" "))?;
                }
                return Ok(());
            }
            let records: Vec<OutputRecord> = rows
                .iter()
                .flat_map(|(d, row)| {
                    row.iter().enumerate().map(move |(n, v)| OutputRecord {
                        d: *d,
                        n,
                        algorithm: Algorithm::Fast.to_string(),
                        value: Some(v.to_string()),
                        log_value: None,
                        elapsed_seconds: None,
                    })
                })
                .collect();
            write_records(cli.format, out, &records)?;
        }
        Command::Curve { d_list, n_max } => {
            let d_list = d_list.clone().map_or_else(default_curve_alphabets, |l| l.0);
            let grid = curve(&d_list, *n_max);
            let records: Vec<OutputRecord> = d_list
                .iter()
                .zip(&grid)
                .flat_map(|(&d, row)| {
                    row.iter().enumerate().map(move |(n, v)| OutputRecord {
                        d,
                        n,
                        algorithm: BenchAlgorithm::LogFast.to_string(),
                        value: None,
                        log_value: Some(v.log_value),
                        elapsed_seconds: None,
                    })
                })
                .collect();
            if cli.format == Format::Plain {
                for r in &records {
                    writeln!(out, "{} {} {}", r.d, r.n, r.log_value.unwrap_or(f64::NAN))?;
                }
            } else {
                write_records(cli.format, out, &records)?;
            }
        }
        &Command::Sample { d, n, count, seed } => {
            if d == 0 && n > 0 {
                return Err(Failure::Usage(format!(
                    "no abelian squares of length {n} over an empty alphabet"
                )));
            }
            let sampler = Sampler::new(Params::new(d, n));
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let records: Vec<_> = (0..count as usize)
                .map(|i| sample_record(d, i, &sampler.sample(&mut rng).0))
                .collect();
            match cli.format {
                Format::Plain => {
                    for r in &records {
                        writeln!(out, "{} {}", r.x, r.y)?;
                    }
                }
                Format::Csv => write_csv(out, &records)?,
                Format::Json => write_json(out, &records)?,
            }
        }
        Command::Bench {
            d_values,
            n_values,
            algorithms,
            repetitions,
            parallel,
            preset,
        } => {
            let (d_values, n_values, algorithms) = match preset {
                Some(Preset::Curve) => (
                    default_curve_alphabets(),
                    (0..=DEFAULT_CURVE_N_MAX).collect(),
                    vec![BenchAlgorithm::LogFast],
                ),
                None => match (d_values, n_values) {
                    (Some(d), Some(n)) => (d.0.clone(), n.0.clone(), algorithms.clone()),
                    _ => {
                        return Err(Failure::Usage(
                            "bench needs --d-values and --n-values, or --preset".into(),
                        ))
                    }
                },
            };
            let options = BenchOptions {
                budget,
                parallel: *parallel,
            };
            let report = run_grid_with(&d_values, &n_values, &algorithms, *repetitions, options)?;
            match cli.format {
                Format::Plain => write_bench_plain(out, &report)?,
                Format::Csv => {
                    let rows: Vec<BenchRecord> =
                        report.entries.iter().map(BenchRecord::from).collect();
                    write_csv(out, &rows)?
                }
                Format::Json => write_json(out, &report)?,
            }
        }
    }
    Ok(())
}

fn write_records(
    format: Format,
    out: &mut impl Write,
    records: &[OutputRecord],
) -> Result<(), Failure> {
    match format {
        Format::Csv => write_csv(out, records)?,
        Format::Json => write_json(out, records)?,
        Format::Plain => unreachable!("plain output is written by each command"),
    }
    Ok(())
}
