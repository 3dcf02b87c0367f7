use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use abelian_core::bench::{
    cartesian_grid, corpus_prefix_grid, full_grid, parse_algorithms, ratio_tables, read_input,
    run_bench, run_corpus, small_grid, write_aggregate, Algorithm, BenchConfig, ByteFilter,
    CellSummary, CorpusSource, CsvSink, GRID_PERIODS, GRID_SIGMAS,
};
use abelian_core::report::periods_report;
use abelian_core::wordgen::split_seed;
use abelian_core::{generate, Alphabet, Error, GenSpec};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "fap", version, about = "Full Abelian periods of words")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print n, sigma, g, s, T and the full Abelian periods of a file.
    Periods {
        input: PathBuf,
        /// qlfap, lfap, oracle, all, or a comma-separated list.
        #[arg(long, default_value = "qlfap")]
        algo: String,
        /// Also print the L array and the irreducible scaled factorization.
        #[arg(long)]
        dump_profile: bool,
        /// Keep only A, C, G, T bytes.
        #[arg(long)]
        filter_acgt: bool,
    },
    /// Write a random word with a planted full Abelian period.
    Gen {
        #[arg(long)]
        sigma: usize,
        #[arg(long)]
        length: usize,
        #[arg(long)]
        period: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write this many words as length-prefixed records (u64 LE length,
        /// then the bytes) instead of one raw word.
        #[arg(long)]
        records: Option<usize>,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time the algorithms over a grid of random words.
    Bench {
        /// Preset grid, used for any dimension not given explicitly.
        #[arg(long, value_enum, default_value_t = Preset::Small)]
        grid: Preset,
        #[arg(long, value_delimiter = ',')]
        sigma: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        length: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        period: Vec<usize>,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// Timing repetitions per word; the median is recorded.
        #[arg(long, default_value_t = 3)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "qlfap,lfap")]
        algo: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// CSV output; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Plot-ready per-cell aggregate (cell,mean_ns_qlfap,mean_ns_lfap,ratio).
        #[arg(long)]
        ratios: Option<PathBuf>,
    },
    /// Time the algorithms on prefixes of a corpus file.
    Corpus {
        input: PathBuf,
        /// Prefix lengths; defaults to 1000..10000 step 1000 then 20000..100000 step 10000.
        #[arg(long, value_delimiter = ',')]
        prefix: Vec<usize>,
        #[arg(long)]
        filter_acgt: bool,
        #[arg(long, default_value = "qlfap,lfap")]
        algo: String,
        #[arg(long, default_value_t = 3)]
        reps: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        ratios: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Preset {
    /// Lengths 1000..10000.
    Small,
    /// Lengths 1000..1600000.
    Full,
}

fn filter(acgt: bool) -> ByteFilter {
    if acgt {
        ByteFilter::Acgt
    } else {
        ByteFilter::All
    }
}

fn create(path: &Path) -> Result<BufWriter<File>, Error> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|source| Error::Io {
            path: path.to_owned(),
            source,
        })
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>, Error> {
    Ok(match path {
        Some(p) => Box::new(create(p)?),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn finish_tables(
    sink: CsvSink<Box<dyn Write>>,
    summaries: &[CellSummary],
    csv_to_stdout: bool,
    ratios: Option<&Path>,
) -> Result<(), Error> {
    let tables = ratio_tables(summaries);
    let mut sink = sink;
    if !tables.is_empty() {
        sink.write_comment(&tables)?;
    }
    sink.finish()?.flush().map_err(|source| Error::Io {
        path: "<csv output>".into(),
        source,
    })?;
    if let Some(path) = ratios {
        write_aggregate(create(path)?, summaries)?;
    }
    if !csv_to_stdout {
        print!("{tables}");
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Periods {
            input,
            algo,
            dump_profile,
            filter_acgt,
        } => {
            let algorithms = parse_algorithms(&algo)?;
            let bytes = read_input(&input, filter(filter_acgt))?;
            if bytes.is_empty() {
                return Err(Error::Precondition(format!(
                    "{}: no input left after filtering",
                    input.display()
                )));
            }
            print!("{}", periods_report(&bytes, &algorithms, dump_profile)?);
        }
        Command::Gen {
            sigma,
            length,
            period,
            seed,
            records,
            out,
        } => {
            let alphabet = Alphabet::standard(sigma)?;
            let mut w = output(out.as_deref())?;
            let io_err = |source| Error::Io {
                path: out.clone().unwrap_or_else(|| "<stdout>".into()),
                source,
            };
            match records {
                None => {
                    let word = generate(&GenSpec::new(length, sigma, period, seed)?)?;
                    w.write_all(&word.to_bytes(&alphabet)?).map_err(io_err)?;
                }
                Some(count) => {
                    for i in 0..count {
                        let spec = GenSpec::new(length, sigma, period, split_seed(seed, i as u64))?;
                        let bytes = generate(&spec)?.to_bytes(&alphabet)?;
                        w.write_all(&(bytes.len() as u64).to_le_bytes()).map_err(io_err)?;
                        w.write_all(&bytes).map_err(io_err)?;
                    }
                }
            }
            w.flush().map_err(io_err)?;
        }
        Command::Bench {
            grid,
            sigma,
            length,
            period,
            trials,
            reps,
            seed,
            algo,
            jobs,
            out,
            ratios,
        } => {
            let cells = if sigma.is_empty() && length.is_empty() && period.is_empty() {
                match grid {
                    Preset::Small => small_grid(),
                    Preset::Full => full_grid(),
                }
            } else {
                let preset_lengths: Vec<usize> = match grid {
                    Preset::Small => small_grid(),
                    Preset::Full => full_grid(),
                }
                .iter()
                .map(|c| c.n)
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .collect();
                let or = |v: Vec<usize>, d: &[usize]| if v.is_empty() { d.to_vec() } else { v };
                cartesian_grid(
                    &or(sigma, &GRID_SIGMAS),
                    &or(length, &preset_lengths),
                    &or(period, &GRID_PERIODS),
                )
            };
            let config = BenchConfig {
                grid: cells,
                trials,
                base_seed: seed,
                algorithms: parse_algorithms(&algo)?,
                repetitions: reps,
                jobs,
            };
            let mut sink = CsvSink::new(output(out.as_deref())?)?;
            let summaries = run_bench(&config, |r| sink.write(r))?;
            finish_tables(sink, &summaries, out.is_none(), ratios.as_deref())?;
        }
        Command::Corpus {
            input,
            prefix,
            filter_acgt,
            algo,
            reps,
            out,
            ratios,
        } => {
            let source = CorpusSource {
                path: input,
                filter: filter(filter_acgt),
                prefix_lengths: if prefix.is_empty() {
                    corpus_prefix_grid()
                } else {
                    prefix
                },
            };
            let algorithms: Vec<Algorithm> = parse_algorithms(&algo)?;
            let bytes = source.load()?;
            let mut sink = CsvSink::new(output(out.as_deref())?)?;
            let summaries = run_corpus(&bytes, &source.prefix_lengths, &algorithms, reps, |r| {
                sink.write(r)
            })?;
            finish_tables(sink, &summaries, out.is_none(), ratios.as_deref())?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("fap: {e}");
            match e {
                Error::ChecksumDivergence { .. } => ExitCode::from(3),
                _ => ExitCode::FAILURE,
            }
        }
    }
}
