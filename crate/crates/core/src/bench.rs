//! Benchmark harness: timing records, CSV I/O, the experiment grid and
//! corpus prefix runs.
//!
//! Every trial runs all selected algorithms on the same word; each timing
//! is the median of `repetitions` runs on a monotonic clock and covers the
//! algorithm's own Parikh preprocessing but not word generation or I/O.
//! Result checksums must agree across algorithms or the run aborts.
//!
//! Per-cell aggregates are the mean of per-trial medians. Memory use of the
//! two algorithms is not measured: QLFAP keeps the `L` array (one byte per
//! position), the Parikh vector and the divisor list; LFAP as implemented
//! here keeps `(n + 1) * sigma` 32-bit prefix counts and the `A` array.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lfap::full_abelian_periods_lfap;
use crate::oracle::full_abelian_periods_bruteforce;
use crate::qlfap::{full_abelian_periods_qlfap, mix64, PeriodSet};
use crate::word::Word;
use crate::wordgen::{generate, split_seed, GenSpec, GENERATOR_ID};

/// Clock identifier recorded in CSV metadata.
pub const CLOCK_ID: &str = "std-instant-monotonic";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Qlfap,
    Lfap,
    Oracle,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Qlfap, Algorithm::Lfap, Algorithm::Oracle];

    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Qlfap => "qlfap",
            Algorithm::Lfap => "lfap",
            Algorithm::Oracle => "oracle",
        }
    }

    pub fn run(self, w: &Word) -> Result<PeriodSet> {
        match self {
            Algorithm::Qlfap => full_abelian_periods_qlfap(w),
            Algorithm::Lfap => full_abelian_periods_lfap(w),
            Algorithm::Oracle => full_abelian_periods_bruteforce(w),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "qlfap" => Ok(Algorithm::Qlfap),
            "lfap" => Ok(Algorithm::Lfap),
            "oracle" => Ok(Algorithm::Oracle),
            other => Err(Error::Precondition(format!("unknown algorithm {other:?}"))),
        }
    }
}

/// Parses `qlfap`, `lfap`, `oracle`, `all` or a comma-separated list.
pub fn parse_algorithms(s: &str) -> Result<Vec<Algorithm>> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim) {
        if part == "all" {
            out.extend(Algorithm::ALL);
        } else {
            out.push(part.parse()?);
        }
    }
    out.sort_unstable();
    out.dedup();
    if out.is_empty() {
        return Err(Error::Precondition("no algorithm selected".into()));
    }
    Ok(out)
}

/// Planted period of a benchmark word, or `corpus` for prefixes of a file.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PlantedPeriod {
    Period(usize),
    Corpus,
}

impl fmt::Display for PlantedPeriod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlantedPeriod::Period(p) => write!(f, "{p}"),
            PlantedPeriod::Corpus => f.write_str("corpus"),
        }
    }
}

impl FromStr for PlantedPeriod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "corpus" {
            return Ok(PlantedPeriod::Corpus);
        }
        s.parse()
            .map(PlantedPeriod::Period)
            .map_err(|_| Error::Precondition(format!("bad planted period {s:?}")))
    }
}

impl Serialize for PlantedPeriod {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PlantedPeriod {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// One timing measurement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub algorithm: Algorithm,
    pub sigma: usize,
    pub n: usize,
    pub planted_period: PlantedPeriod,
    pub trial: usize,
    pub elapsed_ns: u64,
    pub result_checksum: u64,
}

pub const CSV_HEADER: &str =
    "algorithm,sigma,n,planted_period,trial,elapsed_ns,result_checksum";

/// `# generator=<id> clock=<id> host=<opaque>`
pub fn metadata_line() -> String {
    let host = std::fs::read_to_string("/etc/hostname")
        .ok()
        .or_else(|| std::env::var("HOSTNAME").ok())
        .unwrap_or_default();
    let digest = host
        .trim()
        .bytes()
        .fold(0u64, |acc, b| mix64(acc ^ b as u64));
    format!("# generator={GENERATOR_ID} clock={CLOCK_ID} host={digest:016x}")
}

/// Streams records as CSV: metadata comment, header, then rows. Summary
/// tables are appended as `#` comment lines so the stream stays parseable.
pub struct CsvSink<W: Write> {
    inner: Option<csv::Writer<W>>,
}

fn row_writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new().has_headers(false).from_writer(out)
}

impl<W: Write> CsvSink<W> {
    pub fn new(mut out: W) -> Result<Self> {
        writeln!(out, "{}", metadata_line()).map_err(io_err("<csv output>"))?;
        writeln!(out, "{CSV_HEADER}").map_err(io_err("<csv output>"))?;
        Ok(Self {
            inner: Some(row_writer(out)),
        })
    }

    fn writer(&mut self) -> &mut csv::Writer<W> {
        self.inner.as_mut().expect("writer present between calls")
    }

    pub fn write(&mut self, record: &BenchRecord) -> Result<()> {
        self.writer().serialize(record)?;
        Ok(())
    }

    pub fn write_comment(&mut self, text: &str) -> Result<()> {
        let mut out = self.take_inner()?;
        for line in text.lines() {
            writeln!(out, "# {line}").map_err(io_err("<csv output>"))?;
        }
        self.inner = Some(row_writer(out));
        Ok(())
    }

    fn take_inner(&mut self) -> Result<W> {
        self.inner
            .take()
            .expect("writer present between calls")
            .into_inner()
            .map_err(|e| Error::Io {
                path: "<csv output>".into(),
                source: e.into_error(),
            })
    }

    pub fn finish(mut self) -> Result<W> {
        self.take_inner()
    }
}

/// Parses a record stream written by [`CsvSink`], skipping comment lines.
pub fn read_records<R: Read>(input: R) -> Result<Vec<BenchRecord>> {
    csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(input)
        .deserialize()
        .map(|r| r.map_err(Error::from))
        .collect()
}

fn io_err(path: impl Into<PathBuf>) -> impl FnOnce(std::io::Error) -> Error {
    let path = path.into();
    move |source| Error::Io { path, source }
}

/// One (sigma, n, planted period) cell of the experiment grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridCell {
    pub sigma: usize,
    pub n: usize,
    pub period: usize,
}

impl fmt::Display for GridCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sigma={}/n={}/p={}", self.sigma, self.n, self.period)
    }
}

pub const GRID_SIGMAS: [usize; 4] = [2, 5, 10, 20];
pub const GRID_PERIODS: [usize; 2] = [5, 20];

/// Word lengths of the full experiment: 1000..=10000 step 1000,
/// 20000..=100000 step 10000, then doubling from 200000 to 1600000.
pub fn grid_lengths() -> Vec<usize> {
    let mut lengths: Vec<usize> = (1..=10).map(|k| k * 1000).collect();
    lengths.extend((2..=10).map(|k| k * 10_000));
    lengths.extend([200_000, 400_000, 800_000, 1_600_000]);
    lengths
}

pub fn full_grid() -> Vec<GridCell> {
    cartesian_grid(&GRID_SIGMAS, &grid_lengths(), &GRID_PERIODS)
}

/// Small-length block of the grid: lengths 1000..=10000.
pub fn small_grid() -> Vec<GridCell> {
    let lengths: Vec<usize> = (1..=10).map(|k| k * 1000).collect();
    cartesian_grid(&GRID_SIGMAS, &lengths, &GRID_PERIODS)
}

pub fn cartesian_grid(sigmas: &[usize], lengths: &[usize], periods: &[usize]) -> Vec<GridCell> {
    let mut cells = Vec::new();
    for &period in periods {
        for &sigma in sigmas {
            for &n in lengths {
                cells.push(GridCell { sigma, n, period });
            }
        }
    }
    cells
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub grid: Vec<GridCell>,
    pub trials: usize,
    pub base_seed: u64,
    pub algorithms: Vec<Algorithm>,
    pub repetitions: usize,
    /// Worker threads; each measurement runs on a single thread.
    pub jobs: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            grid: small_grid(),
            trials: 1000,
            base_seed: 0,
            algorithms: vec![Algorithm::Qlfap, Algorithm::Lfap],
            repetitions: 3,
            jobs: 1,
        }
    }
}

/// Seed of a trial word, derived from the base seed and its cell.
pub fn trial_seed(base: u64, cell: &GridCell, trial: usize) -> u64 {
    let cell_seed = split_seed(
        split_seed(split_seed(base, cell.sigma as u64), cell.n as u64),
        cell.period as u64,
    );
    split_seed(cell_seed, trial as u64)
}

/// Per-cell means of per-trial median times.
#[derive(Clone, Debug, PartialEq)]
pub struct CellSummary {
    pub sigma: usize,
    pub n: usize,
    pub planted_period: PlantedPeriod,
    pub trials: usize,
    pub mean_ns: BTreeMap<Algorithm, f64>,
}

impl CellSummary {
    /// lfap / qlfap mean time ratio, when both were timed.
    pub fn ratio(&self) -> Option<f64> {
        let q = self.mean_ns.get(&Algorithm::Qlfap)?;
        let l = self.mean_ns.get(&Algorithm::Lfap)?;
        Some(l / q)
    }

    pub fn label(&self) -> String {
        format!("sigma={}/n={}/p={}", self.sigma, self.n, self.planted_period)
    }

    fn from_records(records: &[BenchRecord]) -> Option<Self> {
        let first = records.first()?;
        let mut sums: BTreeMap<Algorithm, (f64, usize)> = BTreeMap::new();
        for r in records {
            let e = sums.entry(r.algorithm).or_default();
            e.0 += r.elapsed_ns as f64;
            e.1 += 1;
        }
        let trials = sums.values().map(|&(_, c)| c).max().unwrap_or(0);
        Some(Self {
            sigma: first.sigma,
            n: first.n,
            planted_period: first.planted_period,
            trials,
            mean_ns: sums.into_iter().map(|(a, (s, c))| (a, s / c as f64)).collect(),
        })
    }
}

/// Median wall time of `reps` runs of `algorithm` on `w`, in nanoseconds
/// (at least 1), together with the result.
pub fn time_algorithm(algorithm: Algorithm, w: &Word, reps: usize) -> Result<(u64, PeriodSet)> {
    let reps = reps.max(1);
    let mut times = Vec::with_capacity(reps);
    let mut result = None;
    for _ in 0..reps {
        let start = Instant::now();
        let periods = std::hint::black_box(algorithm.run(std::hint::black_box(w))?);
        times.push(start.elapsed().as_nanos() as u64);
        result = Some(periods);
    }
    times.sort_unstable();
    let median = if reps % 2 == 1 {
        times[reps / 2]
    } else {
        (times[reps / 2 - 1] + times[reps / 2]) / 2
    };
    Ok((median.max(1), result.expect("reps >= 1")))
}

struct TrialInput<'a> {
    word: &'a Word,
    sigma: usize,
    planted_period: PlantedPeriod,
    trial: usize,
    seed: u64,
}

fn run_trial(input: TrialInput<'_>, algorithms: &[Algorithm], reps: usize) -> Result<Vec<BenchRecord>> {
    let mut records = Vec::with_capacity(algorithms.len());
    let mut results: Vec<(Algorithm, PeriodSet)> = Vec::with_capacity(algorithms.len());
    for &algorithm in algorithms {
        let (elapsed_ns, periods) = time_algorithm(algorithm, input.word, reps)?;
        records.push(BenchRecord {
            algorithm,
            sigma: input.sigma,
            n: input.word.len(),
            planted_period: input.planted_period,
            trial: input.trial,
            elapsed_ns,
            result_checksum: periods.checksum(),
        });
        results.push((algorithm, periods));
    }
    ensure_agreement(&results, &input)?;
    Ok(records)
}

fn ensure_agreement(results: &[(Algorithm, PeriodSet)], input: &TrialInput<'_>) -> Result<()> {
    let Some((_, reference)) = results.first() else {
        return Ok(());
    };
    if results.iter().all(|(_, p)| p.checksum() == reference.checksum()) {
        return Ok(());
    }
    let detail = results
        .iter()
        .map(|(a, p)| format!("{a}={{{p}}}"))
        .collect::<Vec<_>>()
        .join(" ");
    Err(Error::ChecksumDivergence {
        sigma: input.sigma,
        n: input.word.len(),
        trial: input.trial,
        seed: input.seed,
        detail,
    })
}

fn thread_pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Precondition(format!("cannot start worker threads: {e}")))
}

/// Runs the grid, handing every record to `sink` in cell/trial/algorithm
/// order. Returns one summary per cell.
pub fn run_bench(
    config: &BenchConfig,
    mut sink: impl FnMut(&BenchRecord) -> Result<()>,
) -> Result<Vec<CellSummary>> {
    if config.algorithms.is_empty() {
        return Err(Error::Precondition("no algorithm selected".into()));
    }
    let pool = thread_pool(config.jobs)?;
    let mut summaries = Vec::with_capacity(config.grid.len());
    for cell in &config.grid {
        GenSpec::new(cell.n, cell.sigma, cell.period, 0)?;
        let per_trial: Vec<Vec<BenchRecord>> = pool.install(|| {
            (0..config.trials)
                .into_par_iter()
                .map(|trial| {
                    let seed = trial_seed(config.base_seed, cell, trial);
                    let word = generate(&GenSpec::new(cell.n, cell.sigma, cell.period, seed)?)?;
                    run_trial(
                        TrialInput {
                            word: &word,
                            sigma: cell.sigma,
                            planted_period: PlantedPeriod::Period(cell.period),
                            trial,
                            seed,
                        },
                        &config.algorithms,
                        config.repetitions,
                    )
                })
                .collect::<Result<_>>()
        })?;
        let records: Vec<BenchRecord> = per_trial.into_iter().flatten().collect();
        for r in &records {
            sink(r)?;
        }
        if let Some(summary) = CellSummary::from_records(&records) {
            summaries.push(summary);
        }
    }
    Ok(summaries)
}

/// Which bytes of a corpus file are kept.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ByteFilter {
    #[default]
    All,
    /// Only `A`, `C`, `G`, `T` (either case); drops line feeds, headers and
    /// anything else.
    Acgt,
}

impl ByteFilter {
    pub fn apply(self, bytes: Vec<u8>) -> Vec<u8> {
        match self {
            ByteFilter::All => bytes,
            ByteFilter::Acgt => bytes
                .into_iter()
                .filter(|b| matches!(b, b'A' | b'C' | b'G' | b'T' | b'a' | b'c' | b'g' | b't'))
                .collect(),
        }
    }
}

/// Reads a whole file and applies `filter`.
pub fn read_input(path: &Path, filter: ByteFilter) -> Result<Vec<u8>> {
    let bytes = std::fs::read(path).map_err(io_err(path))?;
    Ok(filter.apply(bytes))
}

/// Prefix lengths used for the genomic corpus: 1000..=10000 step 1000,
/// then 20000..=100000 step 10000.
pub fn corpus_prefix_grid() -> Vec<usize> {
    let mut lengths: Vec<usize> = (1..=10).map(|k| k * 1000).collect();
    lengths.extend((2..=10).map(|k| k * 10_000));
    lengths
}

#[derive(Clone, Debug)]
pub struct CorpusSource {
    pub path: PathBuf,
    pub filter: ByteFilter,
    pub prefix_lengths: Vec<usize>,
}

impl CorpusSource {
    /// Reads and filters the file, then checks the prefix grid against it.
    pub fn load(&self) -> Result<Vec<u8>> {
        let bytes = read_input(&self.path, self.filter)?;
        check_prefixes(&self.prefix_lengths, bytes.len())?;
        Ok(bytes)
    }
}

fn check_prefixes(prefixes: &[usize], available: usize) -> Result<()> {
    if prefixes.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Precondition("prefix lengths must be non-decreasing".into()));
    }
    if let Some(&zero) = prefixes.iter().find(|&&p| p == 0) {
        return Err(Error::InvalidPeriod { period: zero, n: available });
    }
    if let Some(&requested) = prefixes.iter().find(|&&p| p > available) {
        return Err(Error::PrefixTooLong { requested, available });
    }
    Ok(())
}

/// Runs `algorithms` on each prefix of `bytes`, the alphabet of every
/// prefix being inferred from the bytes it contains.
pub fn run_corpus(
    bytes: &[u8],
    prefix_lengths: &[usize],
    algorithms: &[Algorithm],
    repetitions: usize,
    mut sink: impl FnMut(&BenchRecord) -> Result<()>,
) -> Result<Vec<CellSummary>> {
    check_prefixes(prefix_lengths, bytes.len())?;
    if algorithms.is_empty() {
        return Err(Error::Precondition("no algorithm selected".into()));
    }
    let mut summaries = Vec::new();
    for (trial, &len) in prefix_lengths.iter().enumerate() {
        let (word, alphabet) = Word::from_bytes(&bytes[..len])?;
        let records = run_trial(
            TrialInput {
                word: &word,
                sigma: alphabet.size(),
                planted_period: PlantedPeriod::Corpus,
                trial,
                seed: 0,
            },
            algorithms,
            repetitions,
        )?;
        for r in &records {
            sink(r)?;
        }
        summaries.extend(CellSummary::from_records(&records));
    }
    Ok(summaries)
}

/// Plot-ready aggregate: `cell,mean_ns_qlfap,mean_ns_lfap,ratio`. Missing
/// values are left empty.
pub fn write_aggregate<W: Write>(out: W, summaries: &[CellSummary]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["cell", "mean_ns_qlfap", "mean_ns_lfap", "ratio"])?;
    let fmt_opt = |v: Option<f64>| v.map(|x| format!("{x:.3}")).unwrap_or_default();
    for s in summaries {
        w.write_record([
            s.label(),
            fmt_opt(s.mean_ns.get(&Algorithm::Qlfap).copied()),
            fmt_opt(s.mean_ns.get(&Algorithm::Lfap).copied()),
            fmt_opt(s.ratio()),
        ])?;
    }
    w.flush().map_err(io_err("<aggregate output>"))?;
    Ok(())
}

/// Ratio tables laid out with one table per planted period, alphabet sizes
/// as rows and word lengths as columns.
pub fn ratio_tables(summaries: &[CellSummary]) -> String {
    let mut by_period: BTreeMap<PlantedPeriod, BTreeMap<usize, BTreeMap<usize, Option<f64>>>> =
        BTreeMap::new();
    for s in summaries {
        by_period
            .entry(s.planted_period)
            .or_default()
            .entry(s.sigma)
            .or_default()
            .insert(s.n, s.ratio());
    }
    let mut out = String::new();
    for (period, rows) in &by_period {
        let mut lengths: Vec<usize> = rows.values().flat_map(|r| r.keys().copied()).collect();
        lengths.sort_unstable();
        lengths.dedup();
        let _ = writeln!(out, "lfap/qlfap ratio, planted period {period}");
        let _ = write!(out, "{:>6}", "sigma");
        for n in &lengths {
            let _ = write!(out, " {n:>9}");
        }
        out.push('\n');
        for (sigma, row) in rows {
            let _ = write!(out, "{sigma:>6}");
            for n in &lengths {
                match row.get(n).copied().flatten() {
                    Some(r) => {
                        let _ = write!(out, " {r:>9.2}");
                    }
                    None => {
                        let _ = write!(out, " {:>9}", "-");
                    }
                }
            }
            out.push('\n');
        }
    }
    out
}
