//! Command-line front end.
//!
//! Exit codes: 0 on success (including `--help` and `--version`), 1 for
//! usage errors, 2 when a computation fails. Data goes to stdout or to the
//! `--out` file; diagnostics go to stderr.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::analytics::{d_approx, page_value, t_approx};
use crate::entropy::entanglement_entropy;
use crate::experiments::output::{write_csv, write_csv_to, write_histogram, write_manifest, Manifest};
use crate::experiments::{
    approximation_overlay, default_samples, dominant_eigenvalue_study, find_mn, greedy_best_sample,
    haar_average, kalmost_curve, partition_histogram, qft_comparison, qft_comparison_random, scaling_study,
    spectrum_histogram, sweep, ExperimentConfig, GreedyScore, MGrid, MnSearch, PartitionMode, SeedTree, SweepRecord,
};
use crate::sequences::{io, k_almost_union, prime_state, random_sequence};
use crate::{encode_sequence, haar_state, reduced_spectrum, renyi, Bipartition, Error, PureState, Result, Sequence};

#[derive(Debug, Parser)]
#[command(name = "seqent", version, about = "Entanglement entropy of integer sequence states")]
struct Cli {
    /// Run seed; every random draw is derived from it.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Primary output file. A `.manifest.json` sidecar is written next to it.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads. Results do not depend on this.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,
    #[command(subcommand)]
    command: Command,
}

type Qubits = usize;

fn parse_qubits(s: &str) -> std::result::Result<Qubits, String> {
    let n: usize = s.parse().map_err(|_| format!("{s:?} is not a qubit count"))?;
    if n == 0 || n > crate::MAX_QUBITS {
        return Err(format!("qubit count must be in 1..={}", crate::MAX_QUBITS));
    }
    Ok(n)
}

fn parse_even_qubits(s: &str) -> std::result::Result<Qubits, String> {
    let n = parse_qubits(s)?;
    if n % 2 != 0 || n < 2 {
        return Err(format!("{n} is not an even qubit count"));
    }
    Ok(n)
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct SequenceSource {
    /// Comma-separated elements.
    #[arg(long, value_delimiter = ',')]
    seq: Option<Vec<usize>>,
    /// Sequence file, text or binary.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Uniformly random sequence of this length.
    #[arg(long)]
    random_m: Option<usize>,
    /// Primes below 2^n.
    #[arg(long)]
    primes: bool,
    /// Integers below 2^n with between 1 and K prime factors.
    #[arg(long, value_name = "K")]
    kalmost: Option<usize>,
}

impl SequenceSource {
    fn resolve(&self, n: usize, tree: &SeedTree) -> Result<Sequence> {
        if let Some(elements) = &self.seq {
            Sequence::from_unsorted(n, elements.clone())
        } else if let Some(path) = &self.file {
            let seq = io::load(path, Some(n))?;
            if seq.n() != n {
                return Err(Error::InvalidSequence(format!("{} holds a {}-qubit sequence", path.display(), seq.n())));
            }
            Ok(seq)
        } else if let Some(m) = self.random_m {
            random_sequence(n, m, &mut tree.rng(0))
        } else if self.primes {
            prime_state(n)
        } else if let Some(k) = self.kalmost {
            k_almost_union(n, k).map(|u| u.sequence)
        } else {
            unreachable!("clap requires one sequence source")
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Entropy of one sequence state across one cut.
    Entropy {
        #[arg(long, value_parser = parse_qubits)]
        n: Qubits,
        #[command(flatten)]
        source: SequenceSource,
        /// `natural`, or the comma-separated qubits of subsystem A.
        #[arg(long, default_value = "natural")]
        partition: String,
        /// Renyi order instead of von Neumann.
        #[arg(long)]
        renyi: Option<f64>,
    },
    /// Average entropy over a grid of sequence lengths.
    Sweep {
        #[arg(long, value_parser = parse_even_qubits)]
        n: Qubits,
        /// `log:LO:HI:COUNT`, `lin:LO:HI:COUNT`, or a comma list.
        #[arg(long)]
        m_grid: MGrid,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value = "natural")]
        mode: PartitionMode,
    },
    /// Locate the length of maximal average entropy.
    FindMn {
        #[arg(long, value_parser = parse_even_qubits)]
        n: Qubits,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        refine_samples: Option<usize>,
        #[arg(long)]
        final_samples: Option<usize>,
        /// Skip the sweep over [1, N] and start from the regression estimate.
        #[arg(long)]
        no_coarse: bool,
    },
    /// M_n search over several sizes with line fits.
    Scaling {
        #[arg(long, value_delimiter = ',', default_value = "10,12,14,16", value_parser = parse_even_qubits)]
        ns: Vec<Qubits>,
    },
    /// Spectrum of one random sequence state.
    Spectrum {
        #[arg(long, value_parser = parse_even_qubits)]
        n: Qubits,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 64)]
        bins: usize,
        /// Also average the dominant eigenvalue over this many states.
        #[arg(long)]
        study: Option<usize>,
    },
    /// Monte-Carlo average next to both closed forms.
    Overlay {
        #[arg(long, value_parser = parse_even_qubits)]
        n: Qubits,
        #[arg(long)]
        m_grid: MGrid,
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Entropies of one state over many distinct cuts.
    Partitions {
        #[arg(long, value_parser = parse_qubits)]
        n: Qubits,
        #[command(flatten)]
        source: PartitionSource,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        /// Qubits in subsystem A; balanced by default.
        #[arg(long)]
        size_a: Option<usize>,
        #[arg(long, default_value_t = 64)]
        bins: usize,
    },
    /// Best of a stream of random sequences over all balanced cuts.
    Greedy {
        #[arg(long, value_parser = parse_even_qubits)]
        n: Qubits,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 1000)]
        candidates: usize,
        #[arg(long, default_value = "mean")]
        score: GreedyScore,
    },
    /// Natural-cut entropy before and after the QFT.
    QftCompare {
        #[arg(long, value_parser = parse_even_qubits)]
        n: Qubits,
        #[command(flatten)]
        source: SequenceSource,
        /// With `--random-m`, number of independent draws.
        #[arg(long, default_value_t = 1)]
        draws: usize,
    },
    /// Entropy of nested k-almost prime unions.
    Kalmost {
        #[arg(long, value_parser = parse_even_qubits)]
        n: Qubits,
    },
    /// Average natural-cut entropy of Haar-random states.
    Haar {
        #[arg(long, value_parser = parse_even_qubits)]
        n: Qubits,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Dense-regime closed form, in bits.
    Tapprox {
        #[arg(long, value_parser = parse_even_qubits)]
        n: Qubits,
        #[arg(long)]
        m: u64,
    },
    /// Sparse-regime closed form, in bits.
    Dapprox {
        #[arg(long, value_parser = parse_even_qubits)]
        n: Qubits,
        #[arg(long)]
        m: u64,
    },
    /// Mean Haar entropy at a balanced cut, n/2 - log2(e)/2.
    Page {
        #[arg(long, value_parser = parse_even_qubits)]
        n: Qubits,
    },
}

#[derive(Debug, Args)]
struct PartitionSource {
    #[command(flatten)]
    sequence: Option<PartitionSequence>,
    /// Use one Haar-random state instead of a sequence.
    #[arg(long, conflicts_with_all = ["seq", "file", "random_m", "primes", "kalmost"])]
    haar: bool,
}

// Same flags as `SequenceSource`, but optional so that `--haar` can stand in.
#[derive(Debug, Args)]
#[group(required = false, multiple = false)]
struct PartitionSequence {
    #[arg(long, value_delimiter = ',')]
    seq: Option<Vec<usize>>,
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long)]
    random_m: Option<usize>,
    #[arg(long)]
    primes: bool,
    #[arg(long, value_name = "K")]
    kalmost: Option<usize>,
}

impl PartitionSequence {
    fn to_source(&self) -> SequenceSource {
        SequenceSource {
            seq: self.seq.clone(),
            file: self.file.clone(),
            random_m: self.random_m,
            primes: self.primes,
            kalmost: self.kalmost,
        }
    }

    fn is_set(&self) -> bool {
        self.seq.is_some() || self.file.is_some() || self.random_m.is_some() || self.primes || self.kalmost.is_some()
    }
}

/// Formats with six significant digits.
pub fn sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{:.5}", x);
    }
    let magnitude = x.abs().log10().floor() as i32;
    if !(-4..=9).contains(&magnitude) {
        return format!("{:.5e}", x);
    }
    let decimals = (5 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

/// Parses `argv` (program name first), runs one subcommand and returns the
/// process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

/// [`run`] with explicit output and diagnostic streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().ansi().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    1
                }
            };
        }
    };
    let result = match cli.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t as usize).build() {
            Ok(pool) => {
                // the stream handle cannot cross into the pool; buffer instead
                let (result, buf) = pool.install(|| {
                    let mut buf = Vec::new();
                    (execute(&cli, &mut buf), buf)
                });
                out.write_all(&buf).map_err(Error::from).and(result)
            }
            Err(e) => Err(Error::InvalidArgument(format!("cannot start {t} threads: {e}"))),
        },
        None => execute(&cli, out),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

struct Context<'a> {
    tree: SeedTree,
    seed: u64,
    out: Option<&'a Path>,
    started: Instant,
}

impl Context<'_> {
    /// Writes `rows` to `--out` with a manifest, or to stdout.
    fn table<T: Serialize>(&self, name: &str, rows: &[T], config: serde_json::Value, stdout: &mut dyn Write) -> Result<()> {
        match self.out {
            Some(path) => {
                write_csv(path, rows)?;
                self.manifest(name, path, config)
            }
            None => write_csv_to(stdout, rows),
        }
    }

    fn manifest(&self, name: &str, path: &Path, config: serde_json::Value) -> Result<()> {
        let mut m = Manifest::new(name, self.seed, config);
        m.wall_time_secs = self.started.elapsed().as_secs_f64();
        write_manifest(path, &m)?;
        Ok(())
    }
}

fn json<T: Serialize>(value: T) -> serde_json::Value {
    serde_json::to_value(value).unwrap_or(serde_json::Value::Null)
}

fn parse_partition(n: usize, spec: &str) -> Result<Bipartition> {
    if spec == "natural" {
        return Bipartition::natural(n);
    }
    let qubits = spec
        .split(',')
        .map(|q| q.trim().parse::<usize>().map_err(|_| Error::InvalidBipartition(format!("cannot parse {spec:?}"))))
        .collect::<Result<Vec<_>>>()?;
    Bipartition::new(n, &qubits)
}

#[derive(Serialize)]
struct EntropyRow {
    n: usize,
    m: usize,
    partition_mask: u32,
    order: f64,
    entropy: f64,
}

#[derive(Serialize)]
struct MnRow {
    n: usize,
    m_n: usize,
    m_star: f64,
    e_n: f64,
    e_n_std_err: f64,
    final_samples: usize,
}

#[derive(Serialize)]
struct WindowRow {
    stage: String,
    #[serde(flatten)]
    record: SweepRecord,
}

#[derive(Serialize)]
struct TraceRow {
    candidate: usize,
    score: f64,
    best: f64,
}

#[derive(Serialize)]
struct QftRow {
    index: usize,
    position: f64,
    momentum: f64,
}

fn execute(cli: &Cli, stdout: &mut dyn Write) -> Result<()> {
    let ctx = Context { tree: SeedTree::new(cli.seed), seed: cli.seed, out: cli.out.as_deref(), started: Instant::now() };
    match &cli.command {
        Command::Entropy { n, source, partition, renyi: order } => {
            let seq = source.resolve(*n, &ctx.tree)?;
            let part = parse_partition(*n, partition)?;
            let state = encode_sequence(&seq);
            let (order, entropy) = match order {
                Some(d) => (*d, renyi(&reduced_spectrum(&state, &part)?, *d)?),
                None => (1.0, entanglement_entropy(&state, &part)?),
            };
            writeln!(stdout, "{}", sig6(entropy))?;
            if let Some(path) = ctx.out {
                let row = EntropyRow { n: *n, m: seq.len(), partition_mask: part.mask(), order, entropy };
                write_csv(path, &[row])?;
                ctx.manifest("entropy", path, serde_json::json!({"n": n, "partition": partition, "order": order}))?;
            }
        }
        Command::Sweep { n, m_grid, samples, mode } => {
            let config = ExperimentConfig {
                n: *n,
                m_grid: m_grid.values().to_vec(),
                samples: samples.unwrap_or_else(|| default_samples(*n)),
                mode: *mode,
                seed: cli.seed,
                out: cli.out.clone(),
            };
            let records = sweep(&config)?;
            ctx.table("sweep", &records, json(&config), stdout)?;
        }
        Command::FindMn { n, samples, refine_samples, final_samples, no_coarse } => {
            let mut search = MnSearch::for_n(*n);
            if let Some(s) = samples {
                search.samples = *s;
            }
            if let Some(s) = refine_samples {
                search.refine_samples = *s;
            }
            if let Some(s) = final_samples {
                search.final_samples = *s;
            }
            if *no_coarse {
                search.coarse = false;
            }
            let r = find_mn(*n, &search, &ctx.tree)?;
            writeln!(stdout, "M_n = {}  (vertex {})", r.m_n, sig6(r.m_star))?;
            writeln!(stdout, "E_n = {} +- {}  ({} samples)", sig6(r.e_n), sig6(r.e_n_std_err), r.final_samples)?;
            if let Some(path) = ctx.out {
                let d = &r.diagnostics;
                let stages = [("coarse", &d.coarse), ("bracket", &d.bracket)];
                let mut rows: Vec<WindowRow> = stages
                    .into_iter()
                    .flat_map(|(stage, recs)| recs.iter().map(move |rec| WindowRow { stage: stage.into(), record: rec.clone() }))
                    .collect();
                for (i, w) in d.windows.iter().enumerate() {
                    rows.extend(w.iter().map(|rec| WindowRow { stage: format!("window{i}"), record: rec.clone() }));
                }
                write_csv(path, &rows)?;
                let summary = MnRow {
                    n: r.n,
                    m_n: r.m_n,
                    m_star: r.m_star,
                    e_n: r.e_n,
                    e_n_std_err: r.e_n_std_err,
                    final_samples: r.final_samples,
                };
                ctx.manifest("find-mn", path, serde_json::json!({"search": json(&search), "result": json(&summary)}))?;
            }
        }
        Command::Scaling { ns } => {
            let study = scaling_study(ns, &ctx.tree)?;
            let rows: Vec<MnRow> = study
                .results
                .iter()
                .map(|r| MnRow {
                    n: r.n,
                    m_n: r.m_n,
                    m_star: r.m_star,
                    e_n: r.e_n,
                    e_n_std_err: r.e_n_std_err,
                    final_samples: r.final_samples,
                })
                .collect();
            let fits = serde_json::json!({
                "e_n": {"slope": study.entropy_fit.slope, "intercept": study.entropy_fit.intercept},
                "log2_m_n": {"slope": study.log_m_fit.slope, "intercept": study.log_m_fit.intercept},
            });
            match ctx.out {
                Some(path) => {
                    write_csv(path, &rows)?;
                    ctx.manifest("scaling", path, serde_json::json!({"ns": ns, "fits": fits}))?;
                }
                None => write_csv_to(&mut *stdout, &rows)?,
            }
            let (e, m) = (&study.entropy_fit, &study.log_m_fit);
            writeln!(stdout, "E_n ~ {} n + {}", sig6(e.slope), sig6(e.intercept))?;
            writeln!(stdout, "log2 M_n ~ {} n + {}", sig6(m.slope), sig6(m.intercept))?;
        }
        Command::Spectrum { n, m, bins, study } => {
            let h = spectrum_histogram(*n, *m, *bins, &ctx.tree)?;
            writeln!(stdout, "lambda0 = {}  M/N = {}  max bulk = {}", sig6(h.lambda0), sig6(h.predicted_lambda0), sig6(h.max_bulk))?;
            writeln!(stdout, "bulk eigenvalues binned = {}  zero = {}", h.histogram.total(), h.zeros)?;
            let study = match study {
                Some(k) => {
                    let s = dominant_eigenvalue_study(*n, *m, *k, &ctx.tree.branch(1))?;
                    writeln!(
                        stdout,
                        "mean lambda0 = {} +- {}  relative error = {}  separated = {}",
                        sig6(s.mean_lambda0),
                        sig6(s.std_err_lambda0),
                        sig6(s.relative_error()),
                        sig6(s.separated_fraction)
                    )?;
                    Some(s)
                }
                None => None,
            };
            if let Some(path) = ctx.out {
                write_histogram(path, &h.histogram)?;
                let config = serde_json::json!({
                    "n": n, "m": m, "bins": bins, "lambda0": h.lambda0, "max_bulk": h.max_bulk,
                    "zeros": h.zeros, "study": json(&study),
                });
                ctx.manifest("spectrum", path, config)?;
            }
        }
        Command::Overlay { n, m_grid, samples } => {
            let samples = samples.unwrap_or_else(|| default_samples(*n));
            let rows = approximation_overlay(*n, m_grid.values(), samples, &ctx.tree)?;
            ctx.table("overlay", &rows, serde_json::json!({"n": n, "m_grid": m_grid.values(), "samples": samples}), stdout)?;
        }
        Command::Partitions { n, source, count, size_a, bins } => {
            let state: PureState = match &source.sequence {
                Some(s) if s.is_set() && !source.haar => encode_sequence(&s.to_source().resolve(*n, &ctx.tree)?),
                _ if source.haar => haar_state(*n, &mut ctx.tree.rng(0))?,
                _ => return Err(Error::InvalidArgument("give a sequence source or --haar".into())),
            };
            let result = partition_histogram(&state, *count, *size_a, &ctx.tree.branch(1))?;
            let (mean, se) = result.mean_and_std_err();
            writeln!(stdout, "min = {}  max = {}  spread = {}", sig6(result.min()), sig6(result.max()), sig6(result.spread()))?;
            writeln!(stdout, "mean = {} +- {}  over {} partitions", sig6(mean), sig6(se), result.entropies.len())?;
            if let Some(path) = ctx.out {
                write_histogram(path, &result.histogram(*bins))?;
                let config = serde_json::json!({
                    "n": n, "count": count, "size_a": size_a, "bins": bins, "haar": source.haar,
                    "min": result.min(), "max": result.max(),
                });
                ctx.manifest("partitions", path, config)?;
            }
        }
        Command::Greedy { n, m, candidates, score } => {
            let r = greedy_best_sample(*n, *m, *candidates, *score, &ctx.tree)?;
            let (mean, se) = crate::experiments::mean_and_std_err(&r.scores);
            writeln!(stdout, "best {} score = {}  (candidate {})", score, sig6(r.best_score), r.best_index)?;
            writeln!(stdout, "population mean = {} +- {}", sig6(mean), sig6(se))?;
            let rows: Vec<TraceRow> = r
                .scores
                .iter()
                .zip(&r.trace)
                .enumerate()
                .map(|(candidate, (&score, &best))| TraceRow { candidate, score, best })
                .collect();
            if let Some(path) = ctx.out {
                write_csv(path, &rows)?;
                let best = r.best.elements().to_vec();
                ctx.manifest("greedy", path, serde_json::json!({"n": n, "m": m, "candidates": candidates, "score": score, "best": best}))?;
            }
        }
        Command::QftCompare { n, source, draws } => {
            let pairs = match source.random_m {
                Some(m) if *draws > 1 => {
                    let (pairs, mean, se) = qft_comparison_random(*n, m, *draws, &ctx.tree)?;
                    writeln!(stdout, "mean |S_pos - S_mom| = {} +- {}", sig6(mean), sig6(se))?;
                    pairs
                }
                _ => qft_comparison(*n, &[source.resolve(*n, &ctx.tree)?])?,
            };
            if pairs.len() == 1 {
                writeln!(stdout, "position = {}  momentum = {}", sig6(pairs[0].position), sig6(pairs[0].momentum))?;
            }
            if let Some(path) = ctx.out {
                let rows: Vec<QftRow> = pairs
                    .iter()
                    .enumerate()
                    .map(|(index, p)| QftRow { index, position: p.position, momentum: p.momentum })
                    .collect();
                write_csv(path, &rows)?;
                ctx.manifest("qft-compare", path, serde_json::json!({"n": n, "draws": draws}))?;
            }
        }
        Command::Kalmost { n } => {
            let curve = kalmost_curve(*n)?;
            ctx.table("kalmost", &curve, serde_json::json!({"n": n}), stdout)?;
        }
        Command::Haar { n, samples } => {
            let (mean, se) = haar_average(*n, *samples, &ctx.tree)?;
            writeln!(stdout, "mean = {} +- {}  page = {}", sig6(mean), sig6(se), sig6(page_value(*n as u32)?))?;
            if let Some(path) = ctx.out {
                #[derive(Serialize)]
                struct Row {
                    n: usize,
                    samples: usize,
                    mean: f64,
                    std_err: f64,
                }
                write_csv(path, &[Row { n: *n, samples: *samples, mean, std_err: se }])?;
                ctx.manifest("haar", path, serde_json::json!({"n": n, "samples": samples}))?;
            }
        }
        Command::Tapprox { n, m } => scalar(&ctx, stdout, "tapprox", *n, Some(*m), t_approx(*n as u32, *m)?)?,
        Command::Dapprox { n, m } => scalar(&ctx, stdout, "dapprox", *n, Some(*m), d_approx(*n as u32, *m)?)?,
        Command::Page { n } => scalar(&ctx, stdout, "page", *n, None, page_value(*n as u32)?)?,
    }
    Ok(())
}

fn scalar(ctx: &Context, stdout: &mut dyn Write, name: &str, n: usize, m: Option<u64>, value: f64) -> Result<()> {
    writeln!(stdout, "{}", sig6(value))?;
    if let Some(path) = ctx.out {
        #[derive(Serialize)]
        struct Row {
            n: usize,
            m: Option<u64>,
            value: f64,
        }
        write_csv(path, &[Row { n, m, value }])?;
        ctx.manifest(name, path, serde_json::json!({"n": n, "m": m}))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("seqent").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn six_significant_digits() {
        assert_eq!(sig6(2.0), "2.00000");
        assert_eq!(sig6(6.278652479555518), "6.27865");
        assert_eq!(sig6(0.6009), "0.600900");
        assert_eq!(sig6(0.0), "0.00000");
        assert_eq!(sig6(1234567.0), "1234567");
        assert_eq!(sig6(1.5e-7), "1.50000e-7");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["--help"]).0, 0);
        assert_eq!(call(&["--version"]).0, 0);
        assert_eq!(call(&["frobnicate"]).0, 1);
        assert_eq!(call(&["entropy", "--n", "4"]).0, 1);
        assert_eq!(call(&["entropy", "--n", "4", "--seq", "1", "--primes"]).0, 1);
        assert_eq!(call(&["tapprox", "--n", "13", "--m", "1"]).0, 1);
        let (code, _, err) = call(&["entropy", "--n", "4", "--seq", "1,99"]);
        assert_eq!(code, 2);
        assert!(err.starts_with("error:"));
    }

    #[test]
    fn formula_commands() {
        assert_eq!(call(&["tapprox", "--n", "14", "--m", "0"]).1.trim(), "6.27865");
        assert_eq!(call(&["page", "--n", "10"]).1.trim(), "4.27865");
        assert_eq!(call(&["dapprox", "--n", "2", "--m", "2"]).1.trim(), "0.500000");
    }

    #[test]
    fn entropy_command() {
        assert_eq!(call(&["entropy", "--n", "4", "--seq", "3,5,10,12", "--partition", "natural"]).1.trim(), "2.00000");
        assert_eq!(call(&["entropy", "--n", "4", "--seq", "1,2,4,8", "--partition", "natural"]).1.trim(), "1.00000");
        // A = {0, 3} holds one whole Bell pair
        let product: f64 = call(&["entropy", "--n", "4", "--seq", "3,5,10,12", "--partition", "0,3"]).1.trim().parse().unwrap();
        assert!(product.abs() < 1e-12);
        assert_eq!(call(&["entropy", "--n", "2", "--seq", "0,3", "--renyi", "2"]).1.trim(), "1.00000");
    }
}
