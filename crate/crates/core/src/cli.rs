//! The `pgain` command line.
//!
//! ```text
//! pgain compute     [--metric M] [--delta D | --delta-star S] [--alpha A] [--tol T]
//!                   [--max-k K] [--out DIR] [--format csv|json] INPUT
//! pgain sweep       [--grid 0.1,0.2,…] [--alpha A] [--tol T] [--out FILE] [--format F] INPUT
//! pgain convergence [--metric gpg|epg|all] [--delta-star S,…] [--tol T] [--max-k K]
//!                   [--out DIR] INPUT
//! pgain spectral    [--tol T] [--max-iter N] INPUT
//! pgain generate    complete N | ring N | star LEAVES | grid R C | er N P | ba N M0
//!                   [--seed S] [--out FILE]
//! ```
//!
//! Exit status is 0 when every requested computation converged, 2 when one
//! did not, and 1 on any error.

use std::fs::{self, File};
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{self, SweepOptions};
use crate::baselines::{self, DEFAULT_ALPHA};
use crate::gain::{self, Decay, DecayRule, GainParams};
use crate::generators;
use crate::graph::{self, ParseOptions};
use crate::spectral::{self, SpectralEstimate};
use crate::{CentralityVector, Error, Graph, Metric, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_NOT_CONVERGED: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "pgain",
    version,
    about = "Potential gain centralities on edge-list graphs"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Per-node scores for one or all metrics.
    Compute(ComputeArgs),
    /// Spearman correlation of GPG against the other metrics over a δ⋆ grid.
    Sweep(SweepArgs),
    /// Relative truncation error ε(k) per walk length.
    Convergence(ConvergenceArgs),
    /// Spectral radius by shifted power iteration.
    Spectral(SpectralArgs),
    /// Write a synthetic edge list.
    Generate(GenerateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MetricArg {
    Deg,
    Ec,
    Pr,
    Katz,
    Gpg,
    Epg,
    All,
}

impl MetricArg {
    fn metrics(self) -> Vec<Metric> {
        match self {
            MetricArg::Deg => vec![Metric::Deg],
            MetricArg::Ec => vec![Metric::Ec],
            MetricArg::Pr => vec![Metric::Pr],
            MetricArg::Katz => vec![Metric::Katz],
            MetricArg::Gpg => vec![Metric::Gpg],
            MetricArg::Epg => vec![Metric::Epg],
            MetricArg::All => Metric::COMPARED.to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TraceMetric {
    Gpg,
    Epg,
    All,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct DecayArgs {
    /// Absolute geometric decay δ, must be below 1/λ₁.
    #[arg(long, conflicts_with = "delta_star")]
    pub delta: Option<f64>,
    /// Normalized decay δ⋆ = δ·λ₁ in (0, 1) [default: 0.5].
    #[arg(long)]
    pub delta_star: Option<f64>,
}

impl DecayArgs {
    fn rule(&self) -> DecayRule {
        match (self.delta, self.delta_star) {
            (Some(d), _) => DecayRule::Absolute(d),
            (None, Some(s)) => DecayRule::Normalized(s),
            (None, None) => DecayRule::default(),
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct ComputeArgs {
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "all")]
    pub metric: MetricArg,
    #[command(flatten)]
    pub decay: DecayArgs,
    #[arg(long, default_value_t = DEFAULT_ALPHA)]
    pub alpha: f64,
    #[arg(long, default_value_t = gain::DEFAULT_TOLERANCE)]
    pub tol: f64,
    /// Truncate the gain series after this many walk lengths.
    #[arg(long)]
    pub max_k: Option<usize>,
    /// Output directory; files are named `<input stem>.<metric>.<format>`.
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    pub input: PathBuf,
    /// Comma-separated ascending δ⋆ values in (0, 1) [default: 0.1,…,0.9].
    #[arg(long, value_delimiter = ',')]
    pub grid: Option<Vec<f64>>,
    #[arg(long, default_value_t = DEFAULT_ALPHA)]
    pub alpha: f64,
    #[arg(long, default_value_t = gain::DEFAULT_TOLERANCE)]
    pub tol: f64,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct ConvergenceArgs {
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "all")]
    pub metric: TraceMetric,
    /// Comma-separated δ⋆ values for the geometric gain.
    #[arg(long, value_delimiter = ',', default_value = "0.5")]
    pub delta_star: Vec<f64>,
    #[arg(long, default_value_t = gain::DEFAULT_TOLERANCE)]
    pub tol: f64,
    #[arg(long)]
    pub max_k: Option<usize>,
    /// Output directory; one `k,epsilon` file per (metric, δ⋆).
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct SpectralArgs {
    pub input: PathBuf,
    #[arg(long, default_value_t = spectral::DEFAULT_TOLERANCE)]
    pub tol: f64,
    #[arg(long, default_value_t = spectral::DEFAULT_MAX_ITER)]
    pub max_iter: usize,
}

#[derive(Debug, Clone, Args)]
pub struct GenerateArgs {
    #[command(subcommand)]
    pub family: Family,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Family {
    /// Complete graph K_n.
    Complete { n: usize },
    /// Cycle C_n.
    Ring { n: usize },
    /// Star with one center and `leaves` leaves.
    Star { leaves: usize },
    /// rows × cols lattice.
    Grid { rows: usize, cols: usize },
    /// Erdős–Rényi G(n, p).
    Er { n: usize, p: f64 },
    /// Preferential attachment from an (m0+1)-clique, m0 edges per new node.
    Ba { n: usize, m0: usize },
}

/// Runs a parsed command line and returns the process exit status.
pub fn run(config: RunConfig) -> i32 {
    let outcome = match config.command {
        Command::Compute(args) => cmd_compute(&args),
        Command::Sweep(args) => cmd_sweep(&args),
        Command::Convergence(args) => cmd_convergence(&args),
        Command::Spectral(args) => cmd_spectral(&args),
        Command::Generate(args) => cmd_generate(&args),
    };
    match outcome {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_NOT_CONVERGED,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
    }
}

/// Formats with 17 significant digits, fixed notation for moderate exponents.
pub fn format_score(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{x:.16e}");
    let exp: i32 = sci
        .rsplit('e')
        .next()
        .and_then(|e| e.parse().ok())
        .unwrap_or(0);
    if (-5..17).contains(&exp) {
        format!("{:.*}", (16 - exp) as usize, x)
    } else {
        sci
    }
}

fn load(path: &Path) -> Result<Graph> {
    let file = File::open(path)
        .map_err(|e| io::Error::new(e.kind(), format!("{}: {e}", path.display())))?;
    let (g, report) = graph::parse_edge_list(BufReader::new(file), &ParseOptions::default())?;
    if report.self_loops > 0 {
        eprintln!("warning: dropped {} self-loop(s)", report.self_loops);
    }
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    Ok(g)
}

fn stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "graph".into())
}

fn estimate(g: &Graph) -> Result<SpectralEstimate> {
    spectral::power_iteration(g, spectral::DEFAULT_TOLERANCE, spectral::DEFAULT_MAX_ITER)
}

fn open_out(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(io::BufWriter::new(File::create(p)?)),
        None => Box::new(io::BufWriter::new(io::stdout().lock())),
    })
}

fn compute_metric(
    g: &Graph,
    metric: Metric,
    args: &ComputeArgs,
    spectral: Option<&SpectralEstimate>,
) -> Result<CentralityVector> {
    let params = GainParams {
        max_walk_length: args.max_k,
        tolerance: args.tol,
    };
    let decay = || -> Result<Decay> {
        let lambda1 = spectral.map(|s| s.lambda1).unwrap_or_default();
        Decay::from_rule(args.decay.rule(), g, lambda1)
    };
    let max_iter = baselines::DEFAULT_MAX_ITER;
    match metric {
        Metric::Deg => Ok(baselines::degree_centrality(g)),
        Metric::Ec => Ok(spectral::eigenvector_centrality_from(
            spectral.cloned().ok_or(Error::EmptyGraph)?,
            spectral::DEFAULT_TOLERANCE,
        )),
        Metric::Pr => baselines::pagerank(g, args.alpha, args.tol, max_iter),
        Metric::Katz => baselines::katz_centrality(g, decay()?, args.tol, max_iter),
        Metric::Gpg => gain::geometric_potential_gain(g, decay()?, &params),
        Metric::Epg => gain::exponential_potential_gain(g, &params),
        Metric::Comm => baselines::communicability_vector(g, args.tol, max_iter),
    }
}

#[derive(Serialize)]
struct NodeScore<'a> {
    node: &'a str,
    score: f64,
}

#[derive(Serialize)]
struct ScoresDocument<'a> {
    metric: Metric,
    params: &'a crate::ParamSnapshot,
    iterations_used: usize,
    converged: bool,
    scores: Vec<NodeScore<'a>>,
}

fn write_scores(g: &Graph, v: &CentralityVector, path: &Path, format: Format) -> Result<()> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_path(path)?;
            w.write_record(["node", "score"])?;
            for (i, &s) in v.scores.iter().enumerate() {
                w.write_record([g.label(i), &format_score(s)])?;
            }
            w.flush()?;
        }
        Format::Json => {
            let doc = ScoresDocument {
                metric: v.metric,
                params: &v.params,
                iterations_used: v.iterations_used,
                converged: v.converged,
                scores: v
                    .scores
                    .iter()
                    .enumerate()
                    .map(|(i, &score)| NodeScore {
                        node: g.label(i),
                        score,
                    })
                    .collect(),
            };
            let mut w = io::BufWriter::new(File::create(path)?);
            serde_json::to_writer_pretty(&mut w, &doc)?;
            writeln!(w)?;
        }
    }
    Ok(())
}

fn extension(format: Format) -> &'static str {
    match format {
        Format::Csv => "csv",
        Format::Json => "json",
    }
}

pub fn cmd_compute(args: &ComputeArgs) -> Result<bool> {
    let g = load(&args.input)?;
    let metrics = args.metric.metrics();
    let needs_lambda = metrics
        .iter()
        .any(|m| matches!(m, Metric::Ec | Metric::Katz | Metric::Gpg));
    let spectral = if needs_lambda {
        Some(estimate(&g)?)
    } else {
        None
    };
    fs::create_dir_all(&args.out)?;

    let results: Vec<(CentralityVector, f64)> = metrics
        .par_iter()
        .map(|&m| {
            let start = Instant::now();
            let v = compute_metric(&g, m, args, spectral.as_ref())?;
            Ok((v, start.elapsed().as_secs_f64()))
        })
        .collect::<Result<_>>()?;

    let lambda = spectral
        .as_ref()
        .map(|s| format_score(s.lambda1))
        .unwrap_or_else(|| "n/a".into());
    let name = stem(&args.input);
    let mut converged = spectral.as_ref().is_none_or(|s| s.converged);
    for (v, secs) in &results {
        let path = args
            .out
            .join(format!("{name}.{}.{}", v.metric, extension(args.format)));
        write_scores(&g, v, &path, args.format)?;
        eprintln!(
            "{}: n={} m={} lambda1={lambda} iterations={} converged={} time={secs:.6}s -> {}",
            v.metric,
            g.node_count(),
            g.edge_count(),
            v.iterations_used,
            v.converged,
            path.display()
        );
        converged &= v.converged;
    }
    Ok(converged)
}

fn opt_field(v: Option<f64>) -> String {
    v.map(format_score).unwrap_or_default()
}

pub fn cmd_sweep(args: &SweepArgs) -> Result<bool> {
    let g = load(&args.input)?;
    let est = estimate(&g)?;
    let grid = args.grid.clone().unwrap_or_else(analysis::default_grid);
    let options = SweepOptions {
        alpha: args.alpha,
        tolerance: args.tol,
        ..Default::default()
    };
    let result = analysis::delta_sweep(&g, &est, &grid, &options)?;
    let undefined = result.rows.iter().any(|r| {
        [r.rho_deg, r.rho_ec, r.rho_pr, r.rho_katz, r.rho_epg]
            .iter()
            .any(Option::is_none)
    });
    if undefined {
        eprintln!(
            "warning: some correlations are undefined (constant score vector); fields left empty"
        );
    }
    let out = open_out(args.out.as_deref())?;
    match args.format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record([
                "delta_star",
                "rho_deg",
                "rho_ec",
                "rho_pr",
                "rho_katz",
                "rho_epg",
            ])?;
            for r in &result.rows {
                w.write_record([
                    format_score(r.delta_star),
                    opt_field(r.rho_deg),
                    opt_field(r.rho_ec),
                    opt_field(r.rho_pr),
                    opt_field(r.rho_katz),
                    opt_field(r.rho_epg),
                ])?;
            }
            w.flush()?;
        }
        Format::Json => {
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, &result)?;
            writeln!(out)?;
        }
    }
    eprintln!(
        "sweep: n={} m={} lambda1={} points={}",
        g.node_count(),
        g.edge_count(),
        format_score(est.lambda1),
        result.rows.len()
    );
    Ok(result.converged && est.converged)
}

pub fn cmd_convergence(args: &ConvergenceArgs) -> Result<bool> {
    let g = load(&args.input)?;
    let metrics = match args.metric {
        TraceMetric::Gpg => vec![Metric::Gpg],
        TraceMetric::Epg => vec![Metric::Epg],
        TraceMetric::All => vec![Metric::Gpg, Metric::Epg],
    };
    let est = if metrics.contains(&Metric::Gpg) {
        Some(estimate(&g)?)
    } else {
        None
    };
    let lambda1 = est.as_ref().map(|e| e.lambda1).unwrap_or_default();
    let params = GainParams {
        max_walk_length: args.max_k,
        tolerance: args.tol,
    };
    let traces = analysis::convergence_report(&g, lambda1, &metrics, &args.delta_star, &params)?;
    fs::create_dir_all(&args.out)?;
    let name = stem(&args.input);
    for t in &traces {
        let file = match t.delta_star {
            Some(ds) => format!("{name}.convergence.{}.ds{ds}.csv", t.metric),
            None => format!("{name}.convergence.{}.csv", t.metric),
        };
        let path = args.out.join(file);
        let mut w = csv::Writer::from_path(&path)?;
        w.write_record(["k", "epsilon"])?;
        for &(k, eps) in &t.trace.errors {
            w.write_record([k.to_string(), format_score(eps)])?;
        }
        w.flush()?;
        eprintln!("{}: {} terms -> {}", t.metric, t.iterations, path.display());
    }
    Ok(est.is_none_or(|e| e.converged))
}

pub fn cmd_spectral(args: &SpectralArgs) -> Result<bool> {
    let g = load(&args.input)?;
    let est = spectral::power_iteration(&g, args.tol, args.max_iter)?;
    println!("lambda1={}", format_score(est.lambda1));
    println!("residual={:e}", est.residual);
    println!("iterations={}", est.iterations);
    println!("converged={}", est.converged);
    Ok(est.converged)
}

pub fn cmd_generate(args: &GenerateArgs) -> Result<bool> {
    let edges = match args.family {
        Family::Complete { n } => generators::complete_edges(n)?,
        Family::Ring { n } => generators::ring_edges(n)?,
        Family::Star { leaves } => generators::star_edges(leaves)?,
        Family::Grid { rows, cols } => generators::grid_edges(rows, cols)?,
        Family::Er { n, p } => generators::erdos_renyi_edges(n, p, args.seed)?,
        Family::Ba { n, m0 } => generators::barabasi_albert_edges(n, m0, args.seed)?,
    };
    let mut out = open_out(args.out.as_deref())?;
    out.write_all(generators::format_edge_list(&edges).as_bytes())?;
    out.flush()?;
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn score_format_keeps_full_precision() {
        assert_eq!(format_score(4.0), "4.0000000000000000");
        let e = format_score(std::f64::consts::E);
        assert_eq!(e, "2.7182818284590451");
        assert_eq!(e.parse::<f64>().unwrap(), std::f64::consts::E);
        assert_eq!(format_score(0.0), "0");
        for x in [1e-9, 123456.789, 1e20, -0.25] {
            assert_eq!(format_score(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn delta_flags_conflict() {
        let r = RunConfig::try_parse_from([
            "pgain",
            "compute",
            "--delta",
            "0.1",
            "--delta-star",
            "0.5",
            "x",
        ]);
        assert!(r.is_err());
    }

    #[test]
    fn generate_flags_after_family() {
        let c =
            RunConfig::try_parse_from(["pgain", "generate", "er", "100", "0.05", "--seed", "1"])
                .unwrap();
        match c.command {
            Command::Generate(g) => {
                assert_eq!(g.seed, 1);
                assert!(matches!(g.family, Family::Er { n: 100, .. }));
            }
            other => panic!("{other:?}"),
        }
    }
}
