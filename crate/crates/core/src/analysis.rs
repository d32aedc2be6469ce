//! Rank correlations, decay sweeps, convergence reports and timings.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::baselines::{self, DEFAULT_ALPHA};
use crate::gain::{self, ConvergenceTrace, Decay, GainKind, GainParams};
use crate::spectral::{self, SpectralEstimate};
use crate::{CentralityVector, Error, Graph, Metric, Result};

/// Average (fractional) ranks, 1-based. Equal values share the mean of the
/// positions they occupy.
pub fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&i, &j| values[i].total_cmp(&values[j]));
    let mut ranks = vec![0.0; values.len()];
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && values[order[end]] == values[order[start]] {
            end += 1;
        }
        // positions start+1 ..= end
        let rank = (start + 1 + end) as f64 / 2.0;
        for &i in &order[start..end] {
            ranks[i] = rank;
        }
        start = end;
    }
    ranks
}

/// Spearman's ρ: the Pearson correlation of average ranks.
pub fn spearman_rho(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            actual: b.len(),
        });
    }
    if a.len() < 2 {
        return Err(Error::InvalidParameter(
            "spearman needs at least two observations".into(),
        ));
    }
    if a.iter().chain(b).any(|v| v.is_nan()) {
        return Err(Error::InvalidParameter("NaN in rank input".into()));
    }
    let ra = average_ranks(a);
    let rb = average_ranks(b);
    let mean = (a.len() + 1) as f64 / 2.0;
    let (mut cov, mut va, mut vb) = (0.0, 0.0, 0.0);
    for (x, y) in ra.iter().zip(&rb) {
        let (dx, dy) = (x - mean, y - mean);
        cov += dx * dy;
        va += dx * dx;
        vb += dy * dy;
    }
    if va == 0.0 || vb == 0.0 {
        return Err(Error::UndefinedCorrelation(
            "a ranked vector has zero variance (all values equal)".into(),
        ));
    }
    Ok((cov / (va * vb).sqrt()).clamp(-1.0, 1.0))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Rho {
    Value(f64),
    Undefined(String),
}

impl Rho {
    pub fn value(&self) -> Option<f64> {
        match self {
            Rho::Value(v) => Some(*v),
            Rho::Undefined(_) => None,
        }
    }
}

impl From<Result<f64>> for Rho {
    fn from(r: Result<f64>) -> Self {
        match r {
            Ok(v) => Rho::Value(v),
            Err(e) => Rho::Undefined(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorrelationReport {
    pub metric_names: Vec<String>,
    /// Symmetric; `rho[i][j]` correlates `metric_names[i]` with `metric_names[j]`.
    pub rho: Vec<Vec<Rho>>,
}

impl CorrelationReport {
    pub fn get(&self, a: &str, b: &str) -> Option<&Rho> {
        let i = self.metric_names.iter().position(|m| m == a)?;
        let j = self.metric_names.iter().position(|m| m == b)?;
        Some(&self.rho[i][j])
    }
}

/// Pairwise Spearman ρ, with metrics ordered by name. Pairs whose
/// correlation is undefined are reported as [`Rho::Undefined`].
pub fn correlation_matrix(vectors: &[CentralityVector]) -> Result<CorrelationReport> {
    if vectors.len() < 2 {
        return Err(Error::InvalidParameter(
            "correlation matrix needs at least two vectors".into(),
        ));
    }
    let n = vectors[0].len();
    if let Some(v) = vectors.iter().find(|v| v.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: v.len(),
        });
    }
    let mut sorted: Vec<&CentralityVector> = vectors.iter().collect();
    sorted.sort_by_key(|v| v.metric.name());
    let k = sorted.len();
    let mut rho = vec![vec![Rho::Value(1.0); k]; k];
    for i in 0..k {
        for j in i..k {
            let r: Rho = spearman_rho(&sorted[i].scores, &sorted[j].scores).into();
            rho[j][i] = r.clone();
            rho[i][j] = r;
        }
    }
    Ok(CorrelationReport {
        metric_names: sorted.iter().map(|v| v.metric.name().to_owned()).collect(),
        rho,
    })
}

/// Default sweep grid `δ⋆ ∈ {0.1, 0.2, …, 0.9}`.
pub fn default_grid() -> Vec<f64> {
    (1..=9).map(|i| i as f64 / 10.0).collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepOptions {
    pub alpha: f64,
    pub tolerance: f64,
    pub max_iter: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            alpha: DEFAULT_ALPHA,
            tolerance: gain::DEFAULT_TOLERANCE,
            max_iter: baselines::DEFAULT_MAX_ITER,
        }
    }
}

/// `ρ(GPG, X)` at one grid point; `None` where the correlation is undefined.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub delta_star: f64,
    pub rho_deg: Option<f64>,
    pub rho_ec: Option<f64>,
    pub rho_pr: Option<f64>,
    pub rho_katz: Option<f64>,
    pub rho_epg: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepResult {
    pub delta_star_grid: Vec<f64>,
    pub alpha: f64,
    pub lambda1: f64,
    pub rows: Vec<SweepRow>,
    /// Every GPG/Katz/PR/EPG run inside the sweep converged.
    pub converged: bool,
}

fn validate_grid(grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::InvalidParameter("empty delta_star grid".into()));
    }
    if grid.iter().any(|&d| !(d > 0.0 && d < 1.0)) {
        return Err(Error::InvalidParameter(
            "grid values must lie in (0, 1)".into(),
        ));
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParameter(
            "grid must be strictly ascending".into(),
        ));
    }
    Ok(())
}

/// For each `δ⋆` computes GPG and Katz at `δ = δ⋆/λ₁` and correlates GPG
/// with DEG, EC, PR, Katz and EPG. Grid points run in parallel.
pub fn delta_sweep(
    g: &Graph,
    spectral: &SpectralEstimate,
    grid: &[f64],
    options: &SweepOptions,
) -> Result<SweepResult> {
    validate_grid(grid)?;
    let params = GainParams::with_tolerance(options.tolerance);
    let deg = baselines::degree_centrality(g);
    let ec = spectral::eigenvector_centrality_from(spectral.clone(), options.tolerance);
    let pr = baselines::pagerank(g, options.alpha, options.tolerance, options.max_iter)?;
    let epg = gain::exponential_potential_gain(g, &params)?;

    let rows: Vec<(SweepRow, bool)> = grid
        .par_iter()
        .map(|&ds| -> Result<(SweepRow, bool)> {
            let decay = Decay::from_normalized(ds, spectral.lambda1)?;
            let gpg = gain::geometric_potential_gain(g, decay, &params)?;
            let katz = baselines::katz_centrality(g, decay, options.tolerance, options.max_iter)?;
            let rho = |other: &[f64]| spearman_rho(&gpg.scores, other).ok();
            let row = SweepRow {
                delta_star: ds,
                rho_deg: rho(&deg.scores),
                rho_ec: rho(&ec.scores),
                rho_pr: rho(&pr.scores),
                rho_katz: rho(&katz.scores),
                rho_epg: rho(&epg.scores),
            };
            Ok((row, gpg.converged && katz.converged))
        })
        .collect::<Result<_>>()?;

    let converged = rows.iter().all(|(_, c)| *c) && pr.converged && epg.converged;
    let rows: Vec<SweepRow> = rows.into_iter().map(|(r, _)| r).collect();
    if rows.iter().any(|r| r.rho_deg.is_none()) {
        log::warn!("some correlations are undefined (a score vector is constant)");
    }
    Ok(SweepResult {
        delta_star_grid: grid.to_vec(),
        alpha: options.alpha,
        lambda1: spectral.lambda1,
        rows,
        converged,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LabeledTrace {
    pub metric: Metric,
    /// `None` for the exponential gain, which has no decay parameter.
    pub delta_star: Option<f64>,
    pub iterations: usize,
    pub trace: ConvergenceTrace,
}

/// `ε(k)` series for each requested gain: one per `δ⋆` for GPG, one for EPG.
pub fn convergence_report(
    g: &Graph,
    lambda1: f64,
    metrics: &[Metric],
    delta_stars: &[f64],
    params: &GainParams,
) -> Result<Vec<LabeledTrace>> {
    let mut out = Vec::new();
    for &metric in metrics {
        match metric {
            Metric::Gpg => {
                for &ds in delta_stars {
                    let decay = Decay::from_normalized(ds, lambda1)?;
                    let (v, trace) = gain::gain_with_trace(g, GainKind::Geometric(decay), params)?;
                    out.push(LabeledTrace {
                        metric,
                        delta_star: Some(ds),
                        iterations: v.iterations_used,
                        trace,
                    });
                }
            }
            Metric::Epg => {
                let (v, trace) = gain::gain_with_trace(g, GainKind::Exponential, params)?;
                out.push(LabeledTrace {
                    metric,
                    delta_star: None,
                    iterations: v.iterations_used,
                    trace,
                });
            }
            other => {
                return Err(Error::InvalidParameter(format!(
                    "convergence traces exist for gpg and epg only, not {other}"
                )))
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct Timed<T> {
    pub value: T,
    pub elapsed: Duration,
}

impl Timed<CentralityVector> {
    pub fn per_iteration(&self) -> Duration {
        self.elapsed / self.value.iterations_used.max(1) as u32
    }
}

pub fn timed<T>(f: impl FnOnce() -> Result<T>) -> Result<Timed<T>> {
    let start = Instant::now();
    let value = f()?;
    Ok(Timed {
        value,
        elapsed: start.elapsed(),
    })
}

/// Median over `repeats` runs of the wall time per sparse product of a
/// geometric gain truncated at `walk_length` terms.
pub fn per_iteration_time(
    g: &Graph,
    decay: Decay,
    walk_length: usize,
    repeats: usize,
) -> Result<Duration> {
    let params = GainParams::truncated(walk_length);
    let mut samples = Vec::with_capacity(repeats);
    for _ in 0..repeats.max(1) {
        let t = timed(|| gain::geometric_potential_gain(g, decay, &params))?;
        samples.push(t.per_iteration());
    }
    samples.sort();
    Ok(samples[samples.len() / 2])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rho_examples() {
        assert_eq!(spearman_rho(&[1., 2., 3.], &[10., 20., 30.]).unwrap(), 1.0);
        assert_eq!(spearman_rho(&[1., 2., 3.], &[3., 2., 1.]).unwrap(), -1.0);
        let r = spearman_rho(&[1., 2., 3., 4.], &[2., 1., 4., 3.]).unwrap();
        assert!((r - 0.6).abs() < 1e-15);
    }

    #[test]
    fn rho_errors() {
        assert!(matches!(
            spearman_rho(&[1., 2.], &[1., 2., 3.]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(spearman_rho(&[1.], &[1.]).is_err());
        assert!(matches!(
            spearman_rho(&[1., 1., 1.], &[1., 2., 3.]),
            Err(Error::UndefinedCorrelation(_))
        ));
    }

    #[test]
    fn average_ranks_with_ties() {
        assert_eq!(
            average_ranks(&[10., 20., 10., 30.]),
            vec![1.5, 3.0, 1.5, 4.0]
        );
    }

    #[test]
    fn ties_against_brute_force_formula() {
        // no ties here, so 1 − 6Σd²/(n(n²−1)) applies: d = (0, 2, −1, −1)
        let r = spearman_rho(&[1., 2., 3., 4.], &[1., 4., 2., 3.]).unwrap();
        let sum_d2 = 0.0 + 4.0 + 1.0 + 1.0;
        assert!((r - (1.0 - 6.0 * sum_d2 / (4.0 * 15.0))).abs() < 1e-15);
    }

    #[test]
    fn grid_validation() {
        assert!(validate_grid(&default_grid()).is_ok());
        assert!(validate_grid(&[0.5, 0.4]).is_err());
        assert!(validate_grid(&[0.5, 1.0]).is_err());
        assert!(validate_grid(&[]).is_err());
        assert_eq!(default_grid().len(), 9);
    }
}
