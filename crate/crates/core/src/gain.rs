//! Geometric and exponential potential gain.
//!
//! Both gains weight the walks of length `k` ending at a node by a decay
//! `φ(k)` and sum over all lengths:
//!
//! * geometric, `φ(k) = δ^(k−1)`: `g = Σ_{k≥1} δ^(k−1) A^k × 1 = A (I − δA)⁻¹ × 1`
//! * exponential, `φ(k) = 1/(k−1)!`: `e = Σ_{k≥1} A^k × 1 / (k−1)! = A exp(A) × 1`
//!
//! Neither series contains an identity term. Each is evaluated by carrying
//! only the latest term: `y₁ = A × 1`, then `y_k = δ A y_{k−1}` for the
//! geometric gain and `t_k = A t_{k−1} / (k−1)` for the exponential one, so a
//! truncation after `k` terms costs `k` sparse products and `O(n)` memory.

use serde::Serialize;

use crate::vector::{add_assign, dist2, norm2};
use crate::{oracle, CentralityVector, Error, Graph, Metric, ParamSnapshot, Result};

pub const DEFAULT_DELTA_STAR: f64 = 0.5;
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

/// Upper bound on series length when no walk length is requested.
pub const SERIES_HARD_CAP: usize = 1_000_000;

/// Relative-change threshold of the self-referenced run used by traces.
pub const REFERENCE_TOLERANCE: f64 = 1e-15;

/// Graphs up to this size are traced against the dense oracle instead.
pub const DENSE_REFERENCE_LIMIT: usize = oracle::DENSE_LIMIT;

const OVERFLOW_WARN_NORM: f64 = 1e300;

/// A validated geometric decay `δ ∈ (0, 1/λ₁)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Decay {
    delta: f64,
    lambda1: f64,
}

/// How to pick `δ` for a given graph.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DecayRule {
    /// `δ = δ⋆ / λ₁`. `Normalized(0.5)` is the classic Katz choice,
    /// `Normalized(0.85)` mirrors the PageRank damping factor.
    Normalized(f64),
    /// An explicit `δ`.
    Absolute(f64),
    /// `δ = 1 / (‖A‖∞ + 1)`, i.e. one over max degree plus one.
    Foster,
}

impl Default for DecayRule {
    fn default() -> Self {
        DecayRule::Normalized(DEFAULT_DELTA_STAR)
    }
}

impl Decay {
    pub fn new(delta: f64, lambda1: f64) -> Result<Self> {
        if !(lambda1 > 0.0 && lambda1.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "spectral radius must be positive and finite, got {lambda1}"
            )));
        }
        if !(delta > 0.0 && delta.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "delta must be positive, got {delta}"
            )));
        }
        if delta * lambda1 >= 1.0 {
            return Err(Error::InvalidParameter(format!(
                "delta {delta} must be below 1/lambda1 = {}",
                1.0 / lambda1
            )));
        }
        Ok(Self { delta, lambda1 })
    }

    pub fn from_normalized(delta_star: f64, lambda1: f64) -> Result<Self> {
        if !(delta_star > 0.0 && delta_star < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "delta_star must lie in (0, 1), got {delta_star}"
            )));
        }
        Self::new(delta_star / lambda1, lambda1)
    }

    pub fn from_rule(rule: DecayRule, g: &Graph, lambda1: f64) -> Result<Self> {
        match rule {
            DecayRule::Normalized(s) => Self::from_normalized(s, lambda1),
            DecayRule::Absolute(d) => Self::new(d, lambda1),
            DecayRule::Foster => Self::new(1.0 / (g.max_degree() as f64 + 1.0), lambda1),
        }
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn lambda1(&self) -> f64 {
        self.lambda1
    }

    /// `δ · λ₁`, the asymptotic per-term contraction of the geometric series.
    pub fn delta_star(&self) -> f64 {
        self.delta * self.lambda1
    }
}

/// Stopping rule shared by the series kernels: stop after
/// `max_walk_length` terms or once the latest term's L2 norm falls below
/// `tolerance` times the L2 norm of the running sum, whichever comes first.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GainParams {
    pub max_walk_length: Option<usize>,
    pub tolerance: f64,
}

impl Default for GainParams {
    fn default() -> Self {
        Self {
            max_walk_length: None,
            tolerance: DEFAULT_TOLERANCE,
        }
    }
}

impl GainParams {
    pub fn with_tolerance(tolerance: f64) -> Self {
        Self {
            max_walk_length: None,
            tolerance,
        }
    }

    pub fn truncated(max_walk_length: usize) -> Self {
        Self {
            max_walk_length: Some(max_walk_length),
            tolerance: 0.0,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.max_walk_length == Some(0) {
            return Err(Error::InvalidParameter(
                "max_walk_length must be at least 1".into(),
            ));
        }
        let tol_ok = self.tolerance.is_finite() && self.tolerance >= 0.0;
        if !tol_ok || (self.tolerance == 0.0 && self.max_walk_length.is_none()) {
            return Err(Error::InvalidParameter(format!(
                "tolerance must be positive (or zero with a walk length), got {}",
                self.tolerance
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum GainKind {
    Geometric(Decay),
    Exponential,
}

impl GainKind {
    pub fn metric(&self) -> Metric {
        match self {
            GainKind::Geometric(_) => Metric::Gpg,
            GainKind::Exponential => Metric::Epg,
        }
    }

    /// `φ(k) / φ(k−1)`: the factor applied to `A × term_{k−1}`.
    pub(crate) fn ratio(&self, k: usize) -> f64 {
        match self {
            GainKind::Geometric(d) => d.delta,
            GainKind::Exponential => 1.0 / (k - 1) as f64,
        }
    }
}

/// Relative L2 truncation error `ε(k) = ‖ref − partial_k‖ / ‖ref‖` per walk length.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct ConvergenceTrace {
    pub errors: Vec<(usize, f64)>,
}

impl ConvergenceTrace {
    pub fn epsilon(&self, k: usize) -> Option<f64> {
        self.errors.iter().find(|(j, _)| *j == k).map(|&(_, e)| e)
    }

    /// First walk length whose error is at or below `threshold`.
    pub fn first_below(&self, threshold: f64) -> Option<usize> {
        self.errors
            .iter()
            .find(|(_, e)| *e <= threshold)
            .map(|&(k, _)| k)
    }

    /// Least-squares slope of `ln ε(k)` over `k ∈ [from, to]`.
    ///
    /// Returns `None` when fewer than two positive errors fall in range.
    pub fn log_slope(&self, from: usize, to: usize) -> Option<f64> {
        let pts: Vec<(f64, f64)> = self
            .errors
            .iter()
            .filter(|(k, e)| *k >= from && *k <= to && *e > 0.0)
            .map(|&(k, e)| (k as f64, e.ln()))
            .collect();
        if pts.len() < 2 {
            return None;
        }
        let m = pts.len() as f64;
        let mx = pts.iter().map(|p| p.0).sum::<f64>() / m;
        let my = pts.iter().map(|p| p.1).sum::<f64>() / m;
        let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
        let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
        Some(sxy / sxx)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum StopReason {
    Tolerance,
    WalkLength,
    Cap,
}

#[derive(Debug)]
pub(crate) struct SeriesOutcome {
    pub sum: Vec<f64>,
    /// Index of the last accumulated term.
    pub last_index: usize,
    pub reason: StopReason,
}

/// Accumulates `Σ_{j ≥ first_index} term_j` with
/// `term_j = ratio(j) · A · term_{j−1}`, starting from `first_term`.
///
/// `observe(j, sum)` sees the running sum after every term.
pub(crate) fn run_series(
    g: &Graph,
    first_term: Vec<f64>,
    first_index: usize,
    ratio: impl Fn(usize) -> f64,
    stop: &GainParams,
    mut observe: impl FnMut(usize, &[f64]),
) -> Result<SeriesOutcome> {
    let n = g.node_count();
    let mut term = first_term;
    let mut next = vec![0.0; n];
    let mut sum = term.clone();
    let mut j = first_index;
    let mut max_term_norm = norm2(&term);
    let mut warned = false;
    observe(j, &sum);

    let reason = loop {
        let term_norm = norm2(&term);
        let sum_norm = norm2(&sum);
        if !sum_norm.is_finite() {
            return Err(Error::NonFinite { iterations: j });
        }
        if term_norm < stop.tolerance * sum_norm || sum_norm == 0.0 {
            break StopReason::Tolerance;
        }
        let terms_done = j + 1 - first_index;
        if let Some(k_max) = stop.max_walk_length {
            if j >= k_max {
                break StopReason::WalkLength;
            }
        }
        if terms_done >= SERIES_HARD_CAP {
            break StopReason::Cap;
        }

        j += 1;
        g.spmv_into(&term, ratio(j), &mut next)?;
        std::mem::swap(&mut term, &mut next);
        add_assign(&mut sum, &term);

        let tn = norm2(&term);
        if tn > max_term_norm {
            max_term_norm = tn;
            if max_term_norm > OVERFLOW_WARN_NORM && !warned {
                log::warn!("series term norm {max_term_norm:.3e} at j = {j} is close to overflow");
                warned = true;
            }
        }
        observe(j, &sum);
    };

    Ok(SeriesOutcome {
        sum,
        last_index: j,
        reason,
    })
}

fn gain_series(
    g: &Graph,
    kind: GainKind,
    params: &GainParams,
    observe: impl FnMut(usize, &[f64]),
) -> Result<CentralityVector> {
    params.validate()?;
    let ones = vec![1.0; g.node_count()];
    let first = g.spmv(&ones, 1.0)?;
    let out = run_series(g, first, 1, |k| kind.ratio(k), params, observe)?;
    if out.reason == StopReason::Cap {
        log::warn!(
            "{} series hit the {SERIES_HARD_CAP}-term cap",
            kind.metric()
        );
    }
    let mut snapshot = ParamSnapshot {
        tolerance: Some(params.tolerance),
        max_walk_length: params.max_walk_length,
        ..Default::default()
    };
    if let GainKind::Geometric(d) = kind {
        snapshot.delta = Some(d.delta());
        snapshot.delta_star = Some(d.delta_star());
    }
    Ok(CentralityVector {
        metric: kind.metric(),
        scores: out.sum,
        params: snapshot,
        iterations_used: out.last_index,
        converged: out.reason != StopReason::Cap,
    })
}

/// Geometric potential gain `Σ_{k≥1} δ^(k−1) A^k × 1`.
pub fn geometric_potential_gain(
    g: &Graph,
    decay: Decay,
    params: &GainParams,
) -> Result<CentralityVector> {
    gain_series(g, GainKind::Geometric(decay), params, |_, _| {})
}

/// Exponential potential gain `Σ_{k≥1} A^k × 1 / (k−1)!`.
pub fn exponential_potential_gain(g: &Graph, params: &GainParams) -> Result<CentralityVector> {
    gain_series(g, GainKind::Exponential, params, |_, _| {})
}

pub fn potential_gain(g: &Graph, kind: GainKind, params: &GainParams) -> Result<CentralityVector> {
    gain_series(g, kind, params, |_, _| {})
}

/// The decay at which the geometric and exponential gains agree on an
/// eigencomponent with eigenvalue `lambda`: `δᶜ = (e^λ − 1) / (λ e^λ)`.
///
/// The result is only usable as a geometric decay when `δᶜ < 1/λ₁`;
/// [`Decay::new`] enforces that.
pub fn crossover_delta(lambda: f64) -> Result<f64> {
    if lambda == 0.0 {
        return Err(Error::InvalidParameter(
            "crossover undefined at lambda = 0: the gains coincide for every delta".into(),
        ));
    }
    if !lambda.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "lambda must be finite, got {lambda}"
        )));
    }
    // (e^λ − 1)/(λ e^λ) = (1 − e^−λ)/λ
    Ok(-(-lambda).exp_m1() / lambda)
}

/// Runs a gain and records `ε(k)` for every walk length up to the stop.
///
/// The reference is the dense oracle for graphs of at most
/// [`DENSE_REFERENCE_LIMIT`] nodes and otherwise the same sparse series run
/// until its relative term contribution falls below [`REFERENCE_TOLERANCE`].
pub fn gain_with_trace(
    g: &Graph,
    kind: GainKind,
    params: &GainParams,
) -> Result<(CentralityVector, ConvergenceTrace)> {
    params.validate()?;
    let reference = if g.node_count() <= DENSE_REFERENCE_LIMIT {
        oracle::reference_gain(g, kind)?
    } else {
        gain_series(
            g,
            kind,
            &GainParams::with_tolerance(REFERENCE_TOLERANCE),
            |_, _| {},
        )?
        .scores
    };
    let ref_norm = norm2(&reference);
    let mut trace = ConvergenceTrace::default();
    let result = gain_series(g, kind, params, |k, partial| {
        let err = dist2(&reference, partial);
        let eps = if ref_norm > 0.0 { err / ref_norm } else { err };
        trace.errors.push((k, eps));
    })?;
    Ok((result, trace))
}
