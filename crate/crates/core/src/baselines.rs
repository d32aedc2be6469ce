//! Comparison centralities: degree, Katz, PageRank and the communicability
//! vector `exp(A) × 1`. Eigenvector centrality lives in [`crate::spectral`].

use crate::gain::{run_series, Decay, GainParams, StopReason};
use crate::vector::dist2;
use crate::{CentralityVector, Error, Graph, Metric, ParamSnapshot, Result};

pub const DEFAULT_ALPHA: f64 = 0.85;
pub const DEFAULT_TOLERANCE: f64 = 1e-12;
pub const DEFAULT_MAX_ITER: usize = 100_000;

pub fn degree_centrality(g: &Graph) -> CentralityVector {
    CentralityVector {
        metric: Metric::Deg,
        scores: g
            .degree_vector()
            .values
            .into_iter()
            .map(|d| d as f64)
            .collect(),
        params: ParamSnapshot::default(),
        iterations_used: 0,
        converged: true,
    }
}

/// Katz score `(I − δA)⁻¹ × 1` via the fixed point `x ← 1 + δA·x`, `x₀ = 1`.
///
/// Stops when `‖x_new − x‖₂ < tolerance · ‖x_new‖₂`. Every score is at least 1.
pub fn katz_centrality(
    g: &Graph,
    decay: Decay,
    tolerance: f64,
    max_iter: usize,
) -> Result<CentralityVector> {
    check_tolerance(tolerance, max_iter)?;
    let n = g.node_count();
    let mut x = vec![1.0; n];
    let mut next = vec![0.0; n];
    let mut converged = n == 0;
    let mut iterations = 0;
    while !converged && iterations < max_iter {
        iterations += 1;
        g.spmv_into(&x, decay.delta(), &mut next)?;
        for v in &mut next {
            *v += 1.0;
        }
        let change = dist2(&next, &x);
        let norm = crate::vector::norm2(&next);
        if !norm.is_finite() {
            return Err(Error::NonFinite { iterations });
        }
        std::mem::swap(&mut x, &mut next);
        converged = change < tolerance * norm;
    }
    if !converged {
        log::warn!("katz did not converge in {max_iter} iterations");
    }
    Ok(CentralityVector {
        metric: Metric::Katz,
        scores: x,
        params: ParamSnapshot {
            delta: Some(decay.delta()),
            delta_star: Some(decay.delta_star()),
            tolerance: Some(tolerance),
            ..Default::default()
        },
        iterations_used: iterations,
        converged,
    })
}

/// PageRank on the row-normalized adjacency `P = D⁻¹A`:
/// `p ← (1 − α)/n · 1 + α Pᵀ p`, starting from the uniform vector.
///
/// Stops when the L1 change drops below `tolerance`. Dangling nodes spread
/// their mass uniformly. The result is L1-normalized.
pub fn pagerank(
    g: &Graph,
    alpha: f64,
    tolerance: f64,
    max_iter: usize,
) -> Result<CentralityVector> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "alpha must lie in (0, 1), got {alpha}"
        )));
    }
    check_tolerance(tolerance, max_iter)?;
    let n = g.node_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let inv_deg: Vec<f64> = (0..n)
        .map(|i| match g.degree(i) {
            0 => 0.0,
            d => 1.0 / d as f64,
        })
        .collect();
    let mut p = vec![1.0 / n as f64; n];
    let mut scaled = vec![0.0; n];
    let mut next = vec![0.0; n];
    let mut iterations = 0;
    let mut converged = false;
    while iterations < max_iter {
        iterations += 1;
        let mut dangling = 0.0;
        for i in 0..n {
            scaled[i] = p[i] * inv_deg[i];
            if inv_deg[i] == 0.0 {
                dangling += p[i];
            }
        }
        // A is symmetric, so Pᵀp = A (D⁻¹ p)
        g.spmv_into(&scaled, alpha, &mut next)?;
        let base = (1.0 - alpha + alpha * dangling) / n as f64;
        let mut change = 0.0;
        for i in 0..n {
            next[i] += base;
            change += (next[i] - p[i]).abs();
        }
        std::mem::swap(&mut p, &mut next);
        if change < tolerance {
            converged = true;
            break;
        }
    }
    let total: f64 = p.iter().sum();
    for v in &mut p {
        *v /= total;
    }
    if !converged {
        log::warn!("pagerank did not converge in {max_iter} iterations");
    }
    Ok(CentralityVector {
        metric: Metric::Pr,
        scores: p,
        params: ParamSnapshot {
            alpha: Some(alpha),
            tolerance: Some(tolerance),
            ..Default::default()
        },
        iterations_used: iterations,
        converged,
    })
}

/// Communicability vector `exp(A) × 1 = Σ_{k≥0} A^k × 1 / k!`, by
/// `s₀ = 1`, `s_k = A s_{k−1} / k`, until the latest term's relative L2
/// contribution falls below `tolerance`.
pub fn communicability_vector(
    g: &Graph,
    tolerance: f64,
    max_iter: usize,
) -> Result<CentralityVector> {
    check_tolerance(tolerance, max_iter)?;
    let stop = GainParams {
        max_walk_length: Some(max_iter),
        tolerance,
    };
    let out = run_series(
        g,
        vec![1.0; g.node_count()],
        0,
        |k| 1.0 / k as f64,
        &stop,
        |_, _| {},
    )?;
    let converged = out.reason == StopReason::Tolerance;
    if !converged {
        log::warn!("communicability did not converge in {max_iter} terms");
    }
    Ok(CentralityVector {
        metric: Metric::Comm,
        scores: out.sum,
        params: ParamSnapshot {
            tolerance: Some(tolerance),
            ..Default::default()
        },
        iterations_used: out.last_index,
        converged,
    })
}

fn check_tolerance(tolerance: f64, max_iter: usize) -> Result<()> {
    if !(tolerance > 0.0 && tolerance.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "tolerance must be positive, got {tolerance}"
        )));
    }
    if max_iter == 0 {
        return Err(Error::InvalidParameter(
            "max_iter must be at least 1".into(),
        ));
    }
    Ok(())
}
