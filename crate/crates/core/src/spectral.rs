//! Spectral radius and principal eigenvector by shifted power iteration.
//!
//! The iteration runs on `A + I` rather than `A`. On bipartite graphs the
//! spectrum of `A` is symmetric, so `-λ₁` has the same magnitude as `λ₁` and
//! plain power iteration oscillates forever; the unit shift makes `λ₁ + 1`
//! strictly dominant for any graph with at least one edge.

use crate::vector::{dot, norm2};
use crate::{CentralityVector, Error, Graph, Metric, ParamSnapshot, Result};

pub const DEFAULT_TOLERANCE: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 10_000;

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralEstimate {
    /// Rayleigh quotient `vᵀAv` at the final iterate.
    pub lambda1: f64,
    /// Unit-L2, entrywise nonnegative.
    pub eigenvector: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
    /// `‖Av − λ₁v‖₂`.
    pub residual: f64,
}

/// Estimates `λ₁` and its eigenvector.
///
/// Stops once the relative change of the Rayleigh quotient drops below
/// `tol` *and* the residual `‖Av − λ₁v‖₂` is within `tol · max(λ₁, 1)`.
pub fn power_iteration(g: &Graph, tol: f64, max_iter: usize) -> Result<SpectralEstimate> {
    let n = g.node_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "tol must be positive, got {tol}"
        )));
    }
    if max_iter == 0 {
        return Err(Error::InvalidParameter(
            "max_iter must be at least 1".into(),
        ));
    }

    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut ax = vec![0.0; n];
    let mut prev_rq = f64::NAN;
    let mut rq = 0.0;
    let mut residual = f64::INFINITY;
    let mut converged = false;
    let mut iterations = 0;

    while iterations < max_iter {
        iterations += 1;
        g.spmv_into(&x, 1.0, &mut ax)?;
        rq = dot(&x, &ax);
        residual = residual_norm(&ax, &x, rq);

        let rq_change = (rq - prev_rq).abs();
        if rq_change <= tol * rq.abs().max(f64::MIN_POSITIVE) && residual <= tol * rq.max(1.0) {
            converged = true;
            break;
        }
        if rq == 0.0 && residual == 0.0 {
            // edgeless graph: A = 0, every vector is an eigenvector
            converged = true;
            break;
        }
        prev_rq = rq;

        // x ← (A + I)x / ‖(A + I)x‖
        for (xi, &axi) in x.iter_mut().zip(&ax) {
            *xi += axi;
        }
        let norm = norm2(&x);
        for xi in &mut x {
            *xi /= norm;
        }
    }

    if !converged {
        // report diagnostics for the vector actually returned
        g.spmv_into(&x, 1.0, &mut ax)?;
        rq = dot(&x, &ax);
        residual = residual_norm(&ax, &x, rq);
        log::warn!(
            "power iteration did not converge in {max_iter} iterations (residual {residual:.3e})"
        );
    }

    Ok(SpectralEstimate {
        lambda1: rq,
        eigenvector: x,
        iterations,
        converged,
        residual,
    })
}

fn residual_norm(ax: &[f64], x: &[f64], lambda: f64) -> f64 {
    ax.iter()
        .zip(x)
        .map(|(a, v)| (a - lambda * v) * (a - lambda * v))
        .sum::<f64>()
        .sqrt()
}

/// Eigenvector centrality: the principal eigenvector, unit L2 norm.
pub fn eigenvector_centrality(g: &Graph, tol: f64, max_iter: usize) -> Result<CentralityVector> {
    Ok(eigenvector_centrality_from(
        power_iteration(g, tol, max_iter)?,
        tol,
    ))
}

/// Wraps an existing estimate as an EC vector, avoiding a second iteration.
pub fn eigenvector_centrality_from(est: SpectralEstimate, tol: f64) -> CentralityVector {
    CentralityVector {
        metric: Metric::Ec,
        scores: est.eigenvector,
        params: ParamSnapshot {
            tolerance: Some(tol),
            ..Default::default()
        },
        iterations_used: est.iterations,
        converged: est.converged,
    }
}
