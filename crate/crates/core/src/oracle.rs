//! Dense brute-force references for graphs of at most [`DENSE_LIMIT`] nodes.
//!
//! Everything here works on explicit `n × n` matrices and matrix powers, with
//! no shared code path with the sparse kernels it is used to check.

use crate::gain::GainKind;
use crate::{Error, Graph, Result};

pub const DENSE_LIMIT: usize = 64;

/// Off-diagonal Frobenius norm at which cyclic Jacobi stops.
pub const JACOBI_TOLERANCE: f64 = 1e-12;

/// Relative size of the dropped tail at which [`reference_gain`] stops.
const REFERENCE_TAIL: f64 = 1e-17;

#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    n: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn mul(&self, other: &DenseMatrix) -> DenseMatrix {
        let n = self.n;
        let mut out = DenseMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self[(i, j)] * x[j]).sum())
            .collect()
    }

    pub fn scale(&mut self, s: f64) {
        for v in &mut self.data {
            *v *= s;
        }
    }

    pub fn row_sums(&self) -> Vec<f64> {
        self.mul_vec(&vec![1.0; self.n])
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }
}

impl std::ops::Index<(usize, usize)> for DenseMatrix {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.n + j]
    }
}

fn guard(g: &Graph) -> Result<usize> {
    let n = g.node_count();
    if n > DENSE_LIMIT {
        return Err(Error::TooLarge {
            nodes: n,
            limit: DENSE_LIMIT,
        });
    }
    Ok(n)
}

pub fn dense_adjacency(g: &Graph) -> Result<DenseMatrix> {
    let n = guard(g)?;
    let mut a = DenseMatrix::zeros(n);
    for (i, j) in g.edges() {
        a[(i, j)] = 1.0;
        a[(j, i)] = 1.0;
    }
    Ok(a)
}

/// `A^k`: entry `(i, j)` counts the walks of length `k` from `i` to `j`.
pub fn walk_count(g: &Graph, k: usize) -> Result<DenseMatrix> {
    let a = dense_adjacency(g)?;
    let mut p = DenseMatrix::identity(a.size());
    for _ in 0..k {
        p = p.mul(&a);
    }
    Ok(p)
}

/// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations,
/// sorted descending.
pub fn jacobi_eigenvalues(m: &DenseMatrix) -> Vec<f64> {
    let n = m.size();
    let mut a = m.clone();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[(i, j)] * a[(i, j)])
            .sum::<f64>()
            .sqrt();
        if off < JACOBI_TOLERANCE {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[(i, i)]).collect();
    ev.sort_by(|x, y| y.total_cmp(x));
    ev
}

/// Largest eigenvalue of the adjacency matrix.
pub fn spectral_radius(g: &Graph) -> Result<f64> {
    let a = dense_adjacency(g)?;
    let ev = jacobi_eigenvalues(&a);
    Ok(ev.iter().fold(0.0f64, |m, v| m.max(v.abs())))
}

/// `Σ_{k=1}^{k_max} φ(k) A^k × 1` through dense matrix powers.
///
/// Carries `T_k = φ(k) A^k` rather than `A^k` so large spectra do not
/// overflow before the decay catches up.
pub fn oracle_gain(g: &Graph, kind: GainKind, k_max: usize) -> Result<Vec<f64>> {
    Ok(dense_gain(g, kind, Some(k_max))?.0)
}

/// [`oracle_gain`] with `k_max` chosen so the dropped tail is below `1e-17`
/// of the sum. Returns the vector only.
pub fn reference_gain(g: &Graph, kind: GainKind) -> Result<Vec<f64>> {
    Ok(dense_gain(g, kind, None)?.0)
}

/// Returns the sum and the number of terms used.
pub fn dense_gain(g: &Graph, kind: GainKind, k_max: Option<usize>) -> Result<(Vec<f64>, usize)> {
    let a = dense_adjacency(g)?;
    let n = a.size();
    if k_max == Some(0) {
        return Ok((vec![0.0; n], 0));
    }
    let lambda1 = spectral_radius(g)?;
    if let GainKind::Geometric(d) = kind {
        if d.delta() * lambda1 >= 1.0 {
            return Err(Error::InvalidParameter(format!(
                "delta {} diverges for lambda1 = {lambda1}",
                d.delta()
            )));
        }
    }
    let mut term = a.clone();
    let mut sum = vec![0.0; n];
    let mut k = 1;
    loop {
        let contribution = term.row_sums();
        for (s, c) in sum.iter_mut().zip(&contribution) {
            *s += c;
        }
        if k_max == Some(k) {
            break;
        }
        if k_max.is_none() {
            let c_norm = contribution.iter().map(|x| x * x).sum::<f64>().sqrt();
            let s_norm = sum.iter().map(|x| x * x).sum::<f64>().sqrt();
            // bound the remaining tail by a geometric series in the next ratio
            let next_ratio = match kind {
                GainKind::Geometric(d) => d.delta() * lambda1,
                GainKind::Exponential => lambda1 / k as f64,
            };
            if s_norm == 0.0
                || (next_ratio < 1.0
                    && c_norm * next_ratio / (1.0 - next_ratio) < REFERENCE_TAIL * s_norm)
            {
                break;
            }
            if k > 100_000 {
                return Err(Error::InvalidParameter(
                    "dense reference did not settle".into(),
                ));
            }
        }
        k += 1;
        term = term.mul(&a);
        // φ(k)/φ(k−1)
        term.scale(match kind {
            GainKind::Geometric(d) => d.delta(),
            GainKind::Exponential => 1.0 / (k - 1) as f64,
        });
    }
    Ok((sum, k))
}

/// Gaussian elimination with partial pivoting.
pub fn solve(m: &DenseMatrix, b: &[f64]) -> Result<Vec<f64>> {
    let n = m.size();
    if b.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: b.len(),
        });
    }
    let mut a = m.clone();
    let mut x = b.to_vec();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[(i, col)].abs().total_cmp(&a[(j, col)].abs()))
            .unwrap();
        if a[(pivot, col)].abs() < 1e-300 {
            return Err(Error::InvalidParameter("singular system".into()));
        }
        if pivot != col {
            for j in 0..n {
                let tmp = a[(col, j)];
                a[(col, j)] = a[(pivot, j)];
                a[(pivot, j)] = tmp;
            }
            x.swap(col, pivot);
        }
        for i in col + 1..n {
            let f = a[(i, col)] / a[(col, col)];
            if f == 0.0 {
                continue;
            }
            for j in col..n {
                a[(i, j)] -= f * a[(col, j)];
            }
            x[i] -= f * x[col];
        }
    }
    for i in (0..n).rev() {
        let mut s = x[i];
        for j in i + 1..n {
            s -= a[(i, j)] * x[j];
        }
        x[i] = s / a[(i, i)];
    }
    Ok(x)
}

/// Katz vector by solving `(I − δA) x = 1`.
pub fn dense_katz(g: &Graph, delta: f64) -> Result<Vec<f64>> {
    let a = dense_adjacency(g)?;
    let n = a.size();
    let mut m = DenseMatrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] -= delta * a[(i, j)];
        }
    }
    solve(&m, &vec![1.0; n])
}

/// PageRank by solving `(I − α Pᵀ) p = (1 − α)/n · 1` with `P = D⁻¹A`.
pub fn dense_pagerank(g: &Graph, alpha: f64) -> Result<Vec<f64>> {
    let a = dense_adjacency(g)?;
    let n = a.size();
    let deg = a.row_sums();
    let mut m = DenseMatrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            // (Pᵀ)_ij = P_ji = A_ji / d_j; dangling columns teleport uniformly
            let p_ji = if deg[j] > 0.0 {
                a[(j, i)] / deg[j]
            } else {
                1.0 / n as f64
            };
            m[(i, j)] -= alpha * p_ji;
        }
    }
    let mut p = solve(&m, &vec![(1.0 - alpha) / n as f64; n])?;
    let total: f64 = p.iter().sum();
    for v in &mut p {
        *v /= total;
    }
    Ok(p)
}

/// `exp(A) × 1` by the dense Taylor series, carrying `A^k / k!`.
pub fn dense_communicability(g: &Graph) -> Result<Vec<f64>> {
    let a = dense_adjacency(g)?;
    let n = a.size();
    let lambda1 = spectral_radius(g)?;
    let mut term = DenseMatrix::identity(n);
    let mut sum = vec![0.0; n];
    let mut k = 0usize;
    loop {
        let c = term.row_sums();
        for (s, v) in sum.iter_mut().zip(&c) {
            *s += v;
        }
        let c_norm = c.iter().map(|x| x * x).sum::<f64>().sqrt();
        let s_norm = sum.iter().map(|x| x * x).sum::<f64>().sqrt();
        let r = lambda1 / (k + 1) as f64;
        if r < 1.0 && c_norm * r / (1.0 - r) < REFERENCE_TAIL * s_norm {
            break;
        }
        k += 1;
        term = term.mul(&a);
        term.scale(1.0 / k as f64);
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gain::Decay;
    use crate::graph::parse_edge_list_str;
    use std::f64::consts::E;

    fn k3() -> Graph {
        parse_edge_list_str("a b\nb c\nc a").unwrap()
    }

    #[test]
    fn adjacency_examples() {
        let a = dense_adjacency(&k3()).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(a[(i, j)], if i == j { 0.0 } else { 1.0 });
            }
        }
        let p2 = dense_adjacency(&parse_edge_list_str("a b").unwrap()).unwrap();
        assert_eq!(p2.data, vec![0.0, 1.0, 1.0, 0.0]);
        let star = dense_adjacency(&parse_edge_list_str("c 1\nc 2\nc 3\nc 4").unwrap()).unwrap();
        assert_eq!(&star.data[..5], &[0.0, 1.0, 1.0, 1.0, 1.0]);
        assert!(star.is_symmetric());
    }

    #[test]
    fn size_guard() {
        let g = Graph::from_edges((0..DENSE_LIMIT).map(|i| (i, i + 1)));
        assert!(matches!(dense_adjacency(&g), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn walk_counts() {
        let w = walk_count(&k3(), 2).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(w[(i, j)], if i == j { 2.0 } else { 1.0 });
            }
        }
        let p2 = parse_edge_list_str("a b").unwrap();
        assert_eq!(walk_count(&p2, 3).unwrap().data, vec![0.0, 1.0, 1.0, 0.0]);
        assert_eq!(walk_count(&k3(), 0).unwrap(), DenseMatrix::identity(3));
        assert_eq!(
            walk_count(&k3(), 1).unwrap(),
            dense_adjacency(&k3()).unwrap()
        );
    }

    #[test]
    fn jacobi_on_known_spectra() {
        let ev = jacobi_eigenvalues(&dense_adjacency(&k3()).unwrap());
        assert!((ev[0] - 2.0).abs() < 1e-12);
        assert!((ev[1] + 1.0).abs() < 1e-12 && (ev[2] + 1.0).abs() < 1e-12);
        let star = parse_edge_list_str("c 1\nc 2\nc 3\nc 4").unwrap();
        assert!((spectral_radius(&star).unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn closed_form_gains() {
        let d = Decay::new(0.25, 2.0).unwrap();
        for v in reference_gain(&k3(), GainKind::Geometric(d)).unwrap() {
            assert!((v - 4.0).abs() < 1e-12);
        }
        for v in reference_gain(&k3(), GainKind::Exponential).unwrap() {
            assert!((v - 2.0 * E * E).abs() < 1e-12);
        }
        // k_max = 2 on K3: 2 + 0.25·4
        assert_eq!(
            oracle_gain(&k3(), GainKind::Geometric(d), 2).unwrap(),
            vec![3.0; 3]
        );
    }

    #[test]
    fn divergent_delta_rejected() {
        // Decay built against a wrong λ₁ must still be caught here
        let d = Decay::new(0.6, 1.0).unwrap();
        assert!(reference_gain(&k3(), GainKind::Geometric(d)).is_err());
    }

    #[test]
    fn baseline_references_on_k3() {
        for v in dense_katz(&k3(), 0.25).unwrap() {
            assert!((v - 2.0).abs() < 1e-14);
        }
        for v in dense_pagerank(&k3(), 0.85).unwrap() {
            assert!((v - 1.0 / 3.0).abs() < 1e-14);
        }
        for v in dense_communicability(&k3()).unwrap() {
            assert!((v - E * E).abs() < 1e-12);
        }
    }
}
