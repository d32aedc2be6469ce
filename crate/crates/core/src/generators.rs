//! Deterministic synthetic graphs.
//!
//! Each generator returns the edge list in emission order; [`Graph`]s built
//! from it label nodes by their integer id. Random generators use ChaCha8
//! seeded from a `u64`, so output is stable across platforms and releases.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Error, Graph, Result};

pub type EdgeList = Vec<(usize, usize)>;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn complete_edges(n: usize) -> Result<EdgeList> {
    if n < 2 {
        return Err(Error::InvalidParameter(
            "complete graph needs n >= 2".into(),
        ));
    }
    Ok((0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect())
}

pub fn ring_edges(n: usize) -> Result<EdgeList> {
    if n < 3 {
        return Err(Error::InvalidParameter("ring needs n >= 3".into()));
    }
    Ok((0..n).map(|i| (i, (i + 1) % n)).collect())
}

/// Star with node 0 at the center and `leaves` leaves.
pub fn star_edges(leaves: usize) -> Result<EdgeList> {
    if leaves < 1 {
        return Err(Error::InvalidParameter(
            "star needs at least one leaf".into(),
        ));
    }
    Ok((1..=leaves).map(|i| (0, i)).collect())
}

/// `rows × cols` lattice, node `r·cols + c`.
pub fn grid_edges(rows: usize, cols: usize) -> Result<EdgeList> {
    if rows * cols < 2 {
        return Err(Error::InvalidParameter(
            "grid needs at least two nodes".into(),
        ));
    }
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols {
                edges.push((v, v + 1));
            }
            if r + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    Ok(edges)
}

/// Erdős–Rényi `G(n, p)` by geometric skipping over the `n(n−1)/2`
/// candidate pairs in row-major order, `O(n + m)` expected time.
///
/// Nodes left isolated do not appear in the edge list.
pub fn erdos_renyi_edges(n: usize, p: f64, seed: u64) -> Result<EdgeList> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "p must lie in [0, 1], got {p}"
        )));
    }
    let mut edges = Vec::new();
    if p == 0.0 || n < 2 {
        return Ok(edges);
    }
    if p == 1.0 {
        return complete_edges(n);
    }
    let mut rng = rng(seed);
    let log_q = (1.0 - p).ln();
    let (mut v, mut w): (usize, i64) = (1, -1);
    while v < n {
        let r: f64 = rng.gen();
        let skip = ((1.0 - r).ln() / log_q).floor() as i64;
        w += 1 + skip;
        while v < n && w >= v as i64 {
            w -= v as i64;
            v += 1;
        }
        if v < n {
            edges.push((w as usize, v));
        }
    }
    Ok(edges)
}

/// Preferential attachment.
///
/// Starts from a clique on `m0 + 1` nodes; every further node attaches to
/// `m0` distinct existing nodes drawn with probability proportional to their
/// current degree. The result has `m0(m0+1)/2 + (n − m0 − 1)·m0` edges.
pub fn barabasi_albert_edges(n: usize, m0: usize, seed: u64) -> Result<EdgeList> {
    if m0 < 1 || n <= m0 {
        return Err(Error::InvalidParameter(format!(
            "preferential attachment needs 1 <= m0 < n, got n = {n}, m0 = {m0}"
        )));
    }
    let mut rng = rng(seed);
    let mut edges = complete_edges(m0 + 1)?;
    // each node appears once per incident edge: uniform draws are degree-biased
    let mut endpoints: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    let mut targets = HashSet::with_capacity(m0);
    let mut chosen = Vec::with_capacity(m0);
    for v in m0 + 1..n {
        targets.clear();
        chosen.clear();
        while chosen.len() < m0 {
            let t = endpoints[rng.gen_range(0..endpoints.len())];
            if targets.insert(t) {
                chosen.push(t);
            }
        }
        for &t in &chosen {
            edges.push((t, v));
            endpoints.push(t);
            endpoints.push(v);
        }
    }
    Ok(edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    complete_edges(n).map(Graph::from_edges)
}

pub fn ring(n: usize) -> Result<Graph> {
    ring_edges(n).map(Graph::from_edges)
}

pub fn star(leaves: usize) -> Result<Graph> {
    star_edges(leaves).map(Graph::from_edges)
}

pub fn grid(rows: usize, cols: usize) -> Result<Graph> {
    grid_edges(rows, cols).map(Graph::from_edges)
}

pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph> {
    erdos_renyi_edges(n, p, seed).map(Graph::from_edges)
}

pub fn barabasi_albert(n: usize, m0: usize, seed: u64) -> Result<Graph> {
    barabasi_albert_edges(n, m0, seed).map(Graph::from_edges)
}

/// A hub with `leaves` pendant leaves and a tail `hub – p – q` ending in a
/// 4-clique `{q, a, b, c}`.
///
/// Every set of equal-degree nodes is an automorphism orbit (the leaves;
/// `a, b, c`), so any walk-based score ties exactly where degree ties. With
/// `leaves ≥ 5` the hub dominates the spectrum while the clique keeps the
/// ranking away from pure degree order at large decay.
pub fn star_plus_tail(leaves: usize) -> Result<Graph> {
    if leaves < 5 {
        return Err(Error::InvalidParameter(
            "star_plus_tail needs at least 5 leaves".into(),
        ));
    }
    let hub = 0;
    let p = leaves + 1;
    let q = leaves + 2;
    let (a, b, c) = (leaves + 3, leaves + 4, leaves + 5);
    let mut edges = star_edges(leaves)?;
    edges.extend([
        (hub, p),
        (p, q),
        (q, a),
        (q, b),
        (q, c),
        (a, b),
        (a, c),
        (b, c),
    ]);
    Ok(Graph::from_edges(edges))
}

/// Writes `u v` lines.
pub fn format_edge_list(edges: &[(usize, usize)]) -> String {
    use std::fmt::Write as _;
    let mut out = String::with_capacity(edges.len() * 12);
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
