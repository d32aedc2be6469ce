//! Walk-based centralities on sparse undirected graphs.
//!
//! The crate computes the *Geometric Potential Gain* (GPG) and the
//! *Exponential Potential Gain* (EPG) of every node by truncated series
//! iteration over a compressed adjacency structure, one sparse
//! matrix-vector product per walk length:
//!
//! ```text
//! GPG = (A + δA² + δ²A³ + …) × 1          δ ∈ (0, 1/λ₁)
//! EPG = (A + A² + A³/2! + A⁴/3! + …) × 1  = A × exp(A) × 1
//! ```
//!
//! Alongside them live the comparison centralities (degree, eigenvector,
//! PageRank, Katz, communicability), a dense brute-force oracle for small
//! graphs, convergence traces and Spearman rank-correlation analytics.
//!
//! ```
//! use potential_gain::{gain, generators, spectral};
//!
//! let g = generators::complete(3).unwrap();
//! let est = spectral::power_iteration(&g, 1e-10, 10_000).unwrap();
//! let decay = gain::Decay::from_normalized(0.5, est.lambda1).unwrap();
//! let gpg = gain::geometric_potential_gain(&g, decay, &gain::GainParams::default()).unwrap();
//! assert!((gpg.scores[0] - 4.0).abs() < 1e-9);
//! ```
//!
//! ## Examples
//!
//! - **`closed_forms`** - gains on regular graphs next to their closed forms
//! - **`spectral_radius`** - power iteration against a dense eigensolver
//! - **`centralities`** - every metric side by side on one small graph
//! - **`crossover`** - the decay where geometric and exponential gains meet
//! - **`convergence_trace`** - truncation error per walk length
//! - **`correlation_sweep`** - Spearman ρ of GPG across the decay range
//! - **`generate_graphs`** - seeded synthetic edge lists
//! - **`load_edge_list`** - KONECT-style input and top-ranked nodes
//! - **`scalability`** - time per sparse product as the graph grows
//!
//! ```bash
//! cargo run --release --example convergence_trace
//! cargo run --release --example load_edge_list -- path/to/out.edges
//! ```
//!
//! The `pgain` binary wraps the same operations for the shell; see
//! [`cli`].

pub mod analysis;
pub mod baselines;
pub mod centrality;
pub mod cli;
mod error;
pub mod gain;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod spectral;
mod vector;

pub use centrality::{CentralityVector, Metric, ParamSnapshot};
pub use error::{Error, Result};
pub use graph::Graph;
