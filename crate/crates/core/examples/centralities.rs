//! Every centrality on one small graph: a hub with eight leaves, joined by a
//! two-edge tail to a 4-clique.
//!
//! ```bash
//! cargo run --example centralities
//! ```

use potential_gain::baselines;
use potential_gain::gain::{self, Decay, GainParams};
use potential_gain::{generators, spectral, Result};

fn main() -> Result<()> {
    let g = generators::star_plus_tail(8)?;
    let est = spectral::power_iteration(&g, 1e-12, 10_000)?;
    let decay = Decay::from_normalized(0.5, est.lambda1)?;
    let params = GainParams::default();
    println!(
        "n = {}, m = {}, lambda1 = {:.6}, delta = {:.6}\n",
        g.node_count(),
        g.edge_count(),
        est.lambda1,
        decay.delta()
    );

    let columns = [
        baselines::degree_centrality(&g),
        spectral::eigenvector_centrality_from(est, 1e-12),
        baselines::pagerank(&g, baselines::DEFAULT_ALPHA, 1e-12, 10_000)?,
        baselines::katz_centrality(&g, decay, 1e-12, 10_000)?,
        gain::geometric_potential_gain(&g, decay, &params)?,
        gain::exponential_potential_gain(&g, &params)?,
        baselines::communicability_vector(&g, 1e-12, 10_000)?,
    ];
    print!("{:>5}", "node");
    for c in &columns {
        print!("{:>12}", c.metric.name());
    }
    println!();
    for i in 0..g.node_count() {
        print!("{:>5}", g.label(i));
        for c in &columns {
            print!("{:>12.5}", c.scores[i]);
        }
        println!();
    }
    println!();
    for c in &columns {
        println!(
            "{:>5}: {} iterations, converged = {}",
            c.metric.name(),
            c.iterations_used,
            c.converged
        );
    }
    Ok(())
}
