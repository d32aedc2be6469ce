//! Spectral radius by shifted power iteration, checked against a dense
//! Jacobi eigensolver. Bipartite graphs (paths, even cycles, stars, grids)
//! have `−λ₁` in their spectrum; the `A + I` shift keeps the iteration
//! convergent on them.
//!
//! ```bash
//! cargo run --example spectral_radius
//! ```

use potential_gain::{generators, oracle, spectral, Graph, Result};

fn main() -> Result<()> {
    let cases: Vec<(&str, Graph)> = vec![
        ("K5", generators::complete(5)?),
        ("C10 (bipartite)", generators::ring(10)?),
        ("S16 (bipartite)", generators::star(16)?),
        ("grid 6x7", generators::grid(6, 7)?),
        ("ER(50, 0.1)", generators::erdos_renyi(50, 0.1, 3)?),
        ("BA(60, 2)", generators::barabasi_albert(60, 2, 3)?),
    ];
    println!(
        "{:<16} {:>18} {:>18} {:>10} {:>6}",
        "graph", "power iteration", "jacobi", "residual", "iters"
    );
    for (name, g) in &cases {
        let est = spectral::power_iteration(g, 1e-12, 100_000)?;
        let dense = oracle::spectral_radius(g)?;
        println!(
            "{name:<16} {:>18.12} {dense:>18.12} {:>10.2e} {:>6}",
            est.lambda1, est.residual, est.iterations
        );
    }

    let ec = spectral::eigenvector_centrality(&generators::star(4)?, 1e-12, 10_000)?;
    println!("\neigenvector centrality of S4: {:.6?}", ec.scores);
    Ok(())
}
