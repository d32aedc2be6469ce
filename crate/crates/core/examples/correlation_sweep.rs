//! Spearman rank correlation of GPG against the other centralities as the
//! normalized decay `δ⋆ = δλ₁` moves across (0, 1), followed by the full
//! pairwise matrix at `δ⋆ = 0.5`.
//!
//! ```bash
//! cargo run --release --example correlation_sweep [-- N SEED]
//! ```

use potential_gain::analysis::{self, correlation_matrix, Rho, SweepOptions};
use potential_gain::baselines;
use potential_gain::gain::{self, Decay, GainParams};
use potential_gain::{generators, spectral, Graph, Result};

fn sweep(name: &str, g: &Graph) -> Result<()> {
    let est = spectral::power_iteration(g, 1e-12, 100_000)?;
    let mut grid = vec![0.01];
    grid.extend(analysis::default_grid());
    grid.push(0.99);
    let result = analysis::delta_sweep(g, &est, &grid, &SweepOptions::default())?;
    println!("{name}: lambda1 = {:.4}", est.lambda1);
    println!(
        "{:>7} {:>8} {:>8} {:>8} {:>8} {:>8}",
        "ds", "deg", "ec", "pr", "katz", "epg"
    );
    let cell = |v: Option<f64>| v.map_or("-".into(), |x| format!("{x:.4}"));
    for r in &result.rows {
        println!(
            "{:>7} {:>8} {:>8} {:>8} {:>8} {:>8}",
            r.delta_star,
            cell(r.rho_deg),
            cell(r.rho_ec),
            cell(r.rho_pr),
            cell(r.rho_katz),
            cell(r.rho_epg)
        );
    }
    println!();
    Ok(())
}

fn main() -> Result<()> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (n, seed) = match args[..] {
        [n, seed] => (n as usize, seed),
        _ => (2000, 1),
    };
    sweep("star with tail", &generators::star_plus_tail(8)?)?;
    let g = generators::barabasi_albert(n, 3, seed)?;
    sweep(&format!("BA({n}, 3)"), &g)?;

    let est = spectral::power_iteration(&g, 1e-12, 100_000)?;
    let decay = Decay::from_normalized(0.5, est.lambda1)?;
    let params = GainParams::default();
    let vectors = [
        baselines::degree_centrality(&g),
        spectral::eigenvector_centrality_from(est, 1e-12),
        baselines::pagerank(&g, 0.85, 1e-12, 10_000)?,
        baselines::katz_centrality(&g, decay, 1e-12, 10_000)?,
        gain::geometric_potential_gain(&g, decay, &params)?,
        gain::exponential_potential_gain(&g, &params)?,
    ];
    let report = correlation_matrix(&vectors)?;
    print!("{:>6}", "");
    for m in &report.metric_names {
        print!("{m:>8}");
    }
    println!();
    for (m, row) in report.metric_names.iter().zip(&report.rho) {
        print!("{m:>6}");
        for r in row {
            match r {
                Rho::Value(v) => print!("{v:>8.4}"),
                Rho::Undefined(_) => print!("{:>8}", "-"),
            }
        }
        println!();
    }
    Ok(())
}
