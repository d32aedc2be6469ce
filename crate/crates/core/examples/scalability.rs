//! Wall time per sparse product of the geometric gain as the graph grows.
//! Each product touches every edge twice, so time per iteration should
//! track `m`.
//!
//! ```bash
//! cargo run --release --example scalability
//! ```

use potential_gain::analysis::per_iteration_time;
use potential_gain::gain::Decay;
use potential_gain::{generators, spectral, Result};

fn main() -> Result<()> {
    println!(
        "{:>9} {:>10} {:>14} {:>12}",
        "n", "m", "per iter (ms)", "ns per edge"
    );
    let mut previous: Option<f64> = None;
    for n in [25_000, 50_000, 100_000, 200_000, 400_000] {
        let g = generators::barabasi_albert(n, 3, 1)?;
        let lambda1 = spectral::power_iteration(&g, 1e-8, 10_000)?.lambda1;
        let t = per_iteration_time(&g, Decay::from_normalized(0.5, lambda1)?, 20, 7)?.as_secs_f64();
        let growth = previous.map_or(String::new(), |p| format!("  x{:.2}", t / p));
        println!(
            "{n:>9} {:>10} {:>14.3} {:>12.2}{growth}",
            g.edge_count(),
            t * 1e3,
            t * 1e9 / g.edge_count() as f64
        );
        previous = Some(t);
    }
    Ok(())
}
