//! On a d-regular graph every node has the same gain:
//! `d / (1 − δd)` for the geometric series and `d·e^d` for the exponential one.
//!
//! ```bash
//! cargo run --example closed_forms
//! ```

use potential_gain::gain::{self, Decay, GainParams};
use potential_gain::{generators, spectral, Result};

fn main() -> Result<()> {
    let params = GainParams::with_tolerance(1e-14);
    println!(
        "{:<10} {:>3} {:>6} {:>20} {:>20} {:>20} {:>20}",
        "graph", "d", "delta", "GPG", "d/(1-delta d)", "EPG", "d e^d"
    );
    let cases = [
        ("P2", generators::complete(2)?),
        ("K3", generators::complete(3)?),
        ("C12", generators::ring(12)?),
        ("K6", generators::complete(6)?),
    ];
    for (name, g) in cases {
        let d = g.degree(0) as f64;
        let lambda1 = spectral::power_iteration(&g, 1e-12, 10_000)?.lambda1;
        let decay = Decay::from_normalized(0.5, lambda1)?;
        let gpg = gain::geometric_potential_gain(&g, decay, &params)?;
        let epg = gain::exponential_potential_gain(&g, &params)?;
        let delta = decay.delta();
        println!(
            "{name:<10} {d:>3} {delta:>6.3} {:>20.12} {:>20.12} {:>20.12} {:>20.12}",
            gpg.scores[0],
            d / (1.0 - delta * d),
            epg.scores[0],
            d * d.exp()
        );
    }
    Ok(())
}
