//! The decay `δᶜ(λ) = (1 − e^−λ)/λ` at which the geometric and exponential
//! gains agree on an eigencomponent with eigenvalue `λ`.
//!
//! On a regular graph the all-ones vector is the principal eigenvector, so
//! GPG at `δᶜ(λ₁)` reproduces EPG exactly. Elsewhere other components pull
//! the two apart.
//!
//! ```bash
//! cargo run --example crossover
//! ```

use potential_gain::gain::{self, Decay, GainParams};
use potential_gain::{generators, spectral, Graph, Result};

fn compare(name: &str, g: &Graph) -> Result<()> {
    let params = GainParams::with_tolerance(1e-14);
    let lambda1 = spectral::power_iteration(g, 1e-12, 100_000)?.lambda1;
    let dc = gain::crossover_delta(lambda1)?;
    let gpg = gain::geometric_potential_gain(g, Decay::new(dc, lambda1)?, &params)?;
    let epg = gain::exponential_potential_gain(g, &params)?;
    let worst = gpg
        .scores
        .iter()
        .zip(&epg.scores)
        .map(|(a, b)| ((a - b) / b).abs())
        .fold(0.0, f64::max);
    println!("{name:<12} lambda1 {lambda1:>8.4}  delta_c {dc:.9}  delta_c*lambda1 {:.4}  max |GPG/EPG - 1| {worst:.2e}", dc * lambda1);
    Ok(())
}

fn main() -> Result<()> {
    for lambda in [0.5, 1.0, 2.0, 5.0, 20.0] {
        println!(
            "delta_c({lambda:>4}) = {:.9}",
            gain::crossover_delta(lambda)?
        );
    }
    println!();
    compare("K3", &generators::complete(3)?)?;
    compare("C8", &generators::ring(8)?)?;
    compare("K5", &generators::complete(5)?)?;
    compare("star S6", &generators::star(6)?)?;
    compare("BA(200, 2)", &generators::barabasi_albert(200, 2, 1)?)?;
    Ok(())
}
