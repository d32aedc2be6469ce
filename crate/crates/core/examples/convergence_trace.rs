//! Truncation error `ε(k)` against walk length on a preferential-attachment
//! graph. The geometric error falls like `(δλ₁)^k`; the exponential one
//! like a Poisson tail in `λ₁`.
//!
//! ```bash
//! cargo run --release --example convergence_trace [-- N M0 SEED]
//! ```

use potential_gain::analysis::convergence_report;
use potential_gain::gain::GainParams;
use potential_gain::{generators, spectral, Metric, Result};

fn main() -> Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (n, m0, seed) = match args[..] {
        [n, m0, seed] => (n, m0, seed as u64),
        _ => (1000, 3, 1),
    };
    let g = generators::barabasi_albert(n, m0, seed)?;
    let lambda1 = spectral::power_iteration(&g, 1e-12, 100_000)?.lambda1;
    let k_max = (2.0 * std::f64::consts::E * lambda1).ceil() as usize;
    println!("BA({n}, {m0}), seed {seed}: lambda1 = {lambda1:.6}, 2e*lambda1 = {k_max}\n");

    let delta_stars = [0.25, 0.5, 0.75];
    let traces = convergence_report(
        &g,
        lambda1,
        &[Metric::Gpg, Metric::Epg],
        &delta_stars,
        &GainParams::truncated(k_max),
    )?;

    print!("{:>4}", "k");
    for t in &traces {
        match t.delta_star {
            Some(ds) => print!("{:>14}", format!("gpg ds={ds}")),
            None => print!("{:>14}", "epg"),
        }
    }
    println!();
    for k in (1..=k_max).filter(|k| *k <= 10 || k % 5 == 0) {
        print!("{k:>4}");
        for t in &traces {
            match t.trace.epsilon(k) {
                Some(e) => print!("{e:>14.3e}"),
                None => print!("{:>14}", "-"),
            }
        }
        println!();
    }

    println!();
    for t in &traces {
        let label = t
            .delta_star
            .map_or("epg".to_string(), |ds| format!("gpg ds={ds}"));
        let slope = t.trace.log_slope(5, 20).unwrap_or(f64::NAN);
        let hit = t
            .trace
            .first_below(1e-6)
            .map_or("-".into(), |k| k.to_string());
        println!(
            "{label:<12} slope of ln eps over k=5..20: {slope:>8.4}   eps <= 1e-6 from k = {hit}"
        );
    }
    for ds in delta_stars {
        println!("ln({ds}) = {:.4}", f64::ln(ds));
    }
    Ok(())
}
