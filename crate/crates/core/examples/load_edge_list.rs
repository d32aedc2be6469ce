//! Loads a KONECT-style edge list (whitespace separated, `%` comments,
//! extra columns ignored) and prints the graph summary and top nodes by
//! each gain.
//!
//! ```bash
//! cargo run --release --example load_edge_list -- out.facebook-wosn-links
//! ```
//!
//! Without an argument a small inline file is used.

use std::fs::File;
use std::io::BufReader;

use potential_gain::gain::{self, Decay, GainParams};
use potential_gain::graph::{parse_edge_list, ParseOptions};
use potential_gain::{spectral, CentralityVector, Graph, Result};

const SAMPLE: &str = "\
% sym unweighted
% 12 5 5
alice bob 1 1262304000
bob carol
carol alice
carol dave
dave erin
erin erin
bob alice
frank carol
";

fn top(g: &Graph, v: &CentralityVector, k: usize) {
    let mut order: Vec<usize> = (0..g.node_count()).collect();
    order.sort_by(|&a, &b| v.scores[b].total_cmp(&v.scores[a]));
    let names: Vec<String> = order
        .iter()
        .take(k)
        .map(|&i| format!("{} ({:.4e})", g.label(i), v.scores[i]))
        .collect();
    println!("{:>4}: {}", v.metric.name(), names.join(", "));
}

fn main() -> Result<()> {
    let (g, report) = match std::env::args().nth(1) {
        Some(path) => parse_edge_list(BufReader::new(File::open(path)?), &ParseOptions::default())?,
        None => parse_edge_list(SAMPLE.as_bytes(), &ParseOptions::default())?,
    };
    println!(
        "{} lines, {} nodes, {} edges, {} self-loops dropped, {} duplicates collapsed",
        report.lines,
        g.node_count(),
        g.edge_count(),
        report.self_loops,
        report.duplicate_edges
    );
    let est = spectral::power_iteration(&g, 1e-10, 100_000)?;
    println!(
        "lambda1 = {:.4} ({} iterations)",
        est.lambda1, est.iterations
    );

    let params = GainParams::default();
    let decay = Decay::from_normalized(0.5, est.lambda1)?;
    top(&g, &gain::geometric_potential_gain(&g, decay, &params)?, 5);
    top(&g, &gain::exponential_potential_gain(&g, &params)?, 5);
    Ok(())
}
