//! Synthetic edge lists written to a directory, read back, and summarized.
//!
//! ```bash
//! cargo run --example generate_graphs [-- OUT_DIR]
//! ```

use std::fs::{self, File};
use std::io::BufReader;
use std::path::PathBuf;

use potential_gain::generators::{self, format_edge_list};
use potential_gain::graph::{parse_edge_list, ParseOptions};
use potential_gain::Result;

fn main() -> Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("pgain-graphs"));
    fs::create_dir_all(&dir)?;

    let families = [
        ("complete_8", generators::complete_edges(8)?),
        ("ring_20", generators::ring_edges(20)?),
        ("star_10", generators::star_edges(10)?),
        ("grid_5x8", generators::grid_edges(5, 8)?),
        (
            "er_500_0.01_s1",
            generators::erdos_renyi_edges(500, 0.01, 1)?,
        ),
        ("ba_500_3_s1", generators::barabasi_albert_edges(500, 3, 1)?),
    ];
    println!(
        "{:<16} {:>6} {:>6} {:>6} {:>6}",
        "file", "n", "m", "dmax", "loops"
    );
    for (name, edges) in families {
        let path = dir.join(format!("{name}.txt"));
        fs::write(&path, format_edge_list(&edges))?;
        let (g, report) =
            parse_edge_list(BufReader::new(File::open(&path)?), &ParseOptions::default())?;
        println!(
            "{name:<16} {:>6} {:>6} {:>6} {:>6}",
            g.node_count(),
            g.edge_count(),
            g.max_degree(),
            report.self_loops
        );
    }
    println!("\nwritten to {}", dir.display());
    Ok(())
}
