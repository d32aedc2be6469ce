use proptest::prelude::*;

use potential_gain::analysis::spearman_rho;
use potential_gain::baselines;
use potential_gain::gain::{self, Decay, GainKind, GainParams};
use potential_gain::graph::{parse_edge_list_str, ParseOptions};
use potential_gain::oracle;
use potential_gain::spectral;
use potential_gain::Graph;

fn edges(max_nodes: usize, max_edges: usize) -> impl Strategy<Value = Vec<(usize, usize)>> {
    (2..=max_nodes).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 1..=max_edges)
            .prop_filter("needs one non-loop edge", |e| e.iter().any(|(a, b)| a != b))
    })
}

fn graph(max_nodes: usize, max_edges: usize) -> impl Strategy<Value = Graph> {
    edges(max_nodes, max_edges).prop_map(Graph::from_edges)
}

fn lambda1(g: &Graph) -> f64 {
    spectral::power_iteration(g, 1e-13, 100_000)
        .unwrap()
        .lambda1
}

fn assert_rel(a: &[f64], b: &[f64], tol: f64) -> Result<(), TestCaseError> {
    prop_assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().zip(b) {
        prop_assert!(((x - y) / y).abs() <= tol, "{} vs {}", x, y);
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn spmv_is_symmetric(
        g in graph(100, 300),
        seed in any::<u64>(),
    ) {
        let n = g.node_count();
        // cheap deterministic vectors in [-1, 1]
        let vec_from = |s: u64| -> Vec<f64> {
            (0..n as u64)
                .map(|i| {
                    let h = (i ^ s).wrapping_mul(0x9E37_79B9_7F4A_7C15).rotate_left(17);
                    (h >> 11) as f64 / (1u64 << 53) as f64 * 2.0 - 1.0
                })
                .collect()
        };
        let x = vec_from(seed);
        let y = vec_from(seed.wrapping_add(1));
        let ax = g.spmv(&x, 1.0).unwrap();
        let ay = g.spmv(&y, 1.0).unwrap();
        let lhs: f64 = y.iter().zip(&ax).map(|(a, b)| a * b).sum();
        let rhs: f64 = x.iter().zip(&ay).map(|(a, b)| a * b).sum();
        let scale: f64 = y.iter().zip(&ax).map(|(a, b)| (a * b).abs()).sum::<f64>().max(1.0);
        prop_assert!((lhs - rhs).abs() <= 1e-12 * scale);
    }

    #[test]
    fn spmv_of_ones_is_degree(g in graph(60, 200)) {
        let ones = vec![1.0; g.node_count()];
        let d: Vec<f64> = g.degree_vector().values.iter().map(|&d| d as f64).collect();
        prop_assert_eq!(g.spmv(&ones, 1.0).unwrap(), d);
    }

    #[test]
    fn canonical_edge_list_round_trips(g in graph(40, 120)) {
        let text = g.to_canonical_edge_list();
        let back = parse_edge_list_str(&text).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn parse_is_insensitive_to_duplicates_and_loops(e in edges(20, 60)) {
        let mut text = String::new();
        for (a, b) in &e {
            text.push_str(&format!("{a} {b}\n{b} {a}\n{a} {a}\n"));
        }
        let (g, report) = potential_gain::graph::parse_edge_list(text.as_bytes(), &ParseOptions::default()).unwrap();
        prop_assert_eq!(&g, &Graph::from_edges(e.iter().copied()));
        prop_assert_eq!(report.self_loops, e.len() + e.iter().filter(|(a, b)| a == b).count() * 2);
    }

    #[test]
    fn spearman_is_symmetric_and_rank_invariant(
        pairs in prop::collection::vec((-1e3f64..1e3, -1e3f64..1e3), 3..40),
    ) {
        let a: Vec<f64> = pairs.iter().map(|p| p.0).collect();
        let b: Vec<f64> = pairs.iter().map(|p| p.1).collect();
        let (Ok(ab), Ok(ba)) = (spearman_rho(&a, &b), spearman_rho(&b, &a)) else {
            return Ok(());
        };
        prop_assert_eq!(ab, ba);
        prop_assert!((-1.0..=1.0).contains(&ab));
        let warped: Vec<f64> = a.iter().map(|x| (x / 100.0).exp() + 3.0 * x).collect();
        prop_assert!((spearman_rho(&warped, &b).unwrap() - ab).abs() < 1e-12);
    }

    #[test]
    fn sparse_gains_match_dense_oracle(g in graph(30, 80), ds in 0.05f64..0.95) {
        let decay = Decay::from_normalized(ds, lambda1(&g)).unwrap();
        let params = GainParams::with_tolerance(1e-15);
        let gpg = gain::geometric_potential_gain(&g, decay, &params).unwrap();
        let (want, _) = oracle::dense_gain(&g, GainKind::Geometric(decay), None).unwrap();
        assert_rel(&gpg.scores, &want, 1e-9)?;
        let epg = gain::exponential_potential_gain(&g, &params).unwrap();
        let (want, _) = oracle::dense_gain(&g, GainKind::Exponential, None).unwrap();
        assert_rel(&epg.scores, &want, 1e-9)?;
    }

    #[test]
    fn truncated_gain_matches_dense_powers(g in graph(25, 60), k in 1usize..25) {
        let decay = Decay::from_normalized(0.5, lambda1(&g)).unwrap();
        let gpg = gain::geometric_potential_gain(&g, decay, &GainParams::truncated(k)).unwrap();
        prop_assert_eq!(gpg.iterations_used, k);
        let want = oracle::oracle_gain(&g, GainKind::Geometric(decay), k).unwrap();
        assert_rel(&gpg.scores, &want, 1e-10)?;
    }

    #[test]
    fn gains_are_equivariant_under_relabeling(e in edges(25, 60), shift in 1usize..1000) {
        let g = Graph::from_edges(e.iter().copied());
        // reversed, shifted labels permute the first-seen interning order
        let h = Graph::from_edges(e.iter().rev().map(|&(a, b)| (b + shift, a + shift)));
        let l1 = lambda1(&g);
        prop_assert!((l1 - lambda1(&h)).abs() < 1e-9 * l1);
        let decay = Decay::from_normalized(0.5, l1).unwrap();
        let params = GainParams::with_tolerance(1e-14);
        for kind in [GainKind::Geometric(decay), GainKind::Exponential] {
            let sg = gain::potential_gain(&g, kind, &params).unwrap().scores;
            let sh = gain::potential_gain(&h, kind, &params).unwrap().scores;
            for (i, a) in sg.iter().enumerate() {
                let label: usize = g.label(i).parse().unwrap();
                let j = h.index_of(&(label + shift).to_string()).unwrap();
                prop_assert!(((a - sh[j]) / a).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn scores_are_positive(g in graph(40, 100)) {
        let decay = Decay::from_normalized(0.7, lambda1(&g)).unwrap();
        let params = GainParams::default();
        let gpg = gain::geometric_potential_gain(&g, decay, &params).unwrap();
        let epg = gain::exponential_potential_gain(&g, &params).unwrap();
        prop_assert!(gpg.scores.iter().all(|&s| s > 0.0));
        prop_assert!(epg.scores.iter().all(|&s| s > 0.0));
        let katz = baselines::katz_centrality(&g, decay, 1e-12, 100_000).unwrap();
        prop_assert!(katz.scores.iter().all(|&s| s >= 1.0));
        let pr = baselines::pagerank(&g, 0.85, 1e-13, 100_000).unwrap();
        prop_assert!((pr.scores.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn lambda1_is_bracketed_by_degrees(g in graph(50, 150)) {
        let est = spectral::power_iteration(&g, 1e-12, 100_000).unwrap();
        let degrees = g.degree_vector().values;
        let avg = degrees.iter().sum::<usize>() as f64 / degrees.len() as f64;
        prop_assert!(est.converged);
        prop_assert!(est.lambda1 >= avg - 1e-9);
        prop_assert!(est.lambda1 <= g.max_degree() as f64 + 1e-9);
    }
}
