use potential_gain::analysis::{self, correlation_matrix, spearman_rho, Rho, SweepOptions};
use potential_gain::baselines;
use potential_gain::gain::{self, GainParams};
use potential_gain::generators;
use potential_gain::oracle;
use potential_gain::spectral;
use potential_gain::{CentralityVector, Error, Graph, Metric};

fn all_metrics(g: &Graph) -> Vec<CentralityVector> {
    let est = spectral::power_iteration(g, 1e-12, 10_000).unwrap();
    let decay = gain::Decay::from_normalized(0.5, est.lambda1).unwrap();
    let params = GainParams::default();
    vec![
        baselines::degree_centrality(g),
        spectral::eigenvector_centrality_from(est, 1e-12),
        baselines::pagerank(g, 0.85, 1e-12, 10_000).unwrap(),
        baselines::katz_centrality(g, decay, 1e-12, 10_000).unwrap(),
        gain::geometric_potential_gain(g, decay, &params).unwrap(),
        gain::exponential_potential_gain(g, &params).unwrap(),
    ]
}

#[test]
fn spearman_examples() {
    assert_eq!(
        spearman_rho(&[1.0, 2.0, 3.0], &[10.0, 20.0, 30.0]).unwrap(),
        1.0
    );
    assert_eq!(
        spearman_rho(&[1.0, 2.0, 3.0], &[3.0, 2.0, 1.0]).unwrap(),
        -1.0
    );
    // 1 − 6·Σd²/(n(n²−1)) with Σd² = 4, n = 4
    let rho = spearman_rho(&[1.0, 2.0, 3.0, 4.0], &[2.0, 1.0, 4.0, 3.0]).unwrap();
    assert!((rho - (1.0 - 6.0 * 4.0 / 60.0)).abs() < 1e-12);
    assert!(matches!(
        spearman_rho(&[1.0], &[1.0]),
        Err(Error::InvalidParameter(_))
    ));
    assert!(matches!(
        spearman_rho(&[1.0, 2.0], &[1.0, 2.0, 3.0]),
        Err(Error::DimensionMismatch { .. })
    ));
    assert!(matches!(
        spearman_rho(&[5.0, 5.0, 5.0], &[1.0, 2.0, 3.0]),
        Err(Error::UndefinedCorrelation(_))
    ));
}

#[test]
fn degree_against_itself() {
    let g = generators::star(4).unwrap();
    let deg = baselines::degree_centrality(&g);
    let report = correlation_matrix(&[deg.clone(), deg]).unwrap();
    assert_eq!(report.rho, vec![vec![Rho::Value(1.0); 2]; 2]);
}

#[test]
fn regular_graph_correlations_are_undefined() {
    let g = generators::complete(3).unwrap();
    let report = correlation_matrix(&all_metrics(&g)).unwrap();
    assert_eq!(
        report.metric_names,
        ["deg", "ec", "epg", "gpg", "katz", "pr"]
    );
    for row in &report.rho {
        for r in row {
            assert!(matches!(r, Rho::Undefined(_)), "{r:?}");
        }
    }
}

#[test]
fn star_ranks_center_first_everywhere() {
    let g = generators::star(4).unwrap();
    let (epg, _) = oracle::dense_gain(&g, gain::GainKind::Exponential, None).unwrap();
    assert!(epg[0] > epg[1] && epg[1..].iter().all(|&x| x == epg[1]));
    let report = correlation_matrix(&all_metrics(&g)).unwrap();
    assert_eq!(report.get("deg", "epg"), Some(&Rho::Value(1.0)));
    for (i, row) in report.rho.iter().enumerate() {
        for (j, r) in row.iter().enumerate() {
            assert_eq!(r, &report.rho[j][i]);
            assert!((r.value().unwrap() - 1.0).abs() < 1e-12);
        }
    }
}

#[test]
fn matrix_is_symmetric_with_unit_diagonal() {
    let g = generators::barabasi_albert(300, 2, 5).unwrap();
    let report = correlation_matrix(&all_metrics(&g)).unwrap();
    for i in 0..report.rho.len() {
        assert_eq!(report.rho[i][i], Rho::Value(1.0));
        for j in 0..report.rho.len() {
            let v = report.rho[i][j].value().unwrap();
            assert_eq!(Some(v), report.rho[j][i].value());
            assert!((-1.0..=1.0).contains(&v));
        }
    }
}

#[test]
fn sweep_on_fixture() {
    let g = generators::star_plus_tail(8).unwrap();
    let est = spectral::power_iteration(&g, 1e-12, 10_000).unwrap();
    let grid = [0.01, 0.1, 0.5, 0.9, 0.99];
    let sweep = analysis::delta_sweep(&g, &est, &grid, &SweepOptions::default()).unwrap();
    assert!(sweep.converged);
    assert_eq!(sweep.rows.len(), grid.len());
    for row in &sweep.rows {
        assert!(row.rho_katz.unwrap() >= 0.999);
    }
    let first = &sweep.rows[0];
    let last = &sweep.rows[4];
    assert_eq!(first.rho_deg, Some(1.0));
    assert!(first.rho_deg.unwrap() >= last.rho_deg.unwrap());
    assert!(last.rho_ec.unwrap() >= 0.95);
}

#[test]
fn sweep_on_ring_is_all_undefined() {
    let g = generators::ring(8).unwrap();
    let est = spectral::power_iteration(&g, 1e-12, 10_000).unwrap();
    let sweep = analysis::delta_sweep(
        &g,
        &est,
        &analysis::default_grid(),
        &SweepOptions::default(),
    )
    .unwrap();
    assert_eq!(sweep.rows.len(), 9);
    for r in &sweep.rows {
        assert_eq!(
            [r.rho_deg, r.rho_ec, r.rho_pr, r.rho_katz, r.rho_epg],
            [None; 5]
        );
    }
}

#[test]
fn sweep_rejects_bad_grids() {
    let g = generators::star(4).unwrap();
    let est = spectral::power_iteration(&g, 1e-12, 10_000).unwrap();
    let opts = SweepOptions::default();
    for grid in [&[][..], &[0.5, 0.2], &[0.5, 1.0], &[0.0, 0.5]] {
        assert!(
            analysis::delta_sweep(&g, &est, grid, &opts).is_err(),
            "{grid:?}"
        );
    }
}

#[test]
fn convergence_report_examples() {
    let k3 = generators::complete(3).unwrap();
    let traces =
        analysis::convergence_report(&k3, 2.0, &[Metric::Gpg], &[0.5], &GainParams::truncated(30))
            .unwrap();
    let t = &traces[0].trace;
    assert!(t.epsilon(20).unwrap() < 1e-6);
    for k in 5..=20 {
        let ratio = t.epsilon(k + 1).unwrap() / t.epsilon(k).unwrap();
        assert!((ratio - 0.5).abs() < 0.01, "k = {k}: {ratio}");
    }

    let p2 = generators::complete(2).unwrap();
    let traces =
        analysis::convergence_report(&p2, 1.0, &[Metric::Epg], &[], &GainParams::truncated(40))
            .unwrap();
    let t = &traces[0].trace;
    assert_eq!(traces[0].delta_star, None);
    assert!(t.epsilon(15).unwrap() < 1e-10);
    assert!(t.first_below(1e-6).unwrap() <= 11);

    // run to the reference precision: the last error sits on the floor
    let (v, t) = gain::gain_with_trace(
        &p2,
        gain::GainKind::Exponential,
        &GainParams::with_tolerance(1e-17),
    )
    .unwrap();
    assert!(t.epsilon(v.iterations_used).unwrap() < 1e-15);
}

#[test]
fn convergence_report_rejects_baselines() {
    let g = generators::complete(3).unwrap();
    let r = analysis::convergence_report(&g, 2.0, &[Metric::Pr], &[0.5], &GainParams::default());
    assert!(r.is_err());
}

#[test]
fn one_trace_per_delta_star() {
    let g = generators::erdos_renyi(40, 0.1, 2).unwrap();
    let l1 = spectral::power_iteration(&g, 1e-12, 10_000)
        .unwrap()
        .lambda1;
    let traces = analysis::convergence_report(
        &g,
        l1,
        &[Metric::Gpg, Metric::Epg],
        &[0.25, 0.75],
        &GainParams::default(),
    )
    .unwrap();
    let labels: Vec<_> = traces.iter().map(|t| (t.metric, t.delta_star)).collect();
    assert_eq!(
        labels,
        [
            (Metric::Gpg, Some(0.25)),
            (Metric::Gpg, Some(0.75)),
            (Metric::Epg, None)
        ]
    );
    assert!(traces[0].iterations < traces[1].iterations);
}
