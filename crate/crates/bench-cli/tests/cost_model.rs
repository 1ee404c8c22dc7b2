use vdas_algebra::{by_label, toy_64};
use vdas_bench_cli::{
    all_schemes, cost_model_table, emit_figures, measure_primitives, predict_sign_time,
    predict_size_l, predict_verify_time, scheme_by_name, signing_figure_csv,
    verification_figure_csv, BenchError, OpTimings,
};

#[test]
fn sign_predictions_track_published_values_within_tolerance() {
    let timings = OpTimings::reference();
    for scheme in all_schemes() {
        let predicted = predict_sign_time(&scheme, &timings);
        let residual = scheme.published_sign_ms - predicted;
        assert!(
            residual.abs() < 0.2,
            "{}: predicted {predicted:.3}, published {:.3}",
            scheme.name,
            scheme.published_sign_ms
        );
        // the published numbers consistently sit slightly above the model
        assert!(residual > 0.0, "{}", scheme.name);
    }
}

#[test]
fn vdas_and_csz_spot_values() {
    let timings = OpTimings::reference();
    let vdas = scheme_by_name("VDAS").unwrap();
    let csz = scheme_by_name("CSZ").unwrap();
    assert!((predict_sign_time(&vdas, &timings) - 11.364).abs() < 1e-9);
    assert!((predict_sign_time(&csz, &timings) - 10.887).abs() < 1e-9);
    // n = 10: 3 pairings, 20 mults, 11 hashes
    assert!((predict_verify_time(&vdas, &timings, 10) - 90.904).abs() < 1e-9);
    // n = 1 instantiation: 3P + 2S + 2H
    let expected = 3.0 * timings.pairing_ms + 2.0 * timings.mult_ms + 2.0 * timings.hash_ms;
    assert!((predict_verify_time(&vdas, &timings, 1) - expected).abs() < 1e-12);
}

#[test]
fn zero_timings_predict_zero() {
    let zero = OpTimings {
        mult_ms: 0.0,
        hash_ms: 0.0,
        pairing_ms: 0.0,
    };
    for scheme in all_schemes() {
        assert_eq!(predict_sign_time(&scheme, &zero), 0.0);
        assert_eq!(predict_verify_time(&scheme, &zero, 17), 0.0);
    }
}

#[test]
fn signature_sizes_follow_the_affine_model() {
    let vdas = scheme_by_name("VDAS").unwrap();
    let csz = scheme_by_name("CSZ").unwrap();
    for n in [1, 10, 100] {
        assert_eq!(predict_size_l(&vdas, n), 2);
        assert_eq!(predict_size_l(&csz, n), n + 1);
    }
}

#[test]
fn csz_is_strictly_most_expensive_from_n_6_onward() {
    let timings = OpTimings::reference();
    let schemes = all_schemes();
    let csz = scheme_by_name("CSZ").unwrap();
    for n in 6..=100 {
        let csz_time = predict_verify_time(&csz, &timings, n);
        for other in schemes.iter().filter(|s| s.name != "CSZ") {
            assert!(
                csz_time > predict_verify_time(other, &timings, n),
                "n={n} vs {}",
                other.name
            );
        }
    }
}

#[test]
fn vdas_is_strictly_cheapest_from_n_3_onward() {
    // at n = 1 and n = 2 the CSZ row, which hashes less and pays
    // (n+1) pairings, undercuts VDAS by 0.477 - (2-n)*4.359 ms; from
    // n = 3 the extra pairings dominate and VDAS wins everywhere
    let timings = OpTimings::reference();
    let schemes = all_schemes();
    let vdas = scheme_by_name("VDAS").unwrap();
    let csz = scheme_by_name("CSZ").unwrap();
    for n in [1, 2] {
        assert!(
            predict_verify_time(&csz, &timings, n) < predict_verify_time(&vdas, &timings, n),
            "n={n}"
        );
    }
    for n in 3..=100 {
        let vdas_time = predict_verify_time(&vdas, &timings, n);
        for other in schemes.iter().filter(|s| s.name != "VDAS") {
            assert!(
                vdas_time < predict_verify_time(other, &timings, n),
                "n={n} vs {}",
                other.name
            );
        }
    }
}

#[test]
fn figure_tables_have_six_scheme_columns() {
    let timings = OpTimings::reference();
    let range: Vec<u64> = (1..=20).collect();
    for csv in [
        signing_figure_csv(&timings, &range),
        verification_figure_csv(&timings, &range),
    ] {
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "n,ZQWZ,CWZY,CSZ,DHW,CTMHH,VDAS");
        assert_eq!(lines.count(), 20);
    }
}

#[test]
fn signing_columns_are_constant_across_n() {
    let timings = OpTimings::reference();
    let csv = signing_figure_csv(&timings, &[1, 50, 100]);
    let rows: Vec<&str> = csv.lines().skip(1).collect();
    let strip_n = |row: &str| row.splitn(2, ',').nth(1).unwrap().to_string();
    assert_eq!(strip_n(rows[0]), strip_n(rows[1]));
    assert_eq!(strip_n(rows[1]), strip_n(rows[2]));
}

#[test]
fn emit_figures_writes_both_files() {
    let dir = std::env::temp_dir().join(format!("vdas-figures-{}", std::process::id()));
    let timings = OpTimings::reference();
    let (sign_path, verify_path) = emit_figures(&timings, &[1, 2, 3], &dir).unwrap();
    let sign = std::fs::read_to_string(&sign_path).unwrap();
    let verify = std::fs::read_to_string(&verify_path).unwrap();
    assert_eq!(sign, signing_figure_csv(&timings, &[1, 2, 3]));
    assert_eq!(verify, verification_figure_csv(&timings, &[1, 2, 3]));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn cost_model_table_lists_all_schemes_with_positive_residuals() {
    let table = cost_model_table(&OpTimings::reference(), 10);
    let lines: Vec<&str> = table.lines().collect();
    assert_eq!(lines.len(), 7);
    for scheme in all_schemes() {
        assert!(table.contains(scheme.name));
    }
}

#[test]
fn measured_timings_are_positive_and_pairing_dominates_mult() {
    let group = by_label("ss-512").unwrap();
    let timings = measure_primitives(&group, 10).unwrap();
    assert!(timings.mult_ms > 0.0);
    assert!(timings.hash_ms > 0.0);
    assert!(timings.pairing_ms > 0.0);
    assert!(timings.pairing_ms > timings.mult_ms);
}

#[test]
fn too_few_iterations_is_an_error() {
    assert_eq!(
        measure_primitives(&toy_64(), 9).unwrap_err(),
        BenchError::TooFewIterations(9)
    );
}

#[test]
#[ignore = "advisory stability check; sensitive to machine load"]
fn doubling_iterations_keeps_the_median_stable() {
    let group = toy_64();
    let a = measure_primitives(&group, 50).unwrap();
    let b = measure_primitives(&group, 100).unwrap();
    let rel = |x: f64, y: f64| (x - y).abs() / y;
    assert!(rel(a.pairing_ms, b.pairing_ms) < 0.2);
}
