use qexpmap::verify::{run_suite, sample_points, summary_line, Suite, VerifyOptions};

fn run(suite: Suite, opts: &VerifyOptions) {
    let reports = run_suite(suite, opts).unwrap();
    assert!(!reports.is_empty(), "{}", suite.name());
    let failed: Vec<String> = reports.iter().filter(|r| !r.pass).map(summary_line).collect();
    assert!(failed.is_empty(), "{}: {failed:#?}", suite.name());
}

#[test]
fn every_identity_suite_passes_exactly() {
    let opts = VerifyOptions { max_j2: 2, ..Default::default() };
    for suite in Suite::identity_suites() {
        run(suite, &opts);
    }
}

#[test]
fn confluence_suite() {
    run(Suite::Confluence, &VerifyOptions { max_len: Some(3), ..Default::default() });
}

#[test]
fn specialize_passes_at_random_points() {
    let opts = VerifyOptions { max_j2: 2, points: 3, ..Default::default() };
    let reports = run_suite(Suite::Specialize, &opts).unwrap();
    assert_eq!(reports.len(), 6);
    for r in &reports {
        let bad: Vec<_> = r.residuals.iter().filter(|x| !x.zero).collect();
        assert!(r.pass, "{}: {bad:#?}", summary_line(r));
    }
}

#[test]
fn sample_points_are_reproducible() {
    let a = sample_points(7, 4);
    let b = sample_points(7, 4);
    assert_eq!(a.len(), 8);
    for (x, y) in a.iter().zip(&b) {
        assert_eq!((x.p, x.q, x.big_q, x.lambda), (y.p, y.q, y.big_q, y.lambda));
    }
    for x in &a[4..] {
        assert!((x.p - x.q).abs() < 1e-12);
    }
}

#[test]
fn reports_are_sorted() {
    let reports = run_suite(Suite::Comodule, &VerifyOptions { max_j2: 2, ..Default::default() }).unwrap();
    let keys: Vec<_> = reports.iter().map(|r| r.sort_key()).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn suite_names_round_trip() {
    for (name, suite) in Suite::NAMES {
        assert_eq!(name.parse::<Suite>().unwrap(), suite);
        assert_eq!(suite.name(), name);
    }
    assert!("nope".parse::<Suite>().is_err());
}
