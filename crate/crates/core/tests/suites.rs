use std::collections::BTreeSet;
use std::path::PathBuf;

use hsmf_core::jacobi::jacobi_cosets;
use hsmf_core::siegel::{coset_reps, CosetFamily};
use hsmf_core::suites::{cache_cosets, cache_path, jacobi_family, run_suite, CacheKind, CheckVerdict, SuiteConfig, REPORT_SCHEMA};
use hsmf_core::Error;
use serde_json::Value;

fn scratch(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("hsmf-suites-{}-{}", name, std::process::id()));
    let _ = std::fs::remove_dir_all(&d);
    std::fs::create_dir_all(&d).unwrap();
    d
}

fn keys(v: &Value) -> BTreeSet<String> {
    v.as_object().unwrap().keys().cloned().collect()
}

fn golden(part: &str) -> BTreeSet<String> {
    let g: Value = serde_json::from_str(include_str!("golden/report_keys.json")).unwrap();
    g[part].as_array().unwrap().iter().map(|s| s.as_str().unwrap().to_string()).collect()
}

#[test]
fn report_shape_matches_golden_keys() {
    for suite in ["exact-h1", "ratio-decay", "special-asymptotics"] {
        let r = run_suite(suite, &SuiteConfig::default()).unwrap();
        let v: Value = serde_json::from_str(&r.to_json().unwrap()).unwrap();
        assert_eq!(keys(&v), golden("report"), "{}", suite);
        assert_eq!(keys(&v["summary"]), golden("summary"));
        assert_eq!(v["schema"], REPORT_SCHEMA);
        assert_eq!(v["suite"], suite);
        for c in v["checks"].as_array().unwrap() {
            assert_eq!(keys(c), golden("check"), "{}", c["id"]);
            assert!(["pass", "fail", "error"].contains(&c["verdict"].as_str().unwrap()));
        }
        let s = &r.summary;
        assert_eq!(s.total, r.checks.len());
        assert_eq!(s.passed + s.failed + s.errors, s.total);
    }
}

#[test]
fn verdict_is_pass_iff_all_residuals_within_tolerance() {
    let r = run_suite("special-asymptotics", &SuiteConfig::default()).unwrap();
    for c in &r.checks {
        let ok = !c.residuals.is_empty() && c.residuals.iter().all(|x| x.is_finite() && *x <= c.tolerance);
        assert_eq!(c.verdict == CheckVerdict::Pass, ok, "{}", c.id);
    }
}

#[test]
fn reruns_reproduce_residuals() {
    for suite in ["exact-h1", "ratio-decay", "special-asymptotics", "siegel-operators"] {
        let c = SuiteConfig::default();
        let a = run_suite(suite, &c).unwrap();
        let b = run_suite(suite, &c).unwrap();
        for (x, y) in a.checks.iter().zip(&b.checks) {
            assert_eq!(x.id, y.id);
            let xs: Vec<u64> = x.residuals.iter().map(|r| r.to_bits()).collect();
            let ys: Vec<u64> = y.residuals.iter().map(|r| r.to_bits()).collect();
            assert_eq!(xs, ys, "{}", x.id);
        }
    }
}

#[test]
fn sequential_config_matches_parallel() {
    let par = run_suite("siegel-operators", &SuiteConfig::default()).unwrap();
    let seq = run_suite("siegel-operators", &SuiteConfig { parallel: false, ..SuiteConfig::default() }).unwrap();
    for (x, y) in par.checks.iter().zip(&seq.checks) {
        assert_eq!(x.residuals, y.residuals, "{}", x.id);
    }
}

#[test]
fn config_errors() {
    let bad = |c: SuiteConfig| matches!(run_suite("exact-h1", &c), Err(Error::Config(_)));
    assert!(bad(SuiteConfig { bound: -1, ..SuiteConfig::default() }));
    assert!(bad(SuiteConfig { step: 0.0, ..SuiteConfig::default() }));
    assert!(bad(SuiteConfig { tolerance_scale: f64::NAN, ..SuiteConfig::default() }));
    let mut c = SuiteConfig::default();
    c.delta_grid.max = -3.0;
    assert!(bad(c));
    assert!(matches!(run_suite("no-such-suite", &SuiteConfig::default()), Err(Error::UnknownSuite(_))));
    // ratio decay is stated for negative weight only
    assert!(matches!(run_suite("ratio-decay", &SuiteConfig { k: vec![3], ..SuiteConfig::default() }), Err(Error::Config(_))));
}

#[test]
fn unknown_config_keys_are_rejected() {
    assert!(serde_json::from_str::<SuiteConfig>(r#"{"bound": 4}"#).is_ok());
    assert!(serde_json::from_str::<SuiteConfig>(r#"{"bound": 4, "bogus": 1}"#).is_err());
}

#[test]
fn tolerance_scale_multiplies_tolerances() {
    let a = run_suite("ratio-decay", &SuiteConfig::default()).unwrap();
    let b = run_suite("ratio-decay", &SuiteConfig { tolerance_scale: 10.0, ..SuiteConfig::default() }).unwrap();
    for (x, y) in a.checks.iter().zip(&b.checks) {
        assert!((y.tolerance - 10.0 * x.tolerance).abs() <= 1e-15 * y.tolerance);
    }
}

#[test]
fn report_written_to_out() {
    let dir = scratch("out");
    let out = dir.join("nested/exact.json");
    let r = run_suite("exact-h1", &SuiteConfig { out: Some(out.clone()), ..SuiteConfig::default() }).unwrap();
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(text, r.to_json().unwrap() + "\n");
}

#[test]
fn siegel_cache_bound_zero_and_idempotence() {
    let dir = scratch("siegel");
    let p = cache_path(&dir, CacheKind::Siegel, 0);
    assert_eq!(cache_cosets(CacheKind::Siegel, 0, &p).unwrap(), 1);
    let first = std::fs::read(&p).unwrap();
    cache_cosets(CacheKind::Siegel, 0, &p).unwrap();
    assert_eq!(first, std::fs::read(&p).unwrap());
    let fam = CosetFamily::read(&p).unwrap();
    assert_eq!(fam.len(), 1);

    let p2 = cache_path(&dir, CacheKind::Siegel, 2);
    let n = cache_cosets(CacheKind::Siegel, 2, &p2).unwrap();
    assert_eq!(n, coset_reps(2).unwrap().len());
    assert_eq!(CosetFamily::read(&p2).unwrap().to_text(), coset_reps(2).unwrap().to_text());
}

#[test]
fn jacobi_cache_bound_one() {
    let dir = scratch("jacobi");
    let p = cache_path(&dir, CacheKind::Jacobi, 1);
    assert_eq!(cache_cosets(CacheKind::Jacobi, 1, &p).unwrap(), 24);
    let fam = jacobi_family(1, Some(&dir)).unwrap();
    assert_eq!(fam.to_text(), jacobi_cosets(1).unwrap().to_text());
}

#[test]
fn corrupted_cache_is_an_error() {
    let dir = scratch("corrupt");
    let p = cache_path(&dir, CacheKind::Jacobi, 1);
    cache_cosets(CacheKind::Jacobi, 1, &p).unwrap();
    let text = std::fs::read_to_string(&p).unwrap();
    std::fs::write(&p, text.replacen("bound 1", "bound 2", 1)).unwrap();
    assert!(jacobi_family(1, Some(&dir)).is_err());
    std::fs::write(&p, "garbage\n").unwrap();
    assert!(jacobi_family(1, Some(&dir)).is_err());
    assert!("nonsense".parse::<CacheKind>().is_err());
}
