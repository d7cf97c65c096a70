//! One PASS/FAIL line per acceptance criterion, run on the default suite
//! configuration. Criteria listed in `KNOWN_FAILURES` are reported but not
//! asserted; README.md explains why each one misses its tolerance.

use std::collections::BTreeMap;

use hsmf_core::suites::{run_suite, CheckRecord, CheckVerdict, SuiteConfig, VerificationReport, SUITES};

const KNOWN_FAILURES: [u32; 3] = [10, 11, 13];

/// (criterion, label, suite, check-id prefixes; empty means every check)
const CRITERIA: [(u32, &str, &str, &[&str]); 14] = [
    (1, "quartic h1 solutions verify exactly", "exact-h1", &[]),
    (2, "confluent series verify exactly; exp is not a Psi solution", "exact-confluent", &[]),
    (3, "recursion towers have vanishing residuals", "recursions", &[]),
    (4, "growth classification of the Fourier terms", "growth", &[]),
    (5, "coefficient ratio decays below threshold", "ratio-decay", &[]),
    (6, "Omega eigenvalue on det Y^s and stencil order", "siegel-operators", &["omega-eigen/", "omega-halving/"]),
    (7, "Omega_{k,0} annihilates holomorphic exponentials", "siegel-operators", &["omega-holomorphic/"]),
    (8, "M eigenvalues and xi^(2) constants", "siegel-operators", &["maass-m/", "xi2-constant/"]),
    (9, "Casimir kernel on det Y^s with a nonzero control", "siegel-operators", &["casimir-kernel/", "casimir-control/"]),
    (10, "xi^(2) on truncated Eisenstein series", "eisenstein", &["xi2-ladder/", "xi2-holomorphic/"]),
    (11, "heat, Casimir and xi^sk on truncated skew series", "jacobi-operators", &["heat-ladder/", "casimir-ladder/", "xi-sk-holomorphic/"]),
    (12, "Kohnen limit settles and matches the direct sum", "kohnen-limit", &[]),
    (13, "W and incomplete Gamma asymptotics", "special-asymptotics", &[]),
    (14, "skew Eisenstein coefficient is nonzero", "jacobi-operators", &["nonvanishing/"]),
];

fn worst(c: &CheckRecord) -> f64 {
    c.residuals.iter().cloned().fold(f64::NAN, f64::max)
}

fn main() {
    let config = SuiteConfig::default();
    let mut reports: BTreeMap<&str, VerificationReport> = BTreeMap::new();
    for suite in SUITES {
        reports.insert(suite, run_suite(suite, &config).expect(suite));
    }
    let mut unexpected = Vec::new();
    for (n, label, suite, prefixes) in CRITERIA {
        let checks: Vec<&CheckRecord> =
            reports[suite].checks.iter().filter(|c| prefixes.is_empty() || prefixes.iter().any(|p| c.id.starts_with(p))).collect();
        assert!(!checks.is_empty(), "criterion {} selects no checks", n);
        let pass = checks.iter().all(|c| c.verdict == CheckVerdict::Pass);
        println!("{}  {:>2}  {}  [{}]", if pass { "PASS" } else { "FAIL" }, n, label, suite);
        for c in &checks {
            let v = match c.verdict {
                CheckVerdict::Pass => "pass",
                CheckVerdict::Fail => "fail",
                CheckVerdict::Error => "error",
            };
            match &c.error {
                Some(e) => println!("        {:<5} {}  {}", v, c.id, e),
                None => println!("        {:<5} {}  max residual {:.3e} / tolerance {:.1e}", v, c.id, worst(c), c.tolerance),
            }
        }
        if !pass && !KNOWN_FAILURES.contains(&n) {
            unexpected.push(n);
        }
        if checks.iter().any(|c| c.verdict == CheckVerdict::Error) && !unexpected.contains(&n) {
            unexpected.push(n);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("criteria failed unexpectedly: {:?}", unexpected);
        std::process::exit(1);
    }
}
