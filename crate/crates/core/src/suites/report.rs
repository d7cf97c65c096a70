use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use super::config::SuiteConfig;
use crate::error::Result;
use crate::exec::Exec;

pub const REPORT_SCHEMA: &str = "hsmf-report-v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckVerdict {
    Pass,
    Fail,
    /// The check itself could not be carried out.
    Error,
}

/// One check. `verdict` is `pass` exactly when every residual is finite and
/// at most `tolerance`.
#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub claim: String,
    pub parameters: Value,
    pub residuals: Vec<f64>,
    pub tolerance: f64,
    pub verdict: CheckVerdict,
    pub wall_time_s: f64,
    /// Raw grids and intermediate values.
    pub detail: Value,
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
    pub verdict: CheckVerdict,
    pub wall_time_s: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema: &'static str,
    pub tool_version: &'static str,
    pub suite: String,
    pub config: SuiteConfig,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.summary.verdict == CheckVerdict::Pass
    }

    pub fn check(&self, id: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

pub struct Outcome {
    pub residuals: Vec<f64>,
    pub detail: Value,
}

impl Outcome {
    pub fn new(residuals: Vec<f64>, detail: Value) -> Self {
        Outcome { residuals, detail }
    }
}

type Body = Box<dyn Fn() -> Result<Outcome> + Send + Sync>;

pub struct Check {
    pub id: String,
    pub claim: String,
    pub parameters: Value,
    pub tolerance: f64,
    pub body: Body,
}

impl Check {
    pub fn new(
        id: impl Into<String>,
        claim: impl Into<String>,
        parameters: Value,
        tolerance: f64,
        body: impl Fn() -> Result<Outcome> + Send + Sync + 'static,
    ) -> Self {
        Check { id: id.into(), claim: claim.into(), parameters, tolerance, body: Box::new(body) }
    }
}

fn within(residuals: &[f64], tol: f64) -> bool {
    !residuals.is_empty() && residuals.iter().all(|r| r.is_finite() && *r <= tol)
}

/// Runs the checks (in parallel across checks for `Exec::Parallel`) and
/// assembles the report in check order.
pub fn run_checks(suite: &str, config: &SuiteConfig, checks: Vec<Check>, exec: Exec) -> VerificationReport {
    let start = Instant::now();
    let results = exec.map(&checks, |c| {
        let t = Instant::now();
        let r = (c.body)();
        (r, t.elapsed().as_secs_f64())
    });
    let mut records = Vec::with_capacity(checks.len());
    for (c, (r, secs)) in checks.into_iter().zip(results) {
        let (residuals, detail, verdict, error) = match r {
            Ok(o) => {
                let v = if within(&o.residuals, c.tolerance) { CheckVerdict::Pass } else { CheckVerdict::Fail };
                (o.residuals, o.detail, v, None)
            }
            Err(e) => (Vec::new(), Value::Null, CheckVerdict::Error, Some(e.to_string())),
        };
        records.push(CheckRecord {
            id: c.id,
            claim: c.claim,
            parameters: c.parameters,
            residuals,
            tolerance: c.tolerance,
            verdict,
            wall_time_s: secs,
            detail,
            error,
        });
    }
    let count = |v| records.iter().filter(|r| r.verdict == v).count();
    let (passed, failed, errors) = (count(CheckVerdict::Pass), count(CheckVerdict::Fail), count(CheckVerdict::Error));
    let verdict = if passed == records.len() { CheckVerdict::Pass } else { CheckVerdict::Fail };
    VerificationReport {
        schema: REPORT_SCHEMA,
        tool_version: env!("CARGO_PKG_VERSION"),
        suite: suite.to_string(),
        config: config.clone(),
        summary: Summary { total: records.len(), passed, failed, errors, verdict, wall_time_s: start.elapsed().as_secs_f64() },
        checks: records,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn verdicts_follow_residuals() {
        assert!(within(&[0.0, 1e-7], 1e-6));
        assert!(!within(&[f64::NAN], 1.0));
        assert!(!within(&[], 1.0));
        let checks = vec![
            Check::new("a", "", json!({}), 1e-3, || Ok(Outcome::new(vec![1e-4], Value::Null))),
            Check::new("b", "", json!({}), 1e-3, || Ok(Outcome::new(vec![1e-2], Value::Null))),
            Check::new("c", "", json!({}), 1e-3, || Err(crate::Error::Domain("x".into()))),
        ];
        let r = run_checks("t", &SuiteConfig::default(), checks, Exec::Sequential);
        let v: Vec<_> = r.checks.iter().map(|c| c.verdict).collect();
        assert_eq!(v, [CheckVerdict::Pass, CheckVerdict::Fail, CheckVerdict::Error]);
        assert_eq!((r.summary.passed, r.summary.failed, r.summary.errors), (1, 1, 1));
        assert!(!r.passed());
    }
}
