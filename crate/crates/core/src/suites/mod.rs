//! Named verification suites. Each suite is a list of checks with residuals
//! and tolerances; [`run_suite`] runs them and assembles a JSON-ready report.

mod cache;
mod config;
mod exact;
mod fourier;
mod jacobi;
pub mod points;
mod report;
mod siegel;
mod special;

pub use cache::{cache_cosets, cache_path, jacobi_family, siegel_family, CacheKind};
pub use config::SuiteConfig;
pub use report::{CheckRecord, CheckVerdict, Summary, VerificationReport, REPORT_SCHEMA};

use crate::error::{Error, Result};
use report::{run_checks, Check};

pub const SUITES: [&str; 10] = [
    "exact-h1",
    "exact-confluent",
    "recursions",
    "growth",
    "ratio-decay",
    "siegel-operators",
    "eisenstein",
    "jacobi-operators",
    "kohnen-limit",
    "special-asymptotics",
];

fn checks(name: &str, config: &SuiteConfig) -> Result<Vec<Check>> {
    match name {
        "exact-h1" => exact::h1(config),
        "exact-confluent" => exact::confluent(config),
        "recursions" => exact::recursions(config),
        "growth" => fourier::growth(config),
        "ratio-decay" => fourier::ratio_decay(config),
        "siegel-operators" => siegel::operators(config),
        "eisenstein" => siegel::eisenstein(config),
        "jacobi-operators" => jacobi::operators(config),
        "kohnen-limit" => jacobi::kohnen(config),
        "special-asymptotics" => special::asymptotics(config),
        _ => Err(Error::UnknownSuite(name.to_string())),
    }
}

/// Runs every check of the suite. Writes the report to `config.out` when set.
pub fn run_suite(name: &str, config: &SuiteConfig) -> Result<VerificationReport> {
    if !SUITES.contains(&name) {
        return Err(Error::UnknownSuite(name.to_string()));
    }
    config.validate()?;
    let list = checks(name, config)?;
    let report = run_checks(name, config, list, config.exec());
    if let Some(path) = &config.out {
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            std::fs::create_dir_all(dir)?;
        }
        std::fs::write(path, report.to_json()? + "\n")?;
    }
    Ok(report)
}
