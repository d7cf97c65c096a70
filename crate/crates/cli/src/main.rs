use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hsmf_core::suites::{cache_cosets, run_suite, CacheKind, CheckVerdict, SuiteConfig, VerificationReport, SUITES};
use hsmf_core::Error;

const EXIT_FAIL: u8 = 1;
const EXIT_CONFIG: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

/// Runs the verification suites and manages coset caches.
#[derive(Parser, Debug)]
#[command(name = "hsmf", version, args_conflicts_with_subcommands = true)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Writes the coset representatives up to a bound to a cache file.
    CacheCosets {
        #[arg(long)]
        kind: CacheKind,
        #[arg(long)]
        bound: i64,
        #[arg(long)]
        path: PathBuf,
    },
    /// Lists the suite names.
    List,
}

#[derive(Args, Debug)]
struct RunArgs {
    #[arg(long)]
    suite: Option<String>,
    /// TOML file with `SuiteConfig` keys; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    k: Option<Vec<i64>>,
    #[arg(long, allow_negative_numbers = true)]
    bound: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    step: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    delta_max: Option<f64>,
    /// Report path; `-` writes to stdout. Defaults to `<suite>.report.json`.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    #[arg(long, allow_negative_numbers = true)]
    tolerance_scale: Option<f64>,
    #[arg(long)]
    sequential: bool,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::UnknownSuite(_) | Error::Config(_) => EXIT_CONFIG,
        _ => EXIT_INTERNAL,
    }
}

fn load_config(args: &RunArgs) -> Result<SuiteConfig, Error> {
    let mut c = match &args.config {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| Error::Config(format!("{}: {}", p.display(), e)))?;
            toml::from_str(&text).map_err(|e| Error::Config(format!("{}: {}", p.display(), e)))?
        }
        None => SuiteConfig::default(),
    };
    if let Some(s) = &args.suite {
        c.suite = Some(s.clone());
    }
    if let Some(k) = &args.k {
        c.k = k.clone();
    }
    if let Some(b) = args.bound {
        c.bound = b;
    }
    if let Some(h) = args.step {
        c.step = h;
    }
    if let Some(d) = args.delta_max {
        c.delta_grid.max = d;
    }
    if let Some(t) = args.tolerance_scale {
        c.tolerance_scale = t;
    }
    if args.cache_dir.is_some() {
        c.cache_dir = args.cache_dir.clone();
    }
    if args.sequential {
        c.parallel = false;
    }
    c.out = match &args.out {
        Some(p) if p.as_os_str() == "-" => None,
        Some(p) => Some(p.clone()),
        None => c.out.or_else(|| c.suite.as_ref().map(|s| PathBuf::from(format!("{}.report.json", s)))),
    };
    Ok(c)
}

fn print_summary(r: &VerificationReport) {
    for c in &r.checks {
        let tag = match c.verdict {
            CheckVerdict::Pass => "PASS ",
            CheckVerdict::Fail => "FAIL ",
            CheckVerdict::Error => "ERROR",
        };
        let worst = c.residuals.iter().cloned().fold(f64::NAN, f64::max);
        match &c.error {
            Some(e) => eprintln!("{} {}  {}", tag, c.id, e),
            None => eprintln!("{} {}  max residual {:.3e} (tolerance {:.1e}, {:.2} s)", tag, c.id, worst, c.tolerance, c.wall_time_s),
        }
    }
    let s = &r.summary;
    eprintln!("{}: {} passed, {} failed, {} errors in {:.1} s", r.suite, s.passed, s.failed, s.errors, s.wall_time_s);
}

fn run(args: RunArgs) -> Result<u8, Error> {
    let config = load_config(&args)?;
    let Some(suite) = config.suite.clone() else {
        return Err(Error::Config(format!("--suite is required; one of {}", SUITES.join(", "))));
    };
    let report = run_suite(&suite, &config)?;
    if config.out.is_none() {
        println!("{}", report.to_json()?);
    }
    print_summary(&report);
    Ok(if report.passed() { 0 } else { EXIT_FAIL })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Some(Command::List) => {
            for s in SUITES {
                println!("{}", s);
            }
            Ok(0)
        }
        Some(Command::CacheCosets { kind, bound, path }) => cache_cosets(kind, bound, &path).map(|n| {
            println!("{}", n);
            0
        }),
        None => run(cli.run),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(exit_code(&e))
        }
    }
}
