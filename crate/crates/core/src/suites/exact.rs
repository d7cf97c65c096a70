//! exact-h1, exact-confluent, recursions

use serde_json::{json, Value};

use super::report::{Check, Outcome};
use super::SuiteConfig;
use crate::algebra::{LaurentSeries, RatFunc, SymbolicExponent, Var};
use crate::error::Result;
use crate::fourier::RecursionTower;
use crate::ode::catalog::*;
use crate::ode::{confluent_ode_check, finite_check, phi_whittaker_ode_check, ConfluentKind, SeriesCheck, Verdict};
use crate::special::pfq_formal;

const WINDOW_SIZE: usize = 12;
const CONFLUENT_ORDER: usize = 30;
const TOWER_DEPTH: usize = 12;
const H_SEED_ORDER: usize = 40;

fn failure(v: &Verdict) -> Value {
    match v {
        Verdict::Verified => Value::Null,
        Verdict::Failed { t, residual } => json!({ "offset": t, "coefficient": residual }),
    }
}

pub fn h1(_: &SuiteConfig) -> Result<Vec<Check>> {
    Ok(h1_solutions()
        .into_iter()
        .enumerate()
        .map(|(i, (name, spec))| {
            Check::new(
                format!("quartic-h1/{}", i),
                "quartic operator annihilates the h1 series: every window coefficient is the zero rational function of k",
                json!({ "series": name, "window_size": WINDOW_SIZE }),
                0.0,
                move || {
                    let chk = finite_check(&quartic_h1(), &spec)?;
                    let nonzero = if chk.verified() { 0.0 } else { 1.0 };
                    let missing = (WINDOW_SIZE as f64 - chk.checked.len() as f64).abs();
                    Ok(Outcome::new(
                        vec![nonzero, missing],
                        json!({
                            "window": chk.window,
                            "checked": chk.checked,
                            "vacuous": chk.vacuous,
                            "series_order": chk.series_order,
                            "first_nonzero": failure(&chk.verdict),
                        }),
                    ))
                },
            )
        })
        .collect())
}

fn series_outcome(chk: SeriesCheck, expect_verified: bool) -> Outcome {
    let ok = chk.verified() == expect_verified;
    Outcome::new(
        vec![if ok { 0.0 } else { 1.0 }],
        json!({ "verified": chk.verified(), "known_offsets": chk.known, "first_nonzero": failure(&chk.verdict) }),
    )
}

pub fn confluent(_: &SuiteConfig) -> Result<Vec<Check>> {
    let order = CONFLUENT_ORDER;
    let ode = |kind: ConfluentKind, f: fn(usize) -> Result<LaurentSeries>, expect: bool| {
        move || {
            let (a, b) = harmonic_type();
            Ok(series_outcome(confluent_ode_check(kind, &a, &b, &f(order)?)?, expect))
        }
    };
    let whittaker = |sign: WeightSign| {
        move || {
            let (a, b) = harmonic_type();
            Ok(series_outcome(phi_whittaker_ode_check(&whittaker_m_series(sign, order)?, &a, &b)?, true))
        }
    };
    let p = |name: &str, eq: &str| json!({ "solution": name, "equation": eq, "order": order });
    Ok(vec![
        Check::new(
            "confluent/exp",
            "u^(k-2) e^u solves the phi equation",
            p("u^(k-2) e^u", "phi"),
            0.0,
            ode(ConfluentKind::Phi, confluent_exp_solution, true),
        ),
        Check::new(
            "confluent/1f1-positive",
            "e^(-u) 1F1(k-1/2; k; 2u) solves the psi equation",
            p("e^(-u) 1F1(k-1/2; k; 2u)", "psi"),
            0.0,
            ode(ConfluentKind::Psi, confluent_1f1_positive, true),
        ),
        Check::new(
            "confluent/1f1-negative",
            "u^(1-k) e^(-u) 1F1(1/2; 2-k; 2u) solves the psi equation",
            p("u^(1-k) e^(-u) 1F1(1/2; 2-k; 2u)", "psi"),
            0.0,
            ode(ConfluentKind::Psi, confluent_1f1_negative, true),
        ),
        Check::new(
            "confluent/exp-not-psi",
            "control: u^(k-2) e^u does not solve the psi equation",
            p("u^(k-2) e^u", "psi"),
            0.0,
            ode(ConfluentKind::Psi, confluent_exp_solution, false),
        ),
        Check::new(
            "confluent/whittaker-m-positive",
            "the M-Whittaker series for k > 0 solves the phi Whittaker equation",
            p("M_{1-k, k-3/2}(2u)", "whittaker-phi"),
            0.0,
            whittaker(WeightSign::Positive),
        ),
        Check::new(
            "confluent/whittaker-m-negative",
            "the M-Whittaker series for k < 0 solves the phi Whittaker equation",
            p("M_{1-k, 3/2-k}(2u)", "whittaker-phi"),
            0.0,
            whittaker(WeightSign::Negative),
        ),
    ])
}

fn tower_outcome(t: &RecursionTower) -> Result<Outcome> {
    let res = t.residuals()?;
    let nonzero = res.iter().filter(|r| !r.is_zero()).count();
    let checked: Vec<Option<i64>> = res.iter().map(|r| r.precision()).collect();
    let thin = checked.iter().filter(|p| p.map_or(false, |p| p <= 0)).count();
    Ok(Outcome::new(
        vec![nonzero as f64, thin as f64],
        json!({ "depth": t.depth(), "residual_count": res.len(), "residual_precisions": checked }),
    ))
}

pub fn recursions(_: &SuiteConfig) -> Result<Vec<Check>> {
    let mut out = vec![Check::new(
        "g-tower/laurent",
        "g-recursion residuals vanish exactly for the Laurent seed u^(1-k)",
        json!({ "depth": TOWER_DEPTH, "seed": "u^(1-k)" }),
        0.0,
        || {
            let (a, b) = harmonic_type();
            let seed = LaurentSeries::power(Var::U, SymbolicExponent::frac(1, 1, -1, 1));
            tower_outcome(&RecursionTower::positive_definite(seed, a, b, TOWER_DEPTH, "laurent")?)
        },
    )];
    for (i, (name, spec)) in h1_solutions().into_iter().enumerate() {
        out.push(Check::new(
            format!("h-tower/{}", i),
            "h-recursion and h0/h1 companion residuals vanish exactly for an h1 seed",
            json!({ "depth": TOWER_DEPTH, "seed": name, "seed_order": H_SEED_ORDER }),
            0.0,
            move || {
                let (a, b) = harmonic_type();
                let h1 = pfq_formal(&spec, H_SEED_ORDER)?;
                tower_outcome(&RecursionTower::indefinite(h1, a, b, TOWER_DEPTH, name)?)
            },
        ));
    }
    out.push(Check::new(
        "h-tower/constant",
        "h0 from a constant h1 matches 2(a+b)/(b-a)",
        json!({ "seed": "2" }),
        0.0,
        || {
            let (a, b) = harmonic_type();
            let c = LaurentSeries::monomial(Var::V, SymbolicExponent::zero(), 0, RatFunc::from_int(2));
            let h0 = crate::fourier::h0_from_h1(&c, &a, &b)?;
            let want = (&RatFunc::from_int(2) * &(&a + &b)).checked_div(&(&b - &a))?;
            let got = h0.coeff(0)?;
            Ok(Outcome::new(vec![if got == want { 0.0 } else { 1.0 }], json!({ "h0": got.to_string() })))
        },
    ));
    Ok(out)
}
