//! Named operators and the solution series they are checked against.

use crate::algebra::{LaurentSeries, RatFunc, SymbolicExponent, Var};
use crate::error::Result;
use crate::special::{pfq_formal, spec_quarter, ArgScale, HypergeometricSpec};

use super::op::LinearDiffOp;

fn k() -> RatFunc {
    RatFunc::k()
}

fn c(n: i64) -> RatFunc {
    RatFunc::from_int(n)
}

fn poly(coeffs: &[i64]) -> RatFunc {
    coeffs.iter().rev().fold(RatFunc::zero(), |acc, &x| &(&acc * &k()) + &c(x))
}

/// The fourth-order operator annihilating `h_1` in the indefinite case.
pub fn quartic_h1() -> LinearDiffOp {
    LinearDiffOp::from_terms(
        Var::V,
        [
            (4, 3, c(-16)),
            (3, 2, &c(-32) * &(&k() + &c(2))),
            // −4(5k² + 15k + 7 − v) v ∂²
            (2, 1, &c(-4) * &poly(&[7, 15, 5])),
            (2, 2, c(4)),
            // −2(2k³ + 5k² + k − 2 − 2kv − 2v) ∂
            (1, 0, &c(-2) * &poly(&[-2, 1, 5, 2])),
            (1, 1, &c(4) * &(&k() + &c(1))),
            (0, 0, &(&c(2) * &k()) - &c(1)),
        ],
    )
}

pub fn confluent_phi(alpha: &RatFunc, beta: &RatFunc) -> LinearDiffOp {
    LinearDiffOp::from_terms(
        Var::U,
        [(2, 1, c(1)), (1, 0, &(&c(3) - alpha) - beta), (0, 0, alpha - beta), (0, 1, c(-1))],
    )
}

pub fn confluent_psi(alpha: &RatFunc, beta: &RatFunc) -> LinearDiffOp {
    LinearDiffOp::from_terms(Var::U, [(2, 1, c(1)), (1, 0, alpha + beta), (0, 0, alpha - beta), (0, 1, c(-1))])
}

/// `u² ∂² − u² − 2(β−α)u − (α+β−1)(α+β−2)`.
pub fn whittaker_phi(alpha: &RatFunc, beta: &RatFunc) -> LinearDiffOp {
    let s = alpha + beta;
    LinearDiffOp::from_terms(
        Var::U,
        [
            (2, 2, c(1)),
            (0, 2, c(-1)),
            (0, 1, &c(-2) * &(beta - alpha)),
            (0, 0, -(&(&s - &c(1)) * &(&s - &c(2)))),
        ],
    )
}

/// Operator identifiers addressable from the command line.
pub const OPERATOR_IDS: [&str; 4] = ["quartic-h1", "confluent-phi", "confluent-psi", "whittaker-phi"];

/// Catalog lookup at the harmonic type `α = ½, β = k − ½`.
pub fn operator_by_id(id: &str) -> Option<LinearDiffOp> {
    let (a, b) = harmonic_type();
    match id {
        "quartic-h1" => Some(quartic_h1()),
        "confluent-phi" => Some(confluent_phi(&a, &b)),
        "confluent-psi" => Some(confluent_psi(&a, &b)),
        "whittaker-phi" => Some(whittaker_phi(&a, &b)),
        _ => None,
    }
}

/// `(α, β) = (½, k − ½)`.
pub fn harmonic_type() -> (RatFunc, RatFunc) {
    (RatFunc::from_frac(1, 2), RatFunc::affine((-1, 2), (1, 1)))
}

/// The four hypergeometric `h_1` solutions, each `v^ℓ pFq(·; v/4)`.
pub fn h1_solutions() -> Vec<(&'static str, HypergeometricSpec)> {
    let f = RatFunc::affine;
    vec![
        ("1F2(1/2; (1+k)/2, 1+k/2)", spec_quarter(vec![f((1, 2), (0, 1))], vec![f((1, 2), (1, 2)), f((1, 1), (1, 2))], SymbolicExponent::zero(), Var::V)),
        ("v^(-k/2) 1F2((1-k)/2; 1/2, 1-k/2)", spec_quarter(vec![f((1, 2), (-1, 2))], vec![f((1, 2), (0, 1)), f((1, 1), (-1, 2))], SymbolicExponent::frac(0, 1, -1, 2), Var::V)),
        ("v^((1-k)/2) 1F2(1-k/2; 3/2, (3-k)/2)", spec_quarter(vec![f((1, 1), (-1, 2))], vec![f((3, 2), (0, 1)), f((3, 2), (-1, 2))], SymbolicExponent::frac(1, 2, -1, 2), Var::V)),
        (
            "v^(3/2-k) 2F3(1, 2-k; 5/2-k, 2-k/2, (5-k)/2)",
            spec_quarter(
                vec![f((1, 1), (0, 1)), f((2, 1), (-1, 1))],
                vec![f((5, 2), (-1, 1)), f((2, 1), (-1, 2)), f((5, 2), (-1, 2))],
                SymbolicExponent::frac(3, 2, -1, 1),
                Var::V,
            ),
        ),
    ]
}

fn exp_series(var: Var, scale: i64, order: usize) -> Result<LaurentSeries> {
    pfq_formal(&HypergeometricSpec::new(vec![], vec![], ArgScale::rational(scale, 1), SymbolicExponent::zero(), var), order)
}

fn hyp1f1_series(a: RatFunc, b: RatFunc, scale: i64, order: usize) -> Result<LaurentSeries> {
    pfq_formal(&HypergeometricSpec::new(vec![a], vec![b], ArgScale::rational(scale, 1), SymbolicExponent::zero(), Var::U), order)
}

/// `u^{k−2} e^{u}`, the scale-free form of `u^{k−2} e^{2πu}`.
pub fn confluent_exp_solution(order: usize) -> Result<LaurentSeries> {
    Ok(exp_series(Var::U, 1, order)?.mul_power(&SymbolicExponent::frac(-2, 1, 1, 1)))
}

/// `e^{−u} 1F1(k−½; k; 2u)`.
pub fn confluent_1f1_positive(order: usize) -> Result<LaurentSeries> {
    exp_series(Var::U, -1, order)?.mul(&hyp1f1_series(RatFunc::affine((-1, 2), (1, 1)), k(), 2, order)?)
}

/// `u^{1−k} e^{−u} 1F1(½; 2−k; 2u)`.
pub fn confluent_1f1_negative(order: usize) -> Result<LaurentSeries> {
    let s = exp_series(Var::U, -1, order)?.mul(&hyp1f1_series(RatFunc::from_frac(1, 2), RatFunc::affine((2, 1), (-1, 1)), 2, order)?)?;
    Ok(s.mul_power(&SymbolicExponent::frac(1, 1, -1, 1)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightSign {
    Positive,
    Negative,
}

/// `M_{1−k, μ}(2u)` with `μ = (sgn k)(k − 3/2)`, up to the constant `2^{μ+½}`:
/// `u^{μ+½} e^{−u} 1F1(μ − ν + ½; 1 + 2μ; 2u)`.
pub fn whittaker_m_series(sign: WeightSign, order: usize) -> Result<LaurentSeries> {
    let (mu, mu_exp) = match sign {
        WeightSign::Positive => (RatFunc::affine((-3, 2), (1, 1)), SymbolicExponent::frac(-1, 1, 1, 1)),
        WeightSign::Negative => (RatFunc::affine((3, 2), (-1, 1)), SymbolicExponent::frac(2, 1, -1, 1)),
    };
    let nu = RatFunc::affine((1, 1), (-1, 1));
    let a = &(&mu - &nu) + &RatFunc::from_frac(1, 2);
    let b = &(&mu * &c(2)) + &c(1);
    let s = exp_series(Var::U, -1, order)?.mul(&hyp1f1_series(a, b, 2, order)?)?;
    Ok(s.mul_power(&mu_exp))
}
