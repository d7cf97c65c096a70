use num_complex::Complex64 as C64;

use super::group::JacobiGroupElement;
use super::point::JacobiPoint;
use crate::eval::Evaluator;

pub type JacobiEvaluator = Evaluator<JacobiPoint>;

/// `(cτ̄+d)^{1−k} |cτ+d|^{−1}`
pub fn skew_factor(g: &JacobiGroupElement, tau: C64, k: i64) -> C64 {
    let j = g.j(tau);
    j.conj().powi((1 - k) as i32) / j.norm()
}

/// `(cτ+d)^{−k}`
pub fn holo_factor(g: &JacobiGroupElement, tau: C64, k: i64) -> C64 {
    g.j(tau).powi(-k as i32)
}

fn slash_with(
    phi: &JacobiEvaluator,
    g: JacobiGroupElement,
    k: i64,
    m: i64,
    tag: &'static str,
    factor: fn(&JacobiGroupElement, C64, i64) -> C64,
) -> JacobiEvaluator {
    let phi = phi.clone();
    let name = format!("{}|{}_({},{})A", phi.name, tag, k, m);
    let weight = phi.weight.clone();
    Evaluator::new(name, weight, move |p: &JacobiPoint| {
        let q = g.act(p)?;
        Ok(phi.eval(&q)? * factor(&g, p.tau, k) * g.index_factor(p, m))
    })
}

/// `φ |^{sk}_{k,m} A`
pub fn skew_slash(phi: &JacobiEvaluator, g: JacobiGroupElement, k: i64, m: i64) -> JacobiEvaluator {
    slash_with(phi, g, k, m, "sk", skew_factor)
}

/// `φ |_{k,m} A`
pub fn holo_slash(phi: &JacobiEvaluator, g: JacobiGroupElement, k: i64, m: i64) -> JacobiEvaluator {
    slash_with(phi, g, k, m, "", holo_factor)
}

/// `y^a`
pub fn y_power(a: f64) -> JacobiEvaluator {
    Evaluator::total(format!("y^{}", a), "seed", move |p: &JacobiPoint| C64::new(p.y().powf(a), 0.0))
}

/// `qⁿ ζʳ = e^{2πi(nτ + rz)}`
pub fn monomial(n: f64, r: f64) -> JacobiEvaluator {
    Evaluator::total(format!("q^{} zeta^{}", n, r), "holomorphic", move |p: &JacobiPoint| {
        (C64::new(0.0, 2.0 * std::f64::consts::PI) * (n * p.tau + r * p.z)).exp()
    })
}

/// `qⁿ ζʳ e^{−πDy/m}`, the heat-annihilated profile for `D = r² − 4mn`.
pub fn plus_profile(n: f64, r: f64, m: f64) -> JacobiEvaluator {
    let d = r * r - 4.0 * m * n;
    let q = monomial(n, r);
    Evaluator::new(format!("c+ profile ({},{})", n, r), "skew", move |p: &JacobiPoint| {
        Ok(q.eval(p)? * (-std::f64::consts::PI * d * p.y() / m).exp())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_translation() {
        let p = JacobiPoint::from_parts(0.1, 1.2, 0.3, -0.2).unwrap();
        let phi = monomial(2.0, 1.0);
        let id = skew_slash(&phi, JacobiGroupElement::identity(), 5, 1);
        assert_eq!(id.eval(&p).unwrap(), phi.eval(&p).unwrap());
        let t = skew_slash(&phi, JacobiGroupElement::translation(), 5, 1);
        assert!((t.eval(&p).unwrap() - phi.eval(&p).unwrap()).norm() < 1e-12);
    }

    #[test]
    fn holomorphic_weight_factor() {
        let one = Evaluator::total("1", "", |_: &JacobiPoint| C64::new(1.0, 0.0));
        let g = JacobiGroupElement::complete(2, 3, 0, 0).unwrap();
        let p = JacobiPoint::from_parts(0.1, 1.2, 0.3, -0.2).unwrap();
        let h = holo_slash(&one, g, 4, 0).eval(&p).unwrap();
        assert!((h - (2.0 * p.tau + 3.0).powi(-4)).norm() < 1e-14);
    }
}
