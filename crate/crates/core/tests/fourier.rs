use hsmf_core::algebra::{q, LaurentSeries, RatFunc, SymbolicExponent, Var};
use hsmf_core::exec::Exec;
use hsmf_core::fourier::growth::grid;
use hsmf_core::fourier::holonomic::k_rational;
use hsmf_core::fourier::tower::g_step_shift_bounds;
use hsmf_core::fourier::*;
use hsmf_core::ode::catalog::{h1_solutions, harmonic_type, quartic_h1};
use hsmf_core::ode::finite_check_series;
use hsmf_core::special::pfq_formal;

fn laurent_seed() -> LaurentSeries {
    LaurentSeries::power(Var::U, SymbolicExponent::frac(1, 1, -1, 1))
}

fn h1_series(order: usize) -> Vec<(&'static str, LaurentSeries, SymbolicExponent)> {
    h1_solutions()
        .into_iter()
        .map(|(name, spec)| {
            let ell = spec.prefactor.clone();
            (name, pfq_formal(&spec, order).unwrap(), ell)
        })
        .collect()
}

#[test]
fn g_tower_residuals_vanish_to_depth_12() {
    let (a, b) = harmonic_type();
    let t = RecursionTower::positive_definite(laurent_seed(), a, b, 12, "laurent").unwrap();
    assert_eq!(t.depth(), 12);
    for (n, r) in t.residuals().unwrap().iter().enumerate() {
        assert!(r.is_zero(), "rung {}: {}", n, r);
    }
}

#[test]
fn laurent_tower_degree_and_valuation_bounds() {
    let (a, b) = harmonic_type();
    let t = RecursionTower::positive_definite(laurent_seed(), a, b, 12, "laurent").unwrap();
    let (v, _) = g_step_shift_bounds();
    let (d0, v0) = (t.rungs[0].degree().unwrap(), t.rungs[0].valuation().unwrap());
    for (n, g) in t.rungs.iter().enumerate() {
        assert!(g.is_exact());
        assert_eq!(g.prefactor(), t.rungs[0].prefactor());
        assert!(g.degree().unwrap() <= d0);
        assert!(g.valuation().unwrap() >= v0 + n as i64 * v);
    }
}

#[test]
fn h_towers_from_quartic_solutions() {
    let (a, b) = harmonic_type();
    for (name, h1, ell) in h1_series(40) {
        let t = RecursionTower::indefinite(h1.clone(), a.clone(), b.clone(), 12, name).unwrap();
        let res = t.residuals().unwrap();
        for (i, r) in res.iter().enumerate() {
            assert!(r.is_zero(), "{} residual {}: {}", name, i, r);
            assert!(r.precision().unwrap() > 10, "{} residual {} has no checked terms", name, i);
        }
        // the seed rung still passes the quartic check
        let body = h1.mul_power(&(-&ell));
        assert!(finite_check_series(&quartic_h1(), &ell, &body).unwrap().verified(), "{}", name);
    }
}

#[test]
fn h_tower_is_linear_in_the_seed() {
    let (a, b) = harmonic_type();
    let s = h1_series(30);
    // the first and a scaled copy share a prefactor
    let h = &s[0].1;
    let g = h.scale(&RatFunc::from_frac(-3, 7)).add(&LaurentSeries::monomial(Var::V, SymbolicExponent::zero(), 2, RatFunc::k())).unwrap();
    let th = RecursionTower::indefinite(h.clone(), a.clone(), b.clone(), 8, "h").unwrap();
    let tg = RecursionTower::indefinite(g.clone(), a.clone(), b.clone(), 8, "g").unwrap();
    let ts = RecursionTower::indefinite(h.add(&g).unwrap(), a, b, 8, "h+g").unwrap();
    for i in 0..=8 {
        let sum = th.rungs[i].add(&tg.rungs[i]).unwrap();
        assert!(sum.sub(&ts.rungs[i]).unwrap().is_zero(), "rung {}", i);
    }
}

#[test]
fn h_step_zero_and_constant_seeds() {
    let (a, b) = harmonic_type();
    let z = LaurentSeries::zero(Var::V);
    assert!(h_step(&z, 0, &a, &b).unwrap().is_zero());
    let c = LaurentSeries::monomial(Var::V, SymbolicExponent::zero(), 0, RatFunc::from_int(2));
    let h0 = h0_from_h1(&c, &a, &b).unwrap();
    let expect = (&RatFunc::from_int(2) * &(&a + &b)).checked_div(&(&b - &a)).unwrap();
    assert_eq!(h0.coeff(0).unwrap(), expect);
}

/// Taylor jets at `x0` with the recursion applied in floating point.
fn jet_partial_sum(k: i64, x0: f64, y: f64, seed: [f64; 3], n_max: usize) -> f64 {
    let order = 2 * n_max + 12;
    let kf = k as f64;
    // φ: (x0+t)² φ'' = (p0 + p1 t + t²) φ
    let p0 = x0 * x0 + 2.0 * (kf - 1.0) * x0 + (kf - 1.0) * (kf - 2.0);
    let p1 = 2.0 * x0 + 2.0 * (kf - 1.0);
    let mut a = vec![0.0; order + 3];
    a[0] = seed[1];
    a[1] = seed[2];
    for j in 0..=order {
        let jf = j as f64;
        let mut rhs = p0 * a[j];
        if j >= 1 {
            rhs += p1 * a[j - 1];
        }
        if j >= 2 {
            rhs += a[j - 2];
        }
        rhs -= 2.0 * x0 * (jf + 1.0) * jf * a[j + 1] + jf * (jf - 1.0) * a[j];
        a[j + 2] = rhs / (x0 * x0 * (jf + 2.0) * (jf + 1.0));
    }
    // ψ: (x0+t) ψ' = φ
    let mut b = vec![0.0; order + 1];
    b[0] = seed[0];
    for j in 0..order {
        b[j + 1] = (a[j] - j as f64 * b[j]) / (x0 * (j as f64 + 1.0));
    }
    // (x0+t)^{1−k}
    let m = 1.0 - kf;
    let mut w = vec![0.0; order + 1];
    let mut binom = 1.0;
    for j in 0..=order {
        w[j] = x0.powf(m) * binom * x0.powi(-(j as i32));
        binom *= (m - j as f64) / (j as f64 + 1.0);
    }
    let mul = |p: &[f64], q: &[f64]| -> Vec<f64> {
        let n = p.len().min(q.len());
        (0..n).map(|i| (0..=i).map(|j| p[j] * q[i - j]).sum()).collect()
    };
    let xpoly = |p: &[f64]| -> Vec<f64> {
        // (x0 + t) p
        (0..p.len()).map(|i| x0 * p[i] + if i > 0 { p[i - 1] } else { 0.0 }).collect()
    };
    let xdiv = |p: &[f64]| -> Vec<f64> {
        let mut out = vec![0.0; p.len()];
        for i in 0..p.len() {
            out[i] = (p[i] - if i > 0 { out[i - 1] } else { 0.0 }) / x0;
        }
        out
    };
    let der = |p: &[f64]| -> Vec<f64> { (1..p.len()).map(|i| i as f64 * p[i]).collect() };
    let mut g = mul(&w, &b);
    let mut total = g[0];
    let mut yn = 1.0;
    for n in 0..n_max {
        let d1 = der(&g);
        let d2 = der(&d1);
        let len = d2.len();
        let xg = xpoly(&g);
        let mut t: Vec<f64> = xpoly(&d2[..len]).to_vec();
        let c1 = 2.0 * (2.0 * n as f64 + kf);
        for i in 0..len {
            t[i] += c1 * d1[i] + 2.0 * (1.0 - kf) * g[i] - xg[i];
        }
        let nf = (n + 1) as f64;
        g = xdiv(&t).iter().map(|v| -v / (4.0 * nf * nf)).collect();
        yn *= y;
        total += g[0] * yn;
    }
    total
}

#[test]
fn w_seed_partial_sum_matches_floating_point_recursion() {
    let (k, u, v, n) = (5, 6.0, 1.0, 12);
    let seed = seed_values(SeedKind::WIntegral, k, u).unwrap();
    let tower = HolonomicTower::new(k, n).unwrap();
    let exact = tower.partial_sum(u, v, &seed, n).unwrap();
    let oracle = jet_partial_sum(k, u, v, seed, n);
    assert!(exact.is_finite() && exact != 0.0);
    assert!(((exact - oracle) / exact).abs() < 1e-8, "{} vs {}", exact, oracle);
}

#[test]
fn laurent_seed_partial_sum_matches_floating_point_recursion() {
    for k in [5i64, -5, 3] {
        let tower = HolonomicTower::new(k, 10).unwrap();
        let exact = tower.partial_sum(4.0, 2.5, &[1.0, 0.0, 0.0], 10).unwrap();
        let oracle = jet_partial_sum(k, 4.0, 2.5, [1.0, 0.0, 0.0], 10);
        assert!(((exact - oracle) / exact).abs() < 1e-10, "k={} {} vs {}", k, exact, oracle);
    }
}

#[test]
fn symbolic_and_integer_towers_agree_under_specialization() {
    let (a, b) = harmonic_type();
    let sym = RecursionTower::positive_definite(laurent_seed(), a, b, 8, "laurent").unwrap();
    for k in [-7i64, 2, 9] {
        let t = HolonomicTower::new(k, 8).unwrap();
        for (x, y) in t.laurent_rungs().iter().zip(&sym.rungs) {
            assert_eq!(x, &y.specialize(&k_rational(k)).unwrap());
        }
    }
}

#[test]
fn growth_dichotomy_small_grid() {
    let g = grid(22.0, 40.0, 6.0);
    for k in [5i64, -5] {
        let tower = HolonomicTower::new(k, growth::GROWTH_DEPTH).unwrap();
        let expect = [(SeedKind::Zero, Growth::Moderate), (SeedKind::Laurent, Growth::Rapid), (SeedKind::MIntegral, Growth::Rapid), (SeedKind::WIntegral, Growth::Moderate)];
        for (seed, want) in expect {
            let r = growth::growth_from_tower(&tower, seed, &g, Exec::Parallel).unwrap();
            assert_eq!(r.verdict, want, "k={} seed={:?}", k, seed);
            if seed != SeedKind::Zero {
                assert!(r.kappa > 0.0);
            }
        }
    }
}

#[test]
fn ratio_decay_examples() {
    let r = coeff_ratio_decay(-2, 400).unwrap();
    let from = r.monotone_from.unwrap();
    for n in from..390 {
        assert!(r.values[n + 10] < r.values[n]);
    }
    assert!(r.positive_from.is_some());
    let r5 = coeff_ratio_decay(-5, 400).unwrap();
    assert!(r5.last < 1e-6);
    // exact recomputation of one entry from the defining Pochhammer products
    let exact = ratio::ratios(-2, 5).unwrap();
    // c_1 = 1·4/(9/2·3·7/2), d_1 = (3/2)/(1/2·2), ratio_1 = 2^{-5} c_1/d_1
    let c1 = q(4, 1) / (q(9, 2) * q(3, 1) * q(7, 2));
    let d1 = q(3, 2) / (q(1, 2) * q(2, 1));
    assert_eq!(exact[1], q(1, 32) * c1 / d1);
}
