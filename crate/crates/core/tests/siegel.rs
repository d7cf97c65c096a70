mod common;

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use hsmf_core::eval::Evaluator;
use hsmf_core::exec::Exec;
use hsmf_core::siegel::cosets::height;
use hsmf_core::siegel::point::C64;
use hsmf_core::siegel::*;
use hsmf_core::stencil::Stencil;
use proptest::prelude::*;
use rand::Rng;

use common::{rng, siegel_points};

/// Cosets reached by words of length `≤ len` in the generators, by canonical form.
fn word_oracle(len: usize, max_height: i64) -> BTreeSet<[[i64; 4]; 2]> {
    let gens = SymplecticMatrix::generators();
    let mut seen: HashSet<SymplecticMatrix> = HashSet::new();
    let mut frontier = vec![SymplecticMatrix::identity()];
    seen.insert(SymplecticMatrix::identity());
    let mut cosets = BTreeSet::new();
    for _ in 0..=len {
        let mut next = Vec::new();
        for m in &frontier {
            let c = canonical_form(&m.bottom_rows()).unwrap();
            if height(&c) <= max_height {
                cosets.insert(c);
            }
            for g in &gens {
                let w = m.mul(g);
                // entries of short words stay small; cap to keep the search finite
                if w.m.iter().flatten().all(|x| x.abs() <= 6) && seen.insert(w) {
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    cosets
}

#[test]
fn bound_one_matches_word_enumeration() {
    let fam = coset_reps(1).unwrap();
    let ours: BTreeSet<_> = fam.reps.iter().map(|r| r.canonical).collect();
    let oracle = word_oracle(8, 1);
    assert_eq!(ours.len(), fam.len());
    assert_eq!(ours, oracle);
}

#[test]
fn families_are_nested_and_symplectic() {
    let mut prev: Option<BTreeSet<_>> = None;
    for b in 0..=4 {
        let fam = coset_reps(b).unwrap();
        let set: BTreeSet<_> = fam.reps.iter().map(|r| r.canonical).collect();
        assert_eq!(set.len(), fam.len(), "duplicate canonical forms");
        assert!(set.contains(&[[0, 0, 1, 0], [0, 0, 0, 1]]));
        for r in &fam.reps {
            assert!(r.matrix.is_symplectic());
            assert_eq!(canonical_form(&r.matrix.bottom_rows()).unwrap(), r.canonical);
        }
        if let Some(p) = prev {
            assert!(p.is_subset(&set));
        }
        prev = Some(set);
    }
}

#[test]
fn cache_is_deterministic_and_validated() {
    let dir = std::env::temp_dir().join(format!("hsmf-siegel-cache-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("siegel-2.txt");
    let fam = coset_reps(2).unwrap();
    fam.write(&path).unwrap();
    let first = std::fs::read(&path).unwrap();
    coset_reps(2).unwrap().write(&path).unwrap();
    assert_eq!(first, std::fs::read(&path).unwrap());
    let back = CosetFamily::read(&path).unwrap();
    assert_eq!(back.len(), fam.len());
    // a duplicated line is rejected
    let text = String::from_utf8(first).unwrap();
    let last = text.lines().last().unwrap().to_string();
    let corrupted = text.replace("count", "count 1").replace("count 1 ", "count ") + &last + "\n";
    assert!(CosetFamily::from_text(&corrupted).is_err());
    std::fs::remove_dir_all(&dir).ok();
}

fn random_word(r: &mut impl Rng, len: usize) -> SymplecticMatrix {
    let gens = SymplecticMatrix::generators();
    (0..len).fold(SymplecticMatrix::identity(), |m, _| m.mul(&gens[r.gen_range(0..gens.len())]))
}

fn test_function() -> SiegelEvaluator {
    // neither holomorphic nor invariant
    Evaluator::total("probe", "", |z: &SiegelPoint| {
        (C64::new(0.0, 1.3) * z.tau + C64::new(0.0, 0.7) * z.z - C64::new(0.2, 0.9) * z.tau_p).exp() * z.det_y().powf(0.3)
    })
}

#[test]
fn slash_cocycle() {
    let mut r = rng(11);
    let g = test_function();
    for (i, z) in siegel_points(12, 10).iter().enumerate() {
        let m1 = random_word(&mut r, 3);
        let m2 = random_word(&mut r, 3);
        let (a, b) = if i % 2 == 0 { (0.5, 4.5) } else { (0.5, -5.5) };
        let two_step = slash(&slash(&g, m1, a, b).unwrap(), m2, a, b).unwrap().eval(z).unwrap();
        let one_step = slash(&g, m1.mul(&m2), a, b).unwrap().eval(z).unwrap();
        assert!((two_step - one_step).norm() <= 1e-9 * one_step.norm().max(1e-300), "{} vs {}", two_step, one_step);
    }
}

#[test]
fn det_power_under_gamma_infinity() {
    let s = 0.8;
    let g = det_y_power(s);
    let z = siegel_points(3, 1)[0];
    for t in [SymplecticMatrix::translation(1, 0, 0), SymplecticMatrix::translation(0, 1, 0), SymplecticMatrix::translation(0, 0, -1)] {
        let v = slash(&g, t, 0.5, 4.5).unwrap().eval(&z).unwrap();
        assert!((v - g.eval(&z).unwrap()).norm() < 1e-13);
    }
    // det D = −1: L = iπ, so the factor is e^{−iπ(α−β)} = (−1)^{k−1}
    for k in [5i64, 4] {
        let swap = SymplecticMatrix::rotation([[0, 1], [1, 0]]).unwrap();
        let v = slash(&g, swap, 0.5, k as f64 - 0.5).unwrap().eval(&z).unwrap();
        let want = g.eval(&z).unwrap() * if k % 2 == 0 { -1.0 } else { 1.0 };
        assert!((v - want).norm() < 1e-12, "k={} {} vs {}", k, v, want);
    }
}

#[test]
fn eisenstein_matches_maass_series() {
    let fam = coset_reps(3).unwrap();
    for (k, s) in [(5i64, 0.0), (5, 0.7), (-5, 6.5)] {
        for z in siegel_points(4, 3) {
            let p = eisenstein_p(k, s, &z, &fam, Exec::Parallel).unwrap();
            let e = maass_eisenstein(s + 0.5, s + k as f64 - 0.5, &z, &fam, Exec::Sequential).unwrap();
            let rebuilt = z.det_y().powf(s) * e;
            assert!((p - rebuilt).norm() < 1e-12 * p.norm(), "k={} s={}: {} vs {}", k, s, p, rebuilt);
        }
    }
}

#[test]
fn sequential_and_parallel_sums_agree_bitwise() {
    let fam = coset_reps(3).unwrap();
    let z = siegel_points(5, 1)[0];
    let a = eisenstein_p(5, 0.0, &z, &fam, Exec::Sequential).unwrap();
    let b = eisenstein_p(5, 0.0, &z, &fam, Exec::Parallel).unwrap();
    assert_eq!(a, b);
}

#[test]
fn invariance_defect_shrinks_with_bound() {
    // the decrease is not monotone bound by bound; compare well-separated bounds
    let full = coset_reps(8).unwrap();
    let mut r = rng(21);
    let (k, s) = (5i64, 0.0);
    let beta = k as f64 - 0.5;
    for z in siegel_points(22, 3) {
        let m = random_word(&mut r, 2);
        let w = m.act(&z).unwrap();
        let defect = |b: i64| {
            let f = full.restrict(b);
            let p = eisenstein_p(k, s, &z, &f, Exec::Parallel).unwrap();
            let pm = eisenstein_p(k, s, &w, &f, Exec::Parallel).unwrap();
            (automorphy_factor(&m, &z, 0.5, beta).unwrap() * pm - p).norm() / p.norm()
        };
        let (d2, d8) = (defect(2), defect(8));
        assert!(d8 < d2, "defect {} -> {}", d2, d8);
    }
}

#[test]
fn growth_along_scalar_ray_is_polynomial() {
    let fam = coset_reps(3).unwrap();
    let ts: Vec<f64> = (0..8).map(|i| 50f64.powf(i as f64 / 7.0)).collect();
    let vals: Vec<f64> = ts.iter().map(|&t| eisenstein_p(5, 0.0, &SiegelPoint::scalar(t), &fam, Exec::Parallel).unwrap().norm()).collect();
    for i in 1..ts.len() {
        let slope = (vals[i].ln() - vals[i - 1].ln()) / (ts[i].ln() - ts[i - 1].ln());
        assert!(slope.abs() < 8.0, "log-log slope {} at t={}", slope, ts[i]);
    }
}

fn rel(a: C64, b: C64) -> f64 {
    (a - b).norm() / b.norm()
}

#[test]
fn omega_eigenvalue_on_det_power() {
    let st = Stencil::default();
    for (k, s) in [(5i64, 0.3), (-5, 6.5), (3, -1.2)] {
        let (a, b) = (0.5, k as f64 - 0.5);
        for z in siegel_points(31, 4) {
            let o = omega_apply(&det_y_power(s), &z, a, b, &st).unwrap();
            let scale = z.det_y().powf(s);
            let want = C64::new(-s * (s - (1.5 - k as f64)) * scale, 0.0);
            // the eigenvalue vanishes at s = 3/2 − k; measure against (det Y)^s
            let tol = 1e-6 * want.norm().max(scale);
            assert!((o[0][0] - want).norm() < tol && (o[1][1] - want).norm() < tol, "{:?} vs {}", o, want);
            assert!(o[0][1].norm() < tol && o[1][0].norm() < tol);
        }
    }
}

#[test]
fn omega_stencil_is_fourth_order() {
    let s = 2.5;
    let z = SiegelPoint::from_real([0.1, 1.2, 0.2, 0.25, -0.1, 1.1]).unwrap();
    let want = -s * (s - (1.5 - 5.0)) * z.det_y().powf(s);
    let err = |h: f64| {
        let o = omega_apply(&det_y_power(s), &z, 0.5, 4.5, &Stencil::new(h).unwrap()).unwrap();
        (o[0][0] - want).norm() + (o[1][1] - want).norm() + o[0][1].norm()
    };
    let (e1, e2) = (err(0.08), err(0.04));
    assert!(e1 / e2 > 12.0, "{} / {} = {}", e1, e2, e1 / e2);
}

#[test]
fn holomorphic_exponentials_are_annihilated() {
    let st = Stencil::default();
    for (n, r, m) in [(1.0, 1.0, 1.0), (2.0, -1.0, 1.0), (1.0, 0.0, 3.0)] {
        let g = exp_trace(n, r, m);
        for z in siegel_points(41, 3) {
            let o = omega_apply(&g, &z, 5.0, 0.0, &st).unwrap();
            let scale = g.eval(&z).unwrap().norm();
            assert!(o.iter().flatten().all(|x| x.norm() < 1e-6 * scale.max(1e-3)), "{:?}", o);
        }
    }
}

#[test]
fn m_operator_and_xi_on_det_power() {
    let st = Stencil::default();
    for k in [5i64, -5] {
        let s = 1.5 - k as f64;
        for z in siegel_points(51, 3) {
            let m = maass_m(&det_y_power(0.9), 0.5, &z, &st).unwrap();
            assert!(rel(m, C64::new(0.9 * 1.4 * z.det_y().powf(0.9), 0.0)) < 1e-6);
            let x = xi2(&det_y_power(s), k, &z, &st).unwrap();
            assert!(rel(x, C64::new(s * (s + 0.5), 0.0)) < 1e-6, "k={} {}", k, x);
        }
    }
}

#[test]
fn n_operator_two_routes() {
    // N_0 of a holomorphic function: through maass_n and through a hand-built i∘M∘i
    let (n, r, m) = (1.0, 1.0, 2.0);
    let g = exp_trace(n, r, m);
    let st = Stencil::default();
    let z = siegel_points(61, 1)[0];
    let direct = {
        let conj = Evaluator::total("g(-conj W)", "", move |w: &SiegelPoint| {
            let tr = n * -w.tau.conj() + r * -w.z.conj() + m * -w.tau_p.conj();
            (C64::new(0.0, 2.0 * std::f64::consts::PI) * tr).exp()
        });
        maass_m(&conj, 0.0, &z.neg_conj(), &st).unwrap()
    };
    let via = maass_n(&g, 0.0, &z, &st).unwrap();
    assert!((direct - via).norm() < 1e-9);
    // M_0 on the same function has a closed form
    let e = C64::new(0.0, 2.0 * std::f64::consts::PI);
    let euler = C64::new(0.0, 2.0) * (z.tau.im * n + z.z.im * r + z.tau_p.im * m) * e;
    let lap = e * e * (n * m - 0.25 * r * r);
    let want = (-0.5 * euler - 4.0 * z.det_y() * lap) * g.eval(&z).unwrap();
    assert!(rel(maass_m(&g, 0.0, &z, &st).unwrap(), want) < 1e-6);
}

#[test]
fn casimir_kernel_and_control() {
    let inner = Stencil::new(NESTED_STEP).unwrap();
    let outer = inner;
    let z = siegel_points(71, 1)[0];
    for (k, s) in [(5i64, 0.0), (5, -3.5), (5, -0.5), (-5, 6.5), (-5, 7.0)] {
        let c = casimir_c(&det_y_power(s), k, &z, inner, &outer).unwrap();
        assert!(c.norm() < 1e-4 * z.det_y().powf(s), "k={} s={} {}", k, s, c);
    }
    // control s = 1, k = 5: eigenvalue s(s+½)(s+k−3/2)(s+k−2) from the two one-step relations
    let st = Stencil::default();
    let m = maass_m(&det_y_power(1.0), 0.5, &z, &st).unwrap() / z.det_y();
    let n = maass_n(&det_y_power(1.0), 3.5, &z, &st).unwrap() / z.det_y();
    let c = casimir_c(&det_y_power(1.0), 5, &z, inner, &outer).unwrap() / z.det_y();
    assert!(c.norm() > 1.0);
    assert!(rel(c, m * n) < 1e-4, "{} vs {}", c, m * n);
}

#[test]
fn omega_is_symmetric_on_eisenstein_truncation() {
    let fam = Arc::new(coset_reps(2).unwrap());
    let p = eisenstein_evaluator(5, 0.0, fam, Exec::Parallel).unwrap();
    let z = siegel_points(81, 1)[0];
    let o = omega_apply(&p, &z, 0.5, 4.5, &Stencil::default()).unwrap();
    let scale = o.iter().flatten().map(|x| x.norm()).fold(0.0, f64::max).max(1e-12);
    assert!((o[0][1] - o[1][0]).norm() < 1e-6 * scale.max(1.0), "{:?}", o);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn omega_symmetric_on_det_powers(s in -3.0f64..3.0, x in -0.5f64..0.5, v in -0.3f64..0.3) {
        let z = SiegelPoint::from_real([x, 1.1, 0.2, v, -x, 1.3]).unwrap();
        let o = omega_apply(&det_y_power(s), &z, 0.5, 4.5, &Stencil::default().with_exec(Exec::Sequential)).unwrap();
        prop_assert!((o[0][1] - o[1][0]).norm() < 1e-6 * (1.0 + o[0][0].norm()));
    }

    #[test]
    fn canonicalization_is_idempotent(a in -4i64..5, b in -4i64..5, c in -4i64..5, d in -4i64..5) {
        // left GL₂ factor applied to the bottom block of a random word
        let mut r = rng((a + 10 + 20 * (b + 10) + 400 * (c + 10)) as u64);
        let m = random_word(&mut r, 5);
        let rows = m.bottom_rows();
        let c0 = canonical_form(&rows).unwrap();
        prop_assert_eq!(canonical_form(&c0).unwrap(), c0);
        if a * d - b * c == 1 || a * d - b * c == -1 {
            let mixed = [[0, 1, 2, 3].map(|j| a * rows[0][j] + b * rows[1][j]), [0, 1, 2, 3].map(|j| c * rows[0][j] + d * rows[1][j])];
            prop_assert_eq!(canonical_form(&mixed).unwrap(), c0);
        }
    }
}
