#![allow(dead_code)]

use hsmf_core::siegel::SiegelPoint;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A point with `Y` comfortably inside the fundamental-domain-like region.
pub fn siegel_point(r: &mut StdRng) -> SiegelPoint {
    let y = r.gen_range(0.9..1.6);
    let yp = r.gen_range(0.9..1.6);
    let v = r.gen_range(-0.3..0.3) * (y * yp as f64).sqrt();
    SiegelPoint::from_real([r.gen_range(-0.5..0.5), y, r.gen_range(-0.5..0.5), v, r.gen_range(-0.5..0.5), yp]).unwrap()
}

pub fn siegel_points(seed: u64, n: usize) -> Vec<SiegelPoint> {
    let mut r = rng(seed);
    (0..n).map(|_| siegel_point(&mut r)).collect()
}

pub fn jacobi_points(seed: u64, n: usize) -> Vec<hsmf_core::jacobi::JacobiPoint> {
    let mut r = rng(seed);
    (0..n)
        .map(|_| {
            let y = r.gen_range(0.8..1.5);
            hsmf_core::jacobi::JacobiPoint::from_parts(r.gen_range(-0.5..0.5), y, r.gen_range(-0.5..0.5), r.gen_range(-0.3..0.3) * y).unwrap()
        })
        .collect()
}
