//! Seeded sample points away from the boundary.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::jacobi::JacobiPoint;
use crate::siegel::SiegelPoint;

pub fn siegel_points(seed: u64, n: usize) -> Vec<SiegelPoint> {
    let mut r = StdRng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let y = r.gen_range(0.9..1.6);
            let yp = r.gen_range(0.9..1.6);
            let v = r.gen_range(-0.3..0.3) * f64::sqrt(y * yp);
            SiegelPoint::from_real([r.gen_range(-0.5..0.5), y, r.gen_range(-0.5..0.5), v, r.gen_range(-0.5..0.5), yp])
                .expect("Y is positive definite by construction")
        })
        .collect()
}

pub fn jacobi_points(seed: u64, n: usize) -> Vec<JacobiPoint> {
    let mut r = StdRng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let y = r.gen_range(0.8..1.5);
            let (x, u) = (r.gen_range(-0.5..0.5), r.gen_range(-0.5..0.5));
            JacobiPoint::from_parts(x, y, u, r.gen_range(-0.3..0.3) * y).expect("y > 0")
        })
        .collect()
}
