//! Orbits of `Γ_∞\Sp₂(ℤ)` under right translation `Z ↦ Z + E₂₂`.
//!
//! Height truncation of the coset sum is not periodic in `x′`: translating
//! moves cosets across the bound. Summing whole orbits restores periodicity.
//! On `[C D]` the translation adds the second column of `C` to the second
//! column of `D`. An orbit is stored through the row Hermite form of the
//! permuted block `[C₂ C₁ D₁ D₂]`, whose `D₂` entry in the first row is then
//! only defined modulo `h₁` (or `gcd(h₁, h₂)` when the second pivot sits in
//! `D₂`) and is reduced into that range.

use std::collections::BTreeSet;

use num_integer::Integer;

use super::cosets::{canonical_form, coset_reps, Block};
use super::point::C64;
use super::symplectic::{omega_form, SymplecticMatrix};
use crate::error::{Error, Result};

const PERM: [usize; 4] = [1, 0, 2, 3];

fn permute(b: &Block) -> Block {
    let mut out = [[0; 4]; 2];
    for r in 0..2 {
        for (c, &p) in PERM.iter().enumerate() {
            out[r][c] = b[r][p];
        }
    }
    out
}

/// `PERM` is an involution.
fn unpermute(b: &Block) -> Block {
    permute(b)
}

/// Canonical orbit representative of a bottom block, in original column
/// order, or `None` when the second column of `C` vanishes (a fixed coset).
pub fn orbit_canonical(rows: &Block) -> Result<Option<Block>> {
    let mut h = canonical_form(&permute(rows))?;
    if h[0][0] == 0 {
        return Ok(None);
    }
    let p2 = (1..4).find(|&c| h[1][c] != 0).unwrap_or(3);
    let g = if p2 == 3 { h[0][0].gcd(&h[1][3]) } else { h[0][0] };
    h[0][3] = h[0][3].mod_floor(&g);
    Ok(Some(unpermute(&h)))
}

/// One orbit: a representative and the affine data of `det(CZ+D)` in `τ′`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Orbit {
    pub canonical: Block,
    pub matrix: SymplecticMatrix,
    /// `false` for cosets fixed by the translation
    pub free: bool,
}

impl Orbit {
    /// `det(CZ+D) = a₀ + a₁ τ′` with `a₀ = det(CZ+D)|_{τ′=0}`.
    pub fn affine_det(&self, tau: C64, w: C64) -> (C64, C64) {
        let b = self.canonical;
        // rows of CZ+D without the τ′ contribution
        let row = |r: &[i64; 4]| {
            let (c1, c2, d1, d2) = (r[0] as f64, r[1] as f64, r[2] as f64, r[3] as f64);
            (c1 * tau + c2 * w + d1, c1 * w + d2, c2)
        };
        let (p0, q0, s0) = row(&b[0]);
        let (p1, q1, s1) = row(&b[1]);
        // second entry of each row is q + s τ′
        let a0 = p0 * q1 - p1 * q0;
        let a1 = p0 * s1 - p1 * s0;
        (a0, a1)
    }
}

/// Orbit family: every orbit whose canonical block has entries `≤ bound`,
/// plus the fixed cosets of height `≤ bound`.
#[derive(Clone, Debug)]
pub struct OrbitFamily {
    pub bound: i64,
    pub orbits: Vec<Orbit>,
}

impl OrbitFamily {
    pub fn free(&self) -> impl Iterator<Item = &Orbit> {
        self.orbits.iter().filter(|o| o.free)
    }
}

fn minors_gcd(r: &Block) -> i64 {
    let mut g = 0i64;
    for i in 0..4 {
        for j in i + 1..4 {
            g = g.gcd(&(r[0][i] * r[1][j] - r[0][j] * r[1][i]));
        }
    }
    g
}

pub fn x_orbits(bound: i64) -> Result<OrbitFamily> {
    if bound < 0 {
        return Err(Error::Config(format!("negative orbit bound {}", bound)));
    }
    let b = bound;
    let mut set = BTreeSet::new();
    for h1 in 1..=b {
        for p2 in 1..4usize {
            for h2 in 1..=b {
                let g = if p2 == 3 { h1.gcd(&h2) } else { h1 };
                let range = |c: usize| -> (i64, i64) {
                    if c == 3 {
                        (0, g - 1)
                    } else if c == p2 {
                        (0, h2 - 1)
                    } else {
                        (-b, b)
                    }
                };
                let r0: Vec<(i64, i64)> = (1..4).map(range).collect();
                let r1: Vec<(i64, i64)> = (p2 + 1..4).map(|_| (-b, b)).collect();
                for a in product(&r0) {
                    let mut row0 = [h1, 0, 0, 0];
                    row0[1..].copy_from_slice(&a);
                    for t in product(&r1) {
                        let mut row1 = [0i64; 4];
                        row1[p2] = h2;
                        for (i, x) in t.iter().enumerate() {
                            row1[p2 + 1 + i] = *x;
                        }
                        let blk = unpermute(&[row0, row1]);
                        if omega_form(&blk[0], &blk[1]) != 0 || minors_gcd(&blk) != 1 {
                            continue;
                        }
                        set.insert(blk);
                    }
                }
            }
        }
    }
    let mut orbits = Vec::with_capacity(set.len());
    for blk in set {
        orbits.push(Orbit { canonical: blk, matrix: SymplecticMatrix::complete(&blk)?, free: true });
    }
    for r in coset_reps(b)?.reps {
        if r.canonical.iter().all(|row| row[1] == 0) {
            orbits.push(Orbit { canonical: r.canonical, matrix: r.matrix, free: false });
        }
    }
    Ok(OrbitFamily { bound, orbits })
}

/// Cartesian product of inclusive integer ranges.
fn product(ranges: &[(i64, i64)]) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for &(lo, hi) in ranges {
        let mut next = Vec::new();
        for v in &out {
            for x in lo..=hi {
                let mut w = v.clone();
                w.push(x);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::siegel::SiegelPoint;

    #[test]
    fn counts() {
        assert_eq!(x_orbits(3).unwrap().free().count(), 538);
        assert_eq!(x_orbits(4).unwrap().free().count(), 1600);
    }

    #[test]
    fn canonical_is_translation_invariant() {
        let fam = x_orbits(2).unwrap();
        for o in fam.free() {
            let mut b = o.canonical;
            for _ in 0..3 {
                for r in b.iter_mut() {
                    r[3] += r[1];
                }
                assert_eq!(orbit_canonical(&b).unwrap(), Some(o.canonical));
            }
        }
    }

    #[test]
    fn affine_det_matches_matrix() {
        let fam = x_orbits(2).unwrap();
        let z = SiegelPoint::from_real([0.1, 1.1, 0.2, 0.3, -0.2, 0.9]).unwrap();
        for o in fam.orbits.iter().take(200) {
            let (a0, a1) = o.affine_det(z.tau, z.z);
            let j = o.matrix.j_factor(&z).unwrap();
            assert!((a0 + a1 * z.tau_p - j).norm() < 1e-12 * (1.0 + j.norm()));
        }
    }
}
