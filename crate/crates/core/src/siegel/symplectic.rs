use num_integer::Integer;
use serde::Serialize;

use super::point::{mat_add, mat_det, mat_from_int, mat_inv, mat_mul, Mat2, SiegelPoint, C64};
use crate::error::{Error, Result};

/// Integer `M = (A B; C D)` stored as a full 4×4 matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SymplecticMatrix {
    pub m: [[i64; 4]; 4],
}

/// `ω(x, y) = x₁y₃ + x₂y₄ − x₃y₁ − x₄y₂`
pub fn omega_form(x: &[i64; 4], y: &[i64; 4]) -> i64 {
    x[0] * y[2] + x[1] * y[3] - x[2] * y[0] - x[3] * y[1]
}

impl SymplecticMatrix {
    /// Checks the symplectic relations.
    pub fn new(m: [[i64; 4]; 4]) -> Result<Self> {
        let s = SymplecticMatrix { m };
        if !s.is_symplectic() {
            return Err(Error::Domain(format!("not symplectic: {:?}", m)));
        }
        Ok(s)
    }

    pub fn identity() -> Self {
        let mut m = [[0; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        SymplecticMatrix { m }
    }

    /// `J = (0 I; −I 0)`
    pub fn j() -> Self {
        SymplecticMatrix { m: [[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]] }
    }

    /// `(I S; 0 I)` for symmetric `S`.
    pub fn translation(s11: i64, s12: i64, s22: i64) -> Self {
        SymplecticMatrix { m: [[1, 0, s11, s12], [0, 1, s12, s22], [0, 0, 1, 0], [0, 0, 0, 1]] }
    }

    /// `(U 0; 0 ᵗU⁻¹)` for `U ∈ GL₂(ℤ)`.
    pub fn rotation(u: [[i64; 2]; 2]) -> Result<Self> {
        let det = u[0][0] * u[1][1] - u[0][1] * u[1][0];
        if det.abs() != 1 {
            return Err(Error::Domain(format!("not unimodular: {:?}", u)));
        }
        // ᵗU⁻¹ = det · (d −c; −b a)
        let w = [[det * u[1][1], -det * u[1][0]], [-det * u[0][1], det * u[0][0]]];
        let mut m = [[0; 4]; 4];
        for i in 0..2 {
            for j in 0..2 {
                m[i][j] = u[i][j];
                m[i + 2][j + 2] = w[i][j];
            }
        }
        Ok(SymplecticMatrix { m })
    }

    /// A generating set of `Sp₂(ℤ)` closed under inverses.
    pub fn generators() -> Vec<Self> {
        let mut g = vec![Self::j(), Self::j().inverse()];
        for (a, b, c) in [(1, 0, 0), (0, 1, 0), (0, 0, 1)] {
            g.push(Self::translation(a, b, c));
            g.push(Self::translation(-a, -b, -c));
        }
        let r = Self::rotation([[1, 1], [0, 1]]).unwrap();
        g.push(r);
        g.push(r.inverse());
        g.push(Self::rotation([[0, 1], [1, 0]]).unwrap());
        g
    }

    pub fn block(&self, bi: usize, bj: usize) -> [[i64; 2]; 2] {
        let (r, c) = (2 * bi, 2 * bj);
        [[self.m[r][c], self.m[r][c + 1]], [self.m[r + 1][c], self.m[r + 1][c + 1]]]
    }

    pub fn a(&self) -> [[i64; 2]; 2] {
        self.block(0, 0)
    }
    pub fn b(&self) -> [[i64; 2]; 2] {
        self.block(0, 1)
    }
    pub fn c(&self) -> [[i64; 2]; 2] {
        self.block(1, 0)
    }
    pub fn d(&self) -> [[i64; 2]; 2] {
        self.block(1, 1)
    }

    /// `M J ᵗM = J`
    pub fn is_symplectic(&self) -> bool {
        let j = Self::j().m;
        (0..4).all(|r| (0..4).all(|s| omega_form(&self.m[r], &self.m[s]) == j[r][s]))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut m = [[0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                m[i][j] = (0..4).map(|l| self.m[i][l] * o.m[l][j]).sum();
            }
        }
        SymplecticMatrix { m }
    }

    /// `M⁻¹ = (ᵗD −ᵗB; −ᵗC ᵗA)`
    pub fn inverse(&self) -> Self {
        let mut m = [[0; 4]; 4];
        for i in 0..2 {
            for j in 0..2 {
                m[i][j] = self.m[j + 2][i + 2];
                m[i][j + 2] = -self.m[j][i + 2];
                m[i + 2][j] = -self.m[j + 2][i];
                m[i + 2][j + 2] = self.m[j][i];
            }
        }
        SymplecticMatrix { m }
    }

    pub fn bottom_rows(&self) -> [[i64; 4]; 2] {
        [self.m[2], self.m[3]]
    }

    /// `CZ + D`
    pub fn cz_d(&self, z: &SiegelPoint) -> Mat2 {
        mat_add(&mat_mul(&mat_from_int(&self.c()), &z.matrix()), &mat_from_int(&self.d()))
    }

    /// `det(CZ + D)`; errors if it vanishes.
    pub fn j_factor(&self, z: &SiegelPoint) -> Result<C64> {
        let d = mat_det(&self.cz_d(z));
        if d.norm() == 0.0 {
            return Err(Error::Domain("det(CZ+D) = 0".into()));
        }
        Ok(d)
    }

    /// `M∘Z = (AZ + B)(CZ + D)⁻¹`
    pub fn act(&self, z: &SiegelPoint) -> Result<SiegelPoint> {
        let num = mat_add(&mat_mul(&mat_from_int(&self.a()), &z.matrix()), &mat_from_int(&self.b()));
        let w = mat_mul(&num, &mat_inv(&self.cz_d(z))?);
        SiegelPoint::from_matrix(&w)
    }

    /// Completes a primitive Lagrangian bottom block `[C D]` to a matrix of `Sp₂(ℤ)`.
    pub fn complete(rows: &[[i64; 4]; 2]) -> Result<Self> {
        let (c1, c2) = (rows[0], rows[1]);
        if omega_form(&c1, &c2) != 0 {
            return Err(Error::Domain(format!("C ᵗD not symmetric: {:?}", rows)));
        }
        // x ↦ (ω(x, c1), ω(x, c2)) as a 2×4 integer matrix G
        let g_row = |c: &[i64; 4]| [c[2], c[3], -c[0], -c[1]];
        let g = [g_row(&c1), g_row(&c2)];
        let (l, v) = column_reduce(g)?;
        // G V = [L 0]; solve L y = e_i then x = V[:, 0..2] y
        let det = l[0][0] * l[1][1];
        if det.abs() != 1 {
            return Err(Error::Domain(format!("[C D] is not primitive: {:?}", rows)));
        }
        let solve = |e: [i64; 2]| -> [i64; 4] {
            let y0 = e[0] / l[0][0];
            let y1 = (e[1] - l[1][0] * y0) / l[1][1];
            let mut x = [0; 4];
            for (i, xi) in x.iter_mut().enumerate() {
                *xi = v[i][0] * y0 + v[i][1] * y1;
            }
            x
        };
        let mut f1 = solve([1, 0]);
        let f2 = solve([0, 1]);
        let t = omega_form(&f1, &f2);
        for i in 0..4 {
            f1[i] += t * c2[i];
        }
        Self::new([f1, f2, c1, c2])
    }
}

/// Column operations turning a 2×4 matrix into `[L 0]` with `L` lower triangular.
/// Returns `L` and the accumulated unimodular `V`.
fn column_reduce(mut g: [[i64; 4]; 2]) -> Result<([[i64; 2]; 2], [[i64; 4]; 4])> {
    let mut v = [[0i64; 4]; 4];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1;
    }
    for r in 0..2 {
        // gather the gcd of row r (columns r..4) into column r
        loop {
            let nz: Vec<usize> = (r..4).filter(|&j| g[r][j] != 0).collect();
            if nz.is_empty() {
                return Err(Error::Domain("rank deficient bottom block".into()));
            }
            if nz.len() == 1 {
                let j = nz[0];
                swap_cols(&mut g, &mut v, r, j);
                break;
            }
            let p = *nz.iter().min_by_key(|&&j| g[r][j].abs()).unwrap();
            for &j in &nz {
                if j != p {
                    let q = Integer::div_floor(&g[r][j], &g[r][p]);
                    add_col(&mut g, &mut v, j, p, -q);
                }
            }
        }
    }
    Ok(([[g[0][0], g[0][1]], [g[1][0], g[1][1]]], v))
}

fn swap_cols(g: &mut [[i64; 4]; 2], v: &mut [[i64; 4]; 4], a: usize, b: usize) {
    for row in g.iter_mut() {
        row.swap(a, b);
    }
    for row in v.iter_mut() {
        row.swap(a, b);
    }
}

/// column `dst += q · column src`
fn add_col(g: &mut [[i64; 4]; 2], v: &mut [[i64; 4]; 4], dst: usize, src: usize, q: i64) {
    for row in g.iter_mut() {
        row[dst] += q * row[src];
    }
    for row in v.iter_mut() {
        row[dst] += q * row[src];
    }
}
