//! Representatives of `Γ_∞\Sp₂(ℤ)` and their text cache.
//!
//! Two matrices lie in the same coset iff their bottom blocks `[C D]` differ
//! by a left factor in `GL₂(ℤ)`. The canonical form is the row Hermite normal
//! form of `[C D]`: positive pivots, entries above the second pivot reduced
//! into `[0, pivot)`.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use num_integer::Integer;
use serde::Serialize;

use super::symplectic::{omega_form, SymplecticMatrix};
use crate::error::{Error, Result};

pub const CANONICAL_TAG: &str = "row-hnf-v1";

pub type Block = [[i64; 4]; 2];

/// Row Hermite normal form of a rank-2 block under `GL₂(ℤ)`.
pub fn canonical_form(rows: &Block) -> Result<Block> {
    let mut r = *rows;
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..4 {
        if pivot_row == 2 {
            break;
        }
        // Euclid on the rows from pivot_row down
        loop {
            let nz: Vec<usize> = (pivot_row..2).filter(|&i| r[i][col] != 0).collect();
            if nz.len() <= 1 {
                if let Some(&i) = nz.first() {
                    r.swap(pivot_row, i);
                }
                break;
            }
            let (i, j) = if r[nz[0]][col].abs() <= r[nz[1]][col].abs() { (nz[0], nz[1]) } else { (nz[1], nz[0]) };
            let q = Integer::div_floor(&r[j][col], &r[i][col]);
            for c in 0..4 {
                r[j][c] -= q * r[i][c];
            }
        }
        if r[pivot_row][col] == 0 {
            continue;
        }
        if r[pivot_row][col] < 0 {
            for c in 0..4 {
                r[pivot_row][c] = -r[pivot_row][c];
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    if pivots.len() < 2 {
        return Err(Error::Domain(format!("bottom block has rank < 2: {:?}", rows)));
    }
    let (p2, h2) = (pivots[1], r[1][pivots[1]]);
    let q = Integer::div_floor(&r[0][p2], &h2);
    for c in 0..4 {
        r[0][c] -= q * r[1][c];
    }
    Ok(r)
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

/// Height used for truncation: the largest entry of the canonical block, and
/// `0` for the identity coset (`C = 0`).
pub fn height(canon: &Block) -> i64 {
    if canon[0][..2].iter().chain(&canon[1][..2]).all(|&x| x == 0) {
        return 0;
    }
    canon.iter().flatten().map(|x| x.abs()).max().unwrap_or(0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CosetRep {
    pub canonical: Block,
    pub height: i64,
    pub matrix: SymplecticMatrix,
}

#[derive(Clone, Debug, Serialize)]
pub struct CosetFamily {
    pub bound: i64,
    pub tag: String,
    pub reps: Vec<CosetRep>,
}

impl CosetFamily {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// The subfamily of height `≤ bound`.
    pub fn restrict(&self, bound: i64) -> CosetFamily {
        CosetFamily { bound, tag: self.tag.clone(), reps: self.reps.iter().filter(|r| r.height <= bound).copied().collect() }
    }

    pub fn matrices(&self) -> Vec<SymplecticMatrix> {
        self.reps.iter().map(|r| r.matrix).collect()
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "# hsmf coset cache").unwrap();
        writeln!(s, "kind siegel").unwrap();
        writeln!(s, "bound {}", self.bound).unwrap();
        writeln!(s, "canonical {}", self.tag).unwrap();
        writeln!(s, "count {}", self.reps.len()).unwrap();
        for r in &self.reps {
            let line: Vec<String> = r.matrix.m.iter().flatten().map(|x| x.to_string()).collect();
            writeln!(s, "{}", line.join(" ")).unwrap();
        }
        s
    }

    /// Parses and validates a cache written by [`CosetFamily::to_text`].
    pub fn from_text(text: &str) -> Result<CosetFamily> {
        let bad = |m: &str| Error::Cache(m.to_string());
        let mut lines = text.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty());
        let mut header = |key: &str| -> Result<String> {
            let l = lines.next().ok_or_else(|| bad(&format!("missing {}", key)))?;
            l.strip_prefix(key)
                .map(|v| v.trim().to_string())
                .ok_or_else(|| bad(&format!("expected '{}', got '{}'", key, l)))
        };
        if header("kind")? != "siegel" {
            return Err(bad("not a siegel cache"));
        }
        let bound: i64 = header("bound")?.parse().map_err(|_| bad("bound"))?;
        let tag = header("canonical")?;
        if tag != CANONICAL_TAG {
            return Err(bad(&format!("unknown canonicalization '{}'", tag)));
        }
        let count: usize = header("count")?.parse().map_err(|_| bad("count"))?;
        let mut reps = Vec::with_capacity(count);
        let mut seen = BTreeSet::new();
        for l in lines {
            let v: Vec<i64> = l.split_whitespace().map(|t| t.parse::<i64>()).collect::<std::result::Result<_, _>>().map_err(|_| bad(l))?;
            if v.len() != 16 {
                return Err(bad(&format!("expected 16 integers: '{}'", l)));
            }
            let mut m = [[0; 4]; 4];
            for (i, x) in v.into_iter().enumerate() {
                m[i / 4][i % 4] = x;
            }
            let matrix = SymplecticMatrix::new(m).map_err(|e| bad(&e.to_string()))?;
            let canonical = canonical_form(&matrix.bottom_rows())?;
            let h = height(&canonical);
            if h > bound || !seen.insert(canonical) {
                return Err(bad(&format!("representative out of bound or repeated: '{}'", l)));
            }
            reps.push(CosetRep { canonical, height: h, matrix });
        }
        if reps.len() != count {
            return Err(bad(&format!("count {} but {} representatives", count, reps.len())));
        }
        Ok(CosetFamily { bound, tag, reps })
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_text())?;
        Ok(())
    }

    pub fn read(path: &Path) -> Result<CosetFamily> {
        CosetFamily::from_text(&std::fs::read_to_string(path)?)
    }
}

/// All cosets of height `≤ bound`, each once, sorted by (height, canonical form).
pub fn coset_reps(bound: i64) -> Result<CosetFamily> {
    if bound < 0 {
        return Err(Error::Config(format!("negative coset bound {}", bound)));
    }
    let mut set = BTreeSet::new();
    set.insert((0, [[0, 0, 1, 0], [0, 0, 0, 1]]));
    let b = bound.max(0);
    for p1 in 0..2usize {
        // C ≠ 0 forces the first pivot into C
        for h1 in 1..=b {
            for p2 in p1 + 1..4 {
                for h2 in 1..=b {
                    let mut row0 = [0i64; 4];
                    row0[p1] = h1;
                    let slots0: Vec<usize> = (p1 + 1..4).collect();
                    let slots1: Vec<usize> = (p2 + 1..4).collect();
                    let n0 = slots0.len() as u32;
                    let n1 = slots1.len() as u32;
                    let width = (2 * b + 1) as usize;
                    for i0 in 0..width.pow(n0) {
                        let mut t = i0;
                        let mut ok = true;
                        for &c in &slots0 {
                            row0[c] = (t % width) as i64 - b;
                            t /= width;
                            if c == p2 && !(0..h2).contains(&row0[c]) {
                                ok = false;
                            }
                        }
                        if !ok {
                            continue;
                        }
                        let mut row1 = [0i64; 4];
                        row1[p2] = h2;
                        for i1 in 0..width.pow(n1) {
                            let mut t = i1;
                            for &c in &slots1 {
                                row1[c] = (t % width) as i64 - b;
                                t /= width;
                            }
                            let rows = [row0, row1];
                            if omega_form(&row0, &row1) != 0 || minors_gcd(&rows) != 1 {
                                continue;
                            }
                            debug_assert_eq!(canonical_form(&rows).unwrap(), rows);
                            set.insert((height(&rows), rows));
                        }
                    }
                }
            }
        }
    }
    let reps = set
        .into_iter()
        .map(|(h, c)| Ok(CosetRep { canonical: c, height: h, matrix: SymplecticMatrix::complete(&c)? }))
        .collect::<Result<Vec<_>>>()?;
    Ok(CosetFamily { bound: b, tag: CANONICAL_TAG.to_string(), reps })
}
