//! Representatives of `Γ^J_∞\Γ^J`.
//!
//! Left multiplication by `[(1 η; 0 1), (0, n)]` fixes the bottom row `(c, d)`
//! and moves `X` by `n(c, d)`. With `(a, b)` completing the row, every class
//! of `ℤ²/ℤ(c, d)` has exactly one representative `λ(a, b)`, and `λ` is
//! recovered as `X₁d − X₂c`. Bound 0 gives the identity coset alone.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use num_integer::Integer;
use serde::Serialize;

use super::group::JacobiGroupElement;
use crate::error::{Error, Result};

pub const JACOBI_CANONICAL_TAG: &str = "coprime-row-lambda-ab-v1";

#[derive(Clone, Debug, Serialize)]
pub struct JacobiCosetFamily {
    pub bound: i64,
    pub reps: Vec<JacobiGroupElement>,
}

/// `(c, d, λ)` identifying the coset of `g`.
pub fn coset_key(g: &JacobiGroupElement) -> (i64, i64, i64) {
    (g.c, g.d, g.lambda * g.d - g.mu * g.c)
}

fn size(g: &JacobiGroupElement) -> i64 {
    let (c, d, l) = coset_key(g);
    c.abs().max(d.abs()).max(l.abs())
}

fn order_key(g: &JacobiGroupElement) -> (i64, i64, i64, i64) {
    let (c, d, l) = coset_key(g);
    (c.abs().max(d.abs()), c, d, l)
}

/// Coprime `(c, d)` with `|c|, |d| ≤ bound`, each with `λ ∈ [−bound, bound]`.
pub fn jacobi_cosets(bound: i64) -> Result<JacobiCosetFamily> {
    if bound < 0 {
        return Err(Error::Config(format!("negative coset bound {}", bound)));
    }
    if bound == 0 {
        return Ok(JacobiCosetFamily { bound, reps: vec![JacobiGroupElement::identity()] });
    }
    let mut reps = Vec::new();
    for c in -bound..=bound {
        for d in -bound..=bound {
            if c.gcd(&d) != 1 {
                continue;
            }
            let g = JacobiGroupElement::complete(c, d, 0, 0)?;
            for l in -bound..=bound {
                reps.push(JacobiGroupElement { lambda: l * g.a, mu: l * g.b, ..g });
            }
        }
    }
    reps.sort_by_key(order_key);
    Ok(JacobiCosetFamily { bound, reps })
}

impl JacobiCosetFamily {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn restrict(&self, bound: i64) -> JacobiCosetFamily {
        if bound == 0 {
            return JacobiCosetFamily { bound, reps: vec![JacobiGroupElement::identity()] };
        }
        JacobiCosetFamily { bound, reps: self.reps.iter().filter(|g| size(g) <= bound).copied().collect() }
    }

    /// Same header as the Siegel cache; one `a b c d λ μ` line per representative.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "# hsmf coset cache").unwrap();
        writeln!(s, "kind jacobi").unwrap();
        writeln!(s, "bound {}", self.bound).unwrap();
        writeln!(s, "canonical {}", JACOBI_CANONICAL_TAG).unwrap();
        writeln!(s, "count {}", self.reps.len()).unwrap();
        for g in &self.reps {
            writeln!(s, "{} {} {} {} {} {}", g.a, g.b, g.c, g.d, g.lambda, g.mu).unwrap();
        }
        s
    }

    pub fn from_text(text: &str) -> Result<JacobiCosetFamily> {
        let bad = |m: &str| Error::Cache(m.to_string());
        let mut lines = text.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty());
        let mut header = |key: &str| -> Result<String> {
            let l = lines.next().ok_or_else(|| bad(&format!("missing {}", key)))?;
            l.strip_prefix(key)
                .map(|v| v.trim().to_string())
                .ok_or_else(|| bad(&format!("expected '{}', got '{}'", key, l)))
        };
        if header("kind")? != "jacobi" {
            return Err(bad("not a jacobi cache"));
        }
        let bound: i64 = header("bound")?.parse().map_err(|_| bad("bound"))?;
        if header("canonical")? != JACOBI_CANONICAL_TAG {
            return Err(bad("unknown canonicalization"));
        }
        let count: usize = header("count")?.parse().map_err(|_| bad("count"))?;
        let mut reps = Vec::with_capacity(count);
        let mut seen = BTreeSet::new();
        for l in lines {
            let v: Vec<i64> = l.split_whitespace().map(|t| t.parse::<i64>()).collect::<std::result::Result<_, _>>().map_err(|_| bad(l))?;
            if v.len() != 6 {
                return Err(bad(&format!("expected 6 integers: '{}'", l)));
            }
            let g = JacobiGroupElement::new(v[0], v[1], v[2], v[3], v[4], v[5]).map_err(|e| bad(&e.to_string()))?;
            if (bound > 0 && size(&g) > bound) || !seen.insert(coset_key(&g)) {
                return Err(bad(&format!("representative out of bound or repeated: '{}'", l)));
            }
            reps.push(g);
        }
        if reps.len() != count {
            return Err(bad(&format!("count {} but {} representatives", count, reps.len())));
        }
        Ok(JacobiCosetFamily { bound, reps })
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_text())?;
        Ok(())
    }

    pub fn read(path: &Path) -> Result<JacobiCosetFamily> {
        JacobiCosetFamily::from_text(&std::fs::read_to_string(path)?)
    }
}
