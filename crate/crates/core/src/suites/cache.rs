//! On-disk coset caches, one text file per kind and bound.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jacobi::{jacobi_cosets, JacobiCosetFamily};
use crate::siegel::{coset_reps, CosetFamily};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CacheKind {
    Siegel,
    Jacobi,
}

impl std::str::FromStr for CacheKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "siegel" => Ok(CacheKind::Siegel),
            "jacobi" => Ok(CacheKind::Jacobi),
            _ => Err(Error::Config(format!("unknown coset kind {:?} (siegel or jacobi)", s))),
        }
    }
}

/// `<dir>/<kind>-b<bound>.txt`
pub fn cache_path(dir: &Path, kind: CacheKind, bound: i64) -> PathBuf {
    let name = match kind {
        CacheKind::Siegel => "siegel",
        CacheKind::Jacobi => "jacobi",
    };
    dir.join(format!("{}-b{}.txt", name, bound))
}

/// Enumerates the cosets of `kind` up to `bound` and writes them to `path`.
/// Returns the number of representatives.
pub fn cache_cosets(kind: CacheKind, bound: i64, path: &Path) -> Result<usize> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir)?;
    }
    match kind {
        CacheKind::Siegel => {
            let f = coset_reps(bound)?;
            f.write(path)?;
            Ok(f.len())
        }
        CacheKind::Jacobi => {
            let f = jacobi_cosets(bound)?;
            f.write(path)?;
            Ok(f.len())
        }
    }
}

fn check_bound(found: i64, want: i64, path: &Path) -> Result<()> {
    if found != want {
        return Err(Error::Cache(format!("{} holds bound {}, expected {}", path.display(), found, want)));
    }
    Ok(())
}

/// Siegel cosets up to `bound`, read from `dir` when cached there and
/// written there otherwise.
pub fn siegel_family(bound: i64, dir: Option<&Path>) -> Result<CosetFamily> {
    let Some(dir) = dir else { return coset_reps(bound) };
    let path = cache_path(dir, CacheKind::Siegel, bound);
    if path.exists() {
        let f = CosetFamily::read(&path)?;
        check_bound(f.bound, bound, &path)?;
        return Ok(f);
    }
    std::fs::create_dir_all(dir)?;
    let f = coset_reps(bound)?;
    f.write(&path)?;
    Ok(f)
}

pub fn jacobi_family(bound: i64, dir: Option<&Path>) -> Result<JacobiCosetFamily> {
    let Some(dir) = dir else { return jacobi_cosets(bound) };
    let path = cache_path(dir, CacheKind::Jacobi, bound);
    if path.exists() {
        let f = JacobiCosetFamily::read(&path)?;
        check_bound(f.bound, bound, &path)?;
        return Ok(f);
    }
    std::fs::create_dir_all(dir)?;
    let f = jacobi_cosets(bound)?;
    f.write(&path)?;
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_corruption() {
        let dir = std::env::temp_dir().join(format!("hsmf-cache-unit-{}", std::process::id()));
        let a = jacobi_family(2, Some(&dir)).unwrap();
        let b = jacobi_family(2, Some(&dir)).unwrap();
        assert_eq!(a.reps, b.reps);
        let path = cache_path(&dir, CacheKind::Jacobi, 2);
        let text = std::fs::read_to_string(&path).unwrap();
        std::fs::write(&path, text.replacen("bound 2", "bound 3", 1)).unwrap();
        assert!(matches!(jacobi_family(2, Some(&dir)), Err(Error::Cache(_))));
        std::fs::write(&path, "kind jacobi\n").unwrap();
        assert!(matches!(jacobi_family(2, Some(&dir)), Err(Error::Cache(_))));
        std::fs::remove_dir_all(&dir).ok();
        assert!("torus".parse::<CacheKind>().is_err());
    }
}
