//! Plain-text catalog cache.
//!
//! The file records the algebra hash, the indecomposables and the derived
//! tables. Loading rebuilds the catalog from the stored modules, recomputes
//! every table and insists that re-serialization reproduces the file exactly.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use sha2::{Digest, Sha256};

use crate::algebra::Algebra;
use crate::catalog::Catalog;
use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::linalg::Matrix;
use crate::module::{Limits, Module};

pub const CACHE_VERSION: u32 = 1;
const MAGIC: &str = "icelab-catalog";

/// Hash of the normalized algebra text and the search bound.
pub fn cache_key<F: FiniteField>(algebra: &Algebra<F>, max_bound: usize) -> String {
    let mut h = Sha256::new();
    h.update(algebra.spec().to_text().as_bytes());
    h.update(format!("\nmax_bound {max_bound}\nversion {CACHE_VERSION}\n").as_bytes());
    hex::encode(h.finalize())
}

pub fn cache_path(dir: &Path, key: &str) -> PathBuf {
    dir.join(format!("{}.catalog", &key[..16]))
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "-".to_string(), |t| t.to_string())
}

pub fn serialize<F: FiniteField>(cat: &Catalog<F>, key: &str) -> String {
    let n = cat.len();
    let mut out = String::new();
    let _ = writeln!(out, "{MAGIC} {CACHE_VERSION}");
    let _ = writeln!(out, "key {key}");
    let _ = writeln!(out, "characteristic {}", F::CHARACTERISTIC);
    let _ = writeln!(out, "dim_bound {}", cat.dim_bound());
    let _ = writeln!(out, "entries {n}");
    for (i, m) in cat.entries().iter().enumerate() {
        let dims: Vec<String> = m.dims().iter().map(|d| d.to_string()).collect();
        let _ = writeln!(out, "module {} {}", cat.label(i), dims.join(" "));
        for (a, mat) in m.maps().iter().enumerate() {
            let vals: Vec<String> = mat.data().iter().map(|x| x.index().to_string()).collect();
            let _ = writeln!(out, "map {a} {} {} {}", mat.rows(), mat.cols(), vals.join(" "));
        }
    }
    for (name, f) in [("hom", Catalog::<F>::hom as fn(&Catalog<F>, usize, usize) -> usize), ("ext", Catalog::<F>::ext)] {
        for i in 0..n {
            let row: Vec<String> = (0..n).map(|j| f(cat, i, j).to_string()).collect();
            let _ = writeln!(out, "{name} {}", row.join(" "));
        }
    }
    let taus: Vec<String> = (0..n).map(|i| opt(cat.tau(i))).collect();
    let _ = writeln!(out, "tau {}", taus.join(" "));
    let inv: Vec<String> = (0..n).map(|i| opt(cat.tau_inv(i))).collect();
    let _ = writeln!(out, "tau_inv {}", inv.join(" "));
    out.push_str("end\n");
    out
}

fn bad(line: usize, what: impl std::fmt::Display) -> Error {
    Error::Cache(format!("line {line}: {what}"))
}

fn num(line: usize, s: Option<&str>) -> Result<usize> {
    s.ok_or_else(|| bad(line, "missing number"))?.parse().map_err(|_| bad(line, "expected a number"))
}

/// Rebuild a catalog from cached text and check it reserializes identically.
pub fn deserialize<F: FiniteField>(algebra: Arc<Algebra<F>>, text: &str, key: &str, limits: Limits) -> Result<Catalog<F>> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let mut next = |want: &str| -> Result<(usize, Vec<&str>)> {
        let (no, l) = lines.next().ok_or_else(|| Error::Cache("truncated file".into()))?;
        let words: Vec<&str> = l.split_whitespace().collect();
        if words.first() != Some(&want) {
            return Err(bad(no, format!("expected `{want}`")));
        }
        Ok((no, words[1..].to_vec()))
    };
    let (no, v) = next(MAGIC)?;
    if num(no, v.first().copied())? != CACHE_VERSION as usize {
        return Err(bad(no, "unsupported cache version"));
    }
    let (no, v) = next("key")?;
    if v.first() != Some(&key) {
        return Err(bad(no, "algebra or configuration changed"));
    }
    let (no, v) = next("characteristic")?;
    if num(no, v.first().copied())? != F::CHARACTERISTIC as usize {
        return Err(bad(no, "characteristic mismatch"));
    }
    let (no, v) = next("dim_bound")?;
    let bound = num(no, v.first().copied())?;
    let (no, v) = next("entries")?;
    let n = num(no, v.first().copied())?;
    let arrows = algebra.arrows().len();
    let mut entries = Vec::with_capacity(n);
    for _ in 0..n {
        let (no, v) = next("module")?;
        let dims = v.iter().skip(1).map(|d| num(no, Some(d))).collect::<Result<Vec<_>>>()?;
        let mut maps = Vec::with_capacity(arrows);
        for a in 0..arrows {
            let (no, v) = next("map")?;
            if num(no, v.first().copied())? != a {
                return Err(bad(no, "maps out of order"));
            }
            let rows = num(no, v.get(1).copied())?;
            let cols = num(no, v.get(2).copied())?;
            let data = v[3..]
                .iter()
                .map(|x| {
                    let k = num(no, Some(x))?;
                    if k >= F::CHARACTERISTIC as usize {
                        return Err(bad(no, "entry out of range"));
                    }
                    Ok(F::from_index(k as u32))
                })
                .collect::<Result<Vec<F>>>()?;
            if data.len() != rows * cols {
                return Err(bad(no, "matrix size mismatch"));
            }
            maps.push(Matrix::from_vec(rows, cols, data));
        }
        entries.push(Module::new(algebra.clone(), dims, maps)?);
    }
    let cat = Catalog::from_entries(algebra, entries, bound, limits)?;
    if serialize(&cat, key) != text {
        return Err(Error::Cache("recomputed tables differ from the cached ones".into()));
    }
    Ok(cat)
}

/// Load a cached catalog if one matches, otherwise build and store it.
/// Returns the catalog and whether it came from the cache.
pub fn load_or_build<F: FiniteField>(
    algebra: Arc<Algebra<F>>,
    dir: Option<&Path>,
    max_bound: usize,
    limits: Limits,
) -> Result<(Catalog<F>, bool)> {
    let key = cache_key(&algebra, max_bound);
    let Some(dir) = dir else {
        return Ok((Catalog::build_auto(algebra, max_bound, limits)?, false));
    };
    let path = cache_path(dir, &key);
    if let Ok(text) = std::fs::read_to_string(&path) {
        if let Ok(cat) = deserialize(algebra.clone(), &text, &key, limits) {
            return Ok((cat, true));
        }
    }
    let cat = Catalog::build_auto(algebra, max_bound, limits)?;
    let io = |e: std::io::Error| Error::Cache(format!("{}: {e}", path.display()));
    std::fs::create_dir_all(dir).map_err(io)?;
    std::fs::write(&path, serialize(&cat, &key)).map_err(io)?;
    Ok((cat, false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;

    fn a3() -> Arc<Algebra<Fp<2>>> {
        Arc::new(Algebra::from_text("vertex 1\nvertex 2\nvertex 3\narrow a 1 2\narrow b 2 3\n").unwrap())
    }

    #[test]
    fn round_trip_is_byte_identical() {
        let alg = a3();
        let key = cache_key(&alg, 6);
        let cat = Catalog::build_auto(alg.clone(), 6, Limits::default()).unwrap();
        let text = serialize(&cat, &key);
        let back = deserialize(alg, &text, &key, Limits::default()).unwrap();
        assert_eq!(serialize(&back, &key), text);
        assert_eq!(back.labels(), cat.labels());
    }

    #[test]
    fn tampering_is_detected() {
        let alg = a3();
        let key = cache_key(&alg, 6);
        let cat = Catalog::build_auto(alg.clone(), 6, Limits::default()).unwrap();
        let text = serialize(&cat, &key);
        let edited = text.replacen("ext 0", "ext 1", 1);
        assert!(matches!(deserialize(alg.clone(), &edited, &key, Limits::default()), Err(Error::Cache(_))));
        assert!(deserialize(alg.clone(), &text, "other", Limits::default()).is_err());
        assert!(deserialize(alg, &text[..text.len() / 2], &key, Limits::default()).is_err());
    }

    #[test]
    fn key_depends_on_bound() {
        let alg = a3();
        assert_ne!(cache_key(&alg, 6), cache_key(&alg, 7));
    }
}
