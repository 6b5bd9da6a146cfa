//! On-disk cache of characteristic polynomials keyed by canonical graph6.
//!
//! One file per key and matrix kind holding a single JSON line. Files are
//! written to a temporary name and renamed into place, so readers never see a
//! partial entry. Unreadable entries are reported and recomputed.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::graph::{canonical_form, Graph};
use crate::io::graph6;
use crate::poly::IntPolynomial;
use crate::spectra::{charpoly, MatrixKind};

/// Overrides any directory given on the command line.
pub const CACHE_ENV: &str = "SPECTRAL_DS_CACHE";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    /// graph6 of the canonical form.
    pub key: String,
    pub kind: MatrixKind,
    /// Ascending coefficients as decimal strings.
    pub coefficients: Vec<String>,
    pub version: String,
}

impl CacheEntry {
    pub fn new(key: String, kind: MatrixKind, p: &IntPolynomial) -> Self {
        CacheEntry {
            key,
            kind,
            coefficients: p.coeffs().iter().map(ToString::to_string).collect(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn polynomial(&self) -> Option<IntPolynomial> {
        let coeffs: Option<Vec<BigInt>> =
            self.coefficients.iter().map(|c| c.parse().ok()).collect();
        Some(IntPolynomial::new(coeffs?))
    }
}

#[derive(Debug)]
pub struct CharpolyCache {
    dir: PathBuf,
    hits: AtomicUsize,
    misses: AtomicUsize,
    corrupt: AtomicUsize,
}

static TMP_COUNTER: AtomicUsize = AtomicUsize::new(0);

impl CharpolyCache {
    pub fn open(dir: impl Into<PathBuf>) -> io::Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(CharpolyCache {
            dir,
            hits: AtomicUsize::new(0),
            misses: AtomicUsize::new(0),
            corrupt: AtomicUsize::new(0),
        })
    }

    /// The directory named by [`CACHE_ENV`] if set, else `fallback`.
    pub fn resolve(fallback: Option<PathBuf>) -> io::Result<Option<Self>> {
        let dir = std::env::var_os(CACHE_ENV)
            .filter(|v| !v.is_empty())
            .map(PathBuf::from)
            .or(fallback);
        dir.map(Self::open).transpose()
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn hits(&self) -> usize {
        self.hits.load(Ordering::Relaxed)
    }

    pub fn misses(&self) -> usize {
        self.misses.load(Ordering::Relaxed)
    }

    pub fn corrupt_entries(&self) -> usize {
        self.corrupt.load(Ordering::Relaxed)
    }

    pub fn path_for(&self, key: &str, kind: MatrixKind) -> PathBuf {
        // graph6 uses characters such as '?' and '\' that some filesystems reject
        let hex: String = key.bytes().map(|b| format!("{b:02x}")).collect();
        self.dir.join(format!("{kind}-{hex}.json"))
    }

    /// The stored polynomial, or `None` on a miss or an unusable file.
    pub fn load(&self, key: &str, kind: MatrixKind) -> Option<IntPolynomial> {
        let path = self.path_for(key, kind);
        let text = fs::read_to_string(&path).ok()?;
        let entry = serde_json::from_str::<CacheEntry>(text.trim_end())
            .ok()
            .filter(|e| e.key == key && e.kind == kind);
        let poly = entry.as_ref().and_then(CacheEntry::polynomial);
        let order = graph6::parse(key).map(|g| g.order()).ok();
        match poly {
            Some(p) if p.is_monic() && Some(p.degree()) == order => Some(p),
            _ => {
                log::warn!("ignoring unreadable cache entry {}", path.display());
                self.corrupt.fetch_add(1, Ordering::Relaxed);
                None
            }
        }
    }

    pub fn store(&self, entry: &CacheEntry) -> io::Result<()> {
        let path = self.path_for(&entry.key, entry.kind);
        let tmp = self.dir.join(format!(
            ".tmp-{}-{}",
            std::process::id(),
            TMP_COUNTER.fetch_add(1, Ordering::Relaxed)
        ));
        let mut line = serde_json::to_string(entry).map_err(io::Error::other)?;
        line.push('\n');
        let mut f = fs::File::create(&tmp)?;
        f.write_all(line.as_bytes())?;
        f.sync_all()?;
        drop(f);
        fs::rename(&tmp, &path)
    }

    /// Characteristic polynomial of `g`, from the cache when present.
    pub fn charpoly(&self, g: &Graph, kind: MatrixKind) -> IntPolynomial {
        let key = graph6::emit(&canonical_form(g).graph);
        if let Some(p) = self.load(&key, kind) {
            self.hits.fetch_add(1, Ordering::Relaxed);
            return p;
        }
        self.misses.fetch_add(1, Ordering::Relaxed);
        let p = charpoly(g, kind);
        if let Err(e) = self.store(&CacheEntry::new(key, kind, &p)) {
            log::warn!("could not write cache entry: {e}");
        }
        p
    }
}

/// Characteristic polynomial through an optional cache.
pub fn charpoly_via(cache: Option<&CharpolyCache>, g: &Graph, kind: MatrixKind) -> IntPolynomial {
    match cache {
        Some(c) => c.charpoly(g, kind),
        None => charpoly(g, kind),
    }
}
