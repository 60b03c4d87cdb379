//! On-disk cache of reduced Groebner bases, one text file per ring.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};

use grasschar_core::grassmann::{Case, GbProvider, GrassmannParams, RingKey};
use grasschar_core::{Error, GroebnerBasis};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheMode {
    /// Read hits, write misses.
    Use,
    /// Recompute everything; never touch the directory.
    Bypass,
    /// Recompute and byte-compare against any existing entry.
    Verify,
}

/// A [`GbProvider`] backed by `<dir>/gb/*.txt`.
#[derive(Debug)]
pub struct GbCache {
    dir: PathBuf,
    mode: CacheMode,
    hits: AtomicUsize,
    misses: AtomicUsize,
}

impl GbCache {
    pub fn new(dir: impl Into<PathBuf>, mode: CacheMode) -> Self {
        GbCache {
            dir: dir.into(),
            mode,
            hits: AtomicUsize::new(0),
            misses: AtomicUsize::new(0),
        }
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

    pub fn path_for(&self, key: &RingKey) -> PathBuf {
        self.dir.join("gb").join(file_name(key))
    }

    pub fn load(&self, key: &RingKey) -> Result<GroebnerBasis, CliError> {
        let path = self.path_for(key);
        match self.mode {
            CacheMode::Bypass => Ok(key.compute_gb()?),
            CacheMode::Verify => {
                let gb = key.compute_gb()?;
                if path.exists() {
                    let on_disk = fs::read(&path).map_err(|e| CliError::io(&path, e))?;
                    if on_disk != gb.to_text().as_bytes() {
                        return Err(CliError::CacheMismatch { path });
                    }
                }
                Ok(gb)
            }
            CacheMode::Use => {
                if let Some(gb) = self.read_entry(key, &path) {
                    self.hits.fetch_add(1, Ordering::Relaxed);
                    return Ok(gb);
                }
                self.misses.fetch_add(1, Ordering::Relaxed);
                let gb = key.compute_gb()?;
                write_atomic(&path, gb.to_text().as_bytes())?;
                Ok(gb)
            }
        }
    }

    /// A parseable entry over the right variables, or `None`; damaged
    /// entries are treated as misses and overwritten.
    fn read_entry(&self, key: &RingKey, path: &Path) -> Option<GroebnerBasis> {
        let text = fs::read_to_string(path).ok()?;
        let gb = GroebnerBasis::from_text(&text).ok()?;
        (**gb.table() == *key.table()).then_some(gb)
    }

    /// Recompute every entry in the directory and compare bytes. Returns
    /// the number of entries checked.
    pub fn verify_all(&self) -> Result<usize, CliError> {
        let mut checked = 0;
        for (path, key) in self.entries()? {
            let key = key.ok_or_else(|| CliError::CacheMismatch { path: path.clone() })?;
            let on_disk = fs::read(&path).map_err(|e| CliError::io(&path, e))?;
            if on_disk != key.compute_gb()?.to_text().as_bytes() {
                return Err(CliError::CacheMismatch { path });
            }
            checked += 1;
        }
        Ok(checked)
    }

    /// Remove every cache entry. Returns the number removed.
    pub fn clear(&self) -> Result<usize, CliError> {
        let entries = self.entries()?;
        for (path, _) in &entries {
            fs::remove_file(path).map_err(|e| CliError::io(path, e))?;
        }
        Ok(entries.len())
    }

    /// Entry files, sorted, with the key parsed from each name.
    fn entries(&self) -> Result<Vec<(PathBuf, Option<RingKey>)>, CliError> {
        let gb_dir = self.dir.join("gb");
        let read = match fs::read_dir(&gb_dir) {
            Ok(r) => r,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(CliError::io(&gb_dir, e)),
        };
        let mut out = Vec::new();
        for entry in read {
            let entry = entry.map_err(|e| CliError::io(&gb_dir, e))?;
            let name = entry.file_name().to_string_lossy().into_owned();
            if name.ends_with(".txt") {
                out.push((entry.path(), parse_file_name(&name)));
            }
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(out)
    }
}

impl GbProvider for GbCache {
    fn groebner(&self, key: &RingKey) -> Result<GroebnerBasis, Error> {
        self.load(key).map_err(|e| match e {
            CliError::Core(e) => e,
            other => Error::Assertion(other.to_string()),
        })
    }
}

pub fn file_name(key: &RingKey) -> String {
    match *key {
        RingKey::Borel { n, k } => format!("borel_n{n}_k{k}.txt"),
        RingKey::ImageJ { n } => format!("imageJ_n{n}.txt"),
        RingKey::Oriented(p) => format!("oriented_t{}_{}_g{}.txt", p.t, p.case, u8::from(p.gamma)),
        RingKey::OrientedK2 { t } => format!("orientedk2_t{t}.txt"),
    }
}

pub fn parse_file_name(name: &str) -> Option<RingKey> {
    let stem = name.strip_suffix(".txt")?;
    let num = |s: &str, prefix: &str| s.strip_prefix(prefix)?.parse::<u32>().ok();
    let parts: Vec<&str> = stem.split('_').collect();
    let key = match parts.as_slice() {
        ["borel", n, k] => RingKey::Borel {
            n: num(n, "n")?,
            k: num(k, "k")?,
        },
        ["imageJ", n] => RingKey::ImageJ { n: num(n, "n")? },
        ["oriented", t, case, g] => {
            let gamma = match num(g, "g")? {
                0 => false,
                1 => true,
                _ => return None,
            };
            let case: Case = case.parse().ok()?;
            RingKey::Oriented(GrassmannParams::new(num(t, "t")?, case, gamma).ok()?)
        }
        ["orientedk2", t] => RingKey::OrientedK2 { t: num(t, "t")? },
        _ => return None,
    };
    key.validate().ok()?;
    (file_name(&key) == name).then_some(key)
}

/// Write via a temporary file in the same directory and rename, so readers
/// never see a partial entry.
fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let dir = path.parent().expect("cache paths have a parent");
    fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let tmp = dir.join(format!(
        ".{}.{}.tmp",
        path.file_name().unwrap_or_default().to_string_lossy(),
        std::process::id()
    ));
    let mut f = fs::File::create(&tmp).map_err(|e| CliError::io(&tmp, e))?;
    f.write_all(bytes).map_err(|e| CliError::io(&tmp, e))?;
    f.sync_all().map_err(|e| CliError::io(&tmp, e))?;
    fs::rename(&tmp, path).map_err(|e| CliError::io(path, e))
}
