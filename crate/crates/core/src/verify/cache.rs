//! On-disk cache of λ-brackets keyed by the canonical text of both fields.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use rand::seq::IteratorRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::{parse_field, FieldExpr, FockSpace, LambdaPolynomial};

/// Entries recomputed from scratch when a cache file is loaded.
pub const SPOT_CHECKS: usize = 4;

const SEPARATOR: &str = " | ";

#[derive(Debug, Default, Serialize, Deserialize)]
struct CacheFile {
    /// `"a | b"` to the nonzero `a∘_n b`, by `n`.
    entries: BTreeMap<String, BTreeMap<u32, String>>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CacheStats {
    pub loaded: usize,
    pub hits: usize,
    pub misses: usize,
    /// The file failed to parse or a spot check disagreed, so it was dropped.
    pub discarded: bool,
}

/// Brackets computed on demand and optionally persisted as JSON.
#[derive(Debug, Default)]
pub struct BracketCache {
    path: Option<PathBuf>,
    file: CacheFile,
    dirty: bool,
    pub stats: CacheStats,
}

fn cache_error(path: &Path, message: impl ToString) -> Error {
    Error::Cache {
        path: path.display().to_string(),
        message: message.to_string(),
    }
}

fn key(a: &FieldExpr, b: &FieldExpr) -> String {
    format!("{a}{SEPARATOR}{b}")
}

fn encode(bracket: &LambdaPolynomial) -> BTreeMap<u32, String> {
    bracket.entries().map(|(n, v)| (n, v.to_string())).collect()
}

fn decode(space: &FockSpace, entry: &BTreeMap<u32, String>) -> Result<LambdaPolynomial> {
    let mut out = LambdaPolynomial::new();
    for (n, text) in entry {
        out.insert(*n, parse_field(space, text, None)?);
    }
    Ok(out)
}

impl BracketCache {
    /// A cache that is never written to disk.
    pub fn in_memory() -> Self {
        Self::default()
    }

    /// Loads `path` if it exists and recomputes [`SPOT_CHECKS`] entries
    /// chosen by `seed`; any disagreement drops the whole file.
    pub fn open(path: &Path, space: &FockSpace, seed: u64) -> Result<Self> {
        let mut cache = BracketCache {
            path: Some(path.to_path_buf()),
            ..Self::default()
        };
        let text = match std::fs::read_to_string(path) {
            Ok(text) => text,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(cache),
            Err(e) => return Err(cache_error(path, e)),
        };
        match serde_json::from_str::<CacheFile>(&text) {
            Ok(file) => cache.file = file,
            Err(_) => {
                cache.stats.discarded = true;
                cache.dirty = true;
                return Ok(cache);
            }
        }
        cache.stats.loaded = cache.file.entries.len();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sample = cache.file.entries.iter().choose_multiple(&mut rng, SPOT_CHECKS);
        let consistent = sample.into_iter().all(|(k, entry)| spot_check(space, k, entry));
        if !consistent {
            cache.file.entries.clear();
            cache.stats.discarded = true;
            cache.dirty = true;
        }
        Ok(cache)
    }

    pub fn len(&self) -> usize {
        self.file.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.file.entries.is_empty()
    }

    pub fn bracket(&mut self, space: &FockSpace, a: &FieldExpr, b: &FieldExpr) -> Result<LambdaPolynomial> {
        let k = key(a, b);
        if let Some(entry) = self.file.entries.get(&k) {
            self.stats.hits += 1;
            return decode(space, entry);
        }
        self.stats.misses += 1;
        let value = space.lambda_bracket(a, b);
        self.file.entries.insert(k, encode(&value));
        self.dirty = true;
        Ok(value)
    }

    /// Writes the file if anything changed.
    pub fn save(&self) -> Result<()> {
        let Some(path) = &self.path else {
            return Ok(());
        };
        if !self.dirty {
            return Ok(());
        }
        let text = serde_json::to_string_pretty(&self.file).map_err(|e| cache_error(path, e))?;
        std::fs::write(path, text).map_err(|e| cache_error(path, e))
    }
}

fn spot_check(space: &FockSpace, k: &str, entry: &BTreeMap<u32, String>) -> bool {
    let Some((a, b)) = k.split_once(SEPARATOR) else {
        return false;
    };
    let (Ok(a), Ok(b)) = (parse_field(space, a, None), parse_field(space, b, None)) else {
        return false;
    };
    decode(space, entry).is_ok_and(|stored| stored == space.lambda_bracket(&a, &b))
}
