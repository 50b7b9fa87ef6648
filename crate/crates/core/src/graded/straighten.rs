//! Rewriting products of generators in the standard-word basis by exact
//! linear solve within a fixed weight and letter multidegree.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use super::standard::{enumerate_standard, expand_word, word_multidegree, word_weight, StandardWord};
use super::weyl::WeylGen;
use crate::algebra::{PolyExpr, Scalar, SuperMonomial};
use crate::error::{Error, Result};
use crate::linalg::Echelon;

type Sector = (i64, [u32; 4]);

struct SectorBasis {
    words: Vec<StandardWord>,
    echelon: Echelon<SuperMonomial>,
}

/// Caches the expanded standard words per sector.
#[derive(Default)]
pub struct Straightener {
    sectors: Mutex<HashMap<Sector, std::sync::Arc<SectorBasis>>>,
}

impl std::fmt::Debug for Straightener {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Straightener").finish_non_exhaustive()
    }
}

impl Straightener {
    pub fn new() -> Self {
        Self::default()
    }

    fn sector(&self, key: Sector) -> std::sync::Arc<SectorBasis> {
        if let Some(hit) = self.sectors.lock().expect("sector cache poisoned").get(&key) {
            return hit.clone();
        }
        let words: Vec<StandardWord> = enumerate_standard(key.0)
            .into_iter()
            .filter(|w| w.multidegree() == key.1)
            .collect();
        let mut echelon = Echelon::new();
        for w in &words {
            echelon.insert(w.expand().into_terms());
        }
        let basis = std::sync::Arc::new(SectorBasis { words, echelon });
        self.sectors
            .lock()
            .expect("sector cache poisoned")
            .insert(key, basis.clone());
        basis
    }

    /// Coordinates of `p` in the standard words of the given sector.
    pub fn decompose(&self, p: &PolyExpr, weight: i64, multidegree: [u32; 4]) -> Result<BTreeMap<StandardWord, Scalar>> {
        if p.is_zero() {
            return Ok(BTreeMap::new());
        }
        let basis = self.sector((weight, multidegree));
        let coords = basis
            .echelon
            .solve(p.as_map())
            .ok_or_else(|| Error::InconsistentSystem(p.to_string()))?;
        Ok(coords
            .into_iter()
            .map(|(i, c)| (basis.words[i].clone(), c))
            .collect())
    }

    pub fn straighten(&self, word: &[WeylGen]) -> Result<BTreeMap<StandardWord, Scalar>> {
        let p = expand_word(word);
        self.decompose(&p, word_weight(word), word_multidegree(word))
    }
}

/// `expand(word) = Σ coeff · expand(standard word)`.
pub fn straighten(word: &[WeylGen]) -> Result<BTreeMap<StandardWord, Scalar>> {
    Straightener::new().straighten(word)
}

pub fn format_combination(c: &BTreeMap<StandardWord, Scalar>) -> String {
    use num_traits::{One, Signed};
    if c.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (w, coeff)) in c.iter().enumerate() {
        let neg = coeff.is_negative();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = coeff.abs();
        if w.is_empty() {
            out.push_str(&abs.to_string());
            continue;
        }
        if !abs.is_one() {
            out.push_str(&format!("{abs}*"));
        }
        if w.len() > 1 {
            out.push_str(&format!("({w})"));
        } else {
            out.push_str(&w.to_string());
        }
    }
    out
}
