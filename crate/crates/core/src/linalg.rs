//! Exact sparse Gaussian elimination over ℚ.
//!
//! Vectors are sparse maps from an ordered key type to [`Scalar`]. An
//! [`Echelon`] keeps one row per independent inserted vector, each row
//! remembering which combination of inserted vectors produced it, so the same
//! structure answers rank, membership, solve and kernel questions.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::Scalar;

pub type SparseVec<K> = BTreeMap<K, Scalar>;

/// `dst += c · src`, dropping cancelled entries.
pub fn axpy<K: Ord + Clone>(dst: &mut SparseVec<K>, c: &Scalar, src: &SparseVec<K>) {
    if c.is_zero() {
        return;
    }
    for (k, v) in src {
        let entry = dst.entry(k.clone()).or_insert_with(Scalar::zero);
        *entry += c * v;
        if entry.is_zero() {
            dst.remove(k);
        }
    }
}

#[derive(Debug, Clone)]
struct Row<K> {
    /// Smallest key has coefficient one.
    vec: SparseVec<K>,
    /// `vec = Σ combo[j] · input_j`.
    combo: SparseVec<usize>,
}

/// Result of [`Echelon::insert`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Insertion {
    Independent,
    /// The inserted vectors satisfy `Σ relation[j] · input_j = 0`; the
    /// relation always involves the vector just inserted.
    Dependent(SparseVec<usize>),
}

#[derive(Debug, Clone)]
pub struct Echelon<K: Ord + Clone> {
    rows: Vec<Row<K>>,
    pivots: BTreeMap<K, usize>,
    inserted: usize,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon {
            rows: Vec::new(),
            pivots: BTreeMap::new(),
            inserted: 0,
        }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Number of vectors inserted so far; the next one gets this index.
    pub fn inserted(&self) -> usize {
        self.inserted
    }

    /// Returns `(remainder, expr)` with `v = remainder + Σ expr[j] · input_j`
    /// and `remainder` free of pivot keys.
    pub fn reduce(&self, v: &SparseVec<K>) -> (SparseVec<K>, SparseVec<usize>) {
        let mut rem = v.clone();
        let mut expr = SparseVec::new();
        // Rows only contain keys at or after their pivot, so one ascending
        // sweep over the pivot keys suffices.
        let mut cursor: Option<K> = None;
        loop {
            let next = match &cursor {
                None => rem.iter().find(|(k, _)| self.pivots.contains_key(*k)),
                Some(c) => rem
                    .range((std::ops::Bound::Excluded(c.clone()), std::ops::Bound::Unbounded))
                    .find(|(k, _)| self.pivots.contains_key(*k)),
            };
            let Some((key, coeff)) = next.map(|(k, c)| (k.clone(), c.clone())) else {
                break;
            };
            let row = &self.rows[self.pivots[&key]];
            axpy(&mut rem, &-coeff.clone(), &row.vec);
            axpy(&mut expr, &coeff, &row.combo);
            cursor = Some(key);
        }
        (rem, expr)
    }

    pub fn insert(&mut self, v: SparseVec<K>) -> Insertion {
        let id = self.inserted;
        self.inserted += 1;
        let (rem, expr) = self.reduce(&v);
        // rem = input_id − Σ expr · inputs
        let mut combo = SparseVec::new();
        combo.insert(id, Scalar::one());
        axpy(&mut combo, &-Scalar::one(), &expr);
        let Some((pivot, lead)) = rem.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return Insertion::Dependent(combo);
        };
        let inv = lead.recip();
        let vec = rem.into_iter().map(|(k, c)| (k, c * &inv)).collect();
        let combo = combo.into_iter().map(|(k, c)| (k, c * &inv)).collect();
        self.pivots.insert(pivot, self.rows.len());
        self.rows.push(Row { vec, combo });
        Insertion::Independent
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).0.is_empty()
    }

    /// Coefficients `x` with `v = Σ x[j] · input_j`, if `v` is in the span.
    pub fn solve(&self, v: &SparseVec<K>) -> Option<SparseVec<usize>> {
        let (rem, expr) = self.reduce(v);
        rem.is_empty().then_some(expr)
    }
}

/// Rank of a family of vectors.
pub fn rank<K: Ord + Clone>(vectors: impl IntoIterator<Item = SparseVec<K>>) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// A basis of `{x : Σ x[j] · images[j] = 0}`, as sparse combinations of
/// input indices.
pub fn kernel<K: Ord + Clone>(images: impl IntoIterator<Item = SparseVec<K>>) -> Vec<SparseVec<usize>> {
    let mut e = Echelon::new();
    images
        .into_iter()
        .filter_map(|v| match e.insert(v) {
            Insertion::Dependent(rel) => Some(rel),
            Insertion::Independent => None,
        })
        .collect()
}
