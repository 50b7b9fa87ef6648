use std::fmt;

use super::{GenVar, Parity};

/// A product of generator variables in canonical order.
///
/// Factors are sorted by [`GenVar`]'s order; odd factors appear at most once.
/// The Koszul sign produced by sorting lives in the coefficient of the
/// enclosing [`PolyExpr`](super::PolyExpr), never here.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SuperMonomial {
    factors: Vec<(GenVar, u32)>,
}

impl SuperMonomial {
    pub fn one() -> Self {
        SuperMonomial::default()
    }

    pub fn var(v: GenVar) -> Self {
        SuperMonomial {
            factors: vec![(v, 1)],
        }
    }

    /// Builds the canonical form of the ordered product `vars[0] vars[1] ⋯`.
    /// Returns the sign of the reordering, or `None` if an odd variable repeats.
    pub fn from_ordered(vars: &[GenVar]) -> Option<(bool, SuperMonomial)> {
        vars.iter()
            .try_fold((false, SuperMonomial::one()), |(neg, acc), v| {
                let (n, m) = acc.mul(&SuperMonomial::var(*v))?;
                Some((neg ^ n, m))
            })
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[(GenVar, u32)] {
        &self.factors
    }

    /// Factors with multiplicity, in canonical order.
    pub fn vars(&self) -> impl Iterator<Item = GenVar> + '_ {
        self.factors
            .iter()
            .flat_map(|&(v, e)| std::iter::repeat_n(v, e as usize))
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: &GenVar) -> u32 {
        self.factors
            .binary_search_by(|(w, _)| w.cmp(v))
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    pub fn parity(&self) -> Parity {
        let odd = self
            .factors
            .iter()
            .filter(|(v, _)| v.is_odd())
            .count();
        Parity::from_odd(odd % 2 == 1)
    }

    pub fn weight(&self) -> i64 {
        self.factors
            .iter()
            .map(|(v, e)| v.weight() * *e as i64)
            .sum()
    }

    /// Supercommutative product. The boolean is `true` when the Koszul sign
    /// is negative; `None` means the product vanishes.
    pub fn mul(&self, other: &SuperMonomial) -> Option<(bool, SuperMonomial)> {
        if other.is_one() {
            return Some((false, self.clone()));
        }
        if self.is_one() {
            return Some((false, other.clone()));
        }
        let mut inversions = 0usize;
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        // odd factors of `self` not yet passed by the merge
        let mut odd_left: usize = self.factors.iter().filter(|(v, _)| v.is_odd()).count();
        while i < self.factors.len() || j < other.factors.len() {
            let take_left = match (self.factors.get(i), other.factors.get(j)) {
                (Some(a), Some(b)) => {
                    if a.0 == b.0 {
                        if a.0.is_odd() {
                            return None;
                        }
                        out.push((a.0, a.1 + b.1));
                        i += 1;
                        j += 1;
                        continue;
                    }
                    a.0 < b.0
                }
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (None, None) => unreachable!(),
            };
            if take_left {
                let f = self.factors[i];
                if f.0.is_odd() {
                    odd_left -= 1;
                }
                out.push(f);
                i += 1;
            } else {
                let f = other.factors[j];
                if f.0.is_odd() {
                    inversions += odd_left;
                }
                out.push(f);
                j += 1;
            }
        }
        Some((inversions % 2 == 1, SuperMonomial { factors: out }))
    }

    /// Removes one copy of `v` from the left. For odd `v` the sign counts the
    /// odd factors standing before it; for even `v` the multiplicity is
    /// returned as the factor. `None` if `v` does not divide.
    pub fn remove_left(&self, v: &GenVar) -> Option<(i64, SuperMonomial)> {
        let pos = self.factors.iter().position(|(w, _)| w == v)?;
        let mut factors = self.factors.clone();
        let factor = if v.is_odd() {
            let before = self.factors[..pos]
                .iter()
                .filter(|(w, _)| w.is_odd())
                .count();
            if before % 2 == 1 {
                -1
            } else {
                1
            }
        } else {
            factors[pos].1 as i64
        };
        if factors[pos].1 == 1 {
            factors.remove(pos);
        } else {
            factors[pos].1 -= 1;
        }
        Some((factor, SuperMonomial { factors }))
    }

    /// Splits off the first factor (one copy): `self = first · rest`, with no
    /// sign since the first canonical factor is already leftmost.
    pub fn split_first(&self) -> Option<(GenVar, SuperMonomial)> {
        let (v, _) = *self.factors.first()?;
        let mut factors = self.factors.clone();
        if factors[0].1 == 1 {
            factors.remove(0);
        } else {
            factors[0].1 -= 1;
        }
        Some((v, SuperMonomial { factors }))
    }

    pub(crate) fn from_sorted_unchecked(factors: Vec<(GenVar, u32)>) -> Self {
        debug_assert!(factors.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(factors.iter().all(|(v, e)| *e > 0 && (!v.is_odd() || *e == 1)));
        SuperMonomial { factors }
    }

    /// Leibniz rule on a single monomial; returns `(multiplicity, sign, term)`
    /// triples without combining like terms.
    pub fn derivative_terms(&self) -> Vec<(i64, SuperMonomial)> {
        let mut out = Vec::new();
        for (pos, &(v, e)) in self.factors.iter().enumerate() {
            // prefix · ∂v · v^{e-1} · suffix
            let prefix = SuperMonomial {
                factors: self.factors[..pos].to_vec(),
            };
            let mut rest_factors = Vec::with_capacity(self.factors.len() - pos);
            if e > 1 {
                rest_factors.push((v, e - 1));
            }
            rest_factors.extend_from_slice(&self.factors[pos + 1..]);
            let rest = SuperMonomial {
                factors: rest_factors,
            };
            let Some((s1, m)) = prefix.mul(&SuperMonomial::var(v.derivative())) else {
                continue;
            };
            let Some((s2, m)) = m.mul(&rest) else {
                continue;
            };
            let sign = if s1 ^ s2 { -1 } else { 1 };
            out.push((sign * e as i64, m));
        }
        out
    }
}

impl fmt::Display for SuperMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (i, (v, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            if *e > 1 {
                write!(f, "**{e}")?;
            }
        }
        Ok(())
    }
}
