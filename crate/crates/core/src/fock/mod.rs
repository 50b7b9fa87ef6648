//! The βγ–bc free-field vertex algebra: normally ordered words, circle
//! products and λ-brackets, all computed exactly.
//!
//! A [`FieldExpr`] is a vector of the Fock module. The right-nested Wick
//! product `:∂^{k₁}x₁ ⋯ ∂^{kₘ}xₘ:` of generator letters is the monomial
//! `∂^{k₁}x₁ ⋯ ∂^{kₘ}xₘ`, so canonical words are canonical monomials and the
//! reordering sign is the Koszul sign (letter contractions integrate to zero).

mod modes;
mod text;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;

pub use modes::{apply_mode, ProductTable};
pub use text::{parse_field, FieldResolver};

use crate::algebra::{int, GenVar, Parity, PolyExpr, Scalar, SuperMonomial, Symbol};
use crate::error::{Error, Result};

/// A state/field of the free-field algebra in the canonical word basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FieldExpr(PolyExpr);

impl FieldExpr {
    pub fn zero() -> Self {
        FieldExpr(PolyExpr::zero())
    }

    /// The vacuum, i.e. the identity field.
    pub fn one() -> Self {
        FieldExpr(PolyExpr::one())
    }

    pub fn scalar(c: Scalar) -> Self {
        FieldExpr(PolyExpr::constant(c))
    }

    /// Wraps a Fock vector. Only plain-chart letters are meaningful here.
    pub fn from_poly(p: PolyExpr) -> Self {
        FieldExpr(p)
    }

    /// The single letter `∂^der x^index`.
    pub fn letter(symbol: Symbol, index: u8, der: u32) -> Self {
        FieldExpr(PolyExpr::var(GenVar::new(symbol, index, der)))
    }

    pub fn as_poly(&self) -> &PolyExpr {
        &self.0
    }

    pub fn into_poly(self) -> PolyExpr {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn parity(&self) -> Option<Parity> {
        self.0.parity()
    }

    /// Conformal weight read off the letters, for the standard conformal
    /// vector (`β, b` weight 1; `γ, c` weight 0).
    pub fn weight(&self) -> Result<i64> {
        self.0.weight()
    }

    pub fn scale(&self, c: &Scalar) -> FieldExpr {
        FieldExpr(self.0.scale(c))
    }

    /// Coordinates in the canonical word basis.
    pub fn coordinates(&self) -> &BTreeMap<SuperMonomial, Scalar> {
        self.0.as_map()
    }

    /// `∂a`.
    pub fn translation(&self) -> FieldExpr {
        FieldExpr(self.0.apply_partial())
    }

    pub fn translation_n(&self, n: u32) -> FieldExpr {
        FieldExpr(self.0.apply_partial_n(n))
    }
}

impl std::ops::Add for FieldExpr {
    type Output = FieldExpr;
    fn add(self, rhs: FieldExpr) -> FieldExpr {
        FieldExpr(self.0 + rhs.0)
    }
}

impl std::ops::Add for &FieldExpr {
    type Output = FieldExpr;
    fn add(self, rhs: &FieldExpr) -> FieldExpr {
        FieldExpr(&self.0 + &rhs.0)
    }
}

impl std::ops::Sub for FieldExpr {
    type Output = FieldExpr;
    fn sub(self, rhs: FieldExpr) -> FieldExpr {
        FieldExpr(self.0 - rhs.0)
    }
}

impl std::ops::Sub for &FieldExpr {
    type Output = FieldExpr;
    fn sub(self, rhs: &FieldExpr) -> FieldExpr {
        FieldExpr(&self.0 - &rhs.0)
    }
}

impl std::ops::Neg for FieldExpr {
    type Output = FieldExpr;
    fn neg(self) -> FieldExpr {
        FieldExpr(-self.0)
    }
}

impl std::ops::AddAssign<&FieldExpr> for FieldExpr {
    fn add_assign(&mut self, rhs: &FieldExpr) {
        self.0 += &rhs.0;
    }
}

impl std::iter::Sum for FieldExpr {
    fn sum<I: Iterator<Item = FieldExpr>>(iter: I) -> FieldExpr {
        iter.fold(FieldExpr::zero(), |a, b| a + b)
    }
}

/// `[a_λ b] = Σ_n λ^n/n! (a∘_n b)`, stored as the map `n ↦ a∘_n b`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LambdaPolynomial {
    entries: BTreeMap<u32, FieldExpr>,
}

impl LambdaPolynomial {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, n: u32, value: FieldExpr) {
        if value.is_zero() {
            self.entries.remove(&n);
        } else {
            self.entries.insert(n, value);
        }
    }

    /// `a∘_n b`, zero when absent.
    pub fn get(&self, n: u32) -> FieldExpr {
        self.entries.get(&n).cloned().unwrap_or_else(FieldExpr::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (u32, &FieldExpr)> {
        self.entries.iter().map(|(n, f)| (*n, f))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Least `N` with `a∘_n b = 0` for all `n ≥ N`.
    pub fn order(&self) -> u32 {
        self.entries.keys().next_back().map_or(0, |n| n + 1)
    }
}

/// The algebra context: `N` pairs of βγ and bc systems plus a product memo.
#[derive(Debug)]
pub struct FockSpace {
    rank: u8,
    table: ProductTable,
}

impl FockSpace {
    pub fn new(rank: u8) -> Self {
        FockSpace {
            rank,
            table: ProductTable::new(),
        }
    }

    pub fn rank(&self) -> u8 {
        self.rank
    }

    /// Number of memoised monomial products.
    pub fn memo_size(&self) -> usize {
        self.table.len()
    }

    pub fn check_index(&self, index: u8) -> Result<()> {
        if (1..=self.rank).contains(&index) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index,
                rank: self.rank,
            })
        }
    }

    pub fn generator(&self, symbol: Symbol, index: u8) -> Result<FieldExpr> {
        self.check_index(index)?;
        Ok(FieldExpr::letter(symbol, index, 0))
    }

    /// All `4N` generator fields in canonical order.
    pub fn generators(&self) -> Vec<(Symbol, u8, FieldExpr)> {
        Symbol::ALL
            .iter()
            .flat_map(|&s| (1..=self.rank).map(move |i| (s, i, FieldExpr::letter(s, i, 0))))
            .collect()
    }

    /// `a∘_n b` for any integer `n`; `n = -1` is the Wick product.
    pub fn circle(&self, a: &FieldExpr, n: i64, b: &FieldExpr) -> FieldExpr {
        FieldExpr(self.table.product(&a.0, n, &b.0))
    }

    /// `:ab:`.
    pub fn wick(&self, a: &FieldExpr, b: &FieldExpr) -> FieldExpr {
        self.circle(a, -1, b)
    }

    /// Right-nested Wick product `:a₁(a₂(⋯aₘ)):`; the empty word is `1`.
    pub fn wick_word(&self, factors: &[FieldExpr]) -> FieldExpr {
        factors
            .iter()
            .rev()
            .fold(FieldExpr::one(), |acc, f| self.wick(f, &acc))
    }

    pub fn lambda_bracket(&self, a: &FieldExpr, b: &FieldExpr) -> LambdaPolynomial {
        let mut out = LambdaPolynomial::new();
        let (Some(wa), Some(wb)) = (a.0.max_weight(), b.0.max_weight()) else {
            return out;
        };
        for n in 0..(wa + wb).max(0) {
            out.insert(n as u32, self.circle(a, n, b));
        }
        out
    }

    /// `μ` with `L∘₁a = μa`.
    pub fn conformal_weight(&self, a: &FieldExpr, l: &FieldExpr) -> Result<Scalar> {
        let (mono, coeff) = a.0.terms().next().ok_or(Error::ZeroInput)?;
        let image = self.circle(l, 1, a);
        let mu = image.0.coefficient(mono) / coeff;
        if image == a.scale(&mu) {
            Ok(mu)
        } else {
            Err(Error::NotEigenvector)
        }
    }

    pub fn commute_order(&self, a: &FieldExpr, b: &FieldExpr) -> u32 {
        self.lambda_bracket(a, b).order()
    }

    /// The standard conformal vector `Σ_j (:β^j ∂γ^j: − :b^j ∂c^j:)`.
    pub fn virasoro(&self) -> FieldExpr {
        (1..=self.rank)
            .map(|j| {
                let bg = PolyExpr::product_of(&[
                    GenVar::new(Symbol::Beta, j, 0),
                    GenVar::new(Symbol::Gamma, j, 1),
                ]);
                let bc = PolyExpr::product_of(&[GenVar::new(Symbol::B, j, 0), GenVar::new(Symbol::C, j, 1)]);
                FieldExpr(bg - bc)
            })
            .sum()
    }
}

/// `(n) a∘_n b` for each nonzero product, separated by `; `; `0` when empty.
impl fmt::Display for LambdaPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        for (i, (n, v)) in self.entries().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "({n}) {v}")?;
        }
        Ok(())
    }
}

impl fmt::Display for FieldExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        text::write_field(f, self)
    }
}

/// Skew-symmetry prediction `b∘_n a = −(−1)^{|a||b|} Σ_j (−1)^{n+j} ∂^j/j! (a∘_{n+j} b)`.
pub fn skew_prediction(space: &FockSpace, a: &FieldExpr, n: u32, b: &FieldExpr) -> FieldExpr {
    let sign = match (a.parity(), b.parity()) {
        (Some(Parity::Odd), Some(Parity::Odd)) => int(1),
        _ => int(-1),
    };
    let bracket = space.lambda_bracket(a, b);
    let mut out = FieldExpr::zero();
    for (m, value) in bracket.entries() {
        if m < n {
            continue;
        }
        let j = m - n;
        let parity = if (n + j).is_multiple_of(2) { Scalar::one() } else { -Scalar::one() };
        let c = sign.clone() * parity * crate::algebra::inv_factorial(j);
        out += &value.translation_n(j).scale(&c);
    }
    out
}

#[cfg(test)]
mod tests;
