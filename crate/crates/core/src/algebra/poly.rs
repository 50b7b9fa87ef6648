use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::{int, GenVar, Parity, Scalar, SuperMonomial};
use crate::error::{Error, Result};

/// A finite rational combination of supercommutative monomials.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyExpr {
    terms: BTreeMap<SuperMonomial, Scalar>,
}

impl PolyExpr {
    pub fn zero() -> Self {
        PolyExpr::default()
    }

    pub fn one() -> Self {
        PolyExpr::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        PolyExpr::term(c, SuperMonomial::one())
    }

    pub fn var(v: GenVar) -> Self {
        PolyExpr::term(Scalar::one(), SuperMonomial::var(v))
    }

    pub fn term(c: Scalar, m: SuperMonomial) -> Self {
        let mut p = PolyExpr::zero();
        p.add_term(c, m);
        p
    }

    /// Product of variables in the given order, with the reordering sign.
    pub fn product_of(vars: &[GenVar]) -> Self {
        match SuperMonomial::from_ordered(vars) {
            Some((neg, m)) => PolyExpr::term(if neg { int(-1) } else { int(1) }, m),
            None => PolyExpr::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SuperMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<SuperMonomial, Scalar> {
        self.terms
    }

    pub fn as_map(&self) -> &BTreeMap<SuperMonomial, Scalar> {
        &self.terms
    }

    pub fn from_map(terms: BTreeMap<SuperMonomial, Scalar>) -> Self {
        let mut p = PolyExpr::zero();
        for (m, c) in terms {
            p.add_term(c, m);
        }
        p
    }

    pub fn coefficient(&self, m: &SuperMonomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// The constant term.
    pub fn constant_term(&self) -> Scalar {
        self.coefficient(&SuperMonomial::one())
    }

    pub fn add_term(&mut self, c: Scalar, m: SuperMonomial) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &PolyExpr) {
        if c.is_zero() {
            return;
        }
        for (m, d) in &other.terms {
            self.add_term(c * d, m.clone());
        }
    }

    pub fn scale(&self, c: &Scalar) -> PolyExpr {
        if c.is_zero() {
            return PolyExpr::zero();
        }
        PolyExpr {
            terms: self
                .terms
                .iter()
                .map(|(m, d)| (m.clone(), c * d))
                .collect(),
        }
    }

    /// Keeps the terms whose monomial satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&SuperMonomial) -> bool) -> PolyExpr {
        PolyExpr {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, c: &Scalar, m: &SuperMonomial) -> PolyExpr {
        let mut out = PolyExpr::zero();
        for (a, ca) in &self.terms {
            if let Some((neg, prod)) = a.mul(m) {
                let coeff = ca * c;
                out.add_term(if neg { -coeff } else { coeff }, prod);
            }
        }
        out
    }

    /// The derivation ∂ extended from `∂(∂^k x) = ∂^{k+1} x` by Leibniz.
    pub fn apply_partial(&self) -> PolyExpr {
        let mut out = PolyExpr::zero();
        for (m, c) in &self.terms {
            for (k, dm) in m.derivative_terms() {
                out.add_term(c * int(k), dm);
            }
        }
        out
    }

    pub fn apply_partial_n(&self, n: u32) -> PolyExpr {
        (0..n).fold(self.clone(), |acc, _| acc.apply_partial())
    }

    /// Common weight of all monomials.
    pub fn weight(&self) -> Result<i64> {
        let mut weights = self.terms.keys().map(|m| m.weight());
        let first = weights.next().ok_or(Error::ZeroInput)?;
        if weights.all(|w| w == first) {
            Ok(first)
        } else {
            Err(Error::InhomogeneousWeight)
        }
    }

    pub fn max_weight(&self) -> Option<i64> {
        self.terms.keys().map(|m| m.weight()).max()
    }

    /// Parity if homogeneous.
    pub fn parity(&self) -> Option<Parity> {
        let mut ps = self.terms.keys().map(|m| m.parity());
        let first = ps.next()?;
        ps.all(|p| p == first).then_some(first)
    }

    /// Applies a linear map given on monomials.
    pub fn map_linear(&self, mut f: impl FnMut(&SuperMonomial) -> PolyExpr) -> PolyExpr {
        let mut out = PolyExpr::zero();
        for (m, c) in &self.terms {
            out.add_scaled(c, &f(m));
        }
        out
    }

    /// Applies an even derivation given by its values on variables.
    pub fn apply_derivation(&self, mut on_var: impl FnMut(&GenVar) -> PolyExpr) -> PolyExpr {
        self.map_linear(|m| {
            let mut out = PolyExpr::zero();
            let factors = m.factors();
            for (pos, &(v, e)) in factors.iter().enumerate() {
                let image = on_var(&v);
                if image.is_zero() {
                    continue;
                }
                let prefix = SuperMonomial::from_sorted_unchecked(factors[..pos].to_vec());
                let mut rest = Vec::with_capacity(factors.len() - pos);
                if e > 1 {
                    rest.push((v, e - 1));
                }
                rest.extend_from_slice(&factors[pos + 1..]);
                let rest = SuperMonomial::from_sorted_unchecked(rest);
                let left = PolyExpr::term(int(e as i64), prefix);
                let piece = &(&left * &image) * &PolyExpr::term(Scalar::one(), rest);
                out += piece;
            }
            out
        })
    }

    pub fn variables(&self) -> std::collections::BTreeSet<GenVar> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|(v, _)| *v))
            .collect()
    }
}

impl AddAssign<&PolyExpr> for PolyExpr {
    fn add_assign(&mut self, rhs: &PolyExpr) {
        for (m, c) in &rhs.terms {
            self.add_term(c.clone(), m.clone());
        }
    }
}

impl AddAssign for PolyExpr {
    fn add_assign(&mut self, rhs: PolyExpr) {
        for (m, c) in rhs.terms {
            self.add_term(c, m);
        }
    }
}

impl SubAssign<&PolyExpr> for PolyExpr {
    fn sub_assign(&mut self, rhs: &PolyExpr) {
        for (m, c) in &rhs.terms {
            self.add_term(-c.clone(), m.clone());
        }
    }
}

impl Add for &PolyExpr {
    type Output = PolyExpr;
    fn add(self, rhs: &PolyExpr) -> PolyExpr {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for PolyExpr {
    type Output = PolyExpr;
    fn add(mut self, rhs: PolyExpr) -> PolyExpr {
        self += rhs;
        self
    }
}

impl Sub for &PolyExpr {
    type Output = PolyExpr;
    fn sub(self, rhs: &PolyExpr) -> PolyExpr {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for PolyExpr {
    type Output = PolyExpr;
    fn sub(mut self, rhs: PolyExpr) -> PolyExpr {
        self -= &rhs;
        self
    }
}

impl Neg for &PolyExpr {
    type Output = PolyExpr;
    fn neg(self) -> PolyExpr {
        self.scale(&int(-1))
    }
}

impl Neg for PolyExpr {
    type Output = PolyExpr;
    fn neg(self) -> PolyExpr {
        -&self
    }
}

impl Mul for &PolyExpr {
    type Output = PolyExpr;
    fn mul(self, rhs: &PolyExpr) -> PolyExpr {
        let mut out = PolyExpr::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                if let Some((neg, m)) = a.mul(b) {
                    let c = ca * cb;
                    out.add_term(if neg { -c } else { c }, m);
                }
            }
        }
        out
    }
}

impl Mul for PolyExpr {
    type Output = PolyExpr;
    fn mul(self, rhs: PolyExpr) -> PolyExpr {
        &self * &rhs
    }
}

impl Mul<&Scalar> for &PolyExpr {
    type Output = PolyExpr;
    fn mul(self, rhs: &Scalar) -> PolyExpr {
        self.scale(rhs)
    }
}

impl std::iter::Sum for PolyExpr {
    fn sum<I: Iterator<Item = PolyExpr>>(iter: I) -> PolyExpr {
        iter.fold(PolyExpr::zero(), |acc, p| acc + p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ratio, Symbol};
    use proptest::prelude::*;

    fn v(s: Symbol, i: u8, d: u32) -> PolyExpr {
        PolyExpr::var(GenVar::new(s, i, d))
    }

    #[test]
    fn multiply_examples() {
        let b1 = v(Symbol::B, 1, 0);
        assert!((&b1 * &b1).is_zero());
        let c1 = v(Symbol::C, 1, 0);
        let c2 = v(Symbol::C, 2, 0);
        let c12 = &c1 * &c2;
        assert_eq!(&c2 * &c1, -&c12);
        let lhs = &(&v(Symbol::Beta, 1, 0) * &v(Symbol::Gamma, 1, 1)) * &v(Symbol::Beta, 2, 0);
        let rhs = &(&v(Symbol::Beta, 1, 0) * &v(Symbol::Beta, 2, 0)) * &v(Symbol::Gamma, 1, 1);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn partial_examples() {
        let c1 = v(Symbol::C, 1, 0);
        let c2 = v(Symbol::C, 2, 0);
        let lhs = (&c1 * &c2).apply_partial();
        let rhs = &(&c1.apply_partial() * &c2) + &(&c1 * &c2.apply_partial());
        assert_eq!(lhs, rhs);
        assert!(PolyExpr::one().apply_partial().is_zero());
    }

    #[test]
    fn weight_examples() {
        let c12 = &v(Symbol::C, 1, 0) * &v(Symbol::C, 2, 0);
        assert_eq!(c12.weight(), Ok(0));
        let bg = &v(Symbol::Beta, 1, 0) * &v(Symbol::Gamma, 1, 1);
        assert_eq!(bg.weight(), Ok(2));
        assert_eq!(v(Symbol::B, 1, 1).weight(), Ok(2));
        let mixed = &v(Symbol::B, 1, 0) + &v(Symbol::C, 1, 0);
        assert_eq!(mixed.weight(), Err(Error::InhomogeneousWeight));
        assert_eq!(PolyExpr::zero().weight(), Err(Error::ZeroInput));
    }

    #[test]
    fn derivation_helper_matches_partial() {
        let p = &(&v(Symbol::B, 1, 0) * &v(Symbol::C, 2, 1)) * &v(Symbol::Gamma, 1, 1)
            + v(Symbol::Beta, 2, 0).scale(&ratio(3, 2));
        let via_helper = p.apply_derivation(|x| PolyExpr::var(x.derivative()));
        assert_eq!(via_helper, p.apply_partial());
    }

    fn arb_var() -> impl Strategy<Value = GenVar> {
        (0usize..4, 1u8..=2, 0u32..3).prop_map(|(s, i, d)| GenVar::new(Symbol::ALL[s], i, d))
    }

    fn arb_mono() -> impl Strategy<Value = PolyExpr> {
        (prop::collection::vec(arb_var(), 0..4), -5i64..5, 1i64..4)
            .prop_map(|(vars, n, d)| PolyExpr::product_of(&vars).scale(&ratio(n, d)))
    }

    fn arb_poly() -> impl Strategy<Value = PolyExpr> {
        prop::collection::vec(arb_mono(), 0..4).prop_map(|ps| ps.into_iter().sum())
    }

    proptest! {
        #[test]
        fn supercommutative(a in arb_mono(), b in arb_mono()) {
            let sign = match (a.parity(), b.parity()) {
                (Some(Parity::Odd), Some(Parity::Odd)) => int(-1),
                _ => int(1),
            };
            prop_assert_eq!(&a * &b, (&b * &a).scale(&sign));
        }

        #[test]
        fn associative(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn leibniz(a in arb_poly(), b in arb_poly()) {
            let lhs = (&a * &b).apply_partial();
            let rhs = &(&a.apply_partial() * &b) + &(&a * &b.apply_partial());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn partial_raises_weight(a in arb_mono()) {
            if let Ok(w) = a.weight() {
                let d = a.apply_partial();
                if !d.is_zero() {
                    prop_assert_eq!(d.weight(), Ok(w + 1));
                }
            }
        }

        #[test]
        fn field_axioms(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50) {
            let x = ratio(a, b);
            let y = ratio(c, d);
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&x * &y, &y * &x);
            if !y.is_zero() {
                prop_assert_eq!(&(&x / &y) * &y, x.clone());
            }
            let s = &x * &y;
            let r = s.reduced();
            prop_assert_eq!(r.numer(), s.numer());
            prop_assert_eq!(r.denom(), s.denom());
            prop_assert!(s.denom() > &num_bigint::BigInt::zero());
        }
    }
}
