//! The leading-monomial map used to prove independence of standard words.
//!
//! Generators of `R` are ordered by
//! `∂^k c¹ < ∂^k c² < ∂^k b² < ∂^k b¹ < ∂^{k+1}γ¹ < ∂^{k+1}γ² < ∂^k β² < ∂^k β¹ < ∂^{k+1} c¹`,
//! monomials first by degree and then by comparing their ascending factor
//! lists lexicographically.

use std::cmp::Ordering;

use crate::algebra::{GenVar, PolyExpr, SuperMonomial, Symbol};
use crate::error::{Error, Result};

/// Position of a variable in the generator order.
pub fn var_key(v: &GenVar) -> (u32, u8) {
    let first = v.index == 1;
    match v.symbol {
        Symbol::C => (v.der, if first { 0 } else { 1 }),
        Symbol::B => (v.der, if first { 3 } else { 2 }),
        Symbol::Gamma => (v.der.saturating_sub(1), if first { 4 } else { 5 }),
        Symbol::Beta => (v.der, if first { 7 } else { 6 }),
    }
}

fn sorted_keys(m: &SuperMonomial) -> Vec<(u32, u8)> {
    let mut keys: Vec<_> = m.vars().map(|v| var_key(&v)).collect();
    keys.sort();
    keys
}

pub fn compare_monomials(a: &SuperMonomial, b: &SuperMonomial) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| sorted_keys(a).cmp(&sorted_keys(b)))
}

/// The largest monomial of `f`.
pub fn leading_monomial(f: &PolyExpr) -> Result<SuperMonomial> {
    f.terms()
        .map(|(m, _)| m)
        .max_by(|a, b| compare_monomials(a, b))
        .cloned()
        .ok_or(Error::ZeroInput)
}
