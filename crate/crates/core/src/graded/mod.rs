//! The ring `R` of the arc-space invariant theory: the eight quadratic
//! invariants, the `sl₂[t]` action, standard words, straightening and the
//! leading-monomial order.

mod action;
mod leading;
pub mod relations;
mod standard;
mod straighten;
mod weyl;

pub use action::{act, act_on_var, LieGen, Sl2};
pub use leading::{compare_monomials, leading_monomial, var_key};
pub use standard::{
    enumerate_standard, enumerate_standard_with, expand_word, format_word, generators_up_to, is_standard,
    is_standard_with, parse_word, precedes, precedes_with, word_multidegree, word_weight, OddOddRule, StandardWord,
};
pub use straighten::{format_combination, straighten, Straightener};
pub use weyl::{weyl, Letter, WeylGen, WeylLabel};

use crate::algebra::{PolyExpr, Symbol};
use crate::error::{Error, Result};

/// `(n, s)`: the number of `β` and `b` letters, and the number of `β` letters.
pub fn filtration_degrees(f: &PolyExpr) -> Result<(u32, u32)> {
    let mut degrees = f.terms().map(|(m, _)| {
        let count = |s: Symbol| m.vars().filter(|v| v.symbol == s).count() as u32;
        let beta = count(Symbol::Beta);
        (beta + count(Symbol::B), beta)
    });
    let first = degrees.next().ok_or(Error::ZeroInput)?;
    if degrees.all(|d| d == first) {
        Ok(first)
    } else {
        Err(Error::Inhomogeneous)
    }
}

#[cfg(test)]
mod tests;
