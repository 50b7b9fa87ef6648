//! Mode operators on the Fock module and the normal-ordered product recursion.
//!
//! A state is a [`PolyExpr`] in the letters `∂^k x`. A generator mode
//! `x_(m)` acts by multiplication with `∂^{-m-1}x / (-m-1)!` for `m < 0` and
//! by `m!` times the derivative in the conjugate letter `∂^m x̄` for `m ≥ 0`.
//! Products of composite states follow from the Borcherds identity for
//! `(x_(-k-1) A')_(n)`, recursing on the number of letters.

use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigInt;

use crate::algebra::{binomial, factorial, inv_factorial, GenVar, PolyExpr, Scalar, SuperMonomial, Symbol};

/// Applies `x_(m)` for the generator `x` (a letter with `der == 0`).
pub fn apply_mode(x: &GenVar, m: i64, state: &PolyExpr) -> PolyExpr {
    debug_assert_eq!(x.der, 0);
    if m < 0 {
        let k = (-m - 1) as u32;
        let letter = PolyExpr::term(inv_factorial(k), SuperMonomial::var(x.with_der(k)));
        return &letter * state;
    }
    let m = m as u32;
    let target = GenVar::new(x.symbol.conjugate(), x.index, m);
    let scale = Scalar::from_integer(factorial(m));
    // γ_(m) pairs with β with the opposite sign, β(z)γ(w) ~ 1/(z-w) being
    // the defining contraction.
    let scale = if x.symbol == Symbol::Gamma { -scale } else { scale };
    let mut out = PolyExpr::zero();
    for (mono, c) in state.terms() {
        if let Some((f, rest)) = mono.remove_left(&target) {
            out.add_term(c * &scale * BigInt::from(f), rest);
        }
    }
    out
}

/// Highest derivative order of letters with the given symbol and index.
fn max_der(state: &PolyExpr, symbol: Symbol, index: u8) -> Option<u32> {
    state
        .terms()
        .flat_map(|(m, _)| m.factors().iter().map(|(v, _)| *v))
        .filter(|v| v.symbol == symbol && v.index == index)
        .map(|v| v.der)
        .max()
}

type Key = (SuperMonomial, i64, SuperMonomial);

/// Memoised `a_(n) c` on monomials. Results never depend on the order in
/// which entries were filled.
#[derive(Default)]
pub struct ProductTable {
    memo: RwLock<HashMap<Key, PolyExpr>>,
}

impl std::fmt::Debug for ProductTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let len = self.memo.read().map(|m| m.len()).unwrap_or(0);
        f.debug_struct("ProductTable").field("entries", &len).finish()
    }
}

impl ProductTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.memo.read().expect("product table poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `a_(n) c` for arbitrary states.
    pub fn product(&self, a: &PolyExpr, n: i64, c: &PolyExpr) -> PolyExpr {
        let mut out = PolyExpr::zero();
        for (am, ac) in a.terms() {
            out.add_scaled(ac, &self.mono_product_state(am, n, c));
        }
        out
    }

    fn mono_product_state(&self, a: &SuperMonomial, n: i64, c: &PolyExpr) -> PolyExpr {
        let mut out = PolyExpr::zero();
        for (cm, cc) in c.terms() {
            out.add_scaled(cc, &self.mono_product(a, n, cm));
        }
        out
    }

    fn mono_product(&self, a: &SuperMonomial, n: i64, c: &SuperMonomial) -> PolyExpr {
        if a.is_one() {
            return if n == -1 {
                PolyExpr::term(Scalar::from_integer(1.into()), c.clone())
            } else {
                PolyExpr::zero()
            };
        }
        // Weight bound: a_(n) c has weight wt(a) + wt(c) - n - 1 ≥ 0.
        if n > a.weight() + c.weight() - 1 {
            return PolyExpr::zero();
        }
        let key = (a.clone(), n, c.clone());
        if let Some(hit) = self.memo.read().expect("product table poisoned").get(&key) {
            return hit.clone();
        }
        let result = self.expand(a, n, c);
        self.memo
            .write()
            .expect("product table poisoned")
            .insert(key, result.clone());
        result
    }

    /// `(k! x_(-k-1) A')_(n) C` with `a = ∂^k x · A'`:
    ///
    /// `k! Σ_j C(k+j, j) [ x_(-k-1-j) A'_(n+j) C + (-1)^k (-1)^{|x||A'|} A'_(n-k-1-j) x_(j) C ]`
    fn expand(&self, a: &SuperMonomial, n: i64, c: &SuperMonomial) -> PolyExpr {
        let (letter, rest) = a.split_first().expect("nonempty monomial");
        let k = letter.der;
        let x = letter.with_der(0);
        let c_poly = PolyExpr::term(Scalar::from_integer(1.into()), c.clone());
        let mut out = PolyExpr::zero();

        // First sum: A'_(n+j) C vanishes once n + j exceeds the weight bound.
        let bound = rest.weight() + c.weight() - 1;
        let mut j: i64 = 0;
        while n + j <= bound.max(-1) {
            let inner = self.mono_product(&rest, n + j, c);
            if !inner.is_zero() {
                let coeff = Scalar::from_integer(binomial(k + j as u32, j as u32));
                let term = apply_mode(&x, -(k as i64) - 1 - j, &inner);
                out.add_scaled(&coeff, &term);
            }
            j += 1;
        }

        // Second sum: x_(j) C needs the conjugate letter at order j in C.
        let sign_k = if k % 2 == 0 { 1 } else { -1 };
        let sign_x = if x.is_odd() && rest.parity().is_odd() { -1 } else { 1 };
        let sign = Scalar::from_integer(BigInt::from(sign_k * sign_x));
        if let Some(top) = max_der(&c_poly, x.symbol.conjugate(), x.index) {
            for j in 0..=top {
                let contracted = apply_mode(&x, j as i64, &c_poly);
                if contracted.is_zero() {
                    continue;
                }
                let inner = self.mono_product_state(&rest, n - k as i64 - 1 - j as i64, &contracted);
                if inner.is_zero() {
                    continue;
                }
                let coeff = &sign * Scalar::from_integer(binomial(k + j, j));
                out.add_scaled(&coeff, &inner);
            }
        }
        if k > 0 {
            out = out.scale(&Scalar::from_integer(factorial(k)));
        }
        out
    }
}
