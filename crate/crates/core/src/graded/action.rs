//! The current algebra `sl₂[t]` acting on `R` by even derivations.

use std::fmt;

use crate::algebra::{falling, GenVar, PolyExpr, Scalar, Symbol};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sl2 {
    H,
    G,
    F,
}

impl Sl2 {
    pub const ALL: [Sl2; 3] = [Sl2::H, Sl2::G, Sl2::F];

    /// Matrix of the defining representation: `ξ e^j = Σ_i m[i][j] e^i`
    /// with `He¹ = e¹, He² = −e², Ge² = e¹, Fe¹ = e²`.
    fn matrix(self) -> [[i64; 2]; 2] {
        match self {
            Sl2::H => [[1, 0], [0, -1]],
            Sl2::G => [[0, 1], [0, 0]],
            Sl2::F => [[0, 0], [1, 0]],
        }
    }
}

/// `ξ t^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LieGen {
    pub base: Sl2,
    pub t_power: u32,
}

impl LieGen {
    pub fn new(base: Sl2, t_power: u32) -> Self {
        LieGen { base, t_power }
    }
}

impl fmt::Display for LieGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.t_power {
            0 => write!(f, "{:?}", self.base),
            1 => write!(f, "{:?}t", self.base),
            n => write!(f, "{:?}t^{n}", self.base),
        }
    }
}

/// `ξ` applied to the undifferentiated letter of `v`'s symbol with index `j`.
/// `β, b` transform like `e^j`; `γ, c` like the dual basis (negative transpose).
fn on_component(xi: Sl2, symbol: Symbol, j: u8) -> Vec<(i64, u8)> {
    let m = xi.matrix();
    let col = (j - 1) as usize;
    let dual = matches!(symbol, Symbol::Gamma | Symbol::C);
    (0..2)
        .filter_map(|i| {
            let c = if dual { -m[col][i] } else { m[i][col] };
            (c != 0).then_some((c, i as u8 + 1))
        })
        .collect()
}

/// `ξ t^n` on a single variable:
/// `ξt^n(∂^m x) = m!/(m−n)! ∂^{m−n}(ξx)` for `m ≥ n`, else 0, where `x` is
/// one of `β, ∂γ, b, c`. Undifferentiated `γ` only sees `t⁰`.
pub fn act_on_var(g: LieGen, v: &GenVar) -> PolyExpr {
    if v.index == 0 || v.index > 2 {
        return PolyExpr::zero();
    }
    let (m, shift) = match v.symbol {
        Symbol::Gamma if v.der == 0 => {
            if g.t_power > 0 {
                return PolyExpr::zero();
            }
            (0, 0)
        }
        Symbol::Gamma => (v.der - 1, 1),
        _ => (v.der, 0),
    };
    if m < g.t_power {
        return PolyExpr::zero();
    }
    let factor = Scalar::from_integer(falling(m, g.t_power));
    let new_der = m - g.t_power + shift;
    let mut out = PolyExpr::zero();
    for (c, i) in on_component(g.base, v.symbol, v.index) {
        let target = GenVar {
            index: i,
            der: new_der,
            ..*v
        };
        out.add_scaled(&(&factor * Scalar::from_integer(c.into())), &PolyExpr::var(target));
    }
    out
}

/// `ξ t^n · f`, extended to products by the Leibniz rule.
pub fn act(g: LieGen, f: &PolyExpr) -> PolyExpr {
    f.apply_derivation(|v| act_on_var(g, v))
}
