use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::{factorial, Parity, Scalar};

/// Generator symbol. The declaration order `β < γ < b < c` is the canonical
/// order used for normal forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Beta,
    Gamma,
    B,
    C,
}

impl Symbol {
    pub const ALL: [Symbol; 4] = [Symbol::Beta, Symbol::Gamma, Symbol::B, Symbol::C];

    pub fn parity(self) -> Parity {
        Parity::from_odd(matches!(self, Symbol::B | Symbol::C))
    }

    pub fn is_odd(self) -> bool {
        self.parity().is_odd()
    }

    /// The symbol this one contracts against in the free-field OPEs.
    pub fn conjugate(self) -> Symbol {
        match self {
            Symbol::Beta => Symbol::Gamma,
            Symbol::Gamma => Symbol::Beta,
            Symbol::B => Symbol::C,
            Symbol::C => Symbol::B,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Symbol::Beta => "beta",
            Symbol::Gamma => "gamma",
            Symbol::B => "b",
            Symbol::C => "c",
        }
    }

    pub fn from_name(name: &str) -> Option<Symbol> {
        match name {
            "beta" | "β" => Some(Symbol::Beta),
            "gamma" | "γ" => Some(Symbol::Gamma),
            "b" => Some(Symbol::B),
            "c" => Some(Symbol::C),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Chart {
    Plain,
    Tilde,
}

/// The variable `∂^der x^index`, optionally tagged with the tilde chart.
///
/// Field order matters: the derived `Ord` is the lexicographic order on
/// `(chart, symbol, index, der)` that fixes the sign of odd products.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenVar {
    pub chart: Chart,
    pub symbol: Symbol,
    pub index: u8,
    pub der: u32,
}

impl GenVar {
    pub fn new(symbol: Symbol, index: u8, der: u32) -> Self {
        GenVar {
            chart: Chart::Plain,
            symbol,
            index,
            der,
        }
    }

    pub fn tilde(symbol: Symbol, index: u8, der: u32) -> Self {
        GenVar {
            chart: Chart::Tilde,
            symbol,
            index,
            der,
        }
    }

    pub fn parity(&self) -> Parity {
        self.symbol.parity()
    }

    pub fn is_odd(&self) -> bool {
        self.symbol.is_odd()
    }

    /// Conformal weight: `β, b` carry `der + 1`, `γ, c` carry `der`.
    pub fn weight(&self) -> i64 {
        match self.symbol {
            Symbol::Beta | Symbol::B => self.der as i64 + 1,
            Symbol::Gamma | Symbol::C => self.der as i64,
        }
    }

    pub fn derivative(&self) -> GenVar {
        GenVar {
            der: self.der + 1,
            ..*self
        }
    }

    pub fn with_der(&self, der: u32) -> GenVar {
        GenVar { der, ..*self }
    }

    pub fn with_index(&self, index: u8) -> GenVar {
        GenVar { index, ..*self }
    }

    /// Rewrite in subscript indexing: `∂^k x = k! x_{k+1}` for `x = β, b, c`
    /// and `∂^k γ = (k-1)! γ_k` for `k ≥ 1`. Returns `None` for `γ` itself,
    /// which has no subscript name.
    pub fn to_subscript(&self) -> Option<(Scalar, SubscriptVar)> {
        let (factor, sub) = match self.symbol {
            Symbol::Gamma => {
                if self.der == 0 {
                    return None;
                }
                (factorial(self.der - 1), self.der)
            }
            _ => (factorial(self.der), self.der + 1),
        };
        Some((
            Scalar::from_integer(factor),
            SubscriptVar {
                symbol: self.symbol,
                index: self.index,
                sub,
            },
        ))
    }
}

impl fmt::Display for GenVar {
    /// `b^1`, `c^2_3` (index 2, three derivatives), `~beta^1` for the tilde chart.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.chart == Chart::Tilde {
            write!(f, "~")?;
        }
        write!(f, "{}^{}", self.symbol.name(), self.index)?;
        if self.der > 0 {
            write!(f, "_{}", self.der)?;
        }
        Ok(())
    }
}

/// A variable `x_m^j` in subscript indexing, `m ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubscriptVar {
    pub symbol: Symbol,
    pub index: u8,
    pub sub: u32,
}

impl SubscriptVar {
    /// Inverse of [`GenVar::to_subscript`]: `x_m = ∂^{m-1}x / (m-1)!` and
    /// `γ_m = ∂^m γ / (m-1)!`.
    pub fn to_genvar(&self) -> (Scalar, GenVar) {
        assert!(self.sub >= 1, "subscripts start at 1");
        let der = match self.symbol {
            Symbol::Gamma => self.sub,
            _ => self.sub - 1,
        };
        (
            Scalar::new(BigInt::one(), factorial(self.sub - 1)),
            GenVar::new(self.symbol, self.index, der),
        )
    }

    /// The derivation in subscript form, `D x_m = m x_{m+1}`.
    pub fn derivative(&self) -> (Scalar, SubscriptVar) {
        (
            Scalar::from_integer(BigInt::from(self.sub)),
            SubscriptVar {
                sub: self.sub + 1,
                ..*self
            },
        )
    }
}
