use std::fmt;

use crate::algebra::{GenVar, PolyExpr, Symbol};
use crate::error::{parse, Error, Result};

/// The four letter kinds of the invariant quadratics, ordered `c < b < ∂γ < β`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    C,
    B,
    DGamma,
    Beta,
}

impl Letter {
    pub fn is_odd(self) -> bool {
        matches!(self, Letter::B | Letter::C)
    }

    pub fn symbol(self) -> Symbol {
        match self {
            Letter::C => Symbol::C,
            Letter::B => Symbol::B,
            Letter::DGamma => Symbol::Gamma,
            Letter::Beta => Symbol::Beta,
        }
    }

    /// `∂^k` of the letter with component index `j`.
    pub fn var(self, j: u8, k: u32) -> GenVar {
        let der = if self == Letter::DGamma { k + 1 } else { k };
        GenVar::new(self.symbol(), j, der)
    }

    pub fn name(self) -> &'static str {
        match self {
            Letter::C => "c",
            Letter::B => "b",
            Letter::DGamma => "dgamma",
            Letter::Beta => "beta",
        }
    }
}

/// Labels `xy` of the eight quadratic invariants, `x ≥ y`. The declaration
/// order is the order by `(x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WeylLabel {
    CC,
    BC,
    BB,
    DGammaC,
    DGammaB,
    BetaC,
    BetaB,
    BetaDGamma,
}

impl WeylLabel {
    pub const ALL: [WeylLabel; 8] = [
        WeylLabel::CC,
        WeylLabel::BC,
        WeylLabel::BB,
        WeylLabel::DGammaC,
        WeylLabel::DGammaB,
        WeylLabel::BetaC,
        WeylLabel::BetaB,
        WeylLabel::BetaDGamma,
    ];

    pub fn letters(self) -> (Letter, Letter) {
        use Letter::*;
        match self {
            WeylLabel::CC => (C, C),
            WeylLabel::BC => (B, C),
            WeylLabel::BB => (B, B),
            WeylLabel::DGammaC => (DGamma, C),
            WeylLabel::DGammaB => (DGamma, B),
            WeylLabel::BetaC => (Beta, C),
            WeylLabel::BetaB => (Beta, B),
            WeylLabel::BetaDGamma => (Beta, DGamma),
        }
    }

    /// The label for the unordered letter pair, if one exists.
    pub fn from_letters(x: Letter, y: Letter) -> Option<WeylLabel> {
        let (hi, lo) = if x >= y { (x, y) } else { (y, x) };
        WeylLabel::ALL.into_iter().find(|l| l.letters() == (hi, lo))
    }

    pub fn is_odd(self) -> bool {
        let (x, y) = self.letters();
        x.is_odd() != y.is_odd()
    }

    /// Weight of `A_xy`: `β, b, ∂γ` count 1 and `c` counts 0.
    pub fn weight(self) -> i64 {
        let (x, y) = self.letters();
        [x, y].iter().filter(|l| **l != Letter::C).count() as i64
    }

    pub fn name(self) -> &'static str {
        match self {
            WeylLabel::CC => "cc",
            WeylLabel::BC => "bc",
            WeylLabel::BB => "bb",
            WeylLabel::DGammaC => "dgammac",
            WeylLabel::DGammaB => "dgammab",
            WeylLabel::BetaC => "betac",
            WeylLabel::BetaB => "betab",
            WeylLabel::BetaDGamma => "betadgamma",
        }
    }

    pub fn from_name(name: &str) -> Option<WeylLabel> {
        match name {
            "bdgamma" => Some(WeylLabel::DGammaB),
            _ => WeylLabel::ALL.into_iter().find(|l| l.name() == name),
        }
    }

    /// The quadratic itself, before derivatives.
    pub fn base(self) -> PolyExpr {
        use Letter::*;
        let v = |l: Letter, j: u8| l.var(j, 0);
        let pair = |a: GenVar, b: GenVar| PolyExpr::product_of(&[a, b]);
        match self {
            WeylLabel::BetaB => pair(v(Beta, 1), v(B, 2)) - pair(v(Beta, 2), v(B, 1)),
            WeylLabel::BetaC => pair(v(Beta, 1), v(C, 1)) + pair(v(Beta, 2), v(C, 2)),
            WeylLabel::BetaDGamma => pair(v(Beta, 1), v(DGamma, 1)) + pair(v(Beta, 2), v(DGamma, 2)),
            WeylLabel::BC => pair(v(B, 1), v(C, 1)) + pair(v(B, 2), v(C, 2)),
            WeylLabel::DGammaB => pair(v(B, 1), v(DGamma, 1)) + pair(v(B, 2), v(DGamma, 2)),
            WeylLabel::DGammaC => pair(v(C, 1), v(DGamma, 2)) - pair(v(C, 2), v(DGamma, 1)),
            WeylLabel::BB => pair(v(B, 1), v(B, 2)),
            WeylLabel::CC => pair(v(C, 1), v(C, 2)),
        }
    }
}

/// `∂^der A_label`. The derived order compares `der` first, then the label,
/// which is the total order `≺` on generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylGen {
    pub der: u32,
    pub label: WeylLabel,
}

impl WeylGen {
    pub fn new(label: WeylLabel, der: u32) -> Self {
        WeylGen { der, label }
    }

    pub fn weight(&self) -> i64 {
        self.label.weight() + self.der as i64
    }

    pub fn is_odd(&self) -> bool {
        self.label.is_odd()
    }

    pub fn expand(&self) -> PolyExpr {
        weyl(self.label, self.der)
    }

    /// Letter counts `(β, ∂γ, b, c)`.
    pub fn multidegree(&self) -> [u32; 4] {
        let mut out = [0; 4];
        let (x, y) = self.label.letters();
        for l in [x, y] {
            out[match l {
                Letter::Beta => 0,
                Letter::DGamma => 1,
                Letter::B => 2,
                Letter::C => 3,
            }] += 1;
        }
        out
    }
}

/// `∂^der` applied to the quadratic invariant with the given label.
pub fn weyl(label: WeylLabel, der: u32) -> PolyExpr {
    label.base().apply_partial_n(der)
}

impl fmt::Display for WeylGen {
    /// `A[bb]` or `A[bb]^(2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A[{}]", self.label.name())?;
        if self.der > 0 {
            write!(f, "^({})", self.der)?;
        }
        Ok(())
    }
}

impl std::str::FromStr for WeylGen {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = crate::algebra::Cursor::new(s);
        let g = parse_gen(&mut cur)?;
        if !cur.at_end() {
            return Err(parse(cur.pos(), "unexpected trailing input"));
        }
        Ok(g)
    }
}

pub(crate) fn parse_gen(cur: &mut crate::algebra::Cursor<'_>) -> Result<WeylGen> {
    cur.skip_ws();
    cur.expect("A[")?;
    let at = cur.pos();
    let name = cur.ident();
    let label = WeylLabel::from_name(name).ok_or_else(|| parse(at, format!("unknown label `{name}`")))?;
    cur.expect("]")?;
    let der = if cur.eat("^(") {
        let d = cur.small()?;
        cur.expect(")")?;
        d
    } else {
        0
    };
    Ok(WeylGen::new(label, der))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratics() {
        assert_eq!(weyl(WeylLabel::CC, 0).to_string(), "c^1 c^2");
        assert_eq!(
            weyl(WeylLabel::BetaDGamma, 0),
            "beta^1 gamma^1_1 + beta^2 gamma^2_1".parse().unwrap()
        );
        assert_eq!(
            weyl(WeylLabel::DGammaC, 0),
            "c^1 gamma^2_1 - c^2 gamma^1_1".parse().unwrap()
        );
        for label in WeylLabel::ALL {
            for k in 0..4 {
                let p = weyl(label, k);
                assert_eq!(p.weight(), Ok(label.weight() + k as i64));
                let odd = p.parity().unwrap().is_odd();
                assert_eq!(odd, label.is_odd());
            }
        }
    }

    #[test]
    fn text() {
        let g: WeylGen = "A[dgammab]^(3)".parse().unwrap();
        assert_eq!(g, WeylGen::new(WeylLabel::DGammaB, 3));
        assert_eq!(g.to_string(), "A[dgammab]^(3)");
        assert_eq!("A[bdgamma]".parse::<WeylGen>().unwrap().label, WeylLabel::DGammaB);
        assert!("A[xx]".parse::<WeylGen>().is_err());
    }

    #[test]
    fn label_order() {
        let mut sorted = WeylLabel::ALL;
        sorted.sort_by_key(|l| l.letters());
        assert_eq!(sorted, WeylLabel::ALL);
        assert_eq!(WeylLabel::from_letters(Letter::C, Letter::B), Some(WeylLabel::BC));
        assert_eq!(WeylLabel::from_letters(Letter::Beta, Letter::Beta), None);
    }
}
