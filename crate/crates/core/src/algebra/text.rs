//! Plain-text form of [`PolyExpr`].
//!
//! ```text
//! poly     := "0" | term (("+" | "-") term)*      (a leading "-" is allowed)
//! term     := coeff | [coeff "*"] monomial
//! coeff    := integer ["/" integer]
//! monomial := factor (" " factor)*
//! factor   := ["~"] symbol "^" index ["_" der] ["**" power]
//! symbol   := "beta" | "gamma" | "b" | "c"
//! ```
//!
//! `c^2_3` is `∂³c²`; `~` marks the tilde chart. Printing then parsing is the
//! identity.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{GenVar, PolyExpr, Scalar, SuperMonomial, Symbol};
use crate::error::{parse, Error};

pub(crate) fn write_scalar_coeff(
    f: &mut fmt::Formatter<'_>,
    c: &Scalar,
    first: bool,
    has_body: bool,
) -> fmt::Result {
    let neg = c.is_negative();
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else if neg {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    let abs = c.abs();
    if has_body {
        if !abs.is_one() {
            write!(f, "{abs}*")?;
        }
    } else {
        write!(f, "{abs}")?;
    }
    Ok(())
}

impl fmt::Display for PolyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            write_scalar_coeff(f, c, i == 0, !m.is_one())?;
            if !m.is_one() {
                write!(f, "{m}")?;
            }
        }
        Ok(())
    }
}

/// Byte-level cursor shared by the text parsers of this crate.
pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub(crate) fn pos(&self) -> usize {
        self.pos
    }

    pub(crate) fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub(crate) fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.src.len()
    }

    pub(crate) fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    pub(crate) fn eat(&mut self, s: &str) -> bool {
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, s: &str) -> Result<(), Error> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(parse(self.pos, format!("expected `{s}`")))
        }
    }

    pub(crate) fn number(&mut self) -> Result<BigInt, Error> {
        let digits = self.rest().chars().take_while(|c| c.is_ascii_digit()).count();
        if digits == 0 {
            return Err(parse(self.pos, "expected a number"));
        }
        let n = self.rest()[..digits].parse::<BigInt>().expect("digits");
        self.pos += digits;
        Ok(n)
    }

    pub(crate) fn small(&mut self) -> Result<u32, Error> {
        let at = self.pos;
        let n = self.number()?;
        u32::try_from(n).map_err(|_| parse(at, "number too large"))
    }

    /// `integer ["/" integer]`
    pub(crate) fn scalar(&mut self) -> Result<Scalar, Error> {
        let num = self.number()?;
        if self.eat("/") {
            let at = self.pos;
            let den = self.number()?;
            if den.is_zero() {
                return Err(parse(at, "zero denominator"));
            }
            Ok(Scalar::new(num, den))
        } else {
            Ok(Scalar::from_integer(num))
        }
    }

    pub(crate) fn ident(&mut self) -> &'a str {
        let len: usize = self
            .rest()
            .chars()
            .take_while(|c| c.is_alphanumeric() || *c == '\'')
            .map(char::len_utf8)
            .sum();
        let out = &self.rest()[..len];
        self.pos += len;
        out
    }

    pub(crate) fn symbol(&mut self) -> Result<Symbol, Error> {
        let at = self.pos;
        let name = self.ident();
        Symbol::from_name(name).ok_or_else(|| parse(at, format!("unknown symbol `{name}`")))
    }
}

fn factor(cur: &mut Cursor<'_>) -> Result<(GenVar, u32), Error> {
    let tilde = cur.eat("~");
    let symbol = cur.symbol()?;
    cur.expect("^")?;
    let at = cur.pos();
    let index = cur.small()?;
    let index = u8::try_from(index).map_err(|_| parse(at, "index too large"))?;
    let der = if cur.eat("_") { cur.small()? } else { 0 };
    let power = if cur.eat("**") { cur.small()? } else { 1 };
    let v = if tilde {
        GenVar::tilde(symbol, index, der)
    } else {
        GenVar::new(symbol, index, der)
    };
    Ok((v, power))
}

fn term(cur: &mut Cursor<'_>) -> Result<PolyExpr, Error> {
    cur.skip_ws();
    let mut coeff = Scalar::one();
    let mut have_coeff = false;
    if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
        coeff = cur.scalar()?;
        have_coeff = true;
        if !cur.eat("*") {
            return Ok(PolyExpr::constant(coeff));
        }
    }
    let mut vars = Vec::new();
    loop {
        cur.skip_ws();
        match cur.peek() {
            Some(c) if c == '~' || c.is_alphabetic() => {
                let (v, p) = factor(cur)?;
                vars.extend(std::iter::repeat_n(v, p as usize));
            }
            _ => break,
        }
    }
    if vars.is_empty() {
        return Err(parse(
            cur.pos(),
            if have_coeff {
                "expected a monomial after `*`"
            } else {
                "expected a term"
            },
        ));
    }
    Ok(PolyExpr::product_of(&vars).scale(&coeff))
}

impl FromStr for PolyExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut cur = Cursor::new(s);
        let mut out = PolyExpr::zero();
        cur.skip_ws();
        let mut sign = if cur.eat("-") { -Scalar::one() } else { Scalar::one() };
        loop {
            let t = term(&mut cur)?;
            out.add_scaled(&sign, &t);
            cur.skip_ws();
            if cur.eat("+") {
                sign = Scalar::one();
            } else if cur.eat("-") {
                sign = -Scalar::one();
            } else {
                break;
            }
        }
        if !cur.at_end() {
            return Err(parse(cur.pos(), "unexpected trailing input"));
        }
        Ok(out)
    }
}

impl SuperMonomial {
    /// Parses a single monomial without coefficient, e.g. `b^1 c^2_3`.
    pub fn parse(s: &str) -> Result<SuperMonomial, Error> {
        let p: PolyExpr = s.parse()?;
        let single = match p.terms().next() {
            Some((m, c)) if p.len() == 1 && c.is_one() => Some(m.clone()),
            _ => None,
        };
        single.ok_or_else(|| parse(0, "expected a single monomial"))
    }
}
