//! Plain-text field notation.
//!
//! ```text
//! field := "0" | term (("+" | "-") term)*      (a leading "-" is allowed)
//! term  := coeff | [coeff "*"] atom
//! atom  := ":" atom atom* ":"                  right-nested Wick product
//!        | "d" ["^" k] "(" field ")"          k-th derivative
//!        | "(" field ")"
//!        | symbol "^" index                   generator, e.g. beta^1
//!        | name                               resolved by the caller, e.g. L'
//! ```
//!
//! Canonical words print as `:beta^1 d(gamma^1):`, single letters without
//! colons and the vacuum as `1`.

use std::fmt;

use num_traits::One;

use super::{FieldExpr, FockSpace};
use crate::algebra::{write_scalar_coeff, Cursor, GenVar, Scalar, Symbol};
use crate::error::{parse, Error, Result};

/// Looks up named fields such as section names.
pub type FieldResolver<'a> = &'a dyn Fn(&str) -> Option<FieldExpr>;

fn write_letter(f: &mut fmt::Formatter<'_>, v: &GenVar) -> fmt::Result {
    let base = format!("{}^{}", v.symbol.name(), v.index);
    match v.der {
        0 => write!(f, "{base}"),
        1 => write!(f, "d({base})"),
        k => write!(f, "d^{k}({base})"),
    }
}

pub(crate) fn write_field(f: &mut fmt::Formatter<'_>, a: &FieldExpr) -> fmt::Result {
    if a.is_zero() {
        return write!(f, "0");
    }
    for (i, (m, c)) in a.as_poly().terms().enumerate() {
        write_scalar_coeff(f, c, i == 0, !m.is_one())?;
        if m.is_one() {
            continue;
        }
        let letters: Vec<GenVar> = m.vars().collect();
        if letters.len() == 1 {
            write_letter(f, &letters[0])?;
        } else {
            write!(f, ":")?;
            for (j, v) in letters.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write_letter(f, v)?;
            }
            write!(f, ":")?;
        }
    }
    Ok(())
}

struct Parser<'s, 'r> {
    cur: Cursor<'s>,
    space: &'r FockSpace,
    resolve: Option<FieldResolver<'r>>,
}

impl Parser<'_, '_> {
    fn field(&mut self) -> Result<FieldExpr> {
        self.cur.skip_ws();
        let mut sign = if self.cur.eat("-") { -Scalar::one() } else { Scalar::one() };
        let mut out = FieldExpr::zero();
        loop {
            let t = self.term()?;
            out += &t.scale(&sign);
            self.cur.skip_ws();
            if self.cur.eat("+") {
                sign = Scalar::one();
            } else if self.cur.eat("-") {
                sign = -Scalar::one();
            } else {
                return Ok(out);
            }
        }
    }

    fn term(&mut self) -> Result<FieldExpr> {
        self.cur.skip_ws();
        if self.cur.peek().is_some_and(|c| c.is_ascii_digit()) {
            let c = self.cur.scalar()?;
            if !self.cur.eat("*") {
                return Ok(FieldExpr::scalar(c));
            }
            return Ok(self.atom()?.scale(&c));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<FieldExpr> {
        self.cur.skip_ws();
        let at = self.cur.pos();
        if self.cur.eat(":") {
            let mut factors = Vec::new();
            loop {
                self.cur.skip_ws();
                if self.cur.eat(":") {
                    break;
                }
                if self.cur.at_end() {
                    return Err(parse(self.cur.pos(), "unterminated `:`"));
                }
                factors.push(self.atom()?);
            }
            if factors.is_empty() {
                return Err(parse(at, "empty normally ordered product"));
            }
            return Ok(self.space.wick_word(&factors));
        }
        if self.cur.eat("(") {
            let inner = self.field()?;
            self.cur.skip_ws();
            self.cur.expect(")")?;
            return Ok(inner);
        }
        if self.cur.rest().starts_with("d(") || self.cur.rest().starts_with("d^") {
            self.cur.eat("d");
            let k = if self.cur.eat("^") { self.cur.small()? } else { 1 };
            self.cur.expect("(")?;
            let inner = self.field()?;
            self.cur.skip_ws();
            self.cur.expect(")")?;
            return Ok(inner.translation_n(k));
        }
        let name = self.cur.ident();
        if name.is_empty() {
            return Err(parse(at, "expected a field"));
        }
        if let Some(symbol) = Symbol::from_name(name) {
            if self.cur.eat("^") {
                let idx_at = self.cur.pos();
                let index = self.cur.small()?;
                let index = u8::try_from(index).map_err(|_| parse(idx_at, "index too large"))?;
                return self.space.generator(symbol, index);
            }
        }
        if let Some(found) = self.resolve.and_then(|r| r(name)) {
            return Ok(found);
        }
        Err(parse(at, format!("unknown field `{name}`")))
    }
}

/// Parses field notation, resolving bare names through `resolve`.
pub fn parse_field(space: &FockSpace, src: &str, resolve: Option<FieldResolver<'_>>) -> Result<FieldExpr> {
    let mut p = Parser {
        cur: Cursor::new(src),
        space,
        resolve,
    };
    let out = p.field()?;
    if !p.cur.at_end() {
        return Err(Error::Parse {
            offset: p.cur.pos(),
            message: "unexpected trailing input".into(),
        });
    }
    Ok(out)
}
