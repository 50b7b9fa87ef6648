//! The partial order on generators, standard words and their enumeration.

use std::fmt;

use super::weyl::{parse_gen, WeylGen, WeylLabel};
use crate::algebra::{Cursor, PolyExpr};
use crate::error::{parse, Error, Result};

/// How two generators of equal derivative order compare when both letters
/// of the larger one are odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OddOddRule {
    /// `x'`, `y'` both odd: require `x' > x` and `y' > y`.
    #[default]
    BothOdd,
    /// Both odd falls through to the weak `x' > x, y' ≥ y` condition.
    Weak,
}

/// `∂^k A_xy < ∂^{k'} A_{x'y'}` in the partial order.
pub fn precedes(s: &WeylGen, t: &WeylGen) -> bool {
    precedes_with(s, t, OddOddRule::BothOdd)
}

pub fn precedes_with(s: &WeylGen, t: &WeylGen, rule: OddOddRule) -> bool {
    let (k, k2) = (s.der as i64, t.der as i64);
    let (x, y) = s.label.letters();
    let (x2, y2) = t.label.letters();
    if k <= k2 - 2 {
        return true;
    }
    if k == k2 - 1 {
        return if x2.is_odd() { x2 > y } else { x2 >= y };
    }
    if k != k2 {
        return false;
    }
    match (x2.is_odd(), y2.is_odd()) {
        (false, false) => (x2 > x && y2 >= y) || (x2 >= x && y2 > y),
        (false, true) => x2 >= x && y2 > y,
        (true, false) => x2 > x && y2 >= y,
        (true, true) => match rule {
            OddOddRule::BothOdd => x2 > x && y2 > y,
            OddOddRule::Weak => x2 > x && y2 >= y,
        },
    }
}

/// Consecutive letters increase strictly, or repeat only at `∂^k A_{β∂γ}`.
pub fn is_standard(word: &[WeylGen]) -> bool {
    is_standard_with(word, OddOddRule::BothOdd)
}

pub fn is_standard_with(word: &[WeylGen], rule: OddOddRule) -> bool {
    word.windows(2).all(|w| {
        precedes_with(&w[0], &w[1], rule) || (w[0] == w[1] && w[0].label == WeylLabel::BetaDGamma)
    })
}

/// All generators `∂^k A_xy` of weight at most `w`, in `≺` order.
pub fn generators_up_to(w: i64) -> Vec<WeylGen> {
    let mut out = Vec::new();
    if w < 0 {
        return out;
    }
    for der in 0..=w as u32 {
        for label in WeylLabel::ALL {
            let g = WeylGen::new(label, der);
            if g.weight() <= w {
                out.push(g);
            }
        }
    }
    out.sort();
    out
}

/// Standard words of total weight exactly `w`, in lexicographic `≺` order.
pub fn enumerate_standard(w: i64) -> Vec<StandardWord> {
    enumerate_standard_with(w, OddOddRule::BothOdd)
}

pub fn enumerate_standard_with(w: i64, rule: OddOddRule) -> Vec<StandardWord> {
    let mut out = Vec::new();
    if w < 0 {
        return out;
    }
    let gens = generators_up_to(w);
    let mut word = Vec::new();
    extend(&gens, w, rule, &mut word, &mut out);
    out.sort();
    out
}

fn extend(gens: &[WeylGen], remaining: i64, rule: OddOddRule, word: &mut Vec<WeylGen>, out: &mut Vec<StandardWord>) {
    if remaining == 0 {
        out.push(StandardWord(word.clone()));
    }
    for g in gens {
        if g.weight() > remaining {
            continue;
        }
        let ok = match word.last() {
            None => true,
            Some(last) => precedes_with(last, g, rule) || (last == g && g.label == WeylLabel::BetaDGamma),
        };
        if ok {
            word.push(*g);
            extend(gens, remaining - g.weight(), rule, word, out);
            word.pop();
        }
    }
}

/// Ordered product of generators, expanded in `R`.
pub fn expand_word(word: &[WeylGen]) -> PolyExpr {
    word.iter()
        .fold(PolyExpr::one(), |acc, g| &acc * &g.expand())
}

pub fn word_weight(word: &[WeylGen]) -> i64 {
    word.iter().map(|g| g.weight()).sum()
}

/// Letter counts `(β, ∂γ, b, c)` of a word.
pub fn word_multidegree(word: &[WeylGen]) -> [u32; 4] {
    word.iter().fold([0; 4], |mut acc, g| {
        for (a, d) in acc.iter_mut().zip(g.multidegree()) {
            *a += d;
        }
        acc
    })
}

/// A word that satisfies the standardness predicate.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct StandardWord(Vec<WeylGen>);

impl StandardWord {
    pub fn new(word: Vec<WeylGen>) -> Result<Self> {
        if is_standard(&word) {
            Ok(StandardWord(word))
        } else {
            Err(Error::NotStandard(format_word(&word)))
        }
    }

    pub fn empty() -> Self {
        StandardWord(Vec::new())
    }

    pub fn gens(&self) -> &[WeylGen] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> i64 {
        word_weight(&self.0)
    }

    pub fn expand(&self) -> PolyExpr {
        expand_word(&self.0)
    }

    pub fn multidegree(&self) -> [u32; 4] {
        word_multidegree(&self.0)
    }
}

pub fn format_word(word: &[WeylGen]) -> String {
    if word.is_empty() {
        return "1".into();
    }
    word.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(" ")
}

impl fmt::Display for StandardWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_word(&self.0))
    }
}

/// Parses `A[bc] A[bb]^(1)`; `1` is the empty word.
pub fn parse_word(s: &str) -> Result<Vec<WeylGen>> {
    let mut cur = Cursor::new(s);
    cur.skip_ws();
    if cur.eat("1") {
        if !cur.at_end() {
            return Err(parse(cur.pos(), "unexpected trailing input"));
        }
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    while !cur.at_end() {
        out.push(parse_gen(&mut cur)?);
    }
    if out.is_empty() {
        return Err(parse(0, "expected a word"));
    }
    Ok(out)
}

impl std::str::FromStr for StandardWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        StandardWord::new(parse_word(s)?)
    }
}
