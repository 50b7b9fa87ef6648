//! The eight global sections on the Kummer surface, their operator product
//! table with a closure certificate, the second symbol map and the lifted
//! basis of standard words.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::algebra::{ratio, PolyExpr, Scalar, SuperMonomial, Symbol};
use crate::error::{Error, Result};
use crate::fock::{parse_field, FieldExpr, FockSpace, LambdaPolynomial};
use crate::graded::{enumerate_standard, format_word, is_standard, StandardWord, WeylGen, WeylLabel};
use crate::linalg::{Echelon, Insertion};
use crate::report::Check;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum SectionName {
    L,
    J,
    Q,
    G,
    B,
    C,
    D,
    E,
}

impl SectionName {
    pub const ALL: [SectionName; 8] = [
        SectionName::L,
        SectionName::J,
        SectionName::Q,
        SectionName::G,
        SectionName::B,
        SectionName::C,
        SectionName::D,
        SectionName::E,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SectionName::L => "L",
            SectionName::J => "J",
            SectionName::Q => "Q",
            SectionName::G => "G",
            SectionName::B => "B",
            SectionName::C => "C",
            SectionName::D => "D",
            SectionName::E => "E",
        }
    }

    pub fn from_name(s: &str) -> Option<SectionName> {
        SectionName::ALL.into_iter().find(|n| n.name() == s)
    }

    /// Declared parity; tests compare it with the parity of the defining word.
    pub fn is_odd(self) -> bool {
        matches!(self, SectionName::Q | SectionName::G | SectionName::B | SectionName::C)
    }

    /// Conformal weight under the unshifted `L`.
    pub fn weight(self) -> i64 {
        match self {
            SectionName::E => 0,
            SectionName::J | SectionName::Q | SectionName::C => 1,
            SectionName::L | SectionName::G | SectionName::B | SectionName::D => 2,
        }
    }

    /// The section whose symbol is `±A_label`, and the sign.
    pub fn for_label(label: WeylLabel) -> (SectionName, i64) {
        match label {
            WeylLabel::CC => (SectionName::E, 1),
            WeylLabel::BC => (SectionName::J, -1),
            WeylLabel::BB => (SectionName::D, 1),
            WeylLabel::DGammaC => (SectionName::C, -1),
            WeylLabel::DGammaB => (SectionName::G, 1),
            WeylLabel::BetaC => (SectionName::Q, 1),
            WeylLabel::BetaB => (SectionName::B, 1),
            WeylLabel::BetaDGamma => (SectionName::L, 1),
        }
    }
}

impl fmt::Display for SectionName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn letter(s: Symbol, j: u8, der: u32) -> FieldExpr {
    FieldExpr::letter(s, j, der)
}

fn check_rank(space: &FockSpace) -> Result<()> {
    if space.rank() == 2 {
        Ok(())
    } else {
        Err(Error::WrongRank(space.rank()))
    }
}

pub fn section(space: &FockSpace, name: SectionName) -> Result<FieldExpr> {
    use Symbol::*;
    check_rank(space)?;
    let w = |a: FieldExpr, b: FieldExpr| space.wick(&a, &b);
    let sum = |f: &dyn Fn(u8) -> FieldExpr| f(1) + f(2);
    Ok(match name {
        SectionName::Q => sum(&|j| w(letter(Beta, j, 0), letter(C, j, 0))),
        SectionName::L => sum(&|j| w(letter(Beta, j, 0), letter(Gamma, j, 1)) - w(letter(B, j, 0), letter(C, j, 1))),
        SectionName::J => -sum(&|j| w(letter(B, j, 0), letter(C, j, 0))),
        SectionName::G => sum(&|j| w(letter(B, j, 0), letter(Gamma, j, 1))),
        SectionName::B => w(letter(Beta, 1, 0), letter(B, 2, 0)) - w(letter(Beta, 2, 0), letter(B, 1, 0)),
        SectionName::D => w(letter(B, 1, 0), letter(B, 2, 0)),
        SectionName::C => w(letter(Gamma, 1, 1), letter(C, 2, 0)) - w(letter(Gamma, 2, 1), letter(C, 1, 0)),
        SectionName::E => w(letter(C, 1, 0), letter(C, 2, 0)),
    })
}

/// `L' = L − ½∂J`, the conformal vector of central charge 6.
pub fn shifted_virasoro(space: &FockSpace) -> Result<FieldExpr> {
    let l = section(space, SectionName::L)?;
    let j = section(space, SectionName::J)?;
    Ok(l - j.translation().scale(&ratio(1, 2)))
}

/// The sections by name, plus `L'` for the shifted conformal vector.
pub fn named_field(space: &FockSpace, name: &str) -> Option<FieldExpr> {
    if name == "L'" {
        return shifted_virasoro(space).ok();
    }
    SectionName::from_name(name).and_then(|n| section(space, n).ok())
}

/// Parses field text in which the section names and `L'` may appear.
pub fn parse_section_field(space: &FockSpace, src: &str) -> Result<FieldExpr> {
    let resolve = |name: &str| named_field(space, name);
    parse_field(space, src, Some(&resolve))
}

/// `G∘₀E = C` and `Q∘₀D = B`.
pub fn verify_descent_relations(space: &FockSpace) -> Result<Vec<Check>> {
    let s = |n| section(space, n);
    let mut out = Vec::new();
    for (x, y, z) in [
        (SectionName::G, SectionName::E, SectionName::C),
        (SectionName::Q, SectionName::D, SectionName::B),
    ] {
        let lhs = space.circle(&s(x)?, 0, &s(y)?);
        out.push(Check::equality(format!("{x}∘0{y} = {z}"), &lhs, &s(z)?));
    }
    Ok(out)
}

/// Letter counts `(n, s)` = (number of `β` and `b`, number of `β`).
fn filtration_key(m: &SuperMonomial) -> (u32, u32) {
    let mut beta = 0;
    let mut b = 0;
    for v in m.vars() {
        match v.symbol {
            Symbol::Beta => beta += 1,
            Symbol::B => b += 1,
            _ => {}
        }
    }
    (beta + b, beta)
}

/// The image in the second associated graded: the component of highest
/// `(n, s)` filtration degree, read as an element of `R`.
pub fn gr2_symbol(a: &FieldExpr) -> PolyExpr {
    let p = a.as_poly();
    let Some(top) = p.terms().map(|(m, _)| filtration_key(m)).max() else {
        return PolyExpr::zero();
    };
    p.filter(|m| filtration_key(m) == top)
}

/// `α(∂^k A_xy)`: the `k`-th derivative of the matching section, signed so
/// that its symbol is `∂^k A_xy`.
pub fn lift_generator(space: &FockSpace, g: &WeylGen) -> Result<FieldExpr> {
    let (name, sign) = SectionName::for_label(g.label);
    Ok(section(space, name)?.translation_n(g.der).scale(&Scalar::from_integer(sign.into())))
}

/// `α(s) = :α(s₁)α(s₂)⋯α(s_k):`.
pub fn basis_element(space: &FockSpace, s: &StandardWord) -> Result<FieldExpr> {
    let factors = s
        .gens()
        .iter()
        .map(|g| lift_generator(space, g))
        .collect::<Result<Vec<_>>>()?;
    Ok(space.wick_word(&factors))
}

/// [`basis_element`] for an unchecked word.
pub fn basis_element_of(space: &FockSpace, word: &[WeylGen]) -> Result<FieldExpr> {
    if !is_standard(word) {
        return Err(Error::NotStandard(format_word(word)));
    }
    basis_element(space, &StandardWord::new(word.to_vec())?)
}

/// The lifted standard words of one weight, reduced to echelon form.
pub struct WeightBasis {
    pub weight: i64,
    pub words: Vec<StandardWord>,
    pub fields: Vec<FieldExpr>,
    echelon: Echelon<SuperMonomial>,
    /// Indices of words whose lift depends on earlier ones.
    pub dependent: Vec<usize>,
}

impl WeightBasis {
    pub fn build(space: &FockSpace, weight: i64) -> Result<Self> {
        let words = enumerate_standard(weight);
        let mut fields = Vec::with_capacity(words.len());
        let mut echelon = Echelon::new();
        let mut dependent = Vec::new();
        for (i, s) in words.iter().enumerate() {
            let f = basis_element(space, s)?;
            if let Insertion::Dependent(_) = echelon.insert(f.coordinates().clone()) {
                dependent.push(i);
            }
            fields.push(f);
        }
        Ok(WeightBasis {
            weight,
            words,
            fields,
            echelon,
            dependent,
        })
    }

    pub fn is_independent(&self) -> bool {
        self.dependent.is_empty()
    }

    /// Coordinates of `f` in the lifted words, if it lies in their span.
    pub fn solve(&self, f: &FieldExpr) -> Option<BTreeMap<StandardWord, Scalar>> {
        let coords = self.echelon.solve(f.coordinates())?;
        Some(
            coords
                .into_iter()
                .map(|(i, c)| (self.words[i].clone(), c))
                .collect(),
        )
    }
}

/// Per-weight cache of [`WeightBasis`].
pub struct BasisCache<'a> {
    space: &'a FockSpace,
    bases: Mutex<HashMap<i64, Arc<WeightBasis>>>,
}

impl<'a> BasisCache<'a> {
    pub fn new(space: &'a FockSpace) -> Self {
        BasisCache {
            space,
            bases: Mutex::new(HashMap::new()),
        }
    }

    pub fn get(&self, weight: i64) -> Result<Arc<WeightBasis>> {
        if let Some(hit) = self.bases.lock().expect("basis cache poisoned").get(&weight) {
            return Ok(hit.clone());
        }
        let basis = Arc::new(WeightBasis::build(self.space, weight)?);
        self.bases
            .lock()
            .expect("basis cache poisoned")
            .insert(weight, basis.clone());
        Ok(basis)
    }
}

/// One ordered pair of sections and its full λ-bracket.
#[derive(Debug, Clone)]
pub struct OpeEntry {
    pub left: SectionName,
    pub right: SectionName,
    pub bracket: LambdaPolynomial,
    /// For each nonzero `left∘_n right`, its coordinates in lifted standard words.
    pub certificate: BTreeMap<u32, BTreeMap<StandardWord, Scalar>>,
}

#[derive(Debug, Clone)]
pub struct OpeTable {
    pub entries: Vec<OpeEntry>,
}

impl OpeTable {
    pub fn get(&self, left: SectionName, right: SectionName) -> Option<&OpeEntry> {
        self.entries.iter().find(|e| e.left == left && e.right == right)
    }
}

/// Expresses `a∘_n b` in lifted standard words of its weight, or reports
/// the product that escapes.
pub fn certify_product(
    cache: &BasisCache<'_>,
    left: SectionName,
    n: u32,
    right: SectionName,
    value: &FieldExpr,
) -> Result<BTreeMap<StandardWord, Scalar>> {
    if value.is_zero() {
        return Ok(BTreeMap::new());
    }
    let describe = || format!("{left}∘{n}{right} = {value}");
    let weight = left.weight() + right.weight() - n as i64 - 1;
    if weight < 0 || value.weight() != Ok(weight) {
        return Err(Error::ClosureFailure(describe()));
    }
    cache
        .get(weight)?
        .solve(value)
        .ok_or_else(|| Error::ClosureFailure(describe()))
}

/// All λ-brackets between the eight sections, each nonzero coefficient
/// certified to lie in the span of normally ordered section words.
pub fn n4_ope_table(space: &FockSpace) -> Result<OpeTable> {
    let cache = BasisCache::new(space);
    n4_ope_table_with(space, &cache, |a, b| Ok(space.lambda_bracket(a, b)))
}

/// [`n4_ope_table`] with a caller-supplied bracket (for example a cached one).
pub fn n4_ope_table_with(
    space: &FockSpace,
    cache: &BasisCache<'_>,
    mut bracket: impl FnMut(&FieldExpr, &FieldExpr) -> Result<LambdaPolynomial>,
) -> Result<OpeTable> {
    let fields = SectionName::ALL
        .iter()
        .map(|&n| Ok((n, section(space, n)?)))
        .collect::<Result<Vec<_>>>()?;
    let mut entries = Vec::new();
    for (a, fa) in &fields {
        for (b, fb) in &fields {
            let br = bracket(fa, fb)?;
            let mut certificate = BTreeMap::new();
            for (n, value) in br.entries() {
                certificate.insert(n, certify_product(cache, *a, n, *b, value)?);
            }
            entries.push(OpeEntry {
                left: *a,
                right: *b,
                bracket: br,
                certificate,
            });
        }
    }
    Ok(OpeTable { entries })
}

/// Independence and symbol checks for the lifted standard words of weight `w`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasisReport {
    pub weight: i64,
    pub words: Vec<String>,
    pub dimension: usize,
    pub independent: bool,
    /// `gr2_symbol(α(s)) = expand(s)` for every word.
    pub symbols_match: bool,
}

pub fn weight_space_report(space: &FockSpace, w: i64) -> Result<BasisReport> {
    check_rank(space)?;
    if w < 0 {
        return Ok(BasisReport {
            weight: w,
            words: Vec::new(),
            dimension: 0,
            independent: true,
            symbols_match: true,
        });
    }
    let basis = WeightBasis::build(space, w)?;
    let symbols_match = basis
        .words
        .iter()
        .zip(&basis.fields)
        .all(|(s, f)| gr2_symbol(f) == s.expand());
    Ok(BasisReport {
        weight: w,
        words: basis.words.iter().map(|s| s.to_string()).collect(),
        dimension: basis.words.len() - basis.dependent.len(),
        independent: basis.is_independent(),
        symbols_match,
    })
}

#[cfg(test)]
mod tests;
