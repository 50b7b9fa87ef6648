//! The quadratic relations among the invariant generators and their
//! derivatives, used to cross-check the straightening law.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::standard::{expand_word, format_word, is_standard};
use super::weyl::{Letter, WeylGen, WeylLabel};
use crate::algebra::{binomial, int, PolyExpr, Scalar};
use crate::error::{Error, Result};

/// `Σ coeff · s t` over ordered pairs of generators.
pub type QuadraticForm = Vec<(Scalar, WeylLabel, WeylLabel)>;

fn label(x: Letter, y: Letter) -> WeylLabel {
    WeylLabel::from_letters(x, y).expect("quadratic with a known label")
}

/// `(xy, z)` with `z ∈ {b, c}` one of the letters of `xy`: `A_xy A_zz = 0`.
pub fn vanishing_pairs() -> Vec<(WeylLabel, Letter)> {
    let mut out = Vec::new();
    for z in [Letter::B, Letter::C] {
        for l in WeylLabel::ALL {
            let (x, y) = l.letters();
            if x == z || y == z {
                out.push((l, z));
            }
        }
    }
    out
}

/// `(xy, z)` with `z ∈ {b, c}` not a letter of `xy`: `A_xy A_zz + α A_xz A_yz = 0`.
pub fn two_term_pairs() -> Vec<(WeylLabel, Letter)> {
    let mut out = Vec::new();
    for z in [Letter::B, Letter::C] {
        for l in WeylLabel::ALL {
            let (x, y) = l.letters();
            if x != z && y != z {
                out.push((l, z));
            }
        }
    }
    out
}

fn zz(z: Letter) -> WeylLabel {
    label(z, z)
}

/// The two sides of the two-term relation, `(A_xy A_zz, A_xz A_yz)`.
pub fn two_term_words(xy: WeylLabel, z: Letter) -> ([WeylGen; 2], [WeylGen; 2]) {
    let (x, y) = xy.letters();
    (
        [WeylGen::new(xy, 0), WeylGen::new(zz(z), 0)],
        [WeylGen::new(label(x, z), 0), WeylGen::new(label(y, z), 0)],
    )
}

/// The constant `α` of the two-term relation, found by expanding both
/// products and solving the one-dimensional system.
pub fn two_term_alpha(xy: WeylLabel, z: Letter) -> Result<Scalar> {
    let (lhs, rhs) = two_term_words(xy, z);
    let p = expand_word(&lhs);
    let q = expand_word(&rhs);
    let fail = || Error::InconsistentSystem(format!("{} + α {}", format_word(&lhs), format_word(&rhs)));
    let (m, qc) = q.terms().next().ok_or_else(fail)?;
    let alpha = -p.coefficient(m) / qc;
    if alpha.is_zero() || &p + &q.scale(&alpha) != PolyExpr::zero() {
        return Err(fail());
    }
    Ok(alpha)
}

/// `A_{β∂γ}A_{bc} + A_{βb}A_{∂γc} + A_{βc}A_{∂γb}`, with the sign
/// conventions of [`WeylLabel::base`].
pub fn three_term_form() -> QuadraticForm {
    vec![
        (int(1), WeylLabel::BetaDGamma, WeylLabel::BC),
        (int(1), WeylLabel::BetaB, WeylLabel::DGammaC),
        (int(1), WeylLabel::BetaC, WeylLabel::DGammaB),
    ]
}

pub fn form_polynomial(form: &QuadraticForm) -> PolyExpr {
    form.iter()
        .map(|(c, a, b)| expand_word(&[WeylGen::new(*a, 0), WeylGen::new(*b, 0)]).scale(c))
        .sum()
}

/// Orders a pair by `≺`, with the Koszul sign when both are odd.
pub fn sort_pair(a: WeylGen, b: WeylGen) -> (i64, [WeylGen; 2]) {
    if a <= b {
        (1, [a, b])
    } else {
        (if a.is_odd() && b.is_odd() { -1 } else { 1 }, [b, a])
    }
}

/// `∂^n` of a quadratic form by Leibniz, as a combination of `≺`-sorted words.
pub fn differentiate_form(form: &QuadraticForm, n: u32) -> BTreeMap<[WeylGen; 2], Scalar> {
    let mut out: BTreeMap<[WeylGen; 2], Scalar> = BTreeMap::new();
    for (c, a, b) in form {
        for i in 0..=n {
            let (sign, word) = sort_pair(WeylGen::new(*a, i), WeylGen::new(*b, n - i));
            let coeff = c * Scalar::from_integer(binomial(n, i)) * int(sign);
            let entry = out.entry(word).or_insert_with(Scalar::zero);
            *entry += coeff;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// A derived relation `∂^n(form) = 0` read as "largest word = standard smaller words".
#[derive(Debug, Clone)]
pub struct DerivedRelation {
    pub name: String,
    pub order: u32,
    pub terms: BTreeMap<[WeylGen; 2], Scalar>,
    /// The word the relation is meant to rewrite.
    pub expected_leading: [WeylGen; 2],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedCheck {
    /// The relation expands to zero in `R`.
    pub holds: bool,
    /// Largest word with nonzero expansion, if any.
    pub leading: Option<[WeylGen; 2]>,
    pub leading_matches: bool,
    pub leading_standard: bool,
    /// Every other nonzero word is standard.
    pub rest_standard: bool,
    /// The expected leading word itself expands to zero.
    pub vacuous: bool,
}

impl DerivedCheck {
    pub fn passed(&self) -> bool {
        self.holds && (self.vacuous || (self.leading_matches && !self.leading_standard && self.rest_standard))
    }
}

impl DerivedRelation {
    pub fn polynomial(&self) -> PolyExpr {
        self.terms
            .iter()
            .map(|(w, c)| expand_word(w).scale(c))
            .sum()
    }

    pub fn check(&self) -> DerivedCheck {
        let holds = self.polynomial().is_zero();
        let nonzero: Vec<&[WeylGen; 2]> = self
            .terms
            .keys()
            .filter(|w| !expand_word(&w[..]).is_zero())
            .collect();
        let leading = nonzero.iter().max().map(|w| **w);
        let vacuous = expand_word(&self.expected_leading).is_zero();
        let leading_matches = leading == Some(self.expected_leading);
        let leading_standard = leading.is_some_and(|w| is_standard(&w));
        let rest_standard = nonzero
            .iter()
            .filter(|w| Some(***w) != leading)
            .all(|w| is_standard(&w[..]));
        DerivedCheck {
            holds,
            leading,
            leading_matches,
            leading_standard,
            rest_standard,
            vacuous,
        }
    }

    pub fn describe(&self) -> String {
        format!("{} (∂^{}), leading {}", self.name, self.order, format_word(&self.expected_leading))
    }
}

fn gen(l: WeylLabel, k: u32) -> WeylGen {
    WeylGen::new(l, k)
}

fn sorted(a: WeylGen, b: WeylGen) -> [WeylGen; 2] {
    sort_pair(a, b).1
}

/// Every instance of the derived relations with `∂^{2k}` and `∂^{2k+1}`,
/// `k ≤ max_k`, together with the word each one rewrites.
pub fn derived_relations(max_k: u32) -> Result<Vec<DerivedRelation>> {
    use Letter::*;
    let mut out = Vec::new();
    for k in 0..=max_k {
        for (xy, z) in vanishing_pairs() {
            let form = vec![(Scalar::one(), xy, zz(z))];
            let even = sorted(gen(xy, k), gen(zz(z), k));
            let odd = match (z, xy) {
                (C, WeylLabel::CC) | (B, WeylLabel::BB) => sorted(gen(xy, k), gen(xy, k + 1)),
                (B, WeylLabel::BC) => sorted(gen(WeylLabel::BB, k), gen(WeylLabel::BC, k + 1)),
                _ => sorted(gen(xy, k), gen(zz(z), k + 1)),
            };
            let name = format!("A[{}] A[{}] = 0", xy.name(), zz(z).name());
            out.push(DerivedRelation {
                name: name.clone(),
                order: 2 * k,
                terms: differentiate_form(&form, 2 * k),
                expected_leading: even,
            });
            out.push(DerivedRelation {
                name,
                order: 2 * k + 1,
                terms: differentiate_form(&form, 2 * k + 1),
                expected_leading: odd,
            });
        }
        for (xy, z) in two_term_pairs() {
            let alpha = two_term_alpha(xy, z)?;
            let (x, y) = xy.letters();
            let xz = label(x, z);
            let yz = label(y, z);
            let form = vec![(Scalar::one(), xy, zz(z)), (alpha, xz, yz)];
            let (even, odd) = match xy {
                WeylLabel::BetaDGamma => (
                    sorted(gen(label(DGamma, z), k), gen(label(Beta, z), k)),
                    sorted(gen(xy, k), gen(zz(z), k + 1)),
                ),
                WeylLabel::CC | WeylLabel::BB => (
                    sorted(gen(WeylLabel::BC, k), gen(WeylLabel::BC, k)),
                    sorted(gen(WeylLabel::BB, k), gen(WeylLabel::CC, k + 1)),
                ),
                // z = b, xy = xc with x ∈ {β, ∂γ}
                _ if z == B => (
                    sorted(gen(WeylLabel::BB, k), gen(xy, k)),
                    sorted(gen(label(x, B), k), gen(WeylLabel::BC, k + 1)),
                ),
                // z = c, xy = xb with x ∈ {β, ∂γ}
                _ => (
                    sorted(gen(WeylLabel::BC, k), gen(label(x, C), k)),
                    sorted(gen(xy, k), gen(WeylLabel::CC, k + 1)),
                ),
            };
            let name = format!(
                "A[{}] A[{}] + α A[{}] A[{}] = 0",
                xy.name(),
                zz(z).name(),
                xz.name(),
                yz.name()
            );
            out.push(DerivedRelation {
                name: name.clone(),
                order: 2 * k,
                terms: differentiate_form(&form, 2 * k),
                expected_leading: even,
            });
            out.push(DerivedRelation {
                name,
                order: 2 * k + 1,
                terms: differentiate_form(&form, 2 * k + 1),
                expected_leading: odd,
            });
        }
        let form = three_term_form();
        let name = "A[betadgamma] A[bc] + A[betab] A[dgammac] + A[betac] A[dgammab] = 0".to_string();
        out.push(DerivedRelation {
            name: name.clone(),
            order: 2 * k,
            terms: differentiate_form(&form, 2 * k),
            expected_leading: sorted(gen(WeylLabel::DGammaB, k), gen(WeylLabel::BetaC, k)),
        });
        out.push(DerivedRelation {
            name,
            order: 2 * k + 1,
            terms: differentiate_form(&form, 2 * k + 1),
            expected_leading: sorted(gen(WeylLabel::BetaDGamma, k), gen(WeylLabel::BC, k + 1)),
        });
    }
    Ok(out)
}

/// Sorted pairs `s ⪯ t` with `t.der ≤ s.der + 2`, `s.der ≤ max_k`, nonzero
/// product, that are not standard.
pub fn nonstandard_pairs(max_k: u32) -> Vec<[WeylGen; 2]> {
    let mut out = Vec::new();
    for k in 0..=max_k {
        for k2 in k..=k + 2 {
            for a in WeylLabel::ALL {
                for b in WeylLabel::ALL {
                    let (s, t) = (gen(a, k), gen(b, k2));
                    if s > t || is_standard(&[s, t]) || expand_word(&[s, t]).is_zero() {
                        continue;
                    }
                    out.push([s, t]);
                }
            }
        }
    }
    out
}
