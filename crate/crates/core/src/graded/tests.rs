use std::collections::BTreeSet;

use super::relations::*;
use super::*;
use crate::algebra::{int, GenVar, Symbol};

fn g(label: WeylLabel, k: u32) -> WeylGen {
    WeylGen::new(label, k)
}

#[test]
fn filtration_examples() {
    assert_eq!(filtration_degrees(&weyl(WeylLabel::BetaB, 0)), Ok((2, 1)));
    assert_eq!(filtration_degrees(&weyl(WeylLabel::CC, 0)), Ok((0, 0)));
    assert_eq!(filtration_degrees(&weyl(WeylLabel::DGammaB, 0)), Ok((1, 0)));
    let mixed = weyl(WeylLabel::CC, 0) + weyl(WeylLabel::BB, 0);
    assert_eq!(filtration_degrees(&mixed), Err(Error::Inhomogeneous));
}

#[test]
fn straighten_examples() {
    let s = Straightener::new();
    assert!(s.straighten(&[g(WeylLabel::BC, 0), g(WeylLabel::BB, 0)]).unwrap().is_empty());
    let out = s.straighten(&[g(WeylLabel::BetaB, 0), g(WeylLabel::BetaDGamma, 0)]).unwrap();
    assert!(!out.is_empty());
    let rebuilt: PolyExpr = out.iter().map(|(w, c)| w.expand().scale(c)).sum();
    assert_eq!(rebuilt, expand_word(&[g(WeylLabel::BetaB, 0), g(WeylLabel::BetaDGamma, 0)]));
    // three-term relation: the straightened combination vanishes
    let words = [
        (int(1), [g(WeylLabel::BetaDGamma, 0), g(WeylLabel::BC, 0)]),
        (int(1), [g(WeylLabel::BetaB, 0), g(WeylLabel::DGammaC, 0)]),
        (int(1), [g(WeylLabel::BetaC, 0), g(WeylLabel::DGammaB, 0)]),
    ];
    let mut total = std::collections::BTreeMap::new();
    for (c, w) in &words {
        for (k, v) in s.straighten(w).unwrap() {
            *total.entry(k).or_insert_with(|| int(0)) += c * v;
        }
    }
    total.retain(|_, v: &mut crate::algebra::Scalar| *v != int(0));
    assert!(total.is_empty());
    assert_eq!(format_combination(&total), "0");
}

#[test]
fn straighten_is_idempotent() {
    let s = Straightener::new();
    for w in 0..4 {
        for word in enumerate_standard(w) {
            let out = s.straighten(word.gens()).unwrap();
            assert_eq!(out.len(), 1);
            assert_eq!(out.get(&word), Some(&int(1)));
        }
    }
}

#[test]
fn vanishing_and_two_term_relations() {
    for (xy, z) in vanishing_pairs() {
        assert!(expand_word(&[g(xy, 0), g(WeylLabel::from_letters(z, z).unwrap(), 0)]).is_zero());
    }
    for (xy, z) in two_term_pairs() {
        let alpha = two_term_alpha(xy, z).unwrap();
        assert_ne!(alpha, int(0));
    }
    assert!(form_polynomial(&three_term_form()).is_zero());
}

#[test]
fn derived_relations_rewrite_their_leading_word() {
    let rels = derived_relations(3).unwrap();
    let mut leading = BTreeSet::new();
    for r in &rels {
        let check = r.check();
        assert!(check.passed(), "{}: {check:?}", r.describe());
        if !check.vacuous {
            leading.insert(r.expected_leading);
        }
    }
    // every nonstandard nonzero pair with close derivatives is one of them
    for pair in nonstandard_pairs(3) {
        assert!(leading.contains(&pair), "{} has no rewriting relation", format_word(&pair));
    }
}

#[test]
fn nonstandard_words_straighten_to_smaller_ones() {
    let s = Straightener::new();
    for pair in nonstandard_pairs(2) {
        let out = s.straighten(&pair).unwrap();
        for w in out.keys() {
            assert!(w.gens() < &pair[..], "{w} vs {}", format_word(&pair));
        }
    }
}

#[test]
fn leading_monomials_are_injective_and_multiplicative() {
    let mut seen = std::collections::BTreeMap::new();
    for w in 0..=3 {
        for word in enumerate_standard(w) {
            let lm = leading_monomial(&word.expand()).unwrap();
            if let Some(prev) = seen.insert(lm.clone(), word.clone()) {
                panic!("{prev} and {word} share leading monomial {lm}");
            }
        }
    }
    let gens = generators_up_to(3);
    for a in &gens {
        for b in &gens {
            let (la, lb) = (
                leading_monomial(&a.expand()).unwrap(),
                leading_monomial(&b.expand()).unwrap(),
            );
            if let Some((_, prod)) = la.mul(&lb) {
                let lp = leading_monomial(&expand_word(&[*a, *b])).unwrap();
                assert_eq!(lp, prod, "{a} {b}");
            }
        }
    }
    assert_eq!(
        leading_monomial(&weyl(WeylLabel::CC, 0)).unwrap().to_string(),
        "c^1 c^2"
    );
    assert_eq!(leading_monomial(&PolyExpr::zero()), Err(Error::ZeroInput));
}

#[test]
fn current_algebra_compatibility() {
    let samples: Vec<PolyExpr> = vec![
        "beta^1_2 c^2_1".parse().unwrap(),
        "gamma^1_3 b^2 + beta^2_1 gamma^2_2".parse().unwrap(),
        "c^1_2 c^2_1 b^1_1".parse().unwrap(),
        PolyExpr::var(GenVar::new(Symbol::Gamma, 2, 4)),
    ];
    for f in &samples {
        for b in Sl2::ALL {
            for n in 0..4u32 {
                let x = LieGen::new(b, n);
                let lhs = act(x, &f.apply_partial()) - act(x, f).apply_partial();
                let rhs = if n == 0 {
                    PolyExpr::zero()
                } else {
                    act(LieGen::new(b, n - 1), f).scale(&int(n as i64))
                };
                assert_eq!(lhs, rhs, "{x} on {f}");
            }
        }
    }
}

