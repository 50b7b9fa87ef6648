use super::*;
use crate::algebra::{int, GenVar};
use crate::graded::weyl;
use crate::invariants::standard_count;

fn space() -> FockSpace {
    FockSpace::new(2)
}

fn s(space: &FockSpace, n: SectionName) -> FieldExpr {
    section(space, n).unwrap()
}

#[test]
fn section_examples() {
    let sp = space();
    assert_eq!(s(&sp, SectionName::E).to_string(), ":c^1 c^2:");
    assert_eq!(s(&sp, SectionName::D).to_string(), ":b^1 b^2:");
    let q = parse_section_field(&sp, ":beta^1 c^1: + :beta^2 c^2:").unwrap();
    assert_eq!(s(&sp, SectionName::Q), q);
    assert_eq!(section(&FockSpace::new(3), SectionName::E), Err(Error::WrongRank(3)));
}

#[test]
fn declared_parity_and_weight() {
    let sp = space();
    let l = sp.virasoro();
    assert_eq!(s(&sp, SectionName::L), l);
    for n in SectionName::ALL {
        let f = s(&sp, n);
        assert_eq!(f.parity().unwrap().is_odd(), n.is_odd(), "{n}");
        assert_eq!(sp.conformal_weight(&f, &l), Ok(int(n.weight())), "{n}");
    }
}

#[test]
fn descent_relations() {
    let sp = space();
    let checks = verify_descent_relations(&sp).unwrap();
    assert_eq!(checks.len(), 2);
    assert!(checks.iter().all(|c| c.passed()), "{checks:?}");
    // regression: Q∘₀E vanishes
    assert!(sp.circle(&s(&sp, SectionName::Q), 0, &s(&sp, SectionName::E)).is_zero());
}

#[test]
fn shifted_virasoro_has_central_charge_six() {
    let sp = space();
    let l = shifted_virasoro(&sp).unwrap();
    assert_eq!(sp.circle(&l, 3, &l), FieldExpr::scalar(int(3)));
    assert!(sp.circle(&l, 2, &l).is_zero());
    assert_eq!(sp.circle(&l, 1, &l), l.scale(&int(2)));
    assert_eq!(sp.circle(&l, 0, &l), l.translation());
    assert_eq!(parse_section_field(&sp, "L'").unwrap(), l);
}

#[test]
fn ope_examples() {
    let sp = space();
    let e = s(&sp, SectionName::E);
    assert_eq!(sp.circle(&s(&sp, SectionName::J), 0, &e), e.scale(&int(2)));
    assert!(sp.lambda_bracket(&e, &e).is_empty());
    let l = shifted_virasoro(&sp).unwrap();
    for n in [SectionName::Q, SectionName::G] {
        assert_eq!(sp.conformal_weight(&s(&sp, n), &l), Ok(ratio(3, 2)), "{n}");
    }
}

#[test]
fn table_closes_and_respects_weights() {
    let sp = space();
    let table = n4_ope_table(&sp).unwrap();
    assert_eq!(table.entries.len(), 64);
    let l = shifted_virasoro(&sp).unwrap();
    let weight = |f: &FieldExpr| sp.conformal_weight(f, &l).unwrap();
    for entry in &table.entries {
        let (wa, wb) = (weight(&s(&sp, entry.left)), weight(&s(&sp, entry.right)));
        for (n, value) in entry.bracket.entries() {
            if value.is_zero() {
                continue;
            }
            let expected = &wa + &wb - int(n as i64 + 1);
            assert_eq!(weight(value), expected, "{}∘{n}{}", entry.left, entry.right);
            let coords = &entry.certificate[&n];
            let rebuilt: FieldExpr = coords
                .iter()
                .map(|(w, c)| basis_element(&sp, w).unwrap().scale(c))
                .sum();
            assert_eq!(&rebuilt, value);
        }
    }
    assert!(table.get(SectionName::E, SectionName::E).unwrap().bracket.is_empty());
}

#[test]
fn symbols_of_sections() {
    let sp = space();
    let expected = [
        (SectionName::D, weyl(WeylLabel::BB, 0)),
        (SectionName::B, weyl(WeylLabel::BetaB, 0)),
        (SectionName::L, weyl(WeylLabel::BetaDGamma, 0)),
        (SectionName::Q, weyl(WeylLabel::BetaC, 0)),
        (SectionName::J, -weyl(WeylLabel::BC, 0)),
        (SectionName::G, weyl(WeylLabel::DGammaB, 0)),
        (SectionName::C, -weyl(WeylLabel::DGammaC, 0)),
        (SectionName::E, weyl(WeylLabel::CC, 0)),
    ];
    for (n, p) in expected {
        assert_eq!(gr2_symbol(&s(&sp, n)), p, "{n}");
    }
    assert_eq!(gr2_symbol(&FieldExpr::one()), PolyExpr::one());
    let b = PolyExpr::product_of(&[GenVar::new(Symbol::Beta, 1, 0), GenVar::new(Symbol::B, 2, 0)])
        - PolyExpr::product_of(&[GenVar::new(Symbol::Beta, 2, 0), GenVar::new(Symbol::B, 1, 0)]);
    assert_eq!(gr2_symbol(&s(&sp, SectionName::B)), b);
}

#[test]
fn symbol_is_multiplicative() {
    let sp = space();
    let mut fields = Vec::new();
    for n in SectionName::ALL {
        for k in 0..2 {
            fields.push(s(&sp, n).translation_n(k));
        }
    }
    let mut checked = 0;
    for a in &fields {
        for b in &fields {
            let rhs = &gr2_symbol(a) * &gr2_symbol(b);
            if rhs.is_zero() {
                continue;
            }
            assert_eq!(gr2_symbol(&sp.wick(a, b)), rhs, "{a} {b}");
            checked += 1;
        }
    }
    assert!(checked > 100);
}

#[test]
fn lifted_generators() {
    let sp = space();
    let w = |t: &str| t.parse::<StandardWord>().unwrap();
    assert_eq!(basis_element(&sp, &w("A[cc]")).unwrap(), s(&sp, SectionName::E));
    assert_eq!(basis_element(&sp, &w("A[bb]^(1)")).unwrap(), s(&sp, SectionName::D).translation());
    assert_eq!(basis_element(&sp, &StandardWord::empty()).unwrap(), FieldExpr::one());
    let bad = [WeylGen::new(WeylLabel::CC, 0), WeylGen::new(WeylLabel::CC, 0)];
    assert!(matches!(basis_element_of(&sp, &bad), Err(Error::NotStandard(_))));
}

#[test]
fn basis_reports() {
    let sp = space();
    let r0 = weight_space_report(&sp, 0).unwrap();
    assert_eq!(r0.words, vec!["1".to_string(), "A[cc]".to_string()]);
    assert!(r0.independent && r0.symbols_match);
    assert_eq!(r0.dimension, 2);
    assert_eq!(weight_space_report(&sp, -1).unwrap().dimension, 0);
    for w in 1..=3 {
        let r = weight_space_report(&sp, w).unwrap();
        assert!(r.independent && r.symbols_match, "{r:?}");
        assert_eq!(r.dimension, standard_count(w));
    }
}
