use super::*;
use crate::algebra::{binomial, inv_factorial, ratio};

fn space() -> FockSpace {
    FockSpace::new(2)
}

fn f(s: &FockSpace, text: &str) -> FieldExpr {
    parse_field(s, text, None).unwrap()
}

fn koszul_sign(a: &FieldExpr, b: &FieldExpr) -> Scalar {
    match (a.parity(), b.parity()) {
        (Some(Parity::Odd), Some(Parity::Odd)) => -Scalar::one(),
        _ => Scalar::one(),
    }
}

/// A spread of homogeneous fields of weight ≤ 3.
fn samples(s: &FockSpace) -> Vec<FieldExpr> {
    [
        "beta^1",
        "gamma^2",
        "b^1",
        "c^2",
        "d(gamma^1)",
        "d(c^1)",
        ":beta^1 c^2:",
        ":b^1 d(gamma^2):",
        ":gamma^1 gamma^2:",
        ":b^1 c^1:",
        ":beta^2 d(c^2):",
        ":c^1 c^2:",
        ":beta^1 gamma^1:",
        ":b^2 d(c^1):",
    ]
    .iter()
    .map(|t| f(s, t))
    .collect()
}

#[test]
fn base_contractions() {
    let s = space();
    let gens = s.generators();
    for (xs, xi, x) in &gens {
        for (ys, yi, y) in &gens {
            let br = s.lambda_bracket(x, y);
            let expected = match (xs, ys) {
                _ if xi != yi => None,
                (Symbol::Beta, Symbol::Gamma) => Some(int(1)),
                (Symbol::Gamma, Symbol::Beta) => Some(int(-1)),
                (Symbol::B, Symbol::C) | (Symbol::C, Symbol::B) => Some(int(1)),
                _ => None,
            };
            match expected {
                None => assert!(br.is_empty(), "{x} {y}"),
                Some(c) => {
                    assert_eq!(br.order(), 1);
                    assert_eq!(br.get(0), FieldExpr::scalar(c));
                }
            }
        }
    }
    assert_eq!(s.circle(&f(&s, "beta^1"), 0, &f(&s, "gamma^2")), FieldExpr::zero());
}

#[test]
fn negative_products_are_derivatives() {
    let s = space();
    for (_, _, x) in s.generators() {
        assert_eq!(s.circle(&x, -2, &FieldExpr::one()), x.translation());
        assert_eq!(
            s.circle(&x, -3, &FieldExpr::one()),
            x.translation_n(2).scale(&ratio(1, 2))
        );
    }
    for a in samples(&s) {
        for b in samples(&s) {
            // n! a∘_{−n−1} b = :(∂ⁿa) b:
            for n in 0..3u32 {
                let lhs = s.circle(&a, -(n as i64) - 1, &b);
                let rhs = s.wick(&a.translation_n(n), &b).scale(&inv_factorial(n));
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn vacuum_is_unit() {
    let s = space();
    for a in samples(&s) {
        assert_eq!(s.wick(&FieldExpr::one(), &a), a);
        assert_eq!(s.wick(&a, &FieldExpr::one()), a);
    }
    let b1 = f(&s, "b^1");
    assert!(s.wick(&b1, &b1).is_zero());
}

#[test]
fn words_are_right_nested() {
    let s = space();
    let letters = ["beta^1", "d(gamma^1)", "b^2", "c^1", "d(c^2)"];
    for x in letters {
        for y in letters {
            for z in letters {
                let (a, b, c) = (f(&s, x), f(&s, y), f(&s, z));
                let nested = s.wick(&a, &s.wick(&b, &c));
                let word = f(&s, &format!(":{x} {y} {z}:"));
                assert_eq!(nested, word);
                let product = &(a.as_poly() * b.as_poly()) * c.as_poly();
                assert_eq!(nested.as_poly(), &product);
            }
        }
    }
}

#[test]
fn quasi_commutativity() {
    let s = space();
    for a in samples(&s) {
        for b in samples(&s) {
            let lhs = s.wick(&a, &b) - s.wick(&b, &a).scale(&koszul_sign(&a, &b));
            let mut rhs = FieldExpr::zero();
            for (j, value) in s.lambda_bracket(&a, &b).entries() {
                let c = if j % 2 == 0 { int(1) } else { int(-1) } * inv_factorial(j + 1);
                rhs += &value.translation_n(j + 1).scale(&c);
            }
            assert_eq!(lhs, rhs, "{a} {b}");
        }
    }
}

#[test]
fn skew_symmetry() {
    let s = space();
    for a in samples(&s) {
        for b in samples(&s) {
            let ba = s.lambda_bracket(&b, &a);
            let top = ba.order().max(s.commute_order(&a, &b));
            for n in 0..=top {
                assert_eq!(ba.get(n), skew_prediction(&s, &a, n, &b), "{b} ∘{n} {a}");
            }
        }
    }
    // the odd-odd bracket of the fermions is symmetric
    assert_eq!(s.circle(&f(&s, "c^1"), 0, &f(&s, "b^1")), FieldExpr::one());
}

#[test]
fn translation_rules() {
    let s = space();
    for a in samples(&s) {
        for b in samples(&s) {
            let da = a.translation();
            for n in 0..5i64 {
                assert_eq!(s.circle(&da, n, &b), s.circle(&a, n - 1, &b).scale(&int(-n)));
                let lhs = s.circle(&a, n, &b).translation();
                let rhs = s.circle(&da, n, &b) + s.circle(&a, n, &b.translation());
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn bracket_matches_circle() {
    let s = space();
    for a in samples(&s) {
        for b in samples(&s) {
            let br = s.lambda_bracket(&a, &b);
            for n in 0..8u32 {
                assert_eq!(br.get(n), s.circle(&a, n as i64, &b));
            }
        }
    }
}

#[test]
fn jacobi_identity() {
    let s = space();
    let gens: Vec<FieldExpr> = s.generators().into_iter().map(|(_, _, g)| g).collect();
    let words = [":beta^1 c^2:", ":b^1 d(gamma^1):", ":b^2 c^2:", ":gamma^1 b^2:"];
    let mut fields = gens.clone();
    fields.extend(words.iter().map(|w| f(&s, w)));
    for a in &fields {
        for b in &fields {
            for c in &fields {
                for m in 0..3i64 {
                    for n in 0..3i64 {
                        let lhs = s.circle(a, m, &s.circle(b, n, c))
                            - s.circle(b, n, &s.circle(a, m, c)).scale(&koszul_sign(a, b));
                        let mut rhs = FieldExpr::zero();
                        for j in 0..=m {
                            let ab = s.circle(a, j, b);
                            let coeff = Scalar::from_integer(binomial(m as u32, j as u32));
                            rhs += &s.circle(&ab, m + n - j, c).scale(&coeff);
                        }
                        assert_eq!(lhs, rhs, "{a} {b} {c} m={m} n={n}");
                    }
                }
            }
        }
    }
}

#[test]
fn virasoro_vector() {
    let s = space();
    let l = s.virasoro();
    assert_eq!(s.circle(&l, 0, &l), l.translation());
    assert_eq!(s.circle(&l, 1, &l), l.scale(&int(2)));
    assert!(s.circle(&l, 2, &l).is_zero());
    // βγ and bc contributions to the quartic pole cancel
    assert!(s.circle(&l, 3, &l).is_zero());
    assert_eq!(s.commute_order(&l, &l), 2);
    for a in samples(&s) {
        assert_eq!(s.circle(&l, 0, &a), a.translation());
        let w = a.weight().unwrap();
        assert_eq!(s.conformal_weight(&a, &l), Ok(int(w)));
    }
    let gamma = s.generator(Symbol::Gamma, 1).unwrap();
    assert_eq!(s.conformal_weight(&gamma, &l), Ok(int(0)));
    assert_eq!(s.conformal_weight(&f(&s, "beta^1"), &l), Ok(int(1)));
    assert_eq!(s.conformal_weight(&f(&s, "c^1"), &l), Ok(int(0)));
    assert_eq!(s.conformal_weight(&f(&s, "d(gamma^1)"), &l), Ok(int(1)));
    let mixed = f(&s, "beta^1 + c^1");
    assert_eq!(s.conformal_weight(&mixed, &l), Err(Error::NotEigenvector));
    assert_eq!(s.conformal_weight(&FieldExpr::zero(), &l), Err(Error::ZeroInput));
}

#[test]
fn commute_orders() {
    let s = space();
    assert_eq!(s.commute_order(&f(&s, "gamma^1"), &f(&s, "gamma^2")), 0);
    assert_eq!(s.commute_order(&f(&s, "beta^1"), &f(&s, "gamma^1")), 1);
    assert!(s.lambda_bracket(&f(&s, "gamma^1"), &f(&s, "gamma^2")).is_empty());
}

#[test]
fn generator_bounds() {
    let s = space();
    assert_eq!(
        s.generator(Symbol::B, 3),
        Err(Error::IndexOutOfRange { index: 3, rank: 2 })
    );
    assert_eq!(s.generator(Symbol::C, 2).unwrap().parity(), Some(Parity::Odd));
    assert!(parse_field(&s, "b^0", None).is_err());
}

#[test]
fn translation_of_words() {
    let s = space();
    assert!(FieldExpr::one().translation().is_zero());
    assert_eq!(f(&s, "gamma^1").translation(), FieldExpr::letter(Symbol::Gamma, 1, 1));
    assert_eq!(
        f(&s, ":b^1 c^1:").translation(),
        f(&s, ":d(b^1) c^1: + :b^1 d(c^1):")
    );
}

#[test]
fn text_round_trip() {
    let s = space();
    for a in samples(&s) {
        let text = a.to_string();
        assert_eq!(f(&s, &text), a, "{text}");
    }
    let x = f(&s, "3/2*:b^1 d(gamma^1): - d^2(c^2) + 1");
    assert_eq!(x.to_string(), "1 + 3/2*:d(gamma^1) b^1: - d^2(c^2)");
    assert_eq!(f(&s, &x.to_string()), x);
    let resolver = |name: &str| (name == "X").then(|| f(&s, ":c^1 c^2:"));
    let y = parse_field(&s, "2*X + d(X)", Some(&resolver)).unwrap();
    assert_eq!(y, f(&s, "2*:c^1 c^2: + d(:c^1 c^2:)"));
    assert!(parse_field(&s, "Y", Some(&resolver)).is_err());
    assert!(parse_field(&s, ":b^1", None).is_err());
}
