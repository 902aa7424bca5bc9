use num_rational::BigRational;
use proptest::prelude::*;
use symfun::{partitions, Coeff, CoeffMatrix, Poly, Var};

fn poly(terms: &[(i64, u32, u32)]) -> Poly {
    terms.iter().fold(Poly::zero(), |acc, &(c, a, b)| {
        acc.add(&Poly::term(BigRational::from_integer(c.into()), a, b))
    })
}

fn term_list() -> impl Strategy<Value = Vec<(i64, u32, u32)>> {
    prop::collection::vec((-3i64..=3, 0u32..3, 0u32..3), 0..4)
}

fn coeff() -> impl Strategy<Value = Coeff> {
    (term_list(), term_list()).prop_filter_map("zero denominator", |(n, d)| {
        let d = poly(&d);
        (!d.is_zero()).then(|| Coeff::new(poly(&n), d).unwrap())
    })
}

#[test]
fn spec_arithmetic() {
    let t = Coeff::t();
    assert_eq!((&t + &Coeff::one()).to_string(), "t + 1");
    let one_minus_t2 = Coeff::from_poly(poly(&[(1, 0, 0), (-1, 0, 2)]));
    let one_minus_t = Coeff::from_poly(poly(&[(1, 0, 0), (-1, 0, 1)]));
    assert_eq!(one_minus_t2.checked_div(&one_minus_t).unwrap().to_string(), "t + 1");
    let q_minus_t = &Coeff::q() - &t;
    assert!((&q_minus_t * &Coeff::zero()).is_zero());
    assert!(Coeff::one().checked_div(&Coeff::zero()).is_err());
}

#[test]
fn spec_substitution() {
    let t = Coeff::t();
    let x = &t + &Coeff::from_int(2);
    assert_eq!(x.substitute(&[(Var::T, Coeff::one())]).unwrap(), Coeff::from_int(3));
    let pole = Coeff::one().checked_div(&(&Coeff::one() - &t)).unwrap();
    assert!(pole.substitute(&[(Var::T, Coeff::one())]).is_err());
    let r = (&Coeff::one() - &Coeff::q())
        .checked_div(&(&Coeff::one() - &t))
        .unwrap();
    assert_eq!(r.substitute(&[(Var::Q, t.clone())]).unwrap(), Coeff::one());
}

#[test]
fn inverse_kostka_matrix_multiplies_back() {
    // rows/cols (3), (2,1), (1,1,1); column mu = m-expansion of s_mu
    let keys = partitions(3);
    let k = CoeffMatrix::from_int_rows(keys.clone(), &[vec![1, 0, 0], vec![1, 1, 0], vec![1, 2, 1]]);
    let inv = k.inverse().unwrap();
    assert!(k.mul(&inv).unwrap().is_identity());
    assert!(inv.mul(&k).unwrap().is_identity());
    assert!(inv.is_unitriangular());
    let expected =
        CoeffMatrix::from_int_rows(keys, &[vec![1, 0, 0], vec![-1, 1, 0], vec![1, -2, 1]]);
    assert_eq!(inv, expected);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in coeff(), b in coeff(), c in coeff()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&(&a - &a), &Coeff::zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), Coeff::one());
        }
    }

    #[test]
    fn canonical_denominator(a in coeff(), b in coeff()) {
        let s = &a + &b;
        prop_assert!(s.denominator().leading_coeff().unwrap() == BigRational::from_integer(1.into()));
        prop_assert_eq!(s.numerator().gcd(s.denominator()), Poly::one());
    }

    #[test]
    fn substitution_is_a_homomorphism(a in coeff(), b in coeff(), x in -3i64..=3) {
        let at = [(Var::T, Coeff::from_int(x))];
        if let (Ok(sa), Ok(sb)) = (a.substitute(&at), b.substitute(&at)) {
            if let Ok(sp) = (&a * &b).substitute(&at) {
                prop_assert_eq!(sp, &sa * &sb);
            }
        }
    }
}

fn nonzero_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-4i64..=4, 0u32..4, 0u32..4), 1..5)
        .prop_map(|t| poly(&t))
        .prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn gcd_contains_planted_factor(a in nonzero_poly(), b in nonzero_poly(), g in nonzero_poly()) {
        let x = a.mul(&g);
        let y = b.mul(&g);
        let d = x.gcd(&y);
        prop_assert!(x.exact_div(&d).is_some());
        prop_assert!(y.exact_div(&d).is_some());
        prop_assert!(d.exact_div(&g).is_some());
        // cofactors are coprime
        let cx = x.exact_div(&d).unwrap();
        let cy = y.exact_div(&d).unwrap();
        prop_assert_eq!(cx.gcd(&cy), Poly::one());
    }
}
