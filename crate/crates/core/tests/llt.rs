mod common;

use common::*;
use num_traits::Signed;
use symfun::llt::{generalized_kostka, llt_h, spin_table};
use symfun::{core_quotient, partitions, shared_ring, Coeff, Poly, SymElement, Var};

#[test]
fn single_cells_give_schur_functions() {
    let ring = shared_ring();
    for n in 0..=6 {
        for lambda in partitions(n) {
            let s = ring.convert(&SymElement::basis_element("s", lambda.clone()), &b("m")).unwrap();
            assert_eq!(llt_h(&lambda, 1).unwrap(), s, "{lambda}");
            for mu in partitions(n) {
                let d = if mu == lambda { Poly::one() } else { Poly::zero() };
                assert_eq!(generalized_kostka(ring, &lambda, &mu, 1).unwrap(), d);
            }
        }
    }
}

#[test]
fn three_ribbons_on_432() {
    let h = llt_h(&part(&[4, 3, 2]), 3).unwrap();
    let c = h.coeff(&part(&[1, 1, 1]));
    assert!(c.is_polynomial());
    assert_eq!(c.substitute(&at(Var::T, Coeff::one())).unwrap(), int(3));
}

#[test]
fn vanishes_without_empty_core() {
    assert!(llt_h(&part(&[2, 1]), 2).unwrap().is_zero());
    assert!(llt_h(&part(&[3]), 2).unwrap().is_zero());
    assert!(llt_h(&part(&[2]), 0).is_err());
}

#[test]
fn at_t_equal_one_is_product_over_quotient() {
    let ring = shared_ring();
    for k in [2usize, 3] {
        for n in (0..=9).filter(|n| n % k == 0) {
            for lambda in partitions(n) {
                let cq = core_quotient(&lambda, k);
                if !cq.core.is_empty() {
                    continue;
                }
                let h = llt_h(&lambda, k).unwrap().substitute(&at(Var::T, Coeff::one())).unwrap();
                let prod = cq.quotient.iter().fold(
                    SymElement::basis_element("s", symfun::Partition::empty()),
                    |acc, q| ring.mul(&acc, &SymElement::basis_element("s", q.clone())).unwrap(),
                );
                assert_eq!(ring.convert(&h, &b("s")).unwrap(), prod, "{lambda} k={k}");
            }
        }
    }
}

#[test]
fn cospin_starts_at_zero() {
    for k in [2usize, 3] {
        for n in (1..=9).filter(|n| n % k == 0) {
            for lambda in partitions(n) {
                let h = llt_h(&lambda, k).unwrap();
                if h.is_zero() {
                    continue;
                }
                let min = h
                    .terms()
                    .values()
                    .map(|c| {
                        let v = c.numerator().t_int_coeffs().unwrap();
                        v.iter().position(|x| x.is_positive()).unwrap()
                    })
                    .min()
                    .unwrap();
                assert_eq!(min, 0, "{lambda} k={k}");
                assert_eq!(spin_table(&lambda, k).unwrap().len(), h.len());
            }
        }
    }
}

#[test]
fn generalized_kostka_nonnegative() {
    let ring = shared_ring();
    for k in [2usize, 3] {
        for n in (0..=8).filter(|n| n % k == 0) {
            for lambda in partitions(n) {
                let h = ring.convert(&llt_h(&lambda, k).unwrap(), &b("s")).unwrap();
                for (mu, c) in h.terms() {
                    assert!(c.is_polynomial(), "{lambda} {mu}");
                    let coeffs = c.numerator().t_int_coeffs().unwrap();
                    assert!(coeffs.iter().all(|x| !x.is_negative()), "K^({k})[{lambda},{mu}] = {c}");
                }
            }
        }
    }
}

#[test]
fn dominoes_on_two_by_two() {
    let ring = shared_ring();
    let lambda = part(&[2, 2]);
    let h = ring.convert(&llt_h(&lambda, 2).unwrap(), &b("s")).unwrap();
    // weight (2): only the vertical pair (spin 2), since two horizontal
    // dominoes would share a head column; weight (1,1): spins 0 and 2
    let m = llt_h(&lambda, 2).unwrap();
    assert_eq!(m.to_string(), "(t^2 + 1)*m[1,1] + m[2]");
    assert_eq!(h.to_string(), "t^2*s[1,1] + s[2]");
    assert_eq!(generalized_kostka(ring, &lambda, &part(&[1, 1]), 2).unwrap().to_string(), "t^2");
    assert!(generalized_kostka(ring, &lambda, &part(&[1]), 2).unwrap().is_zero());
}
