#![allow(dead_code)]

use symfun::{BasisId, Coeff, CoeffMatrix, Partition, Poly, Var};

pub fn part(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

pub fn b(name: &str) -> BasisId {
    BasisId::new(name)
}

pub fn int(n: i64) -> Coeff {
    Coeff::from_int(n)
}

pub fn t() -> Coeff {
    Coeff::t()
}

pub fn q() -> Coeff {
    Coeff::q()
}

/// `1 - x^k`.
pub fn one_minus(x: &Coeff, k: u32) -> Coeff {
    &Coeff::one() - &x.pow(k)
}

/// Column `mu` has `mu` with coefficient 1 and otherwise only partitions
/// dominated by `mu` (or dominating `mu` when `upward`).
pub fn is_dominance_unitriangular(m: &CoeffMatrix, upward: bool) -> bool {
    m.entries().all(|(row, col, c)| {
        if row == col {
            c.is_one()
        } else if upward {
            col.dominated_by(row).unwrap()
        } else {
            row.dominated_by(col).unwrap()
        }
    }) && m.rows().iter().all(|p| m.get(p, p).is_one())
}

pub fn at(v: Var, x: Coeff) -> [(Var, Coeff); 1] {
    [(v, x)]
}

/// `t^shift * K(1/t)` for a polynomial in `t` of degree at most `shift`.
pub fn reverse_t(k: &Poly, shift: usize) -> Poly {
    let coeffs = k.t_int_coeffs().expect("integer polynomial in t");
    let mut out = vec![0i64; shift + 1];
    for (i, c) in coeffs.iter().enumerate() {
        assert!(i <= shift, "degree exceeds shift");
        out[shift - i] = i64::try_from(c.clone()).unwrap();
    }
    Poly::from_t_coeffs(&out)
}
