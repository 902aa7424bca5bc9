//! Spin generating functions of ribbon tableaux and generalized Kostka
//! polynomials.

use std::collections::BTreeMap;

use crate::combinat::{core_quotient, partitions, ribbon_tableaux, Partition};
use crate::error::{Error, Result};
use crate::exactalg::{Coeff, Poly};
use crate::symcore::{BasisId, SymElement, SymRing};

/// Spins of all k-ribbon tableaux of `shape` for each partition weight of
/// `|shape| / k`. Empty when `k` does not divide `|shape|` or the k-core is
/// not empty.
pub fn spin_table(shape: &Partition, k: usize) -> Result<BTreeMap<Partition, Vec<usize>>> {
    if k == 0 {
        return Err(Error::InvalidRule("ribbon size must be positive".into()));
    }
    let mut out = BTreeMap::new();
    if !shape.size().is_multiple_of(k) || !core_quotient(shape, k).core.is_empty() {
        return Ok(out);
    }
    for mu in partitions(shape.size() / k) {
        let spins: Vec<usize> = ribbon_tableaux(shape, mu.parts(), k)?
            .iter()
            .map(|t| t.spin)
            .collect();
        if !spins.is_empty() {
            out.insert(mu, spins);
        }
    }
    Ok(out)
}

/// `sum_T t^e` over a list of exponents.
fn exponent_poly(exps: impl IntoIterator<Item = usize>) -> Poly {
    let mut counts: Vec<i64> = Vec::new();
    for e in exps {
        if counts.len() <= e {
            counts.resize(e + 1, 0);
        }
        counts[e] += 1;
    }
    Poly::from_t_coeffs(&counts)
}

/// `H_lambda^(k)` in the monomial basis: the coefficient of `m_mu` is
/// `sum_T t^{cospin(T)}` over k-ribbon tableaux of shape `lambda` and weight
/// `mu`, where `cospin = maxspin - spin` and the maximum runs over all
/// weights at once.
pub fn llt_h(lambda: &Partition, k: usize) -> Result<SymElement> {
    let table = spin_table(lambda, k)?;
    let maxspin = table.values().flatten().copied().max().unwrap_or(0);
    let terms = table.into_iter().map(|(mu, spins)| {
        let poly = exponent_poly(spins.into_iter().map(|s| maxspin - s));
        (mu, Coeff::from_poly(poly))
    });
    Ok(SymElement::from_terms("m", terms))
}

/// `K^(k)_{lambda mu}(t)`: the coefficient of `s_mu` in `H_lambda^(k)`.
pub fn generalized_kostka(ring: &SymRing, lambda: &Partition, mu: &Partition, k: usize) -> Result<Poly> {
    if k == 0 {
        return Err(Error::InvalidRule("ribbon size must be positive".into()));
    }
    if mu.size() * k != lambda.size() {
        return Ok(Poly::zero());
    }
    let h = ring.convert(&llt_h(lambda, k)?, &BasisId::new("s"))?;
    let c = h.coeff(mu);
    if !c.is_polynomial() {
        return Err(Error::InvalidRule(format!(
            "coefficient of s{mu} in H{lambda}^({k}) is not a polynomial: {c}"
        )));
    }
    Ok(c.numerator().clone())
}
