//! Hall-Littlewood P, Q, Q' and Macdonald P.

use crate::combinat::{kostka_poly, partitions, Partition};
use crate::error::{Error, Result};
use crate::exactalg::Coeff;
use crate::symcore::{BasisChange, BasisId, BasisSpec, ScalarProduct, SymElement, SymRing};

/// Column `lambda` of the Gram-Schmidt family of the monomials.
fn gram_schmidt_column(ring: &SymRing, lambda: &Partition, sp: ScalarProduct) -> Result<SymElement> {
    let family = ring.gram_schmidt(&BasisId::new("m"), lambda.size(), sp)?;
    Ok(family[lambda].clone())
}

/// `Q'_lambda = sum_mu K_{mu lambda}(t) s_mu`.
pub fn hl_qp_in_s(lambda: &Partition) -> Result<SymElement> {
    let mut terms = Vec::new();
    for mu in partitions(lambda.size()) {
        let k = kostka_poly(&mu, lambda)?;
        terms.push((mu, Coeff::from_poly(k)));
    }
    Ok(SymElement::from_terms("s", terms))
}

/// `<P_lambda, P_lambda>_t`.
pub fn hl_norm(ring: &SymRing, lambda: &Partition) -> Result<Coeff> {
    let p = SymElement::basis_element("P", lambda.clone());
    ring.scalar(&p, &p, ScalarProduct::HallT)
}

/// Register P, Q, QP (Q') and McdP on top of the classical bases, with the
/// Hall dual pair `(P, QP)`.
pub fn register_qt(ring: &mut SymRing) -> Result<()> {
    ring.register_basis(BasisSpec::new("P", "Hall-Littlewood P"))?;
    ring.register_basis(BasisSpec::new("Q", "Hall-Littlewood Q"))?;
    ring.register_basis(BasisSpec::new("QP", "Hall-Littlewood Q'"))?;
    ring.register_basis(BasisSpec::new("McdP", "Macdonald P"))?;
    ring.declare_basis_change(
        "P",
        "m",
        BasisChange::columns(|ring, lambda| gram_schmidt_column(ring, lambda, ScalarProduct::HallT)),
    )?;
    ring.declare_basis_change(
        "Q",
        "P",
        BasisChange::columns(|ring, lambda| {
            let norm = hl_norm(ring, lambda)?;
            if norm.is_zero() {
                return Err(Error::ZeroNorm(lambda.clone()));
            }
            Ok(SymElement::term("P", lambda.clone(), norm.inv()?))
        }),
    )?;
    ring.declare_basis_change("QP", "s", BasisChange::columns(|_, lambda| hl_qp_in_s(lambda)))?;
    ring.declare_basis_change(
        "McdP",
        "m",
        BasisChange::columns(|ring, lambda| gram_schmidt_column(ring, lambda, ScalarProduct::HallQT)),
    )?;
    ring.declare_dual_pair("P", "QP")?;
    Ok(())
}
