//! Symmetric functions over Q(q, t).
//!
//! Elements live in one of several bases (monomial, elementary, complete,
//! power sum, Schur, Hall-Littlewood, Macdonald, or bases registered at run
//! time). Conversions between bases are found by the [`SymRing`] engine.

pub mod classical;
pub mod combinat;
pub mod error;
pub mod exactalg;
pub mod llt;
pub mod qt_bases;
pub mod rigged;
pub mod symcore;

use std::sync::OnceLock;

pub use combinat::{
    core_quotient, from_core_quotient, kostka_number, kostka_poly, partitions, ribbon_tableaux,
    ssyt_list, CoreQuotient, Partition, RibbonTableau, Tableau,
};
pub use error::{Error, Result};
pub use exactalg::{Coeff, CoeffMatrix, Poly, Var, VarNames};
pub use rigged::{rc_kostka, rc_list, RiggedConfiguration};
pub use symcore::{
    invert_basis_change, transpose_basis_change, BasisChange, BasisId, BasisSpec,
    LinearOperator, ScalarProduct, SymElement, SymRing,
};

/// A ring with m, e, h, p, s, P, Q, QP and McdP registered, in that order.
pub fn standard_ring() -> SymRing {
    let mut ring = SymRing::new();
    classical::register_classical(&mut ring).expect("classical bases register cleanly");
    qt_bases::register_qt(&mut ring).expect("q,t bases register cleanly");
    ring
}

/// A process-wide standard ring, so memoized matrices are shared.
pub fn shared_ring() -> &'static SymRing {
    static RING: OnceLock<SymRing> = OnceLock::new();
    RING.get_or_init(standard_ring)
}
