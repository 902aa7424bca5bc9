//! Elements, the basis registry and change-of-basis engine, scalar products,
//! Gram-Schmidt and linear operators.

mod element;
mod operator;
mod ring;
mod scalar;

pub use element::{BasisId, ElementDisplay, SymElement};
pub use operator::{ActionFn, LinearOperator};
pub use ring::{
    invert_basis_change, transpose_basis_change, BasisChange, BasisSpec, ColumnFn, Edge, EdgeId,
    Product, ProductFn, SymRing,
};
pub use scalar::ScalarProduct;
