//! Exact arithmetic in Q(q, t) and exact linear algebra over it.

mod coeff;
mod matrix;
mod modgcd;
mod poly;
mod upoly;

pub use coeff::{Coeff, CoeffDisplay};
pub use matrix::CoeffMatrix;
pub use poly::{Poly, PolyDisplay, Var, VarNames};
