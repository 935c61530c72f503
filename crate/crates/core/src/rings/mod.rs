//! Exact coefficient rings: Laurent polynomials in `v`, integer polynomials
//! in `q = v^2`, canonical rational functions, and the small quadratic
//! extension used by the dihedral character model.

mod laurent;
mod qpoly;
mod quadext;
mod rational;

pub use laurent::LaurentPoly;
pub use qpoly::QPoly;
pub use quadext::QuadExt;
pub use rational::QRational;
