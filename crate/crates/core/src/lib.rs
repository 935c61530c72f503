//! Exact computations in Iwahori-Hecke algebras of Weyl groups.
//!
//! The crate builds finite Weyl groups from Cartan type strings, computes
//! trace polynomials `tau(w, q)` of the regular representation of the
//! associated Hecke algebra, R-polynomials, dihedral character tables, and
//! the point-count formulas these quantities feed into — all over exact
//! integer and rational arithmetic. A verification layer re-derives every
//! identity on concrete groups and reports machine-checkable pass/fail
//! records.

pub mod cartan;
pub mod chars;
pub mod counts;
pub mod error;
pub mod hecke;
pub mod rings;
pub mod trace;
pub mod verify;

pub use error::{Error, Result};
