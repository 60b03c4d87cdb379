//! Exact GF(2) computer algebra for the mod-2 cohomology of real and
//! oriented Grassmann manifolds.
//!
//! The crate is layered bottom-up:
//!
//! * [`poly`], [`monomial`], [`vars`], [`text`], [`lucas`]: sparse
//!   polynomials over GF(2) with weighted grading and pure lex order;
//! * [`groebner`]: division, Buchberger's algorithm, reduced bases and
//!   graded quotients with standard-monomial bases;
//! * [`bitmatrix`]: packed GF(2) matrices, rank and null spaces;
//! * [`grassmann`]: the dual Stiefel-Whitney classes, the `g_r` family,
//!   Borel rings, presented oriented rings, restriction maps and the Gysin
//!   dimension count;
//! * [`verifier`]: the catalog of checkable statements about those rings.
//!
//! Everything here is `no_std` + `alloc`; file IO, timing and the CLI live
//! in the companion `grasschar` crate.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bitmatrix;
pub mod error;
pub mod grassmann;
pub mod groebner;
pub mod lucas;
pub mod monomial;
pub mod poly;
pub mod text;
pub mod vars;
pub mod verifier;

pub use bitmatrix::{BitMatrix, BitVector};
pub use error::Error;
pub use groebner::{GradedQuotient, GroebnerBasis};
pub use lucas::lucas_binom;
pub use monomial::Monomial;
pub use poly::PolyGF2;
pub use vars::VariableTable;

pub type Result<T, E = Error> = core::result::Result<T, E>;
