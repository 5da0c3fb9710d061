//! Exact-arithmetic engine for factorial Grothendieck polynomials and the
//! integrable-lattice identities built on them.
//!
//! The crate provides three independent evaluation routes for the same
//! family of polynomials — a determinant formula ([`grothendieck`]), a
//! five/six-vertex lattice transfer-matrix construction ([`lattice`]), and
//! explicit permutation sums ([`symfunc`]) — plus a verifier ([`verify`])
//! that checks the identities connecting them by exact evaluation at seeded
//! rational points. Everything is built on arbitrary-precision rationals
//! ([`scalar`]); there is no floating point and no tolerance anywhere.

pub mod combinatorics;
pub mod error;
pub mod grothendieck;
pub mod lattice;
pub mod point;
pub mod poly;
pub mod scalar;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Scalar;
