//! Exact and floating arithmetic substrate shared by every pipeline:
//! arbitrary-precision rationals, Dedekind sums, signatures of symmetric and
//! Hermitian forms, and GF(2) solving.

pub mod dedekind;
pub mod gf2;
pub mod matrix;
pub mod rational;
pub mod signature;

pub use dedekind::{cotangent_pair_sum, dedekind_sum};
pub use gf2::gf2_solve;
pub use matrix::{IntMatrix, IntSymMatrix};
pub use rational::{format_rational, parse_rational, Rational};
pub use signature::{
    signature_exact, signature_hermitian_numeric, HermitianMatrix, SignatureTriple,
    DEFAULT_TOLERANCE,
};
