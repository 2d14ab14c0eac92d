//! Casson-type invariants of 4-dimensional mapping tori from combinatorial
//! surgery data.
//!
//! Given a mapping torus with finite-order monodromy presented by surgery
//! data (a Seifert matrix for the knot, the surgery slope n/q, the Casson
//! invariant of the ambient homology sphere), this crate evaluates the two
//! gauge-theoretic invariants λ_SW and λ_FO as exact rationals and verifies
//! the identity λ_FO = -λ_SW through two independent computational
//! pipelines. Seifert fibered conjugation mapping tori are handled through
//! the Neumann-Siebenmann μ̄ invariant computed from star-shaped plumbing
//! graphs.
//!
//! Layout:
//! - [`arith`]: rationals, Dedekind sums, exact and numeric inertia, GF(2);
//! - [`poly`]: integer polynomials and cyclotomics;
//! - [`knots`]: Seifert matrices, Alexander polynomials, equivariant
//!   signatures;
//! - [`lens`]: lens-space Casson-Walker and ρ-sum values;
//! - [`torus`]: the mapping-torus invariant formulas and the cancellation
//!   check;
//! - [`seifert`]: Seifert fibered spheres, plumbing, Wu class, μ̄;
//! - [`suites`]: seeded verification suites behind `verify`.

pub mod arith;
pub mod error;
pub mod knots;
pub mod lens;
pub mod poly;
pub mod report;
pub mod seifert;
pub mod suites;
pub mod torus;

pub use arith::matrix::{IntMatrix, IntSymMatrix};
pub use arith::rational::Rational;
pub use arith::signature::{SignatureTriple, DEFAULT_TOLERANCE};
pub use error::{Error, Result};
pub use knots::alexander::SymmetricLaurentPoly;
pub use knots::{RootOfUnity, SeifertMatrix};
pub use lens::LensSpace;
pub use report::{InvariantReport, RohlinMod2, TermBreakdown};
pub use seifert::{PlumbingGraph, SeifertHS, SeifertPresentation};
pub use torus::{BranchedMappingTorusInput, FreeMappingTorusInput};
