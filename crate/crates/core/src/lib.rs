//! Relation ideals of the cohomology of rank-2 Higgs moduli spaces, built and
//! checked entirely in exact rational arithmetic.
//!
//! The crate is layered bottom-up:
//!
//! * [`exact`]: rationals, graded-commutative polynomials, degree slices and
//!   canonical row-reduced bases.
//! * [`series`]: truncated power series in one or two formal variables with
//!   polynomial coefficients.
//! * [`classes`]: the polynomial families (`ρ`, `ξ`, the equivariant classes)
//!   and the ideal generators.
//! * [`sympow`]: intersection numbers on symmetric products of a curve.
//! * [`localize`]: fixed components, restriction maps, the stable-bundle model
//!   and the localization relation oracle.
//! * [`verify`]: dimension counts, oracle-versus-ideal comparisons and the
//!   combinatorial identity checks.

pub mod classes;
pub mod error;
pub mod exact;
pub mod localize;
pub mod series;
pub mod sympow;
pub mod verify;

mod par;

pub use error::{Error, Result};
pub use exact::{GradedPoly, Rational, SliceBasis, VarTable};
