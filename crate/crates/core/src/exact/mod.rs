//! Exact rational arithmetic, graded polynomials and degreewise linear algebra.

pub mod combinat;
pub mod ideal;
pub mod linalg;
pub mod poly;
pub mod text;
pub mod vars;

/// The only scalar type: arbitrary-precision rationals kept in lowest terms.
pub type Rational = num_rational::BigRational;

pub use ideal::HomogeneousIdeal;
pub use linalg::{degree_slice_monomials, Echelon, SliceBasis};
pub use poly::{GradedPoly, Monomial};
pub use text::{parse_poly, parse_rational};
pub use vars::{TableRef, Var, VarTable};

/// Shorthand for the rational `n/d`.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Shorthand for the integer `n` as a rational.
pub fn qi(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
