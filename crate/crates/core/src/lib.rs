//! Colored Jones sequences of twist knots and their (r,2)-cables, guessed
//! q-recurrences, A-polynomials via resultants, and the machinery to check
//! `ε(α) ≐ A` on concrete instances.

pub mod apoly;
pub mod guess;
pub mod harness;
pub mod jones;
pub mod poly;
pub mod qtorus;
pub mod scalar;

pub use num_bigint::BigInt as Integer;
pub use num_rational::BigRational as Rational;

/// Polynomials with exact rational coefficients.
pub type Poly = poly::MultiLaurent<Rational>;
/// Polynomials with integer coefficients (colored Jones values, normalised operators).
pub type IntPoly = poly::MultiLaurent<Integer>;
