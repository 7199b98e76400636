//! Exact polynomial arithmetic: sparse multivariate Laurent polynomials, dense
//! univariate ones in `t`, resultants, Newton polygons and the term format.

mod content;
mod format;
mod kronecker;
mod multi;
mod newton;
mod resultant;
mod tpoly;

pub use content::{primitive_integer, strip_monomial, to_integer, to_rational};
pub use format::{parse_terms, write_terms};
pub use multi::{exps, Exps, MultiLaurent, Var, NVARS};
pub use newton::{newton_polygon, NewtonPolygon, Point};
pub use resultant::resultant;
pub use tpoly::TPoly;

pub(crate) use kronecker::{mul as kronecker_mul, THRESHOLD as KRONECKER_THRESHOLD};

use thiserror::Error;

use crate::scalar::Ring;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("zero polynomial not allowed here")]
    Zero,
    #[error("unexpected variable {0}")]
    UnexpectedVariable(Var),
    #[error("negative exponent in {0}; clear denominators first")]
    NegativeExponent(Var),
    #[error("neither input has positive degree in {0}")]
    NoDegree(Var),
    #[error("term format, line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// The map ε reducing `t = −1`.
pub fn epsilon_specialize<C: Ring>(f: &MultiLaurent<C>) -> MultiLaurent<C> {
    f.epsilon()
}

/// Minimal and maximal degree in `t` of a nonzero polynomial in `t` alone.
pub fn t_degree_bounds<C: Ring>(f: &MultiLaurent<C>) -> Result<(i32, i32), PolyError> {
    if let Some(v) = f.variables().into_iter().find(|v| *v != Var::T) {
        return Err(PolyError::UnexpectedVariable(v));
    }
    f.degree_bounds(Var::T).ok_or(PolyError::Zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = MultiLaurent<BigInt>;

    #[test]
    fn t_degree_examples() {
        let f = P::term(1, &[(Var::T, 2)]) + P::term(1, &[(Var::T, -2)]);
        assert_eq!(t_degree_bounds(&f), Ok((-2, 2)));
        assert_eq!(t_degree_bounds(&P::one()), Ok((0, 0)));
        assert_eq!(t_degree_bounds(&P::term(1, &[(Var::T, 5)])), Ok((5, 5)));
        assert_eq!(t_degree_bounds(&P::zero()), Err(PolyError::Zero));
        assert_eq!(t_degree_bounds(&P::var(Var::M)), Err(PolyError::UnexpectedVariable(Var::M)));
    }
}
