//! The quantum torus `ℤ[t^{±1}]⟨L^{±1}, M^{±1}⟩ / (LM − t²ML)` acting on sequences.

mod operator;
mod ratfunc;
mod sequence;

pub use operator::{op_mul, operator_halving, sigma, upsilon, QOperator, TorusCoeff};
pub use ratfunc::{left_divide, to_polynomial_operator, QuotRem, RatFunc};
pub use sequence::{quantum_integer, LaurentSequence, SequenceError};

use thiserror::Error;

use crate::poly::Var;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QTorusError {
    #[error("({0}, {1}) is not a coprime pair")]
    NotCoprime(i32, i32),
    #[error("halving needs even L-powers, found L^{0}")]
    OddLPower(i32),
    #[error("divisor has L-degree 0")]
    ZeroLDegree,
    #[error("division by the zero operator")]
    ZeroDivisor,
    #[error("negative L-power; shift by a unit first")]
    NegativeLPower,
    #[error("operator coefficients may not involve {0}")]
    UnexpectedVariable(Var),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{MultiLaurent, TPoly};
    use num_bigint::BigInt;
    use num_rational::BigRational;

    type P = MultiLaurent<BigInt>;
    type Op = QOperator<P>;

    fn mono(c: i64, t: i32, m: i32) -> P {
        P::term(c, &[(Var::T, t), (Var::M, m)])
    }

    fn op(terms: &[(i64, i32, i32, i32)]) -> Op {
        // (coeff, t-exp, M-exp, L-exp)
        Op::from_coeffs(terms.iter().map(|&(c, t, m, l)| (l, mono(c, t, m))))
    }

    #[test]
    fn commutation_rule() {
        assert_eq!(Op::l_power(1).op_mul(&Op::m_power(1)), op(&[(1, 2, 1, 1)]));
        assert_eq!(Op::l_power(1).op_mul(&Op::m_power(2)), op(&[(1, 4, 2, 1)]));
        assert_eq!(op(&[(1, 0, -1, 1)]).op_mul(&op(&[(1, 0, 1, 1)])), op(&[(1, 2, 0, 2)]));
    }

    #[test]
    fn apply_examples() {
        let one = LaurentSequence::constant(TPoly::<BigInt>::one());
        assert_eq!(Op::m_power(1).apply(&one, 3).unwrap(), TPoly::monomial(BigInt::from(1), 6));
        let ju = LaurentSequence::<BigInt>::quantum_integer();
        assert_eq!(Op::l_power(1).apply(&ju, 1).unwrap(), quantum_integer(2));
    }

    #[test]
    fn upsilon_examples() {
        assert_eq!(upsilon::<BigInt>(1, 0).unwrap(), op(&[(-1, 0, 1, 0), (-1, 0, -1, 0)]));
        assert_eq!(upsilon::<BigInt>(0, 1).unwrap(), op(&[(-1, 0, 0, 1), (-1, 0, 0, -1)]));
        assert_eq!(upsilon::<BigInt>(1, 1).unwrap(), op(&[(1, 1, 1, 1), (1, 1, -1, -1)]));
        assert_eq!(upsilon::<BigInt>(2, 4), Err(QTorusError::NotCoprime(2, 4)));
        assert!(upsilon::<BigInt>(0, 0).is_err());
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(op(&[(1, 0, 2, 3)]).sigma(), op(&[(1, 0, -2, -3)]));
        let u = upsilon::<BigInt>(2, 1).unwrap();
        assert_eq!(u.sigma(), u);
    }

    #[test]
    fn annihilation_examples() {
        let ju = LaurentSequence::<BigInt>::quantum_integer();
        let a = op(&[(1, 0, 2, 1), (-1, 0, 0, 1), (-1, 2, 2, 0), (1, -2, 0, 0)]);
        assert!(a.annihilates(&ju, 1, 20).unwrap());
        let lm1 = op(&[(1, 0, 0, 1), (-1, 0, 0, 0)]);
        let one = LaurentSequence::constant(TPoly::<BigInt>::one());
        assert!(lm1.annihilates(&one, -10, 10).unwrap());
        assert!(!lm1.annihilates(&ju, 1, 5).unwrap());
    }

    #[test]
    fn halving_examples() {
        assert_eq!(op(&[(1, 0, 1, 2)]).halve().unwrap(), op(&[(1, 2, 2, 1)]));
        let c = op(&[(5, 3, 0, 0)]);
        assert_eq!(c.halve().unwrap(), c);
        assert_eq!(op(&[(1, 0, 0, 1)]).halve(), Err(QTorusError::OddLPower(1)));
    }

    #[test]
    fn left_division_examples() {
        type R = MultiLaurent<BigRational>;
        type ROp = QOperator<R>;
        let c = R::term(3, &[(Var::M, 2)]) + R::term(1, &[(Var::T, -1)]);
        let b = &ROp::l_power(1) + &ROp::coefficient(c.clone());
        let (q, r) = left_divide(&b, &b).unwrap();
        assert_eq!(to_polynomial_operator(&q).unwrap(), ROp::one());
        assert!(r.is_zero());
        let (q, r) = left_divide(&ROp::l_power(1), &b).unwrap();
        assert_eq!(to_polynomial_operator(&q).unwrap(), ROp::one());
        assert_eq!(to_polynomial_operator(&r).unwrap(), ROp::coefficient(-c));
        assert_eq!(left_divide(&b, &ROp::coefficient(R::one())).unwrap_err(), QTorusError::ZeroLDegree);
    }
}
