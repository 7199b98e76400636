use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::multi::{Exps, MultiLaurent};

pub fn to_rational(p: &MultiLaurent<BigInt>) -> MultiLaurent<BigRational> {
    p.map_coeffs(|c| BigRational::from_integer(c.clone()))
}

/// Integer view of a rational polynomial, if every coefficient is integral.
pub fn to_integer(p: &MultiLaurent<BigRational>) -> Option<MultiLaurent<BigInt>> {
    p.terms().all(|(_, c)| c.is_integer()).then(|| p.map_coeffs(|c| c.to_integer()))
}

/// Scale to coprime integer coefficients with a positive leading (lex-largest) term.
pub fn primitive_integer(p: &MultiLaurent<BigRational>) -> MultiLaurent<BigInt> {
    let lcm = p.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let ints = p.map_coeffs(|c| (c * BigRational::from_integer(lcm.clone())).to_integer());
    let g = ints.terms().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c));
    if g.is_zero() {
        return ints;
    }
    let g = if ints.leading().is_some_and(|(_, c)| c.is_negative()) { -g } else { g };
    ints.map_coeffs(|c| c / &g)
}

/// Divide out the largest monomial factor, so every variable has minimum exponent 0.
pub fn strip_monomial<C: crate::scalar::Ring>(p: &MultiLaurent<C>) -> MultiLaurent<C> {
    match p.min_exps() {
        None => p.clone(),
        Some(m) => {
            let neg: Exps = std::array::from_fn(|i| -m[i]);
            p.shift(&neg)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Var;

    #[test]
    fn primitive_part_clears_denominators_and_sign() {
        let half = BigRational::new(BigInt::from(-1), BigInt::from(2));
        let p = MultiLaurent::monomial(half, [0, 0, 1, 0, 0]) + MultiLaurent::<BigRational>::term(3, &[(Var::M, 2)]);
        let q = primitive_integer(&p);
        // Lex order puts M before L, so the M² term leads.
        assert_eq!(q, MultiLaurent::term(6, &[(Var::M, 2)]) - MultiLaurent::term(1, &[(Var::L, 1)]));
    }

    #[test]
    fn strips_common_monomial() {
        let p = MultiLaurent::<BigInt>::term(1, &[(Var::M, 3), (Var::L, -1)]) + MultiLaurent::term(2, &[(Var::M, 5)]);
        let q = strip_monomial(&p);
        assert_eq!(q, MultiLaurent::term(1, &[]) + MultiLaurent::term(2, &[(Var::M, 2), (Var::L, 1)]));
    }
}
