//! A-polynomials of twist knots and of their (r,2)-cables.
//!
//! `A'_{K_m} = A_{K_m}/(L−1)` comes from a bundled table for `|m| ≤ 3`. Cable
//! A-polynomials are assembled from it by a resultant in `λ` and the factor
//! `F(L,M)` of the (r,2)-cable.

mod checks;
mod riley;
mod table;

pub use checks::{
    check_hs_properties, expected_l_degree, hs_vertex_list, irreducibility_certificate, resultant_splits_at,
    CertificateReport, Check, PropertyReport,
};
pub use riley::{riley_oracle, OracleReport};
pub use table::{table_entries, TableEntry, TABLE_BOUND};

use std::fmt;

use num_integer::Integer as _;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::poly::{resultant, PolyError, Var};
use crate::{IntPoly, Integer};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ApolyError {
    #[error("m = 0 is the unknot")]
    ZeroTwist,
    #[error("|m| = {0} is beyond the bundled table")]
    Unsupported(i64),
    #[error("cable parameter r = {0} must be odd")]
    EvenR(i64),
    #[error("A-polynomials are nonzero")]
    Zero,
    #[error("A-polynomials live in L and M only, found {0}")]
    UnexpectedVariable(Var),
    #[error("table entry for m = {m} failed validation: {why}")]
    Invalid { m: i64, why: String },
    #[error("bundled table: {0}")]
    Table(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A nonzero integer polynomial in `L, M` with content 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct APoly(IntPoly);

impl APoly {
    /// Divides out the (positive) content.
    pub fn new(p: IntPoly) -> Result<Self, ApolyError> {
        if p.is_zero() {
            return Err(ApolyError::Zero);
        }
        if let Some(v) = p.variables().into_iter().find(|v| !matches!(v, Var::L | Var::M)) {
            return Err(ApolyError::UnexpectedVariable(v));
        }
        let g = p.terms().fold(Integer::zero(), |g, (_, c)| g.gcd(c)).abs();
        Ok(APoly(p.map_coeffs(|c| c / &g)))
    }

    pub fn poly(&self) -> &IntPoly {
        &self.0
    }

    pub fn into_poly(self) -> IntPoly {
        self.0
    }

    pub fn l_degree(&self) -> i32 {
        self.0.degree(Var::L).unwrap_or(0)
    }

    /// `P(L, 0)`: the terms free of `M`.
    pub fn at_m_zero(&self) -> IntPoly {
        self.0.coeff_of(Var::M, 0)
    }

    /// `P(L, M²)`.
    pub fn m_squared(&self) -> APoly {
        APoly(self.0.map_monomials(|e| {
            let mut e = *e;
            e[Var::M.idx()] *= 2;
            e
        }))
    }
}

impl fmt::Display for APoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn check_m(m: i64) -> Result<(), ApolyError> {
    match m {
        0 => Err(ApolyError::ZeroTwist),
        _ if m.abs() > TABLE_BOUND => Err(ApolyError::Unsupported(m.abs())),
        _ => Ok(()),
    }
}

/// `A'_{K_m}` from the bundled table, validated on first use.
pub fn twist_aprime(m: i64) -> Result<APoly, ApolyError> {
    check_m(m)?;
    table::validated(m)
}

/// `Res_λ(A'_{K_m}(λ, M), λ² − L)`, content 1.
pub fn r_poly(m: i64) -> Result<APoly, ApolyError> {
    let a = twist_aprime(m)?;
    resultant_in_square(&a)
}

pub(crate) fn raw_resultant_in_square(a: &APoly) -> Result<IntPoly, ApolyError> {
    let f = a.poly().rename(Var::L, Var::Lambda);
    let g = &IntPoly::term(1, &[(Var::Lambda, 2)]) - &IntPoly::term(1, &[(Var::L, 1)]);
    Ok(resultant(&f, &g, Var::Lambda)?)
}

pub(crate) fn resultant_in_square(a: &APoly) -> Result<APoly, ApolyError> {
    APoly::new(raw_resultant_in_square(a)?)
}

/// `M^{2r} L + 1` for `r > 0`, `L + M^{−2r}` for `r < 0`.
pub fn f_factor(r: i64) -> Result<APoly, ApolyError> {
    if r % 2 == 0 {
        return Err(ApolyError::EvenR(r));
    }
    let r32 = r as i32;
    let p = if r > 0 {
        &IntPoly::term(1, &[(Var::M, 2 * r32), (Var::L, 1)]) + &IntPoly::one()
    } else {
        &IntPoly::term(1, &[(Var::L, 1)]) + &IntPoly::term(1, &[(Var::M, -2 * r32)])
    };
    APoly::new(p)
}

/// `(L − 1) · R_{K_m}(L, M²) · F(L, M)`.
pub fn cable_apoly(m: i64, r: i64) -> Result<APoly, ApolyError> {
    let f = f_factor(r)?;
    let rr = r_poly(m)?.m_squared();
    let l_minus_1 = &IntPoly::term(1, &[(Var::L, 1)]) - &IntPoly::one();
    APoly::new(&(&l_minus_1 * rr.poly()) * f.poly())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i32, i32)]) -> IntPoly {
        // (coeff, L-exp, M-exp)
        terms.iter().fold(IntPoly::zero(), |acc, &(c, l, m)| &acc + &IntPoly::term(c, &[(Var::L, l), (Var::M, m)]))
    }

    #[test]
    fn f_factors() {
        assert_eq!(f_factor(3).unwrap().poly(), &p(&[(1, 1, 6), (1, 0, 0)]));
        assert_eq!(f_factor(-1).unwrap().poly(), &p(&[(1, 1, 0), (1, 0, 2)]));
        assert_eq!(f_factor(2), Err(ApolyError::EvenR(2)));
    }

    #[test]
    fn content_is_removed() {
        let a = APoly::new(p(&[(6, 1, 0), (-4, 0, 2)])).unwrap();
        assert_eq!(a.poly(), &p(&[(3, 1, 0), (-2, 0, 2)]));
        assert_eq!(APoly::new(IntPoly::zero()), Err(ApolyError::Zero));
        assert!(matches!(APoly::new(IntPoly::term(1, &[(Var::T, 1)])), Err(ApolyError::UnexpectedVariable(Var::T))));
    }

    #[test]
    fn trefoil_resultant() {
        // A' = L + M⁶ gives R = ±(M¹² − L).
        let r = r_poly(-1).unwrap();
        let want = p(&[(1, 0, 12), (-1, 1, 0)]);
        assert!(r.poly() == &want || r.poly() == &-&want, "{r}");
        let c = cable_apoly(-1, -1).unwrap();
        let lm1 = p(&[(1, 1, 0), (-1, 0, 0)]);
        let full = &(&lm1 * &p(&[(1, 0, 24), (-1, 1, 0)])) * &p(&[(1, 1, 0), (1, 0, 2)]);
        assert!(c.poly() == &full || c.poly() == &-&full, "{c}");
    }

    #[test]
    fn table_bounds() {
        assert_eq!(twist_aprime(0), Err(ApolyError::ZeroTwist));
        assert_eq!(twist_aprime(4), Err(ApolyError::Unsupported(4)));
        assert_eq!(cable_apoly(1, 4), Err(ApolyError::EvenR(4)));
    }
}
