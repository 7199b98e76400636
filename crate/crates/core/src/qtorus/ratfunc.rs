//! Fractions of Laurent polynomials, the coefficient field used for division
//! in the localized torus.

use std::fmt;

use super::operator::{QOperator, TorusCoeff};
use super::QTorusError;
use crate::poly::{Exps, MultiLaurent};
use crate::scalar::Field;

/// `num / den` with `den ≠ 0`. Kept lightly reduced: exact quotients are
/// taken when available and the denominator's leading coefficient is 1.
#[derive(Clone)]
pub struct RatFunc<C: Field> {
    num: MultiLaurent<C>,
    den: MultiLaurent<C>,
}

impl<C: Field> RatFunc<C> {
    pub fn new(num: MultiLaurent<C>, den: MultiLaurent<C>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        RatFunc { num, den }.reduced()
    }

    pub fn poly(p: MultiLaurent<C>) -> Self {
        RatFunc { num: p, den: MultiLaurent::one() }
    }

    pub fn num(&self) -> &MultiLaurent<C> {
        &self.num
    }

    pub fn den(&self) -> &MultiLaurent<C> {
        &self.den
    }

    /// The polynomial this fraction equals, if it is one.
    pub fn as_poly(&self) -> Option<MultiLaurent<C>> {
        self.num.div_exact(&self.den)
    }

    fn reduced(self) -> Self {
        if self.num.is_zero() {
            return RatFunc { num: MultiLaurent::zero(), den: MultiLaurent::one() };
        }
        if let Some(q) = self.num.div_exact(&self.den) {
            return RatFunc { num: q, den: MultiLaurent::one() };
        }
        // Monomial factors of the denominator are units in the Laurent ring.
        let m = self.den.min_exps().unwrap();
        let inv: Exps = std::array::from_fn(|i| -m[i]);
        let (num, den) = (self.num.shift(&inv), self.den.shift(&inv));
        let lc = den.leading().unwrap().1.inv().unwrap();
        RatFunc { num: num.scale(&lc), den: den.scale(&lc) }
    }

    pub fn inv(&self) -> Option<Self> {
        (!self.num.is_zero()).then(|| RatFunc::new(self.den.clone(), self.num.clone()))
    }
}

impl<C: Field> PartialEq for RatFunc<C> {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl<C: Field + fmt::Display> fmt::Debug for RatFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == MultiLaurent::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl<C: Field + fmt::Display> TorusCoeff for RatFunc<C> {
    fn zero() -> Self {
        RatFunc::poly(MultiLaurent::zero())
    }
    fn one() -> Self {
        RatFunc::poly(MultiLaurent::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return RatFunc::new(&self.num + &o.num, self.den.clone());
        }
        RatFunc::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        RatFunc::new(&self.num * &o.num, &self.den * &o.den)
    }
    fn neg(&self) -> Self {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
    fn q_shift(&self, k: i32) -> Self {
        RatFunc { num: self.num.q_shift(k), den: self.den.q_shift(k) }.reduced()
    }
}

/// Quotient and remainder of [`left_divide`].
pub type QuotRem<C> = (QOperator<RatFunc<C>>, QOperator<RatFunc<C>>);

/// Division with remainder `a = q·b + rem`, `deg_L rem < deg_L b`, over
/// coefficients rational in `t, M`.
pub fn left_divide<C: Field + fmt::Display>(
    a: &QOperator<MultiLaurent<C>>,
    b: &QOperator<MultiLaurent<C>>,
) -> Result<QuotRem<C>, QTorusError> {
    let (b_lo, d) = b.l_bounds().ok_or(QTorusError::ZeroDivisor)?;
    if b_lo < 0 || a.l_bounds().is_some_and(|(lo, _)| lo < 0) {
        return Err(QTorusError::NegativeLPower);
    }
    if d == 0 {
        return Err(QTorusError::ZeroLDegree);
    }
    let lift = |op: &QOperator<MultiLaurent<C>>| op.map_coeffs(|c| RatFunc::poly(c.clone()));
    let b = lift(b);
    let lead = b.coeff(d);
    let mut rem = lift(a);
    let mut q = QOperator::zero();
    while let Some(k) = rem.l_degree().filter(|&k| k >= d) {
        let c = rem.coeff(k).mul(&lead.q_shift(k - d).inv().expect("nonzero leading coefficient"));
        let step = QOperator::term(c, k - d);
        rem = &rem - &step.op_mul(&b);
        debug_assert!(rem.l_degree().is_none_or(|j| j < k));
        q = &q + &step;
    }
    Ok((q, rem))
}

/// Clear denominators: the polynomial operator, if every coefficient is one.
pub fn to_polynomial_operator<C: Field + fmt::Display>(
    op: &QOperator<RatFunc<C>>,
) -> Option<QOperator<MultiLaurent<C>>> {
    let mut out = Vec::new();
    for (k, c) in op.coeffs() {
        out.push((*k, c.as_poly()?));
    }
    Some(QOperator::from_coeffs(out))
}
