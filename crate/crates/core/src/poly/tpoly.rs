//! Dense univariate Laurent polynomials in `t`.
//!
//! Colored Jones values are long univariate polynomials, so they get a dense
//! representation instead of going through [`MultiLaurent`](super::MultiLaurent).

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::scalar::{Field, Ring};

/// `Σ coeffs[i] t^(low+i)`. Trimmed: empty, or first and last entries nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TPoly<C> {
    low: i64,
    coeffs: Vec<C>,
}

impl<C: Ring> TPoly<C> {
    pub fn zero() -> Self {
        TPoly { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: C, e: i64) -> Self {
        TPoly { low: e, coeffs: vec![c] }.trimmed()
    }

    /// Build from a dense slice starting at exponent `low`.
    pub fn from_dense(low: i64, coeffs: Vec<C>) -> Self {
        TPoly { low, coeffs }.trimmed()
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(terms: I) -> Self {
        let terms: Vec<(i64, C)> = terms.into_iter().collect();
        let Some(lo) = terms.iter().map(|(e, _)| *e).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|(e, _)| *e).max().unwrap();
        let mut coeffs = vec![C::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += &c;
        }
        Self::from_dense(lo, coeffs)
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn low(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn high(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// `(min, max)` exponent, `None` for zero.
    pub fn degree_bounds(&self) -> Option<(i64, i64)> {
        Some((self.low()?, self.high()?))
    }

    pub fn dense(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, e: i64) -> C {
        let i = e - self.low;
        if i < 0 || i >= self.coeffs.len() as i64 {
            C::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    pub fn lead(&self) -> Option<&C> {
        self.coeffs.last()
    }

    /// Nonzero terms `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn nnz(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Multiply by `t^k`.
    pub fn shift(mut self, k: i64) -> Self {
        if !self.is_zero() {
            self.low += k;
        }
        self
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        TPoly { low: self.low, coeffs: self.coeffs.iter().map(|x| x.mul_ref(c)).collect() }.trimmed()
    }

    /// `self += c * t^k * other`.
    pub fn add_scaled(&mut self, other: &Self, c: &C, k: i64) {
        if other.is_zero() || c.is_zero() {
            return;
        }
        let olo = other.low + k;
        let ohi = olo + other.coeffs.len() as i64 - 1;
        self.reserve_range(olo, ohi);
        let off = (olo - self.low) as usize;
        for (i, x) in other.coeffs.iter().enumerate() {
            if !x.is_zero() {
                self.coeffs[off + i].add_mul(x, c);
            }
        }
        *self = std::mem::replace(self, Self::zero()).trimmed();
    }

    fn reserve_range(&mut self, lo: i64, hi: i64) {
        if self.coeffs.is_empty() {
            self.low = lo;
            self.coeffs = vec![C::zero(); (hi - lo + 1) as usize];
            return;
        }
        if lo < self.low {
            let extra = (self.low - lo) as usize;
            let mut v = vec![C::zero(); extra];
            v.append(&mut self.coeffs);
            self.coeffs = v;
            self.low = lo;
        }
        let cur_hi = self.low + self.coeffs.len() as i64 - 1;
        if hi > cur_hi {
            self.coeffs.resize(self.coeffs.len() + (hi - cur_hi) as usize, C::zero());
        }
    }

    /// Product with a short sparse polynomial given as `(exponent, coeff)` terms.
    pub fn mul_sparse(&self, terms: &[(i64, C)]) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_scaled(self, c, *e);
        }
        out
    }

    /// Substitute `t ↦ t^k` for `k ≠ 0`.
    pub fn stretch(&self, k: i64) -> Self {
        assert!(k != 0, "stretch by zero");
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c.clone())))
    }

    /// Evaluate at `t = -1`.
    pub fn at_minus_one(&self) -> C {
        let mut acc = C::zero();
        for (e, c) in self.terms() {
            if e.rem_euclid(2) == 0 {
                acc += c;
            } else {
                acc -= c;
            }
        }
        acc
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> TPoly<D> {
        TPoly { low: self.low, coeffs: self.coeffs.iter().map(f).collect() }.trimmed()
    }

    /// Exact quotient by `d`, whose leading coefficient must be ±1.
    /// Returns `None` if the division leaves a remainder.
    pub fn div_exact_unit(&self, d: &TPoly<C>) -> Option<Self> {
        let dl = d.lead()?;
        let neg = if *dl == C::one() {
            false
        } else if *dl == -C::one() {
            true
        } else {
            panic!("divisor leading coefficient must be a unit");
        };
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dn = d.coeffs.len();
        let n = self.coeffs.len();
        if n < dn {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut q = vec![C::zero(); n - dn + 1];
        for i in (0..q.len()).rev() {
            let top = std::mem::replace(&mut rem[i + dn - 1], C::zero());
            if top.is_zero() {
                continue;
            }
            let qi = if neg { -top } else { top };
            for j in 0..dn - 1 {
                if !d.coeffs[j].is_zero() {
                    let p = qi.mul_ref(&d.coeffs[j]);
                    rem[i + j] -= &p;
                }
            }
            q[i] = qi;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(TPoly::from_dense(self.low - d.low, q))
    }
}

impl<C: Field> TPoly<C> {
    pub fn eval(&self, x: &C) -> C {
        let Some(lo) = self.low() else { return C::zero() };
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x);
            acc += c;
        }
        let scale = if lo >= 0 {
            x.pow_u(lo as u64)
        } else {
            x.inv().expect("evaluating a Laurent polynomial at zero").pow_u(lo.unsigned_abs())
        };
        acc.mul_ref(&scale)
    }

    /// Division with remainder treating both as ordinary polynomials
    /// (exponents shifted so the lowest term is `t^0`).
    pub fn div_rem_poly(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() || self.coeffs.len() < d.coeffs.len() {
            return (Self::zero(), TPoly { low: 0, coeffs: self.coeffs.clone() }.trimmed());
        }
        let inv = d.lead().unwrap().inv().unwrap();
        let dn = d.coeffs.len();
        let mut rem = self.coeffs.clone();
        let mut q = vec![C::zero(); rem.len() - dn + 1];
        for i in (0..q.len()).rev() {
            let top = rem[i + dn - 1].mul_ref(&inv);
            if top.is_zero() {
                continue;
            }
            for j in 0..dn {
                let p = top.mul_ref(&d.coeffs[j]);
                rem[i + j] -= &p;
            }
            q[i] = top;
        }
        (TPoly::from_dense(0, q), TPoly::from_dense(0, rem))
    }

    /// Monic gcd in `F[t, t⁻¹]`, normalised to start at `t^0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = TPoly { low: 0, coeffs: self.coeffs.clone() };
        let mut b = TPoly { low: 0, coeffs: other.coeffs.clone() };
        while !b.is_zero() {
            let (_, r) = a.div_rem_poly(&b);
            a = b;
            let lo = r.low;
            b = r.shift(-lo);
        }
        a.make_monic()
    }

    pub fn make_monic(self) -> Self {
        match self.lead() {
            None => self,
            Some(l) => {
                let inv = l.inv().unwrap();
                let lo = self.low;
                self.scale(&inv).shift(-lo)
            }
        }
    }

    pub fn derivative(&self) -> Self {
        Self::from_terms(self.terms().filter(|(e, _)| *e != 0).map(|(e, c)| (e - 1, c.mul_ref(&C::from_i64(e)))))
    }
}

impl<C: Ring> Zero for TPoly<C> {
    fn zero() -> Self {
        TPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Ring> One for TPoly<C> {
    fn one() -> Self {
        TPoly::one()
    }
}

impl<'a, C: Ring> AddAssign<&'a TPoly<C>> for TPoly<C> {
    fn add_assign(&mut self, rhs: &'a TPoly<C>) {
        self.add_scaled(rhs, &C::one(), 0);
    }
}

impl<'a, C: Ring> SubAssign<&'a TPoly<C>> for TPoly<C> {
    fn sub_assign(&mut self, rhs: &'a TPoly<C>) {
        self.add_scaled(rhs, &-C::one(), 0);
    }
}

impl<C: Ring> Add for TPoly<C> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<C: Ring> Sub for TPoly<C> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<'a, C: Ring> Add<&'a TPoly<C>> for &'a TPoly<C> {
    type Output = TPoly<C>;
    fn add(self, rhs: &'a TPoly<C>) -> TPoly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a, C: Ring> Sub<&'a TPoly<C>> for &'a TPoly<C> {
    type Output = TPoly<C>;
    fn sub(self, rhs: &'a TPoly<C>) -> TPoly<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Ring> Neg for TPoly<C> {
    type Output = Self;
    fn neg(self) -> Self {
        TPoly { low: self.low, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<'a, C: Ring> Mul<&'a TPoly<C>> for &'a TPoly<C> {
    type Output = TPoly<C>;
    fn mul(self, rhs: &'a TPoly<C>) -> TPoly<C> {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero();
        }
        // Colored Jones values live on a sublattice of exponents; multiply there.
        let g = self.stride().gcd(&rhs.stride());
        if g > 1 {
            let (a, b) = (self.compress(g), rhs.compress(g));
            let out = C::dense_mul(&a.coeffs, &b.coeffs);
            return TPoly::from_dense(0, out).expand(g).shift(self.low + rhs.low);
        }
        TPoly::from_dense(self.low + rhs.low, C::dense_mul(&self.coeffs, &rhs.coeffs))
    }
}

impl<C: Ring> TPoly<C> {
    /// gcd of the offsets of nonzero terms from the lowest one (0 for a monomial).
    fn stride(&self) -> i64 {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).fold(0i64, |g, (i, _)| g.gcd(&(i as i64)))
    }

    /// `Σ c_{low+gk} t^{k}`, dropping the offset `low`.
    fn compress(&self, g: i64) -> Self {
        TPoly { low: 0, coeffs: self.coeffs.iter().step_by(g as usize).cloned().collect() }
    }

    fn expand(&self, g: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); (self.coeffs.len() - 1) * g as usize + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * g as usize] = c.clone();
        }
        TPoly { low: self.low * g, coeffs }
    }
}

impl<C: Ring> Mul for TPoly<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<C: Ring + fmt::Display> fmt::Display for TPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let s = c.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (e, mag.as_str()) {
                (0, m) => write!(f, "{m}")?,
                (_, "1") => write!(f, "t^{e}")?,
                (_, m) => write!(f, "{m}*t^{e}")?,
            }
        }
        Ok(())
    }
}

impl<C: Ring> fmt::Debug for TPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.terms()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn p(terms: &[(i64, i64)]) -> TPoly<BigInt> {
        TPoly::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn trims_and_bounds() {
        let a = p(&[(-2, 1), (2, 1), (0, 0)]);
        assert_eq!(a.degree_bounds(), Some((-2, 2)));
        assert_eq!(a.nnz(), 2);
        assert!(p(&[(3, 1), (3, -1)]).is_zero());
    }

    #[test]
    fn product_and_exact_division() {
        let a = p(&[(-2, 1), (2, 1)]);
        let d = p(&[(0, 1), (4, -1)]);
        let prod = &a * &d;
        assert_eq!(prod.div_exact_unit(&d), Some(a.clone()));
        assert_eq!(p(&[(0, 1), (1, 1)]).div_exact_unit(&d), None);
    }

    #[test]
    fn minus_one_and_stretch() {
        let a = p(&[(2, 1), (-2, 1)]);
        assert_eq!(a.at_minus_one(), BigInt::from(2));
        assert_eq!(p(&[(1, 1)]).stretch(-4), p(&[(-4, 1)]));
    }

    #[test]
    fn gcd_over_rationals() {
        let q = |t: &[(i64, i64)]| TPoly::from_terms(t.iter().map(|&(e, c)| (e, BigRational::from_integer(c.into()))));
        let f = q(&[(0, -1), (2, 1)]);
        let g = q(&[(0, 1), (1, 2), (2, 1)]);
        assert_eq!(f.gcd(&g), q(&[(0, 1), (1, 1)]));
    }

    #[test]
    fn display_reads_naturally() {
        assert_eq!(p(&[(2, 1), (-2, -3), (0, 5)]).to_string(), "t^2 + 5 - 3*t^-2");
    }
}
