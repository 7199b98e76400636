//! Coefficient rings.
//!
//! Everything polynomial in this crate is generic over [`Ring`]. Exact work
//! uses [`BigInt`]/[`BigRational`]; the guesser runs over the word-sized prime
//! fields [`Fp`]; `f64` is available for quick numeric experiments.

use std::fmt::{self, Debug, Display};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    fn mul_ref(&self, rhs: &Self) -> Self;

    fn from_i64(v: i64) -> Self;

    /// `self += a * b`, overridable where a fused form is cheaper.
    fn add_mul(&mut self, a: &Self, b: &Self) {
        let p = a.mul_ref(b);
        *self += &p;
    }

    /// Dense product of coefficient vectors, both nonempty.
    fn dense_mul(a: &[Self], b: &[Self]) -> Vec<Self> {
        let mut out = vec![Self::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j].add_mul(x, y);
            }
        }
        out
    }

    fn pow_u(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }
}

pub trait Field: Ring {
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn div_ref(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul_ref(&r))
    }
}

impl Ring for BigInt {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn add_mul(&mut self, a: &Self, b: &Self) {
        if !a.is_zero() && !b.is_zero() {
            *self += a * b;
        }
    }
    fn dense_mul(a: &[Self], b: &[Self]) -> Vec<Self> {
        if a.len().min(b.len()) >= crate::poly::KRONECKER_THRESHOLD {
            crate::poly::kronecker_mul(a, b)
        } else {
            let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
            for (i, x) in a.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in b.iter().enumerate() {
                    out[i + j].add_mul(x, y);
                }
            }
            out
        }
    }
}

impl Ring for BigRational {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

impl Ring for f64 {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn from_i64(v: i64) -> Self {
        v as f64
    }
}

impl Field for f64 {
    fn inv(&self) -> Option<Self> {
        (*self != 0.0).then(|| 1.0 / self)
    }
}

/// Rings in which exact division can be attempted.
pub trait DivExact: Ring {
    /// `Some(q)` with `q * rhs == self`, or `None` if no such `q` exists.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;
}

impl DivExact for BigInt {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = num_integer::Integer::div_rem(self, rhs);
        r.is_zero().then_some(q)
    }
}

impl<F: Field> DivExact for F {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        self.div_ref(rhs)
    }
}

/// Coefficients that serialize as a reduced fraction `num/den`.
pub trait Fraction: Ring {
    fn to_fraction(&self) -> (BigInt, BigInt);
    fn from_fraction(num: BigInt, den: BigInt) -> Option<Self>;
}

impl Fraction for BigInt {
    fn to_fraction(&self) -> (BigInt, BigInt) {
        (self.clone(), BigInt::one())
    }
    fn from_fraction(num: BigInt, den: BigInt) -> Option<Self> {
        num.div_exact(&den)
    }
}

impl Fraction for BigRational {
    fn to_fraction(&self) -> (BigInt, BigInt) {
        (self.numer().clone(), self.denom().clone())
    }
    fn from_fraction(num: BigInt, den: BigInt) -> Option<Self> {
        (!den.is_zero()).then(|| BigRational::new(num, den))
    }
}

/// Element of ℤ/Pℤ for a prime `P < 2^62`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub const MODULUS: u64 = P;
    const BITS: u32 = 64 - P.leading_zeros();
    // Barrett constant ⌊2^{2k} / P⌋ for k-bit P.
    const MU: u128 = (1u128 << (2 * Self::BITS)) / P as u128;

    #[inline]
    fn reduce(x: u128) -> u64 {
        let q = ((x >> (Self::BITS - 1)) * Self::MU) >> (Self::BITS + 1);
        let mut r = x - q * P as u128;
        while r >= P as u128 {
            r -= P as u128;
        }
        r as u64
    }

    pub fn new(v: u64) -> Self {
        Fp(v % P)
    }

    pub fn from_i128(v: i128) -> Self {
        Fp(v.rem_euclid(P as i128) as u64)
    }

    pub fn from_bigint(v: &BigInt) -> Self {
        let r = v % BigInt::from(P);
        let r = if r.is_negative() { r + BigInt::from(P) } else { r };
        Fp(r.try_into().expect("reduced residue fits in u64"))
    }

    pub fn value(self) -> u64 {
        self.0
    }

    /// Symmetric representative in (−P/2, P/2].
    pub fn signed(self) -> i128 {
        if self.0 > P / 2 {
            self.0 as i128 - P as i128
        } else {
            self.0 as i128
        }
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut b = self;
        let mut acc = Fp(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b;
            }
            b = b * b;
            e >>= 1;
        }
        acc
    }

    /// `self^e` for a signed exponent; panics on `0^negative`.
    pub fn powi(self, e: i64) -> Self {
        if e >= 0 {
            self.pow(e as u64)
        } else {
            self.inv().expect("negative power of zero").pow(e.unsigned_abs())
        }
    }
}

impl<const P: u64> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(if self.0 >= rhs.0 { self.0 - rhs.0 } else { self.0 + P - rhs.0 })
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(Self::reduce(self.0 as u128 * rhs.0 as u128))
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<'a, const P: u64> AddAssign<&'a Fp<P>> for Fp<P> {
    fn add_assign(&mut self, rhs: &'a Fp<P>) {
        *self = *self + *rhs;
    }
}

impl<'a, const P: u64> SubAssign<&'a Fp<P>> for Fp<P> {
    fn sub_assign(&mut self, rhs: &'a Fp<P>) {
        *self = *self - *rhs;
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1)
    }
}

impl<const P: u64> Ring for Fp<P> {
    fn mul_ref(&self, rhs: &Self) -> Self {
        *self * *rhs
    }
    fn from_i64(v: i64) -> Self {
        Fp::from_i128(v as i128)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn inv(&self) -> Option<Self> {
        // Extended Euclid on (a, P).
        if self.0 == 0 {
            return None;
        }
        let (mut r0, mut r1) = (P as i128, self.0 as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1, "modulus must be prime");
        Some(Fp::from_i128(s0))
    }
}

/// Large primes just below 2^62, used by the modular guesser.
pub const PRIMES: [u64; 8] = [
    4611686018427387847,
    4611686018427387817,
    4611686018427387787,
    4611686018427387761,
    4611686018427387751,
    4611686018427387737,
    4611686018427387733,
    4611686018427387709,
];

/// Lift an integer-valued rational to `BigInt`, if it is one.
pub fn rational_to_integer(q: &BigRational) -> Option<BigInt> {
    q.is_integer().then(|| q.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;

    type F = Fp<{ PRIMES[0] }>;

    #[test]
    fn inverse_roundtrip() {
        for v in [1u64, 2, 3, 12345, PRIMES[0] - 1] {
            let a = F::new(v);
            assert_eq!(a * a.inv().unwrap(), F::one());
        }
        assert!(F::zero().inv().is_none());
    }

    #[test]
    fn barrett_matches_u128_remainder() {
        fn check<const P: u64>() {
            let mut x = 0x9e37_79b9_7f4a_7c15u64;
            for _ in 0..2000 {
                x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let (a, b) = (x % P, x.rotate_left(17) % P);
                let want = (a as u128 * b as u128 % P as u128) as u64;
                assert_eq!((Fp::<P>::new(a) * Fp::<P>::new(b)).value(), want);
            }
            assert_eq!((Fp::<P>::new(P - 1) * Fp::<P>::new(P - 1)).value(), 1);
        }
        check::<{ PRIMES[0] }>();
        check::<{ PRIMES[7] }>();
        check::<1_000_000_007>();
        check::<7>();
    }

    #[test]
    fn signed_representative() {
        assert_eq!(F::from_i64(-5).signed(), -5);
        assert_eq!(F::from_i64(7).signed(), 7);
    }

    #[test]
    fn bigint_reduction_matches_i128() {
        let v = BigInt::from(-123456789012345678i64) * BigInt::from(1000);
        assert_eq!(F::from_bigint(&v), F::from_i128(-123456789012345678000i128));
    }

    #[test]
    fn pow_matches_repeated_product() {
        let a = BigInt::from(3);
        assert_eq!(a.pow_u(5), BigInt::from(243));
        let b = F::new(3);
        assert_eq!(b.powi(-2) * b * b, F::one());
    }
}
