//! Chinese remaindering of residues and rational number reconstruction.

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::Integer;

/// A residue class `value mod modulus`, grown one prime at a time.
#[derive(Clone, Debug)]
pub(super) struct Crt {
    pub value: Integer,
    pub modulus: Integer,
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

impl Crt {
    pub fn new(r: u64, p: u64) -> Self {
        Crt { value: Integer::from(r), modulus: Integer::from(p) }
    }

    pub fn push(&mut self, r: u64, p: u64) {
        let pb = Integer::from(p);
        let a: u64 = (&self.value % &pb).try_into().unwrap();
        let m: u64 = (&self.modulus % &pb).try_into().unwrap();
        let k = mulmod((r + p - a) % p, powmod(m, p - 2, p), p);
        self.value += &self.modulus * Integer::from(k);
        self.modulus *= pb;
    }

    /// `a/b ≡ value` with `|a|, |b| ≤ √(modulus/2)`, `b > 0`.
    pub fn rational(&self) -> Option<(Integer, Integer)> {
        let bound = (&self.modulus >> 1u32).sqrt();
        let (mut r0, mut r1) = (self.modulus.clone(), self.value.mod_floor(&self.modulus));
        let (mut s0, mut s1) = (Integer::zero(), Integer::one());
        while r1 > bound {
            let q = &r0 / &r1;
            let r2 = &r0 - &q * &r1;
            let s2 = &s0 - &q * &s1;
            (r0, r1) = (r1, r2);
            (s0, s1) = (s1, s2);
        }
        if s1.is_zero() || s1.abs() > bound || !r1.gcd(&s1).is_one() {
            return None;
        }
        if s1.is_negative() {
            Some((-r1, -s1))
        } else {
            Some((r1, s1))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::PRIMES;

    fn residue(num: i64, den: i64, p: u64) -> u64 {
        let n = (num as i128).rem_euclid(p as i128) as u64;
        let d = (den as i128).rem_euclid(p as i128) as u64;
        mulmod(n, powmod(d, p - 2, p), p)
    }

    #[test]
    fn recovers_small_fractions() {
        for (a, b) in [(0, 1), (3, 7), (-22, 9), (123456789, 1000003)] {
            let mut c = Crt::new(residue(a, b, PRIMES[0]), PRIMES[0]);
            c.push(residue(a, b, PRIMES[1]), PRIMES[1]);
            assert_eq!(c.rational(), Some((Integer::from(a), Integer::from(b))));
        }
    }

    #[test]
    fn crt_combines() {
        let mut c = Crt::new(2, 5);
        c.push(3, 7);
        assert_eq!(c.value, Integer::from(17));
        assert_eq!(c.modulus, Integer::from(35));
    }
}
