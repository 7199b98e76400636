//! Products of long integer polynomials by Kronecker substitution: pack the
//! coefficients into one big integer at a wide enough bit stride, multiply
//! once, and unpack.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::Zero;

/// Below this length the schoolbook product is cheaper.
pub(crate) const THRESHOLD: usize = 24;

fn write_bits(buf: &mut [u32], offset: u64, value: &BigUint) {
    for (k, limb) in value.iter_u32_digits().enumerate() {
        let bit = offset + 32 * k as u64;
        let (w, s) = ((bit / 32) as usize, (bit % 32) as u32);
        buf[w] |= limb << s;
        if s > 0 {
            buf[w + 1] |= limb >> (32 - s);
        }
    }
}

fn read_bits(digits: &[u32], offset: u64, bits: u64) -> BigUint {
    let n = bits.div_ceil(32) as usize;
    let mut out = vec![0u32; n];
    let (w0, s) = ((offset / 32) as usize, (offset % 32) as u32);
    let get = |i: usize| digits.get(i).copied().unwrap_or(0);
    for (k, slot) in out.iter_mut().enumerate() {
        let lo = get(w0 + k);
        *slot = if s == 0 { lo } else { (lo >> s) | (get(w0 + k + 1) << (32 - s)) };
    }
    let extra = n as u64 * 32 - bits;
    if extra > 0 {
        let last = out.last_mut().unwrap();
        *last &= u32::MAX >> extra;
    }
    BigUint::new(out)
}

fn pack<'a>(values: impl Iterator<Item = &'a BigInt>, len: usize, bits: u64) -> BigInt {
    let words = (len as u64 * bits).div_ceil(32) as usize + 2;
    let (mut pos, mut neg) = (vec![0u32; words], vec![0u32; words]);
    for (i, v) in values.enumerate() {
        match v.sign() {
            Sign::Plus => write_bits(&mut pos, i as u64 * bits, v.magnitude()),
            Sign::Minus => write_bits(&mut neg, i as u64 * bits, v.magnitude()),
            Sign::NoSign => {}
        }
    }
    BigInt::from(BigUint::new(pos)) - BigInt::from(BigUint::new(neg))
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len() + b.len() - 1;
    let max_bits = |v: &[BigInt]| v.iter().map(|x| x.bits()).max().unwrap_or(0);
    let len_bits = 64 - (a.len().min(b.len()) as u64).leading_zeros() as u64;
    // Each product coefficient has magnitude below 2^(bits−1).
    let bits = max_bits(a) + max_bits(b) + len_bits + 2;
    let product = pack(a.iter(), a.len(), bits) * pack(b.iter(), b.len(), bits);
    // Shift every digit into [0, 2^bits) so the expansion is an ordinary one.
    let half = BigInt::from(1u8) << (bits - 1);
    let offset = pack(std::iter::repeat_n(&half, n), n, bits);
    let (_, digits) = (product + offset).to_u32_digits();
    (0..n)
        .map(|i| {
            let d = BigInt::from(read_bits(&digits, i as u64 * bits, bits)) - &half;
            if d.is_zero() {
                BigInt::zero()
            } else {
                d
            }
        })
        .collect()
}
