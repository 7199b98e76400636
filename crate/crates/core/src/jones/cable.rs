//! The (r,2)-cable sequence and degree formulas for adequate diagrams.

use num_traits::One;

use super::diagram::DiagramStats;
use super::JonesError;
use crate::poly::TPoly;
use crate::qtorus::LaurentSequence;
use crate::Integer;

fn check_r(r: i64) -> Result<(), JonesError> {
    if r % 2 == 0 {
        Err(JonesError::EvenR(r))
    } else {
        Ok(())
    }
}

/// `J_{K^{(r,2)}}(n) = t^{−2r(n²−1)} Σ_{i=1}^{n} (−1)^{r(n−i)} t^{2ri(i−1)} J_K(2i−1)`.
pub fn cable_jones(base: &LaurentSequence<Integer>, r: i64, n: i64) -> Result<TPoly<Integer>, JonesError> {
    check_r(r)?;
    if n < 1 {
        return Err(JonesError::BadColor(n));
    }
    let mut sum = TPoly::zero();
    for i in 1..=n {
        let sign = if (r * (n - i)).rem_euclid(2) == 0 { Integer::one() } else { -Integer::one() };
        sum.add_scaled(&*base.get(2 * i - 1)?, &sign, 2 * r * i * (i - 1));
    }
    Ok(sum.shift(-2 * r * (n * n - 1)))
}

/// The cable as an odd sequence over `base`.
pub fn cable_sequence(base: &LaurentSequence<Integer>, r: i64) -> Result<LaurentSequence<Integer>, JonesError> {
    check_r(r)?;
    let base = base.clone();
    let name = format!("{}^({r},2)", base.name());
    Ok(LaurentSequence::odd(name, move |n| cable_jones(&base, r, n).map_err(|e| e.to_string())))
}

/// Checks `t^{2rn} J_c(n+1) + t^{−2r(n+1)} J_c(n) = J_K(2n+1)` for `n = 1..=big_n`,
/// with `J_c` built from `base` by [`cable_jones`].
pub fn verify_cable_identity(base: &LaurentSequence<Integer>, r: i64, big_n: i64) -> Result<bool, JonesError> {
    verify_cable_pair(base, &cable_sequence(base, r)?, r, big_n)
}

/// The same identity for an externally supplied cable sequence.
pub fn verify_cable_pair(
    base: &LaurentSequence<Integer>,
    cable: &LaurentSequence<Integer>,
    r: i64,
    big_n: i64,
) -> Result<bool, JonesError> {
    check_r(r)?;
    for n in 1..=big_n {
        let mut lhs = (*cable.get(n + 1)?).clone().shift(2 * r * n);
        lhs.add_scaled(&*cable.get(n)?, &Integer::one(), -2 * r * (n + 1));
        if lhs != *base.get(2 * n + 1)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(d_−, d_+)` of `J_K(n)` for an adequate diagram with these statistics.
pub fn adequate_degree_bounds(s: &DiagramStats, n: i64) -> (i64, i64) {
    let (k, sp, sm, w) = (s.k() as i64, s.s_plus as i64, s.s_minus as i64, s.w);
    let d_plus = k * (n - 1).pow(2) + 2 * (n - 1) * sp - w * (n * n - 1);
    let d_minus = -k * (n - 1).pow(2) - 2 * (n - 1) * sm - w * (n * n - 1);
    (d_minus, d_plus)
}

/// Which end of the cable's colored Jones polynomial the closed form
/// `−2rn² + 2r` describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CableDegree {
    /// `d_+` when `r < −4k_−`.
    Max(i64),
    /// `d_−` when `r > 4k_+`.
    Min(i64),
    NotApplicable,
}

pub fn cable_degree(s: &DiagramStats, r: i64, n: i64) -> CableDegree {
    let v = -2 * r * n * n + 2 * r;
    if r < -4 * s.k_minus as i64 {
        CableDegree::Max(v)
    } else if r > 4 * s.k_plus as i64 {
        CableDegree::Min(v)
    } else {
        CableDegree::NotApplicable
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qtorus::quantum_integer;

    #[test]
    fn low_colors() {
        let unknot = LaurentSequence::quantum_integer();
        for r in [-3, -1, 1, 5] {
            assert_eq!(cable_jones(&unknot, r, 1).unwrap(), TPoly::one());
            let mut want = quantum_integer::<Integer>(3).shift(4 * r);
            want.add_scaled(&TPoly::one(), &-Integer::one(), 0);
            assert_eq!(cable_jones(&unknot, r, 2).unwrap(), want.shift(-6 * r));
        }
        assert_eq!(cable_jones(&unknot, 2, 2), Err(JonesError::EvenR(2)));
    }

    #[test]
    fn unknot_identity_and_negative_control() {
        let unknot = LaurentSequence::quantum_integer();
        for r in [-5, -1, 1, 3, 7] {
            assert!(verify_cable_identity(&unknot, r, 6).unwrap());
        }
        let cable = cable_sequence(&unknot, -1).unwrap();
        assert!(verify_cable_pair(&unknot, &cable, -1, 5).unwrap());
        let bad = cable.perturbed(4, TPoly::one());
        assert!(!verify_cable_pair(&unknot, &bad, -1, 5).unwrap());
    }

    #[test]
    fn degree_formulas_at_color_one() {
        let s = DiagramStats { k_plus: 4, k_minus: 2, s_plus: 3, s_minus: 5, w: 2 };
        assert_eq!(adequate_degree_bounds(&s, 1), (0, 0));
        assert_eq!(cable_degree(&s, 17, 1), CableDegree::Min(0));
        assert_eq!(cable_degree(&s, -9, 3), CableDegree::Max(144));
        assert_eq!(cable_degree(&s, 9, 3), CableDegree::NotApplicable);
    }
}
