//! Colored Jones values from the bracket of Chebyshev-weighted parallels.

use num_traits::{One, Zero};

use super::bracket::{kauffman_bracket, BracketConfig};
use super::builder::{twist_knot_morse, MorseDiagram};
use super::JonesError;
use crate::poly::TPoly;
use crate::Integer;

#[derive(Clone, Copy, Debug)]
pub struct SkeinConfig {
    /// Largest color evaluated through parallels.
    pub color_cap: i64,
    pub bracket: BracketConfig,
}

impl Default for SkeinConfig {
    fn default() -> Self {
        SkeinConfig { color_cap: 6, bracket: BracketConfig::default() }
    }
}

/// Coefficients of `S_n(z)` (index = power of `z`), with `S_0 = 1`, `S_1 = z`,
/// `S_{n+1} = z S_n − S_{n−1}`.
pub fn chebyshev(n: usize) -> Vec<Integer> {
    let mut prev: Vec<Integer> = vec![];
    let mut cur = vec![Integer::one()];
    for _ in 0..n {
        let mut next = vec![Integer::zero(); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += c;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `J(n)` of the knot drawn by `d`, at framing 0.
pub fn colored_jones_morse(d: &MorseDiagram, n: i64, cfg: &SkeinConfig) -> Result<TPoly<Integer>, JonesError> {
    if n < 1 {
        return Err(JonesError::BadColor(n));
    }
    if n > cfg.color_cap {
        return Err(JonesError::ColorCap { n, cap: cfg.color_cap });
    }
    let w = d.to_pd()?.writhe();
    let mut total = TPoly::zero();
    for (j, c) in chebyshev((n - 1) as usize).iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let bracket = if j == 0 { TPoly::one() } else { kauffman_bracket(&d.parallel(j).to_pd()?, &cfg.bracket)? };
        total.add_scaled(&bracket, c, 0);
    }
    // (−1)^{n−1} from the definition, then ((−1)^{n−1} t^{n²−1})^{−w}.
    let sign_exp = (n - 1) * (1 + w);
    let sign = if sign_exp.rem_euclid(2) == 0 { Integer::one() } else { -Integer::one() };
    Ok(total.scale(&sign).shift(-w * (n * n - 1)))
}

/// `J_{K_m}(n)` through parallels of the reduced twist-knot diagram.
pub fn colored_jones_skein(m: i64, n: i64, cfg: &SkeinConfig) -> Result<TPoly<Integer>, JonesError> {
    colored_jones_morse(&twist_knot_morse(m)?, n, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qtorus::quantum_integer;

    #[test]
    fn chebyshev_recurrence() {
        for n in 1..10 {
            let (a, b, c) = (chebyshev(n - 1), chebyshev(n), chebyshev(n + 1));
            for i in 0..c.len() {
                let zb = if i == 0 { Integer::zero() } else { b.get(i - 1).cloned().unwrap_or_default() };
                let lhs = &c[i] - zb + a.get(i).cloned().unwrap_or_default();
                assert!(lhs.is_zero(), "n={n}");
            }
        }
        assert_eq!(chebyshev(2), vec![Integer::from(-1), Integer::zero(), Integer::one()]);
    }

    #[test]
    fn unknot_is_quantum_integer() {
        let cfg = SkeinConfig { color_cap: 8, ..Default::default() };
        for n in 1..=8 {
            assert_eq!(colored_jones_morse(&MorseDiagram::unknot(), n, &cfg).unwrap(), quantum_integer(n));
        }
    }

    #[test]
    fn color_cap() {
        let err = colored_jones_skein(1, 7, &SkeinConfig::default()).unwrap_err();
        assert_eq!(err, JonesError::ColorCap { n: 7, cap: 6 });
        assert_eq!(colored_jones_skein(1, 0, &SkeinConfig::default()).unwrap_err(), JonesError::BadColor(0));
    }

    #[test]
    fn low_colors() {
        let cfg = SkeinConfig::default();
        for m in [-2, -1, 1, 2] {
            assert_eq!(colored_jones_skein(m, 1, &cfg).unwrap(), TPoly::one());
            let j2 = colored_jones_skein(m, 2, &cfg).unwrap();
            // Divisible by [2] with a knot determinant of |4m+1| at t = e^{iπ/4}.
            let v = j2.div_exact_unit(&quantum_integer(2)).expect("J(2)/[2]");
            let det: i64 = v
                .terms()
                .map(|(e, c)| {
                    let c: i64 = c.try_into().unwrap();
                    // t^4 = -1 at t = e^{iπ/4}; odd multiples of t^2 do not occur.
                    assert_eq!(e.rem_euclid(4), 0);
                    if (e / 4).rem_euclid(2) == 0 {
                        c
                    } else {
                        -c
                    }
                })
                .sum();
            assert_eq!(det.abs(), (4 * m + 1).abs(), "m={m}");
        }
    }
}
