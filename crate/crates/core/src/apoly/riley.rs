//! Numeric check of the table against the two-bridge representations
//! `a ↦ [[M,1],[0,1/M]]`, `b ↦ [[M,0],[y,1/M]]`, where `y` runs over the roots
//! of the Riley polynomial.

use num_complex::Complex64;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::table::{entry, TableEntry};
use super::{twist_aprime, APoly, ApolyError};
use crate::poly::Var;

type C = Complex64;
type Mat = [[C; 2]; 2];

/// Relative residual below which a sample counts as a zero.
pub const RESIDUAL_TOL: f64 = 1e-8;

#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub m: i64,
    /// Sampled `(L, M)` pairs.
    pub pairs: usize,
    pub max_residual: f64,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.pairs > 0 && self.max_residual < RESIDUAL_TOL
    }
}

fn mul(a: &Mat, b: &Mat) -> Mat {
    std::array::from_fn(|i| std::array::from_fn(|j| a[i][0] * b[0][j] + a[i][1] * b[1][j]))
}

/// Inverse of a determinant-one matrix.
fn inv(a: &Mat) -> Mat {
    [[a[1][1], -a[0][1]], [-a[1][0], a[0][0]]]
}

/// The longitude eigenvalue `L` for the representation at `(M, y)`.
fn longitude(p: i64, q: i64, m: C, y: C) -> C {
    let one = C::new(1.0, 0.0);
    let zero = C::new(0.0, 0.0);
    let a: Mat = [[m, one], [zero, one / m]];
    let b: Mat = [[m, zero], [y, one / m]];
    let eps: Vec<i64> = (1..p).map(|i| if (i * q / p) % 2 == 0 { 1 } else { -1 }).collect();
    let letter = |i: usize| {
        let x = if i % 2 == 0 { a } else { b };
        if eps[i] == 1 {
            x
        } else {
            inv(&x)
        }
    };
    let id: Mat = [[one, zero], [zero, one]];
    let w = (0..eps.len()).fold(id, |acc, i| mul(&acc, &letter(i)));
    let w_rev = (0..eps.len()).rev().fold(id, |acc, i| mul(&acc, &letter(i)));
    let sigma: i64 = eps.iter().sum();
    let a_pow = (0..(2 * sigma).abs()).fold(id, |acc, _| mul(&acc, &if sigma > 0 { inv(&a) } else { a }));
    mul(&mul(&w_rev, &w), &a_pow)[0][0]
}

/// All roots of `Σ c_k y^k` by Durand–Kerner.
fn roots(coeffs: &[C]) -> Vec<C> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let monic: Vec<C> = coeffs.iter().map(|c| c / lead).collect();
    let eval = |z: C| monic.iter().rev().fold(C::new(0.0, 0.0), |acc, c| acc * z + c);
    let seed = C::new(0.4, 0.9);
    let mut z: Vec<C> = (0..n).map(|k| seed.powu(k as u32)).collect();
    for _ in 0..500 {
        let prev = z.clone();
        for i in 0..n {
            let denom = (0..n).filter(|&j| j != i).fold(C::new(1.0, 0.0), |acc, j| acc * (z[i] - z[j]));
            let step = eval(z[i]) / denom;
            z[i] -= step;
        }
        if z.iter().zip(&prev).all(|(a, b)| (a - b).norm() < 1e-15 * (1.0 + a.norm())) {
            break;
        }
    }
    z
}

fn eval_lm(a: &APoly, l: C, m: C) -> (C, f64) {
    let mut val = C::new(0.0, 0.0);
    let mut scale = 0.0;
    for (e, c) in a.poly().terms() {
        let c = c.to_f64().unwrap_or(f64::NAN);
        let t = l.powi(e[Var::L.idx()]) * m.powi(e[Var::M.idx()]) * c;
        val += t;
        scale += t.norm();
    }
    (val, scale)
}

pub(super) fn oracle_for(entry: &TableEntry, a: &APoly, samples: usize, seed: u64) -> OracleReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ entry.m as u64);
    let (p, q) = entry.two_bridge;
    let mirror = entry.convention == "mirror";
    let deg_y = entry.riley.iter().map(|t| t.1).max().unwrap_or(0) as usize;
    let mut report = OracleReport { m: entry.m, pairs: 0, max_residual: 0.0 };
    for _ in 0..samples {
        let m = C::from_polar(rng.gen_range(0.8..1.25), rng.gen_range(0.0..std::f64::consts::TAU));
        let mut coeffs = vec![C::new(0.0, 0.0); deg_y + 1];
        for &(em, ey, c) in &entry.riley {
            coeffs[ey as usize] += m.powi(em) * c as f64;
        }
        for y in roots(&coeffs) {
            let l = longitude(p, q, m, y);
            let l = if mirror { l.inv() } else { l };
            let (val, scale) = eval_lm(a, l, m);
            report.pairs += 1;
            report.max_residual = report.max_residual.max(val.norm() / scale.max(f64::MIN_POSITIVE));
        }
    }
    report
}

/// Sample representations of `K_m` and evaluate the tabulated `A'` at their
/// eigenvalue pairs.
pub fn riley_oracle(m: i64, samples: usize, seed: u64) -> Result<OracleReport, ApolyError> {
    let a = twist_aprime(m)?;
    Ok(oracle_for(&entry(m)?, &a, samples, seed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn durand_kerner() {
        // (y − 1)(y + 2)(y − 3i)
        let i = C::new(0.0, 1.0);
        let c = |x: f64| C::new(x, 0.0);
        let coeffs = [c(6.0) * i, c(-2.0) - 3.0 * i, c(1.0) - 3.0 * i, c(1.0)];
        let mut r = roots(&coeffs);
        r.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
        for (got, want) in r.iter().zip([c(-2.0), 3.0 * i, c(1.0)]) {
            assert!((got - want).norm() < 1e-10, "{got} vs {want}");
        }
    }

    #[test]
    fn a_wrong_polynomial_is_rejected() {
        let e = entry(-1).unwrap();
        let good = twist_aprime(-1).unwrap();
        assert!(oracle_for(&e, &good, 20, 1).passed());
        let bad = APoly::new(good.poly() + &crate::IntPoly::term(1, &[(Var::M, 2)])).unwrap();
        assert!(!oracle_for(&e, &bad, 20, 1).passed());
    }
}
