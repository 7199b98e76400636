//! One prime at a time: the linear system at points `t = τ`, its nullspace,
//! and rational-function reconstruction in `u = t^g` over `F_p`.

use std::collections::HashMap;

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::scalar::{Field, Fp};
use crate::Integer;

/// A value `Σ c_k u^{low+k}` with coefficients reduced mod `P`.
pub(super) struct Reduced<const P: u64> {
    low: i64,
    coeffs: Vec<Fp<P>>,
}

impl<const P: u64> Reduced<P> {
    pub(super) fn new(low: i64, coeffs: &[Integer]) -> Self {
        let coeffs = coeffs
            .iter()
            .map(|c| match i64::try_from(c) {
                Ok(v) => Fp::from_i128(v as i128),
                Err(_) => Fp::from_bigint(c),
            })
            .collect();
        Reduced { low, coeffs }
    }

    fn eval(&self, x: Fp<P>) -> Fp<P> {
        let mut acc = Fp::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + *c;
        }
        acc * x.powi(self.low)
    }
}

/// The layout of the unknowns: `(d+1)(δ+1)` columns, `L`-major.
#[derive(Clone, Copy, Debug)]
pub(super) struct Shape {
    pub d: usize,
    pub delta: usize,
    /// `M^j` contributes `u^{step·n·j}` at row `n`.
    pub step: i64,
}

impl Shape {
    pub fn cols(&self) -> usize {
        (self.d + 1) * (self.delta + 1)
    }
}

/// Nullspace data at one point: pivot columns and the vector for the first
/// free column, normalised to 1 there.
#[derive(Clone, Debug)]
pub(super) struct PointImage<const P: u64> {
    pub pivots: Vec<usize>,
    pub free: usize,
    pub vector: Vec<Fp<P>>,
}

pub(super) enum Solve<const P: u64> {
    FullRank,
    Kernel(PointImage<P>),
}

pub(super) fn solve_at<const P: u64>(
    shape: Shape,
    rows: &[i64],
    values: &HashMap<i64, Reduced<P>>,
    tau: Fp<P>,
) -> Solve<P> {
    let cols = shape.cols();
    let mut ev: HashMap<i64, Fp<P>> = HashMap::new();
    let mut m: Vec<Vec<Fp<P>>> = Vec::with_capacity(rows.len());
    for &n in rows {
        let mpow = tau.powi(shape.step * n);
        let mut row = vec![Fp::zero(); cols];
        for i in 0..=shape.d {
            let k = n + i as i64;
            let f = *ev.entry(k).or_insert_with(|| values[&k].eval(tau));
            let mut x = f;
            for j in 0..=shape.delta {
                row[i * (shape.delta + 1) + j] = x;
                x = x * mpow;
            }
        }
        m.push(row);
    }
    let pivots = rref(&mut m, cols);
    if pivots.len() == cols {
        return Solve::FullRank;
    }
    let free = (0..cols).find(|c| !pivots.contains(c)).unwrap();
    let mut vector = vec![Fp::zero(); cols];
    vector[free] = Fp::one();
    for (r, &p) in pivots.iter().enumerate() {
        if p < free {
            vector[p] = -m[r][free];
        }
    }
    Solve::Kernel(PointImage { pivots, free, vector })
}

/// Gauss–Jordan in place; returns the pivot column of each leading row.
fn rref<const P: u64>(m: &mut [Vec<Fp<P>>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().unwrap();
        for x in m[r][c..].iter_mut() {
            *x = *x * inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c];
            for (x, y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                *x = *x - f * *y;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Dense polynomial over `F_p`, lowest coefficient first, no trailing zeros.
type FPoly<const P: u64> = Vec<Fp<P>>;

fn trim<const P: u64>(mut a: FPoly<P>) -> FPoly<P> {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn deg<const P: u64>(a: &FPoly<P>) -> i64 {
    a.len() as i64 - 1
}

fn eval<const P: u64>(a: &FPoly<P>, x: Fp<P>) -> Fp<P> {
    a.iter().rev().fold(Fp::zero(), |acc, c| acc * x + *c)
}

fn scale<const P: u64>(a: &FPoly<P>, c: Fp<P>) -> FPoly<P> {
    trim(a.iter().map(|x| *x * c).collect())
}

fn mul<const P: u64>(a: &FPoly<P>, b: &FPoly<P>) -> FPoly<P> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Fp::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j] + *x * *y;
        }
    }
    trim(out)
}

fn sub<const P: u64>(a: &FPoly<P>, b: &FPoly<P>) -> FPoly<P> {
    let mut out = a.clone();
    out.resize(a.len().max(b.len()), Fp::zero());
    for (x, y) in out.iter_mut().zip(b) {
        *x = *x - *y;
    }
    trim(out)
}

fn div_rem<const P: u64>(a: &FPoly<P>, d: &FPoly<P>) -> (FPoly<P>, FPoly<P>) {
    let dn = d.len();
    if a.len() < dn {
        return (Vec::new(), a.clone());
    }
    let inv = d[dn - 1].inv().expect("nonzero divisor");
    let mut rem = a.clone();
    let mut q = vec![Fp::zero(); a.len() - dn + 1];
    for i in (0..q.len()).rev() {
        let top = rem[i + dn - 1] * inv;
        if top.is_zero() {
            continue;
        }
        for j in 0..dn {
            rem[i + j] = rem[i + j] - top * d[j];
        }
        q[i] = top;
    }
    (trim(q), trim(rem))
}

fn monic<const P: u64>(a: &FPoly<P>) -> FPoly<P> {
    match a.last() {
        None => Vec::new(),
        Some(l) => scale(a, l.inv().unwrap()),
    }
}

fn gcd<const P: u64>(a: &FPoly<P>, b: &FPoly<P>) -> FPoly<P> {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = div_rem(&a, &b).1;
        a = std::mem::replace(&mut b, r);
    }
    monic(&a)
}

/// Newton interpolation through `(x_k, y_k)`.
fn interpolate<const P: u64>(xs: &[Fp<P>], ys: &[Fp<P>]) -> FPoly<P> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (dd[i] - dd[i - 1]) * (xs[i] - xs[i - j]).inv().expect("distinct points");
        }
    }
    // Horner in the Newton basis.
    let mut p = vec![dd[n - 1]];
    for i in (0..n - 1).rev() {
        let mut next = vec![Fp::zero(); p.len() + 1];
        for (k, c) in p.iter().enumerate() {
            next[k + 1] = next[k + 1] + *c;
            next[k] = next[k] - *c * xs[i];
        }
        next[0] = next[0] + dd[i];
        p = next;
    }
    trim(p)
}

/// `a/b` with `deg a + deg b < n` agreeing with `y` at the `n` points, `b` monic.
fn rational_from_points<const P: u64>(xs: &[Fp<P>], ys: &[Fp<P>]) -> Option<(FPoly<P>, FPoly<P>)> {
    let n = xs.len() as i64;
    let mut modulus: FPoly<P> = vec![Fp::one()];
    for &x in xs {
        modulus = mul(&modulus, &vec![-x, Fp::one()]);
    }
    let (mut r0, mut r1) = (modulus, interpolate(xs, ys));
    let (mut s0, mut s1): (FPoly<P>, FPoly<P>) = (Vec::new(), vec![Fp::one()]);
    while deg(&r1) >= (n + 1) / 2 {
        let (q, r) = div_rem(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s);
    }
    if s1.is_empty() || deg(&r1) + deg(&s1) >= n {
        return None;
    }
    if xs.iter().any(|x| eval(&s1, *x).is_zero()) {
        return None;
    }
    let lc = s1.last().unwrap().inv().unwrap();
    Some((scale(&r1, lc), scale(&s1, lc)))
}

/// The kernel vector as polynomials in `u`: coprime, with `vector[free]`
/// having leading coefficient 1.
#[derive(Clone, Debug)]
pub(super) struct PolyImage<const P: u64> {
    pub pivots: Vec<usize>,
    pub free: usize,
    pub entries: Vec<FPoly<P>>,
}

impl<const P: u64> PolyImage<P> {
    fn eval_ratio(&self, x: Fp<P>) -> Option<Vec<Fp<P>>> {
        let inv = eval(&self.entries[self.free], x).inv()?;
        Some(self.entries.iter().map(|e| eval(e, x) * inv).collect())
    }
}

pub(super) enum Image<const P: u64> {
    FullRank,
    /// The image and the number of interpolation points it took.
    Kernel(PolyImage<P>, usize),
    /// Reconstruction did not settle within the point budget.
    Unstable,
}

/// Sample points until the kernel vector is reconstructed and confirmed at
/// fresh points.
pub(super) fn kernel_image<const P: u64>(
    shape: Shape,
    rows: &[i64],
    values: &HashMap<i64, Reduced<P>>,
    rng: &mut ChaCha8Rng,
    start_points: usize,
    max_points: usize,
) -> Image<P> {
    const CHECKS: usize = 4;
    let mut xs: Vec<Fp<P>> = Vec::new();
    let mut imgs: Vec<PointImage<P>> = Vec::new();
    let mut want = start_points.clamp(2, max_points);
    loop {
        while imgs.len() < want + CHECKS {
            let mut batch: Vec<Fp<P>> = Vec::new();
            // A single probe first: a full-rank system needs no more.
            let size = if imgs.is_empty() { 1 } else { want + CHECKS - imgs.len() };
            while batch.len() < size {
                let x = Fp::<P>::new(rng.gen_range(2..P - 1));
                if !xs.contains(&x) && !batch.contains(&x) {
                    batch.push(x);
                }
            }
            let solved: Vec<Solve<P>> = batch.par_iter().map(|&x| solve_at(shape, rows, values, x)).collect();
            for (x, s) in batch.into_iter().zip(solved) {
                let img = match s {
                    Solve::FullRank => return Image::FullRank,
                    Solve::Kernel(img) => img,
                };
                // Keep only points of generic (maximal) rank.
                match imgs.first() {
                    Some(first) if img.pivots.len() < first.pivots.len() => continue,
                    Some(first) if img.pivots != first.pivots => {
                        if img.pivots.len() == first.pivots.len() && img.pivots > first.pivots {
                            continue;
                        }
                        xs.clear();
                        imgs.clear();
                    }
                    _ => {}
                }
                xs.push(x);
                imgs.push(img);
            }
        }
        if let Some(img) = reconstruct(&xs[..want], &imgs[..want]) {
            let ok = xs[want..]
                .iter()
                .zip(&imgs[want..])
                .all(|(x, pt)| img.eval_ratio(*x).as_deref() == Some(&pt.vector[..]));
            if ok {
                return Image::Kernel(img, want);
            }
        }
        if want >= max_points {
            return Image::Unstable;
        }
        want = (want * 2).min(max_points);
    }
}

fn reconstruct<const P: u64>(xs: &[Fp<P>], imgs: &[PointImage<P>]) -> Option<PolyImage<P>> {
    let first = &imgs[0];
    let cols = first.vector.len();
    let mut nums = Vec::with_capacity(cols);
    let mut dens = Vec::with_capacity(cols);
    for c in 0..cols {
        let ys: Vec<Fp<P>> = imgs.iter().map(|im| im.vector[c]).collect();
        if ys.iter().all(|y| y.is_zero()) {
            nums.push(Vec::new());
            dens.push(vec![Fp::one()]);
            continue;
        }
        let (a, b) = rational_from_points(xs, &ys)?;
        nums.push(a);
        dens.push(b);
    }
    let mut lcm: FPoly<P> = vec![Fp::one()];
    for d in &dens {
        lcm = mul(&lcm, &div_rem(d, &gcd(&lcm, d)).0);
    }
    let mut entries: Vec<FPoly<P>> = nums.iter().zip(&dens).map(|(a, b)| mul(a, &div_rem(&lcm, b).0)).collect();
    let content = entries.iter().fold(Vec::new(), |g, e| gcd(&g, e));
    for e in entries.iter_mut() {
        *e = div_rem(e, &content).0;
    }
    let lc = entries[first.free].last()?.inv()?;
    for e in entries.iter_mut() {
        *e = scale(e, lc);
    }
    Some(PolyImage { pivots: first.pivots.clone(), free: first.free, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::PRIMES;
    type F = Fp<{ PRIMES[0] }>;

    #[test]
    fn rational_reconstruction_roundtrip() {
        // (u² + 3) / (u − 5)
        let num = vec![F::new(3), F::zero(), F::one()];
        let den = vec![-F::new(5), F::one()];
        let xs: Vec<F> = (10..20).map(F::new).collect();
        let ys: Vec<F> = xs.iter().map(|x| eval(&num, *x) * eval(&den, *x).inv().unwrap()).collect();
        let (a, b) = rational_from_points(&xs, &ys).unwrap();
        assert_eq!((a, b), (num, den));
    }

    #[test]
    fn reconstruction_with_vanishing_constant_term() {
        // u³ / (u² + 1): the numerator has zero low coefficients.
        let num = vec![F::zero(), F::zero(), F::zero(), F::one()];
        let den = vec![F::one(), F::zero(), F::one()];
        let xs: Vec<F> = (3..15).map(F::new).collect();
        let ys: Vec<F> = xs.iter().map(|x| eval(&num, *x) * eval(&den, *x).inv().unwrap()).collect();
        assert_eq!(rational_from_points(&xs, &ys), Some((num, den)));
    }

    #[test]
    fn rref_finds_kernel() {
        let mut m = vec![vec![F::new(1), F::new(2), F::new(3)], vec![F::new(2), F::new(4), F::new(7)]];
        let piv = rref(&mut m, 3);
        assert_eq!(piv, vec![0, 2]);
    }
}
