//! Guessing linear q-recurrences `Σ_{i≤d} a_i(t, t^{2n}) f(n+i) = 0` from
//! finitely many values.
//!
//! The unknown coefficients of the `a_i` are found as a nullspace over `ℚ(t)`.
//! That nullspace is computed modulo large primes at random points `t = τ`,
//! lifted to rational functions by interpolation and rational reconstruction,
//! lifted to `ℤ` by CRT, and the resulting operator is then checked by exact
//! substitution.

mod modular;
mod ratrec;

use std::collections::{BTreeMap, HashMap};

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::poly::{exps, MultiLaurent, TPoly, Var};
use crate::qtorus::{LaurentSequence, QOperator, SequenceError};
use crate::scalar::PRIMES;
use crate::{IntPoly, Integer};

use modular::{Image, Reduced, Shape};
use ratrec::Crt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GuessConfig {
    pub d_cap: usize,
    /// Cap on the number of `M`-steps per coefficient; see `m_stride`.
    pub delta_cap: usize,
    pub margin: usize,
    pub holdout: usize,
    /// Seeds the evaluation points.
    pub seed: u64,
    /// First entry of [`PRIMES`] to use; schedules with different offsets and
    /// seeds share no prime–point pair.
    pub prime_offset: usize,
    /// Only `M^{0}, M^{s}, M^{2s}, …` are allowed in the coefficients and
    /// `delta` counts these steps.
    pub m_stride: usize,
    /// First sequence index used.
    pub start: i64,
    /// Cap on evaluation points per prime.
    pub max_points: usize,
}

impl Default for GuessConfig {
    fn default() -> Self {
        GuessConfig {
            d_cap: 2,
            delta_cap: 30,
            margin: 4,
            holdout: 3,
            seed: 0,
            prime_offset: 0,
            m_stride: 1,
            start: 0,
            max_points: 1 << 13,
        }
    }
}

impl GuessConfig {
    pub fn validate(&self) -> Result<(), GuessError> {
        let bad = |s: &str| Err(GuessError::Config(s.into()));
        if self.margin < 2 {
            return bad("margin must be at least 2");
        }
        if self.holdout < 3 {
            return bad("holdout must be at least 3");
        }
        if self.m_stride == 0 {
            return bad("m_stride must be positive");
        }
        if self.max_points < 8 {
            return bad("max_points must be at least 8");
        }
        Ok(())
    }

    /// Equations needed at `(d, delta)`.
    pub fn equations(&self, d: usize, delta: usize) -> usize {
        (d + 1) * (delta + 1) + self.margin + self.holdout
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GuessError {
    #[error("need {needed} equations at (d, delta) = ({d}, {delta}), have {have}")]
    Undersupply { d: usize, delta: usize, needed: usize, have: usize },
    #[error("every supplied value is zero")]
    ZeroWindow,
    #[error("no recurrence with d ≤ {d_cap}, delta ≤ {delta_cap}")]
    CapsExhausted { d_cap: usize, delta_cap: usize },
    #[error("reconstruction did not stabilise at (d, delta) = ({d}, {delta}): {why}")]
    Reconstruction { d: usize, delta: usize, why: String },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Sequence(#[from] SequenceError),
}

/// Result of [`minimal_recurrence`].
#[derive(Clone, Debug)]
pub struct Guess {
    pub op: QOperator<IntPoly>,
    pub d: usize,
    pub delta: usize,
    /// Every `(d, delta)` tried, in order; all but the last returned none.
    pub searched: Vec<(usize, usize)>,
}

/// An operator of L-degree at most `d` with `deg_M a_i ≤ delta·m_stride`
/// annihilating all supplied values, or `None` if there is none.
pub fn guess_recurrence(
    values: &[(i64, TPoly<Integer>)],
    d: usize,
    delta: usize,
    cfg: &GuessConfig,
) -> Result<Option<QOperator<IntPoly>>, GuessError> {
    cfg.validate()?;
    let table: BTreeMap<i64, &TPoly<Integer>> = values.iter().map(|(n, v)| (*n, v)).collect();
    let rows: Vec<i64> =
        table.keys().copied().filter(|&n| (1..=d as i64).all(|i| table.contains_key(&(n + i)))).collect();
    let needed = cfg.equations(d, delta);
    if rows.len() < needed {
        return Err(GuessError::Undersupply { d, delta, needed, have: rows.len() });
    }
    if table.values().all(|v| v.is_zero()) {
        return Err(GuessError::ZeroWindow);
    }
    let (solve, holdout) = rows.split_at(rows.len() - cfg.holdout);

    // Work in u = t^g.
    let stride = cfg.m_stride as i64;
    let mut g = 2 * stride;
    for v in table.values() {
        for (e, _) in v.terms() {
            g = g.gcd(&e);
        }
    }
    let compressed: HashMap<i64, (i64, Vec<Integer>)> = table
        .iter()
        .map(|(&n, v)| {
            let low = v.low().unwrap_or(0);
            let high = v.high().unwrap_or(0);
            let coeffs = (0..=(high - low) / g).map(|k| v.coeff(low + k * g)).collect();
            (n, (low / g, coeffs))
        })
        .collect();
    let shape = Shape { d, delta, step: 2 * stride / g };

    let seq = LaurentSequence::from_values("window", values.iter().cloned());
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ ((d as u64) << 32) ^ delta as u64);
    let mut acc: Option<Accumulated> = None;
    let mut points = 16;
    for k in 0..PRIMES.len() {
        let which = (cfg.prime_offset + k) % PRIMES.len();
        let img = image_mod(which, shape, solve, &compressed, &mut rng, points, cfg.max_points);
        let img = match img {
            Image64::FullRank => return Ok(None),
            Image64::Unstable => {
                return Err(GuessError::Reconstruction { d, delta, why: "point budget exhausted".into() })
            }
            Image64::Kernel(img) => img,
        };
        points = points.max(img.points);
        match &mut acc {
            None => acc = Some(Accumulated::new(&img, delta + 1)),
            Some(a) if a.profile == img.profile() => a.push(&img),
            // A different shape means one of the primes was unlucky; the
            // larger-rank image is the generic one.
            Some(a) if img.pivots.len() > a.profile.0.len() => acc = Some(Accumulated::new(&img, delta + 1)),
            Some(_) => continue,
        }
        let Some(candidate) = acc.as_ref().unwrap().lift(g, stride) else { continue };
        if !annihilates_at(&candidate, &seq, solve)? {
            continue;
        }
        if !annihilates_at(&candidate, &seq, holdout)? {
            return Ok(None);
        }
        return Ok(Some(normalize_operator(&candidate)));
    }
    Err(GuessError::Reconstruction { d, delta, why: "CRT did not stabilise over the prime table".into() })
}

fn annihilates_at(
    op: &QOperator<IntPoly>,
    seq: &LaurentSequence<Integer>,
    rows: &[i64],
) -> Result<bool, SequenceError> {
    for &n in rows {
        if !op.apply(seq, n)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Search `d` ascending, and `delta` ascending within each `d`, for the first
/// certified recurrence of `seq`.
pub fn minimal_recurrence(seq: &LaurentSequence<Integer>, cfg: &GuessConfig) -> Result<Guess, GuessError> {
    cfg.validate()?;
    let mut searched = Vec::new();
    for d in 0..=cfg.d_cap {
        for delta in 0..=cfg.delta_cap {
            searched.push((d, delta));
            let count = cfg.equations(d, delta) as i64 + d as i64;
            let idx = cfg.start..cfg.start + count;
            seq.prefetch(idx.clone())?;
            let values = idx.map(|n| Ok((n, (*seq.get(n)?).clone()))).collect::<Result<Vec<_>, SequenceError>>()?;
            if let Some(op) = guess_recurrence(&values, d, delta, cfg)? {
                return Ok(Guess { op, d, delta, searched });
            }
        }
    }
    Err(GuessError::CapsExhausted { d_cap: cfg.d_cap, delta_cap: cfg.delta_cap })
}

/// Integer content 1, `t`-exponents centred so that `min + max ∈ {0, 1}`, the
/// lowest power of `M` stripped, and the top `t`-term of the leading
/// `L`-coefficient positive.
pub fn normalize_operator(op: &QOperator<IntPoly>) -> QOperator<IntPoly> {
    if op.is_zero() {
        return op.clone();
    }
    let all = || op.coeffs().values().flat_map(|c| c.terms());
    let content = all().fold(Integer::zero(), |g, (_, c)| g.gcd(c));
    let (mut t_lo, mut t_hi, mut m_lo) = (i32::MAX, i32::MIN, i32::MAX);
    for (e, _) in all() {
        t_lo = t_lo.min(e[Var::T.idx()]);
        t_hi = t_hi.max(e[Var::T.idx()]);
        m_lo = m_lo.min(e[Var::M.idx()]);
    }
    let shift = exps(&[(Var::T, -(t_lo + t_hi).div_euclid(2)), (Var::M, -m_lo)]);
    let (_, lead) = op.coeffs().iter().next_back().unwrap();
    let top = lead.terms().max_by_key(|(e, _)| (e[Var::T.idx()], e[Var::M.idx()])).map(|(_, c)| c.clone()).unwrap();
    let unit = if top.is_negative() { -content } else { content };
    op.map_coeffs(|c| {
        MultiLaurent::from_terms(c.terms().map(|(e, x)| {
            let mut e = *e;
            for (a, b) in e.iter_mut().zip(&shift) {
                *a += b;
            }
            (e, x / &unit)
        }))
    })
}

/// A per-prime kernel image with residues as plain integers.
struct KernelImage {
    prime: u64,
    pivots: Vec<usize>,
    free: usize,
    entries: Vec<Vec<u64>>,
    points: usize,
}

type Profile = (Vec<usize>, usize, Vec<usize>);

impl KernelImage {
    fn profile(&self) -> Profile {
        (self.pivots.clone(), self.free, self.entries.iter().map(Vec::len).collect())
    }
}

enum Image64 {
    FullRank,
    Unstable,
    Kernel(KernelImage),
}

fn image_for<const P: u64>(
    shape: Shape,
    rows: &[i64],
    compressed: &HashMap<i64, (i64, Vec<Integer>)>,
    rng: &mut ChaCha8Rng,
    start_points: usize,
    max_points: usize,
) -> Image64 {
    let reduced: HashMap<i64, Reduced<P>> =
        compressed.iter().map(|(&n, (low, c))| (n, Reduced::new(*low, c))).collect();
    match modular::kernel_image(shape, rows, &reduced, rng, start_points, max_points) {
        Image::FullRank => Image64::FullRank,
        Image::Unstable => Image64::Unstable,
        Image::Kernel(img, points) => Image64::Kernel(KernelImage {
            prime: P,
            pivots: img.pivots.clone(),
            free: img.free,
            entries: img.entries.iter().map(|e| e.iter().map(|c| c.value()).collect()).collect(),
            points,
        }),
    }
}

fn image_mod(
    which: usize,
    shape: Shape,
    rows: &[i64],
    compressed: &HashMap<i64, (i64, Vec<Integer>)>,
    rng: &mut ChaCha8Rng,
    start_points: usize,
    max_points: usize,
) -> Image64 {
    macro_rules! dispatch {
        ($($i:literal)*) => {
            match which {
                $($i => image_for::<{ PRIMES[$i] }>(shape, rows, compressed, rng, start_points, max_points),)*
                _ => unreachable!(),
            }
        };
    }
    dispatch!(0 1 2 3 4 5 6 7)
}

/// CRT state for every coefficient of every kernel entry.
struct Accumulated {
    profile: Profile,
    /// `delta + 1`, the number of `M`-columns per `L`-power.
    width: usize,
    entries: Vec<Vec<Crt>>,
}

impl Accumulated {
    fn new(img: &KernelImage, width: usize) -> Self {
        let entries = img.entries.iter().map(|e| e.iter().map(|&r| Crt::new(r, img.prime)).collect()).collect();
        Accumulated { profile: img.profile(), width, entries }
    }

    fn push(&mut self, img: &KernelImage) {
        for (acc, e) in self.entries.iter_mut().zip(&img.entries) {
            for (c, &r) in acc.iter_mut().zip(e) {
                c.push(r, img.prime);
            }
        }
    }

    /// The integer operator, if every coefficient has a rational lift.
    fn lift(&self, g: i64, stride: i64) -> Option<QOperator<IntPoly>> {
        let mut rats = Vec::new();
        let mut den = Integer::one();
        for e in &self.entries {
            let mut row = Vec::with_capacity(e.len());
            for c in e {
                let (a, b) = c.rational()?;
                den = den.lcm(&b);
                row.push((a, b));
            }
            rats.push(row);
        }
        let mut coeffs: BTreeMap<i32, IntPoly> = BTreeMap::new();
        for (c, row) in rats.iter().enumerate() {
            let (i, j) = (c / self.width, c % self.width);
            let slot = coeffs.entry(i as i32).or_insert_with(IntPoly::zero);
            for (k, (a, b)) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let e = exps(&[(Var::T, (g * k as i64) as i32), (Var::M, (stride * j as i64) as i32)]);
                slot.add_term(e, a * (&den / b));
            }
        }
        Some(QOperator::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests;
