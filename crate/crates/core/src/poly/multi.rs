use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::tpoly::TPoly;
use super::PolyError;
use crate::scalar::{DivExact, Field, Ring};

/// The fixed global variable order. Exponent vectors index by `Var as usize`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    T,
    M,
    L,
    Lambda,
    Z,
}

pub const NVARS: usize = 5;

pub type Exps = [i32; NVARS];

impl Var {
    pub const ALL: [Var; NVARS] = [Var::T, Var::M, Var::L, Var::Lambda, Var::Z];

    pub fn idx(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::T => "t",
            Var::M => "M",
            Var::L => "L",
            Var::Lambda => "λ",
            Var::Z => "z",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn exps(pairs: &[(Var, i32)]) -> Exps {
    let mut e = [0; NVARS];
    for &(v, k) in pairs {
        e[v.idx()] += k;
    }
    e
}

fn add_exps(a: &Exps, b: &Exps) -> Exps {
    std::array::from_fn(|i| a[i] + b[i])
}

fn sub_exps(a: &Exps, b: &Exps) -> Exps {
    std::array::from_fn(|i| a[i] - b[i])
}

/// Sparse Laurent polynomial in `t, M, L, λ, z`. No stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiLaurent<C> {
    terms: BTreeMap<Exps, C>,
}

impl<C: Ring> MultiLaurent<C> {
    pub fn zero() -> Self {
        MultiLaurent { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, [0; NVARS])
    }

    pub fn from_i64(c: i64) -> Self {
        Self::constant(C::from_i64(c))
    }

    pub fn monomial(c: C, e: Exps) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    /// `c · Π v^k`.
    pub fn term(c: i64, pairs: &[(Var, i32)]) -> Self {
        Self::monomial(C::from_i64(c), exps(pairs))
    }

    pub fn var(v: Var) -> Self {
        Self::term(1, &[(v, 1)])
    }

    pub fn from_terms<I: IntoIterator<Item = (Exps, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: Exps, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of `(e_t, e_M, e_L, e_λ, e_z)`.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exps, &C)> + '_ {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Exps, C)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, e: &Exps) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    /// Lexicographically largest term.
    pub fn leading(&self) -> Option<(&Exps, &C)> {
        self.terms.iter().next_back()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| *e == [0; NVARS])
    }

    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&[0; NVARS]).cloned(),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn involves(&self, v: Var) -> bool {
        self.terms.keys().any(|e| e[v.idx()] != 0)
    }

    /// Variables with a nonzero exponent somewhere.
    pub fn variables(&self) -> Vec<Var> {
        Var::ALL.into_iter().filter(|v| self.involves(*v)).collect()
    }

    /// `(min, max)` exponent of `v`, `None` for zero.
    pub fn degree_bounds(&self, v: Var) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|e| e[v.idx()]);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), x| (lo.min(x), hi.max(x))))
    }

    pub fn degree(&self, v: Var) -> Option<i32> {
        self.degree_bounds(v).map(|b| b.1)
    }

    /// Componentwise minimum exponent over the support.
    pub fn min_exps(&self) -> Option<Exps> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        Some(it.fold(first, |acc, e| std::array::from_fn(|i| acc[i].min(e[i]))))
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiLaurent {
            terms: self.terms.iter().map(|(e, x)| (*e, x.mul_ref(c))).filter(|(_, x)| !x.is_zero()).collect(),
        }
    }

    /// Multiply by the monomial with exponents `e`.
    pub fn shift(&self, e: &Exps) -> Self {
        MultiLaurent { terms: self.terms.iter().map(|(k, c)| (add_exps(k, e), c.clone())).collect() }
    }

    pub fn shift_var(&self, v: Var, k: i32) -> Self {
        self.shift(&exps(&[(v, k)]))
    }

    /// Apply a monomial map `e ↦ f(e)`; colliding images are summed.
    pub fn map_monomials(&self, f: impl Fn(&Exps) -> Exps) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (f(e), c.clone())))
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> MultiLaurent<D> {
        MultiLaurent::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    /// Swap the exponent slots of two variables.
    pub fn rename(&self, from: Var, to: Var) -> Self {
        self.map_monomials(|e| {
            let mut e = *e;
            e.swap(from.idx(), to.idx());
            e
        })
    }

    /// Coefficient of `v^k`, as a polynomial in the remaining variables.
    pub fn coeff_of(&self, v: Var, k: i32) -> Self {
        MultiLaurent {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[v.idx()] == k)
                .map(|(e, c)| {
                    let mut e = *e;
                    e[v.idx()] = 0;
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Split into `v`-power → coefficient (in the other variables).
    pub fn by_power(&self, v: Var) -> BTreeMap<i32, Self> {
        let mut out: BTreeMap<i32, Self> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = *e;
            rest[v.idx()] = 0;
            out.entry(e[v.idx()]).or_insert_with(Self::zero).add_term(rest, c.clone());
        }
        out
    }

    pub fn from_by_power(v: Var, parts: &BTreeMap<i32, Self>) -> Self {
        let mut out = Self::zero();
        for (k, p) in parts {
            for (e, c) in &p.terms {
                let mut e = *e;
                e[v.idx()] += k;
                out.add_term(e, c.clone());
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// The specialization ε: `t = −1`.
    pub fn epsilon(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| {
            let mut e2 = *e;
            e2[Var::T.idx()] = 0;
            (e2, if e[Var::T.idx()].rem_euclid(2) == 1 { -c.clone() } else { c.clone() })
        }))
    }

    /// View a polynomial in `t` alone as a dense [`TPoly`].
    pub fn to_tpoly(&self) -> Result<TPoly<C>, PolyError> {
        if let Some(v) = self.variables().into_iter().find(|v| *v != Var::T) {
            return Err(PolyError::UnexpectedVariable(v));
        }
        Ok(TPoly::from_terms(self.terms.iter().map(|(e, c)| (e[0] as i64, c.clone()))))
    }

    pub fn from_tpoly(p: &TPoly<C>) -> Self {
        Self::from_terms(p.terms().map(|(e, c)| (exps(&[(Var::T, e as i32)]), c.clone())))
    }

    /// Exact multivariate division in the Laurent ring; `None` if `d` does not divide.
    pub fn div_exact(&self, d: &Self) -> Option<Self>
    where
        C: DivExact,
    {
        let (dl_e, dl_c) = d.leading()?;
        let (dl_e, dl_c) = (*dl_e, dl_c.clone());
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Per variable, degrees add under multiplication, so every quotient
        // exponent lies in a box fixed by the degree bounds of `self` and `d`.
        let lo_box: Exps = std::array::from_fn(|i| {
            let v = Var::ALL[i];
            self.degree_bounds(v).unwrap().0 - d.degree_bounds(v).unwrap().0
        });
        let hi_box: Exps = std::array::from_fn(|i| {
            let v = Var::ALL[i];
            self.degree_bounds(v).unwrap().1 - d.degree_bounds(v).unwrap().1
        });
        let mut rem = self.clone();
        let mut q = Self::zero();
        while let Some((e, c)) = rem.leading() {
            let qe = sub_exps(e, &dl_e);
            if (0..NVARS).any(|i| qe[i] < lo_box[i] || qe[i] > hi_box[i]) {
                return None;
            }
            let qc = c.div_exact(&dl_c)?;
            let step = Self::monomial(qc.clone(), qe);
            rem -= &(&step * d);
            q.add_term(qe, qc);
        }
        Some(q)
    }
}

impl<C: Field> MultiLaurent<C> {
    /// Substitute a nonzero field value for `v`.
    pub fn eval_var(&self, v: Var, x: &C) -> Self {
        let inv = x.inv();
        Self::from_terms(self.terms.iter().map(|(e, c)| {
            let k = e[v.idx()];
            let p = if k >= 0 {
                x.pow_u(k as u64)
            } else {
                inv.as_ref().expect("negative power of zero").pow_u(k.unsigned_abs() as u64)
            };
            let mut e2 = *e;
            e2[v.idx()] = 0;
            (e2, c.mul_ref(&p))
        }))
    }
}

impl<C: Ring> Zero for MultiLaurent<C> {
    fn zero() -> Self {
        MultiLaurent::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Ring> One for MultiLaurent<C> {
    fn one() -> Self {
        MultiLaurent::one()
    }
}

impl<'a, C: Ring> AddAssign<&'a MultiLaurent<C>> for MultiLaurent<C> {
    fn add_assign(&mut self, rhs: &'a MultiLaurent<C>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<'a, C: Ring> SubAssign<&'a MultiLaurent<C>> for MultiLaurent<C> {
    fn sub_assign(&mut self, rhs: &'a MultiLaurent<C>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl<'a, C: Ring> Add<&'a MultiLaurent<C>> for &'a MultiLaurent<C> {
    type Output = MultiLaurent<C>;
    fn add(self, rhs: &'a MultiLaurent<C>) -> MultiLaurent<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a, C: Ring> Sub<&'a MultiLaurent<C>> for &'a MultiLaurent<C> {
    type Output = MultiLaurent<C>;
    fn sub(self, rhs: &'a MultiLaurent<C>) -> MultiLaurent<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a, C: Ring> Mul<&'a MultiLaurent<C>> for &'a MultiLaurent<C> {
    type Output = MultiLaurent<C>;
    fn mul(self, rhs: &'a MultiLaurent<C>) -> MultiLaurent<C> {
        let mut out = MultiLaurent::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(add_exps(ea, eb), ca.mul_ref(cb));
            }
        }
        out
    }
}

impl<C: Ring> Add for MultiLaurent<C> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<C: Ring> Sub for MultiLaurent<C> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<C: Ring> Mul for MultiLaurent<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<C: Ring> Neg for MultiLaurent<C> {
    type Output = Self;
    fn neg(self) -> Self {
        MultiLaurent { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl<C: Ring> Neg for &MultiLaurent<C> {
    type Output = MultiLaurent<C>;
    fn neg(self) -> MultiLaurent<C> {
        -self.clone()
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, e: &Exps) -> Result<bool, fmt::Error> {
    let mut wrote = false;
    for v in Var::ALL {
        let k = e[v.idx()];
        if k == 0 {
            continue;
        }
        if wrote {
            write!(f, "*")?;
        }
        if k == 1 {
            write!(f, "{v}")?;
        } else {
            write!(f, "{v}^{k}")?;
        }
        wrote = true;
    }
    Ok(wrote)
}

impl<C: Ring> MultiLaurent<C> {
    fn write_with(&self, f: &mut fmt::Formatter<'_>, show: impl Fn(&C) -> String) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let s = show(c);
            let (neg, mag) = match s.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, s.as_str()),
            };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = *e == [0; NVARS];
            if mag != "1" || unit {
                write!(f, "{mag}")?;
                if !unit {
                    write!(f, "*")?;
                }
            }
            write_monomial(f, e)?;
        }
        Ok(())
    }
}

/// Human-readable form, highest terms first, e.g. `t^2*M^2 - t^-2`.
impl<C: Ring + fmt::Display> fmt::Display for MultiLaurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, |c| c.to_string())
    }
}

impl<C: Ring> fmt::Debug for MultiLaurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, |c| format!("{c:?}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = MultiLaurent<BigInt>;

    fn t(k: i32) -> P {
        P::term(1, &[(Var::T, k)])
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!((t(2) + t(-2)).epsilon(), P::from_i64(2));
        assert_eq!(P::term(-1, &[(Var::T, 3)]).epsilon(), P::one());
        let f = P::term(1, &[(Var::T, 2), (Var::M, 2)]) - t(-2);
        assert_eq!(f.epsilon(), P::term(1, &[(Var::M, 2)]) - P::one());
    }

    #[test]
    fn zero_terms_never_stored() {
        let f = t(1) - t(1);
        assert!(f.is_zero());
        assert_eq!(f.len(), 0);
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = P::term(1, &[(Var::L, 1)]) - P::one();
        let b = P::term(1, &[(Var::M, 12)]) - P::term(1, &[(Var::L, 1), (Var::T, -3)]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(b.div_exact(&a), None);
    }

    #[test]
    fn display_format() {
        let f = P::term(1, &[(Var::T, 2), (Var::M, 2)]) - t(-2);
        assert_eq!(f.to_string(), "t^2*M^2 - t^-2");
        assert_eq!(P::from_i64(-3).to_string(), "-3");
    }
}
