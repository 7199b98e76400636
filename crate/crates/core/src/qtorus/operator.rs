use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;

use super::sequence::{LaurentSequence, SequenceError};
use super::QTorusError;
use crate::poly::{exps, MultiLaurent, TPoly, Var};
use crate::scalar::Ring;

/// Coefficients an operator can carry: anything where `M ↦ t^{2k}M` makes sense.
pub trait TorusCoeff: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// The substitution `M ↦ t^{2k} M`.
    fn q_shift(&self, k: i32) -> Self;
}

impl<C: Ring> TorusCoeff for MultiLaurent<C> {
    fn zero() -> Self {
        MultiLaurent::zero()
    }
    fn one() -> Self {
        MultiLaurent::one()
    }
    fn is_zero(&self) -> bool {
        MultiLaurent::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn q_shift(&self, k: i32) -> Self {
        if k == 0 {
            return self.clone();
        }
        self.map_monomials(|e| {
            let mut e = *e;
            e[Var::T.idx()] += 2 * k * e[Var::M.idx()];
            e
        })
    }
}

/// `Σ c_i · L^i` with every coefficient written to the left of its L-power.
#[derive(Clone, PartialEq)]
pub struct QOperator<K> {
    coeffs: BTreeMap<i32, K>,
}

impl<K: TorusCoeff> QOperator<K> {
    pub fn zero() -> Self {
        QOperator { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::term(K::one(), 0)
    }

    /// `c · L^k`.
    pub fn term(c: K, k: i32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        QOperator { coeffs }
    }

    pub fn l_power(k: i32) -> Self {
        Self::term(K::one(), k)
    }

    pub fn from_coeffs<I: IntoIterator<Item = (i32, K)>>(it: I) -> Self {
        let mut op = Self::zero();
        for (k, c) in it {
            op.add_term(k, c);
        }
        op
    }

    fn add_term(&mut self, k: i32, c: K) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(k).or_insert_with(K::zero);
        *slot = slot.add(&c);
        if slot.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &BTreeMap<i32, K> {
        &self.coeffs
    }

    pub fn coeff(&self, k: i32) -> K {
        self.coeffs.get(&k).cloned().unwrap_or_else(K::zero)
    }

    /// `(min, max)` L-exponent.
    pub fn l_bounds(&self) -> Option<(i32, i32)> {
        Some((*self.coeffs.keys().next()?, *self.coeffs.keys().next_back()?))
    }

    pub fn l_degree(&self) -> Option<i32> {
        self.l_bounds().map(|b| b.1)
    }

    /// Multiply on the right by `L^k`, which leaves coefficients untouched.
    pub fn shift_l(&self, k: i32) -> Self {
        QOperator { coeffs: self.coeffs.iter().map(|(i, c)| (i + k, c.clone())).collect() }
    }

    pub fn map_coeffs<K2: TorusCoeff>(&self, f: impl Fn(&K) -> K2) -> QOperator<K2> {
        QOperator::from_coeffs(self.coeffs.iter().map(|(k, c)| (*k, f(c))))
    }

    /// Normal-form product: `a(M)L^k · b(M)L^l = a(M) b(t^{2k}M) L^{k+l}`.
    pub fn op_mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (k, a) in &self.coeffs {
            for (l, b) in &other.coeffs {
                out.add_term(k + l, a.mul(&b.q_shift(*k)));
            }
        }
        out
    }
}

impl<C: Ring> QOperator<MultiLaurent<C>> {
    /// `c(t, M)` as an operator of L-degree 0.
    pub fn coefficient(c: MultiLaurent<C>) -> Self {
        Self::term(c, 0)
    }

    pub fn m_power(k: i32) -> Self {
        Self::coefficient(MultiLaurent::term(1, &[(Var::M, k)]))
    }

    /// Read a commutative polynomial in `t, M, L` as the operator with every
    /// M to the left of every L.
    pub fn from_poly(p: &MultiLaurent<C>) -> Result<Self, QTorusError> {
        for v in [Var::Lambda, Var::Z] {
            if p.involves(v) {
                return Err(QTorusError::UnexpectedVariable(v));
            }
        }
        Ok(QOperator { coeffs: p.by_power(Var::L).into_iter().filter(|(_, c)| !c.is_zero()).collect() })
    }

    /// Inverse of [`from_poly`](Self::from_poly).
    pub fn to_poly(&self) -> MultiLaurent<C> {
        MultiLaurent::from_by_power(Var::L, &self.coeffs)
    }

    /// The ε-image `t = −1`, a commutative polynomial in `M, L`.
    pub fn epsilon(&self) -> MultiLaurent<C> {
        self.to_poly().epsilon()
    }

    /// `σ(M^k L^l) = M^{-k} L^{-l}`, extended linearly over `ℤ[t^{±1}]`.
    pub fn sigma(&self) -> Self {
        QOperator::from_coeffs(self.coeffs.iter().map(|(l, c)| {
            (
                -l,
                c.map_monomials(|e| {
                    let mut e = *e;
                    e[Var::M.idx()] = -e[Var::M.idx()];
                    e
                }),
            )
        }))
    }

    /// `M^k L^{2l} ↦ (t²M²)^k L^l`; rejects odd L-powers.
    pub fn halve(&self) -> Result<Self, QTorusError> {
        if let Some(k) = self.coeffs.keys().find(|k| k.is_odd()) {
            return Err(QTorusError::OddLPower(*k));
        }
        Ok(QOperator::from_coeffs(self.coeffs.iter().map(|(l, c)| {
            (
                l / 2,
                c.map_monomials(|e| {
                    let mut e = *e;
                    let k = e[Var::M.idx()];
                    e[Var::T.idx()] += 2 * k;
                    e[Var::M.idx()] = 2 * k;
                    e
                }),
            )
        })))
    }

    /// `(Σ c_i L^i f)(n) = Σ c_i(t, t^{2n}) f(n+i)`.
    pub fn apply(&self, f: &LaurentSequence<C>, n: i64) -> Result<TPoly<C>, SequenceError> {
        let mut out = TPoly::zero();
        for (i, c) in &self.coeffs {
            let v = f.get(n + *i as i64)?;
            // c(t, t^{2n}) as one polynomial, then a single product.
            let a = TPoly::from_terms(
                c.terms().map(|(e, x)| (e[Var::T.idx()] as i64 + 2 * n * e[Var::M.idx()] as i64, x.clone())),
            );
            out = &out + &(&a * &*v);
        }
        Ok(out)
    }

    /// True iff `apply(self, f, n) = 0` for every `n` in `n_lo..=n_hi`.
    pub fn annihilates(&self, f: &LaurentSequence<C>, n_lo: i64, n_hi: i64) -> Result<bool, SequenceError> {
        for n in n_lo..=n_hi {
            if !self.apply(f, n)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// One `L^i : <poly in t,M>` line per nonzero coefficient.
    pub fn to_text(&self) -> String
    where
        C: fmt::Display,
    {
        self.coeffs.iter().map(|(i, c)| format!("L^{i} : {c}\n")).collect()
    }
}

/// `Υ(λ_{k,l}) = (−1)^{k+l} t^{kl} (M^k L^l + M^{-k} L^{-l})`.
pub fn upsilon<C: Ring>(k: i32, l: i32) -> Result<QOperator<MultiLaurent<C>>, QTorusError> {
    if k.gcd(&l) != 1 {
        return Err(QTorusError::NotCoprime(k, l));
    }
    let sign = if (k + l).is_even() { 1 } else { -1 };
    let c = |mk: i32| MultiLaurent::monomial(C::from_i64(sign), exps(&[(Var::T, k * l), (Var::M, mk)]));
    Ok(QOperator::term(c(k), l).add_op(&QOperator::term(c(-k), -l)))
}

impl<K: TorusCoeff> QOperator<K> {
    fn add_op(mut self, other: &Self) -> Self {
        for (k, c) in &other.coeffs {
            self.add_term(*k, c.clone());
        }
        self
    }
}

impl<'a, K: TorusCoeff> Add<&'a QOperator<K>> for &'a QOperator<K> {
    type Output = QOperator<K>;
    fn add(self, rhs: &'a QOperator<K>) -> QOperator<K> {
        self.clone().add_op(rhs)
    }
}

impl<'a, K: TorusCoeff> Sub<&'a QOperator<K>> for &'a QOperator<K> {
    type Output = QOperator<K>;
    fn sub(self, rhs: &'a QOperator<K>) -> QOperator<K> {
        self.clone().add_op(&-rhs)
    }
}

impl<K: TorusCoeff> Neg for &QOperator<K> {
    type Output = QOperator<K>;
    fn neg(self) -> QOperator<K> {
        QOperator { coeffs: self.coeffs.iter().map(|(k, c)| (*k, c.neg())).collect() }
    }
}

impl<'a, K: TorusCoeff> Mul<&'a QOperator<K>> for &'a QOperator<K> {
    type Output = QOperator<K>;
    fn mul(self, rhs: &'a QOperator<K>) -> QOperator<K> {
        self.op_mul(rhs)
    }
}

impl<K: TorusCoeff> fmt::Debug for QOperator<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.coeffs.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c:?})*L^{k}")?;
        }
        Ok(())
    }
}

/// Free-function form of [`QOperator::op_mul`].
pub fn op_mul<K: TorusCoeff>(a: &QOperator<K>, b: &QOperator<K>) -> QOperator<K> {
    a.op_mul(b)
}

/// Free-function form of [`QOperator::sigma`].
pub fn sigma<C: Ring>(op: &QOperator<MultiLaurent<C>>) -> QOperator<MultiLaurent<C>> {
    op.sigma()
}

/// Free-function form of [`QOperator::halve`].
pub fn operator_halving<C: Ring>(op: &QOperator<MultiLaurent<C>>) -> Result<QOperator<MultiLaurent<C>>, QTorusError> {
    op.halve()
}
