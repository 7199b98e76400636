//! High colors through the cyclotomic expansion of twist knots:
//!
//! `J(N) / [N] = Σ_{n<N} c_n ∏_{j=1}^{n} (1 − q^{j−N})(1 − q^{j+N})`, `q = t^{∓4}`,
//!
//! where for `p = −m`
//!
//! `c_n = q^n Σ_{k=0}^{n} (−1)^k q^{k(k+1)p + k(k−1)/2} (1 − q^{2k+1}) [2n+1 choose n−k]_q / ∏_{j=n+1}^{2n+1} (1 − q^j)`.
//!
//! The `c_n` do not depend on `N` and are memoised per knot.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::JonesError;
use crate::poly::TPoly;
use crate::qtorus::{quantum_integer, LaurentSequence};
use crate::Integer;

/// `q = t^{∓4}` for `m ≶ 0`. The cyclotomic family runs through both
/// chiralities of our `K_m`, and this choice matches the diagrams whose crossing
/// signs are `(1−2m, 0)` for `m < 0` and `(2m, 2)` for `m > 0`.
fn q_exp(m: i64) -> i64 {
    if m > 0 {
        4
    } else {
        -4
    }
}

type P = TPoly<Integer>;

fn int(x: i64) -> Integer {
    Integer::from(x)
}

/// `1 − q^a`.
fn one_minus(a: i64) -> P {
    TPoly::from_terms([(0, int(1)), (a, int(-1))])
}

struct Table {
    p: i64,
    c: Vec<Arc<P>>,
    /// Row `N` of the q-Pascal triangle, `row[j] = [N choose j]_q`.
    row: Vec<P>,
}

impl Table {
    fn new(p: i64) -> Self {
        Table { p, c: Vec::new(), row: vec![P::one()] }
    }

    fn advance_row(&mut self) {
        let n = self.row.len();
        let mut next = Vec::with_capacity(n + 1);
        for j in 0..=n {
            let mut v = if j > 0 { self.row[j - 1].clone() } else { P::zero() };
            if j < n {
                v.add_scaled(&self.row[j], &int(1), j as i64);
            }
            next.push(v);
        }
        self.row = next;
    }

    fn general(&mut self, n: usize) -> P {
        while self.row.len() < 2 * n + 2 {
            self.advance_row();
        }
        let p = self.p;
        let mut s = P::zero();
        for k in 0..=n as i64 {
            let sign = if k % 2 == 0 { int(1) } else { int(-1) };
            let e = k * (k + 1) * p + k * (k - 1) / 2;
            let term = self.row[n - k as usize].mul_sparse(&[(e, sign.clone()), (e + 2 * k + 1, -sign)]);
            s = &s + &term;
        }
        for j in n + 1..=2 * n + 1 {
            s = s.div_exact_unit(&one_minus(j as i64)).expect("cyclotomic coefficient is a polynomial");
        }
        s.shift(n as i64)
    }

    fn coefficient(&mut self, n: usize) -> P {
        let n_i = n as i64;
        match self.p {
            // The inner sum telescopes for the trefoil, figure eight and unknot.
            1 => P::monomial(int(1), n_i),
            -1 => P::monomial(if n % 2 == 0 { int(1) } else { int(-1) }, -n_i * (n_i + 1) / 2),
            0 => {
                if n == 0 {
                    P::one()
                } else {
                    P::zero()
                }
            }
            _ => self.general(n),
        }
    }

    fn extend(&mut self, len: usize) {
        while self.c.len() < len {
            let n = self.c.len();
            let c = self.coefficient(n);
            self.c.push(Arc::new(c));
        }
    }
}

fn table(p: i64) -> Arc<Mutex<Table>> {
    static TABLES: OnceLock<Mutex<HashMap<i64, Arc<Mutex<Table>>>>> = OnceLock::new();
    let mut all = TABLES.get_or_init(Default::default).lock().unwrap();
    all.entry(p).or_insert_with(|| Arc::new(Mutex::new(Table::new(p)))).clone()
}

fn coefficients(p: i64, len: usize) -> Vec<Arc<P>> {
    let t = table(p);
    let mut t = t.lock().unwrap();
    t.extend(len);
    t.c[..len].to_vec()
}

/// `J(N)/[N]` as a polynomial in `q`.
fn normalized_q(p: i64, big_n: i64) -> P {
    let c = coefficients(p, big_n as usize);
    let mut acc = (*c[big_n as usize - 1]).clone();
    for n in (1..big_n).rev() {
        let a = [(0, int(1)), (n - big_n, int(-1)), (n + big_n, int(-1)), (2 * n, int(1))];
        acc = acc.mul_sparse(&a);
        acc.add_scaled(&c[n as usize - 1], &int(1), 0);
    }
    acc
}

/// `J_{K_m}(n)` for any color `n ≥ 1`.
pub fn colored_jones_fast(m: i64, n: i64) -> Result<P, JonesError> {
    if m == 0 {
        return Err(JonesError::ZeroTwist);
    }
    if n < 1 {
        return Err(JonesError::BadColor(n));
    }
    Ok(&normalized_q(-m, n).stretch(q_exp(m)) * &quantum_integer(n))
}

/// The odd sequence `n ↦ J_{K_m}(n)`, evaluated by [`colored_jones_fast`].
pub fn twist_sequence(m: i64) -> Result<LaurentSequence<Integer>, JonesError> {
    if m == 0 {
        return Err(JonesError::ZeroTwist);
    }
    Ok(LaurentSequence::odd(format!("twist({m})"), move |n| colored_jones_fast(m, n).map_err(|e| e.to_string())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn telescoped_coefficients_match_general_sum() {
        for p in [-1, 0, 1] {
            let mut t = Table::new(p);
            for n in 0..10 {
                assert_eq!(t.general(n), t.coefficient(n), "p={p} n={n}");
            }
        }
    }

    #[test]
    fn trefoil_jones() {
        // q + q³ − q⁴ times [2].
        let v = TPoly::from_terms([(1, int(1)), (3, int(1)), (4, int(-1))]);
        assert_eq!(normalized_q(1, 2), v);
        assert!(colored_jones_fast(-1, 1).unwrap() == P::one());
    }

    #[test]
    fn unit_value_at_color_one() {
        for m in [-3, -2, -1, 1, 2, 3] {
            assert_eq!(colored_jones_fast(m, 1).unwrap(), P::one());
        }
        assert_eq!(colored_jones_fast(0, 3).unwrap_err(), JonesError::ZeroTwist);
    }

    #[test]
    fn sequence_is_odd() {
        let s = twist_sequence(2).unwrap();
        assert!(s.get(0).unwrap().is_zero());
        assert_eq!(*s.get(-3).unwrap(), -(*s.get(3).unwrap()).clone());
    }
}
