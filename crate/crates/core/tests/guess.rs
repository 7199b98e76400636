use std::collections::BTreeMap;

use knotaj::guess::*;
use knotaj::poly::{to_rational, TPoly, Var};
use knotaj::qtorus::{left_divide, quantum_integer, LaurentSequence, QOperator};
use knotaj::{IntPoly, Integer};
use num_traits::One;
use proptest::prelude::*;

fn op(terms: &[(i64, i32, i32, i32)]) -> QOperator<IntPoly> {
    // (coeff, t-exp, M-exp, L-exp)
    let mut by_l: BTreeMap<i32, IntPoly> = BTreeMap::new();
    for &(c, t, m, l) in terms {
        let e = by_l.entry(l).or_insert_with(IntPoly::zero);
        *e = &*e + &IntPoly::term(c, &[(Var::T, t), (Var::M, m)]);
    }
    QOperator::from_coeffs(by_l)
}

fn cfg() -> GuessConfig {
    GuessConfig { start: 1, ..GuessConfig::default() }
}

#[test]
fn quantum_integers_minimal_and_dividing() {
    let seq = LaurentSequence::<Integer>::quantum_integer();
    let g = minimal_recurrence(&seq, &cfg()).unwrap();
    assert_eq!(g.op.l_degree(), Some(1));

    // Nothing of smaller order within the caps.
    let values: Vec<_> = (1..=80).map(|n| (n, quantum_integer::<Integer>(n))).collect();
    assert_eq!(guess_recurrence(&values, 0, cfg().delta_cap, &cfg()).unwrap(), None);

    // [n+2] = (t² + t⁻²)[n+1] − [n] is a known annihilator; the minimal one
    // divides it on the right.
    let known = op(&[(1, 0, 0, 2), (-1, 2, 0, 1), (-1, -2, 0, 1), (1, 0, 0, 0)]);
    assert!(known.annihilates(&seq, 1, 20).unwrap());
    let to_q = |o: &QOperator<IntPoly>| o.map_coeffs(to_rational);
    let (_, rem) = left_divide(&to_q(&known), &to_q(&g.op)).unwrap();
    assert!(rem.is_zero());
}

#[test]
fn trefoil_is_order_two() {
    let seq = knotaj::jones::twist_sequence(-1).unwrap();
    let c = GuessConfig { d_cap: 2, delta_cap: 12, ..cfg() };
    let g = minimal_recurrence(&seq, &c).unwrap();
    assert_eq!(g.d, 2);
    assert!(g.op.annihilates(&seq, 1, 60).unwrap());
    assert_eq!(g.searched.len(), 2 * 13 + g.delta + 1);

    let values: Vec<_> = (1..=60).map(|n| (n, (*seq.get(n).unwrap()).clone())).collect();
    assert_eq!(guess_recurrence(&values, 1, 12, &c).unwrap(), None);
    // ε sends the annihilator to a multiple of L − 1.
    let at_one = g.op.epsilon().by_power(Var::L).values().fold(IntPoly::zero(), |acc, c| &acc + c);
    assert!(at_one.is_zero());
}

#[test]
fn odd_colors_use_the_m_squared_stride() {
    // The unknot's 𝕁(n) = [2n+1] only sees M².
    let seq = LaurentSequence::<Integer>::quantum_integer().reindex(2, 1);
    let c = GuessConfig { start: 0, m_stride: 2, ..GuessConfig::default() };
    let g = minimal_recurrence(&seq, &c).unwrap();
    assert_eq!((g.d, g.delta), (1, 2));
    assert!(g.op.annihilates(&seq, 0, 30).unwrap());
    for c in g.op.coeffs().values() {
        assert!(c.terms().all(|(e, _)| e[Var::M.idx()] % 2 == 0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    // f(n) = t^{2a n² + b n} has f(n+1) = t^{2a+b} M^{2a} f(n).
    #[test]
    fn first_order_sequences(a in 0i64..3, b in -3i64..=3, seed in 0u64..1000) {
        let values: Vec<_> = (0..40).map(|n| (n, TPoly::monomial(Integer::one(), 2 * a * n * n + b * n))).collect();
        let seq = LaurentSequence::from_values("mono", values);
        let c = GuessConfig { start: 0, seed, ..GuessConfig::default() };
        let g = minimal_recurrence(&seq, &c).unwrap();
        prop_assert_eq!((g.d, g.delta), (1, 2 * a as usize));
        let want = normalize_operator(&op(&[(1, 0, 0, 1), (-1, (2 * a + b) as i32, 2 * a as i32, 0)]));
        prop_assert_eq!(g.op, want);
    }
}
