use super::*;
use crate::qtorus::quantum_integer;

fn term(c: i64, t: i32, m: i32) -> IntPoly {
    IntPoly::term(c, &[(Var::T, t), (Var::M, m)])
}

fn op(terms: &[(i64, i32, i32, i32)]) -> QOperator<IntPoly> {
    let mut by_l: BTreeMap<i32, IntPoly> = BTreeMap::new();
    for &(c, t, m, l) in terms {
        let e = by_l.entry(l).or_insert_with(IntPoly::zero);
        *e = &*e + &term(c, t, m);
    }
    QOperator::from_coeffs(by_l)
}

fn qint_values(range: std::ops::RangeInclusive<i64>) -> Vec<(i64, TPoly<Integer>)> {
    range.map(|n| (n, quantum_integer(n))).collect()
}

fn cfg() -> GuessConfig {
    GuessConfig { margin: 2, holdout: 3, ..GuessConfig::default() }
}

#[test]
fn quantum_integers_order_one() {
    let got = guess_recurrence(&qint_values(1..=12), 1, 2, &cfg()).unwrap().unwrap();
    let want = op(&[(1, 0, 2, 1), (-1, 0, 0, 1), (-1, 2, 2, 0), (1, -2, 0, 0)]);
    assert_eq!(got, want);
    let seq = LaurentSequence::<Integer>::quantum_integer();
    assert!(got.annihilates(&seq, 1, 20).unwrap());
}

#[test]
fn constant_sequence() {
    let values: Vec<_> = (0..8).map(|n| (n, TPoly::<Integer>::one())).collect();
    let got = guess_recurrence(&values, 1, 0, &cfg()).unwrap().unwrap();
    assert_eq!(got, op(&[(1, 0, 0, 1), (-1, 0, 0, 0)]));
}

#[test]
fn no_order_zero_annihilator() {
    assert_eq!(guess_recurrence(&qint_values(1..=12), 0, 2, &cfg()).unwrap(), None);
    // Too small an M-degree at order one.
    assert_eq!(guess_recurrence(&qint_values(1..=12), 1, 1, &cfg()).unwrap(), None);
}

#[test]
fn undersupply_and_zero_window() {
    let err = guess_recurrence(&qint_values(1..=6), 1, 2, &cfg()).unwrap_err();
    assert!(matches!(err, GuessError::Undersupply { needed: 11, have: 5, .. }));
    let zeros: Vec<_> = (0..20).map(|n| (n, TPoly::<Integer>::zero())).collect();
    assert_eq!(guess_recurrence(&zeros, 1, 1, &cfg()).unwrap_err(), GuessError::ZeroWindow);
    let bad = GuessConfig { holdout: 2, ..cfg() };
    assert!(matches!(guess_recurrence(&qint_values(1..=12), 1, 2, &bad), Err(GuessError::Config(_))));
}

#[test]
fn holdout_catches_a_late_break() {
    // [n] up to 11, then garbage at the end: the solve rows agree, the holdout does not.
    let mut values = qint_values(1..=11);
    values.push((12, quantum_integer(12) + TPoly::one()));
    assert_eq!(guess_recurrence(&values, 1, 2, &cfg()).unwrap(), None);
}

#[test]
fn minimal_recurrence_of_the_unknot() {
    let seq = LaurentSequence::<Integer>::quantum_integer();
    let g = minimal_recurrence(&seq, &GuessConfig { start: 1, ..cfg() }).unwrap();
    assert_eq!((g.d, g.delta), (1, 2));
    assert_eq!(g.searched.first(), Some(&(0, 0)));
    assert_eq!(g.searched.len(), 31 + 3);
}

#[test]
fn caps_exhausted_carries_region() {
    let seq = LaurentSequence::<Integer>::quantum_integer();
    let c = GuessConfig { start: 1, d_cap: 1, delta_cap: 1, ..cfg() };
    assert_eq!(minimal_recurrence(&seq, &c).unwrap_err(), GuessError::CapsExhausted { d_cap: 1, delta_cap: 1 });
}

#[test]
fn disjoint_schedules_agree() {
    let values = qint_values(-3..=14);
    let a = guess_recurrence(&values, 1, 3, &cfg()).unwrap().unwrap();
    let b = guess_recurrence(&values, 1, 3, &GuessConfig { seed: 99, prime_offset: 4, ..cfg() }).unwrap().unwrap();
    assert_eq!(a, b);
}

#[test]
fn strided_search() {
    // f(n) = t^{4n²} satisfies f(n+1) = t^4 M^4 f(n), so stride 4 finds it at delta 1.
    let values: Vec<_> = (0..12).map(|n| (n, TPoly::monomial(Integer::one(), 4 * n * n))).collect();
    let c = GuessConfig { m_stride: 4, ..cfg() };
    let got = guess_recurrence(&values, 1, 1, &c).unwrap().unwrap();
    assert_eq!(got, op(&[(1, -2, 0, 1), (-1, 2, 4, 0)]));
}

#[test]
fn normalisation_is_idempotent() {
    let a = op(&[(-6, 3, 2, 2), (4, 5, 3, 0)]);
    let n = normalize_operator(&a);
    assert_eq!(n, op(&[(3, -1, 0, 2), (-2, 1, 1, 0)]));
    assert_eq!(normalize_operator(&n), n);
}
