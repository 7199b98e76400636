use knotaj::apoly::APoly;
use knotaj::guess::GuessConfig;
use knotaj::harness::*;
use knotaj::poly::Var;
use knotaj::IntPoly;
use proptest::prelude::*;

fn poly(terms: &[(i64, i32, i32)]) -> IntPoly {
    // (coeff, M-exp, L-exp)
    terms.iter().fold(IntPoly::zero(), |acc, &(c, m, l)| &acc + &IntPoly::term(c, &[(Var::M, m), (Var::L, l)]))
}

fn apoly(p: IntPoly) -> APoly {
    APoly::new(p).unwrap()
}

#[test]
fn m_equiv_examples() {
    let f = poly(&[(1, 0, 2), (2, 1, 1), (-1, 4, 0)]);
    let m3 = poly(&[(1, 3, 0), (1, 0, 0)]);
    assert!(m_equiv(&apoly(f.clone()), &apoly(&f * &m3)).holds_directly());
    let lm = apoly(poly(&[(1, 0, 1), (-1, 0, 0)]));
    let lp = apoly(poly(&[(1, 0, 1), (1, 0, 0)]));
    assert!(!m_equiv(&lm, &lp).holds());
}

#[test]
fn theorem_condition_examples() {
    assert!(theorem_condition(1, 9).unwrap());
    assert!(!theorem_condition(1, 7).unwrap());
    assert!(theorem_condition(-1, -1).unwrap());
    assert!(theorem_condition(2, 2).is_err());
}

#[test]
fn not_applicable_and_exploratory() {
    let rep = verify_aj(1, 7, &VerifyConfig::default()).unwrap();
    assert_eq!(rep.verdict, Verdict::NotApplicable);
    assert!(rep.verdict.is_success());

    // Outside the region with exploration on, a small cap is still reported
    // as NOT_APPLICABLE, with the would-be outcome recorded.
    let mut cfg = VerifyConfig { explore: true, ..Default::default() };
    cfg.guess.d_cap = 1;
    cfg.guess.delta_cap = 2;
    let rep = verify_aj(1, 7, &cfg).unwrap();
    assert_eq!(rep.verdict, Verdict::NotApplicable);
    assert_eq!(rep.exploratory_outcome, Some(Verdict::CapsExhausted));
}

#[test]
fn reports_are_deterministic_and_versioned() {
    let mut cfg = VerifyConfig::default();
    cfg.guess.d_cap = 1;
    cfg.guess.delta_cap = 4;
    let a = verify_aj(-1, -1, &cfg).unwrap();
    let b = verify_aj(-1, -1, &cfg).unwrap();
    assert_eq!(a.verdict, Verdict::CapsExhausted);
    assert!(!a.verdict.is_success());
    assert_eq!(a.content_hash(), b.content_hash());
    let json: serde_json::Value = serde_json::from_str(&a.to_json()).unwrap();
    assert_eq!(json["schema"], REPORT_SCHEMA);
    assert_eq!(json["verdict"], "CAPS_EXHAUSTED");
    assert_eq!(json["caps"]["searched"], 10);
    assert!(a.digest().contains("CAPS_EXHAUSTED"));
}

#[test]
fn unknot_control_specialises_to_l_minus_one() {
    let rep = verify_unknot(&GuessConfig { start: 1, ..Default::default() }).unwrap();
    assert_eq!((rep.order, rep.delta), (1, 2));
    assert!(rep.matches_l_minus_one);
}

fn small_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec((-3i64..=3, 0i32..4, 0i32..3), 1..5)
        .prop_map(|t| poly(&t))
        .prop_filter("nonzero", |p| !p.is_zero())
}

fn m_only() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec((-3i64..=3, 0i32..4), 1..3)
        .prop_map(|t| t.iter().fold(IntPoly::zero(), |acc, &(c, m)| &acc + &IntPoly::term(c, &[(Var::M, m)])))
        .prop_filter("nonzero", |p| !p.is_zero())
}

fn unit() -> impl Strategy<Value = IntPoly> {
    (-3i32..=3, -3i32..=3, prop::bool::ANY)
        .prop_map(|(m, l, neg)| IntPoly::term(if neg { -1 } else { 1 }, &[(Var::M, m), (Var::L, l)]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn m_equiv_is_an_equivalence(f in small_poly(), g in small_poly(), h1 in m_only(), h2 in m_only(), u in unit()) {
        let fa = apoly(f.clone());
        prop_assert!(m_equiv(&fa, &fa).holds_directly());

        let ga = apoly(g);
        prop_assert_eq!(m_equiv(&fa, &ga).holds(), m_equiv(&ga, &fa).holds());

        let f1 = apoly(&(&f * &h1) * &u);
        let f2 = apoly(&f1.poly().clone() * &h2);
        prop_assert!(m_equiv(&fa, &f1).holds_directly());
        prop_assert!(m_equiv(&f1, &f2).holds_directly());
        prop_assert!(m_equiv(&fa, &f2).holds_directly());
        prop_assert!(m_equiv(&f2, &fa).holds_directly());
    }

    #[test]
    fn mirrors_are_found(f in small_poly(), h in m_only()) {
        let fa = apoly(f);
        for c in Convention::ALL {
            let g = apoly(c.apply(&fa).poly() * &h);
            let eq = m_equiv(&fa, &g);
            prop_assert!(eq.holds());
            // Whatever variant matched, applying it restores a direct match.
            let back = eq.convention.unwrap().apply(&g);
            prop_assert!(m_equiv(&fa, &back).holds_directly());
        }
    }

    #[test]
    fn condition_matches_thresholds(m in prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3]), k in -30i64..30) {
        let r = 2 * k + 1;
        prop_assert_eq!(theorem_condition(m, r).unwrap(), threshold_condition(m, r).unwrap());
    }
}
