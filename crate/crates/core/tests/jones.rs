use knotaj::jones::*;
use knotaj::poly::TPoly;
use knotaj::qtorus::{quantum_integer, LaurentSequence};
use knotaj::Integer;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn skein() -> SkeinConfig {
    SkeinConfig::default()
}

/// Exhaustive state sum, independent of the sweeping evaluator.
fn state_sum(d: &PlanarDiagram) -> TPoly<Integer> {
    let k = d.num_crossings();
    let delta = TPoly::from_terms([(2, Integer::from(-1)), (-2, Integer::from(-1))]);
    let mut out = TPoly::zero();
    for mask in 0u64..1 << k {
        let circles = d.state_circles(|i| (mask >> i & 1) as usize);
        let mut p = TPoly::one();
        for _ in 0..circles {
            p = &p * &delta;
        }
        out = &out + &p.shift(k as i64 - 2 * mask.count_ones() as i64);
    }
    out
}

#[test]
fn skein_agrees_with_fast() {
    for (m, top) in [(-1, 4), (1, 4), (-2, 3), (2, 3)] {
        for n in 1..=top {
            let a = colored_jones_skein(m, n, &skein()).unwrap();
            let b = colored_jones_fast(m, n).unwrap();
            assert_eq!(a, b, "m={m} n={n}");
        }
    }
}

#[test]
fn adequate_degree_bounds_match() {
    for m in [-2i64, -1, 1, 2] {
        let stats = twist_knot_diagram(m).unwrap().stats();
        for n in 2..=5 {
            let j = colored_jones_fast(m, n).unwrap();
            let (lo, hi) = j.degree_bounds().unwrap();
            assert_eq!((lo, hi), adequate_degree_bounds(&stats, n), "m={m} n={n}");
        }
    }
}

#[test]
fn bracket_matches_state_sum_on_twist_knots() {
    let cfg = BracketConfig::default();
    for m in [-3i64, -2, -1, 1, 2, 3] {
        let d = twist_knot_diagram(m).unwrap();
        assert_eq!(kauffman_bracket(&d, &cfg).unwrap(), state_sum(&d), "m={m}");
    }
    let d = twist_knot_morse(-1).unwrap().parallel(2).to_pd().unwrap();
    assert_eq!(kauffman_bracket(&d, &cfg).unwrap(), state_sum(&d));
}

#[test]
fn bracket_is_order_independent() {
    let cfg = BracketConfig { width_cap: 64 };
    let d = twist_knot_morse(2).unwrap().parallel(2).to_pd().unwrap();
    let want = kauffman_bracket(&d, &cfg).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..2 {
        let mut order: Vec<usize> = (0..d.num_crossings()).collect();
        order.shuffle(&mut rng);
        assert_eq!(kauffman_bracket_in_order(&d, &order, &cfg).unwrap(), want);
    }
}

#[test]
fn determinants_identify_the_twist_knots() {
    for m in [-3i64, -2, -1, 1, 2, 3] {
        let j2 = colored_jones_fast(m, 2).unwrap();
        let v = j2.div_exact_unit(&quantum_integer(2)).unwrap();
        // V(t) at t⁴ = −1.
        let det: i64 = v
            .terms()
            .map(|(e, c)| {
                let c: i64 = c.try_into().unwrap();
                if (e / 4).rem_euclid(2) == 0 {
                    c
                } else {
                    -c
                }
            })
            .sum();
        assert_eq!(det.abs(), (4 * m + 1).abs());
    }
}

#[test]
fn unknot_quantum_integers() {
    let cfg = SkeinConfig { color_cap: 12, ..skein() };
    let seq = LaurentSequence::<Integer>::quantum_integer();
    for n in 1..=12 {
        let j = colored_jones_morse(&MorseDiagram::unknot(), n, &cfg).unwrap();
        assert_eq!(j, quantum_integer(n));
        assert_eq!(*seq.get(n).unwrap(), j);
    }
}

#[test]
fn second_color_is_minus_bracket_at_zero_framing() {
    for m in [-2i64, -1, 1, 2] {
        let d = twist_knot_diagram(m).unwrap();
        let w = d.writhe();
        let b = kauffman_bracket(&d, &BracketConfig::default()).unwrap();
        // (−t³)^{−w} removes the blackboard framing.
        let sign = if w.rem_euclid(2) == 0 { Integer::from(-1) } else { Integer::from(1) };
        let want = b.scale(&sign).shift(-3 * w);
        assert_eq!(colored_jones_skein(m, 2, &skein()).unwrap(), want);
        assert_eq!(colored_jones_skein(m, 1, &skein()).unwrap(), TPoly::one());
    }
}

#[test]
fn cable_formula_matches_cabled_diagram() {
    let base = twist_knot_morse(-1).unwrap();
    let seq = twist_sequence(-1).unwrap();
    for r in [-1i64, 1, 5, 7] {
        let d = cable2_morse(&base, r).unwrap();
        let direct = colored_jones_morse(&d, 2, &skein()).unwrap();
        assert_eq!(direct, cable_jones(&seq, r, 2).unwrap(), "r={r}");
    }
}

#[test]
fn cable_identity_on_twist_knots() {
    for (m, r) in [(-1i64, -1i64), (-1, 15), (1, 9)] {
        assert!(verify_cable_identity(&twist_sequence(m).unwrap(), r, 5).unwrap());
    }
    assert!(verify_cable_identity(&LaurentSequence::quantum_integer(), 3, 6).unwrap());
}

#[test]
fn cable_degrees() {
    for (m, r) in [(-1i64, -1i64), (1, 9), (-1, -3), (2, 17)] {
        let stats = twist_knot_diagram(m).unwrap().stats();
        let seq = twist_sequence(m).unwrap();
        for n in 1..=4 {
            let (lo, hi) = cable_jones(&seq, r, n).unwrap().degree_bounds().unwrap();
            match cable_degree(&stats, r, n) {
                CableDegree::Max(v) => assert_eq!(hi, v, "m={m} r={r} n={n}"),
                CableDegree::Min(v) => assert_eq!(lo, v, "m={m} r={r} n={n}"),
                CableDegree::NotApplicable => panic!("({m},{r}) should qualify"),
            }
        }
    }
}

#[test]
fn pd_text_roundtrip() {
    for m in [-2i64, 1, 3] {
        let d = twist_knot_diagram(m).unwrap();
        assert_eq!(d.to_string().parse::<PlanarDiagram>().unwrap(), d);
    }
}

/// Insert a move at op index `at` acting on the strand at position `pos`.
fn with_move(d: &MorseDiagram, at: usize, pos: usize, kind: u8, over: bool) -> Option<MorseDiagram> {
    let mut width = 0usize;
    for op in &d.ops[..at] {
        match op {
            MorseOp::Cap(_) => width += 2,
            MorseOp::Cup(_) => width -= 2,
            _ => {}
        }
    }
    let mut ops = d.ops.clone();
    let ins: Vec<MorseOp> = match kind {
        // Reidemeister I: a curl on one strand.
        0 if pos < width => {
            vec![MorseOp::Cap(pos + 1), MorseOp::Cross { at: pos, left_over: over }, MorseOp::Cup(pos + 1)]
        }
        // Reidemeister II between neighbours.
        1 if pos + 1 < width => {
            vec![MorseOp::Cross { at: pos, left_over: over }, MorseOp::Cross { at: pos, left_over: !over }]
        }
        _ => return None,
    };
    ops.splice(at..at, ins);
    Some(MorseDiagram::new(ops))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn reidemeister_moves(m in prop::sample::select(vec![-2i64, -1, 1, 2]), at in 2usize..6, pos in 0usize..4, kind in 0u8..2, over: bool) {
        let base = twist_knot_morse(m).unwrap();
        let at = at.min(base.ops.len() - 2);
        prop_assume!(at > 1);
        let Some(moved) = with_move(&base, at, pos, kind, over) else { return Ok(()) };
        let cfg = BracketConfig::default();
        let (d0, d1) = (base.to_pd().unwrap(), moved.to_pd().unwrap());
        let (b0, b1) = (kauffman_bracket(&d0, &cfg).unwrap(), kauffman_bracket(&d1, &cfg).unwrap());
        if kind == 1 {
            prop_assert_eq!(b1, b0);
        } else {
            let dw = d1.writhe() - d0.writhe();
            prop_assert_eq!(dw.abs(), 1);
            prop_assert_eq!(b1, b0.scale(&Integer::from(-1)).shift(3 * dw));
            // Framing-corrected values agree.
            prop_assert_eq!(colored_jones_morse(&moved, 3, &skein()).unwrap(), colored_jones_morse(&base, 3, &skein()).unwrap());
        }
    }

    #[test]
    fn reidemeister_three(over: bool, m in prop::sample::select(vec![-1i64, 1])) {
        // σ₁σ₂σ₁ = σ₂σ₁σ₂ spliced into the twist knot after its caps.
        let base = twist_knot_morse(m).unwrap();
        let x = |at| MorseOp::Cross { at, left_over: over };
        let mut a = base.ops.clone();
        a.splice(2..2, [x(0), x(1), x(0)]);
        let mut b = base.ops.clone();
        b.splice(2..2, [x(1), x(0), x(1)]);
        let cfg = BracketConfig::default();
        let ba = kauffman_bracket(&MorseDiagram::new(a).to_pd().unwrap(), &cfg).unwrap();
        let bb = kauffman_bracket(&MorseDiagram::new(b).to_pd().unwrap(), &cfg).unwrap();
        prop_assert_eq!(ba, bb);
    }

    #[test]
    fn stats_invariants(m in -4i64..=4) {
        prop_assume!(m != 0);
        let s = twist_knot_diagram(m).unwrap().stats();
        prop_assert_eq!(s.w, s.k_plus as i64 - s.k_minus as i64);
        prop_assert!(s.s_plus + s.s_minus <= s.k() + 2);
        prop_assert_eq!((s.k_plus, s.k_minus), twist_crossing_signs(m));
    }
}
