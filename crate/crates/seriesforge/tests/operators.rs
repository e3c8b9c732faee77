use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use seriesforge::{gamma_op, omega_op, Frame, TruncSeries};

fn assert_same(context: &str, a: &TruncSeries, b: &TruncSeries) {
    if let Some((m, x, y)) = a.first_difference(b) {
        panic!("{context}: first differing coefficient at {m}: {x} vs {y}");
    }
}

fn one() -> BigRational {
    BigRational::from_integer(BigInt::from(1))
}

#[test]
fn face_extraction_slices_a_power() {
    // The face operator sends x^a to sum_{k<=min(K,a)} p_k x^{a-k}.
    let f = Frame::with_p_block(&[("t", 4), ("x", 6)], 3, 4);
    let x4 = TruncSeries::monomial(&f, &[("x", 4)], one());
    let out = omega_op(&x4, 3);
    let mut expect = TruncSeries::zero(&f);
    for k in 1..=3u16 {
        let name = format!("p{k}");
        expect = &expect
            + &TruncSeries::monomial(&f, &[("x", 4 - k), (name.as_str(), 1)], one());
    }
    assert_same("face extraction on x^4", &out, &expect);
}

#[test]
fn face_extraction_stops_at_the_floor() {
    let f = Frame::with_p_block(&[("t", 4), ("x", 6)], 3, 4);
    let x2 = TruncSeries::monomial(&f, &[("x", 2)], one());
    let out = omega_op(&x2, 3);
    // only k = 1, 2 are possible: no negative powers of x survive
    assert_eq!(out.len(), 2);
    assert_eq!(out.coeff(&[("x", 1), ("p1", 1)]), one());
    assert_eq!(out.coeff(&[("p2", 1)]), one());
}

#[test]
fn derivation_turns_a_face_back_into_boundary() {
    // Gamma p_j = j x^j
    let f = Frame::with_p_block(&[("t", 4), ("x", 6)], 3, 4);
    for j in 1..=3u16 {
        let name = format!("p{j}");
        let pj = TruncSeries::monomial(&f, &[(name.as_str(), 1)], one());
        let out = gamma_op(&pj);
        let expect = TruncSeries::monomial(
            &f,
            &[("x", j)],
            BigRational::from_integer(BigInt::from(j)),
        );
        assert_same("derivation of a single face mark", &out, &expect);
    }
}

fn arb_series() -> impl Strategy<Value = TruncSeries> {
    // Exponent ranges are half the caps so that pairwise products stay
    // strictly inside the frame and truncation never interferes.
    proptest::collection::vec(
        (0..=2u16, 0..=2u16, 0..=1u16, 0..=1u16, -4i64..=4),
        0..6,
    )
    .prop_map(|terms| {
        let f = Frame::with_p_block(&[("t", 5), ("x", 7)], 2, 3);
        let mut acc = TruncSeries::zero(&f);
        for (et, ex, e1, e2, c) in terms {
            let m = TruncSeries::monomial(
                &f,
                &[("t", et), ("x", ex), ("p1", e1), ("p2", e2)],
                BigRational::from_integer(BigInt::from(c)),
            );
            acc = &acc + &m;
        }
        acc
    })
}

proptest! {
    #[test]
    fn the_face_derivation_is_a_derivation(a in arb_series(), b in arb_series()) {
        let lhs = gamma_op(&(&a * &b));
        let rhs = &(&a * &gamma_op(&b)) + &(&b * &gamma_op(&a));
        prop_assert!(lhs.first_difference(&rhs).is_none());
    }

    #[test]
    fn face_extraction_is_linear(a in arb_series(), b in arb_series()) {
        let lhs = omega_op(&(&a + &b), 2);
        let rhs = &omega_op(&a, 2) + &omega_op(&b, 2);
        prop_assert!(lhs.first_difference(&rhs).is_none());
    }
}
