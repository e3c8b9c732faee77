use num_bigint::BigInt;
use num_rational::BigRational;
use seriesforge::{catalan_number, catalan_suite, planar_map_count_closed_form, TruncSeries};

fn assert_same(context: &str, a: &TruncSeries, b: &TruncSeries) {
    if let Some((m, x, y)) = a.first_difference(b) {
        panic!("{context}: first differing coefficient at {m}: {x} vs {y}");
    }
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

#[test]
fn tree_series_counts_catalan() {
    let suite = catalan_suite(10).unwrap();
    let expect = [1i64, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
    for (n, &c) in expect.iter().enumerate() {
        assert_eq!(suite.tree.coeff(&[("t", n as u16)]), int(c), "tree coefficient {n}");
        assert_eq!(catalan_number(n), int(c), "closed form {n}");
    }
}

#[test]
fn tree_equation_residue_vanishes() {
    let suite = catalan_suite(12).unwrap();
    let frame = suite.tree.frame().clone();
    let t = TruncSeries::var(&frame, "t");
    let residue = (&(&t * &suite.tree.pow(2)) - &suite.tree).add_int(1);
    assert!(residue.is_zero(), "t T^2 - T + 1 should vanish, got {residue}");
}

#[test]
fn ballot_kernel_residue_vanishes() {
    // (t x^2 - x + t) P + x = t D with D the x-free slice of P
    let suite = catalan_suite(12).unwrap();
    let p = &suite.positive;
    let frame = p.frame().clone();
    let t = TruncSeries::var(&frame, "t");
    let x = TruncSeries::var(&frame, "x");
    let d = p.subs_zero("x");
    let kernel = &(&(&t * &x.pow(2)) - &x) + &t;
    let residue = &(&(&kernel * p) + &x) - &(&t * &d);
    assert!(residue.is_zero(), "kernel residue should vanish, got {residue}");
}

#[test]
fn closed_walks_are_even_and_catalan() {
    let suite = catalan_suite(12).unwrap();
    for n in 0..=12u16 {
        let c = suite.dyck.coeff(&[("t", n)]);
        if n % 2 == 1 {
            assert_eq!(c, int(0), "odd step counts cannot return to zero");
        } else {
            assert_eq!(c, catalan_number(n as usize / 2), "2n steps give Catalan(n)");
        }
    }
}

#[test]
fn planar_equation_residue_vanishes() {
    let suite = catalan_suite(8).unwrap();
    let m = &suite.planar;
    let frame = m.frame().clone();
    let one = TruncSeries::one(&frame);
    let t = TruncSeries::var(&frame, "t");
    let x = TruncSeries::var(&frame, "x");
    let catalytic = (&x * m).divided_difference_at_one("x");
    let rhs = &(&one + &(&(&t * &x.pow(2)) * &m.pow(2))) + &(&(&t * &x) * &catalytic);
    assert_same("root degree equation", m, &rhs);
}

#[test]
fn planar_diagonal_satisfies_its_quadratic() {
    let suite = catalan_suite(12).unwrap();
    let m1 = &suite.planar_diag;
    let frame = m1.frame().clone();
    let one = TruncSeries::one(&frame);
    let t = TruncSeries::var(&frame, "t");
    // 27 t^2 M^2 - (18t - 1) M + 16t - 1 = 0
    let c2 = &t.pow(2).scale_int(27) * &m1.pow(2);
    let c1 = &(&t.scale_int(18) - &one) * m1;
    let c0 = &t.scale_int(16) - &one;
    let residue = &(&c2 - &c1) + &c0;
    assert!(residue.is_zero(), "diagonal quadratic should vanish, got {residue}");
}

#[test]
fn planar_diagonal_matches_closed_form() {
    let suite = catalan_suite(12).unwrap();
    let expect = [1i64, 2, 9, 54, 378, 2916, 24057, 208494, 1876446, 17399772];
    for (n, &c) in expect.iter().enumerate() {
        assert_eq!(suite.planar_diag.coeff(&[("t", n as u16)]), int(c), "map count {n}");
        assert_eq!(planar_map_count_closed_form(n), int(c), "closed form {n}");
    }
    for n in 0..=12 {
        assert_eq!(
            suite.planar_diag.coeff(&[("t", n as u16)]),
            planar_map_count_closed_form(n),
            "closed form at order {n}"
        );
    }
}
