use charkit::{
    character_table, dimension, h_poly_eval, littlewood_factor_check, m_split, mn_character,
    power_sum_character_lhs,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use symcore::{partitions_of, Partition};

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

#[test]
fn table_orthogonality_both_ways_up_to_6() {
    for n in 1..=6 {
        let t = character_table(n);
        assert!(t.rows_orthogonal(), "row orthogonality fails at n = {n}");
        assert!(t.columns_orthogonal(), "column orthogonality fails at n = {n}");
    }
}

#[test]
fn degree_seven_rows_orthogonal() {
    assert!(character_table(7).rows_orthogonal());
}

#[test]
fn content_product_identity_up_to_6() {
    let xs: Vec<BigRational> = (-3..=3)
        .map(|v| BigRational::from_integer(BigInt::from(v)))
        .chain([
            BigRational::new(BigInt::from(1), BigInt::from(2)),
            BigRational::new(BigInt::from(-5), BigInt::from(2)),
        ])
        .collect();
    for n in 1..=6 {
        for theta in partitions_of(n) {
            let f = BigRational::from_integer(dimension(&theta));
            for x in &xs {
                let lhs = power_sum_character_lhs(&theta, x).unwrap();
                let rhs = &f * h_poly_eval(&theta, x);
                assert_eq!(lhs, rhs, "theta = {theta}, x = {x}");
            }
        }
    }
}

#[test]
fn quotient_shapes_for_known_splits() {
    let s = m_split(&p(&[4, 2, 2, 2, 1, 1]), 2).unwrap().unwrap();
    assert_eq!(s.quotients, vec![p(&[1, 1, 1]), p(&[2, 1])]);

    let s = m_split(&p(&[6, 6, 4, 4, 4, 3, 3]), 3).unwrap().unwrap();
    assert_eq!(s.quotients, vec![p(&[1, 1]), p(&[2, 2]), p(&[2, 1, 1])]);
}

#[test]
fn character_factorization_on_divisible_classes() {
    // (m, max multiple)
    for &(m, max_n) in &[(2usize, 4usize), (3, 2), (4, 2)] {
        for n in 1..=max_n {
            for theta in partitions_of(m * n) {
                for lambda in partitions_of(n) {
                    let (lhs, rhs) = littlewood_factor_check(&theta, m, &lambda).unwrap();
                    assert_eq!(lhs, rhs, "theta = {theta}, m = {m}, lambda = {lambda}");
                }
            }
        }
    }
}

#[test]
fn nonsplittable_shapes_kill_rectangular_classes() {
    // any shape with nonempty m-core evaluates to zero on [m^n]
    for &(m, n) in &[(2usize, 3usize), (3, 2)] {
        let rect = p(&vec![m; n]);
        for theta in partitions_of(m * n) {
            if m_split(&theta, m).unwrap().is_none() {
                assert_eq!(
                    mn_character(&theta, &rect).unwrap(),
                    BigInt::from(0),
                    "theta = {theta}, m = {m}"
                );
            }
        }
    }
}
