use num_bigint::BigUint;
use symcore::{
    class_elements, double_factorial_odd, factorial, fixed_point_free_involutions, partitions_of,
    perms_of_degree, Partition,
};

#[test]
fn class_sizes_tile_the_group() {
    for n in 0..=9 {
        let total: BigUint = partitions_of(n).iter().map(|p| p.class_size()).sum();
        assert_eq!(total, factorial(n), "n = {n}");
    }
}

#[test]
fn class_sizes_match_exhaustive_filter() {
    for n in 1..=6 {
        for lambda in partitions_of(n) {
            let filtered = class_elements(&lambda).len();
            assert_eq!(BigUint::from(filtered), lambda.class_size(), "{lambda}");
        }
    }
}

#[test]
fn transposition_class_sizes() {
    for n in 2..=8 {
        let mut parts = vec![2];
        parts.extend(std::iter::repeat(1).take(n - 2));
        let lambda = Partition::new(parts).unwrap();
        assert_eq!(lambda.class_size(), BigUint::from(n * (n - 1) / 2));
    }
}

#[test]
fn pairings_are_counted_by_double_factorials() {
    for n in 1..=5 {
        let invs = fixed_point_free_involutions(2 * n);
        assert_eq!(BigUint::from(invs.len()), double_factorial_odd(n));
        assert!(invs.iter().all(|p| p.is_fixed_point_free_involution()));
    }
}

#[test]
fn lexicographic_sweep_hits_every_permutation() {
    for n in 1..=6 {
        let all: Vec<_> = perms_of_degree(n).collect();
        assert_eq!(BigUint::from(all.len()), factorial(n));
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), all.len());
    }
}
