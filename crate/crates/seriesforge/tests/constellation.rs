use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Signed;
use seriesforge::{
    constellation_planar, constellation_planar_closed_form, constellation_profile_count,
    gamma_series, planar_change_of_vars, Frame, TruncSeries,
};
use symcore::{partitions_of, Partition};

fn assert_same(context: &str, a: &TruncSeries, b: &TruncSeries) {
    if let Some((m, x, y)) = a.first_difference(b) {
        panic!("{context}: first differing coefficient at {m}: {x} vs {y}");
    }
}

/// Read the t^n slice of a counting series in the same shape as the mapkit
/// census: outer boundary length, then the partition of internal face sizes.
fn series_slice(f: &TruncSeries, n: u16) -> BTreeMap<(usize, Partition), BigUint> {
    let names: Vec<String> = f.frame().names().to_vec();
    let mut out = BTreeMap::new();
    for (key, c) in f.terms() {
        if key[0] != n {
            continue;
        }
        let a = key[1] as usize;
        let mut parts = Vec::new();
        for (slot, name) in names.iter().enumerate().skip(2) {
            let k: usize = name[1..].parse().expect("p block variable");
            for _ in 0..key[slot] {
                parts.push(k);
            }
        }
        assert!(c.is_integer(), "count at {key:?} is not an integer: {c}");
        let int = c.to_integer();
        assert!(!int.is_negative(), "count at {key:?} is negative: {int}");
        out.insert((a, Partition::from_unsorted(parts)), int.to_biguint().unwrap());
    }
    out
}

#[test]
fn bipartite_slices_match_the_census() {
    let f = constellation_planar(2, 4, 4).unwrap();
    for n in 1..=4usize {
        let expected = mapkit::census_bipartite(n, 0).unwrap();
        let got = series_slice(&f, n as u16);
        assert_eq!(got, expected, "bipartite census at {n} edges");
    }
}

#[test]
fn trivalent_slices_match_the_census() {
    let f = constellation_planar(3, 3, 3).unwrap();
    for n in 1..=3usize {
        let expected = mapkit::census_constellation(3, n, 0).unwrap();
        let got = series_slice(&f, n as u16);
        assert_eq!(got, expected, "3-constellation census at {n} hyperedges");
    }
}

#[test]
fn no_hyperedges_means_the_atomic_map() {
    for m in 2..=4usize {
        let f = constellation_planar(m, 2, 3).unwrap();
        let at_zero = f.subs_zero("t");
        assert_same("t = 0 slice", &at_zero, &TruncSeries::one(f.frame()));
    }
}

#[test]
fn closed_form_agrees_with_iteration_for_m2() {
    let iterated = constellation_planar(2, 3, 5).unwrap();
    let closed = constellation_planar_closed_form(2, 3, 5).unwrap();
    assert_same("bipartite closed form", &iterated, &closed);
}

#[test]
fn closed_form_agrees_with_iteration_for_m3() {
    let iterated = constellation_planar(3, 2, 4).unwrap();
    let closed = constellation_planar_closed_form(3, 2, 4).unwrap();
    assert_same("3-constellation closed form", &iterated, &closed);
}

#[test]
fn change_of_variables_round_trips() {
    for m in 2..=3usize {
        let frame = Frame::with_p_block(&[("t", 6), ("x", 8)], 3, 6);
        let (z, u) = planar_change_of_vars(&frame, m, 3).unwrap();
        let t = TruncSeries::var(&frame, "t");
        let x = TruncSeries::var(&frame, "x");
        let gamma = gamma_series(&z, m, 3);
        let t_back = &z * &gamma.add_int(1).powi(1 - m as i64).unwrap();
        assert_same("t recovered from z", &t_back, &t);
        let x_back = &u * &(&u * &z).add_int(1).powi(-(m as i64)).unwrap();
        assert_same("x recovered from u", &x_back, &x);
    }
}

#[test]
fn profile_product_formula_matches_the_series() {
    for (m, n_max) in [(2usize, 4usize), (3, 3)] {
        for n in 1..=n_max {
            let f = constellation_planar(m, n, n).unwrap();
            let slice = series_slice(&f, n as u16);
            for lambda in partitions_of(n) {
                let mut profile = vec![0usize; n];
                for &part in lambda.parts() {
                    profile[part - 1] += 1;
                }
                let expected = constellation_profile_count(m, n, &profile);
                let mut total = BigUint::from(0u32);
                for (&size, _) in lambda.multiplicities().iter() {
                    let mut rest = lambda.parts().to_vec();
                    let pos = rest.iter().position(|&p| p == size).unwrap();
                    rest.remove(pos);
                    if let Some(v) = slice.get(&(size, Partition::from_unsorted(rest))) {
                        total += v;
                    }
                }
                assert_eq!(
                    BigRational::from_integer(total.into()),
                    expected,
                    "profile {lambda} of {m}-constellations with {n} hyperedges"
                );
            }
        }
    }
}
