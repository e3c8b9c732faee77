use num_bigint::BigUint;
use tamari::{
    all_dyck_paths, interval_count, interval_count_closed_form, sync_interval_count,
    sync_interval_count_closed_form, sync_interval_polynomial, sync_series, tamari_leq,
    TamariOrder,
};

#[test]
fn distance_order_equals_rotation_closure_up_to_7() {
    for n in 1..=7 {
        let order = TamariOrder::new(n);
        let direct = order.poset();
        let closed = order.poset_from_rotations();
        for a in 0..direct.size() {
            for b in 0..direct.size() {
                assert_eq!(
                    direct.leq(a, b),
                    closed.leq(a, b),
                    "n = {n}: {} vs {}",
                    order.paths()[a],
                    order.paths()[b]
                );
            }
        }
    }
}

#[test]
fn rotation_order_is_a_lattice_up_to_6() {
    for n in 1..=6 {
        let poset = TamariOrder::new(n).poset();
        assert!(poset.is_lattice(), "not a lattice at n = {n}");
        // bottom is the sawtooth, top is the pyramid
        let order = TamariOrder::new(n);
        let min = poset.minimum().unwrap();
        let max = poset.maximum().unwrap();
        assert_eq!(order.paths()[min].to_string(), "ud".repeat(n));
        assert_eq!(order.paths()[max].to_string(), format!("{}{}", "u".repeat(n), "d".repeat(n)));
    }
}

#[test]
fn interval_counts_match_closed_form_up_to_7() {
    let known = [1u64, 3, 13, 68, 399, 2530, 16965];
    for n in 1..=7 {
        let got = interval_count(n);
        assert_eq!(got, BigUint::from(known[n - 1]), "n = {n}");
        assert_eq!(got, interval_count_closed_form(n), "n = {n}");
    }
}

#[test]
fn sync_interval_counts_match_closed_form_up_to_6() {
    let known = [1u64, 2, 6, 22, 91, 408];
    for n in 1..=6 {
        let got = sync_interval_count(n);
        assert_eq!(got, BigUint::from(known[n - 1]), "n = {n}");
        assert_eq!(got, sync_interval_count_closed_form(n), "n = {n}");
    }
}

#[test]
fn sync_polynomial_matches_catalytic_recurrence_up_to_6() {
    let series = sync_series(6);
    for n in 1..=6 {
        let direct = sync_interval_polynomial(n);
        let mut from_series = series[n].clone();
        // align lengths before comparing
        let len = direct.len().max(from_series.len());
        let mut direct = direct;
        direct.resize(len, BigUint::from(0u32));
        from_series.resize(len, BigUint::from(0u32));
        assert_eq!(direct, from_series, "n = {n}");
    }
}

#[test]
fn path_mirror_reverses_the_order_up_to_6() {
    use tamari::reverse_complement;
    for n in 1..=6 {
        let order = TamariOrder::new(n);
        let paths = order.paths();
        let image: Vec<usize> = paths
            .iter()
            .map(|p| order.index_of(&p.mirror()).expect("mirror stays a Dyck path"))
            .collect();
        for (i, p) in paths.iter().enumerate() {
            assert_eq!(image[image[i]], i, "involution fails at {p}");
            assert_eq!(
                paths[image[i]].canopy(),
                reverse_complement(&p.canopy()),
                "canopy of mirror({p})"
            );
        }
        for a in 0..paths.len() {
            for b in 0..paths.len() {
                assert_eq!(
                    order.leq(a, b),
                    order.leq(image[b], image[a]),
                    "mirror is not order reversing on {} vs {}",
                    paths[a],
                    paths[b]
                );
            }
        }
    }
}

#[test]
fn comparability_examples() {
    let p = "uuddud".parse().unwrap();
    let q = "uududd".parse().unwrap();
    assert!(tamari_leq(&p, &q).unwrap());
    assert!(!tamari_leq(&q, &p).unwrap());
    let r = "uduudd".parse().unwrap();
    // r has a different canopy and is incomparable with p
    assert!(!tamari_leq(&p, &r).unwrap());
    assert!(!tamari_leq(&r, &p).unwrap());
    let short = "ud".parse().unwrap();
    assert!(tamari_leq(&p, &short).is_err());
}

#[test]
fn covers_are_minimal_relations() {
    for n in 1..=5 {
        let order = TamariOrder::new(n);
        for (i, p) in order.paths().iter().enumerate() {
            for q in p.covers_up() {
                let j = order.index_of(&q).unwrap();
                assert!(order.leq(i, j) && i != j);
                // nothing strictly between
                for k in 0..order.paths().len() {
                    if k == i || k == j {
                        continue;
                    }
                    assert!(
                        !(order.leq(i, k) && order.leq(k, j)),
                        "rotation is not a cover: {p} -> {q} skips {}",
                        order.paths()[k]
                    );
                }
            }
        }
    }
}

#[test]
fn sawtooth_reaches_everything() {
    // the bottom path is below all C_n paths
    for n in 1..=6 {
        let paths = all_dyck_paths(n);
        let bottom = "ud".repeat(n).parse().unwrap();
        for p in &paths {
            assert!(tamari_leq(&bottom, p).unwrap());
        }
    }
}
