use std::collections::BTreeSet;

use mapkit::{
    bipartite_unrooted_census, census_bipartite, census_constellation, count_rooted_bipartite,
    count_rooted_bipartite_marked, count_rooted_constellations, count_rooted_constellations_marked,
    count_rooted_general, count_rooted_hypermaps, BipartiteFilter, CycleFilter, GeneralFilter,
};
use num_bigint::BigUint;
use symcore::{factorial, partitions_of, Partition};

fn half_deg_set(ds: &[usize]) -> CycleFilter {
    CycleFilter::LengthsIn(ds.iter().copied().collect::<BTreeSet<_>>())
}

#[test]
fn bipartite_equals_two_constellations() {
    for n in 1..=4 {
        for genus in [None, Some(0), Some(1)] {
            for faces in [CycleFilter::Any, half_deg_set(&[1, 2])] {
                let a = count_rooted_bipartite(
                    n,
                    &BipartiteFilter {
                        genus,
                        faces_half: faces.clone(),
                    },
                )
                .unwrap();
                let b = count_rooted_constellations(2, n, genus, &faces).unwrap();
                assert_eq!(a, b, "n = {n}, genus {genus:?}");
            }
        }
    }
}

#[test]
fn bipartite_pinned_face_mode_agrees_with_free_mode() {
    // pinned mode fixes phi and sweeps sigma_black; the census sweeps both
    // vertex rotations freely. Same numbers must come out per face type.
    for n in 1..=5 {
        for g in 0..=1usize {
            let census = census_bipartite(n, g).unwrap();
            for mu in partitions_of(n) {
                let pinned = count_rooted_bipartite(
                    n,
                    &BipartiteFilter {
                        genus: Some(g),
                        faces_half: CycleFilter::Exact(mu.clone()),
                    },
                )
                .unwrap();
                let free: BigUint = census
                    .iter()
                    .filter(|((outer, internal), _)| {
                        let mut all = internal.parts().to_vec();
                        all.push(*outer);
                        all.sort_unstable_by(|a, b| b.cmp(a));
                        all == mu.parts()
                    })
                    .map(|(_, v)| v.clone())
                    .sum();
                assert_eq!(pinned, free, "n = {n}, mu = {mu}, genus {g}");
            }
        }
    }
}

#[test]
fn marked_counts_reduce_to_plain_counts_at_zero_marks() {
    for n in 1..=4 {
        let f = BipartiteFilter {
            genus: Some(0),
            faces_half: CycleFilter::Any,
        };
        assert_eq!(
            count_rooted_bipartite(n, &f).unwrap(),
            count_rooted_bipartite_marked(n, &f, 0).unwrap()
        );
    }
    // one edge, one black vertex: marking it is the only choice
    let f = BipartiteFilter {
        genus: Some(0),
        faces_half: CycleFilter::Any,
    };
    assert_eq!(
        count_rooted_bipartite_marked(1, &f, 1).unwrap(),
        BigUint::from(1u32)
    );
    assert_eq!(
        count_rooted_bipartite_marked(1, &f, 2).unwrap(),
        BigUint::from(0u32)
    );
}

#[test]
fn constellation_marks_total_binomially() {
    // summing C(v1, k) over k recovers 2^{v1}-weighted counts; cheaper sanity:
    // sum over k of marked counts equals the count weighted by 2^(black vertices),
    // checked against an explicit census.
    let n = 3;
    let census = census_bipartite(n, 0).unwrap();
    let total_faces: BigUint = census.values().sum();
    let plain = count_rooted_bipartite(
        n,
        &BipartiteFilter {
            genus: Some(0),
            faces_half: CycleFilter::Any,
        },
    )
    .unwrap();
    assert_eq!(total_faces, plain);

    let mut summed = BigUint::from(0u32);
    for k in 0..=n {
        summed += count_rooted_constellations_marked(
            2,
            n,
            Some(0),
            &CycleFilter::Any,
            &[k],
        )
        .unwrap();
    }
    // every planar bipartite map with b black vertices contributes 2^b
    // to the sum; with n = 3 the black vertex count ranges over 1..=3
    let mut weighted = BigUint::from(0u32);
    for b in 1..=n {
        let with_b = count_with_black_vertices(n, b);
        weighted += BigUint::from(2u32).pow(b as u32) * with_b;
    }
    assert_eq!(summed, weighted);
}

/// Brute force helper: planar bipartite maps with exactly b black vertices.
fn count_with_black_vertices(n: usize, b: usize) -> BigUint {
    let mut hits = 0u64;
    symcore::for_each_image_word(n, |black_w| {
        let black = symcore::Perm::from_images(
            &black_w.iter().map(|&v| v + 1).collect::<Vec<_>>(),
        )
        .unwrap();
        symcore::for_each_image_word(n, |white_w| {
            let white = symcore::Perm::from_images(
                &white_w.iter().map(|&v| v + 1).collect::<Vec<_>>(),
            )
            .unwrap();
            let rot = mapkit::BipartiteRotation::from_vertex_rotations(black.clone(), white)
                .unwrap();
            if rot.is_transitive()
                && rot.genus() == Ok(0)
                && rot.sigma_black().cycle_count() == b
            {
                hits += 1;
            }
        });
    });
    let labeled = BigUint::from(hits);
    assert_eq!(&labeled % &factorial(n - 1), BigUint::from(0u32));
    labeled / factorial(n - 1)
}

#[test]
fn two_hypermaps_are_even_faced_general_maps() {
    for n in 1..=3usize {
        for g in 0..=1usize {
            let h = count_rooted_hypermaps(2, n, Some(g), &CycleFilter::Any).unwrap();
            let evens: BTreeSet<usize> = (1..=n).map(|d| 2 * d).collect();
            let e = count_rooted_general(
                n,
                &GeneralFilter {
                    genus: Some(g),
                    faces: CycleFilter::LengthsIn(evens),
                    ..Default::default()
                },
            )
            .unwrap();
            assert_eq!(h, e, "n = {n}, g = {g}");
        }
    }
}

#[test]
fn hypermap_total_splits_by_hyperface_type() {
    let (m, n) = (3, 2);
    let total = count_rooted_hypermaps(m, n, None, &CycleFilter::Any).unwrap();
    let mut sum = BigUint::from(0u32);
    for mu in partitions_of(n) {
        sum += count_rooted_hypermaps(m, n, None, &CycleFilter::Exact(mu)).unwrap();
    }
    assert_eq!(sum, total);
    assert!(total > BigUint::from(0u32));
}

#[test]
fn census_totals_match_direct_counts() {
    for n in 1..=4 {
        for g in 0..=1 {
            let census = census_bipartite(n, g).unwrap();
            let total: BigUint = census.values().sum();
            let direct = count_rooted_bipartite(
                n,
                &BipartiteFilter {
                    genus: Some(g),
                    faces_half: CycleFilter::Any,
                },
            )
            .unwrap();
            assert_eq!(total, direct, "n = {n}, g = {g}");

            let c2 = census_constellation(2, n, g).unwrap();
            assert_eq!(c2, census, "constellation census path, n = {n}, g = {g}");
        }
    }
}

#[test]
fn unrooted_census_relates_to_rooted_counts() {
    // summing n * EGF cell counts over full phi types of planar bipartite
    // maps equals n! * (rooted count) ... i.e. labeled pairs = rooted * (n-1)!
    for n in 1..=4usize {
        let unrooted = bipartite_unrooted_census(n, 0).unwrap();
        let labeled_total: BigUint = unrooted.values().sum();
        let rooted = count_rooted_bipartite(
            n,
            &BipartiteFilter {
                genus: Some(0),
                faces_half: CycleFilter::Any,
            },
        )
        .unwrap();
        assert_eq!(labeled_total, rooted * factorial(n - 1), "n = {n}");
    }
}

#[test]
fn quadrangulations_match_bipartite_maps_half_degrees() {
    // planar: general maps with all faces of degree 4 vs bipartite maps with
    // all faces of half-degree 2 (the m = 2 relation without marks)
    for q in 1..=3usize {
        let n = 2 * q; // edges of the quadrangulation
        // all faces of degree 4 forces the face type [4, 4, ..., 4]
        let e = count_rooted_general(
            n,
            &GeneralFilter {
                genus: Some(0),
                faces: CycleFilter::Exact(Partition::new(vec![4; q]).unwrap()),
                ..Default::default()
            },
        )
        .unwrap();
        let b = count_rooted_bipartite(
            n,
            &BipartiteFilter {
                genus: Some(0),
                faces_half: CycleFilter::Exact(Partition::new(vec![2; q]).unwrap()),
            },
        )
        .unwrap();
        assert_eq!(e, b, "q = {q}");
        assert!(e > BigUint::from(0u32));
    }
}
