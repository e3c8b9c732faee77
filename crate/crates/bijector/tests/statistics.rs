use bijector::{interval_from_map, map_from_interval};
use mapkit::{list_rooted_general, GeneralFilter, GeneralRotation};
use symcore::Perm;
use num_bigint::BigUint;
use std::collections::BTreeMap;
use tamari::{reverse_complement, sync_interval_polynomial, DyckPath, TamariOrder};

fn nonseparable() -> GeneralFilter {
    GeneralFilter {
        genus: Some(0),
        nonseparable: true,
        ..GeneralFilter::default()
    }
}

fn sync_intervals(n: usize) -> Vec<(DyckPath, DyckPath)> {
    let order = TamariOrder::new(n);
    let paths = order.paths();
    let mut out = Vec::new();
    for i in 0..paths.len() {
        for j in 0..paths.len() {
            if paths[i].canopy() == paths[j].canopy() && order.leq(i, j) {
                out.push((paths[i].clone(), paths[j].clone()));
            }
        }
    }
    out
}

/// Root face degrees across all nonseparable maps, counted without the
/// bijection, against the last-descent refinement of the interval count.
#[test]
fn root_face_degrees_match_last_descents_in_bulk() {
    for edges in 2..=5 {
        let maps = list_rooted_general(edges, &nonseparable()).unwrap();
        let mut by_degree: BTreeMap<usize, usize> = BTreeMap::new();
        for map in &maps {
            let root_face = map.rho().apply(1);
            *by_degree
                .entry(map.phi().cycle_len_through(root_face))
                .or_default() += 1;
        }
        let poly = sync_interval_polynomial(edges - 1);
        for degree in 2..=2 * edges {
            let wanted = poly
                .get(degree - 1)
                .cloned()
                .unwrap_or_else(|| BigUint::from(0u32));
            let got = by_degree.get(&degree).copied().unwrap_or(0);
            assert_eq!(BigUint::from(got), wanted, "degree {degree} at {edges} edges");
        }
    }
}

/// The bijection matches the statistics pairwise: the last descent of the
/// upper path is one less than the degree of the root face.
#[test]
fn each_interval_maps_to_its_face_degree() {
    for n in 1..=5 {
        for (lower, upper) in sync_intervals(n) {
            let map = map_from_interval(&lower, &upper).unwrap();
            // the root face is the one on the head side of the root edge
            assert_eq!(
                map.phi().cycle_len_through(map.rho().apply(1)),
                upper.last_descent() + 1,
                "interval [{lower}, {upper}]"
            );
        }
    }
}

/// Rooted duality: swap the roles of vertices and faces, flip the
/// orientation so the exploration handedness survives, and move the root
/// one corner around the root vertex. Dart labels are kept, so the dual is
/// read off the same ground set.
fn rooted_dual(map: &GeneralRotation) -> GeneralRotation {
    let dual = map.dual();
    let flipped_faces = dual.rho().compose(&dual.sigma().inverse()).unwrap();
    let mirrored = GeneralRotation::new(flipped_faces, dual.rho().clone()).unwrap();
    let root = map.sigma().apply(1);
    if root == 1 {
        return mirrored;
    }
    let swap = Perm::from_cycles(mirrored.darts(), &[vec![1, root]]).unwrap();
    GeneralRotation::new(
        mirrored.phi().conjugate_by(&swap).unwrap(),
        mirrored.rho().conjugate_by(&swap).unwrap(),
    )
    .unwrap()
}

/// Map duality, read through the bijection, is exactly the order-reversing
/// symmetry of the Tamari lattice applied to both endpoints: the interval
/// of the dual map is [mirror of upper, mirror of lower].
#[test]
fn duality_transports_to_the_mirror_involution() {
    for n in 1..=5 {
        for (lower, upper) in sync_intervals(n) {
            let map = map_from_interval(&lower, &upper).unwrap();
            let dual = rooted_dual(&map);
            let (a, b) = interval_from_map(&dual).unwrap();
            assert_eq!(
                (&a, &b),
                (&upper.mirror(), &lower.mirror()),
                "interval [{lower}, {upper}]"
            );
            // the canopy of the dual interval is the reversed complement
            assert_eq!(a.canopy(), reverse_complement(&upper.canopy()));
            // duality is an involution on rooted maps
            assert!(map.root_equivalent(&rooted_dual(&dual)));
            // vertices and faces swap: the root vertex degree of the map is
            // the root face degree of the dual, i.e. the last descent of the
            // dual interval's upper path
            assert_eq!(
                map.sigma().cycle_len_through(1),
                b.last_descent() + 1,
                "root vertex degree of [{lower}, {upper}]"
            );
        }
    }
}
