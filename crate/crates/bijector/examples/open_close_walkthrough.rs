//! One synchronized interval traced through all three encodings: the map it
//! closes up into, the decorated tree in between, and the way duality and
//! the root-face statistic read off the Dyck paths.

use bijector::{
    charges, enumerate_trees, interval_from_map, interval_from_tree, leaf_labels,
    map_from_interval, tree_from_map,
};
use mapkit::{list_rooted_general, GeneralFilter, GeneralRotation};
use symcore::Perm;
use tamari::{sync_interval_count, DyckPath, TamariOrder};

fn cycles(p: &Perm) -> String {
    p.cycles()
        .iter()
        .map(|c| {
            let inner: Vec<String> = c.iter().map(|d| d.to_string()).collect();
            format!("({})", inner.join(" "))
        })
        .collect()
}

/// Duality on rooted maps: swap vertices and faces, flip the orientation,
/// and root the result one corner around the root vertex.
fn rooted_dual(map: &GeneralRotation) -> GeneralRotation {
    let dual = map.dual();
    let flipped = dual.rho().compose(&dual.sigma().inverse()).unwrap();
    let mirrored = GeneralRotation::new(flipped, dual.rho().clone()).unwrap();
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

fn main() {
    let lower: DyckPath = "uduudd".parse().unwrap();
    let upper: DyckPath = "uduudd".parse().unwrap();
    let map = map_from_interval(&lower, &upper).unwrap();
    println!("interval [{lower}, {upper}] closes up into a {}-edge map:", map.n_edges());
    println!("  faces    phi = {}", cycles(map.phi()));
    println!("  edges    rho = {}", cycles(map.rho()));
    println!("  vertices sigma = {}", cycles(&map.sigma()));
    println!(
        "  genus {}, face type {}, vertex type {}",
        map.genus().unwrap(),
        map.face_type(),
        map.vertex_type()
    );

    let tree = tree_from_map(&map).unwrap();
    println!("\nopened into a decorated tree with {} edges:", tree.n_edges());
    println!("  {}", serde_json::to_string(&tree).unwrap());
    println!("  leaf labels {:?}", leaf_labels(&tree));
    println!("  charges     {:?}", charges(&tree));
    let (p, q) = interval_from_tree(&tree);
    println!("  contour path {q}, charge path {p}");
    assert_eq!((&p, &q), (&lower, &upper));

    println!("\none chain of counts, three families:");
    for n in 1..=5usize {
        let trees = enumerate_trees(n).len();
        let intervals = sync_interval_count(n);
        let maps = if n <= 4 {
            let filter = GeneralFilter {
                genus: Some(0),
                nonseparable: true,
                ..GeneralFilter::default()
            };
            list_rooted_general(n + 1, &filter).unwrap().len().to_string()
        } else {
            "-".into()
        };
        println!(
            "  n = {n}: {trees} trees, {intervals} synchronized intervals, {maps} maps with {} edges",
            n + 1
        );
    }

    println!("\nduality at n = 3 sends [P, Q] to the mirrored pair [Q', P']:");
    let order = TamariOrder::new(3);
    for a in order.paths() {
        for b in order.paths() {
            let (i, j) = (order.index_of(a).unwrap(), order.index_of(b).unwrap());
            if !order.leq(i, j) || a.canopy() != b.canopy() {
                continue;
            }
            let m = map_from_interval(a, b).unwrap();
            let (da, db) = interval_from_map(&rooted_dual(&m)).unwrap();
            assert_eq!((&da, &db), (&b.mirror(), &a.mirror()));
            let marker = if (&da, &db) == (a, b) { "  (self-dual)" } else { "" };
            println!("  [{a}, {b}] -> [{da}, {db}]{marker}");
        }
    }

    println!("\nthe last descent of the upper path is the root face degree minus one:");
    let (p, q) = interval_from_map(&map).unwrap();
    println!(
        "  [{p}, {q}]: last descent {}, root face degree {}",
        q.last_descent(),
        map.phi().cycle_len_through(map.rho().apply(1))
    );
}
