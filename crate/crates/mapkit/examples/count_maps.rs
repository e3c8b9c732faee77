//! Exhaustive rooted-map counts straight from rotation systems: the planar
//! series 2, 9, 54, 378, the genus breakdown, and a few filtered families.

use mapkit::{count_rooted_general, planar_map_count, CycleFilter, GeneralFilter};
use symcore::Partition;

fn main() {
    println!("rooted maps by edges and genus (enumerated / closed form for g = 0):");
    for n in 1..=4 {
        let mut row = format!("  n = {n}:");
        for g in 0..=2 {
            let c = count_rooted_general(
                n,
                &GeneralFilter {
                    genus: Some(g),
                    ..Default::default()
                },
            )
            .unwrap();
            row += &format!("  g{g} = {c}");
        }
        row += &format!("   (planar closed form {})", planar_map_count(n));
        println!("{row}");
    }

    let quads = count_rooted_general(
        4,
        &GeneralFilter {
            genus: Some(0),
            faces: CycleFilter::Exact(Partition::new(vec![4, 4]).unwrap()),
            ..Default::default()
        },
    )
    .unwrap();
    println!("\nplanar quadrangulations with 4 edges: {quads}");

    let nonsep = count_rooted_general(
        5,
        &GeneralFilter {
            genus: Some(0),
            nonseparable: true,
            ..Default::default()
        },
    )
    .unwrap();
    println!("nonseparable planar maps with 5 edges: {nonsep}");
}
