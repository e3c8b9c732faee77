//! Tour of the core types: compose a couple of cycles, read off cycle types,
//! and tabulate the conjugacy classes of a small symmetric group.

use symcore::{factorial, partitions_of, Perm};

fn main() {
    let p = Perm::from_cycles(5, &[vec![1, 2, 3]]).unwrap();
    let q = Perm::from_cycles(5, &[vec![3, 4], vec![1, 5]]).unwrap();
    let pq = p.compose(&q).unwrap();
    println!("p        = {p}");
    println!("q        = {q}");
    println!("p then q = {pq}   (left-to-right product)");
    println!("type     = {}", pq.cycle_type());

    let n = 6;
    println!("\nConjugacy classes of S_{n}:");
    let mut total = num_bigint::BigUint::from(0u32);
    for lambda in partitions_of(n) {
        let size = lambda.class_size();
        println!("  {lambda:<18} z = {:<6} |Cl| = {size}", lambda.z());
        total += size;
    }
    println!("  total {total} = {n}! = {}", factorial(n));
}
