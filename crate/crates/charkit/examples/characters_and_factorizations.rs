use charkit::{
    character_table, classical_hurwitz_class, monotone_hurwitz_class, quad_coeffs,
    verify_quadrangulation_relation, ClassAlgebra,
};
use symcore::Partition;

fn main() {
    let t = character_table(4);
    println!("character table of S_4 (rows = shapes, columns = classes)");
    print!("{:12}", "");
    for mu in &t.classes {
        print!("{:>10}", mu.to_string());
    }
    println!();
    for (i, theta) in t.shapes.iter().enumerate() {
        print!("{:12}", theta.to_string());
        for j in 0..t.classes.len() {
            print!("{:>10}", t.value(i, j).to_string());
        }
        println!();
    }

    let alg = ClassAlgebra::new(4).unwrap();
    let full_cycle = Partition::new(vec![4]).unwrap();
    println!("\ntransposition factorizations of a fixed 4-cycle:");
    for r in 0..=5 {
        let all = classical_hurwitz_class(&full_cycle, r, &alg).unwrap();
        let mono = monotone_hurwitz_class(&full_cycle, r, &alg).unwrap();
        println!("  r = {r}: {all} total, {mono} monotone");
    }

    println!("\nhypermap expansion coefficients c for m = 3:");
    for k1 in 0..=2 {
        for k2 in 0..=2 {
            let q = quad_coeffs(3, &[k1, k2]).unwrap();
            println!("  k = ({k1},{k2}): d = {}, c = {}", q.d, q.c);
        }
    }

    let degrees = [1usize, 2].into_iter().collect();
    let report = verify_quadrangulation_relation(3, 1, 2, &degrees).unwrap();
    println!(
        "\n3-constellation expansion at genus 1, two hyperedges, degrees {{1,2}}: \
         hypermaps = {}, weighted constellation sum = {} ({})",
        report.hypermap_count,
        report.constellation_sum,
        if report.holds() { "match" } else { "MISMATCH" }
    );
}
