use tamari::{
    interval_count, interval_count_closed_form, m_tamari_interval_count, nu_tamari, parse_word,
    sync_interval_count, sync_interval_polynomial, word_string, DyckPath, TamariOrder,
};

fn main() {
    let p: DyckPath = "uuddud".parse().unwrap();
    println!("path {p}: distances {:?}, canopy {}", p.distance_vector(), {
        let c: String = p.canopy().iter().map(|d| d.to_string()).collect();
        c
    });
    for q in p.covers_up() {
        println!("  covered by {q}");
    }

    println!("\nintervals in the rotation lattice:");
    for n in 1..=6 {
        println!("  n = {n}: {} (closed form {})", interval_count(n), interval_count_closed_form(n));
    }

    println!("\nsame-canopy intervals by final descent of the upper path:");
    for n in 1..=5 {
        let poly = sync_interval_polynomial(n);
        let total = sync_interval_count(n);
        let terms: Vec<String> = poly
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0u32.into())
            .map(|(k, c)| format!("{c} x^{k}"))
            .collect();
        println!("  n = {n}: {} = {}", total, terms.join(" + "));
    }

    let nu = parse_word("NEENNE").unwrap();
    let lattice = nu_tamari(&nu).unwrap();
    println!(
        "\nlattice above {}: {} paths, {} intervals, lattice check: {}",
        word_string(&nu),
        lattice.elements().len(),
        lattice.interval_count(),
        lattice.poset().is_lattice()
    );

    println!("\nhigher staircases:");
    for (m, n) in [(2usize, 3usize), (3, 2)] {
        println!("  m = {m}, n = {n}: {} intervals", m_tamari_interval_count(m, n).unwrap());
    }

    let order = TamariOrder::new(4);
    let poset = order.poset();
    println!(
        "\nrotation lattice of semilength 4: {} paths, min {}, max {}",
        order.paths().len(),
        order.paths()[poset.minimum().unwrap()],
        order.paths()[poset.maximum().unwrap()]
    );
}
