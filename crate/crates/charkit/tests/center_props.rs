use charkit::{
    classical_hurwitz_class, count_factorizations_char, factorization_census_brute_force,
    hurwitz_brute_force, jm_pi, monotone_hurwitz_class, CenterElement, ClassAlgebra,
};
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use symcore::{partitions_of, Partition};

#[test]
fn convolution_and_spectral_products_agree_up_to_6() {
    for n in 2..=6 {
        let alg = ClassAlgebra::new(n).unwrap();
        let classes = partitions_of(n);
        for la in &classes {
            let a = CenterElement::class_sum(la);
            for mu in &classes {
                let b = CenterElement::class_sum(mu);
                let conv = alg.product_convolution(&a, &b).unwrap();
                let spec = alg.product_characters(&a, &b).unwrap();
                assert_eq!(conv, spec, "n = {n}, la = {la}, mu = {mu}");
            }
        }
    }
}

#[test]
fn class_sum_products_have_nonnegative_integer_coefficients() {
    let alg = ClassAlgebra::new(5).unwrap();
    let classes = partitions_of(5);
    for la in &classes {
        for mu in &classes {
            let prod = alg
                .product_convolution(&CenterElement::class_sum(la), &CenterElement::class_sum(mu))
                .unwrap();
            for (_, c) in prod.coeffs() {
                assert!(c.is_integer());
                assert!(*c >= BigRational::zero());
            }
        }
    }
}

#[test]
fn spectral_idempotents_up_to_5() {
    for n in 2..=5 {
        let alg = ClassAlgebra::new(n).unwrap();
        let k = partitions_of(n).len();
        let idems: Vec<CenterElement> =
            (0..k).map(|i| alg.orthogonal_idempotent(i)).collect();
        for (i, a) in idems.iter().enumerate() {
            for (j, b) in idems.iter().enumerate() {
                let prod = alg.product_convolution(a, b).unwrap();
                if i == j {
                    assert_eq!(&prod, a, "F_{i} not idempotent at n = {n}");
                } else {
                    assert!(prod.is_zero(), "F_{i} F_{j} nonzero at n = {n}");
                }
            }
        }
        // they resolve the identity
        let mut sum = CenterElement::zero(n);
        for a in &idems {
            sum.add_scaled(a, &BigRational::one());
        }
        assert_eq!(sum, CenterElement::identity(n));
    }
}

#[test]
fn jucys_murphy_layers_group_by_cycle_count() {
    for n in 1..=6 {
        let layers = jm_pi(n).unwrap();
        assert_eq!(layers.len(), n);
        for (d, layer) in layers.iter().enumerate() {
            let mut expected = CenterElement::zero(n);
            for la in partitions_of(n) {
                if n - la.len() == d {
                    expected.add_scaled(&CenterElement::class_sum(&la), &BigRational::one());
                }
            }
            assert_eq!(layer, &expected, "n = {n}, degree {d}");
        }
    }
}

#[test]
fn hurwitz_class_counts_match_brute_force() {
    for n in 1..=5 {
        let alg = ClassAlgebra::new(n).unwrap();
        for la in partitions_of(n) {
            for r in 0..=4 {
                let classical = classical_hurwitz_class(&la, r, &alg).unwrap();
                assert_eq!(
                    classical,
                    hurwitz_brute_force(&la, r, false),
                    "classical n = {n}, la = {la}, r = {r}"
                );
                let monotone = monotone_hurwitz_class(&la, r, &alg).unwrap();
                assert_eq!(
                    monotone,
                    hurwitz_brute_force(&la, r, true),
                    "monotone n = {n}, la = {la}, r = {r}"
                );
            }
        }
    }
}

#[test]
fn frobenius_counts_match_census_sweeps() {
    for (n, m) in [(4usize, 2usize), (5, 2), (4, 3), (5, 3)] {
        let census = factorization_census_brute_force(n, m).unwrap();
        let classes = partitions_of(n);
        // every combination, present in the census or not
        let mut combos: Vec<Vec<Partition>> = vec![Vec::new()];
        for _ in 0..m {
            combos = combos
                .into_iter()
                .flat_map(|c| {
                    classes.iter().map(move |la| {
                        let mut c2 = c.clone();
                        c2.push(la.clone());
                        c2
                    })
                })
                .collect();
        }
        for las in &combos {
            for mu in &classes {
                let want = census
                    .get(&(las.clone(), mu.clone()))
                    .cloned()
                    .unwrap_or_else(BigUint::zero);
                let got = count_factorizations_char(las, mu).unwrap();
                assert_eq!(got, want, "n = {n}, las = {las:?}, mu = {mu}");
            }
        }
    }
}
