//! Counting factorizations in S_n through characters.
//!
//! For cycle types lambda^(1), .., lambda^(m) and mu, the number of tuples
//! (s_1, .., s_m, phi) with s_i in Cl(lambda^(i)), phi in Cl(mu) and
//! s_1 ... s_m phi = id equals
//!
//!   (n!)^m / (z_mu prod_i z_{lambda^(i)})
//!     * sum_theta chi^theta_mu prod_i chi^theta_{lambda^(i)} / (f^theta)^(m-1)
//!
//! and the sum is computed in exact rationals, asserted integral at the end.

use crate::{expect_integer, mn_character, rat_int, CharError};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;
use symcore::{factorial, partitions_of, Partition};

pub fn count_factorizations_char(
    lambdas: &[Partition],
    mu: &Partition,
) -> Result<BigUint, CharError> {
    let n = mu.sum();
    if n == 0 || lambdas.is_empty() {
        return Err(CharError::BadArgument(
            "need a positive degree and at least one factor type".into(),
        ));
    }
    for la in lambdas {
        if la.sum() != n {
            return Err(CharError::SizeMismatch(la.sum(), n));
        }
    }
    let m = lambdas.len();
    let mut spectral = BigRational::zero();
    for theta in partitions_of(n) {
        let chi_mu = mn_character(&theta, mu)?;
        if chi_mu.is_zero() {
            continue;
        }
        let mut term = rat_int(&chi_mu);
        for la in lambdas {
            term *= rat_int(&mn_character(&theta, la)?);
        }
        if term.is_zero() {
            continue;
        }
        let f = crate::dimension(&theta);
        let mut fpow = BigInt::from(1u32);
        for _ in 1..m {
            fpow *= &f;
        }
        spectral += term / rat_int(&fpow);
    }
    let nfact = BigInt::from(factorial(n));
    let mut scale = rat_int(&BigInt::from(1u32));
    for _ in 0..m {
        scale *= rat_int(&nfact);
    }
    let mut zs = rat_int(&BigInt::from(mu.z()));
    for la in lambdas {
        zs *= rat_int(&BigInt::from(la.z()));
    }
    let total = scale * spectral / zs;
    let total = expect_integer(&total, "factorization count");
    assert!(!total.is_negative(), "factorization count must be nonnegative");
    Ok(total.to_biguint().expect("nonnegative"))
}

/// One sweep over S_n^m bucketing every tuple by the cycle types of its
/// entries and of the inverse of their product. The bucket at
/// (la_1, .., la_m; mu) equals `count_factorizations_char(&las, &mu)`.
pub fn factorization_census_brute_force(
    n: usize,
    m: usize,
) -> Result<BTreeMap<(Vec<Partition>, Partition), BigUint>, CharError> {
    if n == 0 || m == 0 {
        return Err(CharError::BadArgument("need positive n and m".into()));
    }
    let mut budget = 1u64;
    let nfact: u64 = (1..=n as u64).product();
    for _ in 0..m {
        budget = budget.saturating_mul(nfact);
        if budget > 20_000_000 {
            return Err(CharError::BadArgument(format!(
                "census sweep over (n!)^m = ({n}!)^{m} is too large"
            )));
        }
    }
    let perms: Vec<symcore::Perm> = symcore::perms_of_degree(n).collect();
    let mut out: BTreeMap<(Vec<Partition>, Partition), BigUint> = BTreeMap::new();
    let mut idx = vec![0usize; m];
    loop {
        let mut types = Vec::with_capacity(m);
        let mut prod = symcore::Perm::identity(n);
        for &i in &idx {
            types.push(perms[i].cycle_type());
            prod = prod.compose(&perms[i]).expect("same degree");
        }
        let mu = prod.inverse().cycle_type();
        *out.entry((types, mu)).or_insert_with(BigUint::zero) += 1u32;
        // advance mixed-radix counter
        let mut pos = m;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < perms.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn single_factor_reduces_to_class_size() {
        for n in 1..=6 {
            for la in partitions_of(n) {
                for mu in partitions_of(n) {
                    let got = count_factorizations_char(&[la.clone()], &mu).unwrap();
                    let want =
                        if la == mu { la.class_size() } else { BigUint::zero() };
                    assert_eq!(got, want, "la = {la}, mu = {mu}");
                }
            }
        }
    }

    #[test]
    fn two_transpositions_to_a_three_cycle() {
        // pairs in Cl([2,1])^2 with product a fixed 3-cycle: 3 of them,
        // times |Cl([3])| = 2 choices of the 3-cycle
        let got = count_factorizations_char(&[p(&[2, 1]), p(&[2, 1])], &p(&[3])).unwrap();
        assert_eq!(got, BigUint::from(6u32));
    }
}
