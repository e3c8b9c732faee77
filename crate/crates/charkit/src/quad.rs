//! Integer coefficients expanding hypermaps with even-structured face data
//! over marked constellations, and an exhaustive verifier for the expansion
//! at desk scale.
//!
//! For a mark vector k = (k_1, .., k_{m-1}) set
//!
//!   e_j = prod_{i != j, 1 <= i <= m} (i - j)^{k_{(i-j) mod m}}
//!
//! and d = 2(e_1 + .. + e_p) for m = 2p, d = e_{p+1} + 2(e_1 + .. + e_p) for
//! m = 2p + 1. Then c = d / m is a positive integer, and rooted m-hypermaps
//! with n hyperedges, genus g and hyperface degrees in m*D decompose as
//!
//!   H^{(g)} = sum_{i=0}^{g} m^{2g-2i} sum_{|k| = 2i} c_k C^{(g-i, k)}
//!
//! where C^{(g-i, k)} counts rooted m-constellations with face degrees in D
//! and k_i marked vertices of color i, marks unordered and distinct.

use crate::CharError;
use mapkit::{count_rooted_constellations_marked, count_rooted_hypermaps, CycleFilter};
use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use std::collections::BTreeSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadCoeffs {
    pub d: BigInt,
    pub c: BigInt,
}

pub fn quad_coeffs(m: usize, k: &[usize]) -> Result<QuadCoeffs, CharError> {
    if m < 2 {
        return Err(CharError::BadArgument("need m >= 2".into()));
    }
    if k.len() != m - 1 {
        return Err(CharError::BadArgument(format!(
            "expected {} mark counts for m = {m}, got {}",
            m - 1,
            k.len()
        )));
    }
    let e = |j: i64| -> BigInt {
        let mut acc = BigInt::from(1);
        for i in 1..=m as i64 {
            if i == j {
                continue;
            }
            let residue = (i - j).rem_euclid(m as i64) as usize;
            debug_assert!(residue >= 1);
            acc *= BigInt::from(i - j).pow(k[residue - 1] as u32);
        }
        acc
    };
    let p = m / 2;
    let mut d = BigInt::zero();
    for j in 1..=p {
        d += e(j as i64) * BigInt::from(2);
    }
    if m % 2 == 1 {
        d += e(p as i64 + 1);
    }
    assert!(d.is_positive(), "d must be positive, got {d} for m = {m}, k = {k:?}");
    let modulus = BigInt::from(m as i64);
    assert!((&d % &modulus).is_zero(), "m must divide d, got {d} for m = {m}, k = {k:?}");
    let c = &d / &modulus;
    Ok(QuadCoeffs { d, c })
}

#[derive(Debug)]
pub struct RelationReport {
    pub hypermap_count: BigUint,
    pub constellation_sum: BigUint,
}

impl RelationReport {
    pub fn holds(&self) -> bool {
        self.hypermap_count == self.constellation_sum
    }
}

fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Exhaustively counts both sides of the expansion for n hyperedges at genus
/// g with hyperface half-degrees (and constellation face degrees) drawn from
/// `degrees`.
pub fn verify_quadrangulation_relation(
    m: usize,
    g: usize,
    n: usize,
    degrees: &BTreeSet<usize>,
) -> Result<RelationReport, CharError> {
    if m < 2 {
        return Err(CharError::BadArgument("need m >= 2".into()));
    }
    let filter = CycleFilter::LengthsIn(degrees.clone());
    let hypermap_count = count_rooted_hypermaps(m, n, Some(g), &filter)?;
    let mut rhs = BigUint::zero();
    for i in 0..=g {
        let mut level = BigUint::zero();
        for k in compositions(2 * i, m - 1) {
            let coeffs = quad_coeffs(m, &k)?;
            let c = coeffs.c.to_biguint().expect("c is positive");
            let marked = count_rooted_constellations_marked(m, n, Some(g - i), &filter, &k)?;
            level += c * marked;
        }
        let scale = BigUint::from(m as u32).pow(2 * (g - i) as u32);
        rhs += scale * level;
    }
    Ok(RelationReport { hypermap_count, constellation_sum: rhs })
}
