//! The rotation order on Dyck paths of a fixed semilength: comparison through
//! distance vectors, the poset as a whole, and exact interval counts.

use crate::dyck::{all_dyck_paths, DyckPath};
use crate::poset::Poset;
use crate::TamariError;
use num_bigint::BigUint;
use std::collections::BTreeMap;
use symcore::{binomial, factorial};

/// P <= Q in the rotation order iff the distance vectors compare pointwise.
pub fn tamari_leq(p: &DyckPath, q: &DyckPath) -> Result<bool, TamariError> {
    if p.semilength() != q.semilength() {
        return Err(TamariError::SizeMismatch(format!(
            "cannot compare semilengths {} and {}",
            p.semilength(),
            q.semilength()
        )));
    }
    Ok(p.distance_vector().iter().zip(q.distance_vector()).all(|(a, b)| *a <= b))
}

pub struct TamariOrder {
    paths: Vec<DyckPath>,
    dvecs: Vec<Vec<usize>>,
}

impl TamariOrder {
    pub fn new(n: usize) -> TamariOrder {
        let paths = all_dyck_paths(n);
        let dvecs = paths.iter().map(|p| p.distance_vector()).collect();
        TamariOrder { paths, dvecs }
    }

    pub fn paths(&self) -> &[DyckPath] {
        &self.paths
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.dvecs[i].iter().zip(&self.dvecs[j]).all(|(a, b)| a <= b)
    }

    pub fn index_of(&self, p: &DyckPath) -> Option<usize> {
        self.paths.iter().position(|q| q == p)
    }

    /// Order matrix from distance vectors.
    pub fn poset(&self) -> Poset {
        Poset::from_leq(self.paths.len(), |a, b| self.leq(a, b))
    }

    /// Order matrix built the long way round: rotation covers, then the
    /// reflexive-transitive closure.
    pub fn poset_from_rotations(&self) -> Poset {
        let index: BTreeMap<&DyckPath, usize> =
            self.paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let covers: Vec<Vec<usize>> = self
            .paths
            .iter()
            .map(|p| p.covers_up().iter().map(|q| index[q]).collect())
            .collect();
        Poset::from_covers(self.paths.len(), &covers)
    }

    pub fn interval_count(&self) -> BigUint {
        self.poset().interval_count()
    }

    pub fn sync_interval_count(&self) -> BigUint {
        let mut total = 0u64;
        let canopies: Vec<_> = self.paths.iter().map(|p| p.canopy()).collect();
        for i in 0..self.paths.len() {
            for j in 0..self.paths.len() {
                if canopies[i] == canopies[j] && self.leq(i, j) {
                    total += 1;
                }
            }
        }
        BigUint::from(total)
    }

    /// Coefficient k counts pairs P <= Q of equal canopy whose upper path Q
    /// ends with exactly k down steps.
    pub fn sync_interval_polynomial(&self) -> Vec<BigUint> {
        let n = self.paths.first().map_or(0, |p| p.semilength());
        let mut coeffs = vec![BigUint::from(0u32); n + 1];
        let canopies: Vec<_> = self.paths.iter().map(|p| p.canopy()).collect();
        for i in 0..self.paths.len() {
            for j in 0..self.paths.len() {
                if canopies[i] == canopies[j] && self.leq(i, j) {
                    coeffs[self.paths[j].last_descent()] += 1u32;
                }
            }
        }
        coeffs
    }
}

pub fn interval_count(n: usize) -> BigUint {
    TamariOrder::new(n).interval_count()
}

/// 2 (4n+1 choose n-1) / (n (n+1)).
pub fn interval_count_closed_form(n: usize) -> BigUint {
    assert!(n >= 1);
    let num = BigUint::from(2u32) * binomial(4 * n + 1, n - 1);
    let den = BigUint::from(n as u64 * (n as u64 + 1));
    assert!((&num % &den) == BigUint::from(0u32));
    num / den
}

pub fn sync_interval_count(n: usize) -> BigUint {
    TamariOrder::new(n).sync_interval_count()
}

/// 2 (3n)! / ((n+1)! (2n+1)!).
pub fn sync_interval_count_closed_form(n: usize) -> BigUint {
    let num = BigUint::from(2u32) * factorial(3 * n);
    let den = factorial(n + 1) * factorial(2 * n + 1);
    assert!((&num % &den) == BigUint::from(0u32));
    num / den
}

pub fn sync_interval_polynomial(n: usize) -> Vec<BigUint> {
    TamariOrder::new(n).sync_interval_polynomial()
}
