//! Exact symmetric-group primitives: permutations with 1-based element
//! semantics, integer partitions, conjugacy-class bookkeeping, and small
//! exhaustive generators (all permutations, class elements, fixed-point-free
//! involutions).
//!
//! Composition is left-to-right throughout: `(p * q)(i) = q(p(i))`. Every
//! downstream module leans on this single convention, so it is enforced here
//! and nowhere re-decided.

mod partition;
mod perm;

pub use partition::{partitions_of, Partition};
pub use perm::{
    class_elements, fixed_point_free_involutions, for_each_image_word, orbit_of_point,
    perms_of_degree, Perm,
};

use num_bigint::BigUint;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SymError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
}

pub fn factorial(n: usize) -> BigUint {
    let mut acc = BigUint::from(1u32);
    for k in 2..=n {
        acc *= BigUint::from(k);
    }
    acc
}

/// (2n-1)!! = number of fixed-point-free involutions on 2n points.
pub fn double_factorial_odd(n: usize) -> BigUint {
    let mut acc = BigUint::from(1u32);
    let mut k = 1usize;
    while k < 2 * n {
        acc *= BigUint::from(k);
        k += 2;
    }
    acc
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let mut acc = BigUint::from(1u32);
    for i in 0..k.min(n - k) {
        acc *= BigUint::from(n - i);
        acc /= BigUint::from(i + 1);
    }
    acc
}
