//! Murnaghan-Nakayama evaluation of irreducible symmetric group characters.
//!
//! A partition theta with at most L rows is stored as the beta-set
//! { theta_i + L - i : 1 <= i <= L } of distinct shifted parts. Removing a
//! border strip of length k from row i is exactly moving the particle b to
//! b - k, legal when b - k is free; the strip height parity is the number of
//! particles strictly between b - k and b (each corresponds to a row the
//! strip passes through). The empty shape is the staircase {0, .., L-1}.

use crate::CharError;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::HashMap;
use symcore::{factorial, Partition};

fn beta_set(theta: &Partition) -> Vec<usize> {
    let l = theta.len().max(1);
    let parts = theta.parts();
    // ascending order; beta[j] corresponds to row l - j
    (0..l)
        .map(|j| {
            let i = l - j; // 1-based row index
            let part = if i <= parts.len() { parts[i - 1] } else { 0 };
            part + l - i
        })
        .collect()
}

fn is_staircase(beta: &[usize]) -> bool {
    beta.iter().enumerate().all(|(j, &b)| b == j)
}

type Memo = HashMap<(Vec<usize>, usize), BigInt>;

fn chi_rec(beta: &mut Vec<usize>, mu: &[usize], depth: usize, memo: &mut Memo) -> BigInt {
    if depth == mu.len() {
        debug_assert!(is_staircase(beta));
        return BigInt::one();
    }
    let key = (beta.clone(), depth);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let k = mu[depth];
    let mut total = BigInt::zero();
    for idx in 0..beta.len() {
        let b = beta[idx];
        if b < k {
            continue;
        }
        let target = b - k;
        if beta.contains(&target) {
            continue;
        }
        let crossed = beta.iter().filter(|&&c| c > target && c < b).count();
        // move the particle, keeping the vector sorted ascending
        beta.remove(idx);
        let pos = beta.partition_point(|&c| c < target);
        beta.insert(pos, target);
        let sub = chi_rec(beta, mu, depth + 1, memo);
        beta.remove(pos);
        let back = beta.partition_point(|&c| c < b);
        beta.insert(back, b);
        if crossed % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// Irreducible character chi^theta evaluated on the class of cycle type mu.
pub fn mn_character(theta: &Partition, mu: &Partition) -> Result<BigInt, CharError> {
    if theta.sum() != mu.sum() {
        return Err(CharError::SizeMismatch(theta.sum(), mu.sum()));
    }
    let mut beta = beta_set(theta);
    let mut memo = Memo::new();
    Ok(chi_rec(&mut beta, mu.parts(), 0, &mut memo))
}

/// Dimension f^theta, i.e. the character value on the identity class.
pub fn dimension(theta: &Partition) -> BigInt {
    let n = theta.sum();
    let ones = Partition::new(vec![1; n]).expect("column shape");
    mn_character(theta, &ones).expect("sizes match")
}

/// Full character table of S_n. Rows and columns are both indexed by
/// `partitions_of(n)` in its reverse-lexicographic order.
pub struct CharTable {
    pub n: usize,
    pub shapes: Vec<Partition>,
    pub classes: Vec<Partition>,
    pub values: Vec<Vec<BigInt>>,
}

impl CharTable {
    pub fn value(&self, theta_idx: usize, class_idx: usize) -> &BigInt {
        &self.values[theta_idx][class_idx]
    }

    /// Row orthogonality: sum_mu |Cl(mu)| chi^a_mu chi^b_mu = delta_{ab} n!.
    pub fn rows_orthogonal(&self) -> bool {
        let nfact = BigInt::from(factorial(self.n));
        for a in 0..self.shapes.len() {
            for b in 0..self.shapes.len() {
                let mut acc = BigInt::zero();
                for (c, mu) in self.classes.iter().enumerate() {
                    acc += BigInt::from(mu.class_size()) * &self.values[a][c] * &self.values[b][c];
                }
                let want = if a == b { nfact.clone() } else { BigInt::zero() };
                if acc != want {
                    return false;
                }
            }
        }
        true
    }

    /// Column orthogonality: sum_theta chi^theta_la chi^theta_mu = delta z_la.
    pub fn columns_orthogonal(&self) -> bool {
        for (a, la) in self.classes.iter().enumerate() {
            for b in 0..self.classes.len() {
                let mut acc = BigInt::zero();
                for row in &self.values {
                    acc += &row[a] * &row[b];
                }
                let want = if a == b { BigInt::from(la.z()) } else { BigInt::zero() };
                if acc != want {
                    return false;
                }
            }
        }
        true
    }
}

pub fn character_table(n: usize) -> CharTable {
    let shapes = symcore::partitions_of(n);
    let classes = shapes.clone();
    let values = shapes
        .iter()
        .map(|theta| {
            classes
                .iter()
                .map(|mu| mn_character(theta, mu).expect("sizes match"))
                .collect()
        })
        .collect();
    CharTable { n, shapes, classes, values }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Independent dimension formula: n! over the product of hook lengths.
    fn dimension_by_hooks(theta: &Partition) -> BigInt {
        let parts = theta.parts();
        let conj: Vec<usize> = (1..=theta.parts().first().copied().unwrap_or(0))
            .map(|j| parts.iter().filter(|&&p| p >= j).count())
            .collect();
        let mut hooks = BigUint::from(1u32);
        for (i, &row) in parts.iter().enumerate() {
            for j in 1..=row {
                let arm = row - j;
                let leg = conj[j - 1] - (i + 1);
                hooks *= BigUint::from(arm + leg + 1);
            }
        }
        let nfact = factorial(theta.sum());
        assert!((&nfact % &hooks).bits() == 0, "hook product must divide n!");
        BigInt::from(nfact / hooks)
    }

    #[test]
    fn trivial_and_sign_rows() {
        for n in 1..=7 {
            for mu in symcore::partitions_of(n) {
                assert_eq!(mn_character(&p(&[n]), &mu).unwrap(), BigInt::one());
                let sign = if (n - mu.len()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(mn_character(&p(&vec![1; n]), &mu).unwrap(), BigInt::from(sign));
            }
        }
    }

    #[test]
    fn s3_table_matches_hand_computation() {
        let t = character_table(3);
        // classes in reverse-lex order: [3], [2,1], [1,1,1]
        assert_eq!(t.classes, vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        let want: Vec<Vec<i64>> = vec![vec![1, 1, 1], vec![-1, 0, 2], vec![1, -1, 1]];
        for (i, row) in want.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                assert_eq!(t.values[i][j], BigInt::from(*v), "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn hook_ribbon_value_frozen() {
        let v = mn_character(&p(&[5, 4, 3]), &p(&[3, 3, 2, 2, 1, 1])).unwrap();
        assert_eq!(v, BigInt::from(-2));
    }

    #[test]
    fn dimensions_match_hook_lengths_up_to_7() {
        for n in 1..=7 {
            for theta in symcore::partitions_of(n) {
                assert_eq!(dimension(&theta), dimension_by_hooks(&theta), "theta = {theta}");
            }
        }
    }

    #[test]
    fn size_mismatch_rejected() {
        assert!(mn_character(&p(&[2, 1]), &p(&[2, 2])).is_err());
    }
}
