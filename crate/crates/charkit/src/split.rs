//! Littlewood decomposition: m-quotients, the sign of a complete m-ribbon
//! removal, the factorization of chi^theta on classes with all cycle lengths
//! divisible by m, plus the content-product polynomial H_theta and the
//! class-sum identity it satisfies.

use crate::{expect_integer, mn_character, rat_int, CharError};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use symcore::{factorial, partitions_of, Partition};

#[derive(Debug, Clone)]
pub struct MSplit {
    /// quotient_i collects the particles of residue i, for i = 0, .., m-1
    pub quotients: Vec<Partition>,
    /// sign of any complete removal of |theta|/m ribbons of length m
    pub sign: i8,
}

fn beta_set_multiple(theta: &Partition, m: usize) -> Vec<usize> {
    let l0 = theta.len().max(1);
    let l = l0.div_ceil(m) * m;
    let parts = theta.parts();
    let mut beta: Vec<usize> = (1..=l)
        .map(|i| {
            let part = if i <= parts.len() { parts[i - 1] } else { 0 };
            part + l - i
        })
        .collect();
    beta.sort_unstable();
    beta
}

fn partition_from_beta(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable();
    let parts: Vec<usize> = beta.iter().enumerate().map(|(j, &b)| b - j).collect();
    Partition::from_unsorted(parts)
}

/// Splits theta into its m-quotient if the m-core is empty, returning the
/// quotients together with the ribbon-removal sign; `None` when theta has a
/// nonempty m-core (equivalently, some residue class of the beta-set is
/// unbalanced).
pub fn m_split(theta: &Partition, m: usize) -> Result<Option<MSplit>, CharError> {
    if m == 0 {
        return Err(CharError::BadArgument("modulus m must be positive".into()));
    }
    let mut beta = beta_set_multiple(theta, m);
    let l = beta.len();
    let per_class = l / m;
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); m];
    for &b in &beta {
        buckets[b % m].push(b / m);
    }
    if buckets.iter().any(|bk| bk.len() != per_class) {
        return Ok(None);
    }
    let quotients: Vec<Partition> = buckets.into_iter().map(partition_from_beta).collect();
    debug_assert_eq!(quotients.iter().map(|q| q.sum()).sum::<usize>() * m, theta.sum());

    // complete removal: any order gives the same sign, so take the first
    // movable particle each round
    let mut sign = 1i8;
    let mut moves = 0usize;
    loop {
        let done = beta.iter().enumerate().all(|(j, &b)| b == j);
        if done {
            break;
        }
        let idx = (0..beta.len())
            .find(|&i| beta[i] >= m && !beta.contains(&(beta[i] - m)))
            .expect("empty core guarantees a movable particle");
        let b = beta[idx];
        let target = b - m;
        let crossed = beta.iter().filter(|&&c| c > target && c < b).count();
        if crossed % 2 == 1 {
            sign = -sign;
        }
        beta.remove(idx);
        let pos = beta.partition_point(|&c| c < target);
        beta.insert(pos, target);
        moves += 1;
    }
    assert_eq!(moves * m, theta.sum(), "removal count must match |theta|/m");
    Ok(Some(MSplit { quotients, sign }))
}

/// Both sides of the factorization of chi^theta_{m lambda}: the direct
/// Murnaghan-Nakayama value on the left, and on the right
///
///   z_lambda * sign * sum over multiset splittings lambda = U_i lambda^(i)
///     of prod_i chi^{theta^(i)}_{lambda^(i)} / z_{lambda^(i)}
///
/// with theta^(i) the m-quotients (the sum is 0 when the m-core is nonempty).
pub fn littlewood_factor_check(
    theta: &Partition,
    m: usize,
    lambda: &Partition,
) -> Result<(BigInt, BigInt), CharError> {
    if m == 0 {
        return Err(CharError::BadArgument("modulus m must be positive".into()));
    }
    if theta.sum() != m * lambda.sum() {
        return Err(CharError::SizeMismatch(theta.sum(), m * lambda.sum()));
    }
    let scaled = lambda.scaled(m);
    let lhs = mn_character(theta, &scaled)?;
    let rhs = match m_split(theta, m)? {
        None => BigInt::zero(),
        Some(split) => {
            let mut acc = BigRational::zero();
            let values: Vec<(usize, usize)> = {
                let mut v: Vec<(usize, usize)> = lambda
                    .multiplicities()
                    .into_iter()
                    .collect();
                v.sort_unstable();
                v
            };
            let mut slots: Vec<Vec<usize>> = vec![Vec::new(); m];
            distribute(&values, 0, &mut slots, &split, &mut acc)?;
            let total = rat_int(&BigInt::from(lambda.z())) * acc;
            let total = expect_integer(&total, "littlewood right side");
            if split.sign < 0 {
                -total
            } else {
                total
            }
        }
    };
    Ok((lhs, rhs))
}

fn distribute(
    values: &[(usize, usize)],
    vi: usize,
    slots: &mut Vec<Vec<usize>>,
    split: &MSplit,
    acc: &mut BigRational,
) -> Result<(), CharError> {
    if vi == values.len() {
        let mut term = BigRational::one();
        for (slot, quotient) in slots.iter().zip(&split.quotients) {
            let part = Partition::from_unsorted(slot.clone());
            if part.sum() != quotient.sum() {
                return Ok(());
            }
            let chi = mn_character(quotient, &part)?;
            if chi.is_zero() {
                return Ok(());
            }
            term *= rat_int(&chi) / rat_int(&BigInt::from(part.z()));
        }
        *acc += term;
        return Ok(());
    }
    let (value, mult) = values[vi];
    // compositions of mult into slots.len() parts
    fn comps(
        value: usize,
        remaining: usize,
        slot: usize,
        values: &[(usize, usize)],
        vi: usize,
        slots: &mut Vec<Vec<usize>>,
        split: &MSplit,
        acc: &mut BigRational,
    ) -> Result<(), CharError> {
        if slot + 1 == slots.len() {
            for _ in 0..remaining {
                slots[slot].push(value);
            }
            distribute(values, vi + 1, slots, split, acc)?;
            for _ in 0..remaining {
                slots[slot].pop();
            }
            return Ok(());
        }
        for take in 0..=remaining {
            for _ in 0..take {
                slots[slot].push(value);
            }
            comps(value, remaining - take, slot + 1, values, vi, slots, split, acc)?;
            for _ in 0..take {
                slots[slot].pop();
            }
        }
        Ok(())
    }
    comps(value, mult, 0, values, vi, slots, split, acc)
}

/// The content product H_theta(x) = prod_i (x - i + 1)(x - i + 2)...(x - i + theta_i),
/// one rising factorial per row.
pub fn h_poly_eval(theta: &Partition, x: &BigRational) -> BigRational {
    let mut acc = BigRational::one();
    for (i0, &part) in theta.parts().iter().enumerate() {
        let i = i0 + 1;
        for j in 0..part {
            let shift = BigRational::from_integer(BigInt::from(j as i64 + 1 - i as i64));
            acc *= x + shift;
        }
    }
    acc
}

/// n! sum over alpha of chi^theta_alpha x^{len(alpha)} / z_alpha; equals
/// f^theta H_theta(x) as a polynomial identity in x.
pub fn power_sum_character_lhs(theta: &Partition, x: &BigRational) -> Result<BigRational, CharError> {
    let n = theta.sum();
    let mut acc = BigRational::zero();
    for alpha in partitions_of(n) {
        let chi = mn_character(theta, &alpha)?;
        if chi.is_zero() {
            continue;
        }
        let mut xpow = BigRational::one();
        for _ in 0..alpha.len() {
            xpow *= x;
        }
        acc += rat_int(&chi) * xpow / rat_int(&BigInt::from(alpha.z()));
    }
    Ok(acc * rat_int(&BigInt::from(factorial(n))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn staircase_two_core_blocks_splitting() {
        // (2,1) is its own 2-core
        assert!(m_split(&p(&[2, 1]), 2).unwrap().is_none());
        // a domino column splits
        let s = m_split(&p(&[1, 1]), 2).unwrap().unwrap();
        assert_eq!(s.quotients.iter().map(|q| q.sum()).sum::<usize>(), 1);
    }

    #[test]
    fn three_split_example_shape() {
        let s = m_split(&p(&[6, 6, 4, 4, 4, 3, 3]), 3).unwrap();
        assert!(s.is_some(), "this shape has empty 3-core");
        let s = s.unwrap();
        assert_eq!(s.quotients.iter().map(|q| q.sum()).sum::<usize>() * 3, 30);
    }

    #[test]
    fn empty_partition_splits_trivially() {
        let s = m_split(&Partition::empty(), 4).unwrap().unwrap();
        assert_eq!(s.sign, 1);
        assert!(s.quotients.iter().all(|q| q.is_empty()));
    }

    #[test]
    fn h_poly_small_values() {
        let x = BigRational::from_integer(BigInt::from(3));
        // theta = [2]: x(x+1) = 12
        assert_eq!(h_poly_eval(&p(&[2]), &x), BigRational::from_integer(BigInt::from(12)));
        // theta = [1,1]: x(x-1) = 6
        assert_eq!(h_poly_eval(&p(&[1, 1]), &x), BigRational::from_integer(BigInt::from(6)));
    }
}
