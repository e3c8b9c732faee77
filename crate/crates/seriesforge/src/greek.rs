//! The auxiliary variables of the bipartite genus recursion: eta, zeta and
//! their indexed families, all linear sums of p_k z^k, together with
//! s = (1-uz)/(1+uz). The key fact checked here is how the face-merging
//! derivation acts on them: each action is a fixed rational expression in s
//! and the variables themselves, independent of the face-degree cutoff.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::constellation::{counting_frame, gamma_series, p_weighted_sum, planar_change_of_vars};
use crate::series::ratio;
use crate::{binomial, expect_equal, gamma_op, SeriesError, TruncSeries};

fn central(k: usize) -> BigInt {
    binomial(2 * k as i64 - 1, k as i64)
}

/// eta_i = sum (k-1) k^i C(2k-1, k) p_k z^k; i = 0 is eta itself.
pub(crate) fn eta_series(z: &TruncSeries, k_max: usize, i: u32) -> TruncSeries {
    p_weighted_sum(z, k_max, |k| {
        let mut w = BigInt::from(k as i64 - 1) * central(k);
        for _ in 0..i {
            w *= k as i64;
        }
        BigRational::from_integer(w)
    })
}

/// zeta = sum (k-1)/(2k-1) C(2k-1, k) p_k z^k.
pub(crate) fn zeta_series(z: &TruncSeries, k_max: usize) -> TruncSeries {
    p_weighted_sum(z, k_max, |k| {
        BigRational::new(BigInt::from(k as i64 - 1) * central(k), BigInt::from(2 * k as i64 - 1))
    })
}

/// zeta_i = sum (-2)^{i+1} k(k-1)...(k-i) / ((2k-1)(2k-3)...(2k-2i-1))
///          C(2k-1, k) p_k z^k, for i >= 1.
pub(crate) fn zeta_i_series(z: &TruncSeries, k_max: usize, i: u32) -> TruncSeries {
    p_weighted_sum(z, k_max, |k| {
        let mut num = BigInt::from(1);
        let mut den = BigInt::from(1);
        for j in 0..=i as i64 {
            num *= k as i64 - j;
            den *= 2 * k as i64 - 1 - 2 * j;
        }
        let mut sign = BigInt::from(1);
        for _ in 0..=i {
            sign *= -2;
        }
        BigRational::new(sign * num * central(k), den)
    })
}

pub struct GreekFrame {
    /// Truncation order; z and t gradings agree since z = t * unit.
    pub order: usize,
    /// Largest face half-degree kept in the frame.
    pub k_max: usize,
    pub z: TruncSeries,
    pub u: TruncSeries,
    pub uz: TruncSeries,
    pub s: TruncSeries,
    pub gamma: TruncSeries,
    pub eta: TruncSeries,
    pub zeta: TruncSeries,
    /// eta_i[i] holds eta_{i+1}.
    pub eta_i: Vec<TruncSeries>,
    /// zeta_i[i] holds zeta_{i+1}.
    pub zeta_i: Vec<TruncSeries>,
}

pub fn greek_frame(order: usize, k_max: usize) -> Result<GreekFrame, SeriesError> {
    let frame = counting_frame(k_max, order);
    let (z, u) = planar_change_of_vars(&frame, 2, k_max)?;
    let uz = &u * &z;
    let one = TruncSeries::one(&frame);
    let s = &(&one - &uz) * &(&one + &uz).inverse_unit()?;
    let gamma = gamma_series(&z, 2, k_max);
    let eta = eta_series(&z, k_max, 0);
    let zeta = zeta_series(&z, k_max);
    let eta_i = (1..=3).map(|i| eta_series(&z, k_max, i)).collect();
    let zeta_i = (1..=3).map(|i| zeta_i_series(&z, k_max, i)).collect();
    Ok(GreekFrame { order, k_max, z, u, uz, s, gamma, eta, zeta, eta_i, zeta_i })
}

/// Laurent polynomials in s, used for the pure-s parts of the derivation
/// images: the map (s - s^{-1}) d/ds stays inside this ring.
type Laurent = BTreeMap<i64, BigRational>;

fn laurent_flow_step(l: &Laurent) -> Laurent {
    let mut out = Laurent::new();
    for (&e, c) in l {
        if e == 0 {
            continue;
        }
        let d = c * BigRational::from_integer(BigInt::from(e));
        // (s - s^{-1}) c e s^{e-1} = c e s^e - c e s^{e-2}
        *out.entry(e).or_insert_with(BigRational::zero) += &d;
        *out.entry(e - 2).or_insert_with(BigRational::zero) -= &d;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

struct SPowers {
    s: TruncSeries,
    s_inv: TruncSeries,
    cache: BTreeMap<i64, TruncSeries>,
}

impl SPowers {
    fn new(s: &TruncSeries) -> Result<SPowers, SeriesError> {
        Ok(SPowers { s: s.clone(), s_inv: s.inverse_unit()?, cache: BTreeMap::new() })
    }

    fn get(&mut self, e: i64) -> TruncSeries {
        if let Some(p) = self.cache.get(&e) {
            return p.clone();
        }
        let base = if e >= 0 { self.s.clone() } else { self.s_inv.clone() };
        let p = base.pow(e.unsigned_abs() as u32);
        self.cache.insert(e, p.clone());
        p
    }

    fn eval(&mut self, l: &Laurent) -> TruncSeries {
        let mut acc = TruncSeries::zero(self.s.frame());
        for (&e, c) in l {
            acc = &acc + &self.get(e).scale(c);
        }
        acc
    }
}

/// Verify the whole table of derivation actions at the given order, with the
/// face alphabet wide enough that every retained coefficient is exact.
pub fn gamma_on_greek_check(order: usize) -> Result<(), SeriesError> {
    let k_max = order.max(3);
    let gf = greek_frame(order, k_max)?;
    let frame = gf.z.frame().clone();
    let one = TruncSeries::one(&frame);

    let s_inv = gf.s.inverse_unit()?;
    let q = &s_inv - &gf.s; // s^{-1} - s
    let s2i = &s_inv * &s_inv;
    let inv_eta = (&one - &gf.eta).inverse_unit()?;
    // (s^{-1} - s) / (4 (1-eta) s^2) and the same with denominator 8
    let a4 = (&(&q * &s2i) * &inv_eta).scale(&ratio(1, 4));
    let a8 = a4.scale(&ratio(1, 2));
    let mut pows = SPowers::new(&gf.s)?;

    let mut checks: Vec<(String, TruncSeries, TruncSeries)> = Vec::new();

    checks.push(("action on z".into(), gamma_op(&gf.z), &gf.z * &a4));
    checks.push((
        "action on u".into(),
        gamma_op(&gf.u),
        &(&gf.u * &s_inv.add_int(-1)) * &a4,
    ));
    checks.push((
        "action on s".into(),
        gamma_op(&gf.s),
        (&(&q * &q) * &(&s2i * &inv_eta)).scale(&ratio(-1, 8)),
    ));
    checks.push((
        "action on uz".into(),
        gamma_op(&gf.uz),
        (&(&s_inv.add_int(-1).pow(2) * &s2i) * &inv_eta).scale(&ratio(1, 4)),
    ));
    checks.push((
        "action on gamma".into(),
        gamma_op(&gf.gamma),
        &(&a4 * &(&gf.eta + &gf.gamma))
            + &(&pows.get(-3) - &s_inv).scale(&ratio(1, 4)),
    ));
    checks.push((
        "action on zeta".into(),
        gamma_op(&gf.zeta),
        &(&(&(&q * &s2i).scale(&ratio(-1, 8)) + &(&a8 * &gf.zeta.add_int(1)))
            + &(&pows.get(-3) - &s_inv).scale(&ratio(1, 8)))
            + &(&gf.s - &one).scale(&ratio(1, 4)),
    ));

    // eta_i for i = 0, 1, 2 with eta_0 = eta: the pure-s part is
    // (1/2^{i+3}) ((s - s^{-1}) d/ds)^{i+1} (s^{-3} - 3 s^{-1} + 2).
    let mut pure: Laurent = Laurent::new();
    pure.insert(-3, ratio(1, 1));
    pure.insert(-1, ratio(-3, 1));
    pure.insert(0, ratio(2, 1));
    for i in 0..=2usize {
        pure = laurent_flow_step(&pure);
        let lhs = if i == 0 { gamma_op(&gf.eta) } else { gamma_op(&gf.eta_i[i - 1]) };
        let next = if i == 0 { &gf.eta_i[0] } else { &gf.eta_i[i] };
        let rhs = &(&a4 * next) + &pows.eval(&pure).scale(&ratio(1, 1 << (i + 3)));
        checks.push((format!("action on eta_{i}"), lhs, rhs));
    }

    // zeta_i for i = 1, 2.
    let s2m1 = &(&gf.s * &gf.s) - &one;
    for i in 1..=2usize {
        let zi = &gf.zeta_i[i - 1];
        let mut bracket = zi.scale_int(2 * i as i64 + 1);
        let mut s_bracket = s2m1.pow(i as u32).scale_int(2 * i as i64 + 1);
        for j in 1..i {
            let sign = if j % 2 == 1 { 1 } else { -1 };
            bracket = &bracket + &gf.zeta_i[i - j - 1].scale_int(sign);
            s_bracket = &s_bracket + &s2m1.pow((i - j) as u32).scale_int(sign);
        }
        let alt = if i % 2 == 0 { 1 } else { -1 };
        bracket = &bracket + &gf.zeta.add_int(1).scale_int(4 * alt);
        s_bracket = s_bracket.add_int(alt);
        let rhs = &(&a8 * &bracket) + &(&q * &s_bracket).scale(&ratio(1, 2));
        checks.push((format!("action on zeta_{i}"), gamma_op(zi), rhs));
    }

    for (name, lhs, rhs) in checks {
        expect_equal(&name, &lhs, &rhs)?;
    }
    Ok(())
}

/// Rank of the coefficient matrix of (eta, eta_1, zeta, zeta_1) on the
/// monomials p_k z^k for k = 2..5, read off the computed series. Full rank 4
/// is the algebraic independence of the four variables.
pub fn greek_independence_rank() -> usize {
    let gf = greek_frame(5, 5).expect("desk-size frame");
    let rows = [&gf.eta, &gf.eta_i[0], &gf.zeta, &gf.zeta_i[0]];
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|g| {
            (2..=5u16)
                .map(|k| {
                    let name = format!("p{k}");
                    g.coeff(&[("t", k), (name.as_str(), 1)])
                })
                .collect()
        })
        .collect();
    // Gaussian elimination over the rationals.
    let mut rank = 0;
    for col in 0..4 {
        let Some(pivot) = (rank..4).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let lead = m[rank][col].clone();
        for r in rank + 1..4 {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &lead;
            for c in col..4 {
                let sub = &factor * &m[rank][c];
                m[r][c] -= sub;
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laurent_flow_on_a_monomial() {
        // (s - s^{-1}) d/ds (s^{-2}) = -2 s^{-2} + 2 s^{-4}
        let mut l = Laurent::new();
        l.insert(-2, ratio(1, 1));
        let out = laurent_flow_step(&l);
        assert_eq!(out.get(&-2), Some(&ratio(-2, 1)));
        assert_eq!(out.get(&-4), Some(&ratio(2, 1)));
        assert_eq!(out.len(), 2);
    }
}
