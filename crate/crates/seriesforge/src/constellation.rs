//! Planar m-constellations: the catalytic equation F = 1 + xt (F + Omega)^m (1),
//! its closed-form solution in the (z, u) frame, and the change of variables
//! connecting the two. Here t marks hyperedges, x the outer hyperface degree
//! divided by m, and p_k an internal hyperface of degree mk.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::series::{fixed_point, ratio};
use crate::{binomial, omega_op, Frame, SeriesError, TruncSeries};

/// Standard frame for constellation series: every monomial of a counting
/// series satisfies deg_x + sum k deg_{p_k} = deg_t, so x stays within
/// order+2 and each p_k within order.
pub(crate) fn counting_frame(k_max: usize, order: usize) -> Arc<Frame> {
    Frame::with_p_block(&[("t", order as u16), ("x", order as u16 + 2)], k_max, order as u16)
}

/// sum_{k=1..k_max} coeff(k) p_k z^k for any per-index rational weights.
pub(crate) fn p_weighted_sum(
    z: &TruncSeries,
    k_max: usize,
    coeff: impl Fn(usize) -> BigRational,
) -> TruncSeries {
    let frame = z.frame().clone();
    let mut acc = TruncSeries::zero(&frame);
    let mut z_pow = TruncSeries::one(&frame);
    for k in 1..=k_max {
        z_pow = &z_pow * z;
        let c = coeff(k);
        if c.is_zero() {
            continue;
        }
        let p_k = TruncSeries::monomial(&frame, &[(&format!("p{k}"), 1)], c);
        acc = &acc + &(&p_k * &z_pow);
    }
    acc
}

/// gamma = sum_k C(mk-1, k) p_k z^k, the vertex-weight sum driving the
/// change of variables t = z (1+gamma)^{1-m}.
pub fn gamma_series(z: &TruncSeries, m: usize, k_max: usize) -> TruncSeries {
    p_weighted_sum(z, k_max, |k| {
        BigRational::from_integer(binomial((m * k) as i64 - 1, k as i64))
    })
}

/// Solve z = t (1+gamma(z))^{m-1} and u = x (1+uz)^m by fixed point in the
/// given frame; both gain one t-order per step.
pub fn planar_change_of_vars(
    frame: &Arc<Frame>,
    m: usize,
    k_max: usize,
) -> Result<(TruncSeries, TruncSeries), SeriesError> {
    let order = frame.cap("t") as usize;
    let t = TruncSeries::var(frame, "t");
    let x = TruncSeries::var(frame, "x");
    let z = fixed_point(t.clone(), order + 2, "change of variables for z", |z| {
        &t * &gamma_series(z, m, k_max).add_int(1).pow(m as u32 - 1)
    })?;
    let u = fixed_point(x.clone(), order + 2, "change of variables for u", |u| {
        &x * &(u * &z).add_int(1).pow(m as u32)
    })?;
    Ok((z, u))
}

/// Rooted planar m-constellations by iterating the root-deletion equation.
pub fn constellation_planar(
    m: usize,
    k_max: usize,
    order: usize,
) -> Result<TruncSeries, SeriesError> {
    assert!(m >= 2, "constellations need m >= 2");
    let frame = counting_frame(k_max, order);
    let xt = TruncSeries::monomial(&frame, &[("t", 1), ("x", 1)], ratio(1, 1));
    fixed_point(TruncSeries::one(&frame), order + 2, "planar constellation equation", |f| {
        // (F + Omega)^m applied to 1
        let mut g = TruncSeries::one(&frame);
        for _ in 0..m {
            g = &(f * &g) + &omega_op(&g, k_max);
        }
        (&xt * &g).add_int(1)
    })
}

/// The same series from the closed form
/// 1 + A = (1+uz) (1 - sum_k p_k z^k sum_{l=1}^{(m-1)k-1} (uz)^l C(mk-1, k+l))
/// carried back through the change of variables.
pub fn constellation_planar_closed_form(
    m: usize,
    k_max: usize,
    order: usize,
) -> Result<TruncSeries, SeriesError> {
    assert!(m >= 2, "constellations need m >= 2");
    let frame = counting_frame(k_max, order);
    let (z, u) = planar_change_of_vars(&frame, m, k_max)?;
    let uz = &u * &z;
    let mut correction = TruncSeries::zero(&frame);
    for k in 1..=k_max {
        let bound = (m - 1) * k;
        let mut inner = TruncSeries::zero(&frame);
        let mut uz_pow = TruncSeries::one(&frame);
        for l in 1..bound {
            uz_pow = &uz_pow * &uz;
            let c = binomial((m * k) as i64 - 1, (k + l) as i64);
            if c.is_zero() {
                continue;
            }
            inner = &inner + &uz_pow.scale(&BigRational::from_integer(c));
        }
        if inner.is_zero() {
            continue;
        }
        let p_k = TruncSeries::var(&frame, &format!("p{k}"));
        correction = &correction + &(&(&p_k * &z.pow(k as u32)) * &inner);
    }
    Ok(&uz.add_int(1) * &(&TruncSeries::one(&frame) - &correction))
}

/// Closed product formula for the number of rooted planar m-constellations
/// with n hyperedges and d_k hyperfaces of degree mk (outer face included in
/// the profile): m (m-1)^f ((m-1)n)! / ((m-1)n - f + 2)! prod C(mk-1, k-1)^{d_k} / d_k!
/// with f = sum d_k.
pub fn constellation_profile_count(m: usize, n: usize, profile: &[usize]) -> BigRational {
    let f: usize = profile.iter().sum();
    let weight: usize = profile.iter().enumerate().map(|(i, d)| (i + 1) * d).sum();
    assert_eq!(weight, n, "hyperface degrees must sum to mn");
    let top = (m - 1) * n;
    if f > top + 2 {
        return BigRational::zero();
    }
    let mut num = BigInt::from(m);
    for _ in 0..f {
        num *= m as i64 - 1;
    }
    // ((m-1)n)! / ((m-1)n - f + 2)! as a falling factorial, except the two
    // lowest factors when f < 2.
    let mut ratio_part = BigRational::from_integer(num);
    if f >= 2 {
        for v in (top - f + 3)..=top {
            ratio_part *= BigRational::from_integer(BigInt::from(v as i64));
        }
    } else {
        for v in (top + 1)..=(top + 2 - f) {
            ratio_part /= BigRational::from_integer(BigInt::from(v as i64));
        }
    }
    for (i, &d) in profile.iter().enumerate() {
        let k = (i + 1) as i64;
        let b = BigRational::from_integer(binomial(m as i64 * k - 1, k - 1));
        for _ in 0..d {
            ratio_part *= &b;
        }
        let mut fact = BigInt::from(1);
        for j in 2..=d as i64 {
            fact *= j;
        }
        ratio_part /= BigRational::from_integer(fact);
    }
    ratio_part
}
