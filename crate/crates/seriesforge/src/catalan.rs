//! Fixed points of the three warm-up catalytic equations: plane trees,
//! positive lattice paths with the finishing-height catalyst, and rooted
//! planar maps with the outer-degree catalyst.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::series::fixed_point;
use crate::{binomial, Frame, SeriesError, TruncSeries};

pub struct CatalanSuite {
    /// T(t) with t T^2 - T + 1 = 0; t marks edges of a plane tree.
    pub tree: TruncSeries,
    /// D(t) = P(t,0), the even-support walk series.
    pub dyck: TruncSeries,
    /// P(t,x): positive walks, x marking the finishing height.
    pub positive: TruncSeries,
    /// M(t,1): rooted planar maps by edges.
    pub planar_diag: TruncSeries,
    /// M(t,x): rooted planar maps, x marking the outer face degree.
    pub planar: TruncSeries,
}

pub fn catalan_suite(order: usize) -> Result<CatalanSuite, SeriesError> {
    let order16 = order as u16;
    let steps = order + 3;

    let frame_t = Frame::new(&[("t", order16)]);
    let t = TruncSeries::var(&frame_t, "t");
    let tree = fixed_point(TruncSeries::one(&frame_t), steps, "plane tree equation", |f| {
        (&t * &(f * f)).add_int(1)
    })?;

    // Walks gain one step per iteration and the finishing height is at most
    // the length, so x never outgrows order+1.
    let frame_walk = Frame::new(&[("t", order16), ("x", order16 + 2)]);
    let (t_w, x_w) = (TruncSeries::var(&frame_walk, "t"), TruncSeries::var(&frame_walk, "x"));
    let positive = fixed_point(TruncSeries::one(&frame_walk), steps, "positive walk equation", |f| {
        let up = &(&t_w * &x_w) * f;
        let down = &t_w
            * &(f - &f.subs_zero("x"))
                .shift_down("x", 1)
                .expect("subtracting the x^0 slice leaves valuation >= 1");
        (&up + &down).add_int(1)
    })?;
    let dyck = positive.subs_zero("x").project(&frame_t);

    // The outer face degree of a map with n edges is at most 2n.
    let frame_map = Frame::new(&[("t", order16), ("x", 2 * order16 + 2)]);
    let (t_m, x_m) = (TruncSeries::var(&frame_map, "t"), TruncSeries::var(&frame_map, "x"));
    let planar = fixed_point(TruncSeries::one(&frame_map), steps, "planar map equation", |f| {
        let bridge = &(&t_m * &(&x_m * &x_m)) * &(f * f);
        let merge = &(&t_m * &x_m) * &(&x_m * f).divided_difference_at_one("x");
        (&bridge + &merge).add_int(1)
    })?;
    let planar_diag = planar.subs_one("x").project(&frame_t);

    Ok(CatalanSuite { tree, dyck, positive, planar_diag, planar })
}

/// C(2n, n)/(n+1).
pub fn catalan_number(n: usize) -> BigRational {
    let n = n as i64;
    BigRational::new(binomial(2 * n, n), BigInt::from(n + 1))
}

/// Rooted planar maps with n edges: 2 * 3^n / ((n+1)(n+2)) * C(2n, n).
pub fn planar_map_count_closed_form(n: usize) -> BigRational {
    let n = n as i64;
    let mut three_n = BigInt::from(1);
    for _ in 0..n {
        three_n *= 3;
    }
    BigRational::new(BigInt::from(2) * three_n * binomial(2 * n, n), BigInt::from((n + 1) * (n + 2)))
}
