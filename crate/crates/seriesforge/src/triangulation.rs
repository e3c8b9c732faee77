//! Rooted planar triangulations counted by edges through one-parameter
//! rational substitutions. Writing t^3 = q(s) for a rational q, the counting
//! series is a rational function of s; reversion of q recovers s as a series
//! in w = t^3 and the edge series follows by inflation.

use crate::series::Frame;
use crate::{SeriesError, TruncSeries};

fn inflate_cubed(src: &TruncSeries, order: usize) -> TruncSeries {
    let tf = Frame::new(&[("t", order as u16)]);
    let mut out = TruncSeries::zero(&tf);
    for (key, c) in src.terms() {
        out.insert(vec![3 * key[0]], c.clone());
    }
    out
}

/// (S0, T0) to the given order: S0 counts rooted planar triangulations with
/// neither loops nor multiple edges, T0 the loopless ones, both graded by
/// edge count with the empty map excluded. All edge counts are multiples of
/// three, so both series live on t^{3Z}.
pub fn triangulation_parametrizations(
    order: usize,
) -> Result<(TruncSeries, TruncSeries), SeriesError> {
    if order > 30 {
        return Err(SeriesError::TooLarge(format!(
            "triangulation series to order {order}; reversion degree {} is past the desk range",
            order / 3
        )));
    }
    let w_ord = (order / 3) as u16;
    if w_ord == 0 {
        let tf = Frame::new(&[("t", order as u16)]);
        return Ok((TruncSeries::zero(&tf), TruncSeries::zero(&tf)));
    }
    let wf = Frame::new(&[("w", w_ord)]);
    let v = TruncSeries::var(&wf, "w");
    let one = TruncSeries::one(&wf);

    // Simple: w = s(1-s)^3, S0 = s(1-2s).
    let q_simple = &v * &(&one - &v).pow(3);
    let s = q_simple.reversion()?;
    let s0 = &s - &(&s * &s).scale_int(2);

    // Loopless: w = s(1-2s)^2, T0 = s(1-4s)/(1-2s)^2.
    let q_loopless = &v * &(&one - &v.scale_int(2)).pow(2);
    let s = q_loopless.reversion()?;
    let t0 = &(&s * &s.scale_int(-4).add_int(1))
        * &(&one - &s.scale_int(2)).pow(2).inverse_unit()?;

    Ok((inflate_cubed(&s0, order), inflate_cubed(&t0, order)))
}
