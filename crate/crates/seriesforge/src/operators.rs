//! The two face operators of the catalytic map equations.
//!
//! omega_op cuts the outer face: it multiplies by theta = sum_k p_k x^{-k}
//! and keeps the nonnegative part in x, turning outer degree into an internal
//! face weight. gamma_op is the derivation sum_k k x^k d/dp_k: it merges one
//! internal face back into the outer face. Both act termwise on the sparse
//! representation.

use num_traits::Zero;

use crate::series::ratio;
use crate::TruncSeries;

/// [x^{>=0}] (theta F) with theta = sum_{k=1..theta_k} p_k x^{-k}.
/// Panics if the frame lacks x or any p_k for k <= theta_k.
pub fn omega_op(f: &TruncSeries, theta_k: usize) -> TruncSeries {
    let frame = f.frame().clone();
    let x_slot = frame.slot("x");
    let p_slot: Vec<usize> = (1..=theta_k).map(|k| frame.slot(&format!("p{k}"))).collect();
    let mut out = TruncSeries::zero(&frame);
    for (key, coeff) in f.terms() {
        let a = key[x_slot] as usize;
        for k in 1..=theta_k.min(a) {
            let mut exps: Vec<u16> = key.to_vec();
            exps[x_slot] -= k as u16;
            exps[p_slot[k - 1]] += 1;
            out.insert(exps, coeff.clone());
        }
    }
    out
}

/// The derivation sum_k k x^k d/dp_k over the frame's whole face block.
pub fn gamma_op(f: &TruncSeries) -> TruncSeries {
    let frame = f.frame().clone();
    let x_slot = frame.slot("x");
    let p_slots = frame.p_slots().to_vec();
    let mut out = TruncSeries::zero(&frame);
    for (key, coeff) in f.terms() {
        for &(slot, k) in &p_slots {
            let mult = key[slot];
            if mult == 0 {
                continue;
            }
            let c = coeff * &ratio(k as i64 * mult as i64, 1);
            if c.is_zero() {
                continue;
            }
            let mut exps: Vec<u16> = key.to_vec();
            exps[slot] -= 1;
            let lifted = exps[x_slot] as u32 + k as u32;
            if lifted > u16::MAX as u32 {
                continue;
            }
            exps[x_slot] = lifted as u16;
            out.insert(exps, c);
        }
    }
    out
}
