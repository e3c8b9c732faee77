//! Sparse exact power series truncated per variable.
//!
//! A `Frame` fixes an ordered set of named variables with truncation caps;
//! a `TruncSeries` is a finitely supported map from exponent vectors to big
//! rationals within those caps. Products drop every monomial that exceeds a
//! cap, so arithmetic stays closed and exact on the retained box. Variables
//! named `p1`, `p2`, ... form the face-weight block that the map-counting
//! operators act on.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::SeriesError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    names: Vec<String>,
    caps: Vec<u16>,
    /// (slot, k) for every variable named `p<k>`, sorted by k.
    p_slots: Vec<(usize, u16)>,
}

impl Frame {
    /// Panics on duplicate or empty names: frames are static program data.
    pub fn new(vars: &[(&str, u16)]) -> Arc<Frame> {
        let names: Vec<String> = vars.iter().map(|(n, _)| n.to_string()).collect();
        let caps: Vec<u16> = vars.iter().map(|(_, c)| *c).collect();
        for (i, n) in names.iter().enumerate() {
            assert!(!n.is_empty(), "empty variable name");
            assert!(!names[..i].contains(n), "duplicate variable {n}");
        }
        let mut p_slots: Vec<(usize, u16)> = names
            .iter()
            .enumerate()
            .filter_map(|(slot, n)| parse_p(n).map(|k| (slot, k)))
            .collect();
        p_slots.sort_by_key(|&(_, k)| k);
        Arc::new(Frame { names, caps, p_slots })
    }

    /// Base variables followed by the face-weight block p1..p<k_max>.
    pub fn with_p_block(base: &[(&str, u16)], k_max: usize, p_cap: u16) -> Arc<Frame> {
        let mut vars: Vec<(String, u16)> =
            base.iter().map(|(n, c)| (n.to_string(), *c)).collect();
        for k in 1..=k_max {
            vars.push((format!("p{k}"), p_cap));
        }
        let borrowed: Vec<(&str, u16)> = vars.iter().map(|(n, c)| (n.as_str(), *c)).collect();
        Frame::new(&borrowed)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn cap(&self, name: &str) -> u16 {
        self.caps[self.slot(name)]
    }

    pub fn slot(&self, name: &str) -> usize {
        self.names
            .iter()
            .position(|n| n == name)
            .unwrap_or_else(|| panic!("frame has no variable {name}"))
    }

    /// Slots of the face-weight block as (slot, index) pairs sorted by index.
    pub fn p_slots(&self) -> &[(usize, u16)] {
        &self.p_slots
    }

    fn len(&self) -> usize {
        self.names.len()
    }

    fn total_degree_bound(&self) -> u32 {
        self.caps.iter().map(|&c| c as u32).sum()
    }
}

fn parse_p(name: &str) -> Option<u16> {
    let digits = name.strip_prefix('p')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse::<u16>().ok().filter(|&k| k >= 1)
}

pub(crate) fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    frame: Arc<Frame>,
    terms: BTreeMap<Vec<u16>, BigRational>,
}

impl TruncSeries {
    pub fn zero(frame: &Arc<Frame>) -> TruncSeries {
        TruncSeries { frame: frame.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(frame: &Arc<Frame>, value: BigRational) -> TruncSeries {
        let mut s = TruncSeries::zero(frame);
        if !value.is_zero() {
            s.terms.insert(vec![0; frame.len()], value);
        }
        s
    }

    pub fn int(frame: &Arc<Frame>, value: i64) -> TruncSeries {
        TruncSeries::constant(frame, ratio(value, 1))
    }

    pub fn one(frame: &Arc<Frame>) -> TruncSeries {
        TruncSeries::int(frame, 1)
    }

    pub fn var(frame: &Arc<Frame>, name: &str) -> TruncSeries {
        TruncSeries::monomial(frame, &[(name, 1)], ratio(1, 1))
    }

    pub fn monomial(frame: &Arc<Frame>, exps: &[(&str, u16)], coeff: BigRational) -> TruncSeries {
        let mut key = vec![0u16; frame.len()];
        for (name, e) in exps {
            key[frame.slot(name)] += e;
        }
        let mut s = TruncSeries::zero(frame);
        if !coeff.is_zero() && key.iter().zip(&frame.caps).all(|(e, c)| e <= c) {
            s.terms.insert(key, coeff);
        }
        s
    }

    pub fn frame(&self) -> &Arc<Frame> {
        &self.frame
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u16], &BigRational)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn coeff(&self, exps: &[(&str, u16)]) -> BigRational {
        let mut key = vec![0u16; self.frame.len()];
        for (name, e) in exps {
            key[self.frame.slot(name)] += e;
        }
        self.terms.get(&key).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.terms
            .get(&vec![0u16; self.frame.len()])
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub(crate) fn insert(&mut self, key: Vec<u16>, value: BigRational) {
        if value.is_zero() {
            return;
        }
        if key.iter().zip(&self.frame.caps).any(|(e, c)| e > c) {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += value;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn same_frame(&self, other: &TruncSeries, op: &str) {
        assert!(
            self.frame == other.frame,
            "{op} on mismatched frames {:?} vs {:?}",
            self.frame.names,
            other.frame.names
        );
    }

    pub fn scale(&self, c: &BigRational) -> TruncSeries {
        if c.is_zero() {
            return TruncSeries::zero(&self.frame);
        }
        let terms = self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        TruncSeries { frame: self.frame.clone(), terms }
    }

    pub fn scale_int(&self, c: i64) -> TruncSeries {
        self.scale(&ratio(c, 1))
    }

    /// Nonnegative integer power by repeated squaring.
    pub fn pow(&self, n: u32) -> TruncSeries {
        let mut acc = TruncSeries::one(&self.frame);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power; negative exponents require a unit constant term.
    pub fn powi(&self, n: i64) -> Result<TruncSeries, SeriesError> {
        if n >= 0 {
            Ok(self.pow(n as u32))
        } else {
            Ok(self.inverse_unit()?.pow((-n) as u32))
        }
    }

    /// Multiplicative inverse of a series with invertible constant term,
    /// by Newton iteration (the error valuation doubles per step).
    pub fn inverse_unit(&self) -> Result<TruncSeries, SeriesError> {
        let c0 = self.constant_term();
        if c0.is_zero() {
            return Err(SeriesError::NonUnit("zero constant term".into()));
        }
        let mut inv = TruncSeries::constant(&self.frame, c0.recip());
        let one = TruncSeries::one(&self.frame);
        let bound = self.frame.total_degree_bound().max(1);
        let mut steps = 0u32;
        loop {
            let err = &one - &(self * &inv);
            if err.is_zero() {
                return Ok(inv);
            }
            inv = &inv + &(&inv * &err);
            steps += 1;
            if (1u64 << steps.min(63)) > 2 * bound as u64 {
                return Err(SeriesError::NoConvergence("series inversion".into()));
            }
        }
    }

    /// log of a series with constant term 1, by the alternating sum over
    /// powers of the valuation >= 1 part.
    pub fn log_unit(&self) -> Result<TruncSeries, SeriesError> {
        if !self.constant_term().is_one() {
            return Err(SeriesError::BadValuation("log needs constant term 1".into()));
        }
        let v = self - &TruncSeries::one(&self.frame);
        let mut acc = TruncSeries::zero(&self.frame);
        let mut power = v.clone();
        let bound = self.frame.total_degree_bound() + 1;
        for k in 1..=bound as i64 {
            if power.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc = &acc + &power.scale(&ratio(sign, k));
            power = &power * &v;
        }
        Ok(acc)
    }

    /// Substitute 0 for a variable: keep the exponent-0 slice.
    pub fn subs_zero(&self, name: &str) -> TruncSeries {
        let slot = self.frame.slot(name);
        let terms = self
            .terms
            .iter()
            .filter(|(k, _)| k[slot] == 0)
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        TruncSeries { frame: self.frame.clone(), terms }
    }

    /// Substitute 1 for a variable by erasing its exponent. Only sound when
    /// the variable's true support fits under its cap, which holds for the
    /// catalytic variables here (their degree is bounded by the t-degree).
    pub fn subs_one(&self, name: &str) -> TruncSeries {
        let slot = self.frame.slot(name);
        let mut out = TruncSeries::zero(&self.frame);
        for (k, v) in &self.terms {
            let mut key = k.clone();
            key[slot] = 0;
            out.insert(key, v.clone());
        }
        out
    }

    /// Exact division by `name^k`: every term must carry at least exponent k.
    pub fn shift_down(&self, name: &str, k: u16) -> Result<TruncSeries, SeriesError> {
        let slot = self.frame.slot(name);
        let mut out = TruncSeries::zero(&self.frame);
        for (key, v) in &self.terms {
            if key[slot] < k {
                return Err(SeriesError::BadValuation(format!(
                    "division by {name}^{k} hits exponent {}",
                    key[slot]
                )));
            }
            let mut key = key.clone();
            key[slot] -= k;
            out.insert(key, v.clone());
        }
        Ok(out)
    }

    /// The divided difference (S - S|_{name=1})/(name - 1), exact because the
    /// numerator vanishes at name = 1: x^a - 1 = (x-1)(x^{a-1} + ... + 1).
    pub fn divided_difference_at_one(&self, name: &str) -> TruncSeries {
        let slot = self.frame.slot(name);
        let mut out = TruncSeries::zero(&self.frame);
        for (key, v) in &self.terms {
            for e in 0..key[slot] {
                let mut k = key.clone();
                k[slot] = e;
                out.insert(k, v.clone());
            }
        }
        out
    }

    /// Carry the series into another frame by variable name. Variables absent
    /// from the target are substituted by zero; exponents beyond the target
    /// caps are truncated away.
    pub fn project(&self, target: &Arc<Frame>) -> TruncSeries {
        let map: Vec<Option<usize>> = self
            .frame
            .names
            .iter()
            .map(|n| target.names.iter().position(|m| m == n))
            .collect();
        let mut out = TruncSeries::zero(target);
        'term: for (key, v) in &self.terms {
            let mut new_key = vec![0u16; target.len()];
            for (slot, &e) in key.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match map[slot] {
                    Some(t) => new_key[t] = e,
                    None => continue 'term,
                }
            }
            out.insert(new_key, v.clone());
        }
        out
    }

    /// Substitute a zero-constant series for the only variable of a
    /// univariate series (Horner from the top degree).
    pub fn eval_univariate(&self, g: &TruncSeries) -> Result<TruncSeries, SeriesError> {
        assert_eq!(self.frame.len(), 1, "eval_univariate needs a univariate series");
        if !g.constant_term().is_zero() {
            return Err(SeriesError::BadValuation(
                "substituted series must have zero constant term".into(),
            ));
        }
        let cap = self.frame.caps[0];
        let mut acc = TruncSeries::zero(g.frame());
        for e in (0..=cap).rev() {
            acc = &acc * g;
            let c = self.terms.get(&vec![e]).cloned().unwrap_or_else(BigRational::zero);
            if !c.is_zero() {
                acc = &acc + &TruncSeries::constant(g.frame(), c);
            }
        }
        Ok(acc)
    }

    /// Compositional inverse of a univariate series of valuation exactly 1:
    /// for f = a v (1 + h(v)) iterate g <- (v/a)(1 + h(g))^{-1}, one new
    /// order per step.
    pub fn reversion(&self) -> Result<TruncSeries, SeriesError> {
        assert_eq!(self.frame.len(), 1, "reversion needs a univariate series");
        let a1 = self.terms.get(&vec![1]).cloned().unwrap_or_else(BigRational::zero);
        if !self.constant_term().is_zero() || a1.is_zero() {
            return Err(SeriesError::BadValuation("reversion needs valuation exactly 1".into()));
        }
        let order = self.frame.caps[0];
        // h with h(0) = 0 from f = a1 * v * (1 + h(v))
        let mut h = TruncSeries::zero(&self.frame);
        for (key, v) in &self.terms {
            if key[0] >= 2 {
                h.insert(vec![key[0] - 1], v / &a1);
            }
        }
        let v = TruncSeries::var(&self.frame, &self.frame.names[0]);
        let v_over_a = v.scale(&a1.recip());
        let mut g = v_over_a.clone();
        for _ in 0..=order + 1 {
            let next = &v_over_a * &h.eval_univariate(&g)?.add_int(1).inverse_unit()?;
            if next == g {
                return Ok(g);
            }
            g = next;
        }
        Err(SeriesError::NoConvergence("series reversion".into()))
    }

    pub fn add_int(&self, c: i64) -> TruncSeries {
        self + &TruncSeries::int(&self.frame, c)
    }

    /// First monomial where the two series differ, with both coefficients
    /// rendered, for mismatch reports.
    pub fn first_difference(&self, other: &TruncSeries) -> Option<(String, String, String)> {
        self.same_frame(other, "compare");
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return None,
                (Some((k, v)), None) => {
                    return Some((monomial_string(&self.frame, k), v.to_string(), "0".into()))
                }
                (None, Some((k, v))) => {
                    return Some((monomial_string(&self.frame, k), "0".into(), v.to_string()))
                }
                (Some((ka, va)), Some((kb, vb))) => {
                    if ka < kb {
                        return Some((monomial_string(&self.frame, ka), va.to_string(), "0".into()));
                    } else if kb < ka {
                        return Some((monomial_string(&self.frame, kb), "0".into(), vb.to_string()));
                    } else if va != vb {
                        return Some((
                            monomial_string(&self.frame, ka),
                            va.to_string(),
                            vb.to_string(),
                        ));
                    }
                    a.next();
                    b.next();
                }
            }
        }
    }
}

/// Iterate `step` from `init` until two successive results agree. The
/// contractions here all gain at least one order in the grading variable per
/// step, so `max_steps` around cap+2 is an honest non-convergence alarm.
pub(crate) fn fixed_point(
    init: TruncSeries,
    max_steps: usize,
    what: &str,
    step: impl Fn(&TruncSeries) -> TruncSeries,
) -> Result<TruncSeries, SeriesError> {
    let mut cur = init;
    for _ in 0..max_steps {
        let next = step(&cur);
        if next == cur {
            return Ok(cur);
        }
        cur = next;
    }
    Err(SeriesError::NoConvergence(what.into()))
}

fn monomial_string(frame: &Frame, key: &[u16]) -> String {
    let mut parts = Vec::new();
    for (slot, &e) in key.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(frame.names[slot].clone()),
            _ => parts.push(format!("{}^{}", frame.names[slot], e)),
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

const PAR_THRESHOLD: usize = 1 << 16;

fn mul_terms(
    frame: &Arc<Frame>,
    a: &[(&Vec<u16>, &BigRational)],
    b: &[(&Vec<u16>, &BigRational)],
) -> BTreeMap<Vec<u16>, BigRational> {
    let mut out: BTreeMap<Vec<u16>, BigRational> = BTreeMap::new();
    let caps = &frame.caps;
    for (ka, va) in a {
        // b is in lexicographic key order, so the leading exponent is
        // nondecreasing and the inner loop can stop at the leading cap.
        for (kb, vb) in b {
            if ka[0] as u32 + kb[0] as u32 > caps[0] as u32 {
                break;
            }
            let mut key = Vec::with_capacity(ka.len());
            let mut fits = true;
            for i in 0..ka.len() {
                let e = ka[i] as u32 + kb[i] as u32;
                if e > caps[i] as u32 {
                    fits = false;
                    break;
                }
                key.push(e as u16);
            }
            if !fits {
                continue;
            }
            let prod = *va * *vb;
            match out.entry(key) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(prod);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() += prod;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
            }
        }
    }
    out
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        self.same_frame(rhs, "mul");
        let a: Vec<_> = self.terms.iter().collect();
        let b: Vec<_> = rhs.terms.iter().collect();
        let work = a.len().saturating_mul(b.len());
        let terms = if work >= PAR_THRESHOLD && a.len() >= 2 {
            // Parallel over blocks of the left factor; exact addition makes
            // the merge order irrelevant.
            let chunk = a.len().div_ceil(rayon::current_num_threads().max(1));
            a.par_chunks(chunk.max(1))
                .map(|part| mul_terms(&self.frame, part, &b))
                .reduce(BTreeMap::new, |mut acc, m| {
                    for (k, v) in m {
                        match acc.entry(k) {
                            std::collections::btree_map::Entry::Vacant(e) => {
                                e.insert(v);
                            }
                            std::collections::btree_map::Entry::Occupied(mut e) => {
                                *e.get_mut() += v;
                                if e.get().is_zero() {
                                    e.remove();
                                }
                            }
                        }
                    }
                    acc
                })
        } else {
            mul_terms(&self.frame, &a, &b)
        };
        TruncSeries { frame: self.frame.clone(), terms }
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        self.same_frame(rhs, "add");
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.insert(k.clone(), v.clone());
        }
        out
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        self.same_frame(rhs, "sub");
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.insert(k.clone(), -v.clone());
        }
        out
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        self.scale_int(-1)
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (key, coeff) in &self.terms {
            let mag = coeff.abs();
            if first {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = monomial_string(&self.frame, key);
            if mono == "1" {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag} {mono}")?;
            }
        }
        Ok(())
    }
}
