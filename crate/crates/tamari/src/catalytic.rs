//! The catalytic functional equation for same-canopy intervals:
//!
//!   F(x, t) = x t (1 + F(x, t)) (1 + (F(x, t) - F(1, t)) / (x - 1))
//!
//! solved degree by degree in t; the coefficient of t^n is a polynomial in x
//! whose x^k coefficient counts intervals whose upper path ends with exactly
//! k down steps.

use num_bigint::BigUint;
use num_traits::Zero;

type Poly = Vec<BigUint>;

fn padd(a: &[BigUint], b: &[BigUint]) -> Poly {
    let mut out = vec![BigUint::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    out
}

fn pmul(a: &[BigUint], b: &[BigUint]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigUint::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    out
}

/// (p(x) - p(1)) / (x - 1): coefficient i of the result is the sum of the
/// coefficients of p above degree i.
fn slope(p: &[BigUint]) -> Poly {
    if p.len() <= 1 {
        return Vec::new();
    }
    let mut out = vec![BigUint::zero(); p.len() - 1];
    let mut acc = BigUint::zero();
    for i in (1..p.len()).rev() {
        acc += &p[i];
        out[i - 1] = acc.clone();
    }
    out
}

/// F as a vector of coefficient polynomials in x, indices 0..=n_max in t.
pub fn sync_series(n_max: usize) -> Vec<Vec<BigUint>> {
    let mut f: Vec<Poly> = vec![Vec::new(); n_max + 1];
    for _ in 0..n_max {
        // a = 1 + F, b = 1 + slope(F), both as t-series of x-polynomials
        let one = [BigUint::from(1u32)];
        let mut a: Vec<Poly> = f.clone();
        a[0] = padd(&a[0], &one);
        let mut b: Vec<Poly> = f.iter().map(|p| slope(p)).collect();
        b[0] = padd(&b[0], &one);
        // product truncated at t^{n_max - 1}, then shifted by x t
        let mut next: Vec<Poly> = vec![Vec::new(); n_max + 1];
        for i in 0..n_max {
            for j in 0..n_max - i {
                if a[i].is_empty() || b[j].is_empty() {
                    continue;
                }
                let prod = pmul(&a[i], &b[j]);
                next[i + j + 1] = padd(&next[i + j + 1], &shift_x(&prod));
            }
        }
        f = next;
    }
    f
}

fn shift_x(p: &Poly) -> Poly {
    let mut out = vec![BigUint::zero()];
    out.extend_from_slice(p);
    out
}
