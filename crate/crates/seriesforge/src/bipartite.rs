//! Bipartite maps graded by genus. The rooted series F_g all satisfy one
//! catalytic equation family, iterated here directly; the closed forms in
//! the (z, u) frame are assembled independently and compared coefficient by
//! coefficient. L_g is the unrooted labeled variant, an exponential
//! generating function checked against a brute-force permutation census.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::constellation::{counting_frame, gamma_series, planar_change_of_vars};
use crate::greek::{eta_series, zeta_i_series, zeta_series};
use crate::series::{fixed_point, ratio};
use crate::{expect_equal, gamma_op, omega_op, Frame, SeriesError, TruncSeries};

/// F_0..F_{g_max} by iterating root-edge deletion: genus g closes over the
/// lower tower through the face-merging derivation and the products.
fn genus_tower(
    g_max: usize,
    k_max: usize,
    order: usize,
) -> Result<Vec<TruncSeries>, SeriesError> {
    let frame = counting_frame(k_max, order);
    let one = TruncSeries::one(&frame);
    let xt = TruncSeries::monomial(&frame, &[("t", 1), ("x", 1)], ratio(1, 1));
    let f0 = fixed_point(one.clone(), order + 2, "planar bipartite equation", |f| {
        &one + &(&xt * &(&(f * f) + &omega_op(f, k_max)))
    })?;
    let mut tower = vec![f0];
    for g in 1..=g_max {
        let mut known = gamma_op(&tower[g - 1]);
        for g1 in 1..g {
            known = &known + &(&tower[g1] * &tower[g - g1]);
        }
        let f0 = tower[0].clone();
        let fg = fixed_point(
            TruncSeries::zero(&frame),
            order + 2,
            "bipartite genus recursion",
            |f| &xt * &(&(&omega_op(f, k_max) + &known) + &(&f0 * f).scale_int(2)),
        )?;
        tower.push(fg);
    }
    Ok(tower)
}

/// Rooted bipartite maps of one genus, faces of degree up to 2*k_max marked.
/// Computed with the face alphabet widened to k_max + order so that every
/// kept coefficient is exact, then restricted back.
pub fn bipartite_genus(
    genus: usize,
    k_max: usize,
    order: usize,
) -> Result<TruncSeries, SeriesError> {
    let tower = genus_tower(genus, k_max + order, order)?;
    Ok(tower[genus].project(&counting_frame(k_max, order)))
}

/// The derivation image of the planar series collapses to a single closed
/// form, Gamma F_0 = (uz)^2 / (1-uz)^4; faces of degree beyond 2*order
/// cannot occur at or below t^order, so alphabet = order is exhaustive.
pub fn gamma_f0_check(order: usize) -> Result<(), SeriesError> {
    let k_max = order;
    let tower = genus_tower(0, k_max, order)?;
    let frame = tower[0].frame().clone();
    let (z, u) = planar_change_of_vars(&frame, 2, k_max)?;
    let uz = &u * &z;
    let one = TruncSeries::one(&frame);
    let rhs = &uz.pow(2) * &(&one - &uz).inverse_unit()?.pow(4);
    expect_equal("derivation image of the planar series", &gamma_op(&tower[0]), &rhs)
}

fn f1_closed_form(frame: &Arc<Frame>, k_max: usize) -> Result<TruncSeries, SeriesError> {
    let (z, u) = planar_change_of_vars(frame, 2, k_max)?;
    let one = TruncSeries::one(frame);
    let uz = &u * &z;
    let a = (&one - &uz).inverse_unit()?;
    let b = (&one + &uz).inverse_unit()?;
    let eta = eta_series(&z, k_max, 0);
    let eta1 = eta_series(&z, k_max, 1);
    let zeta = zeta_series(&z, k_max);
    let e = (&one - &eta).inverse_unit()?;
    let c = zeta.add_int(1).inverse_unit()?;
    let e2 = e.pow(2);

    let n1 = (&eta - &eta1.scale_int(2)).add_int(-1);
    let t1 = (&(&n1 * &a.pow(2)) * &e2).scale(&ratio(1, 16));
    let n2 = &(&(&zeta.add_int(1).scale_int(4) * &eta1) + &(&eta * &eta).scale_int(3))
        + &(&zeta.scale_int(-6) * &(&one - &eta)).add_int(3);
    let t2 = (&(&(&n2 * &a) * &c) * &e2).scale(&ratio(1, 96));
    let t3 = (&a.pow(5) * &e).scale(&ratio(-1, 2));
    let t4 = (&a.pow(4) * &e).scale(&ratio(-5, 4));
    let t5 = (&b * &c).scale(&ratio(-1, 32));
    let n6 = (&eta.scale_int(21) - &eta1.scale_int(2)).add_int(-21);
    let t6 = (&(&n6 * &a.pow(3)) * &e2).scale(&ratio(-1, 24));
    Ok(&(&(&(&(&t1 + &t2) + &t3) + &t4) + &t5) + &t6)
}

/// The genus one series from the iterated tower equals its closed form in
/// z, u, eta, eta_1, zeta, coefficient for coefficient.
pub fn f1_check(order: usize, k_max: usize) -> Result<(), SeriesError> {
    let tower = genus_tower(1, k_max + order, order)?;
    let small = counting_frame(k_max, order);
    let iterated = tower[1].project(&small);
    let closed = f1_closed_form(&small, k_max)?;
    expect_equal("genus one closed form", &iterated, &closed)
}

fn unrooted_frame(k_max: usize, order: usize) -> Arc<Frame> {
    Frame::with_p_block(&[("t", order as u16)], k_max, order as u16)
}

fn z_in(frame: &Arc<Frame>, k_max: usize) -> Result<TruncSeries, SeriesError> {
    let order = frame.cap("t") as usize;
    let t = TruncSeries::var(frame, "t");
    fixed_point(t.clone(), order + 2, "change of variables for z", |z| {
        &t * &gamma_series(z, 2, k_max).add_int(1)
    })
}

/// Exponential generating function of labeled transitive pairs on the torus,
/// t marking the ground set size and p_k the product cycles of length k.
pub fn l1_series(k_max: usize, order: usize) -> Result<TruncSeries, SeriesError> {
    let frame = unrooted_frame(k_max, order);
    let z = z_in(&frame, k_max)?;
    let one = TruncSeries::one(&frame);
    let eta = eta_series(&z, k_max, 0);
    let zeta = zeta_series(&z, k_max);
    Ok(&(&one - &eta).log_unit()?.scale(&ratio(-1, 24))
        + &zeta.add_int(1).log_unit()?.scale(&ratio(-1, 8)))
}

/// Genus two companion of l1_series.
pub fn l2_series(k_max: usize, order: usize) -> Result<TruncSeries, SeriesError> {
    let frame = unrooted_frame(k_max, order);
    let z = z_in(&frame, k_max)?;
    let one = TruncSeries::one(&frame);
    let eta = eta_series(&z, k_max, 0);
    let eta1 = eta_series(&z, k_max, 1);
    let eta2 = eta_series(&z, k_max, 2);
    let eta3 = eta_series(&z, k_max, 3);
    let zeta = zeta_series(&z, k_max);
    let zeta1 = zeta_i_series(&z, k_max, 1);
    let e = (&one - &eta).inverse_unit()?;
    let c = zeta.add_int(1).inverse_unit()?;

    let mut acc = TruncSeries::constant(&frame, ratio(1, 120));
    acc = &acc
        - &(&(&eta1 * &(&eta1.scale_int(185) - &eta2.scale_int(58))) * &e.pow(4))
            .scale(&ratio(1, 23040));
    acc = &acc
        - &(&(&(&eta3.scale_int(20) - &eta2.scale_int(168)) + &eta1.scale_int(415)) * &e.pow(3))
            .scale(&ratio(1, 46080));
    acc = &acc - &e.pow(2).scale(&ratio(53, 15360));
    acc = &acc - &(&eta1.pow(3) * &e.pow(5)).scale(&ratio(7, 2880));
    acc = &acc - &(&e * &c).scale(&ratio(1, 512));
    acc = &acc + &(&(&eta1 * &e.pow(2)) * &c).scale(&ratio(1, 1536));
    acc = &acc - &c.pow(2).scale(&ratio(3, 1024));
    acc = &acc + &(&zeta1 * &c.pow(3)).scale(&ratio(3, 8192));
    Ok(acc)
}

fn unrooted_check(
    genus: usize,
    series: &TruncSeries,
    n_max: usize,
) -> Result<(), SeriesError> {
    for n in 1..=n_max {
        let census = mapkit::bipartite_unrooted_census(n, genus)
            .map_err(|e| SeriesError::TooLarge(e.to_string()))?;
        let scale = BigRational::from_integer(BigInt::from(symcore::factorial(n)));
        for mu in symcore::partitions_of(n) {
            let expected = census.get(&mu).cloned().unwrap_or_default();
            let names: Vec<(String, u16)> = mu
                .multiplicities()
                .into_iter()
                .map(|(part, mult)| (format!("p{part}"), mult as u16))
                .collect();
            let mut key: Vec<(&str, u16)> = vec![("t", n as u16)];
            key.extend(names.iter().map(|(s, e)| (s.as_str(), *e)));
            let got = series.coeff(&key) * &scale;
            let want = BigRational::from_integer(BigInt::from(expected));
            if got != want {
                return Err(SeriesError::Mismatch {
                    context: format!("labeled genus {genus} census"),
                    monomial: format!("n = {n}, cycle type {mu}"),
                    lhs: got.to_string(),
                    rhs: want.to_string(),
                });
            }
        }
    }
    Ok(())
}

/// Compare n! [t^n p_mu] of l1_series against the labeled census for every
/// cycle type mu of every n up to n_max.
pub fn l1_check(n_max: usize) -> Result<(), SeriesError> {
    let series = l1_series(n_max, n_max)?;
    unrooted_check(1, &series, n_max)
}

/// Same as l1_check one genus up.
pub fn l2_check(n_max: usize) -> Result<(), SeriesError> {
    let series = l2_series(n_max, n_max)?;
    unrooted_check(2, &series, n_max)
}
