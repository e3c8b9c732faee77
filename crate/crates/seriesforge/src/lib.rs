//! Exact truncated multivariate power series, and the catalytic functional
//! equations of map enumeration solved on top of them.
//!
//! Everything is exact: coefficients are big rationals, truncation is
//! per-variable, and every fixed point is checked by re-substitution. The
//! higher modules pair each closed form with an independent route to the same
//! numbers: iterated Tutte equations against rational expressions in the
//! change-of-variables frame, and series coefficients against brute-force
//! map censuses from mapkit.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SeriesError {
    #[error("division by non-unit: {0}")]
    NonUnit(String),
    #[error("bad valuation: {0}")]
    BadValuation(String),
    #[error("iteration did not converge: {0}")]
    NoConvergence(String),
    #[error("refusing oversized computation: {0}")]
    TooLarge(String),
    #[error("{context}: first differing coefficient at {monomial}: {lhs} vs {rhs}")]
    Mismatch {
        context: String,
        monomial: String,
        lhs: String,
        rhs: String,
    },
}

mod series;
pub use series::{Frame, TruncSeries};

mod operators;
pub use operators::{gamma_op, omega_op};

mod catalan;
pub use catalan::{catalan_number, catalan_suite, planar_map_count_closed_form, CatalanSuite};

mod constellation;
pub use constellation::{
    constellation_planar, constellation_planar_closed_form, constellation_profile_count,
    gamma_series, planar_change_of_vars,
};

mod bipartite;
pub use bipartite::{
    bipartite_genus, f1_check, gamma_f0_check, l1_check, l1_series, l2_check, l2_series,
};

mod greek;
pub use greek::{gamma_on_greek_check, greek_frame, greek_independence_rank, GreekFrame};

mod triangulation;
pub use triangulation::triangulation_parametrizations;

pub(crate) fn binomial(n: i64, k: i64) -> num_bigint::BigInt {
    use num_bigint::BigInt;
    if k < 0 || k > n {
        return BigInt::from(0);
    }
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for i in 0..k.min(n - k) {
        num *= n - i;
        den *= i + 1;
    }
    num / den
}

/// Compare two series and produce the first differing coefficient on failure.
pub(crate) fn expect_equal(
    context: &str,
    lhs: &TruncSeries,
    rhs: &TruncSeries,
) -> Result<(), SeriesError> {
    if let Some((monomial, a, b)) = lhs.first_difference(rhs) {
        return Err(SeriesError::Mismatch {
            context: context.to_string(),
            monomial,
            lhs: a,
            rhs: b,
        });
    }
    Ok(())
}
