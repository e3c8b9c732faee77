//! Exact character theory for symmetric groups, centered on the tools needed
//! for map enumeration: Murnaghan-Nakayama evaluation, the class algebra with
//! its two product routes (convolution and spectral), Frobenius-style
//! factorization counts, Jucys-Murphy polynomials, Hurwitz numbers at class
//! level, Littlewood quotient splitting, and the integer coefficients that
//! expand even-face-degree hypermap counts over marked constellations.
//!
//! All arithmetic is exact: `BigInt` where values are integral by theorem,
//! `BigRational` where a derivation passes through fractions. Whenever a
//! rational quantity is asserted integral we check the denominator instead of
//! rounding.

use num_bigint::BigInt;
use num_rational::BigRational;
use symcore::SymError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CharError {
    #[error("size mismatch: |theta| = {0} but |mu| = {1}")]
    SizeMismatch(usize, usize),
    #[error("degree mismatch: expected {0}, got {1}")]
    DegreeMismatch(usize, usize),
    #[error("{0}")]
    BadArgument(String),
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error(transparent)]
    Map(#[from] mapkit::MapError),
}

mod mn;
pub use mn::{character_table, dimension, mn_character, CharTable};

mod center;
pub use center::{
    classical_hurwitz_class, hurwitz_brute_force, jm_pi, monotone_hurwitz_class, CenterElement,
    ClassAlgebra,
};

mod frobenius;
pub use frobenius::{count_factorizations_char, factorization_census_brute_force};

mod split;
pub use split::{h_poly_eval, littlewood_factor_check, m_split, power_sum_character_lhs, MSplit};

mod quad;
pub use quad::{quad_coeffs, verify_quadrangulation_relation, QuadCoeffs, RelationReport};

pub(crate) fn rat_int(v: &BigInt) -> BigRational {
    BigRational::from_integer(v.clone())
}

/// Asserts that a rational produced by a spectral formula is an integer and
/// unwraps it. The call sites all compute quantities that count something.
pub(crate) fn expect_integer(r: &BigRational, what: &str) -> BigInt {
    assert!(r.is_integer(), "{what} is not integral: {r}");
    r.to_integer()
}
