//! Tamari lattices on Dyck paths, their generalization to lattice paths above
//! an arbitrary northeast word, and exact interval counting.
//!
//! The classical order is handled through distance vectors (pointwise
//! comparison) and independently through rotation covers, so the two
//! characterizations can be checked against each other. The generalized
//! lattices are built from the horizontal-distance rotation rule, and the
//! canopy decomposition ties the two worlds together: Dyck paths of a fixed
//! canopy form an interval isomorphic to the lattice of paths above that
//! canopy word.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum TamariError {
    #[error("invalid path: {0}")]
    BadPath(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("{0}")]
    BadArgument(String),
}

mod dyck;
pub use dyck::{all_dyck_paths, DyckPath};

mod order;
pub use order::{
    interval_count, interval_count_closed_form, sync_interval_count, sync_interval_count_closed_form,
    sync_interval_polynomial, tamari_leq, TamariOrder,
};

mod poset;
pub use poset::{are_isomorphic, Poset};

mod nu;
pub use nu::{
    m_tamari_interval_count, m_tamari_interval_count_closed_form, nu_tamari, parse_word,
    reverse_complement, word_string, Dir, NuTamari,
};

mod catalytic;
pub use catalytic::sync_series;
