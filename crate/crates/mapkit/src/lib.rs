//! Rotation systems for rooted maps on orientable surfaces, in four flavors:
//! general maps (pairs phi, rho on 2n darts), bipartite maps, m-constellations
//! and m-hypermaps. On top of the types sit exhaustive enumeration engines
//! that count or list rooted maps exactly, used throughout the workspace as
//! the ground-truth oracle for closed forms and functional equations.
//!
//! Counting convention: a rooted map is an equivalence class of labeled
//! rotation systems under relabelings fixing the root label 1. The engines
//! enumerate labeled systems with one permutation pinned to a canonical
//! representative, scale by the conjugacy-class size, and divide by the
//! number of labelings per rooted map. Every division is checked exact.

mod count;
mod graph;
mod json;
mod rotation;
mod sweep;

pub use count::{
    bipartite_unrooted_census, census_bipartite, census_constellation, count_rooted_bipartite,
    count_rooted_bipartite_marked, count_rooted_constellations, count_rooted_constellations_marked,
    count_rooted_general, count_rooted_hypermaps, list_rooted_general, planar_map_count,
    BipartiteFilter, CycleFilter, GeneralFilter,
};
pub use graph::UnderlyingGraph;
pub use json::{AnyRotation, MapJson, SCHEMA};
pub use rotation::{
    canonical_bullet, BipartiteRotation, ConstellationRotation, GeneralRotation, HypermapRotation,
};
pub use sweep::fold_image_words_sharded;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum MapError {
    #[error("symmetric-group error: {0}")]
    Sym(#[from] symcore::SymError),
    #[error("rho must be a fixed-point-free involution")]
    BadRho,
    #[error("defining relation violated: {0}")]
    BadRelation(String),
    #[error("rotation system is not transitive")]
    NotTransitive,
    #[error("search space too large: {0}")]
    TooLarge(String),
    #[error("invalid map payload: {0}")]
    BadPayload(String),
}
