//! Bijections between rooted nonseparable planar maps, label-decorated plane
//! trees, and synchronized Tamari intervals.
//!
//! A map with n+1 edges is opened into a tree with n edges by a clockwise
//! depth-first exploration that turns every non-tree edge into a labeled leaf;
//! the tree is closed back up by reattaching the leaves in reverse traversal
//! order. The same tree encodes a pair of Dyck paths: the contour path and a
//! charge path that together form a synchronized interval. Composing the two
//! correspondences carries map duality to an involution on intervals and
//! matches the degree of the root face with the last descent of the upper
//! path.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum BijectError {
    #[error("map error: {0}")]
    Map(#[from] mapkit::MapError),
    #[error("path error: {0}")]
    Tamari(#[from] tamari::TamariError),
    #[error("map is not a nonseparable planar map with at least two edges")]
    NotNonseparable,
    #[error("paths do not form a synchronized interval")]
    NotSynchronized,
    #[error("invalid decorated tree: {0}")]
    InvalidTree(String),
}

mod tree;
pub use tree::{enumerate_trees, leaf_labels, DecoratedTree, TreeNode};

mod explore;
pub use explore::{map_from_tree, tree_from_map};

mod paths;
pub use paths::{charges, interval_from_tree, tree_from_interval};

use mapkit::GeneralRotation;
use tamari::DyckPath;

/// Lower and upper Dyck path of the synchronized interval encoding a map.
pub fn interval_from_map(map: &GeneralRotation) -> Result<(DyckPath, DyckPath), BijectError> {
    Ok(interval_from_tree(&tree_from_map(map)?))
}

/// Nonseparable planar map encoded by a synchronized interval.
pub fn map_from_interval(
    lower: &DyckPath,
    upper: &DyckPath,
) -> Result<GeneralRotation, BijectError> {
    Ok(map_from_tree(&tree_from_interval(lower, upper)?))
}
