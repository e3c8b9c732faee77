use tamari::DyckPath;

use crate::tree::{Arena, TreeNode};
use crate::{BijectError, DecoratedTree};

/// Charge of each leaf in traversal order: every internal vertex of depth
/// p >= 1 charges the first of its descendant leaves labeled at most p-2.
pub fn charges(tree: &DecoratedTree) -> Vec<usize> {
    let arena = Arena::from_node(tree.root()).expect("validated shape");
    let mut charge = vec![0usize; arena.leaf_label.len()];
    for id in 0..arena.kids.len() {
        let p = arena.depth[id] as i64;
        if p < 1 {
            continue;
        }
        let (lo, hi) = arena.leaf_range[id];
        let l = (lo..hi)
            .find(|&l| arena.leaf_label[l] <= p - 2)
            .expect("validated tree has a deep enough descendant leaf");
        charge[l] += 1;
    }
    charge
}

/// The synchronized interval encoding a decorated tree: the lower path spends
/// one up step per edge and, at each leaf of charge k, 1+k down steps; the
/// upper path is the contour of the tree. Up steps of the two paths march
/// through the edges in the same traversal order.
pub fn interval_from_tree(tree: &DecoratedTree) -> (DyckPath, DyckPath) {
    let charge = charges(tree);
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    let mut at = 0;
    emit(tree.root(), &charge, &mut at, &mut lower, &mut upper);
    (
        DyckPath::new(lower).expect("charge path is a Dyck word"),
        DyckPath::new(upper).expect("contour path is a Dyck word"),
    )
}

fn emit(
    node: &TreeNode,
    charge: &[usize],
    at: &mut usize,
    lower: &mut Vec<bool>,
    upper: &mut Vec<bool>,
) {
    let TreeNode::Internal { children } = node else {
        return;
    };
    for child in children {
        upper.push(true);
        lower.push(true);
        match child {
            TreeNode::Leaf { .. } => {
                lower.extend(std::iter::repeat(false).take(1 + charge[*at]));
                *at += 1;
            }
            TreeNode::Internal { .. } => emit(child, charge, at, lower, upper),
        }
        upper.push(false);
    }
}

/// Rebuilds the decorated tree from a synchronized interval. The tree shape
/// is the contour of the upper path; the label of the leaf at the i-th up
/// step is read off the lower path by following a leftward ray from the
/// bottom of the descent after its i-th up step until the ray crosses the
/// path at the midpoint of a double up step (exiting at the origin instead
/// labels the leaf -1).
pub fn tree_from_interval(
    lower: &DyckPath,
    upper: &DyckPath,
) -> Result<DecoratedTree, BijectError> {
    let n = lower.semilength();
    if upper.semilength() != n || lower.canopy() != upper.canopy() {
        return Err(BijectError::NotSynchronized);
    }
    if !tamari::tamari_leq(lower, upper)? {
        return Err(BijectError::NotSynchronized);
    }

    let ls = lower.steps();
    let height: Vec<i64> = std::iter::once(0)
        .chain(ls.iter().scan(0i64, |h, &s| {
            *h += if s { 1 } else { -1 };
            Some(*h)
        }))
        .collect();
    let up_at: Vec<usize> = (0..ls.len()).filter(|&i| ls[i]).collect();
    let up_height_upper: Vec<i64> = {
        let mut out = Vec::new();
        let mut h = 0;
        for &s in upper.steps() {
            if s {
                h += 1;
                out.push(h);
            } else {
                h -= 1;
            }
        }
        out
    };

    let label_of = |i: usize| -> i64 {
        let mut b = up_at[i] + 1;
        while b < ls.len() && !ls[b] {
            b += 1;
        }
        let h = height[b];
        for q in (0..b).rev() {
            if height[q] != h {
                continue;
            }
            if q == 0 {
                return -1;
            }
            match (ls[q - 1], ls[q]) {
                (true, true) => {
                    // ray stops between two up steps; the lower one is the
                    // j-th up step, and the label is the depth of the upper
                    // end of the j-th contour edge minus one
                    let j = ls[..q].iter().filter(|&&s| s).count();
                    return up_height_upper[j - 1] - 1;
                }
                // a valley only touches the ray from above; pass through
                (false, true) => {}
                // left of a descent bottom, every return to its height
                // arrives from above, so the outgoing step there is up
                _ => unreachable!("ray crossed the path away from a lattice point"),
            }
        }
        unreachable!("a ray at positive height always meets a double up step")
    };

    let mut stack: Vec<(usize, Vec<TreeNode>)> = vec![(usize::MAX, Vec::new())];
    let mut next_up = 0;
    for &s in upper.steps() {
        if s {
            stack.push((next_up, Vec::new()));
            next_up += 1;
        } else {
            let (i, kids) = stack.pop().expect("balanced contour");
            let node = if kids.is_empty() {
                TreeNode::Leaf { label: label_of(i) }
            } else {
                TreeNode::Internal { children: kids }
            };
            stack.last_mut().expect("balanced contour").1.push(node);
        }
    }
    let (_, children) = stack.pop().expect("contour closes at the root");
    DecoratedTree::new(TreeNode::Internal { children })
}
