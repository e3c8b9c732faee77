use serde::{Deserialize, Serialize};

use crate::BijectError;

/// Node of a rooted plane tree whose leaves carry integer labels >= -1.
/// Children are stored in traversal (left-to-right) order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TreeNode {
    Leaf { label: i64 },
    Internal { children: Vec<TreeNode> },
}

impl TreeNode {
    fn descendant_edges(&self) -> usize {
        match self {
            TreeNode::Leaf { .. } => 0,
            TreeNode::Internal { children } => children
                .iter()
                .map(|c| 1 + c.descendant_edges())
                .sum(),
        }
    }
}

/// Plane tree whose leaf labels satisfy the three closure conditions:
/// a leaf below a vertex of depth p is labeled in -1..p, every internal
/// vertex of depth p >= 1 has a descendant leaf labeled at most p-2, and in
/// the subtree hanging from a child of a depth-p vertex no leaf labeled
/// exactly p may follow a leaf labeled below p.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TreeNode", into = "TreeNode")]
pub struct DecoratedTree {
    root: TreeNode,
}

impl DecoratedTree {
    pub fn new(root: TreeNode) -> Result<Self, BijectError> {
        let arena = Arena::from_node(&root)?;
        arena.check_conditions()?;
        Ok(DecoratedTree { root })
    }

    pub fn root(&self) -> &TreeNode {
        &self.root
    }

    pub fn n_edges(&self) -> usize {
        self.root.descendant_edges()
    }

    pub fn leaf_count(&self) -> usize {
        leaf_labels(self).len()
    }
}

impl From<DecoratedTree> for TreeNode {
    fn from(t: DecoratedTree) -> TreeNode {
        t.root
    }
}

impl TryFrom<TreeNode> for DecoratedTree {
    type Error = BijectError;

    fn try_from(root: TreeNode) -> Result<Self, BijectError> {
        DecoratedTree::new(root)
    }
}

/// Labels of the leaves in traversal order.
pub fn leaf_labels(tree: &DecoratedTree) -> Vec<i64> {
    let arena = Arena::from_node(tree.root()).expect("validated shape");
    arena.leaf_label
}

pub(crate) enum Kid {
    Node(usize),
    Leaf(usize),
}

/// Flat view of a decorated tree. Internal nodes are numbered in preorder,
/// leaves in traversal order, so the leaves of a subtree form a contiguous
/// id range.
pub(crate) struct Arena {
    pub depth: Vec<usize>,
    pub parent: Vec<Option<usize>>,
    pub kids: Vec<Vec<Kid>>,
    pub leaf_range: Vec<(usize, usize)>,
    pub leaf_parent: Vec<usize>,
    pub leaf_label: Vec<i64>,
}

impl Arena {
    pub fn from_node(root: &TreeNode) -> Result<Arena, BijectError> {
        let mut a = Arena {
            depth: Vec::new(),
            parent: Vec::new(),
            kids: Vec::new(),
            leaf_range: Vec::new(),
            leaf_parent: Vec::new(),
            leaf_label: Vec::new(),
        };
        let TreeNode::Internal { children } = root else {
            return Err(BijectError::InvalidTree("root is a leaf".into()));
        };
        if children.is_empty() {
            return Err(BijectError::InvalidTree("root has no children".into()));
        }
        a.push_internal(root, None, 0)?;
        Ok(a)
    }

    fn push_internal(
        &mut self,
        node: &TreeNode,
        parent: Option<usize>,
        depth: usize,
    ) -> Result<usize, BijectError> {
        let TreeNode::Internal { children } = node else {
            unreachable!("callers dispatch on the variant");
        };
        let id = self.depth.len();
        self.depth.push(depth);
        self.parent.push(parent);
        self.kids.push(Vec::new());
        self.leaf_range.push((self.leaf_label.len(), usize::MAX));
        for child in children {
            let kid = match child {
                TreeNode::Leaf { label } => {
                    let l = self.leaf_label.len();
                    self.leaf_label.push(*label);
                    self.leaf_parent.push(id);
                    Kid::Leaf(l)
                }
                TreeNode::Internal { children: grand } => {
                    if grand.is_empty() {
                        return Err(BijectError::InvalidTree(
                            "internal vertex has no children".into(),
                        ));
                    }
                    Kid::Node(self.push_internal(child, Some(id), depth + 1)?)
                }
            };
            self.kids[id].push(kid);
        }
        self.leaf_range[id].1 = self.leaf_label.len();
        Ok(id)
    }

    fn check_conditions(&self) -> Result<(), BijectError> {
        for (l, &label) in self.leaf_label.iter().enumerate() {
            let p = self.depth[self.leaf_parent[l]] as i64;
            if label < -1 || label >= p {
                return Err(BijectError::InvalidTree(format!(
                    "leaf label {label} out of range -1..{p} at a depth-{p} vertex"
                )));
            }
        }
        for id in 0..self.depth.len() {
            let p = self.depth[id] as i64;
            if p >= 1 {
                let (lo, hi) = self.leaf_range[id];
                if !(lo..hi).any(|l| self.leaf_label[l] <= p - 2) {
                    return Err(BijectError::InvalidTree(format!(
                        "depth-{p} vertex has no descendant leaf labeled at most {}",
                        p - 2
                    )));
                }
            }
            for kid in &self.kids[id] {
                let Kid::Node(c) = kid else { continue };
                let (lo, hi) = self.leaf_range[*c];
                let mut seen_small = false;
                for l in lo..hi {
                    if self.leaf_label[l] < p {
                        seen_small = true;
                    } else if self.leaf_label[l] == p && seen_small {
                        return Err(BijectError::InvalidTree(format!(
                            "leaf labeled {p} follows a smaller label in a subtree below depth {p}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Every decorated tree with the given number of edges, by exhausting plane
/// tree shapes and leaf labelings. Exponential; meant for desk-scale sizes.
pub fn enumerate_trees(n_edges: usize) -> Vec<DecoratedTree> {
    let mut out = Vec::new();
    for kids in forests(n_edges) {
        if kids.is_empty() {
            continue;
        }
        let root = Shape::Node(kids);
        let mut slots = Vec::new();
        leaf_slots(&root, 0, &mut slots);
        // odometer over the label windows -1..parent depth
        let mut labels: Vec<i64> = slots.iter().map(|_| -1).collect();
        'assignments: loop {
            let mut next = 0;
            if let Ok(t) = DecoratedTree::new(build(&root, &labels, &mut next)) {
                out.push(t);
            }
            let mut i = labels.len();
            loop {
                if i == 0 {
                    break 'assignments;
                }
                i -= 1;
                labels[i] += 1;
                if labels[i] < slots[i] as i64 {
                    continue 'assignments;
                }
                labels[i] = -1;
            }
        }
    }
    out
}

enum Shape {
    Leaf,
    Node(Vec<Shape>),
}

/// Ordered forests with the given total edge count (each tree costs one edge
/// plus its own edges).
fn forests(edges: usize) -> Vec<Vec<Shape>> {
    if edges == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 0..edges {
        for rest in forests(edges - 1 - first) {
            for tree in subtrees(first) {
                let mut f = vec![tree];
                f.extend(rest.iter().map(clone_shape));
                out.push(f);
            }
        }
    }
    out
}

fn subtrees(edges: usize) -> Vec<Shape> {
    if edges == 0 {
        return vec![Shape::Leaf];
    }
    forests(edges).into_iter().map(Shape::Node).collect()
}

fn clone_shape(s: &Shape) -> Shape {
    match s {
        Shape::Leaf => Shape::Leaf,
        Shape::Node(kids) => Shape::Node(kids.iter().map(clone_shape).collect()),
    }
}

/// Upper label bound per leaf in traversal order: the parent depth.
fn leaf_slots(shape: &Shape, depth: usize, slots: &mut Vec<usize>) {
    let Shape::Node(kids) = shape else { return };
    for kid in kids {
        match kid {
            Shape::Leaf => slots.push(depth),
            Shape::Node(_) => leaf_slots(kid, depth + 1, slots),
        }
    }
}

fn build(shape: &Shape, labels: &[i64], next: &mut usize) -> TreeNode {
    match shape {
        Shape::Leaf => {
            let label = labels[*next];
            *next += 1;
            TreeNode::Leaf { label }
        }
        Shape::Node(kids) => TreeNode::Internal {
            children: kids.iter().map(|k| build(k, labels, next)).collect(),
        },
    }
}
