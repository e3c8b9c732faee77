use mapkit::GeneralRotation;
use symcore::Perm;

use crate::tree::{Arena, Kid, TreeNode};
use crate::{BijectError, DecoratedTree};

/// Opens a rooted nonseparable planar map with n+1 edges into a decorated
/// tree with n edges. Starting along the root edge, vertices are explored
/// depth-first, scanning the darts around each vertex in clockwise order from
/// the entry dart; an edge closing onto an already visited vertex becomes a
/// leaf labeled with that vertex's depth. The tail of the root edge has depth
/// -1 and the root edge itself is dropped, leaving the tree rooted at the
/// head.
pub fn tree_from_map(map: &GeneralRotation) -> Result<DecoratedTree, BijectError> {
    if map.n_edges() < 2 || map.genus()? != 0 || !map.is_nonseparable() {
        return Err(BijectError::NotNonseparable);
    }
    let darts = map.darts();
    let sigma = map.sigma();
    let sigma_inv = sigma.inverse();
    let rho = map.rho();

    let mut vertex_of = vec![usize::MAX; darts + 1];
    let mut n_vertices = 0;
    for d in 1..=darts {
        if vertex_of[d] == usize::MAX {
            let mut e = d;
            loop {
                vertex_of[e] = n_vertices;
                e = sigma.apply(e);
                if e == d {
                    break;
                }
            }
            n_vertices += 1;
        }
    }

    let tail = vertex_of[1];
    let head = vertex_of[rho.apply(1)];
    let mut state = Explorer {
        sigma_inv: &sigma_inv,
        rho,
        vertex_of: &vertex_of,
        depth: vec![0; n_vertices],
        visited: vec![false; n_vertices],
        edge_seen: vec![false; darts + 1],
    };
    state.depth[tail] = -1;
    state.visited[tail] = true;
    state.visited[head] = true;
    state.edge_seen[1] = true;
    state.edge_seen[rho.apply(1)] = true;
    let root = state.explore(rho.apply(1), 0);
    DecoratedTree::new(root)
}

struct Explorer<'a> {
    sigma_inv: &'a Perm,
    rho: &'a Perm,
    vertex_of: &'a [usize],
    depth: Vec<i64>,
    visited: Vec<bool>,
    edge_seen: Vec<bool>,
}

impl Explorer<'_> {
    fn explore(&mut self, entry: usize, depth_here: i64) -> TreeNode {
        let mut children = Vec::new();
        let mut d = self.sigma_inv.apply(entry);
        while d != entry {
            if !self.edge_seen[d] {
                self.edge_seen[d] = true;
                let far = self.rho.apply(d);
                self.edge_seen[far] = true;
                let x = self.vertex_of[far];
                if self.visited[x] {
                    children.push(TreeNode::Leaf {
                        label: self.depth[x],
                    });
                } else {
                    self.visited[x] = true;
                    self.depth[x] = depth_here + 1;
                    children.push(self.explore(far, depth_here + 1));
                }
            }
            d = self.sigma_inv.apply(d);
        }
        // clockwise visit order is the reverse of the plane traversal order
        children.reverse();
        TreeNode::Internal { children }
    }
}

/// Closes a decorated tree with n edges back into a rooted map with n+1
/// edges. A fresh root edge is attached above the tree root, then the leaves
/// are reattached, last in traversal order first: a leaf labeled p below
/// vertex t becomes an edge from t to the depth-p ancestor s, inserted just
/// after the edge leading from s toward the leaf in clockwise order (a leaf
/// labeled -1 attaches to the tail of the root edge the same way).
pub fn map_from_tree(tree: &DecoratedTree) -> GeneralRotation {
    let arena = Arena::from_node(tree.root()).expect("validated shape");
    let n_nodes = arena.kids.len();
    let n_leaves = arena.leaf_label.len();
    let darts = 2 * (n_nodes + n_leaves);

    // dart pairs: root edge (1, 2), then two per tree edge; the numbering of
    // the remaining darts is arbitrary
    let mut partner = vec![0usize; darts + 1];
    partner[1] = 2;
    partner[2] = 1;
    // rotation lists in counter-clockwise order; index n_nodes is the tail
    let mut rot: Vec<Vec<usize>> = vec![Vec::new(); n_nodes + 1];
    rot[n_nodes].push(1);
    rot[0].push(2);
    // dart sitting at the parent end of each internal vertex's parent edge
    let mut upper_dart = vec![0usize; n_nodes];
    let mut leaf_dart = vec![0usize; n_leaves];
    let mut next = 3;
    let mut stack = vec![0usize];
    while let Some(id) = stack.pop() {
        for kid in &arena.kids[id] {
            match kid {
                Kid::Node(c) => {
                    upper_dart[*c] = next;
                    rot[id].push(next);
                    rot[*c].push(next + 1);
                }
                Kid::Leaf(l) => {
                    leaf_dart[*l] = next + 1;
                    rot[id].push(next);
                }
            }
            partner[next] = next + 1;
            partner[next + 1] = next;
            next += 2;
        }
        for kid in arena.kids[id].iter().rev() {
            if let Kid::Node(c) = kid {
                stack.push(*c);
            }
        }
    }

    for l in (0..n_leaves).rev() {
        let p = arena.leaf_label[l];
        let (host, guide) = if p == -1 {
            (n_nodes, 1)
        } else {
            let mut a = arena.leaf_parent[l];
            while arena.depth[a] > p as usize + 1 {
                a = arena.parent[a].expect("label below parent depth");
            }
            (arena.parent[a].expect("depth p+1 vertex is not the root"), upper_dart[a])
        };
        let at = rot[host]
            .iter()
            .position(|&d| d == guide)
            .expect("guide dart sits at the host vertex");
        // just before the guide in counter-clockwise order is just after it
        // in clockwise order
        rot[host].insert(at, leaf_dart[l]);
    }

    let sigma = Perm::from_cycles(darts, &rot).expect("rotation lists partition the darts");
    let rho_images: Vec<usize> = (1..=darts).map(|d| partner[d]).collect();
    let rho = Perm::from_images(&rho_images).expect("partner table is an involution");
    let phi = rho.compose(&sigma).expect("equal degrees");
    GeneralRotation::new(phi, rho).expect("rho is a fixed-point-free involution")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn leaf(label: i64) -> TreeNode {
        TreeNode::Leaf { label }
    }

    fn node(children: Vec<TreeNode>) -> TreeNode {
        TreeNode::Internal { children }
    }

    #[test]
    fn double_edge_opens_to_the_free_leaf_tree() {
        let phi = Perm::from_cycles(4, &[vec![1, 4], vec![2, 3]]).unwrap();
        let rho = Perm::from_cycles(4, &[vec![1, 2], vec![3, 4]]).unwrap();
        let map = GeneralRotation::new(phi, rho).unwrap();
        let tree = tree_from_map(&map).unwrap();
        assert_eq!(tree.root(), &node(vec![leaf(-1)]));
        assert!(map_from_tree(&tree).root_equivalent(&map));
    }

    #[test]
    fn chain_tree_closes_to_a_triangle() {
        let tree = DecoratedTree::new(node(vec![node(vec![leaf(-1)])])).unwrap();
        let map = map_from_tree(&tree);
        assert_eq!(map.n_edges(), 3);
        assert_eq!(map.genus().unwrap(), 0);
        assert_eq!(map.vertex_type().parts(), &[2, 2, 2]);
        assert_eq!(map.face_type().parts(), &[3, 3]);
        assert_eq!(tree_from_map(&map).unwrap(), tree);
    }

    #[test]
    fn bridges_are_rejected() {
        let phi = Perm::from_cycles(4, &[vec![1, 3, 4, 2]]).unwrap();
        let rho = Perm::from_cycles(4, &[vec![1, 2], vec![3, 4]]).unwrap();
        let map = GeneralRotation::new(phi, rho).unwrap();
        assert!(matches!(
            tree_from_map(&map),
            Err(BijectError::NotNonseparable)
        ));
    }
}
