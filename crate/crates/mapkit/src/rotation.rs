use symcore::{orbit_of_point, Partition, Perm};

use crate::MapError;

/// General rooted map on 2n darts: `phi` tours each face, `rho` swaps the two
/// darts of each edge, and the derived `sigma = rho * phi` (left-to-right)
/// tours each vertex counter-clockwise. Root is the dart labeled 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct GeneralRotation {
    phi: Perm,
    rho: Perm,
}

impl GeneralRotation {
    pub fn new(phi: Perm, rho: Perm) -> Result<Self, MapError> {
        if phi.degree() != rho.degree() {
            return Err(MapError::Sym(symcore::SymError::DegreeMismatch(
                phi.degree(),
                rho.degree(),
            )));
        }
        if !rho.is_fixed_point_free_involution() {
            return Err(MapError::BadRho);
        }
        Ok(GeneralRotation { phi, rho })
    }

    pub fn phi(&self) -> &Perm {
        &self.phi
    }

    pub fn rho(&self) -> &Perm {
        &self.rho
    }

    /// Vertex rotation: first rho, then phi.
    pub fn sigma(&self) -> Perm {
        self.rho.compose(&self.phi).expect("equal degrees")
    }

    pub fn n_edges(&self) -> usize {
        self.phi.degree() / 2
    }

    pub fn darts(&self) -> usize {
        self.phi.degree()
    }

    pub fn is_transitive(&self) -> bool {
        orbit_of_point(1, &[&self.phi, &self.rho]).len() == self.darts()
    }

    pub fn genus(&self) -> Result<usize, MapError> {
        if !self.is_transitive() {
            return Err(MapError::NotTransitive);
        }
        let v = self.sigma().cycle_count();
        let e = self.n_edges();
        let f = self.phi.cycle_count();
        euler_genus(v + f, e)
    }

    pub fn face_type(&self) -> Partition {
        self.phi.cycle_type()
    }

    pub fn vertex_type(&self) -> Partition {
        self.sigma().cycle_type()
    }

    /// Face/vertex-swapping dual on the same darts: faces of the dual are the
    /// vertices of the original and vice versa. Applying it twice returns the
    /// identical rotation system.
    pub fn dual(&self) -> GeneralRotation {
        GeneralRotation {
            phi: self.sigma(),
            rho: self.rho.clone(),
        }
    }

    /// Root-preserving canonical relabeling: breadth-first from dart 1,
    /// expanding phi before rho. Two transitive systems describe the same
    /// rooted map iff their canonical forms are identical.
    pub fn canonical(&self) -> GeneralRotation {
        let n = self.darts();
        let mut order = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::from([0usize]);
        order[0] = 0;
        let mut next = 1;
        while let Some(d) = queue.pop_front() {
            for img in [self.phi.apply(d + 1) - 1, self.rho.apply(d + 1) - 1] {
                if order[img] == usize::MAX {
                    order[img] = next;
                    next += 1;
                    queue.push_back(img);
                }
            }
        }
        assert_eq!(next, n, "canonical form needs a transitive system");
        let relabel = Perm::from_images(&order.iter().map(|&v| v + 1).collect::<Vec<_>>()).unwrap();
        GeneralRotation {
            phi: self.phi.conjugate_by(&relabel).unwrap(),
            rho: self.rho.conjugate_by(&relabel).unwrap(),
        }
    }

    pub fn root_equivalent(&self, other: &GeneralRotation) -> bool {
        self.canonical() == other.canonical()
    }
}

fn euler_genus(v_plus_f: usize, e: usize) -> Result<usize, MapError> {
    let chi = v_plus_f as i64 - e as i64;
    if chi > 2 || (2 - chi) % 2 != 0 {
        return Err(MapError::BadRelation(format!(
            "Euler characteristic {chi} impossible for an orientable surface"
        )));
    }
    Ok(((2 - chi) / 2) as usize)
}

/// Bipartite rooted map on n edge labels: sigma_black and sigma_white rotate
/// the edges around their black/white endpoints, phi tours faces, and
/// sigma_black * sigma_white * phi = id. A face of degree 2d is a phi-cycle
/// of length d. Root is the edge labeled 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BipartiteRotation {
    sigma_black: Perm,
    sigma_white: Perm,
    phi: Perm,
}

impl BipartiteRotation {
    pub fn new(sigma_black: Perm, sigma_white: Perm, phi: Perm) -> Result<Self, MapError> {
        let prod = sigma_black
            .compose(&sigma_white)
            .and_then(|p| p.compose(&phi))
            .map_err(MapError::Sym)?;
        if !prod.is_identity() {
            return Err(MapError::BadRelation(
                "sigma_black * sigma_white * phi != id".into(),
            ));
        }
        Ok(BipartiteRotation {
            sigma_black,
            sigma_white,
            phi,
        })
    }

    /// phi is determined by the two vertex rotations.
    pub fn from_vertex_rotations(sigma_black: Perm, sigma_white: Perm) -> Result<Self, MapError> {
        let phi = sigma_black
            .compose(&sigma_white)
            .map_err(MapError::Sym)?
            .inverse();
        Self::new(sigma_black, sigma_white, phi)
    }

    pub fn sigma_black(&self) -> &Perm {
        &self.sigma_black
    }

    pub fn sigma_white(&self) -> &Perm {
        &self.sigma_white
    }

    pub fn phi(&self) -> &Perm {
        &self.phi
    }

    pub fn n_edges(&self) -> usize {
        self.phi.degree()
    }

    pub fn is_transitive(&self) -> bool {
        orbit_of_point(1, &[&self.sigma_black, &self.sigma_white]).len() == self.n_edges()
    }

    pub fn genus(&self) -> Result<usize, MapError> {
        if !self.is_transitive() {
            return Err(MapError::NotTransitive);
        }
        let v = self.sigma_black.cycle_count() + self.sigma_white.cycle_count();
        euler_genus(v + self.phi.cycle_count(), self.n_edges())
    }

    /// Face half-degrees: cycle type of phi, so a part d stands for a face of
    /// degree 2d.
    pub fn face_half_type(&self) -> Partition {
        self.phi.cycle_type()
    }
}

/// m-constellation on n labels: m vertex rotations (one per color) and the
/// hyperface tour phi with sigma_1 * ... * sigma_m * phi = id. A hyperface of
/// degree m*d is a phi-cycle of length d.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConstellationRotation {
    sigmas: Vec<Perm>,
    phi: Perm,
}

impl ConstellationRotation {
    pub fn new(sigmas: Vec<Perm>, phi: Perm) -> Result<Self, MapError> {
        if sigmas.is_empty() {
            return Err(MapError::BadRelation("need at least one color".into()));
        }
        let mut prod = sigmas[0].clone();
        for s in &sigmas[1..] {
            prod = prod.compose(s).map_err(MapError::Sym)?;
        }
        prod = prod.compose(&phi).map_err(MapError::Sym)?;
        if !prod.is_identity() {
            return Err(MapError::BadRelation(
                "sigma_1 * ... * sigma_m * phi != id".into(),
            ));
        }
        Ok(ConstellationRotation { sigmas, phi })
    }

    pub fn m(&self) -> usize {
        self.sigmas.len()
    }

    pub fn sigmas(&self) -> &[Perm] {
        &self.sigmas
    }

    pub fn phi(&self) -> &Perm {
        &self.phi
    }

    pub fn n_hyperedges(&self) -> usize {
        self.phi.degree()
    }

    pub fn is_transitive(&self) -> bool {
        let gens: Vec<&Perm> = self.sigmas.iter().collect();
        orbit_of_point(1, &gens).len() == self.n_hyperedges()
    }

    pub fn genus(&self) -> Result<usize, MapError> {
        if !self.is_transitive() {
            return Err(MapError::NotTransitive);
        }
        let n = self.n_hyperedges();
        let v: usize = self.sigmas.iter().map(|s| s.cycle_count()).sum();
        // v - mn + n + f = 2 - 2g
        let chi = v as i64 + self.phi.cycle_count() as i64 + n as i64 - (self.m() * n) as i64;
        if chi > 2 || (2 - chi) % 2 != 0 {
            return Err(MapError::BadRelation(format!(
                "constellation Euler characteristic {chi}"
            )));
        }
        Ok(((2 - chi) / 2) as usize)
    }
}

/// The pinned hyperedge involution-like rotation for m-hypermaps: blocks
/// (1 .. m)(m+1 .. 2m)... as a single m-cycle each.
pub fn canonical_bullet(m: usize, n: usize) -> Perm {
    let cycles: Vec<Vec<usize>> = (0..n)
        .map(|b| (b * m + 1..=(b + 1) * m).collect())
        .collect();
    Perm::from_cycles(m * n, &cycles).unwrap()
}

/// m-hypermap on mn labels: sigma_bullet is pinned to the canonical block
/// m-cycles, sigma_circ tours hyperfaces (a hyperface of degree m*d is a
/// sigma_circ-cycle of length m*d), and phi = (sigma_circ * sigma_bullet)^-1
/// tours vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HypermapRotation {
    m: usize,
    n: usize,
    sigma_circ: Perm,
}

impl HypermapRotation {
    pub fn new(m: usize, n: usize, sigma_circ: Perm) -> Result<Self, MapError> {
        if sigma_circ.degree() != m * n {
            return Err(MapError::Sym(symcore::SymError::DegreeMismatch(
                sigma_circ.degree(),
                m * n,
            )));
        }
        if sigma_circ.cycle_type().unscaled(m).is_none() {
            return Err(MapError::BadRelation(
                "sigma_circ cycle lengths must be multiples of m".into(),
            ));
        }
        Ok(HypermapRotation { m, n, sigma_circ })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n_hyperedges(&self) -> usize {
        self.n
    }

    pub fn sigma_circ(&self) -> &Perm {
        &self.sigma_circ
    }

    pub fn sigma_bullet(&self) -> Perm {
        canonical_bullet(self.m, self.n)
    }

    pub fn phi(&self) -> Perm {
        self.sigma_circ
            .compose(&self.sigma_bullet())
            .expect("equal degrees")
            .inverse()
    }

    /// Hyperface degrees divided by m.
    pub fn hyperface_type(&self) -> Partition {
        self.sigma_circ.cycle_type().unscaled(self.m).unwrap()
    }

    pub fn is_transitive(&self) -> bool {
        let bullet = self.sigma_bullet();
        orbit_of_point(1, &[&self.sigma_circ, &bullet]).len() == self.m * self.n
    }

    pub fn genus(&self) -> Result<usize, MapError> {
        if !self.is_transitive() {
            return Err(MapError::NotTransitive);
        }
        // l(sigma_circ) + l(phi) + n - mn = 2 - 2g
        let chi = self.sigma_circ.cycle_count() as i64 + self.phi().cycle_count() as i64
            + self.n as i64
            - (self.m * self.n) as i64;
        if chi > 2 || (2 - chi) % 2 != 0 {
            return Err(MapError::BadRelation(format!(
                "hypermap Euler characteristic {chi}"
            )));
        }
        Ok(((2 - chi) / 2) as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_edge_maps() {
        let rho = Perm::from_cycles(2, &[vec![1, 2]]).unwrap();
        let segment = GeneralRotation::new(Perm::from_cycles(2, &[vec![1, 2]]).unwrap(), rho.clone())
            .unwrap();
        assert_eq!(segment.genus().unwrap(), 0);
        assert_eq!(segment.vertex_type().parts(), &[1, 1]);
        assert_eq!(segment.face_type().parts(), &[2]);

        let loop_map = GeneralRotation::new(Perm::identity(2), rho).unwrap();
        assert_eq!(loop_map.genus().unwrap(), 0);
        assert_eq!(loop_map.vertex_type().parts(), &[2]);
        assert_eq!(loop_map.face_type().parts(), &[1, 1]);
    }

    #[test]
    fn dual_swaps_faces_and_vertices_and_is_an_involution() {
        let phi = Perm::from_cycles(6, &[vec![1, 2, 3], vec![4, 5, 6]]).unwrap();
        let rho = Perm::from_cycles(6, &[vec![1, 4], vec![2, 5], vec![3, 6]]).unwrap();
        let map = GeneralRotation::new(phi, rho).unwrap();
        assert!(map.is_transitive());
        let d = map.dual();
        assert_eq!(d.face_type(), map.vertex_type());
        assert_eq!(d.vertex_type(), map.face_type());
        assert_eq!(d.genus().unwrap(), map.genus().unwrap());
        assert_eq!(d.dual(), map);
    }

    #[test]
    fn torus_double_loop() {
        // phi = (1 2 3 4) with rho = (1 3)(2 4): one vertex, one face, genus 1
        let phi = Perm::from_cycles(4, &[vec![1, 2, 3, 4]]).unwrap();
        let rho = Perm::from_cycles(4, &[vec![1, 3], vec![2, 4]]).unwrap();
        let map = GeneralRotation::new(phi, rho).unwrap();
        assert_eq!(map.genus().unwrap(), 1);
    }

    #[test]
    fn genus_requires_transitivity() {
        let phi = Perm::identity(4);
        let rho = Perm::from_cycles(4, &[vec![1, 2], vec![3, 4]]).unwrap();
        let map = GeneralRotation::new(phi, rho).unwrap();
        assert_eq!(map.genus(), Err(MapError::NotTransitive));
    }

    #[test]
    fn bipartite_single_edge() {
        let id = Perm::identity(1);
        let map = BipartiteRotation::new(id.clone(), id.clone(), id).unwrap();
        assert_eq!(map.genus().unwrap(), 0);
    }

    #[test]
    fn hypermap_degree_checks() {
        let circ = Perm::from_cycles(4, &[vec![1, 2, 3, 4]]).unwrap();
        let h = HypermapRotation::new(2, 2, circ).unwrap();
        assert_eq!(h.hyperface_type().parts(), &[2]);
        assert!(h.is_transitive());
        let bad = Perm::from_cycles(4, &[vec![1, 2, 3]]).unwrap();
        assert!(HypermapRotation::new(2, 2, bad).is_err());
    }
}
