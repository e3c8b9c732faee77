use serde::{Deserialize, Serialize};
use symcore::Perm;

use crate::rotation::{
    BipartiteRotation, ConstellationRotation, GeneralRotation, HypermapRotation,
};
use crate::MapError;

pub const SCHEMA: &str = "mapforge/1";

/// Wire format for every rotation-system flavor. Permutations are arrays of
/// 1-based images. `n` counts edges (general, bipartite) or hyperedges
/// (constellation, hypermap); `m` only appears for the latter two.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MapJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    pub flavor: String,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    pub perms: PermsJson,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct PermsJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<Perm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<Perm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma_black: Option<Perm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma_white: Option<Perm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigmas: Option<Vec<Perm>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma_circ: Option<Perm>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyRotation {
    General(GeneralRotation),
    Bipartite(BipartiteRotation),
    Constellation(ConstellationRotation),
    Hypermap(HypermapRotation),
}

impl MapJson {
    pub fn from_rotation(rot: &AnyRotation) -> MapJson {
        let schema = Some(SCHEMA.to_string());
        match rot {
            AnyRotation::General(g) => MapJson {
                schema,
                flavor: "general".into(),
                n: g.n_edges(),
                m: None,
                perms: PermsJson {
                    phi: Some(g.phi().clone()),
                    rho: Some(g.rho().clone()),
                    ..Default::default()
                },
            },
            AnyRotation::Bipartite(b) => MapJson {
                schema,
                flavor: "bipartite".into(),
                n: b.n_edges(),
                m: None,
                perms: PermsJson {
                    sigma_black: Some(b.sigma_black().clone()),
                    sigma_white: Some(b.sigma_white().clone()),
                    phi: Some(b.phi().clone()),
                    ..Default::default()
                },
            },
            AnyRotation::Constellation(c) => MapJson {
                schema,
                flavor: "constellation".into(),
                n: c.n_hyperedges(),
                m: Some(c.m()),
                perms: PermsJson {
                    sigmas: Some(c.sigmas().to_vec()),
                    phi: Some(c.phi().clone()),
                    ..Default::default()
                },
            },
            AnyRotation::Hypermap(h) => MapJson {
                schema,
                flavor: "hypermap".into(),
                n: h.n_hyperedges(),
                m: Some(h.m()),
                perms: PermsJson {
                    sigma_circ: Some(h.sigma_circ().clone()),
                    phi: Some(h.phi()),
                    ..Default::default()
                },
            },
        }
    }

    /// Validates and rebuilds the typed rotation system. Redundant fields
    /// (a bipartite or hypermap phi) are cross-checked, not trusted.
    pub fn to_rotation(&self) -> Result<AnyRotation, MapError> {
        if let Some(s) = &self.schema {
            if s != SCHEMA {
                return Err(MapError::BadPayload(format!("unknown schema {s}")));
            }
        }
        let missing = |what: &str| MapError::BadPayload(format!("{what} missing"));
        match self.flavor.as_str() {
            "general" => {
                let phi = self.perms.phi.clone().ok_or_else(|| missing("perms.phi"))?;
                let rho = self.perms.rho.clone().ok_or_else(|| missing("perms.rho"))?;
                if phi.degree() != 2 * self.n {
                    return Err(MapError::BadPayload(format!(
                        "general flavor wants 2n = {} darts, phi has degree {}",
                        2 * self.n,
                        phi.degree()
                    )));
                }
                Ok(AnyRotation::General(GeneralRotation::new(phi, rho)?))
            }
            "bipartite" => {
                let black = self
                    .perms
                    .sigma_black
                    .clone()
                    .ok_or_else(|| missing("perms.sigma_black"))?;
                let white = self
                    .perms
                    .sigma_white
                    .clone()
                    .ok_or_else(|| missing("perms.sigma_white"))?;
                if black.degree() != self.n {
                    return Err(MapError::BadPayload("degree != n".into()));
                }
                let rot = match self.perms.phi.clone() {
                    Some(phi) => BipartiteRotation::new(black, white, phi)?,
                    None => BipartiteRotation::from_vertex_rotations(black, white)?,
                };
                Ok(AnyRotation::Bipartite(rot))
            }
            "constellation" => {
                let sigmas = self
                    .perms
                    .sigmas
                    .clone()
                    .ok_or_else(|| missing("perms.sigmas"))?;
                let m = self.m.ok_or_else(|| missing("m"))?;
                if sigmas.len() != m {
                    return Err(MapError::BadPayload(format!(
                        "m = {m} but {} sigmas given",
                        sigmas.len()
                    )));
                }
                let phi = match self.perms.phi.clone() {
                    Some(phi) => phi,
                    None => {
                        let mut prod = Perm::identity(self.n);
                        for s in &sigmas {
                            prod = prod.compose(s).map_err(MapError::Sym)?;
                        }
                        prod.inverse()
                    }
                };
                Ok(AnyRotation::Constellation(ConstellationRotation::new(
                    sigmas, phi,
                )?))
            }
            "hypermap" => {
                let circ = self
                    .perms
                    .sigma_circ
                    .clone()
                    .ok_or_else(|| missing("perms.sigma_circ"))?;
                let m = self.m.ok_or_else(|| missing("m"))?;
                let rot = HypermapRotation::new(m, self.n, circ)?;
                if let Some(phi) = &self.perms.phi {
                    if *phi != rot.phi() {
                        return Err(MapError::BadPayload(
                            "phi inconsistent with sigma_circ".into(),
                        ));
                    }
                }
                Ok(AnyRotation::Hypermap(rot))
            }
            other => Err(MapError::BadPayload(format!("unknown flavor {other}"))),
        }
    }
}
