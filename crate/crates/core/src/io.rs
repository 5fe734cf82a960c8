//! JSON forms of coset systems.
//!
//! ```text
//! {"type": "Z", "m": 1, "classes": [[0, 2], [1, 4], [3, 4]]}
//! {"type": "abelian", "orders": [2, 2], "m": 1,
//!  "cosets": [{"rep": [0, 1], "gens": [[1, 0]]}, ...]}
//! ```
//!
//! `m` is optional and defaults to 1. Coset generators may be empty, giving a
//! singleton coset.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::abgroup::{AbelianGroup, Coset, CosetSystem, GroupElement};
use crate::error::{Error, Result};
use crate::zcover::ZCoverSystem;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetSpec {
    pub rep: Vec<i64>,
    #[serde(default)]
    pub gens: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum SystemSpec {
    #[serde(rename = "Z")]
    Integers {
        #[serde(default = "one")]
        m: u32,
        classes: Vec<(i64, u64)>,
    },
    #[serde(rename = "abelian")]
    Abelian {
        orders: Vec<u64>,
        #[serde(default = "one")]
        m: u32,
        cosets: Vec<CosetSpec>,
    },
}

fn one() -> u32 {
    1
}

/// A parsed system together with its stated multiplicity.
#[derive(Debug, Clone)]
pub enum LoadedSystem {
    Integers { system: ZCoverSystem, m: u32 },
    Abelian { system: CosetSystem, m: u32 },
}

impl LoadedSystem {
    pub fn m(&self) -> u32 {
        match self {
            LoadedSystem::Integers { m, .. } | LoadedSystem::Abelian { m, .. } => *m,
        }
    }
}

fn parse_error(e: serde_json::Error) -> Error {
    Error::Domain(format!("malformed system JSON: {e}"))
}

pub fn parse_spec(text: &str) -> Result<SystemSpec> {
    serde_json::from_str(text).map_err(parse_error)
}

pub fn load_system(text: &str) -> Result<LoadedSystem> {
    build(parse_spec(text)?)
}

pub fn build(spec: SystemSpec) -> Result<LoadedSystem> {
    match spec {
        SystemSpec::Integers { m, classes } => Ok(LoadedSystem::Integers {
            system: ZCoverSystem::from_pairs(&classes)?,
            m,
        }),
        SystemSpec::Abelian { orders, m, cosets } => {
            let group = AbelianGroup::new(orders)?;
            let cosets = cosets
                .iter()
                .map(|c| coset_from_spec(&group, c))
                .collect::<Result<Vec<_>>>()?;
            Ok(LoadedSystem::Abelian {
                system: CosetSystem::new(group, cosets)?,
                m,
            })
        }
    }
}

pub fn coset_from_spec(group: &AbelianGroup, spec: &CosetSpec) -> Result<Coset> {
    let rep = group.element(&spec.rep)?;
    let gens = parse_elements(group, &spec.gens)?;
    Coset::from_generators(group, &rep, &gens)
}

pub fn parse_elements(group: &AbelianGroup, coords: &[Vec<i64>]) -> Result<Vec<GroupElement>> {
    coords.iter().map(|c| group.element(c)).collect()
}

fn coords(x: &GroupElement) -> Vec<u64> {
    x.coords().to_vec()
}

pub fn coset_to_json(coset: &Coset) -> Value {
    json!({
        "rep": coords(&coset.rep()),
        "gens": coset.subgroup().generating_set().iter().map(coords).collect::<Vec<_>>(),
    })
}

pub fn coset_system_to_json(system: &CosetSystem, m: u32) -> Value {
    json!({
        "type": "abelian",
        "orders": system.group().orders(),
        "m": m,
        "cosets": system.cosets().iter().map(coset_to_json).collect::<Vec<_>>(),
    })
}

pub fn zcover_to_json(system: &ZCoverSystem, m: u32) -> Value {
    json!({
        "type": "Z",
        "m": m,
        "classes": system
            .classes()
            .iter()
            .map(|c| [c.residue(), c.modulus()])
            .collect::<Vec<_>>(),
    })
}

pub fn to_json(loaded: &LoadedSystem) -> Value {
    match loaded {
        LoadedSystem::Integers { system, m } => zcover_to_json(system, *m),
        LoadedSystem::Abelian { system, m } => coset_system_to_json(system, *m),
    }
}
