//! Imported vanishing theorems, kept as explicit assertions.
//!
//! Nothing here is derived. Every check that relies on an axiom lists its id
//! in the report.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChaseError {
    #[error("no axiom registered for {0}")]
    MissingAxiom(String),
}

/// One asserted vanishing. `h0`/`h1` are `None` when the axiom says nothing
/// about that degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Axiom {
    pub id: String,
    pub group: String,
    #[serde(default)]
    pub h0: Option<u64>,
    #[serde(default)]
    pub h1: Option<u64>,
    pub citation: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomRegistry {
    axioms: BTreeMap<String, Axiom>,
}

pub const NEF_BIG_DUAL: &str = "nef_big_dual";
pub const NEF_BIG_DUAL_L2: &str = "nef_big_dual_l2";
pub const BOGOMOLOV_SOMMESE: &str = "bogomolov_sommese";
pub const MIYAOKA_S2: &str = "miyaoka_s2";
pub const LI_SCHWERMER: &str = "li_schwermer";

impl Default for AxiomRegistry {
    fn default() -> Self {
        let ax = |id: &str, group: &str, h0, h1, citation: &str| Axiom {
            id: id.into(),
            group: group.into(),
            h0,
            h1,
            citation: citation.into(),
        };
        AxiomRegistry::from_list(vec![
            ax(
                NEF_BIG_DUAL,
                "L^-1",
                Some(0),
                Some(0),
                "Kawamata-Viehweg type vanishing: H^0(L^-1) = H^1(L^-1) = 0 for L nef and big",
            ),
            ax(
                NEF_BIG_DUAL_L2,
                "L^-2",
                Some(0),
                Some(0),
                "Kawamata-Viehweg type vanishing: H^0(L^-2) = H^1(L^-2) = 0 for L nef and big",
            ),
            ax(
                BOGOMOLOV_SOMMESE,
                "W*L^-1",
                Some(0),
                None,
                "Bogomolov-Sommese vanishing: H^0(Omega^1(log D) (x) L^-1) = 0 for L nef and big",
            ),
            ax(
                MIYAOKA_S2,
                "S2W*L^-2",
                Some(0),
                None,
                "Miyaoka-type vanishing: H^0(S^2 Omega^1(log D) (x) L^-2) = 0",
            ),
            ax(
                LI_SCHWERMER,
                "IH(End0V1)",
                Some(0),
                Some(0),
                "Li-Schwermer: End0(V1) has regular highest weight, so its intersection cohomology sits in degree 2",
            ),
        ])
    }
}

impl AxiomRegistry {
    pub fn empty() -> Self {
        AxiomRegistry { axioms: BTreeMap::new() }
    }

    pub fn from_list(list: Vec<Axiom>) -> Self {
        AxiomRegistry { axioms: list.into_iter().map(|a| (a.id.clone(), a)).collect() }
    }

    pub fn to_list(&self) -> Vec<Axiom> {
        self.axioms.values().cloned().collect()
    }

    pub fn get(&self, id: &str) -> Option<&Axiom> {
        self.axioms.get(id)
    }

    /// First axiom (by id) about the given group tag.
    pub fn for_group(&self, group: &str) -> Option<&Axiom> {
        self.axioms.values().find(|a| a.group == group)
    }

    /// Asserted value of `h^q(group)`, with the axiom id that asserts it.
    pub fn value(&self, group: &str, q: u32) -> Option<(u64, &str)> {
        self.axioms.values().find_map(|a| {
            if a.group != group {
                return None;
            }
            let v = match q {
                0 => a.h0,
                1 => a.h1,
                _ => None,
            }?;
            Some((v, a.id.as_str()))
        })
    }

    pub fn without(&self, id: &str) -> Self {
        let mut r = self.clone();
        r.axioms.remove(id);
        r
    }

    pub fn len(&self) -> usize {
        self.axioms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.axioms.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_registry_lookup() {
        let r = AxiomRegistry::default();
        assert_eq!(r.value("L^-1", 0), Some((0, NEF_BIG_DUAL)));
        assert_eq!(r.value("L^-1", 1), Some((0, NEF_BIG_DUAL)));
        assert_eq!(r.value("W*L^-1", 1), None);
        assert!(r.without(NEF_BIG_DUAL).value("L^-1", 0).is_none());
    }

    #[test]
    fn json_roundtrip() {
        let r = AxiomRegistry::default();
        let s = serde_json::to_string(&r.to_list()).unwrap();
        let back: Vec<Axiom> = serde_json::from_str(&s).unwrap();
        assert_eq!(AxiomRegistry::from_list(back), r);
    }
}
