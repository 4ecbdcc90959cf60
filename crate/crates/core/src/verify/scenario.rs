use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::curves::{Axiom, AxiomRegistry};

pub const DEFAULT_TRUNCATION: u32 = 3;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("cannot parse scenario: {0}")]
    Parse(String),
    #[error("unknown suite `{0}` (expected one of lattice, curves, tensor, higgs, l2, motives, all)")]
    UnknownSuite(String),
    #[error("unknown axiom id `{0}`")]
    UnknownAxiom(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Lattice,
    Curves,
    Tensor,
    Higgs,
    L2,
    Motives,
}

impl Suite {
    pub const ALL: [Suite; 6] = [Suite::Lattice, Suite::Curves, Suite::Tensor, Suite::Higgs, Suite::L2, Suite::Motives];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lattice => "lattice",
            Suite::Curves => "curves",
            Suite::Tensor => "tensor",
            Suite::Higgs => "higgs",
            Suite::L2 => "l2",
            Suite::Motives => "motives",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| VerifyError::UnknownSuite(s.to_string()))
    }
}

/// An axiom given by id (taken from the built-in registry) or in full.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AxiomSpec {
    Id(String),
    Full(Axiom),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    /// Suite names, or `["all"]`. Missing means all.
    #[serde(default)]
    pub suites: Option<Vec<String>>,
    #[serde(default = "default_truncation")]
    pub truncation_bound: u32,
    /// Missing means the built-in registry.
    #[serde(default)]
    pub axioms: Option<Vec<AxiomSpec>>,
    #[serde(default)]
    pub output: Option<String>,
}

fn default_truncation() -> u32 {
    DEFAULT_TRUNCATION
}

impl Default for Scenario {
    fn default() -> Self {
        Scenario { suites: None, truncation_bound: DEFAULT_TRUNCATION, axioms: None, output: None }
    }
}

impl Scenario {
    pub fn parse(text: &str) -> Result<Self, VerifyError> {
        let s: Scenario = serde_json::from_str(text).map_err(|e| VerifyError::Parse(e.to_string()))?;
        s.selected_suites()?;
        s.registry()?;
        Ok(s)
    }

    pub fn from_path(path: &std::path::Path) -> Result<Self, VerifyError> {
        Scenario::parse(&std::fs::read_to_string(path)?)
    }

    /// Requested suites in canonical order, duplicates removed.
    pub fn selected_suites(&self) -> Result<Vec<Suite>, VerifyError> {
        let names = match &self.suites {
            None => return Ok(Suite::ALL.to_vec()),
            Some(n) => n,
        };
        let mut out = Vec::new();
        for n in names {
            if n == "all" {
                return Ok(Suite::ALL.to_vec());
            }
            out.push(n.parse::<Suite>()?);
        }
        out.sort();
        out.dedup();
        Ok(out)
    }

    pub fn registry(&self) -> Result<AxiomRegistry, VerifyError> {
        let specs = match &self.axioms {
            None => return Ok(AxiomRegistry::default()),
            Some(s) => s,
        };
        let builtin = AxiomRegistry::default();
        let mut list = Vec::new();
        for spec in specs {
            match spec {
                AxiomSpec::Id(id) => {
                    list.push(builtin.get(id).cloned().ok_or_else(|| VerifyError::UnknownAxiom(id.clone()))?)
                }
                AxiomSpec::Full(a) => list.push(a.clone()),
            }
        }
        Ok(AxiomRegistry::from_list(list))
    }
}
