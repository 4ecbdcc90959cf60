//! Hypercohomology of reduced complexes and the L² refinement of `H¹`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::curves::{twisted_omega1_chase, AxiomRegistry, ChaseResult};

use super::{BundleMonomial, HComplex, HiggsError};

/// One `h^q(group)` contribution to `Hⁿ`, coming from object `from_degree`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohTerm {
    pub q: u32,
    pub from_degree: usize,
    pub group: String,
    pub hodge: (i64, i64),
    pub value: Option<u64>,
    pub axiom: Option<String>,
}

impl CohTerm {
    pub fn symbol(&self) -> String {
        format!("h^{}({})", self.q, self.group)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HyperCoh {
    pub degree: usize,
    pub terms: Vec<CohTerm>,
}

impl HyperCoh {
    /// Zero only when every term is asserted zero.
    pub fn is_exact_zero(&self) -> bool {
        self.terms.iter().all(|t| t.value == Some(0))
    }

    /// Terms not known to vanish.
    pub fn residue(&self) -> Vec<&CohTerm> {
        self.terms.iter().filter(|t| t.value != Some(0)).collect()
    }

    pub fn expression(&self) -> String {
        let parts: Vec<String> = self
            .residue()
            .iter()
            .map(|t| match t.value {
                Some(v) => v.to_string(),
                None => t.symbol(),
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    pub fn axioms_used(&self) -> BTreeSet<String> {
        self.terms.iter().filter_map(|t| t.axiom.clone()).collect()
    }
}

/// `Hⁿ = ⊕_j H^{n−j}(obj_j)` for `n = 0..=4`.
pub fn hypercoh(c: &HComplex, axioms: &AxiomRegistry) -> Result<Vec<HyperCoh>, HiggsError> {
    if !c.is_reduced() {
        return Err(HiggsError::NotReduced);
    }
    let mut out = Vec::new();
    for n in 0..=4usize {
        let mut terms = Vec::new();
        for j in 0..3usize {
            if j > n || n - j > 2 {
                continue;
            }
            let q = (n - j) as u32;
            for s in &c.objects[j] {
                let group = s.name();
                let (value, axiom) = match axioms.value(&group, q) {
                    Some((v, id)) => (Some(v), Some(id.to_string())),
                    None => (None, None),
                };
                terms.push(CohTerm { q, from_degree: j, group, hodge: s.hodge, value, axiom });
            }
        }
        out.push(HyperCoh { degree: n, terms });
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "bound", rename_all = "snake_case")]
pub enum Verdict {
    Vanishes,
    BoundedBy(u64),
    Unknown,
}

/// A degree-1 summand whose sections are forced to vanish.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Located {
    pub degree: usize,
    pub monomial: String,
    pub expanded: String,
    pub hodge: (i64, i64),
    /// The group as it appears in the L² statement, with the boundary twist.
    pub l2_form: String,
    pub twist_imported: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct L2Refinement {
    pub verdict: Verdict,
    pub h1: HyperCoh,
    pub certificates: Vec<ChaseResult>,
    pub located: Vec<Located>,
    pub axioms_used: BTreeSet<String>,
    pub notes: Vec<String>,
}

fn with_boundary_twist(m: &BundleMonomial) -> String {
    let n = m.normalize();
    let head = match n.s {
        0 => "O".to_string(),
        1 => "W".to_string(),
        s => format!("S{s}W"),
    };
    if n.l == 0 {
        format!("{head}(-D)")
    } else {
        format!("{head}(-D)*L^{}", n.l)
    }
}

/// Decides `H¹` of the L² subcomplex.
///
/// With an intersection-cohomology vanishing for the local system, everything
/// vanishes and the degree-1 `h⁰` residues are located. Otherwise each
/// degree-1 `h⁰` residue of Hodge type `(p, q)` is bounded by `h⁰` of the
/// parent piece `E^{p,q}` twisted by `Ω¹_X̄`, via the exceptional-curve chase.
pub fn l2_refine(c: &HComplex, axioms: &AxiomRegistry) -> Result<L2Refinement, HiggsError> {
    let h = hypercoh(c, axioms)?;
    let h1 = h[1].clone();
    let mut used = h1.axioms_used();
    let ih_group = format!("IH({})", c.label);
    if let Some((0, id)) = axioms.value(&ih_group, 1) {
        used.insert(id.to_string());
        let located = h1
            .residue()
            .iter()
            .filter(|t| t.q == 0 && t.from_degree == 1)
            .map(|t| {
                let s = &c.objects[1].iter().find(|s| s.name() == t.group && s.hodge == t.hodge).expect("term comes from an object");
                Located {
                    degree: 1,
                    monomial: t.group.clone(),
                    expanded: s.monomial.expanded(),
                    hodge: t.hodge,
                    l2_form: with_boundary_twist(&s.monomial),
                    twist_imported: true,
                }
            })
            .collect();
        return Ok(L2Refinement {
            verdict: Verdict::Vanishes,
            h1,
            certificates: Vec::new(),
            located,
            axioms_used: used,
            notes: vec![format!(
                "{ih_group} vanishes in degree 1; every degree-1 residue has no L2 sections. The (-D) twist comes from the L2 condition and is imported, not derived."
            )],
        });
    }

    let mut certificates = Vec::new();
    let mut notes = Vec::new();
    let mut total = 0u64;
    let mut unknown = false;
    for t in h1.residue() {
        if let Some(v) = t.value {
            total += v;
            continue;
        }
        if t.q != 0 || t.from_degree != 1 {
            notes.push(format!("{} has no registered value", t.symbol()));
            unknown = true;
            continue;
        }
        let target = c.objects[1].iter().find(|s| s.name() == t.group && s.hodge == t.hodge).expect("term comes from an object");
        let parents: Vec<BundleMonomial> = c
            .source
            .iter()
            .filter(|p| p.hodge == t.hodge)
            .map(|p| p.monomial)
            .filter(|m| {
                m.tensor(&BundleMonomial::w()).keys().any(|k| k.normalize() == target.monomial.normalize())
            })
            .collect();
        if parents.len() != 1 {
            notes.push(format!("{}: parent piece is ambiguous", t.symbol()));
            unknown = true;
            continue;
        }
        let parent = parents[0].normalize();
        match twisted_omega1_chase(parent.s as usize, parent.l, &parent.to_string(), axioms) {
            Ok(cert) => {
                notes.push(format!(
                    "{} injects into h^0({}*Omega1_X) <= {}",
                    t.symbol(),
                    parent,
                    cert.bound
                ));
                used.extend(cert.axioms_used.iter().cloned());
                total += cert.bound;
                certificates.push(cert);
            }
            Err(e) => {
                notes.push(format!("{}: {e}", t.symbol()));
                unknown = true;
            }
        }
    }
    let verdict = if unknown {
        Verdict::Unknown
    } else if total == 0 {
        Verdict::Vanishes
    } else {
        Verdict::BoundedBy(total)
    };
    Ok(L2Refinement { verdict, h1, certificates, located: Vec::new(), axioms_used: used, notes })
}
