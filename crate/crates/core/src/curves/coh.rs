//! Line-bundle cohomology on P¹ and on elliptic curves, split bundles on the
//! exceptional P¹'s, and the left-exactness bound used in the Z-restriction
//! chases.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::axioms::{AxiomRegistry, ChaseError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Default)]
pub struct CohDims {
    pub h0: u64,
    pub h1: u64,
}

impl CohDims {
    pub fn new(h0: u64, h1: u64) -> Self {
        CohDims { h0, h1 }
    }

    pub fn euler(&self) -> i64 {
        self.h0 as i64 - self.h1 as i64
    }
}

impl std::ops::Add for CohDims {
    type Output = CohDims;
    fn add(self, rhs: CohDims) -> CohDims {
        CohDims { h0: self.h0 + rhs.h0, h1: self.h1 + rhs.h1 }
    }
}

/// `(h⁰, h¹)` of `O(n)` on P¹.
pub fn h_p1(n: i64) -> CohDims {
    CohDims { h0: (n + 1).max(0) as u64, h1: (-n - 1).max(0) as u64 }
}

/// A line bundle on an elliptic curve. Triviality is only meaningful in degree 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EllBundle {
    pub degree: i64,
    pub trivial: bool,
}

impl EllBundle {
    pub fn new(degree: i64, trivial: bool) -> Self {
        assert!(!trivial || degree == 0, "only degree-0 bundles can be trivial");
        EllBundle { degree, trivial }
    }
}

pub fn h_elliptic(b: EllBundle) -> CohDims {
    match b.degree {
        d if d > 0 => CohDims::new(d as u64, 0),
        d if d < 0 => CohDims::new(0, (-d) as u64),
        _ if b.trivial => CohDims::new(1, 1),
        _ => CohDims::new(0, 0),
    }
}

/// `⊕_j O(n_j)` on one P¹ component, stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PSplit(Vec<i64>);

impl PSplit {
    pub fn new(mut degrees: Vec<i64>) -> Self {
        degrees.sort_unstable();
        PSplit(degrees)
    }

    pub fn line(n: i64) -> Self {
        PSplit(vec![n])
    }

    pub fn degrees(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn cohomology(&self) -> CohDims {
        self.0.iter().map(|&n| h_p1(n)).fold(CohDims::default(), |a, b| a + b)
    }

    pub fn h0(&self) -> u64 {
        self.cohomology().h0
    }

    /// `L^k` for a line bundle, `None` for higher rank.
    pub fn power(&self, k: i64) -> Option<PSplit> {
        match self.0.as_slice() {
            [n] => Some(PSplit::line(n * k)),
            _ => None,
        }
    }
}

impl fmt::Display for PSplit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

pub fn psplit_tensor(a: &PSplit, b: &PSplit) -> PSplit {
    let mut out = Vec::with_capacity(a.rank() * b.rank());
    for x in &a.0 {
        for y in &b.0 {
            out.push(x + y);
        }
    }
    PSplit::new(out)
}

fn index_tuples(n: usize, k: usize, strict: bool) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, start: usize, strict: bool, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, if strict { i + 1 } else { i }, strict, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, 0, strict, &mut Vec::new(), &mut out);
    out
}

/// `Sym^k`: weakly increasing index tuples.
pub fn psplit_sym(a: &PSplit, k: usize) -> PSplit {
    PSplit::new(index_tuples(a.rank(), k, false).iter().map(|t| t.iter().map(|&i| a.0[i]).sum()).collect())
}

/// `Λ^k`: strictly increasing index tuples.
pub fn psplit_wedge(a: &PSplit, k: usize) -> PSplit {
    PSplit::new(index_tuples(a.rank(), k, true).iter().map(|t| t.iter().map(|&i| a.0[i]).sum()).collect())
}

/// Number of exceptional P¹ components.
pub const EXCEPTIONAL_COMPONENTS: u64 = 3;

/// Splitting types on each exceptional component.
pub fn restriction_catalog() -> BTreeMap<&'static str, PSplit> {
    let mut m = BTreeMap::new();
    m.insert("W|Z", PSplit::new(vec![1, 2]));
    m.insert("L|Z", PSplit::line(1));
    m.insert("N*Z", PSplit::line(1));
    m.insert("Omega1_Z", PSplit::line(-2));
    m.insert("K(D)|Z", PSplit::line(3));
    m
}

/// `h⁰(middle) ≤ h⁰(sub) + h⁰(quotient)` from a short exact sequence.
pub fn chase_h0_bound(sub: CohDims, quotient_h0: u64) -> u64 {
    sub.h0 + quotient_h0
}

/// Outcome of the chase for `S^s W ⊗ L^l ⊗ Ω¹_X̄` through
/// `0 → σ*Ω¹_{E×E} → Ω¹_X̄ → i_*Ω¹_Z → 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChaseResult {
    pub group: String,
    pub sub_group: String,
    pub sub_copies: u64,
    pub sub_h0: u64,
    pub quotient_split: PSplit,
    pub quotient_h0_per_component: u64,
    pub quotient_h0: u64,
    pub bound: u64,
    pub axioms_used: Vec<String>,
}

/// Restriction of `S^s W ⊗ L^l ⊗ Ω¹_Z` to one exceptional component.
pub fn twisted_restriction(sym_power: usize, l_power: i64) -> PSplit {
    let cat = restriction_catalog();
    let w = psplit_sym(&cat["W|Z"], sym_power);
    let l = cat["L|Z"].power(l_power).expect("L|Z is a line bundle");
    psplit_tensor(&psplit_tensor(&w, &l), &cat["Omega1_Z"])
}

/// Bounds `h⁰(S^s W ⊗ L^l ⊗ Ω¹_X̄)`. The subsheaf is two copies of
/// `S^s W ⊗ L^l`, whose `h⁰` must come from a registered axiom under
/// `sub_group`; the quotient is computed on the three components of `Z`.
pub fn twisted_omega1_chase(
    sym_power: usize,
    l_power: i64,
    sub_group: &str,
    registry: &AxiomRegistry,
) -> Result<ChaseResult, ChaseError> {
    let axiom = registry.for_group(sub_group).ok_or_else(|| ChaseError::MissingAxiom(sub_group.to_string()))?;
    let sub_single = axiom.h0.ok_or_else(|| ChaseError::MissingAxiom(sub_group.to_string()))?;
    let sub_copies = 2;
    let split = twisted_restriction(sym_power, l_power);
    let per = split.h0();
    let quotient_h0 = per * EXCEPTIONAL_COMPONENTS;
    let sub = CohDims::new(sub_single * sub_copies, 0);
    Ok(ChaseResult {
        group: format!("{sub_group}*Omega1"),
        sub_group: sub_group.to_string(),
        sub_copies,
        sub_h0: sub.h0,
        quotient_split: split,
        quotient_h0_per_component: per,
        quotient_h0,
        bound: chase_h0_bound(sub, quotient_h0),
        axioms_used: vec![axiom.id.clone()],
    })
}
