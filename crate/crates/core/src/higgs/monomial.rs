//! Monomials `S^s W ⊗ (Λ²W)^c ⊗ L^l` in the rank-2 log cotangent bundle `W`
//! and the line bundle `L`, with `Λ²W = L³`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::tensor::{decompose_product, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BundleMonomial {
    pub s: u32,
    pub c: i64,
    pub l: i64,
}

impl BundleMonomial {
    pub const fn new(s: u32, c: i64, l: i64) -> Self {
        BundleMonomial { s, c, l }
    }

    pub const fn trivial() -> Self {
        BundleMonomial::new(0, 0, 0)
    }

    pub const fn w() -> Self {
        BundleMonomial::new(1, 0, 0)
    }

    pub const fn det_w() -> Self {
        BundleMonomial::new(0, 1, 0)
    }

    pub fn rank(&self) -> u64 {
        self.s as u64 + 1
    }

    /// Folds `Λ²W` into `L³`.
    pub fn normalize(&self) -> Self {
        BundleMonomial::new(self.s, 0, self.l + 3 * self.c)
    }

    pub fn is_normal(&self) -> bool {
        self.c == 0
    }

    /// Dual, using `(S^s W)^∨ = S^s W ⊗ (Λ²W)^{-s}`.
    pub fn dual(&self) -> Self {
        BundleMonomial::new(self.s, -self.c - self.s as i64, -self.l)
    }

    /// Irreducible pieces of `self ⊗ other`, with multiplicities.
    pub fn tensor(&self, other: &Self) -> BTreeMap<BundleMonomial, u64> {
        let expr = decompose_product(&Partition::row(self.s), &Partition::row(other.s), 2)
            .expect("rank-2 rows always decompose");
        let mut out = BTreeMap::new();
        for (part, &n) in &expr.terms {
            let p = part.padded(2);
            let m = BundleMonomial::new(p[0] - p[1], self.c + other.c + p[1] as i64, self.l + other.l);
            *out.entry(m).or_insert(0) += n as u64;
        }
        out
    }

    /// Unfolded display: `Λ²W` shown as `L2W`.
    pub fn expanded(&self) -> String {
        let mut parts = Vec::new();
        match self.s {
            0 => {}
            1 => parts.push("W".to_string()),
            s => parts.push(format!("S{s}W")),
        }
        match self.c {
            0 => {}
            1 => parts.push("L2W".to_string()),
            c => parts.push(format!("L2W^{c}")),
        }
        if self.l != 0 {
            parts.push(format!("L^{}", self.l));
        }
        if parts.is_empty() {
            "O".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Canonical display of the normalized monomial, e.g. `S2W*L^-1`.
impl fmt::Display for BundleMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.normalize().expanded())
    }
}

pub fn normalize_all(m: &BTreeMap<BundleMonomial, u64>) -> BTreeMap<BundleMonomial, u64> {
    let mut out = BTreeMap::new();
    for (k, &n) in m {
        *out.entry(k.normalize()).or_insert(0) += n;
    }
    out
}
