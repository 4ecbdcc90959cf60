//! Monodromy weight filtration of a nilpotent operator from its Jordan strings.

use std::collections::BTreeMap;

use crate::linalg::{unit_vec, QMat, QVec, Subspace};

use super::model::vector_name;
use super::L2Error;

/// `Gr_k` bases for a chosen splitting; `W_k` is the span of all `Gr_j`, `j ≤ k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightFiltration {
    pub dim: usize,
    pub graded: BTreeMap<i64, Vec<QVec>>,
}

impl WeightFiltration {
    pub fn max_weight(&self) -> i64 {
        self.graded.keys().copied().map(i64::abs).max().unwrap_or(0)
    }

    pub fn w(&self, k: i64) -> Subspace {
        let vs: Vec<QVec> = self.graded.range(..=k).flat_map(|(_, v)| v.iter().cloned()).collect();
        Subspace::span(self.dim, &vs)
    }

    pub fn gr(&self, k: i64) -> &[QVec] {
        self.graded.get(&k).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn gr_dim(&self, k: i64) -> usize {
        self.gr(k).len()
    }

    /// `Gr_k` bases in reduced row echelon form, rendered with basis names,
    /// highest weight first.
    pub fn display(&self, names: &[String]) -> Vec<(i64, Vec<String>)> {
        self.graded
            .iter()
            .rev()
            .map(|(&k, vs)| {
                let sub = Subspace::span(self.dim, vs);
                (k, sub.basis().iter().map(|v| vector_name(names, v)).collect())
            })
            .collect()
    }
}

fn kernel_of_power(n: &QMat, k: u32) -> Subspace {
    let d = n.rows();
    if k == 0 {
        return Subspace::zero(d);
    }
    Subspace::span(d, &n.pow(k).nullspace())
}

/// Jordan strings: for each length `ℓ`, tops chosen from `K_ℓ` outside
/// `K_{ℓ−1} + N·K_{ℓ+1}`, standard basis vectors tried first. A string of
/// length `ℓ` contributes weights `ℓ−1, ℓ−3, …, −(ℓ−1)`.
pub fn weight_filtration(n: &QMat) -> Result<WeightFiltration, L2Error> {
    let d = n.rows();
    if !n.pow(d as u32).is_zero() {
        return Err(L2Error::NotNilpotent);
    }
    let mut index = 0u32;
    while !n.pow(index).is_zero() {
        index += 1;
    }
    let mut graded: BTreeMap<i64, Vec<QVec>> = BTreeMap::new();
    for len in (1..=index).rev() {
        let k = kernel_of_power(n, len);
        let mut taken = kernel_of_power(n, len - 1).sum(&kernel_of_power(n, len + 1).image(n));
        let candidates: Vec<QVec> = (0..d).map(|i| unit_vec(d, i)).chain(k.basis().iter().cloned()).collect();
        for u in candidates {
            if !k.contains(&u) || taken.contains(&u) {
                continue;
            }
            taken = taken.sum(&Subspace::span(d, &[u.clone()]));
            let mut v = u;
            for j in 0..len {
                let w = len as i64 - 1 - 2 * j as i64;
                graded.entry(w).or_default().push(v.clone());
                v = n.apply(&v);
            }
        }
    }
    Ok(WeightFiltration { dim: d, graded })
}

/// Checks `N·W_k ⊆ W_{k−2}`, `N^k: Gr_k ≅ Gr_{−k}` for `k > 0`, and that the
/// graded pieces span the fiber.
pub fn verify_weight_filtration(n: &QMat, wf: &WeightFiltration) -> bool {
    let d = wf.dim;
    let all: Vec<QVec> = wf.graded.values().flatten().cloned().collect();
    if all.len() != d || Subspace::span(d, &all).dim() != d {
        return false;
    }
    let m = wf.max_weight();
    for k in -m..=m {
        if !wf.w(k).image(n).is_subspace_of(&wf.w(k - 2)) {
            return false;
        }
    }
    for k in 1..=m {
        let nk = n.pow(k as u32);
        let lower = wf.w(-k - 1);
        let imgs: Vec<QVec> = wf.gr(k).iter().map(|v| nk.apply(v)).collect();
        let span = lower.sum(&Subspace::span(d, &imgs));
        if !span.is_subspace_of(&wf.w(-k)) {
            return false;
        }
        if span.dim() - lower.dim() != wf.gr_dim(k) || wf.gr_dim(k) != wf.gr_dim(-k) {
            return false;
        }
    }
    true
}
