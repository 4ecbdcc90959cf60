//! Higgs bundles as graded monomial multisets plus labelled θ entries, backed
//! by an exact fiber model.

use serde::Serialize;

use crate::linalg::{is_zero_vec, QMat, QVec};

use super::fiber::{HiggsFiber, HwVector};
use super::{BundleMonomial, EntryLabel, HiggsError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedPiece {
    pub monomial: BundleMonomial,
    pub hodge: (i64, i64),
}

/// `θ` component from piece `src` to piece `tgt ⊗ W`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaEntry {
    pub src: usize,
    pub tgt: usize,
    pub label: EntryLabel,
}

#[derive(Clone, Debug)]
pub struct HiggsBundle {
    /// Local-system tag, e.g. `V1`, `S2V1`, `End0V1`.
    pub label: String,
    pub fiber: HiggsFiber,
}

impl HiggsBundle {
    pub fn uniformizing() -> Self {
        HiggsBundle { label: "V1".into(), fiber: HiggsFiber::uniformizing() }
    }

    pub fn sym_power(&self, n: usize) -> Result<Self, HiggsError> {
        match n {
            0 => Err(HiggsError::InvalidPower(0)),
            1 => Ok(self.clone()),
            n => Ok(HiggsBundle { label: format!("S{n}{}", self.label), fiber: self.fiber.sym_power(n) }),
        }
    }

    pub fn end0(&self) -> Self {
        HiggsBundle { label: format!("End0{}", self.label), fiber: self.fiber.end0() }
    }

    pub fn without_field(&self) -> Self {
        HiggsBundle { label: format!("{}/theta=0", self.label), fiber: self.fiber.without_field() }
    }

    pub fn rank(&self) -> usize {
        self.fiber.dim()
    }

    pub fn pieces(&self) -> Vec<GradedPiece> {
        self.fiber
            .highest_weight_vectors()
            .iter()
            .map(|h| GradedPiece { monomial: h.monomial(), hodge: h.hodge })
            .collect()
    }

    /// Total rank of each Hodge piece, by descending `p`.
    pub fn hodge_ranks(&self) -> Vec<((i64, i64), u64)> {
        let mut out: Vec<((i64, i64), u64)> = Vec::new();
        for p in self.pieces() {
            match out.iter_mut().find(|(h, _)| *h == p.hodge) {
                Some((_, r)) => *r += p.monomial.rank(),
                None => out.push((p.hodge, p.monomial.rank())),
            }
        }
        out
    }

    fn summand_spaces(&self) -> (Vec<HwVector>, Vec<Vec<QVec>>) {
        let hws = self.fiber.highest_weight_vectors();
        let spaces = hws
            .iter()
            .map(|h| {
                let mut vs = vec![h.vector.clone()];
                loop {
                    let next = self.fiber.lower.apply(vs.last().unwrap());
                    if is_zero_vec(&next) {
                        break;
                    }
                    vs.push(next);
                }
                vs
            })
            .collect();
        (hws, spaces)
    }

    /// Nonzero `θ` entries between irreducible pieces.
    pub fn theta_entries(&self) -> Vec<ThetaEntry> {
        let (_, spaces) = self.summand_spaces();
        let cols: Vec<QVec> = spaces.iter().flatten().cloned().collect();
        let p = QMat::from_columns(self.fiber.dim(), &cols);
        let mut owner = Vec::new();
        for (i, s) in spaces.iter().enumerate() {
            owner.extend(std::iter::repeat(i).take(s.len()));
        }
        let mut out = Vec::new();
        for (src, vs) in spaces.iter().enumerate() {
            let mut hit = vec![false; spaces.len()];
            for v in vs {
                for op in [&self.fiber.nx, &self.fiber.ny] {
                    let c = p.solve(&op.apply(v)).expect("summands span the fiber");
                    for (k, x) in c.iter().enumerate() {
                        if *x != crate::linalg::q(0) {
                            hit[owner[k]] = true;
                        }
                    }
                }
            }
            for (tgt, h) in hit.into_iter().enumerate() {
                if h {
                    out.push(ThetaEntry { src, tgt, label: EntryLabel::Canonical });
                }
            }
        }
        out
    }

    /// Rank of `θ` as a map from the `src` Hodge piece into the `tgt` piece ⊗ W.
    pub fn theta_block_rank(&self, src: (i64, i64), tgt: (i64, i64)) -> (usize, usize, usize) {
        let f = &self.fiber;
        let srcs: Vec<usize> = (0..f.dim()).filter(|&i| f.basis[i].hodge == src).collect();
        let tgts: Vec<usize> = (0..f.dim()).filter(|&i| f.basis[i].hodge == tgt).collect();
        let block = QMat::from_columns(
            2 * tgts.len(),
            &srcs
                .iter()
                .map(|&j| {
                    let mut col: QVec = tgts.iter().map(|&i| f.nx.get(i, j).clone()).collect();
                    col.extend(tgts.iter().map(|&i| f.ny.get(i, j).clone()));
                    col
                })
                .collect::<Vec<_>>(),
        );
        (srcs.len(), 2 * tgts.len(), block.rank())
    }

    pub fn theta_is_iso(&self, src: (i64, i64), tgt: (i64, i64)) -> bool {
        let (a, b, r) = self.theta_block_rank(src, tgt);
        a == b && r == a
    }
}
