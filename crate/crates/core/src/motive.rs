//! Cohomological realization for an abelian threefold: the exterior algebra
//! `H* = Λ*(H¹)`, `dim H¹ = 6`, with the Künneth projectors cut out by
//! `[n]*`, the cup-product pairing, and the action of `ω` from CM by `Z[ω]`.
//!
//! Only the realization is modeled. Of the projectors, the ones promoted to
//! absolute projectors are `π_i` for `i ∉ {4, 5, 6}`; that distinction lives
//! at the level of cycles and is not visible here.

use serde::Serialize;
use thiserror::Error;

use crate::linalg::{q, QMat, Q};
use crate::tensor::{decompose_lambda_k, trivial_summand_count, TensorError};

pub const G: usize = 3;
pub const H1_DIM: usize = 2 * G;
/// Top degree, `2g`.
pub const TOP: usize = 2 * G;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MotiveError {
    #[error("degree {0} outside 0..=6")]
    OutOfRange(usize),
    #[error("multiplier must be at least 2, got {0}")]
    InvalidMultiplier(i64),
    #[error(transparent)]
    Tensor(#[from] TensorError),
}

/// `k`-subsets of `0..6` in lexicographic order: the basis `e_S` of `Hᵏ`.
pub fn subsets(k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..H1_DIM {
            cur.push(i);
            go(i + 1, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, k, &mut Vec::new(), &mut out);
    out
}

/// `e_S ∧ e_T = sign · e_{S∪T}`, or `None` if they overlap.
pub fn wedge(s: &[usize], t: &[usize]) -> Option<(i64, Vec<usize>)> {
    if s.iter().any(|x| t.contains(x)) {
        return None;
    }
    let mut inversions = 0;
    for a in s {
        inversions += t.iter().filter(|b| *b < a).count();
    }
    let mut u: Vec<usize> = s.iter().chain(t).copied().collect();
    u.sort_unstable();
    Some((if inversions % 2 == 0 { 1 } else { -1 }, u))
}

pub fn component_dims() -> [usize; TOP + 1] {
    std::array::from_fn(subsets_len)
}

fn subsets_len(k: usize) -> usize {
    subsets(k).len()
}

/// Grading-preserving endomorphism of `H*`, one block per degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedEndo {
    pub blocks: Vec<QMat>,
}

impl GradedEndo {
    pub fn identity() -> Self {
        GradedEndo { blocks: (0..=TOP).map(|k| QMat::identity(subsets_len(k))).collect() }
    }

    pub fn zero() -> Self {
        GradedEndo { blocks: (0..=TOP).map(|k| QMat::zeros(subsets_len(k), subsets_len(k))).collect() }
    }

    pub fn scalar(c: &Q) -> Self {
        GradedEndo { blocks: (0..=TOP).map(|k| QMat::scalar(subsets_len(k), c)).collect() }
    }

    /// Identity on `Hᵏ`, zero elsewhere.
    pub fn degree_projection(k: usize) -> Self {
        let mut e = GradedEndo::zero();
        e.blocks[k] = QMat::identity(subsets_len(k));
        e
    }

    /// Pullback by a map acting on `H¹` by `m`: the degree-`k` block is the
    /// matrix of `k × k` minors.
    pub fn pullback(m: &QMat) -> Self {
        let blocks = (0..=TOP)
            .map(|k| {
                let basis = subsets(k);
                let mut b = QMat::zeros(basis.len(), basis.len());
                for (i, rows) in basis.iter().enumerate() {
                    for (j, cols) in basis.iter().enumerate() {
                        let v = if k == 0 { q(1) } else { m.select(rows, cols).determinant() };
                        b.set(i, j, v);
                    }
                }
                b
            })
            .collect();
        GradedEndo { blocks }
    }

    /// `[n]*`, multiplication by `nᵏ` on `Hᵏ`.
    pub fn mult_by(n: i64) -> Self {
        GradedEndo::pullback(&QMat::scalar(H1_DIM, &q(n)))
    }

    pub fn compose(&self, other: &Self) -> Self {
        GradedEndo { blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a * b).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        GradedEndo { blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        GradedEndo { blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: &Q) -> Self {
        GradedEndo { blocks: self.blocks.iter().map(|b| b.scale(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(QMat::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(QMat::rank).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectorSet {
    pub projectors: Vec<GradedEndo>,
}

impl ProjectorSet {
    pub fn ranks(&self) -> Vec<usize> {
        self.projectors.iter().map(GradedEndo::rank).collect()
    }

    pub fn by_degree() -> Self {
        ProjectorSet { projectors: (0..=TOP).map(GradedEndo::degree_projection).collect() }
    }
}

/// `Πᵢ = ∏_{j≠i} ([n]* − nʲ) / (nⁱ − nʲ)`.
pub fn kunneth_projectors(n: i64) -> Result<ProjectorSet, MotiveError> {
    if n < 2 {
        return Err(MotiveError::InvalidMultiplier(n));
    }
    let nstar = GradedEndo::mult_by(n);
    let pow = |k: usize| q(n.pow(k as u32));
    let projectors = (0..=TOP)
        .map(|i| {
            let mut p = GradedEndo::identity();
            for j in (0..=TOP).filter(|&j| j != i) {
                let factor = nstar.sub(&GradedEndo::scalar(&pow(j))).scale(&(q(1) / (pow(i) - pow(j))));
                p = p.compose(&factor);
            }
            p
        })
        .collect();
    Ok(ProjectorSet { projectors })
}

/// Per-axiom outcome of [`verify_projector_axioms`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProjectorCheck {
    pub idempotent: bool,
    pub orthogonal: bool,
    pub sum_is_identity: bool,
    pub eigen: bool,
}

impl ProjectorCheck {
    pub fn all(&self) -> bool {
        self.idempotent && self.orthogonal && self.sum_is_identity && self.eigen
    }
}

pub const EIGEN_MULTIPLIERS: [i64; 3] = [-1, 2, 3];

pub fn check_projector_axioms(p: &ProjectorSet) -> ProjectorCheck {
    let ps = &p.projectors;
    let idempotent = ps.iter().all(|x| x.compose(x) == *x);
    let orthogonal = (0..ps.len())
        .all(|i| (0..ps.len()).filter(|&j| j != i).all(|j| ps[i].compose(&ps[j]).is_zero()));
    let sum = ps.iter().fold(GradedEndo::zero(), |acc, x| acc.add(x));
    let sum_is_identity = sum == GradedEndo::identity();
    let eigen = EIGEN_MULTIPLIERS.iter().all(|&m| {
        let mstar = GradedEndo::mult_by(m);
        ps.iter().enumerate().all(|(i, x)| mstar.compose(x) == x.scale(&q(m.pow(i as u32))))
    });
    ProjectorCheck { idempotent, orthogonal, sum_is_identity, eigen }
}

pub fn verify_projector_axioms(p: &ProjectorSet) -> bool {
    p.projectors.len() == TOP + 1 && check_projector_axioms(p).all()
}

/// Matrix of the cup product `Hⁱ × H^{6−i} → H⁶`.
pub fn pairing_matrix(i: usize) -> Result<QMat, MotiveError> {
    if i > TOP {
        return Err(MotiveError::OutOfRange(i));
    }
    let rows = subsets(i);
    let cols = subsets(TOP - i);
    let mut m = QMat::zeros(rows.len(), cols.len());
    for (a, s) in rows.iter().enumerate() {
        for (b, t) in cols.iter().enumerate() {
            if let Some((sign, _)) = wedge(s, t) {
                m.set(a, b, q(sign));
            }
        }
    }
    Ok(m)
}

pub fn poincare_pairing_rank(i: usize) -> Result<usize, MotiveError> {
    Ok(pairing_matrix(i)?.rank())
}

/// `ω` on `H¹`: three copies of the order-3 rotation `[[0, −1], [1, −1]]`.
pub fn omega_h1() -> QMat {
    let mut m = QMat::zeros(H1_DIM, H1_DIM);
    for b in 0..G {
        let (x, y) = (2 * b, 2 * b + 1);
        m.set(x, y, q(-1));
        m.set(y, x, q(1));
        m.set(y, y, q(-1));
    }
    m
}

/// `ω`-eigenspace dimensions on `Hᵏ`, in the order `(1, ω, ω̄)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CmSplitting {
    pub degree: usize,
    pub eigen_dims: [u64; 3],
    /// Same count read off the `Λᵏ(V1 ⊕ V2)` decomposition.
    pub from_tags: [u64; 3],
    pub tags: String,
}

impl CmSplitting {
    pub fn agrees(&self) -> bool {
        self.eigen_dims == self.from_tags
    }
}

pub fn cm_splitting() -> Result<Vec<CmSplitting>, MotiveError> {
    let w = GradedEndo::pullback(&omega_h1());
    let mut out = Vec::new();
    for (k, t) in w.blocks.iter().enumerate() {
        let n = t.rows();
        let id = QMat::identity(n);
        let fixed = n - (t - &id).rank();
        let cyclotomic = n - (&(&(t * t) + t) + &id).rank();
        // T is rational, so the ω and ω̄ eigenspaces have equal dimension.
        let half = (cyclotomic / 2) as u64;
        let expr = decompose_lambda_k(k as u32)?;
        out.push(CmSplitting {
            degree: k,
            eigen_dims: [fixed as u64, half, half],
            from_tags: expr.omega_dims(),
            tags: expr.to_string(),
        });
    }
    Ok(out)
}

/// Dimension of the monodromy invariants in `H^k`.
pub fn invariant_dims(k: usize) -> Result<u64, MotiveError> {
    if k > TOP {
        return Err(MotiveError::OutOfRange(k));
    }
    Ok(trivial_summand_count(k as u32)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dims_are_binomial() {
        assert_eq!(component_dims(), [1, 6, 15, 20, 15, 6, 1]);
    }

    #[test]
    fn projectors_from_two() {
        let p = kunneth_projectors(2).unwrap();
        assert!(verify_projector_axioms(&p));
        assert_eq!(p.ranks(), vec![1, 6, 15, 20, 15, 6, 1]);
        assert_eq!(p, kunneth_projectors(3).unwrap());
        assert_eq!(p, ProjectorSet::by_degree());
        assert_eq!(kunneth_projectors(1).unwrap_err(), MotiveError::InvalidMultiplier(1));
    }

    #[test]
    fn perturbed_fails() {
        let mut p = kunneth_projectors(2).unwrap();
        p.projectors[1].blocks[1].add_at(0, 1, &q(1));
        assert!(!verify_projector_axioms(&p));
    }

    #[test]
    fn pairing_ranks() {
        assert_eq!(poincare_pairing_rank(0).unwrap(), 1);
        assert_eq!(poincare_pairing_rank(3).unwrap(), 20);
        assert_eq!(poincare_pairing_rank(6).unwrap(), 1);
        assert!(poincare_pairing_rank(7).is_err());
    }

    #[test]
    fn graded_commutative() {
        for s in subsets(2) {
            for t in subsets(3) {
                match (wedge(&s, &t), wedge(&t, &s)) {
                    (Some((a, u)), Some((b, v))) => {
                        assert_eq!(u, v);
                        assert_eq!(a, b * if (s.len() * t.len()) % 2 == 0 { 1 } else { -1 });
                    }
                    (None, None) => {}
                    _ => panic!("asymmetric overlap"),
                }
            }
        }
    }

    #[test]
    fn cm_matches_tags() {
        let cm = cm_splitting().unwrap();
        assert_eq!(cm[1].eigen_dims, [0, 3, 3]);
        assert_eq!(cm[2].eigen_dims, [9, 3, 3]);
        assert_eq!(cm[0].eigen_dims, [1, 0, 0]);
        assert!(cm.iter().all(CmSplitting::agrees));
    }

    #[test]
    fn omega_commutes_with_mult() {
        let w = GradedEndo::pullback(&omega_h1());
        let two = GradedEndo::mult_by(2);
        assert_eq!(w.compose(&two), two.compose(&w));
    }

    #[test]
    fn invariants() {
        assert_eq!(invariant_dims(2).unwrap(), 1);
        assert_eq!(invariant_dims(4).unwrap(), 1);
        assert_eq!(invariant_dims(1).unwrap(), 0);
    }
}
