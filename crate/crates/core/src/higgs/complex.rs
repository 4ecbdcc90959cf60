//! The three-term complex `E → E⊗W → E⊗Λ²W` and its reduction.
//!
//! Entry labels come from the fiber model: each object is split into
//! irreducible `GL(W) × G_m` summands by highest-weight vectors, and within
//! every isotypic strand the multiplicity spaces get adapted bases, so that
//! each entry is either an isomorphism or zero. `reduce` then works on labels
//! alone.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::linalg::{is_zero_vec, q, unit_vec, QMat, QVec};

use super::fiber::{highest_weight_vectors, HwVector};
use super::{BundleMonomial, GradedPiece, HiggsBundle, HiggsError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EntryLabel {
    Zero,
    Iso,
    Canonical,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summand {
    pub monomial: BundleMonomial,
    /// Hodge type of the `E` factor.
    pub hodge: (i64, i64),
}

impl Summand {
    pub fn name(&self) -> String {
        self.monomial.to_string()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HComplex {
    pub label: String,
    pub source: Vec<GradedPiece>,
    pub objects: [Vec<Summand>; 3],
    /// Nonzero entries of `d0`, `d1`, keyed by (source index, target index).
    pub d: [BTreeMap<(usize, usize), EntryLabel>; 2],
}

/// `Λⁱ W` with basis `{1}`, `{x, y}`, `{x∧y}`.
struct Exterior {
    weights: [Vec<(i64, i64)>; 3],
    raise: [QMat; 3],
    wedge_x: [QMat; 2],
    wedge_y: [QMat; 2],
}

fn exterior() -> Exterior {
    Exterior {
        weights: [vec![(0, 0)], vec![(1, 0), (0, 1)], vec![(1, 1)]],
        raise: [QMat::zeros(1, 1), QMat::from_i64(&[vec![0, 1], vec![0, 0]]), QMat::zeros(1, 1)],
        wedge_x: [QMat::from_i64(&[vec![1], vec![0]]), QMat::from_i64(&[vec![0, 1]])],
        wedge_y: [QMat::from_i64(&[vec![0], vec![1]]), QMat::from_i64(&[vec![-1, 0]])],
    }
}

type StrandKey = ((i64, i64), i64, i64, i64);

pub fn build_complex(h: &HiggsBundle) -> Result<HComplex, HiggsError> {
    let f = &h.fiber;
    if !f.theta_squared_zero() {
        return Err(HiggsError::SquareNotZero);
    }
    let ext = exterior();
    let n = f.dim();
    let mut hws: Vec<Vec<HwVector>> = Vec::new();
    for i in 0..3 {
        let mut keys = Vec::new();
        for b in &f.basis {
            for w in &ext.weights[i] {
                keys.push(((b.weight.0 + w.0, b.weight.1 + w.1), b.lexp, b.hodge));
            }
        }
        let li = QMat::identity(ext.weights[i].len());
        let raise = &f.raise.kron(&li) + &QMat::identity(n).kron(&ext.raise[i]);
        hws.push(highest_weight_vectors(&keys, &raise));
    }
    let d: Vec<QMat> =
        (0..2).map(|i| &f.nx.kron(&ext.wedge_x[i]) + &f.ny.kron(&ext.wedge_y[i])).collect();
    if !(&d[1] * &d[0]).is_zero() {
        return Err(HiggsError::SquareNotZero);
    }

    // Group highest-weight vectors into strands: same type, same p + i.
    let mut strands: BTreeMap<StrandKey, [Vec<QVec>; 3]> = BTreeMap::new();
    for (i, list) in hws.iter().enumerate() {
        for hw in list {
            let key = (hw.weight, hw.lexp, hw.hodge.0 + i as i64, hw.hodge.1 - i as i64);
            strands.entry(key).or_default()[i].push(hw.vector.clone());
        }
    }

    let mut adapted: [Vec<(Summand, QVec)>; 3] = Default::default();
    let mut entries: [BTreeMap<(usize, usize), EntryLabel>; 2] = Default::default();
    for (key, spaces) in &strands {
        let (weight, lexp, p_tot, q_tot) = *key;
        let mono = BundleMonomial::new((weight.0 - weight.1) as u32, weight.1, lexp);
        let dmats: Vec<QMat> = (0..2).map(|i| restrict_map(&d[i], &spaces[i], &spaces[i + 1])).collect();
        let bases = adapted_bases(&dmats, [spaces[0].len(), spaces[1].len(), spaces[2].len()]);
        let mut first = [0usize; 3];
        for i in 0..3 {
            first[i] = adapted[i].len();
            for c in &bases[i] {
                let v = combine(&spaces[i], c);
                let hodge = (p_tot - i as i64, q_tot + i as i64);
                adapted[i].push((Summand { monomial: mono, hodge }, v));
            }
        }
        for i in 0..2 {
            let tgt: Vec<QVec> = bases[i + 1].clone();
            let t = QMat::from_columns(spaces[i + 1].len(), &tgt);
            for (a, c) in bases[i].iter().enumerate() {
                let img = dmats[i].apply(c);
                if is_zero_vec(&img) {
                    continue;
                }
                let coords = t.solve(&img).expect("adapted basis spans the strand");
                for (b, x) in coords.iter().enumerate() {
                    if *x != q(0) {
                        entries[i].insert((first[i] + a, first[i + 1] + b), EntryLabel::Iso);
                    }
                }
            }
        }
    }

    // Order each object by Hodge p descending, then by type.
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut objects: [Vec<Summand>; 3] = Default::default();
    for i in 0..3 {
        let mut idx: Vec<usize> = (0..adapted[i].len()).collect();
        idx.sort_by_key(|&k| {
            let s = &adapted[i][k].0;
            (std::cmp::Reverse(s.hodge.0), std::cmp::Reverse(s.monomial.s), std::cmp::Reverse(s.monomial.normalize().l), k)
        });
        let mut inv = vec![0; idx.len()];
        for (new, &old) in idx.iter().enumerate() {
            inv[old] = new;
        }
        objects[i] = idx.iter().map(|&k| adapted[i][k].0.clone()).collect();
        perms.push(inv);
    }
    let d_labels = [0, 1].map(|i| {
        entries[i].iter().map(|(&(a, b), &l)| ((perms[i][a], perms[i + 1][b]), l)).collect::<BTreeMap<_, _>>()
    });
    let c = HComplex { label: h.label.clone(), source: h.pieces(), objects, d: d_labels };
    if !c.label_square_zero() {
        return Err(HiggsError::SquareNotZero);
    }
    Ok(c)
}

/// Matrix of `d` from span(`src`) to span(`tgt`) in those bases.
fn restrict_map(d: &QMat, src: &[QVec], tgt: &[QVec]) -> QMat {
    if tgt.is_empty() {
        return QMat::zeros(0, src.len());
    }
    let t = QMat::from_columns(tgt[0].len(), tgt);
    let cols: Vec<QVec> = src
        .iter()
        .map(|v| t.solve(&d.apply(v)).expect("differential is equivariant"))
        .collect();
    QMat::from_columns(tgt.len(), &cols)
}

fn combine(basis: &[QVec], coords: &[crate::linalg::Q]) -> QVec {
    let mut out = vec![q(0); basis[0].len()];
    for (v, c) in basis.iter().zip(coords) {
        for (o, x) in out.iter_mut().zip(v) {
            *o += x * c;
        }
    }
    out
}

fn in_span(vs: &[QVec], v: &[crate::linalg::Q], dim: usize) -> bool {
    if vs.is_empty() {
        return is_zero_vec(v);
    }
    QMat::from_columns(dim, vs).solve(v).is_some()
}

/// Bases of the three multiplicity spaces in which `d0`, `d1` are partial
/// identity matrices between matched pairs.
fn adapted_bases(d: &[QMat], dims: [usize; 3]) -> [Vec<QVec>; 3] {
    let [a, b, c] = dims;
    // Degree 0: pivots of d0, then kernel.
    let mut basis0: Vec<QVec> = Vec::new();
    let mut images0: Vec<QVec> = Vec::new();
    if a > 0 {
        let (_, pivots) = d[0].rref();
        for &p in &pivots {
            let e = unit_vec(a, p);
            images0.push(d[0].apply(&e));
            basis0.push(e);
        }
        basis0.extend(d[0].nullspace());
    }
    // Degree 1: images, homology, then a complement mapping injectively.
    let mut basis1 = images0.clone();
    let kernel1: Vec<QVec> = if b > 0 { d[1].nullspace() } else { Vec::new() };
    for k in kernel1 {
        if !in_span(&basis1, &k, b) {
            basis1.push(k);
        }
    }
    let mut images1 = Vec::new();
    for j in 0..b {
        let e = unit_vec(b, j);
        if !in_span(&basis1, &e, b) {
            images1.push(d[1].apply(&e));
            basis1.push(e);
        }
    }
    let mut basis2 = images1;
    for j in 0..c {
        let e = unit_vec(c, j);
        if !in_span(&basis2, &e, c) {
            basis2.push(e);
        }
    }
    [basis0, basis1, basis2]
}

impl HComplex {
    pub fn summand_counts(&self) -> [usize; 3] {
        [0, 1, 2].map(|i| self.objects[i].len())
    }

    /// Formal ranks of the three objects.
    pub fn ranks(&self) -> [u64; 3] {
        [0, 1, 2].map(|i| self.objects[i].iter().map(|s| s.monomial.rank()).sum())
    }

    pub fn euler(&self) -> i64 {
        let r = self.ranks();
        r[0] as i64 - r[1] as i64 + r[2] as i64
    }

    pub fn is_reduced(&self) -> bool {
        self.d.iter().all(|m| m.values().all(|&l| l == EntryLabel::Zero))
    }

    pub fn entry(&self, degree: usize, src: usize, tgt: usize) -> EntryLabel {
        self.d[degree].get(&(src, tgt)).copied().unwrap_or(EntryLabel::Zero)
    }

    /// Normalized monomial strings per degree, in object order.
    pub fn monomial_lists(&self) -> [Vec<String>; 3] {
        [0, 1, 2].map(|i| self.objects[i].iter().map(Summand::name).collect())
    }

    /// Unfolded monomial strings per degree (`Λ²W` kept as `L2W`).
    pub fn expanded_lists(&self) -> [Vec<String>; 3] {
        [0, 1, 2].map(|i| self.objects[i].iter().map(|s| s.monomial.expanded()).collect())
    }

    pub fn sorted_multiset(&self) -> [Vec<String>; 3] {
        let mut m = self.monomial_lists();
        for l in m.iter_mut() {
            l.sort();
        }
        m
    }

    /// No path `a → b → c` with both entries nonzero.
    pub fn label_square_zero(&self) -> bool {
        for (&(_, b), &l0) in &self.d[0] {
            if l0 == EntryLabel::Zero {
                continue;
            }
            if self.d[1].iter().any(|(&(b2, _), &l1)| b2 == b && l1 != EntryLabel::Zero) {
                return false;
            }
        }
        true
    }

    /// Whether contracting `src → tgt` in `degree` has only label-zero corrections.
    pub fn contraction_is_legal(&self, degree: usize, src: usize, tgt: usize) -> bool {
        let m = &self.d[degree];
        let into_tgt = m.iter().any(|(&(a, b), &l)| b == tgt && a != src && l != EntryLabel::Zero);
        let from_src = m.iter().any(|(&(a, b), &l)| a == src && b != tgt && l != EntryLabel::Zero);
        !(into_tgt && from_src)
    }

    fn iso_entries(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for deg in 0..2 {
            for (&(a, b), &l) in &self.d[deg] {
                if l == EntryLabel::Iso {
                    out.push((deg, a, b));
                }
            }
        }
        out
    }

    /// Removes `src` from degree `degree` and `tgt` from `degree + 1`.
    pub fn contract(&self, degree: usize, src: usize, tgt: usize) -> Result<HComplex, HiggsError> {
        if !self.contraction_is_legal(degree, src, tgt) {
            return Err(HiggsError::NonzeroCorrection {
                degree,
                src: self.objects[degree][src].name(),
                tgt: self.objects[degree + 1][tgt].name(),
            });
        }
        let mut removed = [None, None, None];
        removed[degree] = Some(src);
        removed[degree + 1] = Some(tgt);
        let remap = |i: usize, k: usize| -> Option<usize> {
            match removed[i] {
                Some(r) if r == k => None,
                Some(r) if k > r => Some(k - 1),
                _ => Some(k),
            }
        };
        let mut out = self.clone();
        for i in 0..3 {
            if let Some(r) = removed[i] {
                out.objects[i].remove(r);
            }
        }
        for deg in 0..2 {
            out.d[deg] = self.d[deg]
                .iter()
                .filter_map(|(&(a, b), &l)| Some(((remap(deg, a)?, remap(deg + 1, b)?), l)))
                .collect();
        }
        Ok(out)
    }

    fn residual_error(&self) -> Option<HiggsError> {
        for deg in 0..2 {
            if let Some((&(a, b), _)) = self.d[deg].iter().find(|(_, &l)| l != EntryLabel::Zero) {
                return Some(HiggsError::ResidualDifferential {
                    degree: deg,
                    src: self.objects[deg][a].name(),
                    tgt: self.objects[deg + 1][b].name(),
                });
            }
        }
        None
    }
}

/// Contracts iso entries in order of (degree, source, target) until none
/// remain.
pub fn reduce(c: &HComplex) -> Result<HComplex, HiggsError> {
    let mut cur = c.clone();
    loop {
        let isos = cur.iso_entries();
        if isos.is_empty() {
            break;
        }
        match isos.iter().find(|&&(d, a, b)| cur.contraction_is_legal(d, a, b)) {
            Some(&(d, a, b)) => cur = cur.contract(d, a, b)?,
            None => {
                let (d, a, b) = isos[0];
                return cur.contract(d, a, b);
            }
        }
    }
    match cur.residual_error() {
        Some(e) => Err(e),
        None => Ok(cur),
    }
}

/// Surviving monomial multisets over every legal contraction order.
pub fn reduce_all_orders(c: &HComplex) -> Result<BTreeSet<[Vec<String>; 3]>, HiggsError> {
    let mut out = BTreeSet::new();
    explore(c, &mut out)?;
    Ok(out)
}

fn explore(c: &HComplex, out: &mut BTreeSet<[Vec<String>; 3]>) -> Result<(), HiggsError> {
    let isos = c.iso_entries();
    if isos.is_empty() {
        if let Some(e) = c.residual_error() {
            return Err(e);
        }
        out.insert(c.sorted_multiset());
        return Ok(());
    }
    let legal: Vec<_> = isos.iter().filter(|&&(d, a, b)| c.contraction_is_legal(d, a, b)).collect();
    if legal.is_empty() {
        let (d, a, b) = isos[0];
        return c.contract(d, a, b).map(|_| ());
    }
    for &&(d, a, b) in &legal {
        explore(&c.contract(d, a, b)?, out)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e() -> HiggsBundle {
        HiggsBundle::uniformizing()
    }

    #[test]
    fn e_complex_objects() {
        let c = build_complex(&e()).unwrap();
        assert_eq!(c.monomial_lists()[0], vec!["W*L^-1", "L^-1"]);
        let mut d1 = c.monomial_lists()[1].clone();
        d1.sort();
        assert_eq!(d1, vec!["L^2", "S2W*L^-1", "W*L^-1"]);
        assert_eq!(c.monomial_lists()[2], vec!["W*L^2", "L^2"]);
        assert_eq!(c.ranks(), [3, 6, 3]);
        assert_eq!(c.d[0].len(), 1);
        assert_eq!(c.d[1].len(), 1);
    }

    #[test]
    fn e_iso_entry_matches_monomials() {
        let c = build_complex(&e()).unwrap();
        let (&(a, b), &l) = c.d[0].iter().next().unwrap();
        assert_eq!(l, EntryLabel::Iso);
        assert_eq!(c.objects[0][a].name(), "W*L^-1");
        assert_eq!(c.objects[0][a].hodge, (1, 0));
        assert_eq!(c.objects[1][b].name(), "W*L^-1");
        assert_eq!(c.objects[1][b].hodge, (0, 1));
    }

    #[test]
    fn e_reduces() {
        let r = reduce(&build_complex(&e()).unwrap()).unwrap();
        assert!(r.is_reduced());
        assert_eq!(r.monomial_lists(), [vec!["L^-1"], vec!["S2W*L^-1"], vec!["W*L^2"]].map(|v| v.into_iter().map(String::from).collect::<Vec<_>>()));
        assert_eq!(r.expanded_lists()[2], vec!["W*L2W*L^-1"]);
    }

    fn lists(v: [&[&str]; 3]) -> [Vec<String>; 3] {
        v.map(|l| l.iter().map(|s| s.to_string()).collect())
    }

    #[test]
    fn sym_square_reduces() {
        let c = build_complex(&e().sym_power(2).unwrap()).unwrap();
        assert_eq!(c.ranks(), [6, 12, 6]);
        let r = reduce(&c).unwrap();
        assert_eq!(r.monomial_lists(), lists([&["L^-2"], &["S3W*L^-2"], &["S2W*L^1"]]));
        assert_eq!(r.expanded_lists()[2], vec!["S2W*L2W*L^-2"]);
        assert_eq!(reduce_all_orders(&c).unwrap().len(), 1);
    }

    #[test]
    fn end0_has_repeated_w_and_reduces() {
        let c = build_complex(&e().end0()).unwrap();
        assert_eq!(c.monomial_lists()[1].iter().filter(|m| *m == "W").count(), 2);
        let r = reduce(&c).unwrap();
        assert_eq!(r.monomial_lists(), lists([&["W*L^-3"], &["S3W*L^-3"], &["W*L^3"]]));
        assert_eq!(reduce_all_orders(&c).unwrap().len(), 1);
    }

    #[test]
    fn zero_field_has_no_entries() {
        let c = build_complex(&e().without_field()).unwrap();
        assert!(c.is_reduced());
        assert_eq!(reduce(&c).unwrap(), c);
    }

    #[test]
    fn forced_correction_is_rejected() {
        let mut c = build_complex(&e()).unwrap();
        // a second source into the same target and a second target from the same source
        c.objects[0].push(c.objects[0][0].clone());
        c.objects[1].push(c.objects[1][0].clone());
        let (&(a, b), _) = c.d[0].iter().next().unwrap();
        c.d[0].insert((2, b), EntryLabel::Iso);
        c.d[0].insert((a, 3), EntryLabel::Iso);
        c.d[1].clear();
        assert!(!c.contraction_is_legal(0, a, b));
    }
}
