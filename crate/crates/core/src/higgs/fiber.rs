//! Exact model of a Higgs bundle on one fiber.
//!
//! A fiber is a finite-dimensional representation of `GL(W) × G_m(L)` with a
//! Hodge grading. Basis vectors are weight vectors; `raise`/`lower` are the
//! `gl(2)` operators `y ↦ x` and `x ↦ y`, and `θ = nx ⊗ x + ny ⊗ y`.

use std::collections::BTreeMap;

use crate::linalg::{is_zero_vec, q, unit_vec, QMat, QVec, Q};

use super::BundleMonomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberVector {
    pub name: String,
    /// `GL(2)` weight `(a, b)`: the `x`-degree and `y`-degree.
    pub weight: (i64, i64),
    pub lexp: i64,
    pub hodge: (i64, i64),
}

#[derive(Clone, Debug)]
pub struct HiggsFiber {
    pub basis: Vec<FiberVector>,
    pub nx: QMat,
    pub ny: QMat,
    pub raise: QMat,
    pub lower: QMat,
}

/// Highest-weight vector of one irreducible summand.
#[derive(Clone, Debug)]
pub struct HwVector {
    pub weight: (i64, i64),
    pub lexp: i64,
    pub hodge: (i64, i64),
    pub vector: QVec,
}

impl HwVector {
    /// `S^{a-b}W ⊗ (Λ²W)^b ⊗ L^lexp`.
    pub fn monomial(&self) -> BundleMonomial {
        let (a, b) = self.weight;
        BundleMonomial::new((a - b) as u32, b, self.lexp)
    }
}

fn fv(name: &str, weight: (i64, i64), lexp: i64, hodge: (i64, i64)) -> FiberVector {
    FiberVector { name: name.to_string(), weight, lexp, hodge }
}

impl HiggsFiber {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `(W ⊗ L⁻¹) ⊕ L⁻¹` with basis `wx, wy, u`; θ sends `wx ↦ u⊗x`, `wy ↦ u⊗y`.
    pub fn uniformizing() -> Self {
        let basis = vec![
            fv("wx", (1, 0), -1, (1, 0)),
            fv("wy", (0, 1), -1, (1, 0)),
            fv("u", (0, 0), -1, (0, 1)),
        ];
        let nx = QMat::from_i64(&[vec![0, 0, 0], vec![0, 0, 0], vec![1, 0, 0]]);
        let ny = QMat::from_i64(&[vec![0, 0, 0], vec![0, 0, 0], vec![0, 1, 0]]);
        let raise = QMat::from_i64(&[vec![0, 1, 0], vec![0, 0, 0], vec![0, 0, 0]]);
        let lower = QMat::from_i64(&[vec![0, 0, 0], vec![1, 0, 0], vec![0, 0, 0]]);
        HiggsFiber { basis, nx, ny, raise, lower }
    }

    /// Same graded bundle with `θ = 0`.
    pub fn without_field(&self) -> Self {
        let n = self.dim();
        HiggsFiber { nx: QMat::zeros(n, n), ny: QMat::zeros(n, n), ..self.clone() }
    }

    fn ops(&self) -> [&QMat; 4] {
        [&self.nx, &self.ny, &self.raise, &self.lower]
    }

    fn from_ops(basis: Vec<FiberVector>, ops: Vec<QMat>) -> Self {
        let mut it = ops.into_iter();
        HiggsFiber {
            basis,
            nx: it.next().unwrap(),
            ny: it.next().unwrap(),
            raise: it.next().unwrap(),
            lower: it.next().unwrap(),
        }
    }

    /// `Sⁿ` of the fiber, operators acting as derivations.
    pub fn sym_power(&self, n: usize) -> Self {
        let d = self.dim();
        let mut monos: Vec<Vec<usize>> = Vec::new();
        multisets(d, n, 0, &mut Vec::new(), &mut monos);
        let index: BTreeMap<Vec<usize>, usize> = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let basis = monos
            .iter()
            .map(|m| {
                let mut v = fv("", (0, 0), 0, (0, 0));
                let names: Vec<&str> = m.iter().map(|&i| self.basis[i].name.as_str()).collect();
                v.name = names.join("·");
                for &i in m {
                    let b = &self.basis[i];
                    v.weight = (v.weight.0 + b.weight.0, v.weight.1 + b.weight.1);
                    v.lexp += b.lexp;
                    v.hodge = (v.hodge.0 + b.hodge.0, v.hodge.1 + b.hodge.1);
                }
                v
            })
            .collect();
        let ops = self
            .ops()
            .iter()
            .map(|op| {
                let mut out = QMat::zeros(monos.len(), monos.len());
                for (col, m) in monos.iter().enumerate() {
                    for k in 0..m.len() {
                        for j in 0..d {
                            let c = op.get(j, m[k]);
                            if c == &q(0) {
                                continue;
                            }
                            let mut m2 = m.clone();
                            m2[k] = j;
                            m2.sort_unstable();
                            out.add_at(index[&m2], col, c);
                        }
                    }
                }
                out
            })
            .collect();
        HiggsFiber::from_ops(basis, ops)
    }

    pub fn dual(&self) -> Self {
        let basis = self
            .basis
            .iter()
            .map(|b| FiberVector {
                name: format!("{}*", b.name),
                weight: (-b.weight.0, -b.weight.1),
                lexp: -b.lexp,
                hodge: (-b.hodge.0, -b.hodge.1),
            })
            .collect();
        let ops = self.ops().iter().map(|op| -&op.transpose()).collect();
        HiggsFiber::from_ops(basis, ops)
    }

    /// Tensor product; basis index `i * other.dim() + j`.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut basis = Vec::new();
        for a in &self.basis {
            for b in &other.basis {
                basis.push(FiberVector {
                    name: format!("{}⊗{}", a.name, b.name),
                    weight: (a.weight.0 + b.weight.0, a.weight.1 + b.weight.1),
                    lexp: a.lexp + b.lexp,
                    hodge: (a.hodge.0 + b.hodge.0, a.hodge.1 + b.hodge.1),
                });
            }
        }
        let ia = QMat::identity(self.dim());
        let ib = QMat::identity(other.dim());
        let ops = self
            .ops()
            .iter()
            .zip(other.ops().iter())
            .map(|(a, b)| &a.kron(&ib) + &ia.kron(b))
            .collect();
        HiggsFiber::from_ops(basis, ops)
    }

    /// Restriction to the span of homogeneous vectors that is preserved by all
    /// four operators. Returns `None` if the span is not invariant.
    pub fn restrict(&self, vectors: Vec<(QVec, FiberVector)>) -> Option<Self> {
        let cols: Vec<QVec> = vectors.iter().map(|(v, _)| v.clone()).collect();
        let b = QMat::from_columns(self.dim(), &cols);
        let mut ops = Vec::new();
        for op in self.ops() {
            let mut coords = Vec::new();
            for v in &cols {
                coords.push(b.solve(&op.apply(v))?);
            }
            ops.push(QMat::from_columns(cols.len(), &coords));
        }
        Some(HiggsFiber::from_ops(vectors.into_iter().map(|(_, f)| f).collect(), ops))
    }

    /// Trace-free part of `self ⊗ self^∨`.
    pub fn end0(&self) -> Self {
        let d = self.dim();
        let full = self.tensor(&self.dual());
        let mut vecs = Vec::new();
        for i in 0..d {
            for j in 0..d {
                if i != j {
                    let k = i * d + j;
                    vecs.push((unit_vec(d * d, k), full.basis[k].clone()));
                }
            }
        }
        let last = (d - 1) * d + (d - 1);
        for i in 0..d - 1 {
            let k = i * d + i;
            let mut v = unit_vec(d * d, k);
            v[last] = q(-1);
            let mut meta = full.basis[k].clone();
            meta.name = format!("{}-{}", full.basis[k].name, full.basis[last].name);
            vecs.push((v, meta));
        }
        full.restrict(vecs).expect("trace-free part is invariant")
    }

    /// Highest-weight vectors, one per irreducible summand, ordered by
    /// descending Hodge `p`, then descending weight, then `lexp`.
    pub fn highest_weight_vectors(&self) -> Vec<HwVector> {
        highest_weight_vectors(&self.basis_keys(), &self.raise)
    }

    pub fn basis_keys(&self) -> Vec<((i64, i64), i64, (i64, i64))> {
        self.basis.iter().map(|b| (b.weight, b.lexp, b.hodge)).collect()
    }

    /// `θ` maps the `(p, q)` part into `(p−1, q+1)`.
    pub fn strictly_decreases_hodge(&self) -> bool {
        for (j, src) in self.basis.iter().enumerate() {
            for op in [&self.nx, &self.ny] {
                for (i, tgt) in self.basis.iter().enumerate() {
                    if op.get(i, j) != &q(0) && tgt.hodge != (src.hodge.0 - 1, src.hodge.1 + 1) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `θ ∧ θ = 0` iff `nx` and `ny` commute.
    pub fn theta_squared_zero(&self) -> bool {
        (&(&self.nx * &self.ny) - &(&self.ny * &self.nx)).is_zero()
    }

    /// Operators commute with the torus and intertwine `gl(2)`.
    pub fn is_equivariant(&self) -> bool {
        for (op, shift) in [(&self.nx, (1, 0)), (&self.ny, (0, 1))] {
            for (j, src) in self.basis.iter().enumerate() {
                for (i, tgt) in self.basis.iter().enumerate() {
                    let moved = (tgt.weight.0 + shift.0, tgt.weight.1 + shift.1);
                    if op.get(i, j) != &q(0) && (moved != src.weight || tgt.lexp != src.lexp) {
                        return false;
                    }
                }
            }
        }
        let comm = |a: &QMat, b: &QMat| &(a * b) - &(b * a);
        // θ is invariant: [X, nx] = −ny, [X, ny] = 0, [Y, nx] = 0, [Y, ny] = −nx.
        (&comm(&self.raise, &self.nx) + &self.ny).is_zero()
            && comm(&self.raise, &self.ny).is_zero()
            && comm(&self.lower, &self.nx).is_zero()
            && (&comm(&self.lower, &self.ny) + &self.nx).is_zero()
    }
}

type Key = ((i64, i64), i64, (i64, i64));

pub(crate) fn highest_weight_vectors(keys: &[Key], raise: &QMat) -> Vec<HwVector> {
    let mut groups: BTreeMap<Key, Vec<usize>> = BTreeMap::new();
    for (i, k) in keys.iter().enumerate() {
        groups.entry(*k).or_default().push(i);
    }
    let rows: Vec<usize> = (0..keys.len()).collect();
    let mut out = Vec::new();
    for ((weight, lexp, hodge), idx) in groups {
        let sub = raise.select(&rows, &idx);
        for k in sub.nullspace() {
            let mut v = vec![Q::from_integer(0.into()); keys.len()];
            for (c, &i) in k.iter().zip(&idx) {
                v[i] = c.clone();
            }
            debug_assert!(!is_zero_vec(&v));
            assert!(weight.0 >= weight.1, "kernel of raise in a non-dominant weight");
            out.push(HwVector { weight, lexp, hodge, vector: v });
        }
    }
    out.sort_by(|a, b| {
        (std::cmp::Reverse(a.hodge.0), std::cmp::Reverse(a.weight), a.lexp)
            .cmp(&(std::cmp::Reverse(b.hodge.0), std::cmp::Reverse(b.weight), b.lexp))
    });
    out
}

fn multisets(d: usize, n: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == n {
        out.push(cur.clone());
        return;
    }
    for i in start..d {
        cur.push(i);
        multisets(d, n, i, cur, out);
        cur.pop();
    }
}
