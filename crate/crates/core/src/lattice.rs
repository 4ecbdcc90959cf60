//! Néron–Severi lattices of `E × E` (E with CM by the Eisenstein integers) and
//! of its blowup at the three points `(Q_i, Q_i)`.
//!
//! Basis order is fixed: `[T1, Tw, A, B]` on the product, where `T1` and `Tw`
//! are the graphs of `1` and `ω`, `A = 0×E` and `B = E×0`; the blowup appends
//! the exceptional curves `[Z1, Z2, Z3]`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::linalg::{is_integral, q, QMat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("graph class of {0} solves to a non-integral vector")]
    NonIntegralSolution(EisensteinInt),
    #[error("classes live on different surfaces ({0:?} vs {1:?})")]
    AmbientMismatch(Ambient, Ambient),
    #[error("division by zero")]
    ZeroDivisor,
    #[error("Gram matrix is degenerate")]
    DegenerateGram,
}

/// `a + bω` with `ω = exp(2πi/3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct EisensteinInt {
    pub a: i64,
    pub b: i64,
}

impl EisensteinInt {
    pub const ONE: EisensteinInt = EisensteinInt { a: 1, b: 0 };
    pub const OMEGA: EisensteinInt = EisensteinInt { a: 0, b: 1 };
    pub const OMEGA_SQ: EisensteinInt = EisensteinInt { a: -1, b: -1 };

    pub const fn new(a: i64, b: i64) -> Self {
        EisensteinInt { a, b }
    }

    /// `a² − ab + b²`; equals the degree of the endomorphism of E.
    pub fn norm(self) -> i64 {
        self.a * self.a - self.a * self.b + self.b * self.b
    }

    pub fn sub(self, other: Self) -> Self {
        EisensteinInt::new(self.a - other.a, self.b - other.b)
    }

    pub fn mul(self, other: Self) -> Self {
        // ω² = −1 − ω
        let (a, b, c, d) = (self.a, self.b, other.a, other.b);
        EisensteinInt::new(a * c - b * d, a * d + b * c - b * d)
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}w", self.a, self.b)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Ambient {
    Product,
    Blowup,
}

impl Ambient {
    pub fn rank(self) -> usize {
        match self {
            Ambient::Product => 4,
            Ambient::Blowup => 7,
        }
    }
}

pub const PRODUCT_LABELS: [&str; 4] = ["T1", "Tw", "A", "B"];
pub const BLOWUP_LABELS: [&str; 7] = ["T1", "Tw", "A", "B", "Z1", "Z2", "Z3"];

/// Intersection numbers on the product basis, fixed by
/// `Γφ·Γψ = N(φ−ψ)`, `Γφ·A = 1`, `Γφ·B = N(φ)`, `A·B = 1`.
const PRODUCT_GRAM: [[i64; 4]; 4] = [[0, 3, 1, 1], [3, 0, 1, 1], [1, 1, 0, 1], [1, 1, 1, 0]];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NsBasis {
    pub ambient: Ambient,
    pub labels: Vec<&'static str>,
    pub gram: Vec<Vec<i64>>,
}

impl NsBasis {
    pub fn product() -> Self {
        NsBasis {
            ambient: Ambient::Product,
            labels: PRODUCT_LABELS.to_vec(),
            gram: PRODUCT_GRAM.iter().map(|r| r.to_vec()).collect(),
        }
    }

    pub fn blowup() -> Self {
        let mut gram = vec![vec![0i64; 7]; 7];
        for (i, row) in PRODUCT_GRAM.iter().enumerate() {
            gram[i][..4].copy_from_slice(row);
        }
        for i in 4..7 {
            gram[i][i] = -1;
        }
        NsBasis { ambient: Ambient::Blowup, labels: BLOWUP_LABELS.to_vec(), gram }
    }

    pub fn for_ambient(ambient: Ambient) -> Self {
        match ambient {
            Ambient::Product => Self::product(),
            Ambient::Blowup => Self::blowup(),
        }
    }

    pub fn gram_matrix(&self) -> QMat {
        QMat::from_i64(&self.gram)
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.gram.len();
        (0..n).all(|i| (0..n).all(|j| self.gram[i][j] == self.gram[j][i]))
    }

    pub fn determinant(&self) -> i64 {
        self.gram_matrix().determinant().to_integer().to_i64().expect("small determinant")
    }

    pub fn basis_vector(&self, i: usize) -> DivisorClass {
        let mut coeffs = vec![0; self.ambient.rank()];
        coeffs[i] = 1;
        DivisorClass { ambient: self.ambient, coeffs }
    }
}

/// Integer coefficient vector in the fixed basis of its ambient lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DivisorClass {
    pub ambient: Ambient,
    pub coeffs: Vec<i64>,
}

impl DivisorClass {
    pub fn new(ambient: Ambient, coeffs: Vec<i64>) -> Self {
        assert_eq!(coeffs.len(), ambient.rank(), "coefficient count must match the ambient rank");
        DivisorClass { ambient, coeffs }
    }

    pub fn zero(ambient: Ambient) -> Self {
        DivisorClass { ambient, coeffs: vec![0; ambient.rank()] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn scaled(&self, n: i64) -> Self {
        DivisorClass { ambient: self.ambient, coeffs: self.coeffs.iter().map(|c| c * n).collect() }
    }

    pub fn plus(&self, other: &DivisorClass) -> Self {
        assert_eq!(self.ambient, other.ambient);
        DivisorClass {
            ambient: self.ambient,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn minus(&self, other: &DivisorClass) -> Self {
        self.plus(&other.scaled(-1))
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn ensure_same(x: &DivisorClass, y: &DivisorClass) -> Result<(), LatticeError> {
    if x.ambient != y.ambient {
        return Err(LatticeError::AmbientMismatch(x.ambient, y.ambient));
    }
    Ok(())
}

/// `xᵀ · gram · y`.
pub fn intersect(x: &DivisorClass, y: &DivisorClass) -> Result<i64, LatticeError> {
    ensure_same(x, y)?;
    let gram = NsBasis::for_ambient(x.ambient).gram;
    let mut acc = 0;
    for (i, xi) in x.coeffs.iter().enumerate() {
        for (j, yj) in y.coeffs.iter().enumerate() {
            acc += xi * gram[i][j] * yj;
        }
    }
    Ok(acc)
}

/// Class of the graph of the endomorphism `φ` of `E`, found by solving the
/// Gram system against its intersection numbers with the basis.
pub fn graph_class(phi: EisensteinInt) -> Result<DivisorClass, LatticeError> {
    let basis = NsBasis::product();
    let gram = basis.gram_matrix();
    if gram.determinant().is_zero() {
        return Err(LatticeError::DegenerateGram);
    }
    let rhs = [
        q(phi.sub(EisensteinInt::ONE).norm()),
        q(phi.sub(EisensteinInt::OMEGA).norm()),
        q(1),
        q(phi.norm()),
    ];
    let sol = gram.solve(&rhs).ok_or(LatticeError::DegenerateGram)?;
    if !is_integral(&sol) {
        return Err(LatticeError::NonIntegralSolution(phi));
    }
    let coeffs = sol.iter().map(|x| x.to_integer().to_i64().expect("small coefficient")).collect();
    Ok(DivisorClass::new(Ambient::Product, coeffs))
}

/// Total transform under the blowup `σ`.
pub fn pullback(x: &DivisorClass) -> DivisorClass {
    assert_eq!(x.ambient, Ambient::Product, "pullback takes a class on E×E");
    let mut coeffs = x.coeffs.clone();
    coeffs.extend([0, 0, 0]);
    DivisorClass::new(Ambient::Blowup, coeffs)
}

fn z(i: usize) -> DivisorClass {
    NsBasis::blowup().basis_vector(3 + i)
}

/// `Z = Z1 + Z2 + Z3`.
pub fn exceptional_sum() -> DivisorClass {
    z(1).plus(&z(2)).plus(&z(3))
}

fn product_basis(label: &str) -> DivisorClass {
    let idx = PRODUCT_LABELS.iter().position(|l| *l == label).expect("known label");
    NsBasis::product().basis_vector(idx)
}

/// Strict transforms of the six boundary curves and of `0×E`.
///
/// `E×Q_i` is identified with `E×0` in NS.
pub fn strict_transform_catalog() -> BTreeMap<&'static str, DivisorClass> {
    let zsum = exceptional_sum();
    let t_omega_sq = graph_class(EisensteinInt::OMEGA_SQ).expect("ω² graph is integral");
    let sb = pullback(&product_basis("B"));
    let mut m = BTreeMap::new();
    m.insert("D0", pullback(&product_basis("A")).minus(&z(1)));
    m.insert("D1", pullback(&product_basis("T1")).minus(&zsum));
    m.insert("D2", pullback(&product_basis("Tw")).minus(&zsum));
    m.insert("D3", pullback(&t_omega_sq).minus(&zsum));
    m.insert("D4", sb.minus(&z(1)));
    m.insert("D5", sb.minus(&z(2)));
    m.insert("D6", sb.minus(&z(3)));
    m
}

/// Boundary divisor `D = D1 + … + D6`.
pub fn boundary() -> DivisorClass {
    let cat = strict_transform_catalog();
    ["D1", "D2", "D3", "D4", "D5", "D6"]
        .iter()
        .fold(DivisorClass::zero(Ambient::Blowup), |acc, k| acc.plus(&cat[k]))
}

/// Canonical class of the blowup; `K_{E×E} = 0`, so this is `Z`.
pub fn canonical_class() -> DivisorClass {
    pullback(&DivisorClass::zero(Ambient::Product)).plus(&exceptional_sum())
}

/// `K + D`.
pub fn canonical_plus_boundary() -> DivisorClass {
    canonical_class().plus(&boundary())
}

/// `L = σ*(0×E) − Z + 2σ*(E×0)`.
pub fn cube_root_class() -> DivisorClass {
    pullback(&product_basis("A"))
        .minus(&exceptional_sum())
        .plus(&pullback(&product_basis("B")).scaled(2))
}

/// `x / n` when every coefficient is divisible by `n` in the fixed basis.
pub fn divide(x: &DivisorClass, n: i64) -> Result<Option<DivisorClass>, LatticeError> {
    if n == 0 {
        return Err(LatticeError::ZeroDivisor);
    }
    if x.coeffs.iter().any(|c| c % n != 0) {
        return Ok(None);
    }
    Ok(Some(DivisorClass { ambient: x.ambient, coeffs: x.coeffs.iter().map(|c| c / n).collect() }))
}

/// True iff `lhs − rhs` pairs to zero with every basis vector.
pub fn verify_relation(lhs: &DivisorClass, rhs: &DivisorClass) -> Result<bool, LatticeError> {
    ensure_same(lhs, rhs)?;
    let diff = lhs.minus(rhs);
    let basis = NsBasis::for_ambient(lhs.ambient);
    for i in 0..lhs.ambient.rank() {
        if intersect(&diff, &basis.basis_vector(i))? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PositivityReport {
    pub self_int: i64,
    pub degrees: BTreeMap<String, i64>,
}

impl PositivityReport {
    /// Nonnegative on every catalog curve and positive square.
    pub fn catalog_nef_and_big(&self) -> bool {
        self.self_int > 0 && self.degrees.values().all(|&d| d >= 0)
    }
}

/// Curves the positivity certificate is checked against.
pub fn curve_catalog() -> BTreeMap<String, DivisorClass> {
    let mut m: BTreeMap<String, DivisorClass> =
        strict_transform_catalog().into_iter().map(|(k, v)| (k.to_string(), v)).collect();
    for i in 1..=3 {
        m.insert(format!("Z{i}"), z(i));
    }
    m
}

/// Degree certificate against the curve catalog; not a proof of nefness.
pub fn positivity_report(x: &DivisorClass) -> Result<PositivityReport, LatticeError> {
    if x.ambient != Ambient::Blowup {
        return Err(LatticeError::AmbientMismatch(x.ambient, Ambient::Blowup));
    }
    let mut degrees = BTreeMap::new();
    for (label, curve) in curve_catalog() {
        degrees.insert(label, intersect(x, &curve)?);
    }
    Ok(PositivityReport { self_int: intersect(x, x)?, degrees })
}

/// Looks up a stable catalog label (`T1`, `Tw`, `Tw2`, `A`, `B`, `Z1..Z3`,
/// `D0..D6`, `K`, `L`, `K+D`). Product labels resolve on `E×E`.
pub fn class_by_label(label: &str) -> Option<DivisorClass> {
    match label {
        "T1" | "Tw" | "A" | "B" => Some(product_basis(label)),
        "Tw2" => graph_class(EisensteinInt::OMEGA_SQ).ok(),
        "Z1" => Some(z(1)),
        "Z2" => Some(z(2)),
        "Z3" => Some(z(3)),
        "Z" => Some(exceptional_sum()),
        "K" => Some(canonical_class()),
        "L" => Some(cube_root_class()),
        "D" => Some(boundary()),
        "K+D" => Some(canonical_plus_boundary()),
        _ => strict_transform_catalog().get(label).cloned(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Fraction-free elimination over i128, independent of `QMat`.
    fn oracle_solve(a: [[i64; 4]; 4], b: [i64; 4]) -> Option<[i64; 4]> {
        let mut m = [[0i128; 5]; 4];
        for i in 0..4 {
            for j in 0..4 {
                m[i][j] = a[i][j] as i128;
            }
            m[i][4] = b[i] as i128;
        }
        for col in 0..4 {
            let p = (col..4).find(|&r| m[r][col] != 0)?;
            m.swap(col, p);
            for r in 0..4 {
                if r != col && m[r][col] != 0 {
                    let (f, g) = (m[r][col], m[col][col]);
                    for c in 0..5 {
                        m[r][c] = m[r][c] * g - m[col][c] * f;
                    }
                }
            }
        }
        let mut x = [0i64; 4];
        for i in 0..4 {
            if m[i][4] % m[i][i] != 0 {
                return None;
            }
            x[i] = (m[i][4] / m[i][i]) as i64;
        }
        Some(x)
    }

    #[test]
    fn gram_is_symmetric_and_nondegenerate() {
        for b in [NsBasis::product(), NsBasis::blowup()] {
            assert!(b.is_symmetric());
            assert_ne!(b.determinant(), 0);
        }
    }

    #[test]
    fn graph_of_omega_squared_matches_oracle() {
        let expected = oracle_solve(PRODUCT_GRAM, [3, 3, 1, 1]).unwrap();
        assert_eq!(expected, [-1, -1, 3, 3]);
        let got = graph_class(EisensteinInt::OMEGA_SQ).unwrap();
        assert_eq!(got.coeffs, expected.to_vec());
    }

    #[test]
    fn graph_of_basis_automorphisms() {
        assert_eq!(graph_class(EisensteinInt::ONE).unwrap().coeffs, vec![1, 0, 0, 0]);
        assert_eq!(graph_class(EisensteinInt::OMEGA).unwrap().coeffs, vec![0, 1, 0, 0]);
    }

    #[test]
    fn intersect_examples() {
        let b = NsBasis::product();
        assert_eq!(intersect(&b.basis_vector(0), &b.basis_vector(1)).unwrap(), 3);
        assert_eq!(intersect(&b.basis_vector(2), &b.basis_vector(2)).unwrap(), 0);
        assert_eq!(intersect(&z(1), &z(2)).unwrap(), 0);
        assert!(matches!(
            intersect(&b.basis_vector(0), &z(1)),
            Err(LatticeError::AmbientMismatch(..))
        ));
    }

    #[test]
    fn eisenstein_relation() {
        let sum = graph_class(EisensteinInt::ONE)
            .unwrap()
            .plus(&graph_class(EisensteinInt::OMEGA).unwrap())
            .plus(&graph_class(EisensteinInt::OMEGA_SQ).unwrap());
        let rhs = product_basis("A").scaled(3).plus(&product_basis("B").scaled(3));
        assert!(verify_relation(&sum, &rhs).unwrap());
        assert!(!verify_relation(&product_basis("T1"), &product_basis("Tw")).unwrap());
    }

    #[test]
    fn strict_transforms() {
        let cat = strict_transform_catalog();
        assert_eq!(pullback(&product_basis("T1")).minus(&exceptional_sum()), cat["D1"]);
        assert_eq!(pullback(&product_basis("B")).minus(&z(1)), cat["D4"]);
        assert_eq!(intersect(&cat["D1"], &cat["D2"]).unwrap(), 0);
        assert_eq!(intersect(&cat["D0"], &cat["D5"]).unwrap(), 1);
        assert_eq!(intersect(&cat["D0"], &cat["D6"]).unwrap(), 1);
        assert_eq!(intersect(&cat["D1"], &cat["D1"]).unwrap(), -3);
        let d456z = cat["D4"].plus(&cat["D5"]).plus(&cat["D6"]).plus(&exceptional_sum());
        assert!(verify_relation(&d456z, &pullback(&product_basis("B")).scaled(3)).unwrap());
    }

    #[test]
    fn log_canonical_divisible_by_three() {
        let kd = canonical_plus_boundary();
        assert_eq!(canonical_class().coeffs[4], 1);
        let l = divide(&kd, 3).unwrap().unwrap();
        assert_eq!(l, cube_root_class());
        assert!(kd.minus(&cube_root_class().scaled(3)).is_zero());
        let cat = strict_transform_catalog();
        let d056 = cat["D0"].plus(&cat["D5"]).plus(&cat["D6"]);
        assert!(cube_root_class().minus(&d056).is_zero());
    }

    #[test]
    fn divide_edge_cases() {
        let x = DivisorClass::new(Ambient::Blowup, vec![2, 0, 0, 0, 0, 0, 0]);
        assert_eq!(divide(&x, 3).unwrap(), None);
        let zero = DivisorClass::zero(Ambient::Blowup);
        assert_eq!(divide(&zero, 3).unwrap(), Some(zero.clone()));
        assert_eq!(divide(&zero, 0), Err(LatticeError::ZeroDivisor));
    }

    #[test]
    fn positivity_of_l() {
        let r = positivity_report(&cube_root_class()).unwrap();
        assert_eq!(r.self_int, 1);
        for i in 1..=3 {
            assert_eq!(r.degrees[&format!("Z{i}")], 1);
        }
        for i in 1..=6 {
            assert_eq!(r.degrees[&format!("D{i}")], 0);
        }
        assert!(r.catalog_nef_and_big());
    }

    #[test]
    fn boundary_curves_pairwise_disjoint() {
        let cat = strict_transform_catalog();
        for i in 1..=6 {
            for j in 1..=6 {
                let d = intersect(&cat[format!("D{i}").as_str()], &cat[format!("D{j}").as_str()]).unwrap();
                if i != j {
                    assert_eq!(d, 0, "D{i}·D{j}");
                } else {
                    assert!(d < 0);
                }
            }
        }
    }
}
