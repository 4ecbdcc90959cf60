use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::linalg::{q, QMat, QVec, Q};

use super::L2Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Divisor {
    /// `D = {z₁ = 0}`; `z₂` is an ordinary coordinate.
    Smooth,
    /// `D = {z₁z₂ = 0}`.
    NormalCrossing,
}

impl Divisor {
    /// Whether direction `i` (0 or 1) carries a log pole.
    pub fn is_log(&self, i: usize) -> bool {
        i == 0 || *self == Divisor::NormalCrossing
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Divisor::Smooth => "smooth",
            Divisor::NormalCrossing => "normal_crossing",
        })
    }
}

/// Fiber of `SⁿE` at a boundary point with residues `N₁`, `N₂`.
#[derive(Clone, Debug)]
pub struct LocalModel {
    pub power: usize,
    pub divisor: Divisor,
    pub names: Vec<String>,
    pub n: [QMat; 2],
}

impl LocalModel {
    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn commute(&self) -> bool {
        (&(&self.n[0] * &self.n[1]) - &(&self.n[1] * &self.n[0])).is_zero()
    }

    pub fn label(&self) -> String {
        match self.power {
            1 => format!("E/{}", self.divisor),
            n => format!("S{n}E/{}", self.divisor),
        }
    }
}

/// `E` with basis `v1 = dz₁/z₁⊗v`, `v2 = (dz₂ or dz₂/z₂)⊗v`, `v`.
pub fn uniformizing_local(divisor: Divisor) -> LocalModel {
    let n1 = QMat::from_i64(&[vec![0, 0, 0], vec![0, 0, 0], vec![1, 0, 0]]);
    let n2 = QMat::from_i64(&[vec![0, 0, 0], vec![0, 0, 0], vec![0, 1, 0]]);
    LocalModel { power: 1, divisor, names: vec!["v1".into(), "v2".into(), "v".into()], n: [n1, n2] }
}

/// `SⁿE` with the residues extended as derivations.
pub fn sym_local(n: usize, divisor: Divisor) -> Result<LocalModel, L2Error> {
    if n == 0 {
        return Err(L2Error::InvalidPower(0));
    }
    let e = uniformizing_local(divisor);
    if n == 1 {
        return Ok(e);
    }
    let monos = multisets(e.dim(), n);
    let index: BTreeMap<&Vec<usize>, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let names = monos
        .iter()
        .map(|m| m.iter().map(|&i| e.names[i].as_str()).collect::<Vec<_>>().join("⊙"))
        .collect();
    let ops = [0, 1].map(|k| {
        let op = &e.n[k];
        let mut out = QMat::zeros(monos.len(), monos.len());
        for (col, m) in monos.iter().enumerate() {
            for pos in 0..m.len() {
                for j in 0..e.dim() {
                    let c = op.get(j, m[pos]);
                    if *c == q(0) {
                        continue;
                    }
                    let mut m2 = m.clone();
                    m2[pos] = j;
                    m2.sort_unstable();
                    out.add_at(index[&m2], col, c);
                }
            }
        }
        out
    });
    Ok(LocalModel { power: n, divisor, names, n: ops })
}

/// Monomials of degree `n` in `d` variables, as sorted index lists.
fn multisets(d: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(d: usize, n: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in start..d {
            cur.push(i);
            go(d, n, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(d, n, 0, &mut Vec::new(), &mut out);
    out
}

/// `u ⊙ w` in `S²` of a model of power 1, as a vector of the `S²` model.
pub fn sym_product(s2: &LocalModel, e: &LocalModel, u: &[Q], w: &[Q]) -> QVec {
    let mut out = vec![q(0); s2.dim()];
    for i in 0..e.dim() {
        for j in 0..e.dim() {
            let c = &u[i] * &w[j];
            if c == q(0) {
                continue;
            }
            let (a, b) = (i.min(j), i.max(j));
            let name = format!("{}⊙{}", e.names[a], e.names[b]);
            let k = s2.index_of(&name).expect("S2 basis contains every pair");
            out[k] += c;
        }
    }
    out
}

/// Linear combination of basis names, e.g. `v1-v2` or `2*v1⊙v`.
pub fn vector_name(names: &[String], v: &[Q]) -> String {
    let mut s = String::new();
    for (n, c) in names.iter().zip(v) {
        if *c == q(0) {
            continue;
        }
        let neg = *c < q(0);
        let abs = if neg { -c.clone() } else { c.clone() };
        if neg {
            s.push('-');
        } else if !s.is_empty() {
            s.push('+');
        }
        if abs != q(1) {
            s.push_str(&crate::linalg::q_to_string(&abs));
            s.push('*');
        }
        s.push_str(n);
    }
    if s.is_empty() {
        "0".into()
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s2_action_matches_listed_values() {
        let s = sym_local(2, Divisor::Smooth).unwrap();
        assert_eq!(s.dim(), 6);
        let img = |name: &str| {
            let v = crate::linalg::unit_vec(s.dim(), s.index_of(name).unwrap());
            vector_name(&s.names, &s.n[0].apply(&v))
        };
        assert_eq!(img("v1⊙v1"), "2*v1⊙v");
        assert_eq!(img("v1⊙v2"), "v2⊙v");
        assert_eq!(img("v2⊙v2"), "0");
        assert_eq!(img("v1⊙v"), "v⊙v");
        assert_eq!(img("v2⊙v"), "0");
        assert_eq!(img("v⊙v"), "0");
    }

    #[test]
    fn power_one_is_e() {
        let a = sym_local(1, Divisor::NormalCrossing).unwrap();
        let b = uniformizing_local(Divisor::NormalCrossing);
        assert_eq!(a.names, b.names);
        assert_eq!(a.n, b.n);
        assert!(sym_local(0, Divisor::Smooth).is_err());
    }

    #[test]
    fn residues_commute() {
        for n in 1..=4 {
            assert!(sym_local(n, Divisor::NormalCrossing).unwrap().commute());
        }
    }
}
