//! Formal representations built from the two rank-3 local systems `V1`, `V2`.
//!
//! `V2` is treated as the conjugate of `V1`: `Λ²V1 ≅ V2`, `Λ²V2 ≅ V1`, and
//! both determinants are trivial because monodromy lies in a special unitary
//! group. `V1 ⊗ V2 ≅ End(V1) = triv ⊕ End0(V1)`. These are tag-level
//! isomorphisms only.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::schur::{schur_dim, Partition};
use super::TensorError;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RepTag {
    Triv,
    V1,
    V2,
    Lambda2V1,
    Lambda2V2,
    Lambda3V1,
    Lambda3V2,
    End0V1,
    S2V1,
    S2V2,
    Tensor(Vec<RepTag>),
}

fn rank3_dim(parts: &[u32]) -> u64 {
    schur_dim(&Partition::new(parts).expect("static partition"), 3).expect("length ≤ 3")
}

impl RepTag {
    pub fn dim(&self) -> u64 {
        match self {
            RepTag::Triv => 1,
            RepTag::V1 | RepTag::V2 => rank3_dim(&[1]),
            RepTag::Lambda2V1 | RepTag::Lambda2V2 => rank3_dim(&[1, 1]),
            RepTag::Lambda3V1 | RepTag::Lambda3V2 => rank3_dim(&[1, 1, 1]),
            RepTag::End0V1 => rank3_dim(&[2, 1]),
            RepTag::S2V1 | RepTag::S2V2 => rank3_dim(&[2]),
            RepTag::Tensor(fs) => fs.iter().map(RepTag::dim).product(),
        }
    }

    /// Exponent `e` (mod 3) such that `ω` acts by `ω^e`, with `ω` acting by
    /// `ω` on `V1` and by `ω̄` on `V2`.
    pub fn omega_char(&self) -> u8 {
        let e: u32 = match self {
            RepTag::Triv | RepTag::Lambda3V1 | RepTag::Lambda3V2 | RepTag::End0V1 => 0,
            RepTag::V1 | RepTag::Lambda2V2 | RepTag::S2V2 => 1,
            RepTag::V2 | RepTag::Lambda2V1 | RepTag::S2V1 => 2,
            RepTag::Tensor(fs) => fs.iter().map(|f| f.omega_char() as u32).sum(),
        };
        (e % 3) as u8
    }

    /// `Λ^a V1` or `Λ^a V2` with `Λ³ ≅ triv`.
    pub fn exterior(which: u8, a: u32) -> Option<RepTag> {
        let t = match (which, a) {
            (_, 0) | (_, 3) => RepTag::Triv,
            (1, 1) => RepTag::V1,
            (2, 1) => RepTag::V2,
            (1, 2) => RepTag::Lambda2V1,
            (2, 2) => RepTag::Lambda2V2,
            _ => return None,
        };
        Some(t)
    }

    fn as_fundamental(&self) -> Option<u8> {
        match self {
            RepTag::V1 | RepTag::Lambda2V2 => Some(1),
            RepTag::V2 | RepTag::Lambda2V1 => Some(2),
            _ => None,
        }
    }
}

impl fmt::Display for RepTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RepTag::Triv => "triv",
            RepTag::V1 => "V1",
            RepTag::V2 => "V2",
            RepTag::Lambda2V1 => "L2V1",
            RepTag::Lambda2V2 => "L2V2",
            RepTag::Lambda3V1 => "L3V1",
            RepTag::Lambda3V2 => "L3V2",
            RepTag::End0V1 => "End0V1",
            RepTag::S2V1 => "S2V1",
            RepTag::S2V2 => "S2V2",
            RepTag::Tensor(fs) => {
                let parts: Vec<String> = fs.iter().map(|t| t.to_string()).collect();
                return write!(f, "{}", parts.join("(x)"));
            }
        };
        write!(f, "{s}")
    }
}

/// Nonnegative integer combination of tags.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct RepExpr {
    pub terms: BTreeMap<RepTag, u64>,
}

impl RepExpr {
    pub fn single(t: RepTag) -> Self {
        let mut r = RepExpr::default();
        r.add(t, 1);
        r
    }

    pub fn add(&mut self, t: RepTag, n: u64) {
        if n > 0 {
            *self.terms.entry(t).or_insert(0) += n;
        }
    }

    pub fn extend(&mut self, other: &RepExpr) {
        for (t, n) in &other.terms {
            self.add(t.clone(), *n);
        }
    }

    pub fn dim(&self) -> u64 {
        self.terms.iter().map(|(t, n)| t.dim() * n).sum()
    }

    pub fn multiplicity(&self, t: &RepTag) -> u64 {
        self.terms.get(t).copied().unwrap_or(0)
    }

    /// Dimension of the `ω^e` part for `e = 0, 1, 2`.
    pub fn omega_dims(&self) -> [u64; 3] {
        let mut d = [0; 3];
        for (t, n) in &self.terms {
            d[t.omega_char() as usize] += t.dim() * n;
        }
        d
    }

    /// Tensor product of two tags, simplified where a rule applies.
    pub fn tensor_tags(a: &RepTag, b: &RepTag) -> RepExpr {
        if *a == RepTag::Triv {
            return RepExpr::single(b.clone());
        }
        if *b == RepTag::Triv {
            return RepExpr::single(a.clone());
        }
        match (a.as_fundamental(), b.as_fundamental()) {
            (Some(x), Some(y)) if x != y => {
                let mut r = RepExpr::single(RepTag::Triv);
                r.add(RepTag::End0V1, 1);
                r
            }
            (Some(1), Some(1)) => {
                let mut r = RepExpr::single(RepTag::S2V1);
                r.add(RepTag::Lambda2V1, 1);
                r
            }
            (Some(2), Some(2)) => {
                let mut r = RepExpr::single(RepTag::S2V2);
                r.add(RepTag::Lambda2V2, 1);
                r
            }
            _ => RepExpr::single(RepTag::Tensor(vec![a.clone(), b.clone()])),
        }
    }
}

impl fmt::Display for RepExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.terms.iter().map(|(t, n)| if *n == 1 { t.to_string() } else { format!("{n}{t}") }).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `Λᵏ(V1 ⊕ V2) = ⊕_{a+b=k} ΛᵃV1 ⊗ ΛᵇV2`, simplified.
pub fn decompose_lambda_k(k: u32) -> Result<RepExpr, TensorError> {
    if k > 6 {
        return Err(TensorError::OutOfRange(k));
    }
    let mut out = RepExpr::default();
    for a in k.saturating_sub(3)..=k.min(3) {
        let b = k - a;
        let x = RepTag::exterior(1, a).expect("a ≤ 3");
        let y = RepTag::exterior(2, b).expect("b ≤ 3");
        out.extend(&RepExpr::tensor_tags(&x, &y));
    }
    Ok(out)
}

pub fn trivial_summand_count(k: u32) -> Result<u64, TensorError> {
    Ok(decompose_lambda_k(k)?.multiplicity(&RepTag::Triv))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn lambda_two() {
        let r = decompose_lambda_k(2).unwrap();
        assert_eq!(r.to_string(), "triv + L2V1 + L2V2 + End0V1");
        assert_eq!(r.dim(), 15);
    }

    #[test]
    fn lambda_three() {
        let r = decompose_lambda_k(3).unwrap();
        assert_eq!(r.multiplicity(&RepTag::Triv), 2);
        assert_eq!(r.multiplicity(&RepTag::S2V1), 1);
        assert_eq!(r.multiplicity(&RepTag::S2V2), 1);
        assert_eq!(r.multiplicity(&RepTag::Lambda2V1), 1);
        assert_eq!(r.multiplicity(&RepTag::Lambda2V2), 1);
        assert_eq!(r.dim(), 20);
    }

    #[test]
    fn lambda_zero_and_range() {
        assert_eq!(decompose_lambda_k(0).unwrap(), RepExpr::single(RepTag::Triv));
        assert_eq!(decompose_lambda_k(7), Err(TensorError::OutOfRange(7)));
        assert_eq!(trivial_summand_count(9), Err(TensorError::OutOfRange(9)));
    }

    #[test]
    fn dims_are_binomial() {
        let mut total = 0;
        for k in 0..=6u32 {
            let d = decompose_lambda_k(k).unwrap().dim();
            assert_eq!(d, binom(6, k as u64));
            assert_eq!(d, decompose_lambda_k(6 - k).unwrap().dim());
            total += d;
        }
        assert_eq!(total, 64);
    }

    #[test]
    fn trivial_counts() {
        let counts: Vec<u64> = (0..=6).map(|k| trivial_summand_count(k).unwrap()).collect();
        assert_eq!(counts, vec![1, 0, 1, 2, 1, 0, 1]);
    }

    #[test]
    fn unsimplified_tensor_keeps_dimension() {
        let r = RepExpr::tensor_tags(&RepTag::End0V1, &RepTag::V1);
        assert_eq!(r.dim(), 24);
        assert_eq!(r.omega_dims(), [0, 24, 0]);
    }
}
