//! Schur polynomials in up to a handful of variables, the Weyl dimension
//! formula, and Littlewood–Richardson expansion by repeated subtraction of the
//! lex-leading Schur polynomial.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::TensorError;

/// Weakly decreasing list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Accepts any weakly decreasing list; trailing zeros are dropped.
    pub fn new(parts: &[u32]) -> Result<Self, TensorError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(TensorError::NotAPartition(parts.to_vec()));
        }
        Ok(Partition(parts.iter().copied().filter(|&p| p > 0).collect()))
    }

    pub fn row(n: u32) -> Self {
        Partition::new(&[n]).expect("single row")
    }

    pub fn column(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Parts padded with zeros to `rank` entries.
    pub fn padded(&self, rank: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        v.resize(rank.max(v.len()), 0);
        v
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Integer polynomial in `rank` variables, keyed by exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    rank: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl Poly {
    pub fn zero(rank: usize) -> Self {
        Poly { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        let mut p = Self::zero(rank);
        p.terms.insert(vec![0; rank], 1);
        p
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exp: Vec<u32>, coeff: i64) {
        let e = self.terms.entry(exp).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
    }

    pub fn add_scaled(&mut self, other: &Poly, c: i64) {
        for (e, v) in &other.terms {
            self.add_term(e.clone(), v * c);
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.rank);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    /// Value at `x = (1, …, 1)`.
    pub fn eval_ones(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Lexicographically largest monomial.
    pub fn leading(&self) -> Option<(&Vec<u32>, i64)> {
        self.terms.iter().next_back().map(|(e, c)| (e, *c))
    }
}

/// `s_λ(x₁,…,x_r)` as a sum over semistandard tableaux of shape `λ`.
pub fn schur_poly(lambda: &Partition, rank: usize) -> Result<Poly, TensorError> {
    if lambda.len() > rank {
        return Err(TensorError::LengthExceedsRank { len: lambda.len(), rank });
    }
    let shape = lambda.parts().to_vec();
    let cells: Vec<(usize, usize)> =
        shape.iter().enumerate().flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l as usize]).collect();
    let mut poly = Poly::zero(rank);

    fn fill(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        rank: usize,
        poly: &mut Poly,
    ) {
        if idx == cells.len() {
            let mut exp = vec![0u32; rank];
            for row in grid.iter() {
                for &v in row {
                    exp[v] += 1;
                }
            }
            poly.add_term(exp, 1);
            return;
        }
        let (r, c) = cells[idx];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 0 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 0 };
        for v in lo_row.max(lo_col)..rank {
            grid[r][c] = v;
            fill(idx + 1, cells, grid, rank, poly);
        }
    }

    fill(0, &cells, &mut grid, rank, &mut poly);
    Ok(poly)
}

/// Weyl dimension formula `∏_{i<j} (λᵢ − λⱼ + j − i)/(j − i)`.
pub fn schur_dim(lambda: &Partition, rank: usize) -> Result<u64, TensorError> {
    if lambda.len() > rank {
        return Err(TensorError::LengthExceedsRank { len: lambda.len(), rank });
    }
    let l = lambda.padded(rank);
    let (mut num, mut den) = (1i128, 1i128);
    for i in 0..rank {
        for j in i + 1..rank {
            num *= l[i] as i128 - l[j] as i128 + (j - i) as i128;
            den *= (j - i) as i128;
        }
    }
    Ok((num / den) as u64)
}

/// Formal integer combination of Schur functors of a fixed rank.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct SchurExpr {
    pub rank: usize,
    pub terms: BTreeMap<Partition, i64>,
}

impl SchurExpr {
    pub fn dim(&self) -> Result<u64, TensorError> {
        let mut total = 0i64;
        for (p, c) in &self.terms {
            total += c * schur_dim(p, self.rank)? as i64;
        }
        Ok(total as u64)
    }

    pub fn coefficient(&self, p: &Partition) -> i64 {
        self.terms.get(p).copied().unwrap_or(0)
    }
}

impl fmt::Display for SchurExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // largest partition first
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(p, c)| if *c == 1 { p.to_string() } else { format!("{c}{p}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Expands `s_λ · s_μ` in `rank` variables into Schur polynomials.
pub fn decompose_product(lambda: &Partition, mu: &Partition, rank: usize) -> Result<SchurExpr, TensorError> {
    let mut rest = schur_poly(lambda, rank)?.mul(&schur_poly(mu, rank)?);
    let mut out = SchurExpr { rank, terms: BTreeMap::new() };
    while let Some((lead, c)) = rest.leading() {
        let part = Partition::new(lead).map_err(|_| TensorError::NotSymmetric)?;
        if c < 0 {
            return Err(TensorError::NegativeCoefficient(part));
        }
        let s = schur_poly(&part, rank)?;
        rest.add_scaled(&s, -c);
        *out.terms.entry(part).or_insert(0) += c;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts).unwrap()
    }

    #[test]
    fn schur_dim_examples() {
        assert_eq!(schur_dim(&p(&[3]), 2).unwrap(), 4);
        assert_eq!(schur_dim(&p(&[1, 1]), 2).unwrap(), 1);
        assert_eq!(schur_dim(&p(&[2, 1]), 2).unwrap(), 2);
        assert!(matches!(schur_dim(&p(&[1, 1, 1]), 2), Err(TensorError::LengthExceedsRank { .. })));
    }

    #[test]
    fn tableau_count_matches_weyl() {
        // s_(2,1)(x1,x2) = x1²x2 + x1x2²
        let s = schur_poly(&p(&[2, 1]), 2).unwrap();
        assert_eq!(s.terms().len(), 2);
        assert_eq!(s.eval_ones(), 2);
        for parts in [vec![2, 1], vec![3], vec![2, 2, 1], vec![4, 2], vec![1, 1, 1]] {
            let lam = p(&parts);
            assert_eq!(schur_poly(&lam, 3).unwrap().eval_ones() as u64, schur_dim(&lam, 3).unwrap());
        }
    }

    #[test]
    fn pieri_rank_two() {
        let e = decompose_product(&p(&[2]), &p(&[1]), 2).unwrap();
        assert_eq!(e.to_string(), "(3) + (2,1)");
        assert_eq!(e.dim().unwrap(), 6);
    }

    #[test]
    fn square_rank_three() {
        let e = decompose_product(&p(&[1]), &p(&[1]), 3).unwrap();
        assert_eq!(e.coefficient(&p(&[2])), 1);
        assert_eq!(e.coefficient(&p(&[1, 1])), 1);
        assert_eq!(e.dim().unwrap(), 9);
    }

    #[test]
    fn determinant_shift() {
        let e = decompose_product(&p(&[1]), &p(&[1, 1, 1]), 3).unwrap();
        assert_eq!(e.terms.len(), 1);
        assert_eq!(e.coefficient(&p(&[2, 1, 1])), 1);
        assert_eq!(e.dim().unwrap(), 3);
    }

    #[test]
    fn truncation_drops_long_partitions() {
        // in rank 2, (1,1)·(1) = (2,1) only; (1,1,1) is cut
        let e = decompose_product(&p(&[1, 1]), &p(&[1]), 2).unwrap();
        assert_eq!(e.to_string(), "(2,1)");
    }

    #[test]
    fn rejects_increasing_list() {
        assert!(Partition::new(&[1, 2]).is_err());
    }
}
