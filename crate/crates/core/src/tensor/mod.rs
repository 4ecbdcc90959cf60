//! Schur-functor calculus for rank 2 and rank 3, and the exterior-power
//! decompositions of `V1 ⊕ V2`.

pub mod rep;
pub mod schur;

use thiserror::Error;

pub use rep::{decompose_lambda_k, trivial_summand_count, RepExpr, RepTag};
pub use schur::{decompose_product, schur_dim, schur_poly, Partition, Poly, SchurExpr};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TensorError {
    #[error("partition of length {len} does not fit rank {rank}")]
    LengthExceedsRank { len: usize, rank: usize },
    #[error("{0:?} is not weakly decreasing")]
    NotAPartition(Vec<u32>),
    #[error("exterior degree {0} outside 0..=6")]
    OutOfRange(u32),
    #[error("negative Littlewood-Richardson coefficient at {0}")]
    NegativeCoefficient(Partition),
    #[error("product polynomial is not symmetric")]
    NotSymmetric,
}
