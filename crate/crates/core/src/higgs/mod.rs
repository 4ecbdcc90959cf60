//! Logarithmic Higgs complexes over the blown-up surface: construction from
//! the uniformizing bundle, reduction to zero-differential minimal models, and
//! hypercohomology bookkeeping against the axiom registry.

pub mod bundle;
pub mod cohom;
pub mod complex;
pub mod fiber;
pub mod monomial;

use thiserror::Error;

pub use bundle::{GradedPiece, HiggsBundle, ThetaEntry};
pub use cohom::{hypercoh, l2_refine, CohTerm, HyperCoh, L2Refinement, Located, Verdict};
pub use complex::{build_complex, reduce, reduce_all_orders, EntryLabel, HComplex, Summand};
pub use fiber::{HiggsFiber, HwVector};
pub use monomial::BundleMonomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HiggsError {
    #[error("theta wedge theta is not zero")]
    SquareNotZero,
    #[error("contracting {src} -> {tgt} in degree {degree} needs a nonzero correction term")]
    NonzeroCorrection { degree: usize, src: String, tgt: String },
    #[error("differential entry {src} -> {tgt} in degree {degree} survives reduction")]
    ResidualDifferential { degree: usize, src: String, tgt: String },
    #[error("complex still has nonzero differentials")]
    NotReduced,
    #[error("symmetric power must be at least 1, got {0}")]
    InvalidPower(usize),
}
