//! Local models of the uniformizing Higgs bundle near the boundary: monodromy
//! weight filtrations of the residues and the algebraic L² subcomplexes.

pub mod model;
pub mod module;
pub mod weight;

use thiserror::Error;

pub use model::{sym_local, uniformizing_local, vector_name, Divisor, LocalModel};
pub use module::{
    closed_form, l2_subcomplex, module_equal, theta_stable, Bidegree, ClosedForm, LocalL2Module, ModuleRow,
    DEFAULT_BOUND,
};
pub use weight::{verify_weight_filtration, weight_filtration, WeightFiltration};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum L2Error {
    #[error("operator is not nilpotent")]
    NotNilpotent,
    #[error("truncation bound {0} is below 2")]
    TruncationTooSmall(u32),
    #[error("symmetric power must be at least 1, got {0}")]
    InvalidPower(usize),
    #[error("residues do not commute")]
    NonCommuting,
    #[error("no published closed form for {0}")]
    NoClosedForm(String),
}
