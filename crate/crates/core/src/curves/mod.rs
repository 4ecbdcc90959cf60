//! Elliptic-curve arithmetic over `Q(i)`, line-bundle cohomology on P¹ and
//! elliptic curves, and the registry of imported vanishing theorems.

pub mod axioms;
pub mod coh;
pub mod elliptic;
pub mod gaussian;

pub use axioms::{Axiom, AxiomRegistry, ChaseError};
pub use coh::{
    chase_h0_bound, h_elliptic, h_p1, psplit_sym, psplit_tensor, psplit_wedge, restriction_catalog,
    twisted_omega1_chase, ChaseResult, CohDims, EllBundle, PSplit,
};
pub use elliptic::{ec_add, ec_mul, EllipticPoint};
pub use gaussian::GaussianRational;
