pub mod linalg;
pub mod lattice;
pub mod curves;
pub mod tensor;
pub mod higgs;
pub mod l2;
pub mod motive;
pub mod verify;
