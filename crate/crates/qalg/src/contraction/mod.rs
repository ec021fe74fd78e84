//! Scaling limits of the deformed algebras.
//!
//! A contraction rescales each generator by a power of a parameter eps
//! (and optionally feeds a power of eps into tau), then sends eps to
//! zero. Applied to the curved six-generator table with the right scale
//! pattern it flattens the algebra into its kinematical limit while the
//! deformation survives; applied with all scales zero it recovers the
//! undeformed table. The classical Yang-Baxter machinery lives here too,
//! since it certifies which wedge directions admit such deformations in
//! the first place.

mod cybe;
mod map;

pub use cybe::{schouten_square, StructureConstants, TripleTensor, WedgePair};
pub use map::{contract_hopf, contract_spec, ContractionMap};

/// Failures while taking a scaling limit.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ContractionError {
    /// A negative eps power survives to the limit.
    #[error("contraction of {context} diverges: {detail}")]
    Diverges { context: String, detail: String },
    /// The scale vector does not match the generator count.
    #[error("scale vector has {got} entries for {expected} generators")]
    ScaleCount { expected: usize, got: usize },
    /// Yang-Baxter analysis needs a parameter-free linear table.
    #[error("bracket [{a}, {b}] is not a constant linear combination of generators: {detail}")]
    NotLinear { a: String, b: String, detail: String },
    #[error(transparent)]
    Algebra(#[from] crate::ncalgebra::AlgebraError),
    #[error(transparent)]
    Hopf(#[from] crate::hopf::HopfError),
}
