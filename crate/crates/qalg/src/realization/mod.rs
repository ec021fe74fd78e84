//! Differential-difference operator models on the (x, t) plane.
//!
//! The six abstract generators act on polynomials either as the
//! classical conformal vector fields or as deformed operators whose
//! time derivatives are discrete differences with lattice spacing tau.
//! Both models realize their bracket tables exactly and normalize the
//! corresponding wave operator, which is what makes the algebra a
//! symmetry of the (discrete) wave equation.

mod checks;
mod functions;
mod operator;
mod tables;

pub use checks::{
    check_realization, check_solution_transport, check_symmetry, realize_element, seed_solutions,
    wave_residual, RealizationPairCheck, SymmetryCheck, TransportCheck,
};
pub use functions::{apply, PolynomialFunction};
pub use operator::{OpMonomial, PhaseSpaceOperator};
pub use tables::{
    backward_difference, forward_difference, realize, symmetry_cofactor, time_shift,
    wave_operator, RealizationKind,
};

/// Failures specific to the operator models.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RealizationError {
    /// A shift series truncated at tau^order misses dt powers that a
    /// t-degree this high would feel.
    #[error("operator truncated at tau^{order} cannot act faithfully on t-degree {t_degree}")]
    TruncationTooCoarse { t_degree: u32, order: u32 },
    /// Generator name outside the six-generator table.
    #[error("no operator model for generator {0}")]
    UnknownGenerator(String),
    #[error(transparent)]
    Algebra(#[from] crate::ncalgebra::AlgebraError),
}
