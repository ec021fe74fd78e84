//! Hopf-algebra layer: tensor powers of the enveloping algebra, coproduct
//! tables, counits, derived antipodes, and the universal R-matrix checks.

mod antipode;
pub mod builtin;
mod checks;
mod rmatrix;
mod spec;
mod tensor;

pub use checks::{
    check_antipode, check_coassociativity, check_cocommutator_coboundary,
    check_coproduct_homomorphism, check_counit, check_hopf_subalgebra, AntipodeCheck,
    CounitCheck, GeneratorTensorResidual, HopfClosureItem, HopfClosureReport, PairResidual,
};
pub use rmatrix::{check_intertwining, check_qybe, rmatrix, IntertwiningCheck};
pub use spec::{HopfError, HopfSpec};
pub use tensor::TensorElement;

