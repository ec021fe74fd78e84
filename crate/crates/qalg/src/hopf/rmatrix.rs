use crate::scalars::Rational;

use super::spec::{HopfError, HopfSpec};
use super::tensor::TensorElement;

/// The universal R-matrix `exp(tau g_a (x) g_b) exp(-tau g_b (x) g_a)`
/// for the structure's declared pair `(a, b)`; for the built-in deformation
/// that reads exp(tau H (x) D) exp(-tau D (x) H).
pub fn rmatrix(hs: &HopfSpec) -> Result<TensorElement, HopfError> {
    let (a, b) = hs
        .rmatrix_pair()
        .ok_or_else(|| HopfError::NoRMatrix(hs.algebra().name().to_string()))?;
    let ga = hs.algebra().generator(a);
    let gb = hs.algebra().generator(b);
    let pos = TensorElement::pure(&[&ga, &gb]).mul_tau_pow(1);
    let neg = TensorElement::pure(&[&gb, &ga]).mul_tau_pow(1).scale(&Rational::from_int(-1));
    let left = hs.tensor_exp(&pos)?;
    let right = hs.tensor_exp(&neg)?;
    hs.tensor_multiply(&left, &right)
}

pub struct IntertwiningCheck {
    pub name: String,
    /// R Delta(X) - Delta_op(X) R.
    pub residual: TensorElement,
}

impl IntertwiningCheck {
    pub fn pass(&self) -> bool {
        self.residual.is_zero()
    }
}

/// The R-matrix must conjugate the coproduct into its opposite on every
/// generator.
pub fn check_intertwining(hs: &HopfSpec) -> Result<Vec<IntertwiningCheck>, HopfError> {
    let r = rmatrix(hs)?;
    let mut out = Vec::new();
    for rank in 0..hs.ngens() {
        let g = hs.algebra().generator(rank);
        let lhs = hs.tensor_multiply(&r, &hs.coproduct(&g)?)?;
        let rhs = hs.tensor_multiply(&hs.coproduct_op(&g)?, &r)?;
        out.push(IntertwiningCheck {
            name: hs.algebra().generator_names()[rank].clone(),
            residual: &lhs - &rhs,
        });
    }
    Ok(out)
}

/// Quantum Yang-Baxter residual R12 R13 R23 - R23 R13 R12 in the tensor
/// cube; zero means R solves the equation at the working truncation.
pub fn check_qybe(hs: &HopfSpec) -> Result<TensorElement, HopfError> {
    let r = rmatrix(hs)?;
    let r12 = r.lift((0, 1), 3);
    let r13 = r.lift((0, 2), 3);
    let r23 = r.lift((1, 2), 3);
    let lhs = hs.tensor_multiply(&hs.tensor_multiply(&r12, &r13)?, &r23)?;
    let rhs = hs.tensor_multiply(&hs.tensor_multiply(&r23, &r13)?, &r12)?;
    Ok(&lhs - &rhs)
}
