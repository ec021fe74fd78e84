use crate::ncalgebra::AlgebraElement;
use crate::scalars::ScalarSeries;

use super::spec::{HopfError, HopfSpec};
use super::tensor::{tensor_multiply_in, TensorElement};

/// Residual of Delta([a, b]) = [Delta(a), Delta(b)] for one generator pair.
pub struct PairResidual {
    pub names: (String, String),
    pub residual: TensorElement,
}

impl PairResidual {
    pub fn pass(&self) -> bool {
        self.residual.is_zero()
    }
}

/// The coproduct must be an algebra morphism onto the bracket table.
pub fn check_coproduct_homomorphism(hs: &HopfSpec) -> Result<Vec<PairResidual>, HopfError> {
    let alg = hs.algebra();
    let mut out = Vec::new();
    for (lo, hi) in alg.pairs().collect::<Vec<_>>() {
        let lhs = hs.coproduct(alg.bracket(hi, lo))?;
        let rhs = hs.tensor_commutator(
            &hs.coproduct(&alg.generator(hi))?,
            &hs.coproduct(&alg.generator(lo))?,
        )?;
        out.push(PairResidual {
            names: (
                alg.generator_names()[hi].clone(),
                alg.generator_names()[lo].clone(),
            ),
            residual: &lhs - &rhs,
        });
    }
    Ok(out)
}

/// Residual of one generator under a coalgebra axiom stated on tensors.
pub struct GeneratorTensorResidual {
    pub name: String,
    pub residual: TensorElement,
}

impl GeneratorTensorResidual {
    pub fn pass(&self) -> bool {
        self.residual.is_zero()
    }
}

/// (Delta (x) id) Delta = (id (x) Delta) Delta on every generator.
pub fn check_coassociativity(hs: &HopfSpec) -> Result<Vec<GeneratorTensorResidual>, HopfError> {
    let mut out = Vec::new();
    for rank in 0..hs.ngens() {
        let d = hs.coproduct_of_rank(rank);
        let left = hs.coproduct_slot(d, 0)?;
        let right = hs.coproduct_slot(d, 1)?;
        out.push(GeneratorTensorResidual {
            name: hs.algebra().generator_names()[rank].clone(),
            residual: &left - &right,
        });
    }
    Ok(out)
}

/// Residuals of the two counit axioms on one generator.
pub struct CounitCheck {
    pub name: String,
    /// (counit (x) id) Delta(X) - X.
    pub left_residual: AlgebraElement,
    /// (id (x) counit) Delta(X) - X.
    pub right_residual: AlgebraElement,
}

impl CounitCheck {
    pub fn pass(&self) -> bool {
        self.left_residual.is_zero() && self.right_residual.is_zero()
    }
}

pub fn check_counit(hs: &HopfSpec) -> Vec<CounitCheck> {
    let mut out = Vec::new();
    for rank in 0..hs.ngens() {
        let g = hs.algebra().generator(rank);
        let d = hs.coproduct_of_rank(rank);
        let left = hs.counit_slot(d, 0).into_element();
        let right = hs.counit_slot(d, 1).into_element();
        out.push(CounitCheck {
            name: hs.algebra().generator_names()[rank].clone(),
            left_residual: &left - &g,
            right_residual: &right - &g,
        });
    }
    out
}

/// Residuals of the antipode axiom and its mirror on one generator.
pub struct AntipodeCheck {
    pub name: String,
    /// m(S (x) id) Delta(X) - counit(X) 1.
    pub left_residual: AlgebraElement,
    /// m(id (x) S) Delta(X) - counit(X) 1.
    pub right_residual: AlgebraElement,
}

impl AntipodeCheck {
    pub fn pass(&self) -> bool {
        self.left_residual.is_zero() && self.right_residual.is_zero()
    }
}

/// Verify both convolution axioms for the derived antipode. The left one
/// holds by construction of the solver; the mirror axiom is the actual
/// certification that S is a two-sided antipode.
pub fn check_antipode(hs: &HopfSpec) -> Result<Vec<AntipodeCheck>, HopfError> {
    let alg = hs.algebra();
    let n = hs.ngens();
    let order = hs.order();
    let mut out = Vec::new();
    for rank in 0..n {
        let mut left = AlgebraElement::zero(n, order);
        let mut right = AlgebraElement::zero(n, order);
        for (slots, c) in hs.coproduct_of_rank(rank).iter() {
            let u = AlgebraElement::from_term(slots[0].clone(), ScalarSeries::one(order));
            let v = AlgebraElement::from_term(slots[1].clone(), ScalarSeries::one(order));
            let su = hs.antipode(&u)?;
            let sv = hs.antipode(&v)?;
            left = &left + &alg.multiply(&su, &v)?.scale_series(c);
            right = &right + &alg.multiply(&u, &sv)?.scale_series(c);
        }
        let target = AlgebraElement::one(n, order).scale(hs.counit_of_rank(rank));
        out.push(AntipodeCheck {
            name: alg.generator_names()[rank].clone(),
            left_residual: &left - &target,
            right_residual: &right - &target,
        });
    }
    Ok(out)
}

/// Hopf-closure status of one generator of a candidate subalgebra.
pub struct HopfClosureItem {
    pub name: String,
    /// Coproduct terms escaping the span, when any (the witness).
    pub coproduct_witness: Option<TensorElement>,
    /// Display of the first antipode term escaping the span, when any.
    pub antipode_witness: Option<String>,
}

pub struct HopfClosureReport {
    pub subset: Vec<String>,
    /// Bracket-level closure (from the algebra layer).
    pub bracket_violation: Option<String>,
    pub items: Vec<HopfClosureItem>,
}

impl HopfClosureReport {
    /// True when brackets, coproducts and antipodes all stay in the span.
    pub fn is_hopf_subalgebra(&self) -> bool {
        self.bracket_violation.is_none()
            && self
                .items
                .iter()
                .all(|i| i.coproduct_witness.is_none() && i.antipode_witness.is_none())
    }
}

/// Decide whether the span of `subset` is a Hopf subalgebra, reporting the
/// first escaping coproduct terms as a witness when it is not.
pub fn check_hopf_subalgebra(
    hs: &HopfSpec,
    subset: &[String],
) -> Result<HopfClosureReport, HopfError> {
    let alg = hs.algebra();
    let closure = crate::ncalgebra::subalgebra_closure(alg, subset)?;
    let bracket_violation = closure.pairs.iter().find_map(|p| {
        p.violation
            .as_ref()
            .map(|v| format!("[{}, {}] contains {}", p.names.0, p.names.1, v))
    });
    let ranks: Vec<usize> = subset.iter().map(|n| alg.rank_of(n).unwrap()).collect();
    let mut items = Vec::new();
    for (&rank, name) in ranks.iter().zip(subset) {
        let escaping = hs.coproduct_of_rank(rank).terms_outside(&ranks);
        let coproduct_witness = (!escaping.is_zero()).then_some(escaping);
        let antipode_witness = hs.antipode_table()?[rank]
            .first_term_outside(&ranks)
            .map(|(m, c)| format!("{} {}", c, m.display(alg.generator_names())));
        items.push(HopfClosureItem {
            name: name.clone(),
            coproduct_witness,
            antipode_witness,
        });
    }
    Ok(HopfClosureReport { subset: subset.to_vec(), bracket_violation, items })
}

/// Residual of the cocommutator coboundary identity for one generator:
/// the tau-linear band of (Delta - Delta_op)(X) must equal the classical
/// tensor bracket [X (x) 1 + 1 (x) X, r/tau].
pub fn check_cocommutator_coboundary(
    hs: &HopfSpec,
) -> Result<Vec<GeneratorTensorResidual>, HopfError> {
    let (a, b) = hs
        .rmatrix_pair()
        .ok_or_else(|| HopfError::NoRMatrix(hs.algebra().name().to_string()))?;
    let classical = hs.algebra().tau_zero("classical");
    let order = hs.order();
    let r_lin = &TensorElement::pure(&[&classical.generator(a), &classical.generator(b)])
        - &TensorElement::pure(&[&classical.generator(b), &classical.generator(a)]);
    let mut out = Vec::new();
    for rank in 0..hs.ngens() {
        let d = hs.coproduct_of_rank(rank);
        let cocomm = &d.clone() - &d.flip();
        let lhs = cocomm.map_coeffs(|c| ScalarSeries::constant(c.coeff(1, 0), order));
        let x = TensorElement::pure(&[&classical.generator(rank), &classical.one()]);
        let x2 = TensorElement::pure(&[&classical.one(), &classical.generator(rank)]);
        let emb = &x + &x2;
        let fwd = tensor_multiply_in(classical.bracket_map(), &emb, &r_lin)?;
        let bwd = tensor_multiply_in(classical.bracket_map(), &r_lin, &emb)?;
        let rhs = &fwd - &bwd;
        out.push(GeneratorTensorResidual {
            name: hs.algebra().generator_names()[rank].clone(),
            residual: &lhs - &rhs,
        });
    }
    Ok(out)
}
