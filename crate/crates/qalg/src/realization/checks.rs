use super::functions::{apply, PolynomialFunction};
use super::operator::PhaseSpaceOperator;
use super::tables::{realize, symmetry_cofactor, wave_operator, RealizationKind};
use super::RealizationError;
use crate::ncalgebra::{AlgebraElement, AlgebraSpec};
use crate::scalars::Rational;

/// Push an abstract element through the operator model: each word maps
/// to the product of its letters' operators, coefficients carry over.
pub fn realize_element(
    spec: &AlgebraSpec,
    kind: RealizationKind,
    elem: &AlgebraElement,
) -> Result<PhaseSpaceOperator, RealizationError> {
    let order = elem.order();
    let mut out = PhaseSpaceOperator::zero(order);
    for (m, coeff) in elem.iter() {
        let mut word = PhaseSpaceOperator::one(order);
        for rank in m.letters() {
            let name = &spec.generator_names()[rank];
            let op = realize(kind, name, order)
                .ok_or_else(|| RealizationError::UnknownGenerator(name.clone()))?;
            word = word.multiply(&op);
        }
        out = &out + &word.scale_series(coeff);
    }
    Ok(out)
}

/// One bracket relation compared in the operator model.
#[derive(Clone, Debug)]
pub struct RealizationPairCheck {
    pub names: (String, String),
    pub residual: PhaseSpaceOperator,
}

impl RealizationPairCheck {
    pub fn passed(&self) -> bool {
        self.residual.is_zero()
    }
}

/// For every stored bracket [g_hi, g_lo] check the operator commutator
/// reproduces the realized right-hand side.
pub fn check_realization(
    spec: &AlgebraSpec,
    kind: RealizationKind,
) -> Result<Vec<RealizationPairCheck>, RealizationError> {
    let order = spec.order();
    let names = spec.generator_names();
    let mut out = Vec::new();
    for (lo, hi) in spec.pairs() {
        let op_hi = realize(kind, &names[hi], order)
            .ok_or_else(|| RealizationError::UnknownGenerator(names[hi].clone()))?;
        let op_lo = realize(kind, &names[lo], order)
            .ok_or_else(|| RealizationError::UnknownGenerator(names[lo].clone()))?;
        let rhs = realize_element(spec, kind, spec.bracket(hi, lo))?;
        let residual = &op_hi.commutator(&op_lo) - &rhs;
        out.push(RealizationPairCheck { names: (names[hi].clone(), names[lo].clone()), residual });
    }
    Ok(out)
}

/// One generator's symmetry certificate [E, X] - L_X E.
#[derive(Clone, Debug)]
pub struct SymmetryCheck {
    pub name: String,
    pub residual: PhaseSpaceOperator,
}

impl SymmetryCheck {
    pub fn passed(&self) -> bool {
        self.residual.is_zero()
    }
}

/// Check every generator normalizes the wave operator with its stored
/// left cofactor, so each one maps solutions to solutions.
pub fn check_symmetry(
    kind: RealizationKind,
    names: &[String],
    order: u32,
) -> Result<Vec<SymmetryCheck>, RealizationError> {
    let e = wave_operator(kind, order);
    let mut out = Vec::new();
    for name in names {
        let op = realize(kind, name, order)
            .ok_or_else(|| RealizationError::UnknownGenerator(name.clone()))?;
        let cof = symmetry_cofactor(kind, name, order)
            .ok_or_else(|| RealizationError::UnknownGenerator(name.clone()))?;
        let residual = &e.commutator(&op) - &cof.multiply(&e);
        out.push(SymmetryCheck { name: name.clone(), residual });
    }
    Ok(out)
}

/// E f for the model's wave operator, at the function's own order.
pub fn wave_residual(
    kind: RealizationKind,
    f: &PolynomialFunction,
) -> Result<PolynomialFunction, RealizationError> {
    apply(&wave_operator(kind, f.order()), f)
}

/// Polynomial solutions of both the continuous and the lattice wave
/// equation, used as seeds for the transport checks.
pub fn seed_solutions(order: u32) -> Vec<(&'static str, PolynomialFunction)> {
    let x = PolynomialFunction::x(order);
    let t = PolynomialFunction::t(order);
    vec![
        ("1", PolynomialFunction::one(order)),
        ("x", x.clone()),
        ("t", t.clone()),
        ("x t", PolynomialFunction::monomial(1, 1, Rational::one(), order)),
        ("x^2 + t^2", &x.multiply(&x) + &t.multiply(&t)),
    ]
}

/// One (solution, generator) transport: the wave residual of the image.
#[derive(Clone, Debug)]
pub struct TransportCheck {
    pub solution: String,
    pub generator: String,
    pub residual: PolynomialFunction,
}

impl TransportCheck {
    pub fn passed(&self) -> bool {
        self.residual.is_zero()
    }
}

/// Transported images reach t-degree 3 (seeds go up to t^2, one
/// generator adds at most one), and shift series act faithfully only up
/// to their truncation order.
const TRANSPORT_MIN_ORDER: u32 = 3;

/// Push each seed solution through each generator and confirm the image
/// still solves the wave equation. The seeds themselves are verified to
/// be solutions first. Runs at tau-order 3 even when asked for less,
/// since a residual that vanishes there vanishes at every coarser
/// truncation too.
pub fn check_solution_transport(
    kind: RealizationKind,
    names: &[String],
    order: u32,
) -> Result<Vec<TransportCheck>, RealizationError> {
    let order = order.max(TRANSPORT_MIN_ORDER);
    let e = wave_operator(kind, order);
    let mut out = Vec::new();
    for (label, f) in seed_solutions(order) {
        let seed_residual = apply(&e, &f)?;
        out.push(TransportCheck {
            solution: label.to_string(),
            generator: "(seed)".to_string(),
            residual: seed_residual,
        });
        for name in names {
            let op = realize(kind, name, order)
                .ok_or_else(|| RealizationError::UnknownGenerator(name.clone()))?;
            let image = apply(&op, &f)?;
            let residual = apply(&e, &image)?;
            out.push(TransportCheck {
                solution: label.to_string(),
                generator: name.clone(),
                residual,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalgebra::builtin;

    fn six_names() -> Vec<String> {
        ["D", "H", "P", "K", "C1", "C2"].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn classical_table_is_realized() {
        let spec = builtin::so22(3);
        let checks = check_realization(&spec, RealizationKind::Classical).unwrap();
        assert_eq!(checks.len(), 15);
        for c in checks {
            assert!(c.passed(), "[{}, {}] residual {:?}", c.names.0, c.names.1, c.residual);
        }
    }

    #[test]
    fn deformed_table_is_realized() {
        let spec = builtin::uso22(4);
        let checks = check_realization(&spec, RealizationKind::Deformed).unwrap();
        for c in checks {
            assert!(c.passed(), "[{}, {}] residual {:?}", c.names.0, c.names.1, c.residual);
        }
    }

    #[test]
    fn three_generator_restriction_is_realized() {
        let spec = builtin::usl2(3);
        let checks = check_realization(&spec, RealizationKind::Deformed).unwrap();
        assert_eq!(checks.len(), 3);
        for c in checks {
            assert!(c.passed(), "[{}, {}] residual {:?}", c.names.0, c.names.1, c.residual);
        }
    }

    #[test]
    fn wave_symmetry_cofactors() {
        for kind in [RealizationKind::Classical, RealizationKind::Deformed] {
            let checks = check_symmetry(kind, &six_names(), 4).unwrap();
            for c in checks {
                assert!(c.passed(), "{} cofactor ({}): {:?}", c.name, kind.label(), c.residual);
            }
        }
    }

    #[test]
    fn deformed_dilation_cofactor_is_undeformed() {
        // [E_tau, D] = -2 E_tau with no lattice correction; a corrupted
        // cofactor must be caught.
        let e = wave_operator(RealizationKind::Deformed, 3);
        let d = realize(RealizationKind::Deformed, "D", 3).unwrap();
        let bad = symmetry_cofactor(RealizationKind::Classical, "C1", 3).unwrap();
        let residual = &e.commutator(&d) - &bad.multiply(&e);
        assert!(!residual.is_zero());
    }

    #[test]
    fn quadratic_cone_solves_both_models() {
        for kind in [RealizationKind::Classical, RealizationKind::Deformed] {
            let f = seed_solutions(3).pop().unwrap().1;
            assert!(wave_residual(kind, &f).unwrap().is_zero());
        }
    }

    #[test]
    fn x_squared_is_not_a_solution() {
        let f = PolynomialFunction::monomial(2, 0, Rational::one(), 3);
        for kind in [RealizationKind::Classical, RealizationKind::Deformed] {
            let r = wave_residual(kind, &f).unwrap();
            assert_eq!(r, PolynomialFunction::monomial(0, 0, Rational::from_int(2), 3));
        }
    }

    #[test]
    fn solutions_transport_to_solutions() {
        for kind in [RealizationKind::Classical, RealizationKind::Deformed] {
            let checks = check_solution_transport(kind, &six_names(), 4).unwrap();
            assert_eq!(checks.len(), 5 * 7);
            for c in checks {
                assert!(
                    c.passed(),
                    "{} applied to {} ({}): {:?}",
                    c.generator,
                    c.solution,
                    kind.label(),
                    c.residual
                );
            }
        }
    }
}
