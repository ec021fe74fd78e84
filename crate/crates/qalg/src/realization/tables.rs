use super::operator::{OpMonomial, PhaseSpaceOperator};
use crate::scalars::{Rational, ScalarSeries};

/// Which differential-operator model of the six-generator conformal
/// algebra to use: the classical vector fields on the (x, t) plane, or
/// the deformed model where time derivatives become discrete
/// differences on a lattice of spacing tau.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RealizationKind {
    Classical,
    Deformed,
}

impl RealizationKind {
    pub fn label(&self) -> &'static str {
        match self {
            RealizationKind::Classical => "classical",
            RealizationKind::Deformed => "deformed",
        }
    }
}

fn term(x: u32, t: u32, dx: u32, dt: u32, c: i64, order: u32) -> PhaseSpaceOperator {
    PhaseSpaceOperator::from_term(
        OpMonomial { x, t, dx, dt },
        ScalarSeries::constant(Rational::from_int(c), order),
    )
}

/// e^{alpha tau dt} expanded through tau^order.
pub fn time_shift(alpha: i64, order: u32) -> PhaseSpaceOperator {
    let mut out = PhaseSpaceOperator::zero(order);
    let mut c = Rational::one();
    for k in 0..=order {
        if k > 0 {
            c = &(&c * &Rational::from_int(alpha)) * &Rational::new(1, k as i64);
        }
        out.add_term(
            OpMonomial { dt: k, ..OpMonomial::UNIT },
            ScalarSeries::monomial(k, 0, c.clone(), order),
        );
    }
    out
}

/// Forward discrete time derivative (e^{tau dt} - 1)/tau. The tau^k
/// band carries dt^{k+1}, so terms up to dt^{order+1} are present and
/// the action on polynomials of t-degree <= order is exact.
pub fn forward_difference(order: u32) -> PhaseSpaceOperator {
    let mut out = PhaseSpaceOperator::zero(order);
    for k in 1..=order + 1 {
        out.add_term(
            OpMonomial { dt: k, ..OpMonomial::UNIT },
            ScalarSeries::monomial(k - 1, 0, Rational::inv_factorial(k), order),
        );
    }
    out
}

/// Backward discrete time derivative (1 - e^{-tau dt})/tau.
pub fn backward_difference(order: u32) -> PhaseSpaceOperator {
    let mut out = PhaseSpaceOperator::zero(order);
    for k in 1..=order + 1 {
        let mut c = Rational::inv_factorial(k);
        if k % 2 == 0 {
            c = -&c;
        }
        out.add_term(
            OpMonomial { dt: k, ..OpMonomial::UNIT },
            ScalarSeries::monomial(k - 1, 0, c, order),
        );
    }
    out
}

/// The operator assigned to a generator name, or None for a name
/// outside the six-generator table.
pub fn realize(kind: RealizationKind, name: &str, order: u32) -> Option<PhaseSpaceOperator> {
    let op = match kind {
        RealizationKind::Classical => match name {
            "H" => term(0, 0, 0, 1, 1, order),
            "P" => term(0, 0, 1, 0, 1, order),
            "K" => &term(0, 1, 1, 0, -1, order) + &term(1, 0, 0, 1, -1, order),
            "D" => &term(1, 0, 1, 0, -1, order) + &term(0, 1, 0, 1, -1, order),
            "C1" => {
                let sq_dt = &term(2, 0, 0, 1, 1, order) + &term(0, 2, 0, 1, 1, order);
                &sq_dt + &term(1, 1, 1, 0, 2, order)
            }
            "C2" => {
                let sq_dx = &term(2, 0, 1, 0, -1, order) + &term(0, 2, 1, 0, -1, order);
                &sq_dx + &term(1, 1, 0, 1, -2, order)
            }
            _ => return None,
        },
        RealizationKind::Deformed => {
            let x = PhaseSpaceOperator::coordinate_x(order);
            let t = PhaseSpaceOperator::coordinate_t(order);
            let dx = PhaseSpaceOperator::derivative_x(order);
            let fwd = forward_difference(order);
            let bwd = backward_difference(order);
            match name {
                "H" => term(0, 0, 0, 1, 1, order),
                "P" => term(0, 0, 1, 0, 1, order),
                "K" => {
                    let drift = t.multiply(&time_shift(-1, order)).multiply(&dx);
                    &(-&x.multiply(&fwd)) - &drift
                }
                "D" => &(-&x.multiply(&dx)) - &t.multiply(&bwd),
                "C1" => {
                    let sq = &x.multiply(&x) + &t.multiply(&t).multiply(&time_shift(-1, order));
                    let core = &sq.multiply(&fwd) + &term(1, 1, 1, 0, 2, order);
                    let tail = &term(1, 0, 1, 0, 1, order) + &term(2, 0, 2, 0, 1, order);
                    &core + &tail.mul_tau_pow(1)
                }
                "C2" => {
                    let sq = &x.multiply(&x) + &t.multiply(&t).multiply(&time_shift(-2, order));
                    let core =
                        &(-&sq.multiply(&dx)) - &term(1, 1, 0, 0, 2, order).multiply(&bwd);
                    let tail = t.multiply(&time_shift(-2, order)).multiply(&dx);
                    &core + &tail.mul_tau_pow(1)
                }
                _ => return None,
            }
        }
    };
    Some(op)
}

/// The wave operator whose kernel the algebra acts on: dx^2 - dt^2
/// classically, dx^2 minus the squared forward difference on the
/// lattice.
pub fn wave_operator(kind: RealizationKind, order: u32) -> PhaseSpaceOperator {
    let dx2 = term(0, 0, 2, 0, 1, order);
    match kind {
        RealizationKind::Classical => &dx2 - &term(0, 0, 0, 2, 1, order),
        RealizationKind::Deformed => {
            let fwd = forward_difference(order);
            &dx2 - &fwd.multiply(&fwd)
        }
    }
}

/// Left cofactor L in [E, X] = L E certifying X maps solutions of
/// E f = 0 to solutions.
pub fn symmetry_cofactor(
    kind: RealizationKind,
    name: &str,
    order: u32,
) -> Option<PhaseSpaceOperator> {
    let op = match name {
        "H" | "P" | "K" => PhaseSpaceOperator::zero(order),
        "D" => term(0, 0, 0, 0, -2, order),
        "C1" => match kind {
            RealizationKind::Classical => term(0, 1, 0, 0, 4, order),
            RealizationKind::Deformed => {
                let lattice = &term(0, 0, 0, 0, 4, order) + &term(1, 0, 1, 0, 4, order);
                &term(0, 1, 0, 0, 4, order) + &lattice.mul_tau_pow(1)
            }
        },
        "C2" => term(1, 0, 0, 0, -4, order),
        _ => return None,
    };
    Some(op)
}
