//! Order-by-order antipode derivation. Nothing here assumes a closed form:
//! starting from the classical seed S(X) = -X, each sweep cancels the
//! lowest surviving tau band of the convolution residual
//! m(S (x) id) Delta(X) - counit(X) 1 by dividing out the invertible
//! cofactor that multiplies the X (x) g term of the coproduct.

use crate::ncalgebra::{AlgebraElement, AlgebraSpec, Monomial};
use crate::scalars::ScalarSeries;

use super::spec::{HopfError, HopfSpec};

pub(crate) fn derive(hs: &HopfSpec) -> Result<Vec<AlgebraElement>, HopfError> {
    let alg = hs.algebra();
    let n = hs.ngens();
    let order = hs.order();
    let mut table: Vec<AlgebraElement> = (0..n).map(|r| -&alg.generator(r)).collect();

    // Cross-generator corrections always carry at least one extra tau
    // power, so each sweep clears one band; order+3 sweeps are generous.
    for _ in 0..=order + 2 {
        let mut all_zero = true;
        for r in 0..n {
            let residual = convolution_residual(hs, &table, r)?;
            if residual.is_zero() {
                continue;
            }
            all_zero = false;
            let cof = cofactor(hs, r);
            let inv = invert_unit(alg, &cof).map_err(|part| HopfError::CofactorNotInvertible {
                generator: alg.generator_names()[r].clone(),
                part,
            })?;
            let delta = alg.multiply(&residual, &inv)?;
            table[r] = &table[r] - &delta;
        }
        if all_zero {
            return Ok(table);
        }
    }

    for r in 0..n {
        let residual = convolution_residual(hs, &table, r)?;
        if !residual.is_zero() {
            return Err(HopfError::AntipodeDiverged {
                generator: alg.generator_names()[r].clone(),
                residual: residual.display(alg.generator_names()),
            });
        }
    }
    Ok(table)
}

/// m(S (x) id) Delta(g_r) - counit(g_r) 1 under the working S table.
fn convolution_residual(
    hs: &HopfSpec,
    table: &[AlgebraElement],
    r: usize,
) -> Result<AlgebraElement, HopfError> {
    let alg = hs.algebra();
    let n = hs.ngens();
    let order = hs.order();
    let mut acc = AlgebraElement::zero(n, order);
    for (slots, c) in hs.coproduct_of_rank(r).iter() {
        let mut s_part = AlgebraElement::one(n, order);
        for rank in slots[0].letters().into_iter().rev() {
            s_part = alg.multiply(&s_part, &table[rank])?;
        }
        let right = AlgebraElement::from_term(slots[1].clone(), ScalarSeries::one(order));
        let prod = alg.multiply(&s_part, &right)?;
        acc = &acc + &prod.scale_series(c);
    }
    let target = AlgebraElement::one(n, order).scale(hs.counit_of_rank(r));
    Ok(&acc - &target)
}

/// The element multiplying `g_r` from the right leg of its coproduct, i.e.
/// the sum of second slots over terms whose first slot is exactly g_r.
fn cofactor(hs: &HopfSpec, r: usize) -> AlgebraElement {
    let n = hs.ngens();
    let order = hs.order();
    let atom = Monomial::generator(r, n);
    let mut out = AlgebraElement::zero(n, order);
    for (slots, c) in hs.coproduct_of_rank(r).iter() {
        if slots[0] == atom {
            out.add_term(slots[1].clone(), c.clone());
        }
    }
    out
}

/// Invert `c0 (1 + nil)` where nil carries tau >= 1, via the geometric
/// series. Errors (with a display of the offending constant band) when the
/// tau^0 band is not a nonzero multiple of the unit.
fn invert_unit(alg: &AlgebraSpec, a: &AlgebraElement) -> Result<AlgebraElement, String> {
    let n = a.ngens();
    let order = a.order();
    let c0 = a.coefficient(&Monomial::unit(n)).coeff(0, 0);
    if c0.is_zero() {
        return Err(a.map_coeffs(|_, c| c.tau_zero_part()).display(alg.generator_names()));
    }
    let unit = a.scale(&c0.recip());
    let nil = &unit - &AlgebraElement::one(n, order);
    if nil.min_tau_order() == Some(0) {
        return Err(a.map_coeffs(|_, c| c.tau_zero_part()).display(alg.generator_names()));
    }
    let mut inv = AlgebraElement::one(n, order);
    let mut power = AlgebraElement::one(n, order);
    for k in 1..=order {
        power = match alg.multiply(&power, &nil) {
            Ok(p) => p,
            Err(e) => return Err(e.to_string()),
        };
        if power.is_zero() {
            break;
        }
        if k % 2 == 1 {
            inv = &inv - &power;
        } else {
            inv = &inv + &power;
        }
    }
    Ok(inv.scale(&c0.recip()))
}
