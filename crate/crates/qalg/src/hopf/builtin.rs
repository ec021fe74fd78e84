//! Coproduct tables of the built-in algebras. H stays primitive through
//! the deformation; everything else picks up exponential dressings, and
//! the boost/second-conformal coproducts acquire genuinely nonabelian
//! tails. The universal R-matrix pair is (H, D) throughout.

use std::collections::BTreeMap;

use crate::ncalgebra::{builtin as alg, AlgebraElement, AlgebraSpec};
use crate::scalars::Rational;

use super::spec::HopfSpec;
use super::tensor::TensorElement;

fn primitive(x: &AlgebraElement, one: &AlgebraElement) -> TensorElement {
    &TensorElement::pure(&[one, x]) + &TensorElement::pure(&[x, one])
}

fn right_dressed(x: &AlgebraElement, dress: &AlgebraElement, one: &AlgebraElement) -> TensorElement {
    &TensorElement::pure(&[one, x]) + &TensorElement::pure(&[x, dress])
}

fn exp_tau_h(spec: &AlgebraSpec, scale: i64) -> AlgebraElement {
    let h = spec.generator_by_name("H").expect("builtin");
    spec.exp_element(&h.mul_tau_pow(1).scale(&Rational::from_int(scale)))
        .expect("builtin")
}

pub fn uso22(order: u32) -> HopfSpec {
    let spec = alg::uso22(order);
    let one = spec.one();
    let (d, h, p, k, c1, c2) = (
        spec.generator(0),
        spec.generator(1),
        spec.generator(2),
        spec.generator(3),
        spec.generator(4),
        spec.generator(5),
    );
    let e_plus = exp_tau_h(&spec, 1);
    let e_minus = exp_tau_h(&spec, -1);
    let e_minus2 = exp_tau_h(&spec, -2);

    let d_d = right_dressed(&d, &e_minus, &one);
    let d_h = primitive(&h, &one);
    let d_p = right_dressed(&p, &e_plus, &one);
    let d_k = &primitive(&k, &one)
        - &TensorElement::pure(&[&d, &spec.multiply(&e_minus, &p).expect("builtin")])
            .mul_tau_pow(1);
    let d_c1 = right_dressed(&c1, &e_minus, &one);
    // D(D + 1) multiplies the deepest tail of the second conformal leg.
    let dd1 = &spec.multiply(&d, &d).expect("builtin") + &d;
    let d_c2 = &(&right_dressed(&c2, &e_minus, &one)
        + &TensorElement::pure(&[&d, &spec.multiply(&e_minus, &k).expect("builtin")])
            .mul_tau_pow(1)
            .scale(&Rational::from_int(2)))
        - &TensorElement::pure(&[&dd1, &spec.multiply(&e_minus2, &p).expect("builtin")])
            .mul_tau_pow(2);

    HopfSpec::new(
        spec,
        vec![d_d, d_h, d_p, d_k, d_c1, d_c2],
        vec![Rational::zero(); 6],
        Some((1, 0)),
    )
    .expect("builtin")
}

pub fn uiso21(order: u32) -> HopfSpec {
    let spec = alg::uiso21(order);
    let one = spec.one();
    let (d, h, p, k, c1, c2) = (
        spec.generator(0),
        spec.generator(1),
        spec.generator(2),
        spec.generator(3),
        spec.generator(4),
        spec.generator(5),
    );
    let e_plus = exp_tau_h(&spec, 1);
    let e_minus = exp_tau_h(&spec, -1);

    let d_d = right_dressed(&d, &e_minus, &one);
    let d_h = primitive(&h, &one);
    let d_p = right_dressed(&p, &e_plus, &one);
    // The boost turns primitive in the contracted algebra.
    let d_k = primitive(&k, &one);
    let d_c1 = right_dressed(&c1, &e_minus, &one);
    let d_c2 = &right_dressed(&c2, &e_minus, &one)
        + &TensorElement::pure(&[&d, &spec.multiply(&e_minus, &k).expect("builtin")])
            .mul_tau_pow(1)
            .scale(&Rational::from_int(2));

    HopfSpec::new(
        spec,
        vec![d_d, d_h, d_p, d_k, d_c1, d_c2],
        vec![Rational::zero(); 6],
        Some((1, 0)),
    )
    .expect("builtin")
}

pub fn usl2(order: u32) -> HopfSpec {
    let spec = alg::usl2(order);
    let one = spec.one();
    let (d, h, c1) = (spec.generator(0), spec.generator(1), spec.generator(2));
    let e_minus = exp_tau_h(&spec, -1);

    let d_d = right_dressed(&d, &e_minus, &one);
    let d_h = primitive(&h, &one);
    let d_c1 = right_dressed(&c1, &e_minus, &one);

    HopfSpec::new(spec, vec![d_d, d_h, d_c1], vec![Rational::zero(); 3], Some((1, 0)))
        .expect("builtin")
}

pub fn uso22_swapped(order: u32) -> HopfSpec {
    let swaps: BTreeMap<String, String> = [("H", "P"), ("P", "H"), ("C1", "C2"), ("C2", "C1")]
        .into_iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    uso22(order).relabel("uso22-swapped", &swaps).expect("builtin")
}
