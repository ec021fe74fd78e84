//! Bracket tables of the built-in algebras, transcribed relation by
//! relation. Names follow the kinematical reading: D (dilation),
//! H (time translation), P (space translation), K (boost), C1 and C2
//! (the two conformal/special transformations). The PBW order is the
//! declaration order D < H < P < K < C1 < C2.

use std::collections::BTreeMap;

use crate::scalars::Rational;

use super::spec::{AlgebraSpec, SpecBuilder};

pub const GENERATORS: [&str; 6] = ["D", "H", "P", "K", "C1", "C2"];

/// Classical so(2,2) in the conformal basis of a (1+1) spacetime.
pub fn so22(order: u32) -> AlgebraSpec {
    let mut b = SpecBuilder::new("so22", &GENERATORS, order).expect("builtin");
    let two = Rational::from_int(2);
    let (d, h, p, k, c1, c2) =
        (b.gen("D"), b.gen("H"), b.gen("P"), b.gen("K"), b.gen("C1"), b.gen("C2"));

    b.set_bracket("K", "H", p.clone()).expect("builtin");
    b.set_bracket("K", "P", h.clone()).expect("builtin");
    b.set_bracket("H", "P", b.zero()).expect("builtin");
    b.set_bracket("D", "H", h.clone()).expect("builtin");
    b.set_bracket("D", "C1", -&c1).expect("builtin");
    b.set_bracket("H", "C1", d.scale(&-&two)).expect("builtin");
    b.set_bracket("D", "P", p.clone()).expect("builtin");
    b.set_bracket("D", "C2", -&c2).expect("builtin");
    b.set_bracket("P", "C2", d.scale(&two)).expect("builtin");
    b.set_bracket("K", "C1", c2.clone()).expect("builtin");
    b.set_bracket("K", "C2", c1.clone()).expect("builtin");
    b.set_bracket("C1", "C2", b.zero()).expect("builtin");
    b.set_bracket("H", "C2", k.scale(&two)).expect("builtin");
    b.set_bracket("P", "C1", k.scale(&-&two)).expect("builtin");
    b.set_bracket("K", "D", b.zero()).expect("builtin");

    b.build().expect("builtin")
}

/// The nonstandard quantum deformation of so(2,2), exact to the given
/// truncation order. Entries that multiply generators are transcribed in
/// dependency order so the partial table can normal order them.
pub fn uso22(order: u32) -> AlgebraSpec {
    let mut b = SpecBuilder::new("uso22", &GENERATORS, order).expect("builtin");
    let two = Rational::from_int(2);
    let (d, p, k, c1, c2) = (b.gen("D"), b.gen("P"), b.gen("K"), b.gen("C1"), b.gen("C2"));
    let one = b.one();
    let e_minus = b.exp_tau_gen(Rational::from_int(-1), "H");
    let e_plus = b.exp_tau_gen(Rational::one(), "H");
    // tau D^2 appears twice; D D is already ordered.
    let tau_d2 = b.mul(&d, &d).expect("builtin").mul_tau_pow(1);

    b.set_bracket("K", "H", b.mul(&e_minus, &p).expect("builtin")).expect("builtin");
    b.set_bracket("K", "P", (&e_plus - &one).div_tau().expect("builtin")).expect("builtin");
    b.set_bracket("H", "P", b.zero()).expect("builtin");
    b.set_bracket("D", "H", (&one - &e_minus).div_tau().expect("builtin")).expect("builtin");
    b.set_bracket("D", "C1", &(-&c1) + &tau_d2).expect("builtin");
    b.set_bracket("H", "C1", d.scale(&-&two)).expect("builtin");
    b.set_bracket("D", "P", p.clone()).expect("builtin");
    b.set_bracket("D", "C2", -&c2).expect("builtin");
    b.set_bracket("P", "C2", d.scale(&two)).expect("builtin");
    b.set_bracket("K", "C1", c2.clone()).expect("builtin");
    b.set_bracket("K", "C2", &c1 - &tau_d2).expect("builtin");
    b.set_bracket("K", "D", b.zero()).expect("builtin");
    // [H, C2] reorders K e^{-tau H} through the (H, K) entry set above.
    let hc2 = &b.mul(&e_minus, &k).expect("builtin") + &b.mul(&k, &e_minus).expect("builtin");
    b.set_bracket("H", "C2", hc2).expect("builtin");
    // [P, C1] reorders P D through the (D, P) entry set above.
    let anti_dp = &b.mul(&d, &p).expect("builtin") + &b.mul(&p, &d).expect("builtin");
    b.set_bracket("P", "C1", &k.scale(&-&two) - &anti_dp.mul_tau_pow(1)).expect("builtin");
    // [C1, C2] reorders C2 D through the (D, C2) entry set above.
    let anti_dc2 = &b.mul(&d, &c2).expect("builtin") + &b.mul(&c2, &d).expect("builtin");
    b.set_bracket("C1", "C2", -&anti_dc2.mul_tau_pow(1)).expect("builtin");

    b.build().expect("builtin")
}

/// The contracted quantum Poincaré algebra of (2+1) spacetime, i.e. the
/// eps -> 0 limit of [`uso22`] under the built-in contraction map.
pub fn uiso21(order: u32) -> AlgebraSpec {
    let mut b = SpecBuilder::new("uiso21", &GENERATORS, order).expect("builtin");
    let two = Rational::from_int(2);
    let (d, p, k, c1, c2) = (b.gen("D"), b.gen("P"), b.gen("K"), b.gen("C1"), b.gen("C2"));
    let one = b.one();
    let e_minus = b.exp_tau_gen(Rational::from_int(-1), "H");
    let e_plus = b.exp_tau_gen(Rational::one(), "H");

    b.set_bracket("K", "H", b.zero()).expect("builtin");
    b.set_bracket("K", "P", (&e_plus - &one).div_tau().expect("builtin")).expect("builtin");
    b.set_bracket("H", "P", b.zero()).expect("builtin");
    b.set_bracket("D", "H", (&one - &e_minus).div_tau().expect("builtin")).expect("builtin");
    b.set_bracket("D", "C1", -&c1).expect("builtin");
    b.set_bracket("H", "C1", b.zero()).expect("builtin");
    b.set_bracket("D", "P", p.clone()).expect("builtin");
    b.set_bracket("D", "C2", -&c2).expect("builtin");
    b.set_bracket("P", "C2", d.scale(&two)).expect("builtin");
    b.set_bracket("K", "C1", b.zero()).expect("builtin");
    b.set_bracket("K", "C2", c1.clone()).expect("builtin");
    b.set_bracket("C1", "C2", b.zero()).expect("builtin");
    b.set_bracket("H", "C2", b.mul(&e_minus, &k).expect("builtin").scale(&two))
        .expect("builtin");
    b.set_bracket("P", "C1", k.scale(&-&two)).expect("builtin");
    b.set_bracket("K", "D", b.zero()).expect("builtin");

    b.build().expect("builtin")
}

/// The deformed sl(2) line spanned by D, H, C1 inside [`uso22`]; it is the
/// Hopf-closed half of the algebra.
pub fn usl2(order: u32) -> AlgebraSpec {
    let mut b = SpecBuilder::new("usl2", &["D", "H", "C1"], order).expect("builtin");
    let two = Rational::from_int(2);
    let (d, c1) = (b.gen("D"), b.gen("C1"));
    let one = b.one();
    let e_minus = b.exp_tau_gen(Rational::from_int(-1), "H");
    let tau_d2 = b.mul(&d, &d).expect("builtin").mul_tau_pow(1);

    b.set_bracket("D", "H", (&one - &e_minus).div_tau().expect("builtin")).expect("builtin");
    b.set_bracket("D", "C1", &(-&c1) + &tau_d2).expect("builtin");
    b.set_bracket("H", "C1", d.scale(&-&two)).expect("builtin");

    b.build().expect("builtin")
}

/// The space-discretized variant of [`uso22`]: the same table with the
/// roles of time and space interchanged (H <-> P, C1 <-> C2). Ranks stay
/// fixed, so its PBW order reads D < P < H < K < C2 < C1.
pub fn uso22_swapped(order: u32) -> AlgebraSpec {
    let swaps: BTreeMap<String, String> = [("H", "P"), ("P", "H"), ("C1", "C2"), ("C2", "C1")]
        .into_iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    uso22(order).relabel_generators("uso22-swapped", &swaps).expect("builtin")
}
