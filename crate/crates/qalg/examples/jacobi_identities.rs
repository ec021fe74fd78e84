//! Certify the Jacobi identity for every generator triple of the four
//! built-in algebras, then corrupt one bracket and watch the residual
//! pinpoint the broken triple.

use qalg::ncalgebra::{builtin, check_jacobi, SpecBuilder};
use qalg::scalars::Rational;

fn main() {
    let order = 4;
    for spec in [
        builtin::so22(order),
        builtin::uso22(order),
        builtin::uiso21(order),
        builtin::usl2(order),
    ] {
        let triples = check_jacobi(&spec).expect("complete table");
        let failed = triples.iter().filter(|t| !t.pass()).count();
        println!(
            "{:8} {:2} triples, all residuals zero mod tau^{}: {}",
            spec.name(),
            triples.len(),
            order + 1,
            if failed == 0 { "yes" } else { "NO" }
        );
    }

    // Sabotage [K, P] with a spurious tau^2 H term: Jacobi catches it.
    let good = builtin::uso22(2);
    let names: Vec<String> = good.generator_names().to_vec();
    let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let mut b = SpecBuilder::new("tampered", &name_refs, 2).unwrap();
    let spur = b.gen("H").mul_tau_pow(2);
    for (lo, hi) in good.pairs() {
        let mut entry = good.bracket(hi, lo).clone();
        if (lo, hi) == (2, 3) {
            entry = &entry + &spur;
        }
        b.set_bracket(&names[hi], &names[lo], entry).unwrap();
    }
    let bad = b.build().unwrap();
    println!("\ntampered [K, P] (spurious tau^2 H term):");
    for t in check_jacobi(&bad).unwrap().iter().filter(|t| !t.pass()) {
        println!(
            "  ({}, {}, {}) residual: {}",
            t.names[0],
            t.names[1],
            t.names[2],
            t.residual.display(bad.generator_names())
        );
    }

    // The classical table is the tau = 0 shadow of the deformed one.
    let classical = builtin::uso22(3).tau_zero("so22");
    assert_eq!(classical, builtin::so22(3));
    println!("\ntau -> 0 of the deformed table equals the classical table");
    let minus_two = Rational::from_int(-2);
    assert_eq!(classical.bracket(5, 1), &classical.generator(3).scale(&minus_two));
}
