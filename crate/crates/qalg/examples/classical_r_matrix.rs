//! The first-order shadow of the quantum structure: r = -tau D wedge H
//! solves the classical Yang-Baxter equation over the classical bracket
//! table (its Schouten square vanishes exactly), while other wedges do
//! not. The cocommutator read off from Delta - Delta_op is exactly the
//! coboundary of r.

use qalg::contraction::{schouten_square, StructureConstants, WedgePair};
use qalg::hopf::{builtin as hopf_builtin, check_cocommutator_coboundary};
use qalg::ncalgebra::builtin;

fn main() {
    let spec = builtin::so22(1);
    let names = spec.generator_names();
    let f = StructureConstants::extract(&spec).unwrap();

    // Ranks: D = 0, H = 1, K = 3, C1 = 4.
    let candidates = [("D wedge H", WedgePair::simple(0, 1)), ("K wedge C1", WedgePair::simple(3, 4))];
    for (label, r) in candidates {
        let sq = schouten_square(&f, &r);
        if sq.is_zero() {
            println!("[[{label}, {label}]] = 0: classical r-matrix");
        } else {
            println!("[[{label}, {label}]] != 0, e.g. {}", sq.display(names));
        }
    }

    // delta(X) = (Delta - Delta_op)(X) at first order in tau equals
    // [X (x) 1 + 1 (x) X, D (x) H - H (x) D] for every generator.
    let hs = hopf_builtin::uso22(2);
    for c in check_cocommutator_coboundary(&hs).unwrap() {
        println!(
            "cocommutator of {} is the coboundary of D wedge H: {}",
            c.name,
            if c.pass() { "pass" } else { "FAIL" }
        );
        assert!(c.pass());
    }
}
