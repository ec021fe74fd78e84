//! The deformed algebra acts on a time lattice: t-derivatives become
//! discrete differences with spacing tau. The deformed wave operator
//! E_tau = dx^2 - ((e^{tau dt} - 1)/tau)^2 annihilates the same polynomial
//! solutions as the continuum one, and every realized generator maps
//! solutions to solutions because [E_tau, T(X)] = Lambda_X E_tau.

use qalg::realization::{
    apply, check_realization, check_solution_transport, check_symmetry, realize, seed_solutions,
    wave_operator, wave_residual, PolynomialFunction, RealizationKind,
};
use qalg::ncalgebra::builtin;

fn main() {
    let order = 4;
    let kind = RealizationKind::Deformed;

    println!("deformed generators as difference-differential operators:");
    for name in ["D", "H", "P", "K", "C1", "C2"] {
        let op = realize(kind, name, order).unwrap();
        println!("  T({name}) = {}", op.display());
    }
    println!("  E_tau  = {}\n", wave_operator(kind, order).display());

    // The operator table reproduces the abstract brackets exactly.
    let spec = builtin::uso22(order);
    let pairs = check_realization(&spec, kind).unwrap();
    assert!(pairs.iter().all(|p| p.passed()));
    println!("[T(X), T(Y)] = T([X, Y]) on all {} pairs", pairs.len());

    // ... and normalizes the wave operator with explicit cofactors.
    let names = spec.generator_names();
    let sym = check_symmetry(kind, names, order).unwrap();
    assert!(sym.iter().all(|s| s.passed()));
    println!("[E_tau, T(X)] = Lambda_X E_tau for all six generators\n");

    // The shift series inside T(D) sees the lattice spacing: its action
    // on t^2 picks up a tau correction the classical dilation lacks.
    let t2 = PolynomialFunction::t(order).multiply(&PolynomialFunction::t(order));
    let d = realize(kind, "D", order).unwrap();
    println!("T(D) t^2     = {}", apply(&d, &t2).unwrap().display());
    let k = realize(kind, "K", order).unwrap();
    println!("T(K) t       = {}", apply(&k, &PolynomialFunction::t(order)).unwrap().display());

    // Solutions of the discrete wave equation transport to solutions.
    println!();
    for (label, f) in seed_solutions(order) {
        let residual = wave_residual(kind, &f).unwrap();
        println!("E_tau({label}) = {}", residual.display());
        assert!(residual.is_zero());
    }
    let transported = check_solution_transport(kind, names, order).unwrap();
    assert!(transported.iter().all(|t| t.passed()));
    println!("all {} generator images of solutions are again solutions", transported.len());

    // x^2 is not a solution; the residual is exactly 2 for both kinds.
    let x2 = PolynomialFunction::x(order).multiply(&PolynomialFunction::x(order));
    for kind in [RealizationKind::Classical, RealizationKind::Deformed] {
        let r = wave_residual(kind, &x2).unwrap();
        println!("{} wave residual of x^2 = {}", kind.label(), r.display());
    }
}
