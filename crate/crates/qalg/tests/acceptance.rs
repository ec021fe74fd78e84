//! End-to-end acceptance checks, one verdict line each. Run with
//! `cargo test --test acceptance -- --nocapture` to see every line.

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use qalg::contraction::{
    contract_hopf, contract_spec, schouten_square, ContractionError, ContractionMap,
    StructureConstants, WedgePair,
};
use qalg::hopf::{
    builtin as hopf, check_antipode, check_coassociativity, check_coproduct_homomorphism,
    check_counit, check_hopf_subalgebra, check_intertwining, check_qybe, rmatrix,
};
use qalg::ncalgebra::{builtin, check_jacobi};
use qalg::realization::{
    check_realization, check_solution_transport, check_symmetry, realize, seed_solutions,
    wave_residual, PhaseSpaceOperator, PolynomialFunction, RealizationKind,
};
use qalg::scalars::Rational;
use qalg::specdsl::{
    builtin_source, elaborate, eval_expression, parse, parse_expression, print_spec,
};

fn verdict(index: u32, label: &str, ok: bool, detail: &str) {
    if ok {
        println!("[{index:2}/10] {label}: pass");
    } else {
        println!("[{index:2}/10] {label}: FAIL ({detail})");
    }
    assert!(ok, "{label}: {detail}");
}

fn strs(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

#[test]
fn a01_jacobi_identities_vanish_mod_tau7() {
    let mut ok = true;
    let mut detail = String::new();
    for spec in [builtin::uso22(6), builtin::uiso21(6)] {
        let triples = check_jacobi(&spec).unwrap();
        assert_eq!(triples.len(), 20);
        for t in triples.iter().filter(|t| !t.pass()) {
            ok = false;
            detail = format!("{}: cyclic sum over {:?} is nonzero", spec.name(), t.names);
        }
    }
    verdict(1, "jacobi identities of both deformed algebras mod tau^7", ok, &detail);
}

#[test]
fn a02_hopf_axioms_hold_mod_tau7() {
    let mut ok = true;
    let mut detail = String::new();
    for hs in [hopf::uso22(6), hopf::uiso21(6)] {
        let name = hs.algebra().name().to_string();
        let homo = check_coproduct_homomorphism(&hs).unwrap();
        assert_eq!(homo.len(), 15);
        let coas = check_coassociativity(&hs).unwrap();
        assert_eq!(coas.len(), 6);
        for bad in homo.iter().filter(|p| !p.pass()) {
            ok = false;
            detail = format!("{name}: Delta is not a morphism on {:?}", bad.names);
        }
        for bad in coas.iter().filter(|g| !g.pass()) {
            ok = false;
            detail = format!("{name}: coassociativity fails on {}", bad.name);
        }
        for bad in check_counit(&hs).iter().filter(|c| !c.pass()) {
            ok = false;
            detail = format!("{name}: counit axiom fails on {}", bad.name);
        }
        for bad in check_antipode(&hs).unwrap().iter().filter(|a| !a.pass()) {
            ok = false;
            detail = format!("{name}: antipode axiom fails on {}", bad.name);
        }
    }
    verdict(2, "coproduct morphism, coassociativity, counit, antipode mod tau^7", ok, &detail);
}

#[test]
fn a03_rmatrix_intertwines_and_solves_qybe() {
    let mut ok = true;
    let mut detail = String::new();
    for hs in [hopf::uso22(6), hopf::uiso21(6)] {
        let name = hs.algebra().name().to_string();
        for bad in check_intertwining(&hs).unwrap().iter().filter(|c| !c.pass()) {
            ok = false;
            detail = format!("{name}: R fails to intertwine Delta({})", bad.name);
        }
    }
    // The tensor-cube computation is the expensive one; tau^5 suffices.
    for hs in [hopf::uso22(4), hopf::uiso21(4)] {
        let residual = check_qybe(&hs).unwrap();
        if !residual.is_zero() {
            ok = false;
            detail = format!("{}: R12 R13 R23 != R23 R13 R12", hs.algebra().name());
        }
    }
    verdict(3, "R-matrix intertwining mod tau^7 and Yang-Baxter mod tau^5", ok, &detail);
}

#[test]
fn a04_classical_r_matrix_solves_cybe() {
    // The deformation direction is -tau D wedge H; the tau prefactor
    // scales the Schouten square by tau^2, so vanishing of the bare
    // wedge square is the whole content. Finite computation, no
    // truncation enters.
    let spec = builtin::so22(0);
    let f = StructureConstants::extract(&spec).unwrap();
    let r = WedgePair(vec![(0, 1, -Rational::one())]);
    let square = schouten_square(&f, &r);
    let control = schouten_square(&f, &WedgePair::simple(3, 4));
    let ok = square.is_zero() && !control.is_zero();
    verdict(
        4,
        "Schouten square of -(D wedge H) is zero, generic wedge is not",
        ok,
        &square.display(spec.generator_names()),
    );
}

#[test]
fn a05_operator_models_realize_both_tables() {
    let mut ok = true;
    let mut detail = String::new();
    let cases = [
        (builtin::so22(0), RealizationKind::Classical),
        (builtin::uso22(6), RealizationKind::Deformed),
    ];
    for (spec, kind) in cases {
        let pairs = check_realization(&spec, kind).unwrap();
        assert_eq!(pairs.len(), 15);
        for bad in pairs.iter().filter(|p| !p.passed()) {
            ok = false;
            detail = format!("{} commutator [{}, {}] differs", kind.label(), bad.names.0, bad.names.1);
        }
        for bad in check_symmetry(kind, spec.generator_names(), spec.order())
            .unwrap()
            .iter()
            .filter(|s| !s.passed())
        {
            ok = false;
            detail = format!("{} wave-operator cofactor fails on {}", kind.label(), bad.name);
        }
    }
    verdict(5, "operator models reproduce brackets and normalize the wave operator", ok, &detail);
}

#[test]
fn a06_discrete_wave_equation_solutions() {
    let order = 6;
    let kind = RealizationKind::Deformed;
    let mut ok = true;
    let mut detail = String::new();
    for (label, f) in seed_solutions(order) {
        if !wave_residual(kind, &f).unwrap().is_zero() {
            ok = false;
            detail = format!("seed {label} is not annihilated");
        }
    }
    let transported =
        check_solution_transport(kind, builtin::uso22(order).generator_names(), order).unwrap();
    assert_eq!(transported.len(), 35);
    for bad in transported.iter().filter(|t| !t.passed()) {
        ok = false;
        detail = format!("image of {} under {} is not a solution", bad.solution, bad.generator);
    }
    let x = PolynomialFunction::x(order);
    let two = PolynomialFunction::monomial(0, 0, Rational::from_int(2), order);
    for kind in [RealizationKind::Classical, RealizationKind::Deformed] {
        let r = wave_residual(kind, &x.multiply(&x)).unwrap();
        if !(&r - &two).is_zero() {
            ok = false;
            detail = format!("{} residual of x^2 is {}, not 2", kind.label(), r.display());
        }
    }
    verdict(6, "lattice wave equation: solutions, transport, nonsolution residual", ok, &detail);
}

#[test]
fn a07_contraction_reaches_the_flat_algebra() {
    let order = 6;
    let src = hopf::uso22(order);
    let tgt = hopf::uiso21(order);
    let map = ContractionMap::poincare();
    let mut ok = true;
    let mut detail = String::new();

    match contract_spec(&map, src.algebra(), "uiso21") {
        Ok(limit) if &limit == tgt.algebra() => {}
        Ok(_) => {
            ok = false;
            detail = "contracted bracket table differs from the flat one".into();
        }
        Err(e) => {
            ok = false;
            detail = format!("bracket contraction failed: {e}");
        }
    }
    match contract_hopf(&map, &src, "uiso21") {
        Ok(limit) => {
            for r in 0..src.ngens() {
                if limit.coproduct_of_rank(r) != tgt.coproduct_of_rank(r) {
                    ok = false;
                    detail = format!("contracted coproduct {r} differs from the flat one");
                }
            }
        }
        Err(e) => {
            ok = false;
            detail = format!("coproduct contraction failed: {e}");
        }
    }
    let r_limit = map.contract_tensor(&rmatrix(&src).unwrap(), 0, "R").unwrap();
    if r_limit != rmatrix(&tgt).unwrap() {
        ok = false;
        detail = "contracted R-matrix differs from the flat one".into();
    }
    match contract_spec(&map.without_param_rescale(), src.algebra(), "broken") {
        Err(ContractionError::Diverges { .. }) => {}
        other => {
            ok = false;
            detail = format!("expected divergence without the tau rescale, got {other:?}");
        }
    }
    verdict(7, "rescaling limit lands on the flat algebra, diverges without it", ok, &detail);
}

#[test]
fn a08_hopf_subalgebra_structure() {
    let order = 6;
    let mut ok = true;
    let mut detail = String::new();
    for hs in [hopf::uso22(order), hopf::uiso21(order)] {
        let rep = check_hopf_subalgebra(&hs, &strs(&["D", "H", "C1"])).unwrap();
        if !rep.is_hopf_subalgebra() {
            ok = false;
            detail = format!("{{D, H, C1}} is not Hopf in {}", hs.algebra().name());
        }
    }

    // {H, P, K} closes under commutators but Delta(K) leaks the term
    // -tau D (x) e^{-tau H} P out of the span.
    let hs = hopf::uso22(order);
    let rep = check_hopf_subalgebra(&hs, &strs(&["H", "P", "K"])).unwrap();
    if rep.bracket_violation.is_some() || rep.is_hopf_subalgebra() {
        ok = false;
        detail = "{H, P, K} should close but fail the coproduct test".into();
    }
    let witness = rep
        .items
        .iter()
        .find(|i| i.name == "K")
        .and_then(|i| i.coproduct_witness.as_ref());
    let spec = hs.algebra();
    let minus_tau_d = spec.generator(0).mul_tau_pow(1).scale(&Rational::from_int(-1));
    let shifted_p = eval_expression(spec, &parse_expression("exp(-tau*H) * P").unwrap()).unwrap();
    let expected = qalg::hopf::TensorElement::pure(&[&minus_tau_d, &shifted_p]);
    match witness {
        Some(w) if *w == expected => {}
        Some(w) => {
            ok = false;
            detail = format!("witness is {}", w.display(spec.generator_names()));
        }
        None => {
            ok = false;
            detail = "no escaping coproduct term reported for K".into();
        }
    }
    verdict(8, "{D, H, C1} is Hopf; {H, P, K} closes but leaks -tau D (x) exp(-tau H) P", ok, &detail);
}

#[test]
fn a09_tau_zero_recovers_the_classical_structures() {
    let order = 6;
    let mut ok = builtin::uso22(order).tau_zero("so22") == builtin::so22(order);
    let mut detail = String::new();
    if !ok {
        detail = "tau = 0 bracket table differs from the classical one".into();
    }
    for name in ["D", "H", "P", "K", "C1", "C2"] {
        let deformed = realize(RealizationKind::Deformed, name, order).unwrap();
        let classical = realize(RealizationKind::Classical, name, order).unwrap();
        let mut flat = PhaseSpaceOperator::zero(order);
        for (m, c) in deformed.iter() {
            flat.add_term(*m, c.tau_zero_part());
        }
        if !(&flat - &classical).is_zero() {
            ok = false;
            detail = format!("tau = 0 part of the deformed {name} differs");
        }
    }
    verdict(9, "tau = 0 limits equal the classical table and realization", ok, &detail);
}

#[test]
fn a10_qalg_files_round_trip_and_parser_never_panics() {
    let order = 4;
    let mut ok = true;
    let mut detail = String::new();
    for name in ["so22", "uso22", "uiso21", "usl2"] {
        let src = builtin_source(name).unwrap();
        let first = elaborate(&parse(src).unwrap(), name, order).unwrap();
        let text = print_spec(&first.algebra, first.hopf.as_ref(), first.contraction.as_ref());
        match parse(&text).map(|doc| elaborate(&doc, name, order)) {
            Ok(Ok(second))
                if second.algebra == first.algebra
                    && second.hopf == first.hopf
                    && second.contraction == first.contraction => {}
            _ => {
                ok = false;
                detail = format!("{name} did not round-trip through the printer");
            }
        }
    }

    // Fuzz: arbitrary unicode and grammar-token soup must return errors,
    // never panic. TestRunner turns any panic into a failed case.
    let mut runner = TestRunner::new(Config { cases: 512, failure_persistence: None, ..Config::default() });
    let unicode = proptest::string::string_regex("\\PC{0,60}").unwrap();
    if let Err(e) = runner.run(&unicode, |s| {
        let _ = parse(&s);
        Ok(())
    }) {
        ok = false;
        detail = format!("parser panicked on unicode input: {e}");
    }
    let token = prop_oneof![
        Just("generators:"),
        Just("brackets:"),
        Just("coproducts:"),
        Just("contraction:"),
        Just("Delta("),
        Just("(x)"),
        Just("exp("),
        Just("tau"),
        Just("["),
        Just("]"),
        Just("("),
        Just(")"),
        Just("="),
        Just("+"),
        Just("-"),
        Just("*"),
        Just("/"),
        Just("^"),
        Just(","),
        Just("#"),
        Just("\n"),
        Just(" "),
        Just("D"),
        Just("H2"),
        Just("1"),
        Just("5/3"),
        Just("0"),
    ];
    let soup = proptest::collection::vec(token, 0..40).prop_map(|v| v.concat());
    let mut runner = TestRunner::new(Config { cases: 512, failure_persistence: None, ..Config::default() });
    if let Err(e) = runner.run(&soup, |s| {
        let _ = parse(&s);
        Ok(())
    }) {
        ok = false;
        detail = format!("parser panicked on token soup: {e}");
    }
    verdict(10, "built-in .qalg files round-trip; fuzzed parser never crashes", ok, &detail);
}
