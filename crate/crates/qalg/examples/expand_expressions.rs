//! Expressions over the generators evaluate to normal-ordered elements
//! whose coefficients are rational tau-series, exact modulo the chosen
//! truncation. Division by tau is allowed whenever the numerator really
//! is divisible, which is how the bracket tables are written.

use qalg::ncalgebra::builtin;
use qalg::specdsl::{element_text, eval_expression, parse_expression};

fn main() {
    let spec = builtin::uso22(5);
    let hopf = qalg::hopf::builtin::uso22(5);
    let names = spec.generator_names();

    let demos = [
        "(exp(tau*H) - 1) / tau",
        "exp(-tau*H) * P",
        "K*P - P*K",
        "D^2 - (1/4) * (H*C1 + C1*H)",
        "K*C2 - C2*K + tau*D^2",
    ];
    for src in demos {
        let expr = parse_expression(src).unwrap();
        let value = eval_expression(&spec, &expr).unwrap();
        println!("{src}\n  = {}\n", element_text(&value, names));
    }

    // Products reorder into the fixed generator order; the corrections
    // the reordering produces are exactly the bracket table.
    let kp = eval_expression(&spec, &parse_expression("K*P").unwrap()).unwrap();
    let pk = eval_expression(&spec, &parse_expression("P*K").unwrap()).unwrap();
    let comm = &kp - &pk;
    assert_eq!(&comm, spec.bracket(3, 2));
    println!("K*P - P*K matches the stored [K, P]\n");

    // The antipode is an algebra anti-morphism: S(P) is a tau-series.
    let p = spec.generator(2);
    let sp = hopf.antipode(&p).unwrap();
    println!("S(P) = {}", element_text(&sp, names));
    let s2 = hopf.antipode(&sp).unwrap();
    println!("S(S(P)) = {}   (an involution here)\n", element_text(&s2, names));

    // tau -> 0 forgets the deformation band by band.
    let series = eval_expression(&spec, &parse_expression("D*H - H*D").unwrap()).unwrap();
    let flat = series.map_coeffs(|_, c| c.tau_zero_part());
    println!("D*H - H*D            = {}", element_text(&series, names));
    println!("D*H - H*D at tau = 0 = {}", flat.display(names));
}
