use crate::contraction::ContractionMap;
use crate::hopf::{HopfSpec, TensorElement};
use crate::ncalgebra::{AlgebraElement, AlgebraSpec, Monomial};
use crate::scalars::Rational;

/// Render one series term `q tau^t` as expression syntax ("3/2 * tau^2",
/// "tau", "1", ...). The sign is handled by the caller.
fn factor_text(q: &Rational, t: u32) -> String {
    let q = q.abs();
    let mut parts = Vec::new();
    if !q.is_one() || t == 0 {
        if q.is_integer() {
            parts.push(q.to_string());
        } else {
            parts.push(format!("{}/{}", q.numer(), q.denom()));
        }
    }
    match t {
        0 => {}
        1 => parts.push("tau".into()),
        k => parts.push(format!("tau^{k}")),
    }
    parts.join(" * ")
}

fn monomial_text(m: &Monomial, names: &[String]) -> Option<String> {
    if m.is_unit() {
        return None;
    }
    let mut parts = Vec::new();
    for rank in m.support() {
        let e = m.exponent(rank);
        if e == 1 {
            parts.push(names[rank].clone());
        } else {
            parts.push(format!("{}^{}", names[rank], e));
        }
    }
    Some(parts.join(" * "))
}

fn push_signed(out: &mut String, negative: bool, body: String) {
    if out.is_empty() {
        if negative {
            out.push('-');
        }
    } else if negative {
        out.push_str(" - ");
    } else {
        out.push_str(" + ");
    }
    out.push_str(&body);
}

/// An element as re-parseable expression text, expanded term by term.
pub fn element_text(elem: &AlgebraElement, names: &[String]) -> String {
    let mut out = String::new();
    for (m, c) in elem.iter() {
        for (t, e, q) in c.iter() {
            assert_eq!(e, 0, "stored specs never carry the contraction parameter");
            let mut body = factor_text(q, t);
            if let Some(word) = monomial_text(m, names) {
                if body == "1" {
                    body = word;
                } else {
                    body = format!("{body} * {word}");
                }
            }
            push_signed(&mut out, q.is_negative(), body);
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// A two-slot tensor as coproduct expression text.
pub fn tensor_text(t: &TensorElement, names: &[String]) -> String {
    assert_eq!(t.arity(), 2, "coproduct printing is two-slot");
    let mut out = String::new();
    for (slots, c) in t.iter() {
        for (tp, e, q) in c.iter() {
            assert_eq!(e, 0, "stored specs never carry the contraction parameter");
            let mut left = factor_text(q, tp);
            if let Some(word) = monomial_text(&slots[0], names) {
                if left == "1" {
                    left = word;
                } else {
                    left = format!("{left} * {word}");
                }
            }
            let right = monomial_text(&slots[1], names).unwrap_or_else(|| "1".into());
            push_signed(&mut out, q.is_negative(), format!("{left} (x) {right}"));
        }
    }
    if out.is_empty() {
        "0 (x) 0".into()
    } else {
        out
    }
}

/// Emit a complete document that parses and elaborates back to the same
/// structures.
pub fn print_spec(
    algebra: &AlgebraSpec,
    hopf: Option<&HopfSpec>,
    contraction: Option<&ContractionMap>,
) -> String {
    let names = algebra.generator_names();
    let mut out = String::new();
    out.push_str(&format!("# {} (canonical form, order {})\n", algebra.name(), algebra.order()));
    out.push_str("generators: ");
    out.push_str(&names.join(", "));
    out.push('\n');
    out.push_str("\nbrackets:\n");
    for (lo, hi) in algebra.pairs() {
        out.push_str(&format!(
            "[{}, {}] = {}\n",
            names[hi],
            names[lo],
            element_text(algebra.bracket(hi, lo), names)
        ));
    }
    if let Some(h) = hopf {
        out.push_str("\ncoproducts:\n");
        for rank in 0..h.ngens() {
            out.push_str(&format!(
                "Delta({}) = {}\n",
                names[rank],
                tensor_text(h.coproduct_of_rank(rank), names)
            ));
        }
    }
    if let Some(map) = contraction {
        out.push_str("\ncontraction:\n");
        for (rank, k) in map.scales().iter().enumerate() {
            out.push_str(&format!("{}: {}\n", names[rank], k));
        }
        out.push_str(&format!("tau: {}\n", map.tau_power()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalgebra::builtin;

    #[test]
    fn element_text_is_expression_syntax() {
        let spec = builtin::uso22(2);
        let names = spec.generator_names();
        // [K, P] = H + tau/2 H^2 + tau^2/6 H^3
        let s = element_text(spec.bracket(3, 2), names);
        assert_eq!(s, "H + 1/2 * tau * H^2 + 1/6 * tau^2 * H^3");
    }

    #[test]
    fn zero_prints_as_zero() {
        let spec = builtin::so22(2);
        let names = spec.generator_names();
        assert_eq!(element_text(spec.bracket(3, 0), names), "0");
    }
}
