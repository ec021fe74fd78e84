//! Text format for describing algebras: a line-oriented file lists the
//! generators, the bracket table, optional coproducts and an optional
//! contraction rescaling. Parsing produces a syntax tree with source spans;
//! elaboration evaluates every right-hand side inside the truncated algebra
//! and assembles the same structures the built-in constructors produce.
//! Printing goes the other way, so any algebra can be written back out in a
//! form that parses to an equal one.

mod ast;
mod elaborate;
mod files;
mod lexer;
mod parser;
mod print;

pub use ast::{
    BracketEntry, CoproductEntry, ContractionEntry, ExprAst, Span, SpecDocument, SpecDslError,
    TensorTermAst,
};
pub use elaborate::{elaborate, eval_expression, eval_polynomial, Elaborated};
pub use files::{builtin_source, SO22_QALG, UISO21_QALG, USL2_QALG, USO22_QALG};
pub use parser::{parse, parse_expression};
pub use print::{element_text, print_spec, tensor_text};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::builtin as hopf_builtin;
    use crate::ncalgebra::builtin as alg_builtin;

    #[test]
    fn embedded_files_match_builtin_constructors() {
        let order = 3;
        for (name, src) in [("so22", SO22_QALG), ("uso22", USO22_QALG), ("uiso21", UISO21_QALG)] {
            let doc = parse(src).unwrap();
            let out = elaborate(&doc, name, order).unwrap();
            let expected = match name {
                "so22" => alg_builtin::so22(order),
                "uso22" => alg_builtin::uso22(order),
                _ => alg_builtin::uiso21(order),
            };
            assert_eq!(out.algebra, expected, "{name} bracket table");
        }

        let doc = parse(USL2_QALG).unwrap();
        let out = elaborate(&doc, "usl2", order).unwrap();
        assert_eq!(out.algebra, alg_builtin::usl2(order));
        assert_eq!(out.hopf.unwrap(), hopf_builtin::usl2(order));
    }

    #[test]
    fn embedded_coproducts_match_builtin_constructors() {
        let order = 3;
        let doc = parse(USO22_QALG).unwrap();
        let out = elaborate(&doc, "uso22", order).unwrap();
        assert_eq!(out.hopf.unwrap(), hopf_builtin::uso22(order));
        let map = out.contraction.unwrap();
        assert_eq!(map.scales(), &[0, 1, 0, 1, 1, 0]);
        assert_eq!(map.tau_power(), 1);

        let doc = parse(UISO21_QALG).unwrap();
        let out = elaborate(&doc, "uiso21", order).unwrap();
        assert_eq!(out.hopf.unwrap(), hopf_builtin::uiso21(order));
        assert!(out.contraction.is_none());
    }

    #[test]
    fn print_round_trips_through_the_parser() {
        let order = 3;
        for (name, src) in [
            ("so22", SO22_QALG),
            ("uso22", USO22_QALG),
            ("uiso21", UISO21_QALG),
            ("usl2", USL2_QALG),
        ] {
            let first = elaborate(&parse(src).unwrap(), name, order).unwrap();
            let text = print_spec(&first.algebra, first.hopf.as_ref(), first.contraction.as_ref());
            let reparsed =
                elaborate(&parse(&text).unwrap(), name, order).unwrap_or_else(|e| {
                    panic!("{name}: reparse failed: {e}\n{text}");
                });
            assert_eq!(reparsed.algebra, first.algebra, "{name} algebra round trip");
            assert_eq!(reparsed.hopf, first.hopf, "{name} coproduct round trip");
            match (&reparsed.contraction, &first.contraction) {
                (Some(a), Some(b)) => {
                    assert_eq!(a.scales(), b.scales());
                    assert_eq!(a.tau_power(), b.tau_power());
                }
                (None, None) => {}
                other => panic!("{name}: contraction mismatch {other:?}"),
            }
        }
    }
}
