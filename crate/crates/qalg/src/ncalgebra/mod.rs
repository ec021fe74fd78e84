//! Noncommutative enveloping-algebra arithmetic over a fixed PBW generator
//! order, driven by a total table of normal-ordered commutators.

pub mod builtin;
mod checks;
mod element;
mod rewrite;
mod spec;

pub use checks::{check_jacobi, subalgebra_closure, ClosurePair, ClosureReport, JacobiTriple};
pub use element::{AlgebraElement, Monomial};
pub use rewrite::Strategy;
pub use spec::{AlgebraError, AlgebraSpec, SpecBuilder};

pub(crate) use rewrite::{normal_order_word, BracketMap};
pub(crate) use spec::{exp_in, multiply_in};

#[cfg(test)]
mod proptests {
    use proptest::prelude::*;

    use super::builtin;
    use super::Strategy;

    // Words over the six ranks, long enough to force rewrite chains.
    fn short_word() -> impl proptest::strategy::Strategy<Value = Vec<usize>> {
        proptest::collection::vec(0usize..6, 0..5)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        // Leftmost and rightmost rewriting agree: the bracket tables are
        // confluent presentations.
        #[test]
        fn rewrite_is_confluent_on_uso22(word in short_word()) {
            let spec = builtin::uso22(3);
            let l = spec.normal_order(&word, Strategy::Leftmost).unwrap();
            let r = spec.normal_order(&word, Strategy::Rightmost).unwrap();
            prop_assert_eq!(l, r);
        }

        #[test]
        fn rewrite_is_confluent_on_uiso21(word in short_word()) {
            let spec = builtin::uiso21(3);
            let l = spec.normal_order(&word, Strategy::Leftmost).unwrap();
            let r = spec.normal_order(&word, Strategy::Rightmost).unwrap();
            prop_assert_eq!(l, r);
        }

        // Associativity of the rewritten product on random atoms.
        #[test]
        fn product_is_associative(a in 0usize..6, b in 0usize..6, c in 0usize..6) {
            let spec = builtin::uso22(3);
            let (ga, gb, gc) = (spec.generator(a), spec.generator(b), spec.generator(c));
            let ab = spec.multiply(&ga, &gb).unwrap();
            let bc = spec.multiply(&gb, &gc).unwrap();
            let left = spec.multiply(&ab, &gc).unwrap();
            let right = spec.multiply(&ga, &bc).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}
