use std::collections::BTreeMap;

use super::ast::{ExprAst, Span, SpecDocument, SpecDslError, TensorTermAst};
use crate::contraction::ContractionMap;
use crate::hopf::{HopfSpec, TensorElement};
use crate::ncalgebra::{
    exp_in, multiply_in, AlgebraElement, AlgebraError, BracketMap, SpecBuilder,
};
use crate::scalars::Rational;

/// Everything a document can define, materialized at a fixed order.
pub struct Elaborated {
    pub algebra: crate::ncalgebra::AlgebraSpec,
    pub hopf: Option<HopfSpec>,
    pub contraction: Option<ContractionMap>,
    pub warnings: Vec<String>,
}

/// How many nested tau-divisions an expression can route a value
/// through; evaluation happens that many orders above the target so the
/// divisions still land exactly.
fn div_depth(e: &ExprAst) -> u32 {
    match e {
        ExprAst::Int(_) | ExprAst::Tau | ExprAst::Sym(_, _) => 0,
        ExprAst::Neg(a) | ExprAst::Exp(a, _) => div_depth(a),
        ExprAst::Add(a, b) | ExprAst::Sub(a, b) | ExprAst::Mul(a, b) => {
            div_depth(a).max(div_depth(b))
        }
        ExprAst::Pow(a, k) => div_depth(a).saturating_mul(*k),
        ExprAst::Div(a, b, _) => div_depth(a) + scalar_tau_power(b).map(|(_, k)| k).unwrap_or(0),
    }
}

/// Recognize a pure scalar factor c * tau^k; denominators must have
/// this shape.
fn scalar_tau_power(e: &ExprAst) -> Option<(Rational, u32)> {
    match e {
        ExprAst::Int(n) => Some((Rational::from_bigint(n.clone()), 0)),
        ExprAst::Tau => Some((Rational::one(), 1)),
        ExprAst::Sym(_, _) | ExprAst::Add(_, _) | ExprAst::Sub(_, _) | ExprAst::Exp(_, _) => None,
        ExprAst::Neg(a) => scalar_tau_power(a).map(|(q, k)| (-&q, k)),
        ExprAst::Mul(a, b) => {
            let (qa, ka) = scalar_tau_power(a)?;
            let (qb, kb) = scalar_tau_power(b)?;
            Some((&qa * &qb, ka + kb))
        }
        ExprAst::Div(a, b, _) => {
            let (qa, ka) = scalar_tau_power(a)?;
            let (qb, kb) = scalar_tau_power(b)?;
            if qb.is_zero() || kb > ka {
                return None;
            }
            Some((&qa / &qb, ka - kb))
        }
        ExprAst::Pow(a, k) => {
            let (qa, ka) = scalar_tau_power(a)?;
            let mut q = Rational::one();
            for _ in 0..*k {
                q = &q * &qa;
            }
            Some((q, ka * k))
        }
    }
}

struct Elaborator {
    names: Vec<String>,
    table: BracketMap,
}

impl Elaborator {
    fn rank_of(&self, name: &str, span: Span) -> Result<usize, SpecDslError> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| SpecDslError::UnknownSymbol { span, name: name.to_string() })
    }

    /// Evaluate an expression to an element at the given working order,
    /// normal ordering against the table built so far.
    fn eval(&self, e: &ExprAst, order: u32) -> Result<AlgebraElement, SpecDslError> {
        let ngens = self.names.len();
        match e {
            ExprAst::Int(n) => Ok(AlgebraElement::constant(
                Rational::from_bigint(n.clone()),
                ngens,
                order,
            )),
            ExprAst::Tau => {
                Ok(AlgebraElement::one(ngens, order).mul_tau_pow(1))
            }
            ExprAst::Sym(name, span) => {
                let rank = self.rank_of(name, *span)?;
                Ok(AlgebraElement::generator(rank, ngens, order))
            }
            ExprAst::Neg(a) => Ok(-&self.eval(a, order)?),
            ExprAst::Add(a, b) => Ok(&self.eval(a, order)? + &self.eval(b, order)?),
            ExprAst::Sub(a, b) => Ok(&self.eval(a, order)? - &self.eval(b, order)?),
            ExprAst::Mul(a, b) => {
                let ea = self.eval(a, order)?;
                let eb = self.eval(b, order)?;
                Ok(multiply_in(&self.table, &ea, &eb)?)
            }
            ExprAst::Div(a, b, span) => {
                let (q, k) = scalar_tau_power(b).ok_or_else(|| SpecDslError::Elaborate {
                    span: *span,
                    message: "division is only defined by rational constants and powers of tau"
                        .to_string(),
                })?;
                if q.is_zero() {
                    return Err(SpecDslError::Elaborate {
                        span: *span,
                        message: "division by zero".into(),
                    });
                }
                let mut out = self.eval(a, order)?.scale(&q.recip());
                for _ in 0..k {
                    out = out.div_tau().map_err(|err| SpecDslError::Elaborate {
                        span: *span,
                        message: err.to_string(),
                    })?;
                }
                Ok(out)
            }
            ExprAst::Pow(a, k) => {
                let base = self.eval(a, order)?;
                let mut out = AlgebraElement::one(ngens, order);
                for _ in 0..*k {
                    out = multiply_in(&self.table, &out, &base)?;
                }
                Ok(out)
            }
            ExprAst::Exp(a, span) => {
                let inner = self.eval(a, order)?;
                exp_in(&self.table, &inner).map_err(|err| match err {
                    AlgebraError::ExpNeedsTau(_) => SpecDslError::Elaborate {
                        span: *span,
                        message: "exp needs an argument that vanishes at tau = 0".into(),
                    },
                    other => SpecDslError::Algebra(other),
                })
            }
        }
    }
}

/// Turn a parsed document into concrete structures truncated at `order`.
/// The algebra's name is supplied by the caller (usually the file stem
/// or a registry key).
pub fn elaborate(
    doc: &SpecDocument,
    name: &str,
    order: u32,
) -> Result<Elaborated, SpecDslError> {
    let names: Vec<String> = doc.generators.iter().map(|(n, _)| n.clone()).collect();
    let mut warnings = Vec::new();

    // Bracket expressions may divide by tau, so evaluation happens above
    // the target order by the deepest division found anywhere.
    let head_room = doc.brackets.iter().map(|b| div_depth(&b.rhs)).max().unwrap_or(0);
    let work_order = order + head_room;

    let mut el = Elaborator { names: names.clone(), table: BTreeMap::new() };

    // Entries can reference each other through normal ordering, so they
    // are resolved as a fixpoint: anything blocked on a missing pair is
    // retried after the others land.
    let mut pending: Vec<usize> = (0..doc.brackets.len()).collect();
    let mut span_of: BTreeMap<(usize, usize), Span> = BTreeMap::new();
    for entry in &doc.brackets {
        let ra = el.rank_of(&entry.a, entry.span)?;
        let rb = el.rank_of(&entry.b, entry.span)?;
        if ra == rb {
            return Err(SpecDslError::Elaborate {
                span: entry.span,
                message: format!("bracket of `{}` with itself", entry.a),
            });
        }
        let key = (ra.min(rb), ra.max(rb));
        if span_of.contains_key(&key) {
            return Err(SpecDslError::Elaborate {
                span: entry.span,
                message: format!("bracket [{}, {}] is defined twice", entry.a, entry.b),
            });
        }
        span_of.insert(key, entry.span);
    }

    loop {
        let mut progressed = false;
        let mut still_pending = Vec::new();
        let mut blocked_on: Vec<String> = Vec::new();
        for idx in pending {
            let entry = &doc.brackets[idx];
            match el.eval(&entry.rhs, work_order) {
                Ok(rhs) => {
                    let ra = el.rank_of(&entry.a, entry.span)?;
                    let rb = el.rank_of(&entry.b, entry.span)?;
                    // store normal orientation [g_hi, g_lo]
                    let stored = if ra > rb { rhs } else { -&rhs };
                    el.table.insert((ra.min(rb), ra.max(rb)), stored);
                    progressed = true;
                }
                Err(SpecDslError::Algebra(AlgebraError::MissingBracket { hi, lo })) => {
                    blocked_on.push(format!(
                        "[{}, {}] waits for [{}, {}]",
                        entry.a, entry.b, el.names[hi], el.names[lo]
                    ));
                    still_pending.push(idx);
                }
                Err(other) => return Err(other),
            }
        }
        if still_pending.is_empty() {
            break;
        }
        if !progressed {
            return Err(SpecDslError::UnresolvableBrackets { pairs: blocked_on.join("; ") });
        }
        pending = still_pending;
    }

    // Assemble the bracket table, defaulting unspecified pairs to zero.
    let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let mut builder = SpecBuilder::new(name, &name_refs, order)?;
    for ((lo, hi), rhs) in &el.table {
        if rhs.order() < order {
            let span = span_of.get(&(*lo, *hi)).copied().unwrap_or(Span { line: 0, col: 0 });
            return Err(SpecDslError::Elaborate {
                span,
                message: format!(
                    "division after a product leaves only order {}, below the requested {}",
                    rhs.order(),
                    order
                ),
            });
        }
        builder.set_bracket(&names[*hi], &names[*lo], rhs.clone())?;
    }
    for (lo, hi) in builder.default_missing_to_zero() {
        warnings.push(format!(
            "bracket [{}, {}] not specified; defaulting to zero",
            names[hi], names[lo]
        ));
    }
    let algebra = builder.build()?;

    // Coproducts become a Hopf layer when the section exists.
    let hopf = if doc.has_coproduct_section {
        let mut coproducts: Vec<Option<TensorElement>> = vec![None; names.len()];
        for entry in &doc.coproducts {
            let rank = el.rank_of(&entry.generator, entry.span)?;
            if coproducts[rank].is_some() {
                return Err(SpecDslError::Elaborate {
                    span: entry.span,
                    message: format!("coproduct of `{}` is defined twice", entry.generator),
                });
            }
            coproducts[rank] = Some(eval_tensor(&el, &entry.terms, order)?);
        }
        let mut resolved = Vec::with_capacity(names.len());
        for (rank, c) in coproducts.into_iter().enumerate() {
            match c {
                Some(t) => resolved.push(t),
                None => {
                    return Err(SpecDslError::MissingCoproduct { name: names[rank].clone() })
                }
            }
        }
        let counits = vec![Rational::zero(); names.len()];
        // convention: the universal R element pairs the primitive time
        // translation with the dilation when both names are present
        let rmatrix_pair = match (
            names.iter().position(|n| n == "H"),
            names.iter().position(|n| n == "D"),
        ) {
            (Some(h), Some(d)) => Some((h, d)),
            _ => None,
        };
        Some(HopfSpec::new(algebra.clone(), resolved, counits, rmatrix_pair)?)
    } else {
        None
    };

    // Contraction scales: unlisted generators stay unscaled.
    let contraction = if doc.has_contraction_section {
        let mut scales = vec![0i32; names.len()];
        let mut tau_power = 0i32;
        let mut seen: BTreeMap<String, Span> = BTreeMap::new();
        for entry in &doc.contraction {
            if seen.contains_key(&entry.name) {
                return Err(SpecDslError::Elaborate {
                    span: entry.span,
                    message: format!("scale for `{}` is given twice", entry.name),
                });
            }
            seen.insert(entry.name.clone(), entry.span);
            if entry.name == "tau" {
                tau_power = entry.power;
            } else {
                let rank = el.rank_of(&entry.name, entry.span)?;
                scales[rank] = entry.power;
            }
        }
        Some(ContractionMap::new(scales, tau_power))
    } else {
        None
    };

    Ok(Elaborated { algebra, hopf, contraction, warnings })
}

fn eval_tensor(
    el: &Elaborator,
    terms: &[TensorTermAst],
    order: u32,
) -> Result<TensorElement, SpecDslError> {
    let ngens = el.names.len();
    let mut out = TensorElement::zero(ngens, 2, order);
    for term in terms {
        let head_room = div_depth(&term.left).max(div_depth(&term.right));
        let w = order + head_room;
        let left = el.eval(&term.left, w)?;
        let right = el.eval(&term.right, w)?;
        let lo = left.order().min(right.order());
        if lo < order {
            return Err(SpecDslError::Elaborate {
                span: Span { line: 0, col: 0 },
                message: format!(
                    "tensor slot loses precision: order {lo} below the requested {order}"
                ),
            });
        }
        let pure = TensorElement::pure(&[&left.truncate(order), &right.truncate(order)]);
        out = &out + &pure;
    }
    Ok(out)
}

/// Evaluate a single expression against an existing algebra's bracket
/// table, normal ordering products as it goes. Divisions by tau lower the
/// tracked order of the result; the element's own order says how far the
/// answer is exact.
pub fn eval_expression(
    spec: &crate::ncalgebra::AlgebraSpec,
    expr: &ExprAst,
) -> Result<AlgebraElement, SpecDslError> {
    let el = Elaborator {
        names: spec.generator_names().to_vec(),
        table: spec.bracket_map().clone(),
    };
    el.eval(expr, spec.order())
}

/// Evaluate an expression in the commuting lattice coordinates `x` and
/// `t` (tau is allowed as a scalar). Used by the operator-action front
/// end, where the inputs are polynomial functions rather than algebra
/// elements.
pub fn eval_polynomial(
    expr: &ExprAst,
    order: u32,
) -> Result<crate::realization::PolynomialFunction, SpecDslError> {
    use crate::realization::PolynomialFunction as Poly;
    match expr {
        ExprAst::Int(n) => Ok(Poly::one(order).scale(&Rational::from_bigint(n.clone()))),
        ExprAst::Tau => {
            Ok(Poly::one(order).scale_series(&crate::scalars::ScalarSeries::one(order).mul_tau_pow(1)))
        }
        ExprAst::Sym(name, span) => match name.as_str() {
            "x" => Ok(Poly::x(order)),
            "t" => Ok(Poly::t(order)),
            _ => Err(SpecDslError::UnknownSymbol { span: *span, name: name.clone() }),
        },
        ExprAst::Neg(a) => Ok(-&eval_polynomial(a, order)?),
        ExprAst::Add(a, b) => Ok(&eval_polynomial(a, order)? + &eval_polynomial(b, order)?),
        ExprAst::Sub(a, b) => Ok(&eval_polynomial(a, order)? - &eval_polynomial(b, order)?),
        ExprAst::Mul(a, b) => Ok(eval_polynomial(a, order)?.multiply(&eval_polynomial(b, order)?)),
        ExprAst::Pow(a, k) => {
            let base = eval_polynomial(a, order)?;
            let mut out = Poly::one(order);
            for _ in 0..*k {
                out = out.multiply(&base);
            }
            Ok(out)
        }
        ExprAst::Div(a, b, span) => {
            let (q, k) = scalar_tau_power(b).ok_or_else(|| SpecDslError::Elaborate {
                span: *span,
                message: "division is only defined by rational constants and powers of tau"
                    .to_string(),
            })?;
            if q.is_zero() || k > 0 {
                return Err(SpecDslError::Elaborate {
                    span: *span,
                    message: "lattice functions can only be divided by nonzero rational constants"
                        .to_string(),
                });
            }
            Ok(eval_polynomial(a, order)?.scale(&q.recip()))
        }
        ExprAst::Exp(_, span) => Err(SpecDslError::Elaborate {
            span: *span,
            message: "exp is not defined for lattice functions".to_string(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalgebra::builtin;
    use crate::specdsl::parser::parse;

    #[test]
    fn the_division_example_lands_exactly() {
        let doc = parse(
            "generators: H, P, K\nbrackets:\n[K,P] = (exp(tau*H) - 1)/tau\n[K,H] = 0\n[H,P] = 0\n",
        )
        .unwrap();
        let out = elaborate(&doc, "toy", 2).unwrap();
        // [K, P] = H + tau/2 H^2 + tau^2/6 H^3 truncated at order 2
        let got = out.algebra.bracket(2, 1);
        let names = out.algebra.generator_names();
        assert_eq!(got.display(names), "H + 1/2 tau H^2 + 1/6 tau^2 H^3");
    }

    #[test]
    fn missing_pairs_default_to_zero_with_a_warning() {
        let doc = parse("generators: D, K\nbrackets:\n").unwrap();
        let out = elaborate(&doc, "toy", 2).unwrap();
        assert_eq!(out.warnings.len(), 1);
        assert!(out.warnings[0].contains("[K, D]"));
        assert!(out.algebra.bracket(1, 0).is_zero());
    }

    #[test]
    fn non_divisible_series_reports_the_span() {
        let doc = parse("generators: D, H\nbrackets:\n[D,H] = (1 + exp(-tau*H))/tau\n").unwrap();
        match elaborate(&doc, "toy", 2) {
            Err(SpecDslError::Elaborate { span, message }) => {
                assert_eq!(span.line, 3);
                assert!(message.contains("divide by tau"), "{message}");
            }
            other => panic!("expected divisibility error, got {:?}", other.err()),
        }
    }

    #[test]
    fn generator_valued_denominators_are_rejected() {
        let doc = parse("generators: D, H\nbrackets:\n[D,H] = H/D\n").unwrap();
        match elaborate(&doc, "toy", 2) {
            Err(SpecDslError::Elaborate { message, .. }) => {
                assert!(message.contains("rational constants"), "{message}");
            }
            other => panic!("expected denominator error, got {:?}", other.err()),
        }
    }

    #[test]
    fn out_of_order_entries_resolve_by_fixpoint() {
        // [D,C1] needs [D,H]? no; craft a genuine dependency: the first
        // entry multiplies C1*D which needs (D,C1) from the second.
        let doc = parse(
            "generators: D, H, C1\nbrackets:\n[H,C1] = C1*D - D*C1\n[D,C1] = -C1\n[D,H] = H\n",
        )
        .unwrap();
        let out = elaborate(&doc, "toy", 2).unwrap();
        // stored entry is [C1, H] = -(C1 D - D C1) = [D, C1] = -C1
        let names = out.algebra.generator_names();
        assert_eq!(out.algebra.bracket(2, 1).display(names), "-C1");
    }

    #[test]
    fn true_cycles_are_reported() {
        let doc = parse(
            "generators: A, B, C\nbrackets:\n[A,B] = B*C - C*B\n[B,C] = A*B - B*A\n[A,C] = 0\n",
        )
        .unwrap();
        match elaborate(&doc, "toy", 2) {
            Err(SpecDslError::UnresolvableBrackets { pairs }) => {
                assert!(pairs.contains("waits for"), "{pairs}");
            }
            other => panic!("expected cycle error, got {:?}", other.err()),
        }
    }

    #[test]
    fn exp_of_a_bare_generator_is_rejected_with_span() {
        let doc = parse("generators: D, H\nbrackets:\n[D,H] = exp(H)\n").unwrap();
        match elaborate(&doc, "toy", 2) {
            Err(SpecDslError::Elaborate { span, message }) => {
                assert_eq!(span.line, 3);
                assert!(message.contains("tau = 0"), "{message}");
            }
            other => panic!("expected exp precondition error, got {:?}", other.err()),
        }
    }

    #[test]
    fn classical_table_satisfies_jacobi_after_elaboration() {
        let text = "\
generators: D, H, P, K, C1, C2
brackets:
[D,H] = H
[D,P] = P
[K,H] = P
[K,P] = H
[D,C1] = -C1
[D,C2] = -C2
[H,C1] = -2*D
[P,C2] = 2*D
[K,C1] = C2
[K,C2] = C1
[H,C2] = 2*K
[P,C1] = -2*K
";
        let doc = parse(text).unwrap();
        let out = elaborate(&doc, "so22", 3).unwrap();
        assert_eq!(out.warnings.len(), 3, "K-D, H-P, C1-C2 default to zero");
        assert_eq!(out.algebra, builtin::so22(3));
        for j in crate::ncalgebra::check_jacobi(&out.algebra).unwrap() {
            assert!(j.residual.is_zero(), "{:?}", j.names);
        }
    }
}
