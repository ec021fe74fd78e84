use num::BigInt;

use super::ast::{
    BracketEntry, ContractionEntry, CoproductEntry, ExprAst, Span, SpecDocument, SpecDslError,
    TensorTermAst,
};
use super::lexer::{lex_line, Tok};

/// Names with fixed meaning in expressions; they can never be declared
/// as generators.
pub const RESERVED: &[&str] = &["tau", "eps", "exp", "Delta", "x", "t", "dx", "dt"];

const SECTIONS: &[&str] = &["generators", "brackets", "coproducts", "contraction"];

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    Generators,
    Brackets,
    Coproducts,
    Contraction,
}

/// Parse a whole .qalg document. Entries are line-oriented; a `#` starts
/// a comment; section headers are `generators:`, `brackets:`,
/// `coproducts:`, `contraction:`.
pub fn parse(text: &str) -> Result<SpecDocument, SpecDslError> {
    let mut doc = SpecDocument::default();
    let mut section: Option<Section> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx as u32 + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        let toks = lex_line(line, line_no)?;
        if toks.is_empty() {
            continue;
        }
        let mut rest = toks.as_slice();
        // section header: leading `name:` with a known section name
        if let [(Tok::Ident(name), span), (Tok::Colon, _), tail @ ..] = rest {
            if SECTIONS.contains(&name.as_str()) {
                section = Some(match name.as_str() {
                    "generators" => Section::Generators,
                    "brackets" => Section::Brackets,
                    "coproducts" => {
                        doc.has_coproduct_section = true;
                        Section::Coproducts
                    }
                    _ => {
                        doc.has_contraction_section = true;
                        Section::Contraction
                    }
                });
                if tail.is_empty() {
                    continue;
                }
                rest = tail;
            } else if section.is_none() {
                return Err(SpecDslError::Syntax {
                    span: *span,
                    message: format!(
                        "unknown section `{name}`; expected one of generators, brackets, \
                         coproducts, contraction"
                    ),
                });
            }
        }
        let span = rest[0].1;
        match section {
            None => {
                return Err(SpecDslError::Syntax {
                    span,
                    message: "content before the first section header".into(),
                })
            }
            Some(Section::Generators) => parse_generator_line(rest, &mut doc)?,
            Some(Section::Brackets) => doc.brackets.push(parse_bracket_line(rest, span)?),
            Some(Section::Coproducts) => doc.coproducts.push(parse_coproduct_line(rest, span)?),
            Some(Section::Contraction) => {
                doc.contraction.push(parse_contraction_line(rest, span)?)
            }
        }
    }
    Ok(doc)
}

fn parse_generator_line(
    toks: &[(Tok, Span)],
    doc: &mut SpecDocument,
) -> Result<(), SpecDslError> {
    for (t, span) in toks {
        match t {
            Tok::Comma => {}
            Tok::Ident(name) => {
                if RESERVED.contains(&name.as_str()) {
                    return Err(SpecDslError::ReservedName { span: *span, name: name.clone() });
                }
                if doc.generators.iter().any(|(g, _)| g == name) {
                    return Err(SpecDslError::DuplicateGenerator {
                        span: *span,
                        name: name.clone(),
                    });
                }
                doc.generators.push((name.clone(), *span));
            }
            other => {
                return Err(SpecDslError::Syntax {
                    span: *span,
                    message: format!("expected generator name, found {}", other.describe()),
                })
            }
        }
    }
    Ok(())
}

/// Parse a single standalone expression (the `expand` and `act` front
/// ends hand user arguments through here). Tensor separators are not
/// meaningful outside coproduct lines and are rejected.
pub fn parse_expression(text: &str) -> Result<ExprAst, SpecDslError> {
    let toks = lex_line(text, 1)?;
    let mut p = Parser::new(&toks);
    let expr = p.parse_expr()?;
    if let Some((Tok::TensorSep, sep)) = p.peek() {
        return Err(SpecDslError::TensorOutsideCoproduct { span: *sep });
    }
    p.expect_end()?;
    Ok(expr)
}

/// `[A, B] = expr`
fn parse_bracket_line(toks: &[(Tok, Span)], span: Span) -> Result<BracketEntry, SpecDslError> {
    let mut p = Parser::new(toks);
    p.expect(&Tok::LBracket)?;
    let a = p.expect_ident()?;
    p.expect(&Tok::Comma)?;
    let b = p.expect_ident()?;
    p.expect(&Tok::RBracket)?;
    p.expect(&Tok::Equals)?;
    let rhs = p.parse_expr()?;
    if let Some((Tok::TensorSep, sep)) = p.peek() {
        return Err(SpecDslError::TensorOutsideCoproduct { span: *sep });
    }
    p.expect_end()?;
    Ok(BracketEntry { a, b, rhs, span })
}

/// `Delta(A) = expr (x) expr + ...`
fn parse_coproduct_line(toks: &[(Tok, Span)], span: Span) -> Result<CoproductEntry, SpecDslError> {
    let mut p = Parser::new(toks);
    let head = p.expect_ident()?;
    if head != "Delta" {
        return Err(SpecDslError::Syntax {
            span,
            message: format!("coproduct lines start with `Delta(`; found `{head}`"),
        });
    }
    p.expect(&Tok::LParen)?;
    let generator = p.expect_ident()?;
    p.expect(&Tok::RParen)?;
    p.expect(&Tok::Equals)?;
    let terms = p.parse_tensor_sum()?;
    p.expect_end()?;
    Ok(CoproductEntry { generator, terms, span })
}

/// `Name: integer` with `tau` allowed as the parameter's name.
fn parse_contraction_line(
    toks: &[(Tok, Span)],
    span: Span,
) -> Result<ContractionEntry, SpecDslError> {
    let mut p = Parser::new(toks);
    let name = match p.next() {
        Some((Tok::Ident(s), _)) => s.clone(),
        other => {
            return Err(SpecDslError::Syntax {
                span: other.map(|(_, s)| *s).unwrap_or(span),
                message: "expected a generator name or `tau`".into(),
            })
        }
    };
    p.expect(&Tok::Colon)?;
    let negative = p.eat(&Tok::Minus);
    let power = match p.next() {
        Some((Tok::Int(n), sp)) => int_to_i32(n, *sp)?,
        other => {
            return Err(SpecDslError::Syntax {
                span: other.map(|(_, s)| *s).unwrap_or(span),
                message: "expected an integer exponent".into(),
            })
        }
    };
    p.expect_end()?;
    Ok(ContractionEntry { name, power: if negative { -power } else { power }, span })
}

fn int_to_i32(n: &BigInt, span: Span) -> Result<i32, SpecDslError> {
    i32::try_from(n).map_err(|_| SpecDslError::Syntax {
        span,
        message: format!("exponent {n} is out of range"),
    })
}

fn int_to_u32(n: &BigInt, span: Span) -> Result<u32, SpecDslError> {
    u32::try_from(n).map_err(|_| SpecDslError::Syntax {
        span,
        message: format!("power {n} must be a small non-negative integer"),
    })
}

struct Parser<'a> {
    toks: &'a [(Tok, Span)],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(toks: &'a [(Tok, Span)]) -> Self {
        Parser { toks, pos: 0 }
    }

    fn peek(&self) -> Option<&'a (Tok, Span)> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<&'a (Tok, Span)> {
        let t = self.toks.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn end_span(&self) -> Span {
        self.toks
            .last()
            .map(|(_, s)| Span { line: s.line, col: s.col + 1 })
            .unwrap_or(Span { line: 0, col: 0 })
    }

    fn eat(&mut self, want: &Tok) -> bool {
        if let Some((t, _)) = self.peek() {
            if t == want {
                self.pos += 1;
                return true;
            }
        }
        false
    }

    fn expect(&mut self, want: &Tok) -> Result<(), SpecDslError> {
        match self.next() {
            Some((t, _)) if t == want => Ok(()),
            Some((t, span)) => Err(SpecDslError::Syntax {
                span: *span,
                message: format!("expected {}, found {}", want.describe(), t.describe()),
            }),
            None => Err(SpecDslError::Syntax {
                span: self.end_span(),
                message: format!("expected {}, found end of line", want.describe()),
            }),
        }
    }

    fn expect_ident(&mut self) -> Result<String, SpecDslError> {
        match self.next() {
            Some((Tok::Ident(s), _)) => Ok(s.clone()),
            Some((t, span)) => Err(SpecDslError::Syntax {
                span: *span,
                message: format!("expected an identifier, found {}", t.describe()),
            }),
            None => Err(SpecDslError::Syntax {
                span: self.end_span(),
                message: "expected an identifier, found end of line".into(),
            }),
        }
    }

    fn expect_end(&mut self) -> Result<(), SpecDslError> {
        match self.peek() {
            None => Ok(()),
            Some((t, span)) => Err(SpecDslError::Syntax {
                span: *span,
                message: format!("unexpected {} after a complete entry", t.describe()),
            }),
        }
    }

    /// sum := product (('+'|'-') product)*
    fn parse_expr(&mut self) -> Result<ExprAst, SpecDslError> {
        let mut lhs = self.parse_product()?;
        loop {
            if self.eat(&Tok::Plus) {
                let rhs = self.parse_product()?;
                lhs = ExprAst::Add(Box::new(lhs), Box::new(rhs));
            } else if self.eat(&Tok::Minus) {
                let rhs = self.parse_product()?;
                lhs = ExprAst::Sub(Box::new(lhs), Box::new(rhs));
            } else {
                return Ok(lhs);
            }
        }
    }

    /// product := unary (('*'|'/') unary)*
    fn parse_product(&mut self) -> Result<ExprAst, SpecDslError> {
        let mut lhs = self.parse_unary()?;
        loop {
            if self.eat(&Tok::Star) {
                let rhs = self.parse_unary()?;
                lhs = ExprAst::Mul(Box::new(lhs), Box::new(rhs));
            } else if let Some((Tok::Slash, span)) = self.peek() {
                let span = *span;
                self.pos += 1;
                let rhs = self.parse_unary()?;
                lhs = ExprAst::Div(Box::new(lhs), Box::new(rhs), span);
            } else {
                return Ok(lhs);
            }
        }
    }

    /// unary := '-' unary | power
    fn parse_unary(&mut self) -> Result<ExprAst, SpecDslError> {
        if self.eat(&Tok::Minus) {
            let inner = self.parse_unary()?;
            return Ok(ExprAst::Neg(Box::new(inner)));
        }
        self.parse_power()
    }

    /// power := atom ('^' integer)?
    fn parse_power(&mut self) -> Result<ExprAst, SpecDslError> {
        let base = self.parse_atom()?;
        if self.eat(&Tok::Caret) {
            match self.next() {
                Some((Tok::Int(n), span)) => {
                    let k = int_to_u32(n, *span)?;
                    return Ok(ExprAst::Pow(Box::new(base), k));
                }
                Some((t, span)) => {
                    return Err(SpecDslError::Syntax {
                        span: *span,
                        message: format!(
                            "exponent must be a non-negative integer, found {}",
                            t.describe()
                        ),
                    })
                }
                None => {
                    return Err(SpecDslError::Syntax {
                        span: self.end_span(),
                        message: "exponent must be a non-negative integer, found end of line"
                            .into(),
                    })
                }
            }
        }
        Ok(base)
    }

    fn parse_atom(&mut self) -> Result<ExprAst, SpecDslError> {
        match self.next() {
            Some((Tok::Int(n), _)) => Ok(ExprAst::Int(n.clone())),
            Some((Tok::Ident(s), _)) if s == "tau" => Ok(ExprAst::Tau),
            Some((Tok::Ident(s), span)) if s == "exp" => {
                self.expect(&Tok::LParen)?;
                let inner = self.parse_expr()?;
                self.expect(&Tok::RParen)?;
                Ok(ExprAst::Exp(Box::new(inner), *span))
            }
            Some((Tok::Ident(s), span)) => Ok(ExprAst::Sym(s.clone(), *span)),
            Some((Tok::LParen, _)) => {
                let inner = self.parse_expr()?;
                self.expect(&Tok::RParen)?;
                Ok(inner)
            }
            Some((Tok::TensorSep, span)) => {
                Err(SpecDslError::TensorOutsideCoproduct { span: *span })
            }
            Some((t, span)) => Err(SpecDslError::Syntax {
                span: *span,
                message: format!("expected a value, found {}", t.describe()),
            }),
            None => Err(SpecDslError::Syntax {
                span: self.end_span(),
                message: "expected a value, found end of line".into(),
            }),
        }
    }

    /// tensor_sum := tensor_term (('+'|'-') tensor_term)*
    /// tensor_term := expr '(x)' expr
    fn parse_tensor_sum(&mut self) -> Result<Vec<TensorTermAst>, SpecDslError> {
        let mut terms = vec![self.parse_tensor_term(false)?];
        loop {
            if self.eat(&Tok::Plus) {
                terms.push(self.parse_tensor_term(false)?);
            } else if self.eat(&Tok::Minus) {
                terms.push(self.parse_tensor_term(true)?);
            } else {
                return Ok(terms);
            }
        }
    }

    fn parse_tensor_term(&mut self, negated: bool) -> Result<TensorTermAst, SpecDslError> {
        let start = self.peek().map(|(_, s)| *s).unwrap_or_else(|| self.end_span());
        let left = self.parse_tensor_factor()?;
        match self.next() {
            Some((Tok::TensorSep, _)) => {}
            _ => return Err(SpecDslError::MissingTensorSeparator { span: start }),
        }
        let right = self.parse_tensor_factor()?;
        let left = if negated { ExprAst::Neg(Box::new(left)) } else { left };
        Ok(TensorTermAst { left, right })
    }

    /// A slot factor is a product (no +/- at this level, so the sum
    /// structure of the tensor expression stays visible).
    fn parse_tensor_factor(&mut self) -> Result<ExprAst, SpecDslError> {
        self.parse_product_with_leading_sign()
    }

    fn parse_product_with_leading_sign(&mut self) -> Result<ExprAst, SpecDslError> {
        if self.eat(&Tok::Minus) {
            let inner = self.parse_product_with_leading_sign()?;
            return Ok(ExprAst::Neg(Box::new(inner)));
        }
        self.parse_product()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_discrete_translation_bracket() {
        let doc = parse("generators: H, P, K\nbrackets:\n[K,P] = (exp(tau*H) - 1)/tau\n").unwrap();
        assert_eq!(doc.generators.len(), 3);
        assert_eq!(doc.brackets.len(), 1);
        let e = &doc.brackets[0];
        assert_eq!((e.a.as_str(), e.b.as_str()), ("K", "P"));
        match &e.rhs {
            ExprAst::Div(num, den, _) => {
                assert!(matches!(**den, ExprAst::Tau));
                assert!(matches!(**num, ExprAst::Sub(_, _)));
            }
            other => panic!("expected division, got {other:?}"),
        }
    }

    #[test]
    fn parses_a_dressed_coproduct() {
        let doc =
            parse("generators: H, P\ncoproducts:\nDelta(P) = 1 (x) P + P (x) exp(tau*H)\n")
                .unwrap();
        let c = &doc.coproducts[0];
        assert_eq!(c.generator, "P");
        assert_eq!(c.terms.len(), 2);
        assert!(matches!(c.terms[1].right, ExprAst::Exp(_, _)));
    }

    #[test]
    fn dangling_equals_is_an_end_of_line_error() {
        match parse("generators: A, B\nbrackets:\n[A,B] = \n") {
            Err(SpecDslError::Syntax { span, message }) => {
                assert_eq!(span.line, 3);
                assert!(message.contains("end of line"), "{message}");
            }
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn tensor_separator_is_rejected_in_brackets() {
        match parse("generators: A, B\nbrackets:\n[A,B] = A (x) B\n") {
            Err(SpecDslError::TensorOutsideCoproduct { span }) => assert_eq!(span.line, 3),
            other => panic!("expected tensor context error, got {other:?}"),
        }
    }

    #[test]
    fn coproduct_terms_need_two_slots() {
        match parse("generators: H\ncoproducts:\nDelta(H) = H\n") {
            Err(SpecDslError::MissingTensorSeparator { .. }) => {}
            other => panic!("expected missing separator error, got {other:?}"),
        }
    }

    #[test]
    fn reserved_names_cannot_be_generators() {
        match parse("generators: tau\n") {
            Err(SpecDslError::ReservedName { name, .. }) => assert_eq!(name, "tau"),
            other => panic!("expected reserved name error, got {other:?}"),
        }
    }

    #[test]
    fn contraction_entries_take_signed_exponents() {
        let doc = parse("generators: H\ncontraction:\nH: 1\ntau: -2\n").unwrap();
        assert_eq!(doc.contraction.len(), 2);
        assert_eq!(doc.contraction[1].power, -2);
    }

    #[test]
    fn sections_may_share_a_line_with_their_first_entry() {
        let doc = parse("generators: D H\nbrackets: [H,D] = H\n").unwrap();
        assert_eq!(doc.brackets.len(), 1);
    }
}
