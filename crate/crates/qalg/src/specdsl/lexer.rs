use num::BigInt;

use super::ast::{Span, SpecDslError};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Equals,
    Colon,
    /// The exact three characters `(x)` with no interior spaces.
    TensorSep,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Int(n) => format!("integer `{n}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Equals => "`=`".into(),
            Tok::Colon => "`:`".into(),
            Tok::TensorSep => "`(x)`".into(),
        }
    }
}

/// Tokenize one logical line (comments already stripped). Columns are
/// 1-based character offsets.
pub fn lex_line(line: &str, line_no: u32) -> Result<Vec<(Tok, Span)>, SpecDslError> {
    let chars: Vec<char> = line.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0usize;
    while i < chars.len() {
        let c = chars[i];
        let span = Span { line: line_no, col: i as u32 + 1 };
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        // the tensor separator outranks a parenthesized x
        if c == '(' && i + 2 < chars.len() && chars[i + 1] == 'x' && chars[i + 2] == ')' {
            toks.push((Tok::TensorSep, span));
            i += 3;
            continue;
        }
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            ',' => Some(Tok::Comma),
            '=' => Some(Tok::Equals),
            ':' => Some(Tok::Colon),
            _ => None,
        };
        if let Some(t) = simple {
            toks.push((t, span));
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            let n = digits.parse::<BigInt>().expect("digit run parses");
            toks.push((Tok::Int(n), span));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            toks.push((Tok::Ident(word), span));
            continue;
        }
        return Err(SpecDslError::Syntax {
            span,
            message: format!("unexpected character `{c}`"),
        });
    }
    Ok(toks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_separator_is_greedy() {
        let toks = lex_line("1 (x) P", 1).unwrap();
        assert_eq!(toks.len(), 3);
        assert_eq!(toks[1].0, Tok::TensorSep);
        // spaced-out form is ordinary grouping
        let toks = lex_line("( x )", 1).unwrap();
        assert_eq!(
            toks.iter().map(|(t, _)| t.clone()).collect::<Vec<_>>(),
            vec![Tok::LParen, Tok::Ident("x".into()), Tok::RParen]
        );
    }

    #[test]
    fn big_integers_do_not_overflow() {
        let toks = lex_line("123456789012345678901234567890", 1).unwrap();
        match &toks[0].0 {
            Tok::Int(n) => assert_eq!(n.to_string(), "123456789012345678901234567890"),
            other => panic!("expected integer, got {other:?}"),
        }
    }

    #[test]
    fn stray_bytes_are_reported_with_columns() {
        match lex_line("a @ b", 3) {
            Err(SpecDslError::Syntax { span, .. }) => {
                assert_eq!((span.line, span.col), (3, 3));
            }
            other => panic!("expected syntax error, got {other:?}"),
        }
    }
}
