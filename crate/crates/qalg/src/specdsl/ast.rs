use num::BigInt;

/// 1-based source position of a token or entry.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Span {
    pub line: u32,
    pub col: u32,
}

impl std::fmt::Display for Span {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

/// Expression tree for bracket right-hand sides and tensor slot factors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ExprAst {
    Int(BigInt),
    Tau,
    /// Generator name, or a coordinate/derivative symbol in polynomial
    /// contexts.
    Sym(String, Span),
    Neg(Box<ExprAst>),
    Add(Box<ExprAst>, Box<ExprAst>),
    Sub(Box<ExprAst>, Box<ExprAst>),
    Mul(Box<ExprAst>, Box<ExprAst>),
    Div(Box<ExprAst>, Box<ExprAst>, Span),
    /// Non-negative integer power.
    Pow(Box<ExprAst>, u32),
    Exp(Box<ExprAst>, Span),
}

/// One two-slot term of a coproduct expression; subtraction folds into
/// a negated left factor.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorTermAst {
    pub left: ExprAst,
    pub right: ExprAst,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BracketEntry {
    pub a: String,
    pub b: String,
    pub rhs: ExprAst,
    pub span: Span,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoproductEntry {
    pub generator: String,
    pub terms: Vec<TensorTermAst>,
    pub span: Span,
}

/// Scaling data: generator name -> exponent, plus the parameter's own
/// exponent under the key `tau`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ContractionEntry {
    pub name: String,
    pub power: i32,
    pub span: Span,
}

/// A parsed .qalg document, prior to elaboration at a concrete order.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SpecDocument {
    pub generators: Vec<(String, Span)>,
    pub brackets: Vec<BracketEntry>,
    pub coproducts: Vec<CoproductEntry>,
    pub contraction: Vec<ContractionEntry>,
    pub has_coproduct_section: bool,
    pub has_contraction_section: bool,
}

/// Structured failure from parsing or elaboration, anchored to source.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpecDslError {
    #[error("{span}: syntax error: {message}")]
    Syntax { span: Span, message: String },
    #[error("{span}: duplicate generator `{name}`")]
    DuplicateGenerator { span: Span, name: String },
    #[error("{span}: `{name}` is reserved and cannot be a generator")]
    ReservedName { span: Span, name: String },
    #[error("{span}: unknown symbol `{name}`")]
    UnknownSymbol { span: Span, name: String },
    #[error("{span}: tensor separator (x) is only valid at the top level of a coproduct")]
    TensorOutsideCoproduct { span: Span },
    #[error("{span}: a coproduct needs two slots joined by (x) in every term")]
    MissingTensorSeparator { span: Span },
    #[error("{span}: {message}")]
    Elaborate { span: Span, message: String },
    #[error("coproduct section is present but `{name}` has no coproduct")]
    MissingCoproduct { name: String },
    #[error("bracket entries form a cycle that never becomes normal-orderable: {pairs}")]
    UnresolvableBrackets { pairs: String },
    #[error(transparent)]
    Algebra(#[from] crate::ncalgebra::AlgebraError),
    #[error(transparent)]
    Hopf(#[from] crate::hopf::HopfError),
}
