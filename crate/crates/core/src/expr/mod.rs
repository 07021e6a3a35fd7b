//! Ring-expression language.
//!
//! ```text
//! expr     := atom ( "*" atom )*
//! atom     := zmod | gf | "(" expr ")" | quotient | trivial
//! zmod     := "Z/" INT
//! gf       := "GF(" INT ")"
//! quotient := atom "[x]/(" poly ")"
//! trivial  := "triv(" expr "," module ")"
//! module   := modatom ( "(+)" modatom )*
//! modatom  := "self" | "self^" INT | "self/(" INT ("," INT)* ")"
//! poly     := term ( ("+"|"-") term )*
//! term     := INT | INT "*"? "x" ("^" INT)? | "x" ("^" INT)?
//! ```
//!
//! A leading `-` is accepted on the first polynomial term. `GF(p)` requires
//! a prime `p`; prime-power fields are written as explicit quotients such as
//! `GF(2)[x]/(x^2+x+1)`.

mod elaborate;
mod lexer;
mod parser;

use std::fmt;

pub use elaborate::{elaborate, to_descriptor, ElabError};
pub use lexer::{tokenize, Token, TokenKind};
pub use parser::{parse, ParseError};

use crate::error::RingError;
use crate::ring::FiniteRing;

/// Half-open byte range in the source text.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Span {
        Span { start, end }
    }

    fn contains(&self, inner: &Span) -> bool {
        self.start <= inner.start && inner.end <= self.end
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingExpr {
    Zmod { n: u64, span: Span },
    Gf { p: u64, span: Span },
    Product { factors: Vec<RingExpr>, span: Span },
    Quotient { base: Box<RingExpr>, modulus: PolyExpr, span: Span },
    Trivial { base: Box<RingExpr>, module: ModuleExpr, span: Span },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyExpr {
    pub terms: Vec<PolyTerm>,
    pub span: Span,
}

/// `±coeff * x^power`; `power: None` is a constant term and `coeff: None`
/// an implicit coefficient 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyTerm {
    pub negative: bool,
    pub coeff: Option<u64>,
    pub power: Option<u64>,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleExpr {
    pub atoms: Vec<ModAtom>,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModAtom {
    Free { span: Span },
    Power { exponent: u64, span: Span },
    Quotient { annihilators: Vec<u64>, span: Span },
}

impl RingExpr {
    pub fn span(&self) -> Span {
        match self {
            RingExpr::Zmod { span, .. }
            | RingExpr::Gf { span, .. }
            | RingExpr::Product { span, .. }
            | RingExpr::Quotient { span, .. }
            | RingExpr::Trivial { span, .. } => *span,
        }
    }

    /// Copy with every span zeroed, for structural comparison.
    pub fn without_spans(&self) -> RingExpr {
        let zero = Span::default();
        match self {
            RingExpr::Zmod { n, .. } => RingExpr::Zmod { n: *n, span: zero },
            RingExpr::Gf { p, .. } => RingExpr::Gf { p: *p, span: zero },
            RingExpr::Product { factors, .. } => RingExpr::Product {
                factors: factors.iter().map(RingExpr::without_spans).collect(),
                span: zero,
            },
            RingExpr::Quotient { base, modulus, .. } => RingExpr::Quotient {
                base: Box::new(base.without_spans()),
                modulus: PolyExpr {
                    terms: modulus
                        .terms
                        .iter()
                        .map(|t| PolyTerm { span: zero, ..t.clone() })
                        .collect(),
                    span: zero,
                },
                span: zero,
            },
            RingExpr::Trivial { base, module, .. } => RingExpr::Trivial {
                base: Box::new(base.without_spans()),
                module: ModuleExpr {
                    atoms: module
                        .atoms
                        .iter()
                        .map(|a| match a {
                            ModAtom::Free { .. } => ModAtom::Free { span: zero },
                            ModAtom::Power { exponent, .. } => ModAtom::Power {
                                exponent: *exponent,
                                span: zero,
                            },
                            ModAtom::Quotient { annihilators, .. } => ModAtom::Quotient {
                                annihilators: annihilators.clone(),
                                span: zero,
                            },
                        })
                        .collect(),
                    span: zero,
                },
                span: zero,
            },
        }
    }

    /// Equality ignoring source positions.
    pub fn same_structure(&self, other: &RingExpr) -> bool {
        self.without_spans() == other.without_spans()
    }

    /// Whether every child span lies inside its parent's span.
    pub fn spans_nest(&self) -> bool {
        let outer = self.span();
        match self {
            RingExpr::Zmod { .. } | RingExpr::Gf { .. } => true,
            RingExpr::Product { factors, .. } => factors.iter().all(|f| outer.contains(&f.span()) && f.spans_nest()),
            RingExpr::Quotient { base, modulus, .. } => {
                outer.contains(&base.span())
                    && base.spans_nest()
                    && outer.contains(&modulus.span)
                    && modulus.terms.iter().all(|t| modulus.span.contains(&t.span))
            }
            RingExpr::Trivial { base, module, .. } => {
                outer.contains(&base.span())
                    && base.spans_nest()
                    && outer.contains(&module.span)
                    && module.atoms.iter().all(|a| module.span.contains(&a.span()))
            }
        }
    }
}

impl ModAtom {
    pub fn span(&self) -> Span {
        match self {
            ModAtom::Free { span } | ModAtom::Power { span, .. } | ModAtom::Quotient { span, .. } => *span,
        }
    }
}

/// Canonical text for an expression; `parse(&unparse(e))` has the same
/// structure as `e`.
pub fn unparse(expr: &RingExpr) -> String {
    expr.to_string()
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Zmod { n, .. } => write!(f, "Z/{n}"),
            RingExpr::Gf { p, .. } => write!(f, "GF({p})"),
            RingExpr::Product { factors, .. } => {
                for (i, factor) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" * ")?;
                    }
                    if matches!(factor, RingExpr::Product { .. }) {
                        write!(f, "({factor})")?;
                    } else {
                        write!(f, "{factor}")?;
                    }
                }
                Ok(())
            }
            RingExpr::Quotient { base, modulus, .. } => {
                if matches!(**base, RingExpr::Product { .. }) {
                    write!(f, "({base})")?;
                } else {
                    write!(f, "{base}")?;
                }
                write!(f, "[x]/({modulus})")
            }
            RingExpr::Trivial { base, module, .. } => write!(f, "triv({base}, {module})"),
        }
    }
}

impl fmt::Display for PolyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, term) in self.terms.iter().enumerate() {
            match (i, term.negative) {
                (_, true) => f.write_str("-")?,
                (0, false) => {}
                (_, false) => f.write_str("+")?,
            }
            let power = |f: &mut fmt::Formatter<'_>, k: u64| {
                if k == 1 {
                    f.write_str("x")
                } else {
                    write!(f, "x^{k}")
                }
            };
            match (term.coeff, term.power) {
                (Some(c), None) => write!(f, "{c}")?,
                (Some(c), Some(k)) => {
                    write!(f, "{c}*")?;
                    power(f, k)?;
                }
                (None, Some(k)) => power(f, k)?,
                (None, None) => f.write_str("1")?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for ModuleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, atom) in self.atoms.iter().enumerate() {
            if i > 0 {
                f.write_str(" (+) ")?;
            }
            match atom {
                ModAtom::Free { .. } => f.write_str("self")?,
                ModAtom::Power { exponent, .. } => write!(f, "self^{exponent}")?,
                ModAtom::Quotient { annihilators, .. } => {
                    let gens: Vec<String> = annihilators.iter().map(u64::to_string).collect();
                    write!(f, "self/({})", gens.join(","))?;
                }
            }
        }
        Ok(())
    }
}

/// Parse or elaboration failure, with the byte offset it refers to.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExprError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Elaborate(#[from] ElabError),
}

impl ExprError {
    pub fn offset(&self) -> usize {
        match self {
            ExprError::Parse(e) => e.offset,
            ExprError::Elaborate(e) => e.span.start,
        }
    }

    /// The underlying ring error, for elaboration failures.
    pub fn ring_error(&self) -> Option<&RingError> {
        match self {
            ExprError::Parse(_) => None,
            ExprError::Elaborate(e) => Some(&e.error),
        }
    }
}

/// Parses and elaborates `text` in one step.
pub fn realize(text: &str, size_cap: usize) -> Result<FiniteRing, ExprError> {
    let ast = parse(text)?;
    Ok(elaborate(&ast, size_cap)?)
}
