use std::fmt;

use super::lexer::{tokenize, Token, TokenKind};
use super::{ModAtom, ModuleExpr, PolyExpr, PolyTerm, RingExpr, Span};
use crate::deciders::factor::is_prime;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
    /// Tokens that would have been accepted at `offset`; empty for semantic errors.
    pub expected: Vec<&'static str>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at offset {}: {}", self.offset, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

type PResult<T> = Result<T, ParseError>;

pub fn parse(text: &str) -> PResult<RingExpr> {
    if text.trim().is_empty() {
        return Err(ParseError {
            offset: 0,
            message: "empty expression".into(),
            expected: vec!["Z/", "GF(", "triv(", "("],
        });
    }
    let mut parser = Parser {
        tokens: tokenize(text),
        pos: 0,
    };
    let expr = parser.expr()?;
    let tok = parser.peek();
    if tok.kind != TokenKind::End {
        return Err(parser.unexpected(&["*", "[", "end of input"]));
    }
    Ok(expr)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let tok = self.tokens[self.pos].clone();
        if tok.kind != TokenKind::End {
            self.pos += 1;
        }
        tok
    }

    /// End offset of the most recently consumed token.
    fn last_end(&self) -> usize {
        self.pos.checked_sub(1).map_or(0, |i| self.tokens[i].end())
    }

    fn unexpected(&self, expected: &[&'static str]) -> ParseError {
        let tok = self.peek();
        let found = match tok.kind {
            TokenKind::End => "end of input".to_string(),
            TokenKind::Error => format!("unexpected character '{}'", tok.text),
            _ => format!("unexpected '{}'", tok.text),
        };
        ParseError {
            offset: tok.offset,
            message: found,
            expected: expected.to_vec(),
        }
    }

    fn expect_symbol(&mut self, s: &'static str) -> PResult<Token> {
        if self.peek().is_symbol(s) {
            Ok(self.bump())
        } else {
            Err(self.unexpected(&[s]))
        }
    }

    fn expect_ident(&mut self, s: &'static str) -> PResult<Token> {
        if self.peek().is_ident(s) {
            Ok(self.bump())
        } else {
            Err(self.unexpected(&[s]))
        }
    }

    fn int(&mut self) -> PResult<(u64, Token)> {
        let tok = self.peek().clone();
        if tok.kind != TokenKind::Int {
            return Err(self.unexpected(&["integer"]));
        }
        let value = tok.text.parse::<u64>().ok().filter(|&v| v <= i64::MAX as u64).ok_or_else(|| ParseError {
            offset: tok.offset,
            message: format!("integer literal {} is too large", tok.text),
            expected: Vec::new(),
        })?;
        self.bump();
        Ok((value, tok))
    }

    fn expr(&mut self) -> PResult<RingExpr> {
        let first = self.atom()?;
        if !self.peek().is_symbol("*") {
            return Ok(first);
        }
        let start = first.span().start;
        let mut factors = vec![first];
        while self.peek().is_symbol("*") {
            self.bump();
            factors.push(self.atom()?);
        }
        Ok(RingExpr::Product {
            factors,
            span: Span::new(start, self.last_end()),
        })
    }

    fn atom(&mut self) -> PResult<RingExpr> {
        let mut atom = self.primary()?;
        while self.peek().is_symbol("[") {
            self.bump();
            self.expect_ident("x")?;
            self.expect_symbol("]")?;
            self.expect_symbol("/")?;
            self.expect_symbol("(")?;
            let modulus = self.poly()?;
            self.expect_symbol(")")?;
            let start = atom.span().start;
            atom = RingExpr::Quotient {
                base: Box::new(atom),
                modulus,
                span: Span::new(start, self.last_end()),
            };
        }
        Ok(atom)
    }

    fn primary(&mut self) -> PResult<RingExpr> {
        let tok = self.peek().clone();
        let start = tok.offset;
        if tok.is_ident("Z") {
            self.bump();
            self.expect_symbol("/")?;
            let (n, _) = self.int()?;
            Ok(RingExpr::Zmod {
                n,
                span: Span::new(start, self.last_end()),
            })
        } else if tok.is_ident("GF") {
            self.bump();
            self.expect_symbol("(")?;
            let (p, int_tok) = self.int()?;
            if !is_prime(p) {
                return Err(ParseError {
                    offset: int_tok.offset,
                    message: format!("{p} is not prime"),
                    expected: Vec::new(),
                });
            }
            self.expect_symbol(")")?;
            Ok(RingExpr::Gf {
                p,
                span: Span::new(start, self.last_end()),
            })
        } else if tok.is_ident("triv") {
            self.bump();
            self.expect_symbol("(")?;
            let base = self.expr()?;
            self.expect_symbol(",")?;
            let module = self.module()?;
            self.expect_symbol(")")?;
            Ok(RingExpr::Trivial {
                base: Box::new(base),
                module,
                span: Span::new(start, self.last_end()),
            })
        } else if tok.is_symbol("(") {
            self.bump();
            let inner = self.expr()?;
            self.expect_symbol(")")?;
            Ok(inner)
        } else {
            Err(self.unexpected(&["Z/", "GF(", "triv(", "("]))
        }
    }

    fn module(&mut self) -> PResult<ModuleExpr> {
        let start = self.peek().offset;
        let mut atoms = vec![self.mod_atom()?];
        while self.peek().is_symbol("(+)") {
            self.bump();
            atoms.push(self.mod_atom()?);
        }
        Ok(ModuleExpr {
            atoms,
            span: Span::new(start, self.last_end()),
        })
    }

    fn mod_atom(&mut self) -> PResult<ModAtom> {
        let start = self.expect_ident("self")?.offset;
        if self.peek().is_symbol("^") {
            self.bump();
            let (exponent, _) = self.int()?;
            return Ok(ModAtom::Power {
                exponent,
                span: Span::new(start, self.last_end()),
            });
        }
        if self.peek().is_symbol("/") {
            self.bump();
            self.expect_symbol("(")?;
            let mut annihilators = vec![self.int()?.0];
            while self.peek().is_symbol(",") {
                self.bump();
                annihilators.push(self.int()?.0);
            }
            self.expect_symbol(")")?;
            return Ok(ModAtom::Quotient {
                annihilators,
                span: Span::new(start, self.last_end()),
            });
        }
        Ok(ModAtom::Free {
            span: Span::new(start, self.last_end()),
        })
    }

    fn poly(&mut self) -> PResult<PolyExpr> {
        let start = self.peek().offset;
        let mut terms = Vec::new();
        let negative = if self.peek().is_symbol("-") {
            self.bump();
            true
        } else {
            false
        };
        terms.push(self.term(negative, start)?);
        loop {
            let tok = self.peek().clone();
            let negative = if tok.is_symbol("+") {
                false
            } else if tok.is_symbol("-") {
                true
            } else {
                break;
            };
            self.bump();
            terms.push(self.term(negative, tok.offset)?);
        }
        Ok(PolyExpr {
            terms,
            span: Span::new(start, self.last_end()),
        })
    }

    fn term(&mut self, negative: bool, start: usize) -> PResult<PolyTerm> {
        let coeff = if self.peek().kind == TokenKind::Int {
            Some(self.int()?.0)
        } else {
            None
        };
        let has_star = coeff.is_some() && self.peek().is_symbol("*");
        if has_star {
            self.bump();
        }
        let power = if self.peek().is_ident("x") {
            self.bump();
            if self.peek().is_symbol("^") {
                self.bump();
                Some(self.int()?.0)
            } else {
                Some(1)
            }
        } else if coeff.is_none() || has_star {
            return Err(self.unexpected(if coeff.is_none() { &["integer", "x"] } else { &["x"] }));
        } else {
            None
        };
        Ok(PolyTerm {
            negative,
            coeff,
            power,
            span: Span::new(start, self.last_end()),
        })
    }
}
