//! Expression syntax for elements of `L(E)`.
//!
//! ```text
//! expr   := term { ("+" | "-") term }
//! term   := ["-"] [scalar] [factor { "." factor }]     (scalar or factor required)
//! factor := ident ["*"] | "(" expr ")"
//! scalar := digits ["/" digits]
//! ```
//!
//! A trailing `*` marks a ghost edge. A bare scalar stands for that multiple of
//! the unit `Σ v`, so the printed form of every element parses back to it.
//! Positions in errors are 1-based character columns.

use std::iter::Peekable;
use std::str::CharIndices;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{Element, GeneratorKind, LeavittAlgebra};
use crate::error::ExprError;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Sum(Vec<Expr>),
    Product(Vec<Expr>),
    Scaled(BigRational, Box<Expr>),
    /// A multiple of the unit.
    Scalar(BigRational),
    Generator { kind: GeneratorKind, id: String },
    Paren(Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Number(BigInt),
    Slash,
    Plus,
    Minus,
    Dot,
    Star,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let mut out = Vec::new();
    let mut chars: Peekable<CharIndices> = src.char_indices().peekable();
    let col = |byte: usize| src[..byte].chars().count() + 1;
    while let Some(&(i, c)) = chars.peek() {
        let pos = col(i);
        let single = match c {
            '/' => Some(Tok::Slash),
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '.' => Some(Tok::Dot),
            '*' => Some(Tok::Star),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            chars.next();
            out.push((pos, t));
        } else if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&(_, d)) = chars.peek().filter(|(_, d)| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
            }
            out.push((pos, Tok::Number(s.parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() {
            let mut s = String::new();
            while let Some(&(_, d)) = chars.peek().filter(|(_, d)| d.is_ascii_alphanumeric() || *d == '_') {
                s.push(d);
                chars.next();
            }
            out.push((pos, Tok::Ident(s)));
        } else {
            return Err(ExprError::Lex {
                pos,
                msg: format!("unexpected character {c:?}"),
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    graph: &'a Graph,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn syntax<T>(&self, msg: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut terms = vec![self.term()?];
        loop {
            if self.eat(&Tok::Plus) {
                terms.push(self.term()?);
            } else if self.peek() == Some(&Tok::Minus) {
                // Binary minus: the term parser consumes the sign.
                terms.push(self.term()?);
            } else {
                break;
            }
        }
        Ok(if terms.len() == 1 {
            terms.pop().expect("one term")
        } else {
            Expr::Sum(terms)
        })
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let negative = self.eat(&Tok::Minus);
        let scalar = match self.peek() {
            Some(Tok::Number(_)) => Some(self.scalar()?),
            _ => None,
        };
        let starts_factor = matches!(self.peek(), Some(Tok::Ident(_) | Tok::LParen));
        let product = if starts_factor {
            let mut factors = vec![self.factor()?];
            while self.eat(&Tok::Dot) {
                factors.push(self.factor()?);
            }
            Some(if factors.len() == 1 {
                factors.pop().expect("one factor")
            } else {
                Expr::Product(factors)
            })
        } else {
            None
        };
        let sign = |q: BigRational| if negative { -q } else { q };
        match (scalar, product) {
            (Some(k), Some(p)) => Ok(Expr::Scaled(sign(k), Box::new(p))),
            (None, Some(p)) if negative => Ok(Expr::Scaled(sign(BigRational::one()), Box::new(p))),
            (None, Some(p)) => Ok(p),
            (Some(k), None) => Ok(Expr::Scalar(sign(k))),
            (None, None) => self.syntax("expected a scalar, identifier or '('"),
        }
    }

    fn scalar(&mut self) -> Result<BigRational, ExprError> {
        let Some(Tok::Number(num)) = self.peek().cloned() else {
            return self.syntax("expected a number");
        };
        self.at += 1;
        if !self.eat(&Tok::Slash) {
            return Ok(BigRational::from_integer(num));
        }
        let Some(Tok::Number(den)) = self.peek().cloned() else {
            return self.syntax("expected a denominator after '/'");
        };
        if den.is_zero() {
            return self.syntax("zero denominator");
        }
        self.at += 1;
        Ok(BigRational::new(num, den))
    }

    fn factor(&mut self) -> Result<Expr, ExprError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::LParen) => {
                self.at += 1;
                let inner = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return self.syntax("expected ')'");
                }
                Ok(Expr::Paren(Box::new(inner)))
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                let ghost = self.eat(&Tok::Star);
                let kind = if self.graph.vertex(&name).is_some() {
                    if ghost {
                        return Err(ExprError::GhostOnVertex { pos, name });
                    }
                    GeneratorKind::Vertex
                } else if self.graph.edge(&name).is_some() {
                    if ghost {
                        GeneratorKind::GhostEdge
                    } else {
                        GeneratorKind::Edge
                    }
                } else {
                    return Err(ExprError::UnknownIdent { pos, name });
                };
                Ok(Expr::Generator { kind, id: name })
            }
            _ => self.syntax("expected an identifier or '('"),
        }
    }
}

/// Parses `src` against the identifiers of `graph`.
pub fn parse_expression(src: &str, graph: &Graph) -> Result<Expr, ExprError> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: src.chars().count() + 1,
        graph,
    };
    let e = p.expr()?;
    if p.at < p.toks.len() {
        return p.syntax("unexpected trailing input");
    }
    Ok(e)
}

pub fn eval(expr: &Expr, alg: &Arc<LeavittAlgebra>) -> Result<Element, ExprError> {
    Ok(match expr {
        Expr::Sum(terms) => {
            let mut acc = alg.zero();
            for t in terms {
                acc = acc.checked_add(&eval(t, alg)?)?;
            }
            acc
        }
        Expr::Product(factors) => {
            let mut acc = alg.one();
            for f in factors {
                acc = acc.checked_mul(&eval(f, alg)?)?;
            }
            acc
        }
        Expr::Scaled(k, inner) => eval(inner, alg)?.scale(&alg.field().rational(k)?),
        Expr::Scalar(k) => alg.scalar(alg.field().rational(k)?),
        Expr::Generator { kind, id } => alg.generator(*kind, id)?,
        Expr::Paren(inner) => eval(inner, alg)?,
    })
}

/// Parses and evaluates `src` in `alg`.
pub fn evaluate(src: &str, alg: &Arc<LeavittAlgebra>) -> Result<Element, ExprError> {
    eval(&parse_expression(src, alg.graph())?, alg)
}
