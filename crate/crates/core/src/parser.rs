//! A small expression language for generating functions in `t` over ℚ[λ].
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := '-'? power
//! power  := atom ('^' int)?
//! atom   := rational | 'lambda' | 't' | call | '(' expr ')'
//! call   := ('log'|'exp') '(' expr ')' | 'li' '(' int ',' expr ')' | 'elam' '(' rational ')'
//! ```
//!
//! `p/q` written without spaces lexes as one rational literal; with spaces
//! (`p / q`) it is a division. `λ` is accepted for `lambda`. A leading minus
//! on a bare literal folds into the literal.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::error::Error;
use crate::exact::{LambdaPoly, Rational};
use crate::families::{elam, polylog_series};
use crate::series::TruncatedSeries;

/// Byte range in the source text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    fn to(self, other: Span) -> Span {
        Span {
            start: self.start,
            end: other.end,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Call {
    Log(Box<Expr>),
    Exp(Box<Expr>),
    /// `li(k, z)`
    Li(i32, Box<Expr>),
    /// `elam(c)` = `(1 + λt)^{c/λ}`
    Elam(Rational),
}

#[derive(Debug, Clone, PartialEq)]
pub enum ExprKind {
    Rational(Rational),
    Lambda,
    T,
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, i64),
    Call(Call),
}

/// A parsed expression. Equality ignores spans.
#[derive(Debug, Clone)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Expr {
    pub fn new(kind: ExprKind) -> Self {
        Expr {
            kind,
            span: Span::default(),
        }
    }

    fn spanned(kind: ExprKind, span: Span) -> Self {
        Expr { kind, span }
    }

    fn count_divisions(&self) -> usize {
        match &self.kind {
            ExprKind::Rational(_) | ExprKind::Lambda | ExprKind::T => 0,
            ExprKind::Add(a, b) | ExprKind::Sub(a, b) | ExprKind::Mul(a, b) => {
                a.count_divisions() + b.count_divisions()
            }
            ExprKind::Div(a, b) => 1 + a.count_divisions() + b.count_divisions(),
            ExprKind::Neg(a) | ExprKind::Pow(a, _) => a.count_divisions(),
            ExprKind::Call(Call::Log(a) | Call::Exp(a) | Call::Li(_, a)) => a.count_divisions(),
            ExprKind::Call(Call::Elam(_)) => 0,
        }
    }

    fn mentions_series(&self) -> bool {
        match &self.kind {
            ExprKind::Rational(_) | ExprKind::Lambda => false,
            ExprKind::T | ExprKind::Call(_) => true,
            ExprKind::Add(a, b)
            | ExprKind::Sub(a, b)
            | ExprKind::Mul(a, b)
            | ExprKind::Div(a, b) => a.mentions_series() || b.mentions_series(),
            ExprKind::Neg(a) | ExprKind::Pow(a, _) => a.mentions_series(),
        }
    }
}

impl fmt::Display for Expr {
    /// Renders in a form that reparses to the same tree; every compound
    /// subexpression is parenthesised.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Rational(r) if r.is_negative() => write!(f, "({r})"),
            ExprKind::Rational(r) => write!(f, "{r}"),
            ExprKind::Lambda => f.write_str("lambda"),
            ExprKind::T => f.write_str("t"),
            ExprKind::Add(a, b) => write!(f, "({a} + {b})"),
            ExprKind::Sub(a, b) => write!(f, "({a} - {b})"),
            ExprKind::Mul(a, b) => write!(f, "({a} * {b})"),
            ExprKind::Div(a, b) => write!(f, "({a} / {b})"),
            ExprKind::Neg(a) if matches!(a.kind, ExprKind::Rational(_)) => write!(f, "(-({a}))"),
            ExprKind::Neg(a) => write!(f, "(-{a})"),
            ExprKind::Pow(a, e) => write!(f, "({a}^{e})"),
            ExprKind::Call(Call::Log(a)) => write!(f, "log({a})"),
            ExprKind::Call(Call::Exp(a)) => write!(f, "exp({a})"),
            ExprKind::Call(Call::Li(k, a)) => write!(f, "li({k}, {a})"),
            ExprKind::Call(Call::Elam(c)) => write!(f, "elam({c})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: expected {}, found {found}", .expected.join(" | "))]
    Syntax {
        offset: usize,
        expected: Vec<&'static str>,
        found: String,
    },
    #[error("{name} takes {expected} argument(s), got {found} (bytes {}..{})", .span.start, .span.end)]
    Arity {
        name: &'static str,
        expected: usize,
        found: usize,
        span: Span,
    },
    #[error("invalid argument to {name}: {message} (bytes {}..{})", .span.start, .span.end)]
    Argument {
        name: &'static str,
        message: String,
        span: Span,
    },
}

impl ParseError {
    /// Source bytes the error points at.
    pub fn span(&self) -> Span {
        match self {
            ParseError::Syntax { offset, .. } => Span {
                start: *offset,
                end: *offset + 1,
            },
            ParseError::Arity { span, .. } | ParseError::Argument { span, .. } => *span,
        }
    }
}

/// An evaluation failure, tagged with the subexpression that raised it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{source} (bytes {}..{})", .span.start, .span.end)]
pub struct EvalError {
    pub span: Span,
    pub source: Error,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rational, bool),
    Lambda,
    T,
    Ident(&'static str),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    EqEq,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(r, _) => format!("number `{r}`"),
            Tok::Lambda => "`lambda`".into(),
            Tok::T => "`t`".into(),
            Tok::Ident(name) => format!("`{name}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::EqEq => "`==`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

const ATOM_START: &[&str] = &["rational", "lambda", "t", "log", "exp", "li", "elam", "("];

fn lex(src: &str) -> Result<Vec<(Tok, Span)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = src[i..].chars().next().expect("in bounds");
        let start = i;
        if c.is_whitespace() {
            i += c.len_utf8();
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            'λ' => Some(Tok::Lambda),
            _ => None,
        };
        if let Some(tok) = single {
            i += c.len_utf8();
            out.push((tok, Span { start, end: i }));
            continue;
        }
        if c == '=' {
            if bytes.get(i + 1) == Some(&b'=') {
                i += 2;
                out.push((Tok::EqEq, Span { start, end: i }));
                continue;
            }
            return Err(ParseError::Syntax {
                offset: i,
                expected: vec!["=="],
                found: "`=`".into(),
            });
        }
        if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let mut is_integer = true;
            if bytes.get(i) == Some(&b'/') && bytes.get(i + 1).is_some_and(u8::is_ascii_digit) {
                is_integer = false;
                i += 1;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
            }
            let text = &src[start..i];
            let value = text.parse::<Rational>().map_err(|_| ParseError::Syntax {
                offset: start,
                expected: vec!["nonzero denominator"],
                found: format!("`{text}`"),
            })?;
            out.push((Tok::Num(value, is_integer), Span { start, end: i }));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            let tok = match &src[start..i] {
                "lambda" => Tok::Lambda,
                "t" => Tok::T,
                "log" => Tok::Ident("log"),
                "exp" => Tok::Ident("exp"),
                "li" => Tok::Ident("li"),
                "elam" => Tok::Ident("elam"),
                other => {
                    return Err(ParseError::Syntax {
                        offset: start,
                        expected: ATOM_START.to_vec(),
                        found: format!("identifier `{other}`"),
                    })
                }
            };
            out.push((tok, Span { start, end: i }));
            continue;
        }
        return Err(ParseError::Syntax {
            offset: start,
            expected: ATOM_START.to_vec(),
            found: format!("`{c}`"),
        });
    }
    out.push((
        Tok::Eof,
        Span {
            start: src.len(),
            end: src.len(),
        },
    ));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn span(&self) -> Span {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, Span) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        ParseError::Syntax {
            offset: self.span().start,
            expected: expected.to_vec(),
            found: self.peek().describe(),
        }
    }

    fn expect(&mut self, tok: Tok, name: &'static str) -> Result<Span, ParseError> {
        if *self.peek() == tok {
            Ok(self.bump().1)
        } else {
            Err(self.error(&[name]))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let ctor: fn(Box<Expr>, Box<Expr>) -> ExprKind = match self.peek() {
                Tok::Plus => ExprKind::Add,
                Tok::Minus => ExprKind::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            let span = lhs.span.to(rhs.span);
            lhs = Expr::spanned(ctor(Box::new(lhs), Box::new(rhs)), span);
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            let ctor: fn(Box<Expr>, Box<Expr>) -> ExprKind = match self.peek() {
                Tok::Star => ExprKind::Mul,
                Tok::Slash => ExprKind::Div,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.factor()?;
            let span = lhs.span.to(rhs.span);
            lhs = Expr::spanned(ctor(Box::new(lhs), Box::new(rhs)), span);
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() != Tok::Minus {
            return self.power();
        }
        let minus = self.bump().1;
        // `-3/4` is a literal, but `-(3/4)` and `-2^2` stay negations
        let bare_literal = matches!(self.peek(), Tok::Num(..))
            && self.toks.get(self.pos + 1).map(|t| &t.0) != Some(&Tok::Caret);
        let inner = self.power()?;
        let span = minus.to(inner.span);
        Ok(match inner.kind {
            ExprKind::Rational(r) if bare_literal => Expr::spanned(ExprKind::Rational(-r), span),
            kind => Expr::spanned(
                ExprKind::Neg(Box::new(Expr::spanned(kind, inner.span))),
                span,
            ),
        })
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let (exp, end) = self.int_literal()?;
        let span = base.span.to(end);
        Ok(Expr::spanned(ExprKind::Pow(Box::new(base), exp), span))
    }

    fn int_literal(&mut self) -> Result<(i64, Span), ParseError> {
        let start = self.span();
        let negative = *self.peek() == Tok::Minus;
        if negative {
            self.bump();
        }
        match self.peek().clone() {
            Tok::Num(r, true) => {
                let end = self.bump().1;
                let v = r.to_i64().ok_or_else(|| ParseError::Syntax {
                    offset: end.start,
                    expected: vec!["integer fitting in 64 bits"],
                    found: format!("`{r}`"),
                })?;
                Ok((if negative { -v } else { v }, start.to(end)))
            }
            _ => Err(self.error(&["integer"])),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let (tok, span) = self.bump();
        match tok {
            Tok::Num(r, _) => Ok(Expr::spanned(ExprKind::Rational(r), span)),
            Tok::Lambda => Ok(Expr::spanned(ExprKind::Lambda, span)),
            Tok::T => Ok(Expr::spanned(ExprKind::T, span)),
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.expect(Tok::RParen, ")")?;
                Ok(Expr::spanned(inner.kind, span.to(close)))
            }
            Tok::Ident(name) => self.call(name, span),
            found => Err(ParseError::Syntax {
                offset: span.start,
                expected: ATOM_START.to_vec(),
                found: found.describe(),
            }),
        }
    }

    fn call(&mut self, name: &'static str, name_span: Span) -> Result<Expr, ParseError> {
        self.expect(Tok::LParen, "(")?;
        let mut args = vec![self.expr()?];
        while *self.peek() == Tok::Comma {
            self.bump();
            args.push(self.expr()?);
        }
        let close = self.expect(Tok::RParen, ")")?;
        let span = name_span.to(close);
        let expected = if name == "li" { 2 } else { 1 };
        if args.len() != expected {
            return Err(ParseError::Arity {
                name,
                expected,
                found: args.len(),
                span,
            });
        }
        let mut args = args.into_iter();
        let first = args.next().expect("arity checked");
        let literal = |e: &Expr| match &e.kind {
            ExprKind::Rational(r) => Some(r.clone()),
            _ => None,
        };
        let call = match name {
            "log" => Call::Log(Box::new(first)),
            "exp" => Call::Exp(Box::new(first)),
            "li" => {
                let k = literal(&first)
                    .and_then(|r| r.to_i64())
                    .and_then(|k| i32::try_from(k).ok())
                    .ok_or_else(|| ParseError::Argument {
                        name,
                        message: "order must be an integer literal".into(),
                        span: first.span,
                    })?;
                Call::Li(k, Box::new(args.next().expect("arity checked")))
            }
            "elam" => Call::Elam(literal(&first).ok_or_else(|| ParseError::Argument {
                name,
                message: "exponent must be a rational literal".into(),
                span: first.span,
            })?),
            _ => unreachable!("lexer only produces known names"),
        };
        Ok(Expr::spanned(ExprKind::Call(call), span))
    }
}

fn parse_tokens(src: &str) -> Result<Parser, ParseError> {
    Ok(Parser {
        toks: lex(src)?,
        pos: 0,
    })
}

/// Parses a single expression.
pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let mut p = parse_tokens(input)?;
    let e = p.expr()?;
    if *p.peek() != Tok::Eof {
        return Err(p.error(&["+", "-", "*", "/", "^", "end of input"]));
    }
    Ok(e)
}

/// Parses `lhs == rhs`.
pub fn parse_equation(input: &str) -> Result<(Expr, Expr), ParseError> {
    let mut p = parse_tokens(input)?;
    let lhs = p.expr()?;
    if *p.peek() != Tok::EqEq {
        return Err(p.error(&["+", "-", "*", "/", "^", "=="]));
    }
    p.bump();
    let rhs = p.expr()?;
    if *p.peek() != Tok::Eof {
        return Err(p.error(&["+", "-", "*", "/", "^", "end of input"]));
    }
    Ok((lhs, rhs))
}

type LSeries = TruncatedSeries<LambdaPoly>;

/// Evaluates `ast` to a series with exactly `precision` coefficients.
///
/// Internally works at `precision` plus the number of divisions, since each
/// `t`-cancelling quotient consumes one coefficient.
pub fn eval_expr(ast: &Expr, precision: usize) -> Result<LSeries, EvalError> {
    let working = precision + ast.count_divisions();
    let s = eval_at(ast, working)?;
    if s.precision() < precision {
        return Err(EvalError {
            span: ast.span,
            source: Error::PrecisionExceeded {
                needed: precision,
                precision: s.precision(),
            },
        });
    }
    Ok(s.truncate(precision))
}

fn eval_at(e: &Expr, n: usize) -> Result<LSeries, EvalError> {
    let tag = |source: Error| EvalError {
        span: e.span,
        source,
    };
    Ok(match &e.kind {
        ExprKind::Rational(r) => LSeries::constant(LambdaPoly::constant(r.clone()), n),
        ExprKind::Lambda => LSeries::constant(LambdaPoly::lambda(), n),
        ExprKind::T => LSeries::t(n),
        ExprKind::Add(a, b) => eval_at(a, n)?.add(&eval_at(b, n)?),
        ExprKind::Sub(a, b) => eval_at(a, n)?.sub(&eval_at(b, n)?),
        ExprKind::Mul(a, b) => eval_at(a, n)?.mul(&eval_at(b, n)?),
        ExprKind::Div(a, b) => eval_at(a, n)?.div(&eval_at(b, n)?).map_err(tag)?,
        ExprKind::Neg(a) => eval_at(a, n)?.neg(),
        ExprKind::Pow(a, k) => eval_at(a, n)?.powi(*k).map_err(tag)?,
        ExprKind::Call(Call::Log(a)) => eval_at(a, n)?.log().map_err(tag)?,
        ExprKind::Call(Call::Exp(a)) => eval_at(a, n)?.exp().map_err(tag)?,
        ExprKind::Call(Call::Li(k, a)) => {
            let inner = eval_at(a, n)?;
            polylog_series(*k, inner.precision())
                .promote::<LambdaPoly>()
                .compose(&inner)
                .map_err(tag)?
        }
        ExprKind::Call(Call::Elam(c)) => elam(c, n),
    })
}

/// Parses and evaluates in one step.
pub fn eval_str(input: &str, precision: usize) -> Result<LSeries, ExprError> {
    Ok(eval_expr(&parse(input)?, precision)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error("`{0}` is not a polynomial in lambda")]
    NotLambdaPoly(String),
}

impl ExprError {
    pub fn span(&self) -> Option<Span> {
        match self {
            ExprError::Parse(e) => Some(e.span()),
            ExprError::Eval(e) => Some(e.span),
            ExprError::NotLambdaPoly(_) => None,
        }
    }
}

impl FromStr for LambdaPoly {
    type Err = ExprError;

    /// Reads back the canonical rendering (or any `t`-free expression that
    /// evaluates to a polynomial in λ).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let ast = parse(s)?;
        if ast.mentions_series() {
            return Err(ExprError::NotLambdaPoly(s.to_string()));
        }
        let value = eval_expr(&ast, 1)?;
        Ok(value.coeff(0).clone())
    }
}
