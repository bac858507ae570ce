//! Text expressions over a declared signature.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := factor ('*' factor)*
//! factor  := '-' factor | atom ('^' uint)?
//! atom    := complex | blade | '(' expr ')' | func '(' expr ')'
//! complex := decimal | decimal? 'i'
//! blade   := 'e' digit+
//! func    := 'rev' | 'gi' | 'cc' | 'conj' | 'herm'
//! ```
//!
//! Blade digits are distinct generator indices in `1..=n`, in any order;
//! `e21` means `e2 e1 = -e12`. Errors carry 0-based byte offsets.

use std::fmt;

use crate::blade::{blade_mul, BladeIndex};
use crate::involutions::{
    clifford_conjugation, complex_conjugate, grade_involution, hermitian, reverse,
};
use crate::{Complex, Error, Multivector, Result, Signature};

/// Parentheses and unary minus nest at most this deep.
pub const MAX_DEPTH: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    IndexOutOfRange { index: usize, n: usize },
    RepeatedIndex { index: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::Syntax(msg) => write!(f, "syntax error at byte {}: {msg}", self.offset),
            ParseErrorKind::IndexOutOfRange { index, n } => write!(
                f,
                "generator index {index} out of range 1..={n} at byte {}",
                self.offset
            ),
            ParseErrorKind::RepeatedIndex { index } => {
                write!(
                    f,
                    "repeated generator index {index} in blade at byte {}",
                    self.offset
                )
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Rev,
    Gi,
    Cc,
    Conj,
    Herm,
}

impl Func {
    fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "rev" => Func::Rev,
            "gi" => Func::Gi,
            "cc" => Func::Cc,
            "conj" => Func::Conj,
            "herm" => Func::Herm,
            _ => return None,
        })
    }

    fn apply(self, u: &Multivector) -> Multivector {
        match self {
            Func::Rev => reverse(u),
            Func::Gi => grade_involution(u),
            Func::Cc => clifford_conjugation(u),
            Func::Conj => complex_conjugate(u),
            Func::Herm => hermitian(u),
        }
    }
}

/// Parsed expression. Blade tokens keep their indices in written order.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Number(Complex),
    Blade(Vec<usize>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Call(Func, Box<Expr>),
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    /// Real literal; the second field is set for plain digit strings that fit
    /// an exponent.
    Real(f64, Option<u32>),
    Imag(f64),
    Blade(Vec<usize>),
    Func(Func),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn syntax(offset: usize, msg: impl Into<String>) -> ParseError {
    ParseError {
        offset,
        kind: ParseErrorKind::Syntax(msg.into()),
    }
}

fn tokenize(text: &str, sig: Signature) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let start = i;
        let b = bytes[i];
        let tok = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b'*' => Token::Star,
            b'^' => Token::Caret,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b'0'..=b'9' | b'.' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && bytes[i] == b'.' {
                    i += 1;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                let lit = &text[start..i];
                let value: f64 = lit
                    .parse()
                    .map_err(|_| syntax(start, format!("malformed number `{lit}`")))?;
                if i < bytes.len()
                    && bytes[i] == b'i'
                    && !bytes.get(i + 1).is_some_and(u8::is_ascii_alphanumeric)
                {
                    i += 1;
                    out.push((start, Token::Imag(value)));
                } else {
                    let exponent = if lit.contains('.') {
                        None
                    } else {
                        lit.parse::<u32>().ok()
                    };
                    out.push((start, Token::Real(value, exponent)));
                }
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                if b == b'e' && bytes.get(i + 1).is_some_and(u8::is_ascii_digit) {
                    i += 1;
                    let mut indices = Vec::new();
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        let index = (bytes[i] - b'0') as usize;
                        if index == 0 || index > sig.n() {
                            return Err(ParseError {
                                offset: i,
                                kind: ParseErrorKind::IndexOutOfRange { index, n: sig.n() },
                            });
                        }
                        if indices.contains(&index) {
                            return Err(ParseError {
                                offset: i,
                                kind: ParseErrorKind::RepeatedIndex { index },
                            });
                        }
                        indices.push(index);
                        i += 1;
                    }
                    if bytes.get(i).is_some_and(u8::is_ascii_alphabetic) {
                        return Err(syntax(i, "unexpected letter after blade"));
                    }
                    out.push((start, Token::Blade(indices)));
                    continue;
                }
                while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                let word = &text[start..i];
                let tok = if word == "i" {
                    Token::Imag(1.0)
                } else if let Some(f) = Func::from_name(word) {
                    Token::Func(f)
                } else {
                    return Err(syntax(start, format!("unknown identifier `{word}`")));
                };
                out.push((start, tok));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(syntax(start, format!("unexpected character `{ch}`")));
            }
        };
        i += 1;
        out.push((start, tok));
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Token, what: &str) -> Result<(), ParseError> {
        let offset = self.offset();
        match self.next() {
            Some(t) if t == want => Ok(()),
            _ => Err(syntax(offset, format!("expected {what}"))),
        }
    }

    fn descend(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(syntax(self.offset(), "expression nested too deeply"));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            self.descend()?;
            let inner = self.factor()?;
            self.depth -= 1;
            return Ok(Expr::Neg(Box::new(inner)));
        }
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let offset = self.offset();
        match self.next() {
            Some(Token::Real(_, Some(k))) => Ok(Expr::Pow(Box::new(base), k)),
            _ => Err(syntax(offset, "expected a nonnegative integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let offset = self.offset();
        match self.next() {
            Some(Token::Real(v, _)) => Ok(Expr::Number(Complex::new(v, 0.0))),
            Some(Token::Imag(v)) => Ok(Expr::Number(Complex::new(0.0, v))),
            Some(Token::Blade(indices)) => Ok(Expr::Blade(indices)),
            Some(Token::LParen) => {
                self.descend()?;
                let inner = self.expr()?;
                self.expect(Token::RParen, "`)`")?;
                self.depth -= 1;
                Ok(inner)
            }
            Some(Token::Func(f)) => {
                self.expect(Token::LParen, "`(` after function name")?;
                self.descend()?;
                let inner = self.expr()?;
                self.expect(Token::RParen, "`)`")?;
                self.depth -= 1;
                Ok(Expr::Call(f, Box::new(inner)))
            }
            Some(_) => Err(syntax(offset, "expected a number, blade, `(` or function")),
            None => Err(syntax(offset, "unexpected end of input")),
        }
    }
}

/// Parses `text` into an expression, validating blade indices against `sig`.
pub fn parse(text: &str, sig: Signature) -> Result<Expr, ParseError> {
    let tokens = tokenize(text, sig)?;
    if tokens.is_empty() {
        return Err(syntax(0, "empty expression"));
    }
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: text.len(),
        depth: 0,
    };
    let expr = parser.expr()?;
    if parser.pos < parser.tokens.len() {
        return Err(syntax(parser.offset(), "unexpected trailing input"));
    }
    Ok(expr)
}

/// Canonical blade and sign for a token written in arbitrary order.
pub fn normalize_blade(indices: &[usize], sig: Signature) -> (BladeIndex, i8) {
    indices
        .iter()
        .fold((BladeIndex::SCALAR, 1i8), |(acc, sign), &a| {
            let (m, s) = blade_mul(acc, BladeIndex::generator(a), sig);
            (m, sign * s)
        })
}

fn eval(expr: &Expr, sig: Signature) -> Result<Multivector> {
    Ok(match expr {
        Expr::Number(c) => Multivector::scalar(sig, *c),
        Expr::Blade(indices) => {
            let (blade, sign) = normalize_blade(indices, sig);
            Multivector::blade(sig, blade, Complex::new(sign as f64, 0.0))
        }
        Expr::Neg(inner) => -&eval(inner, sig)?,
        Expr::Add(a, b) => eval(a, sig)?.add(&eval(b, sig)?)?,
        Expr::Sub(a, b) => eval(a, sig)?.sub(&eval(b, sig)?)?,
        Expr::Mul(a, b) => eval(a, sig)?.geometric_product(&eval(b, sig)?)?,
        Expr::Pow(base, k) => eval(base, sig)?.pow(*k),
        Expr::Call(f, inner) => f.apply(&eval(inner, sig)?),
    })
}

/// Evaluates a parsed expression. Results with non-finite coefficients are
/// rejected.
pub fn evaluate(expr: &Expr, sig: Signature) -> Result<Multivector> {
    let value = eval(expr, sig)?;
    if !value.is_finite() {
        return Err(Error::NonFinite);
    }
    Ok(value)
}

pub fn parse_and_evaluate(text: &str, sig: Signature) -> Result<Multivector> {
    let expr = parse(text, sig)?;
    evaluate(&expr, sig)
}

fn fmt_real(x: f64) -> String {
    // shortest round-trip representation; `-0` prints as `0`
    if x == 0.0 {
        "0".to_string()
    } else {
        format!("{x}")
    }
}

/// Splits a coefficient into a leading sign and its unsigned rendering.
fn split_coeff(c: Complex) -> (bool, String) {
    if c.im == 0.0 {
        (c.re < 0.0, fmt_real(c.re.abs()))
    } else if c.re == 0.0 {
        (c.im < 0.0, format!("{}i", fmt_real(c.im.abs())))
    } else {
        let sign = if c.im < 0.0 { '-' } else { '+' };
        (
            false,
            format!("({}{sign}{}i)", fmt_real(c.re), fmt_real(c.im.abs())),
        )
    }
}

/// Canonical text: nonzero terms in ascending mask order, the scalar term
/// without a blade, e.g. `0.5 - 0.5*e1 + (1+2i)*e13`. Zero prints as `0`.
impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (blade, c) in self.terms() {
            let (negative, body) = split_coeff(c);
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            f.write_str(&body)?;
            if blade != BladeIndex::SCALAR {
                write!(f, "*{blade}")?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Renders a complex number in the same style as multivector coefficients.
pub fn format_complex(c: Complex) -> String {
    Multivector::scalar(Signature::new(0, 0).expect("scalar algebra"), c).to_string()
}
