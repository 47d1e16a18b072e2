//! Sparse bivariate polynomials over the rationals.
//!
//! Terms map exponent pairs `(a, b)` (for `x^a y^b`) to nonzero rational
//! coefficients; every operation is exact. The text grammar accepted by
//! [`BivariatePoly::parse`]:
//!
//! ```text
//!   expr   := ['+'|'-'] term { ('+'|'-') term }
//!   term   := factor { '*' factor | factor }     (juxtaposition multiplies
//!                                                 before x, y, or parens)
//!   factor := base [ '^' nonneg-integer ]
//!   base   := number | 'x' | 'y' | '(' expr ')'
//!   number := digits [ '/' digits ]
//! ```
//!
//! The printer writes terms in lexicographic order with `x > y`, largest
//! first, and its output parses back to the same polynomial.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::Result;

/// Exponent pair `(a, b)` for the monomial `x^a y^b`.
pub type Monomial = (u32, u32);

/// A polynomial in `Q[x, y]`. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivariatePoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((0, 0), c);
        }
        Self { terms }
    }

    /// The monomial `c * x^a y^b`.
    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(BigRational::one(), m)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterate terms in the map's key order (lex ascending).
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &BigRational)> + '_ {
        self.terms.iter().map(|(&m, c)| (m, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: Monomial) -> BigRational {
        self.terms
            .get(&m)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Maximum total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, b)| a + b).max()
    }

    /// Minimum total degree (the order at the origin); `None` for zero.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, b)| a + b).min()
    }

    fn insert(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.insert(m, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&m, c)| (m, -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &other.terms {
                out.insert((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&m, v)| (m, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn partial_x(&self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            if a > 0 {
                out.insert((a - 1, b), c * BigRational::from_integer(BigInt::from(a)));
            }
        }
        out
    }

    pub fn partial_y(&self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            if b > 0 {
                out.insert((a, b - 1), c * BigRational::from_integer(BigInt::from(b)));
            }
        }
        out
    }

    /// Parses the grammar in the module docs; errors carry byte positions.
    pub fn parse(text: &str) -> Result<Self> {
        Parser::new(text)?.parse()
    }
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Lex descending with x > y: x-heavy terms first.
        for (idx, (&(a, b), c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let mut parts: Vec<String> = Vec::new();
            if !mag.is_one() || (a == 0 && b == 0) {
                parts.push(mag.to_string());
            }
            if a == 1 {
                parts.push("x".into());
            } else if a > 1 {
                parts.push(format!("x^{a}"));
            }
            if b == 1 {
                parts.push("y".into());
            } else if b > 1 {
                parts.push(format!("y^{b}"));
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(BigRational),
    X,
    Y,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Token)>> {
    let mut tokens = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let simple = match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => Some(Token::Plus),
            '-' => Some(Token::Minus),
            '*' => Some(Token::Star),
            '^' => Some(Token::Caret),
            '(' => Some(Token::LParen),
            ')' => Some(Token::RParen),
            'x' => Some(Token::X),
            'y' => Some(Token::Y),
            _ => None,
        };
        if let Some(tok) = simple {
            tokens.push((i, tok));
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let numerator: BigInt = text[start..i].parse().expect("digit run");
            let mut value = BigRational::from_integer(numerator);
            if i < bytes.len() && bytes[i] == b'/' {
                i += 1;
                let dstart = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if dstart == i {
                    return Err(Error::Parse {
                        pos: dstart,
                        message: "expected digits after `/`".into(),
                    });
                }
                let denominator: BigInt = text[dstart..i].parse().expect("digit run");
                if denominator.is_zero() {
                    return Err(Error::Parse {
                        pos: dstart,
                        message: "zero denominator".into(),
                    });
                }
                value /= BigRational::from_integer(denominator);
            }
            tokens.push((start, Token::Num(value)));
            continue;
        }
        if c.is_ascii_alphabetic() {
            return Err(Error::Parse {
                pos: i,
                message: format!("unknown variable `{c}` (variables are x and y)"),
            });
        }
        return Err(Error::Parse {
            pos: i,
            message: format!("invalid character `{c}`"),
        });
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self> {
        Ok(Self {
            tokens: lex(text)?,
            pos: 0,
            end: text.len(),
        })
    }

    fn peek(&self) -> Option<&(usize, Token)> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<(usize, Token)> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, pos: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos,
            message: message.into(),
        })
    }

    fn parse(mut self) -> Result<BivariatePoly> {
        if self.tokens.is_empty() {
            return self.error(0, "empty polynomial");
        }
        let value = self.expr()?;
        if let Some(&(pos, _)) = self.peek() {
            return self.error(pos, "unexpected trailing input");
        }
        Ok(value)
    }

    fn expr(&mut self) -> Result<BivariatePoly> {
        let mut negate = false;
        if let Some((_, tok)) = self.peek() {
            match tok {
                Token::Plus => {
                    self.bump();
                }
                Token::Minus => {
                    self.bump();
                    negate = true;
                }
                _ => {}
            }
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        while let Some((_, tok)) = self.peek() {
            match tok {
                Token::Plus => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Token::Minus => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<BivariatePoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(&(_, Token::Star)) => {
                    self.bump();
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                // Juxtaposition: `2x`, `x(y+1)`, `x y^2`.
                Some(&(_, Token::X)) | Some(&(_, Token::Y)) | Some(&(_, Token::LParen)) => {
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<BivariatePoly> {
        let base = self.base()?;
        if let Some(&(_, Token::Caret)) = self.peek() {
            self.bump();
            match self.bump() {
                Some((pos, Token::Num(e))) => {
                    if !e.is_integer() || e.is_negative() {
                        return self.error(pos, "exponent must be a nonnegative integer");
                    }
                    let e: u32 = e.to_integer().try_into().map_err(|_| Error::Parse {
                        pos,
                        message: "exponent too large".into(),
                    })?;
                    return Ok(base.pow(e));
                }
                Some((pos, _)) => return self.error(pos, "expected an exponent after `^`"),
                None => return self.error(self.end, "expected an exponent after `^`"),
            }
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<BivariatePoly> {
        match self.bump() {
            Some((_, Token::Num(v))) => Ok(BivariatePoly::constant(v)),
            Some((_, Token::X)) => Ok(BivariatePoly::monomial((1, 0))),
            Some((_, Token::Y)) => Ok(BivariatePoly::monomial((0, 1))),
            Some((_, Token::LParen)) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some((_, Token::RParen)) => Ok(inner),
                    Some((pos, _)) => self.error(pos, "expected `)`"),
                    None => self.error(self.end, "unclosed parenthesis"),
                }
            }
            Some((pos, t)) => self.error(pos, format!("unexpected token {t:?}")),
            None => self.error(self.end, "unexpected end of input"),
        }
    }
}
