//! Expression parser for algebra elements.
//!
//! Grammar (whitespace-insensitive, products left-to-right and
//! noncommutative):
//!
//! ```text
//! expr   := ['-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' nat]
//! atom   := rational | 'i' | 'l' | generator | '(' expr ')'
//! ```
//!
//! Generators are `a`/`alpha`, `b`/`beta`, `d`/`delta`; `l` is the
//! deformation parameter λ, `i` the imaginary unit, and rationals are
//! `n` or `n/m`.  The canonical text of any element parses back to it.

use std::fmt;

use num_bigint::BigInt;

use crate::algebra::{Element, Gen};
use crate::scalar::{GaussRational, Rat, Scalar};

// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        position,
        message: message.into(),
    })
}

// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Num(Rat),
    ImaginaryUnit,
    Lambda,
    Generator(Gen),
}

impl Expr {
    pub fn eval(&self) -> Element {
        match self {
            Expr::Add(a, b) => &a.eval() + &b.eval(),
            Expr::Sub(a, b) => &a.eval() - &b.eval(),
            Expr::Neg(a) => -&a.eval(),
            Expr::Mul(a, b) => &a.eval() * &b.eval(),
            Expr::Pow(a, n) => a.eval().pow(*n),
            Expr::Num(r) => {
                Element::from_scalar(Scalar::from_gauss(GaussRational::from_rat(r.clone())))
            }
            Expr::ImaginaryUnit => Element::from_scalar(Scalar::i()),
            Expr::Lambda => Element::from_scalar(Scalar::lambda()),
            Expr::Generator(g) => Element::gen(*g),
        }
    }
}

// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    Integer(BigInt),
    Ident(String),
}

fn lex(src: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let bytes = src.as_bytes();
    let mut tokens = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => pos += 1,
            '+' => {
                tokens.push((Token::Plus, pos));
                pos += 1;
            }
            '-' => {
                tokens.push((Token::Minus, pos));
                pos += 1;
            }
            '*' => {
                tokens.push((Token::Star, pos));
                pos += 1;
            }
            '^' => {
                tokens.push((Token::Caret, pos));
                pos += 1;
            }
            '/' => {
                tokens.push((Token::Slash, pos));
                pos += 1;
            }
            '(' => {
                tokens.push((Token::LParen, pos));
                pos += 1;
            }
            ')' => {
                tokens.push((Token::RParen, pos));
                pos += 1;
            }
            '0'..='9' => {
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                let digits = &src[start..pos];
                tokens.push((Token::Integer(digits.parse().unwrap()), start));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = pos;
                while pos < bytes.len()
                    && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_')
                {
                    pos += 1;
                }
                tokens.push((Token::Ident(src[start..pos].to_string()), start));
            }
            _ => return err(pos, format!("unexpected character {c:?}")),
        }
    }
    Ok(tokens)
}

// ---------------------------------------------------------------------------

struct Parser<'a> {
    tokens: &'a [(Token, usize)],
    index: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.index).map(|(t, _)| t)
    }

    fn position(&self) -> usize {
        self.tokens
            .get(self.index)
            .map(|&(_, p)| p)
            .unwrap_or(self.end)
    }

    fn advance(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.index).map(|(t, _)| t.clone());
        self.index += 1;
        t
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut acc = if self.peek() == Some(&Token::Minus) {
            self.advance();
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.advance();
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(Token::Minus) => {
                    self.advance();
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Token::Star) {
            self.advance();
            acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.advance();
            let pos = self.position();
            match self.advance() {
                Some(Token::Integer(n)) => match u32::try_from(n) {
                    Ok(n) => Ok(Expr::Pow(Box::new(base), n)),
                    Err(_) => err(pos, "exponent out of range"),
                },
                _ => err(pos, "expected a natural-number exponent after '^'"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let pos = self.position();
        match self.advance() {
            Some(Token::Integer(numer)) => {
                if self.peek() == Some(&Token::Slash) {
                    self.advance();
                    let dpos = self.position();
                    match self.advance() {
                        Some(Token::Integer(d)) if d != BigInt::from(0) => {
                            Ok(Expr::Num(Rat::new(numer, d)))
                        }
                        Some(Token::Integer(_)) => err(dpos, "zero denominator"),
                        _ => err(dpos, "expected a denominator after '/'"),
                    }
                } else {
                    Ok(Expr::Num(Rat::from_integer(numer)))
                }
            }
            Some(Token::Ident(name)) => match name.as_str() {
                "a" | "alpha" => Ok(Expr::Generator(Gen::Alpha)),
                "b" | "beta" => Ok(Expr::Generator(Gen::Beta)),
                "d" | "delta" => Ok(Expr::Generator(Gen::Delta)),
                "i" => Ok(Expr::ImaginaryUnit),
                "l" => Ok(Expr::Lambda),
                other => err(
                    pos,
                    format!(
                        "unknown identifier {other:?} (expected a|alpha, b|beta, d|delta, i, l)"
                    ),
                ),
            },
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.advance() {
                    Some(Token::RParen) => Ok(inner),
                    _ => err(pos, "unclosed parenthesis"),
                }
            }
            Some(t) => err(pos, format!("unexpected token {t:?}")),
            None => err(pos, "unexpected end of input"),
        }
    }
}

/// Parses a source string into an expression tree.
pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let tokens = lex(src)?;
    let mut parser = Parser {
        tokens: &tokens,
        index: 0,
        end: src.len(),
    };
    let expr = parser.expr()?;
    if parser.index != tokens.len() {
        return err(parser.position(), "trailing input");
    }
    Ok(expr)
}

/// Parses and evaluates to a canonical algebra element.
pub fn parse_element(src: &str) -> Result<Element, ParseError> {
    parse(src).map(|e| e.eval())
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_evaluate_to_zero() {
        assert!(parse_element("a*b - b*a - i*l*a").unwrap().is_zero());
        assert!(parse_element("d*b - b*d - i*l*d").unwrap().is_zero());
        assert!(parse_element("a*d - d*a").unwrap().is_zero());
    }

    #[test]
    fn canonical_round_trips() {
        for src in [
            "b*a + i*l*a",
            "b^2*a*d^3",
            "(1 + 2*i*l)*b",
            "-a",
            "2*b + 2*i*l",
            "1",
            "3/2*l^2*d",
            "1/2 - i",
        ] {
            let e = parse_element(src).unwrap();
            assert_eq!(parse_element(&e.canonical_text()).unwrap(), e, "{src}");
        }
    }

    #[test]
    fn normal_form_through_parser() {
        assert_eq!(parse_element("a*b").unwrap().canonical_text(), "b*a + i*l*a");
        assert_eq!(parse_element("1").unwrap(), Element::one());
        assert_eq!(
            parse_element("b^2 + 2*i*l*b").unwrap().canonical_text(),
            "b^2 + 2*i*l*b"
        );
    }

    #[test]
    fn error_positions() {
        assert_eq!(parse("a + + b").unwrap_err().position, 4);
        assert_eq!(parse("q").unwrap_err().position, 0);
        assert!(parse("q").unwrap_err().message.contains("unknown identifier"));
        assert_eq!(parse("(a").unwrap_err().position, 0);
        assert_eq!(parse("a b").unwrap_err().position, 2);
        assert_eq!(parse("a^x").unwrap_err().position, 2);
        assert_eq!(parse("1/0").unwrap_err().position, 2);
        assert_eq!(parse("").unwrap_err().position, 0);
        assert_eq!(parse("a $").unwrap_err().position, 2);
    }
}
