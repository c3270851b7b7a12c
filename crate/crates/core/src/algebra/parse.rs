//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := coeff | var | var '^' nat
//! coeff  := int | int '/' posint
//! ```
//!
//! Whitespace is insignificant. Over GF(p) integers are reduced mod p and `/`
//! is field division. [`Polynomial::display`] prints the same grammar.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use super::field::{Field, Scalar};
use super::monomial::Monomial;
use super::polynomial::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at offset {position}")]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("expected {expected}, found {found}")]
    Expected { expected: &'static str, found: String },
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("denominator {0} is not invertible in the coefficient field")]
    NotInvertible(String),
    #[error("exponent too large")]
    ExponentOverflow,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(i) => format!("integer {i}"),
            Tok::Ident(s) => format!("identifier {s:?}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            c if c.is_ascii_whitespace() => {
                i += 1;
                continue;
            }
            '+' => out.push((start, Tok::Plus)),
            '-' => out.push((start, Tok::Minus)),
            '*' => out.push((start, Tok::Star)),
            '/' => out.push((start, Tok::Slash)),
            '^' => out.push((start, Tok::Caret)),
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[start..i];
                out.push((start, Tok::Int(digits.parse().expect("ascii digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or(c);
                return Err(ParseError { position: start, kind: ParseErrorKind::UnexpectedChar(ch) });
            }
        }
        i += 1;
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    vars: &'a [String],
    field: Field,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &'static str) -> ParseError {
        ParseError {
            position: self.offset(),
            kind: ParseErrorKind::Expected { expected, found: self.peek().describe() },
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let n = self.vars.len();
        let negate_first = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let first = self.term()?;
        let mut acc = if negate_first { -&first } else { first };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                Tok::End => break,
                _ => return Err(self.error("'+', '-' or end of input")),
            }
        }
        debug_assert_eq!(acc.nvars(), n);
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut coeff = self.field.one();
        let mut mono = Monomial::one();
        self.factor(&mut coeff, &mut mono)?;
        while *self.peek() == Tok::Star {
            self.bump();
            self.factor(&mut coeff, &mut mono)?;
        }
        Ok(Polynomial::monomial(self.field, self.vars.len(), mono, coeff))
    }

    fn factor(&mut self, coeff: &mut Scalar, mono: &mut Monomial) -> Result<(), ParseError> {
        let at = self.offset();
        match self.peek().clone() {
            Tok::Int(num) => {
                self.bump();
                let value = if *self.peek() == Tok::Slash {
                    self.bump();
                    let den_at = self.offset();
                    let Tok::Int(den) = self.peek().clone() else {
                        return Err(self.error("positive integer denominator"));
                    };
                    self.bump();
                    if den.is_zero() {
                        return Err(ParseError { position: den_at, kind: ParseErrorKind::ZeroDenominator });
                    }
                    self.field.ratio(&num, &den).map_err(|_| ParseError {
                        position: den_at,
                        kind: ParseErrorKind::NotInvertible(den.to_string()),
                    })?
                } else {
                    self.field.from_bigint(&num)
                };
                *coeff = &*coeff * &value;
                Ok(())
            }
            Tok::Ident(name) => {
                self.bump();
                let index = self
                    .vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or(ParseError { position: at, kind: ParseErrorKind::UnknownVariable(name) })?;
                let mut exp = 1u32;
                if *self.peek() == Tok::Caret {
                    self.bump();
                    let exp_at = self.offset();
                    let Tok::Int(e) = self.peek().clone() else {
                        return Err(self.error("exponent"));
                    };
                    self.bump();
                    exp = u32::try_from(&e)
                        .map_err(|_| ParseError { position: exp_at, kind: ParseErrorKind::ExponentOverflow })?;
                }
                *mono = mono.mul(&Monomial::from_exponents([(index, exp)]));
                Ok(())
            }
            _ => Err(self.error("coefficient or variable")),
        }
    }
}

/// Parses `text` as a polynomial in `variables` over `field`.
pub fn parse_polynomial(text: &str, variables: &[String], field: Field) -> Result<Polynomial, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, vars: variables, field };
    p.expr()
}
