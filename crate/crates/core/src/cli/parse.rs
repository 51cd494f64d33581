//! Recursive-descent parser for polynomial expressions in `t`.
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := factor ('*' factor | '/' nat)*
//! factor := base ('^' nat)?
//! base   := nat | 't' | '(' expr ')'
//! ```
//!
//! A rational literal `a/b` is read as `a` divided by the literal `b`;
//! division by anything other than a natural-number literal is rejected, as
//! is implicit multiplication. The expression is evaluated over Q and each
//! coefficient is then mapped into the target ring.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::{Ring, RingElem};

const MAX_DEGREE: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Nat(BigInt),
    T,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Nat(n) => format!("number {n}"),
            Token::T => "'t'".into(),
            Token::Plus => "'+'".into(),
            Token::Minus => "'-'".into(),
            Token::Star => "'*'".into(),
            Token::Slash => "'/'".into(),
            Token::Caret => "'^'".into(),
            Token::LParen => "'('".into(),
            Token::RParen => "')'".into(),
            Token::End => "end of input".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(Token, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("ascii digits");
                out.push((Token::Nat(n), start));
                continue;
            }
            b't' => Token::T,
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b'*' => Token::Star,
            b'/' => Token::Slash,
            b'^' => Token::Caret,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            _ => {
                let ch = text[i..].chars().next().expect("in bounds");
                return Err(Error::Syntax {
                    position: i,
                    message: format!("unexpected character '{ch}'"),
                });
            }
        };
        out.push((tok, i));
        i += 1;
    }
    out.push((Token::End, text.len()));
    Ok(out)
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos].0
    }

    fn offset(&self) -> usize {
        self.tokens[self.pos].1
    }

    fn bump(&mut self) -> Token {
        let tok = self.tokens[self.pos].0.clone();
        if tok != Token::End {
            self.pos += 1;
        }
        tok
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<Poly> {
        let negate = match self.peek() {
            Token::Minus => {
                self.bump();
                true
            }
            Token::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            match self.peek() {
                Token::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Token::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Token::Star => {
                    self.bump();
                    let rhs = self.factor()?;
                    if acc.degree().unwrap_or(0) + rhs.degree().unwrap_or(0) > MAX_DEGREE {
                        return self.error(format!("degree exceeds {MAX_DEGREE}"));
                    }
                    acc = &acc * &rhs;
                }
                Token::Slash => {
                    self.bump();
                    let at = self.offset();
                    let Token::Nat(d) = self.bump() else {
                        return Err(Error::Syntax {
                            position: at,
                            message: "division is only allowed by an integer literal".into(),
                        });
                    };
                    if d.is_zero() {
                        return Err(Error::Syntax {
                            position: at,
                            message: "division by zero".into(),
                        });
                    }
                    let inv = BigRational::new(BigInt::from(1), d);
                    acc = acc.scale(&Ring::Rationals.from_rational(&inv)?);
                }
                Token::Nat(_) | Token::T | Token::LParen => {
                    return self.error("expected an operator; write multiplication explicitly with '*'");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.base()?;
        if *self.peek() != Token::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        let Token::Nat(e) = self.bump() else {
            return Err(Error::Syntax {
                position: at,
                message: "expected a natural-number exponent".into(),
            });
        };
        let too_big = || Error::Syntax {
            position: at,
            message: format!("degree exceeds {MAX_DEGREE}"),
        };
        let e: u32 = e.try_into().map_err(|_| too_big())?;
        if base.degree().unwrap_or(0).saturating_mul(e as usize) > MAX_DEGREE {
            return Err(too_big());
        }
        Ok(base.pow(e))
    }

    fn base(&mut self) -> Result<Poly> {
        let at = self.offset();
        match self.bump() {
            Token::Nat(n) => Ok(Poly::constant(Ring::Rationals.from_bigint(n))),
            Token::T => Ok(Poly::t(Ring::Rationals)),
            Token::LParen => {
                let inner = self.expr()?;
                if *self.peek() != Token::RParen {
                    return self.error(format!("expected ')' but found {}", self.peek().describe()));
                }
                self.bump();
                Ok(inner)
            }
            other => Err(Error::Syntax {
                position: at,
                message: format!("expected a number, 't' or '(' but found {}", other.describe()),
            }),
        }
    }
}

/// Parses `text` as a polynomial in `t` with coefficients in `ring`.
pub fn parse_poly(text: &str, ring: Ring) -> Result<Poly> {
    let mut parser = Parser {
        tokens: tokenize(text)?,
        pos: 0,
    };
    let value = parser.expr()?;
    if *parser.peek() != Token::End {
        return parser.error(format!("unexpected {}", parser.peek().describe()));
    }
    let coeffs = value
        .coeffs()
        .iter()
        .map(|c| ring.from_rational(&c.to_rational().expect("rational")))
        .collect::<Result<Vec<RingElem>>>()?;
    Poly::new(ring, coeffs)
}
