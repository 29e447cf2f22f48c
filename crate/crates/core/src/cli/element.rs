//! Element expressions.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := factor (("*" | "/") factor)*
//! factor := "-" factor | atom ("^" signed-int)?
//! atom   := name | int | "(" expr ")"
//! ```
//!
//! Division and negative powers are only allowed for monomials, so every
//! expression denotes a Laurent polynomial.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::algebra::{LaurentPoly, Monomial, Registry};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Name(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Name(n) => format!("`{n}`"),
        Tok::Int(i) => format!("`{i}`"),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Slash => "`/`".into(),
        Tok::Caret => "`^`".into(),
        Tok::Open => "`(`".into(),
        Tok::Close => "`)`".into(),
        Tok::End => "end of input".into(),
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((col, Tok::Name(chars[start..i].iter().collect())));
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((col, Tok::Int(digits.parse().expect("ascii digits"))));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::Open,
            ')' => Tok::Close,
            _ => return Err(Error::parse(format!("column {col}"), format!("unexpected character `{c}`"))),
        };
        out.push((col, tok));
        i += 1;
    }
    out.push((chars.len() + 1, Tok::End));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    reg: &'a Registry,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn col(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::parse(format!("column {}", self.col()), msg)
    }

    fn expect(&mut self, want: Tok) -> Result<()> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(self.error(format!("expected {}, found {}", describe(&want), describe(self.peek()))))
        }
    }

    fn expr(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.term()?;
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
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.factor()?;
                }
                Tok::Slash => {
                    self.bump();
                    let col = self.col();
                    let d = self.factor()?;
                    let inv = unit_monomial_inverse(&d).ok_or_else(|| {
                        Error::parse(
                            format!("column {col}"),
                            "division is only allowed by a monomial; clear denominators first",
                        )
                    })?;
                    acc = &acc * &inv;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<LaurentPoly> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(-self.factor()?);
        }
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let neg = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let col = self.col();
        let k = match self.bump() {
            Tok::Int(k) => k,
            t => return Err(Error::parse(format!("column {col}"), format!("expected an exponent, found {}", describe(&t)))),
        };
        let k: u32 = u32::try_from(&k)
            .ok()
            .filter(|&k| k <= i32::MAX as u32)
            .ok_or_else(|| Error::parse(format!("column {col}"), "exponent too large"))?;
        let p = if neg {
            unit_monomial_inverse(&base).ok_or_else(|| {
                Error::parse(format!("column {col}"), "negative powers are only allowed for monomials")
            })?
        } else {
            base
        };
        Ok(p.pow(k))
    }

    fn atom(&mut self) -> Result<LaurentPoly> {
        let col = self.col();
        match self.bump() {
            Tok::Name(n) => match self.reg.lookup(&n) {
                Some(v) => Ok(LaurentPoly::var(v)),
                None => Err(Error::UnknownVariable(n)),
            },
            Tok::Int(i) => Ok(LaurentPoly::constant(i)),
            Tok::Open => {
                let e = self.expr()?;
                self.expect(Tok::Close)?;
                Ok(e)
            }
            t => Err(Error::parse(format!("column {col}"), format!("expected a term, found {}", describe(&t)))),
        }
    }
}

/// Inverse of `±m` for a monomial `m`.
fn unit_monomial_inverse(p: &LaurentPoly) -> Option<LaurentPoly> {
    let (m, c) = p.terms().next()?;
    if p.len() != 1 || !c.abs().is_one() {
        return None;
    }
    Some(LaurentPoly::term(c.clone(), Monomial::inv(m)))
}

/// Parses an element over the variables of `reg`.
pub fn parse_element(src: &str, reg: &Registry) -> Result<LaurentPoly> {
    let mut p = Parser { toks: lex(src)?, pos: 0, reg };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error(format!("unexpected {}", describe(p.peek()))));
    }
    Ok(e)
}
