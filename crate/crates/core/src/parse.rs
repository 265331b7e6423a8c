//! Polynomial text grammar.
//!
//! ```text
//! expr    := sign? term (('+' | '-') term)*
//! term    := factor ('*' factor)*
//! factor  := '-' factor | power
//! power   := atom ('^' integer)?
//! atom    := integer ('/' integer)? | variable | '(' expr ')'
//! ```
//!
//! Variables are declared ring variables (`[A-Za-z][A-Za-z0-9_]*`). The only
//! permitted `/` joins two integer literals into a rational constant, so that
//! printed rational coefficients read back; every other `/` is rejected.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::PolyRing;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize, usize)>,
}

fn lex(text: &str) -> Result<Lexer> {
    let mut toks = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut line, mut col) = (1usize, 1usize);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            toks.push((Tok::Int(s.parse().unwrap()), l0, c0));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            toks.push((Tok::Ident(s), l0, c0));
            continue;
        }
        let t = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => {
                return Err(Error::Parse { line: l0, col: c0, msg: format!("unexpected character `{c}`") })
            }
        };
        toks.push((t, l0, c0));
        i += 1;
        col += 1;
    }
    toks.push((Tok::End, line, col));
    Ok(Lexer { toks })
}

struct Parser<'a> {
    ring: &'a PolyRing,
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        let (_, line, col) = self.toks[self.pos];
        Err(Error::Parse { line, col, msg: msg.into() })
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn division_error<T>(&self) -> Result<T> {
        let (_, line, col) = self.toks[self.pos];
        Err(Error::Division { line, col })
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = match self.peek() {
            Tok::Plus => {
                self.bump();
                self.term()?
            }
            Tok::Minus => {
                self.bump();
                self.term()?.neg()
            }
            _ => self.term()?,
        };
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

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.factor()?;
                }
                Tok::Slash => return self.division_error(),
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(self.factor()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            match self.bump() {
                Tok::Int(k) => {
                    let k: u32 = match u32::try_from(&k) {
                        Ok(k) if k <= u16::MAX as u32 => k,
                        _ => {
                            self.pos -= 1;
                            return self.err("exponent too large");
                        }
                    };
                    Ok(base.pow(k))
                }
                _ => {
                    self.pos -= 1;
                    self.err("expected a nonnegative integer exponent")
                }
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                let field = self.ring.field();
                if *self.peek() == Tok::Slash {
                    if let Tok::Int(d) = &self.toks[self.pos + 1].0 {
                        let d = d.clone();
                        self.bump();
                        self.bump();
                        let c = field.from_ratio(&n, &d).or_else(|e| self.err(e.to_string()))?;
                        return Ok(Poly::constant(self.ring, c));
                    }
                    return self.division_error();
                }
                Ok(Poly::constant(self.ring, field.from_bigint(&n)))
            }
            Tok::Ident(name) => {
                let p = Poly::var_named(self.ring, &name)?;
                self.bump();
                Ok(p)
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.err("expected `)`");
                }
                self.bump();
                Ok(e)
            }
            Tok::Slash => self.division_error(),
            Tok::End => self.err("unexpected end of input"),
            t => self.err(format!("unexpected token {t:?}")),
        }
    }
}

/// Parses a polynomial over `ring`.
pub fn parse_poly(ring: &PolyRing, text: &str) -> Result<Poly> {
    let lexer = lex(text)?;
    let mut p = Parser { ring, toks: lexer.toks, pos: 0 };
    if *p.peek() == Tok::End {
        return p.err("empty expression");
    }
    let out = p.expr()?;
    match p.peek() {
        Tok::End => Ok(out),
        Tok::Slash => p.division_error(),
        _ => p.err("unexpected trailing input"),
    }
}
