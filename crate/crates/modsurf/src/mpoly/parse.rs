use super::{MPoly, Mono, MAX_VARS};
use crate::scalar::Scalar;

/// Parse a polynomial expression over the given variable names.
/// Supports integer literals, `+ - * / ^` (also `**`), parentheses and
/// implicit unary minus. Division must be by an invertible constant
/// subexpression (used for scalars like `1/8`). This exists so that the
/// long polynomial constants can be pasted as readable text instead of
/// hand-built term lists.
pub fn parse_poly<K: Scalar>(src: &str, vars: &[&str], token: K) -> std::result::Result<MPoly<K>, String> {
    assert!(vars.len() <= MAX_VARS);
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        vars,
        token,
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(format!("trailing input at token {}", p.pos));
    }
    Ok(e)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str) -> std::result::Result<Vec<Tok>, String> {
    let mut out = Vec::new();
    let mut it = src.chars().peekable();
    while let Some(&c) = it.peek() {
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                it.next();
            }
            '0'..='9' => {
                let mut n = 0i64;
                while let Some(&d) = it.peek() {
                    if let Some(v) = d.to_digit(10) {
                        n = n
                            .checked_mul(10)
                            .and_then(|n| n.checked_add(v as i64))
                            .ok_or("integer literal overflows i64")?;
                        it.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Num(n));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let mut s = String::new();
                while let Some(&d) = it.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        s.push(d);
                        it.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Ident(s));
            }
            '+' => {
                it.next();
                out.push(Tok::Plus);
            }
            '-' => {
                it.next();
                out.push(Tok::Minus);
            }
            '*' => {
                it.next();
                if it.peek() == Some(&'*') {
                    it.next();
                    out.push(Tok::Caret);
                } else {
                    out.push(Tok::Star);
                }
            }
            '/' => {
                it.next();
                out.push(Tok::Slash);
            }
            '^' => {
                it.next();
                out.push(Tok::Caret);
            }
            '(' => {
                it.next();
                out.push(Tok::LParen);
            }
            ')' => {
                it.next();
                out.push(Tok::RParen);
            }
            _ => return Err(format!("unexpected character {c:?}")),
        }
    }
    Ok(out)
}

struct Parser<'a, K: Scalar> {
    toks: Vec<Tok>,
    pos: usize,
    vars: &'a [&'a str],
    token: K,
}

impl<K: Scalar> Parser<'_, K> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn expr(&mut self) -> std::result::Result<MPoly<K>, String> {
        let mut neg = false;
        // leading sign
        while let Some(t) = self.peek() {
            match t {
                Tok::Minus => {
                    neg = !neg;
                    self.pos += 1;
                }
                Tok::Plus => {
                    self.pos += 1;
                }
                _ => break,
            }
        }
        let mut acc = self.term()?;
        if neg {
            acc = acc.neg();
        }
        while let Some(t) = self.peek() {
            match t.clone() {
                Tok::Plus => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = acc.add(&rhs);
                }
                Tok::Minus => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = acc.sub(&rhs);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> std::result::Result<MPoly<K>, String> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    acc = acc.mul(&rhs);
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    let c = rhs
                        .as_constant()
                        .ok_or("division only by constant subexpressions")?;
                    let ci = c.inv().map_err(|_| "division by zero constant")?;
                    acc = acc.scale(&ci);
                }
                // implicit multiplication: `2x` or `x y`
                Some(Tok::Ident(_)) | Some(Tok::Num(_)) | Some(Tok::LParen) => {
                    let rhs = self.factor()?;
                    acc = acc.mul(&rhs);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> std::result::Result<MPoly<K>, String> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Num(e)) if (0..=u32::MAX as i64).contains(&e) => {
                    self.pos += 1;
                    Ok(base.pow(e as u32))
                }
                _ => Err("exponent must be a nonnegative integer".into()),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> std::result::Result<MPoly<K>, String> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(MPoly::constant(self.vars.len(), self.token.from_i64(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let i = self
                    .vars
                    .iter()
                    .position(|v| **v == name)
                    .ok_or_else(|| format!("unknown variable {name}"))?;
                Ok(MPoly::var(self.vars.len(), i, self.token.clone()))
            }
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(self.factor()?.neg())
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err("missing closing parenthesis".into());
                }
                self.pos += 1;
                Ok(e)
            }
            other => Err(format!("unexpected token {other:?}")),
        }
    }
}

impl<K: Scalar> MPoly<K> {
    /// The constant value when the polynomial has no variable part.
    pub fn as_constant(&self) -> Option<K> {
        match self.degree() {
            None => Some(self.token().zero()),
            Some(0) => Some(self.coeff(&Mono([0; MAX_VARS]))),
            _ => None,
        }
    }
}
