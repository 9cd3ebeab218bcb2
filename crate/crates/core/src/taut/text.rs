//! Deterministic text form, e.g. `735*K2^3 + 1400*K2^2*D12 - 12*lambda2`.
//!
//! The parser additionally accepts parentheses and integer powers of
//! parenthesized groups; products are expanded but not reduced.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::expr::TautExpr;
use super::generator::{Ambient, Generator};
use super::monomial::Monomial;
use super::Rational;
use crate::error::{Error, Result};

pub fn render(x: &TautExpr) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (n, (m, c)) in x.terms().enumerate() {
        let neg = c.is_negative();
        match (n, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.abs();
        if m.is_one() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&m.to_string());
        } else {
            out.push_str(&format!("{abs}*{m}"));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Gen(Generator),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                toks.push(Tok::Plus);
                i += 1
            }
            '-' | '\u{2212}' => {
                toks.push(Tok::Minus);
                i += 1
            }
            '*' | '\u{b7}' => {
                toks.push(Tok::Star);
                i += 1
            }
            '/' => {
                toks.push(Tok::Slash);
                i += 1
            }
            '^' => {
                toks.push(Tok::Caret);
                i += 1
            }
            '(' => {
                toks.push(Tok::Open);
                i += 1
            }
            ')' => {
                toks.push(Tok::Close);
                i += 1
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                toks.push(Tok::Num(digits.parse().map_err(|_| Error::parse("bad number"))?));
            }
            a if a.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                toks.push(Tok::Gen(word.parse()?));
            }
            other => return Err(Error::parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    ambient: Ambient,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<TautExpr> {
        let mut acc = TautExpr::zero(self.ambient);
        let mut sign = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                -1
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = acc.add(&t.scale_int(sign))?;
            match self.peek() {
                Some(Tok::Plus) => sign = 1,
                Some(Tok::Minus) => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<TautExpr> {
        let mut acc = self.power()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            let f = self.power()?;
            acc = acc.mul(&f)?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<TautExpr> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.bump() {
                Some(Tok::Num(n)) => {
                    let k: u32 = n.try_into().map_err(|_| Error::parse("exponent too large"))?;
                    return Ok(base.pow(k));
                }
                _ => return Err(Error::parse("expected integer exponent after `^`")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<TautExpr> {
        match self.bump() {
            Some(Tok::Num(n)) => {
                if let Some(Tok::Slash) = self.peek() {
                    self.pos += 1;
                    match self.bump() {
                        Some(Tok::Num(d)) if d != BigInt::from(0) => {
                            Ok(TautExpr::constant(self.ambient, Rational::new(n, d)))
                        }
                        _ => Err(Error::parse("expected nonzero denominator after `/`")),
                    }
                } else {
                    Ok(TautExpr::constant(self.ambient, Rational::from_integer(n)))
                }
            }
            Some(Tok::Gen(g)) => TautExpr::term(self.ambient, Rational::one(), Monomial::generator(g)),
            Some(Tok::Open) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::Close) => Ok(inner),
                    _ => Err(Error::parse("unbalanced parenthesis")),
                }
            }
            Some(t) => Err(Error::parse(format!("unexpected token {t:?}"))),
            None => Err(Error::parse("unexpected end of expression")),
        }
    }
}

/// Parses the text form in the given ambient.
pub fn parse_expr(s: &str, ambient: Ambient) -> Result<TautExpr> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(Error::parse("empty expression"));
    }
    let mut p = Parser { toks, pos: 0, ambient };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    const AMB: Ambient = Ambient::new(3, 2);

    #[test]
    fn renders_canonically() {
        let x = parse_expr("160*D12^3 + 840*K2*D12^2 + 735*K2^3 + 1400*K2^2*D12", AMB).unwrap();
        assert_eq!(x.to_string(), "735*K2^3 + 1400*K2^2*D12 + 840*K2*D12^2 + 160*D12^3");
    }

    #[test]
    fn signs_and_units() {
        let x = parse_expr("-K1 + 1 - lambda1*K1 + 3/2*lambda2", AMB).unwrap();
        assert_eq!(x.to_string(), "1 - K1 - lambda1*K1 + 3/2*lambda2");
        assert_eq!(parse_expr("K1 - K1", AMB).unwrap().to_string(), "0");
        assert_eq!(parse_expr("-2", AMB).unwrap().to_string(), "-2");
    }

    #[test]
    fn parentheses_expand() {
        let x = parse_expr("(1 + lambda1)*(1 - K1)", AMB).unwrap();
        assert_eq!(x, parse_expr("1 + lambda1 - K1 - lambda1*K1", AMB).unwrap());
        let y = parse_expr("(K1 + D12)^2", AMB).unwrap();
        assert_eq!(y, parse_expr("K1^2 + 2*K1*D12 + D12^2", AMB).unwrap());
    }

    #[test]
    fn round_trip() {
        let s = "882*kappa1 - 162*kappa0*lambda1 + 196*kappa0*kappa1 - 21*kappa0^2*lambda1";
        let x = parse_expr(s, Ambient::new(3, 0)).unwrap();
        assert_eq!(parse_expr(&x.to_string(), Ambient::new(3, 0)).unwrap(), x);
    }

    #[test]
    fn errors() {
        assert!(parse_expr("", AMB).is_err());
        assert!(parse_expr("K3", AMB).is_err());
        assert!(parse_expr("lambda4", AMB).is_err());
        assert!(parse_expr("(K1", AMB).is_err());
        assert!(parse_expr("K1 K2", AMB).is_err());
        assert!(parse_expr("1/0", AMB).is_err());
        assert!(parse_expr("K1^x", AMB).is_err());
    }
}
