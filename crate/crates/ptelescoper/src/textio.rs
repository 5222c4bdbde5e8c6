//! Text grammar for polynomials and rational functions: integer (and
//! a/b rational) literals, variables t and x, operators + - * ^ and
//! parentheses, whitespace-insensitive. Serialization is the `Display`
//! impl on `Poly` (pure-lex expanded form), which this parser round-trips.

use num::bigint::BigInt;
use num::Zero;

use crate::error::{Error, Result};
use crate::poly::{Poly, Rat};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    VarT,
    VarX,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn line_col(&self, at: usize) -> (usize, usize) {
        let mut line = 1;
        let mut col = 1;
        for &b in &self.src[..at.min(self.src.len())] {
            if b == b'\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        (line, col)
    }

    fn err(&self, at: usize, msg: impl Into<String>) -> Error {
        let (line, col) = self.line_col(at);
        Error::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }

    fn tokens(&mut self) -> Result<Vec<(Tok, usize)>> {
        let mut out = vec![];
        while self.pos < self.src.len() {
            let at = self.pos;
            let b = self.src[self.pos];
            match b {
                b' ' | b'\t' | b'\r' | b'\n' => {
                    self.pos += 1;
                }
                b'0'..=b'9' => {
                    let start = self.pos;
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                    let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                    out.push((Tok::Int(digits.parse::<BigInt>().unwrap()), at));
                }
                b't' => {
                    self.pos += 1;
                    out.push((Tok::VarT, at));
                }
                b'x' => {
                    self.pos += 1;
                    out.push((Tok::VarX, at));
                }
                b'+' => {
                    self.pos += 1;
                    out.push((Tok::Plus, at));
                }
                b'-' => {
                    self.pos += 1;
                    out.push((Tok::Minus, at));
                }
                b'*' => {
                    self.pos += 1;
                    out.push((Tok::Star, at));
                }
                b'^' => {
                    self.pos += 1;
                    out.push((Tok::Caret, at));
                }
                b'/' => {
                    self.pos += 1;
                    out.push((Tok::Slash, at));
                }
                b'(' => {
                    self.pos += 1;
                    out.push((Tok::LParen, at));
                }
                b')' => {
                    self.pos += 1;
                    out.push((Tok::RParen, at));
                }
                other => {
                    return Err(self.err(at, format!("unexpected character '{}'", other as char)))
                }
            }
        }
        Ok(out)
    }
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    idx: usize,
    lexer: Lexer<'a>,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Result<Self> {
        let mut lexer = Lexer::new(src);
        let toks = lexer.tokens()?;
        Ok(Parser {
            toks,
            idx: 0,
            lexer,
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(t, _)| t)
    }

    fn at(&self) -> usize {
        self.toks
            .get(self.idx)
            .map(|(_, p)| *p)
            .unwrap_or(self.lexer.src.len())
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|(t, _)| t.clone());
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        self.lexer.err(self.at(), msg)
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Tok::Star)) {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(-&self.factor()?)
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.bump();
            let at = self.at();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let n = u32::try_from(&n)
                        .map_err(|_| self.lexer.err(at, "exponent out of range"))?;
                    Ok(base.pow(n))
                }
                _ => Err(self.lexer.err(at, "expected integer exponent after '^'")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly> {
        let at = self.at();
        match self.bump() {
            Some(Tok::Int(n)) => {
                // rational literal a/b only when a slash is followed by an integer
                if matches!(self.peek(), Some(Tok::Slash))
                    && matches!(self.toks.get(self.idx + 1), Some((Tok::Int(_), _)))
                {
                    self.bump();
                    let dat = self.at();
                    if let Some(Tok::Int(d)) = self.bump() {
                        if d.is_zero() {
                            return Err(self.lexer.err(dat, "zero denominator in literal"));
                        }
                        return Ok(Poly::constant(Rat::new(n, d)));
                    }
                    unreachable!()
                }
                Ok(Poly::constant(Rat::from_integer(n)))
            }
            Some(Tok::VarT) => Ok(Poly::var_t()),
            Some(Tok::VarX) => Ok(Poly::var_x()),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(self.err("expected ')'")),
                }
            }
            Some(tok) => Err(self.lexer.err(at, format!("unexpected token {:?}", tok))),
            None => Err(self.lexer.err(at, "unexpected end of input")),
        }
    }
}

/// Parse a polynomial in t, x.
pub fn parse_poly(src: &str) -> Result<Poly> {
    let mut p = Parser::new(src)?;
    if p.toks.is_empty() {
        return Err(p.err("empty polynomial"));
    }
    let out = p.expr()?;
    if p.idx != p.toks.len() {
        return Err(p.err("trailing input after polynomial"));
    }
    Ok(out)
}

/// Parse "num / den" where num and den are polynomials; a bare
/// polynomial is read with denominator 1. Top-level '/' binds last, so
/// "(p)/(q)" and "p / q" both work; numerator and denominator should be
/// parenthesized when they contain '+' or '-'.
pub fn parse_ratfun(src: &str) -> Result<(Poly, Poly)> {
    let mut p = Parser::new(src)?;
    if p.toks.is_empty() {
        return Err(p.err("empty expression"));
    }
    let num = p.expr()?;
    if p.idx == p.toks.len() {
        return Ok((num, Poly::one()));
    }
    match p.bump() {
        Some(Tok::Slash) => {
            let den = p.expr()?;
            if p.idx != p.toks.len() {
                return Err(p.err("trailing input after denominator"));
            }
            if den.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            Ok((num, den))
        }
        _ => Err(p.err("expected '/' or end of input")),
    }
}

/// Serialize a rational function as num/den text that `parse_ratfun`
/// round-trips.
pub fn format_ratfun(num: &Poly, den: &Poly) -> String {
    if den.is_one() {
        format!("{}", num)
    } else {
        format!("({})/({})", num, den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat_int;

    #[test]
    fn parse_basic() {
        let p = parse_poly("x^2 - 3*t*x + 5").unwrap();
        let expect = &(&Poly::var_x().pow(2)
            - &(&Poly::var_t() * &Poly::var_x()).scale(&rat_int(3)))
            + &Poly::int(5);
        assert_eq!(p, expect);
    }

    #[test]
    fn parse_parens_and_unary() {
        let p = parse_poly("-(x - t)^2").unwrap();
        assert_eq!(p, -&(&Poly::var_x() - &Poly::var_t()).pow(2));
        let q = parse_poly("(1 + x)^3").unwrap();
        assert_eq!(q, (&Poly::one() + &Poly::var_x()).pow(3));
    }

    #[test]
    fn parse_rational_coeff() {
        let p = parse_poly("3/2*x").unwrap();
        assert_eq!(p, Poly::var_x().scale(&Rat::new(3.into(), 2.into())));
    }

    #[test]
    fn display_roundtrip() {
        for s in [
            "x^2 - 3*t*x + 5",
            "t^4 - 2*t^2 + 1",
            "x^3*t - 7/3*x + 1/2",
            "0",
        ] {
            let p = parse_poly(s).unwrap();
            assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
        }
    }

    #[test]
    fn ratfun_roundtrip() {
        let (n, d) = parse_ratfun("(x^2 + t)/((x - t)^2)").unwrap();
        assert_eq!(n, parse_poly("x^2+t").unwrap());
        assert_eq!(d, parse_poly("(x-t)^2").unwrap());
        let s = format_ratfun(&n, &d);
        let (n2, d2) = parse_ratfun(&s).unwrap();
        assert_eq!((n2, d2), (n, d));
    }

    #[test]
    fn parse_errors_have_position() {
        match parse_poly("x + %") {
            Err(Error::Parse { line, col, .. }) => {
                assert_eq!((line, col), (1, 5));
            }
            other => panic!("expected parse error, got {:?}", other),
        }
    }
}
