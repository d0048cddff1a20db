//! Recursive-descent parser for the polynomial text grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | '+' factor | power
//! power  := atom ('^' integer)?
//! atom   := integer ('/' integer)? | 'x' index | '(' expr ')'
//! ```
//!
//! Variables are `x1 .. xn`; whitespace is insignificant.

use num_bigint::BigInt;
use num_traits::Zero;

use super::MultiPoly;
use crate::error::{Error, Result};
use crate::Rational;

/// Parses with the variable count set to the largest index that occurs.
pub fn parse(text: &str) -> Result<MultiPoly> {
    let n = max_var_index(text)?;
    parse_with_nvars(text, n)
}

/// Parses into a polynomial ring with exactly `nvars` variables.
pub fn parse_with_nvars(text: &str, nvars: usize) -> Result<MultiPoly> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, nvars };
    let f = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(f)
}

/// Largest variable index mentioned in `text` (0 for constants).
pub fn max_var_index(text: &str) -> Result<usize> {
    let b = text.as_bytes();
    let mut max = 0usize;
    let mut i = 0;
    while i < b.len() {
        if b[i] == b'x' {
            let start = i + 1;
            let mut j = start;
            while j < b.len() && b[j].is_ascii_digit() {
                j += 1;
            }
            if j == start {
                return Err(Error::Parse { pos: i, msg: "variable without index".into() });
            }
            let idx: usize = text[start..j]
                .parse()
                .map_err(|_| Error::Parse { pos: start, msg: "bad variable index".into() })?;
            max = max.max(idx);
            i = j;
        } else {
            i += 1;
        }
    }
    Ok(max)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.factor()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.factor()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'x') => {
                self.pos += 1;
                let start = self.pos;
                let idx = self.integer()?;
                let idx: usize = idx.try_into().map_err(|_| self.err("bad variable index"))?;
                if idx == 0 || idx > self.nvars {
                    self.pos = start;
                    return Err(self.err(&format!("variable x{idx} outside x1..x{}", self.nvars)));
                }
                Ok(MultiPoly::var(idx - 1, self.nvars))
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.big_integer()?;
                let mut value = Rational::from_integer(num);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let den = self.big_integer()?;
                    if den.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    value /= Rational::from_integer(den);
                }
                Ok(MultiPoly::constant(value, self.nvars))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn digits(&mut self) -> Result<&str> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn integer(&mut self) -> Result<u64> {
        let d = self.digits()?;
        d.parse().map_err(|_| Error::Parse { pos: self.pos, msg: "integer overflow".into() })
    }

    fn big_integer(&mut self) -> Result<BigInt> {
        let d = self.digits()?.to_string();
        Ok(d.parse().expect("digits parse as BigInt"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_example() {
        let f = parse("3*x1^2*x2 - 1/2*x2 + 7").unwrap();
        assert_eq!(f.nvars(), 2);
        assert_eq!(f.to_string(), "3*x1^2*x2 - 1/2*x2 + 7");
    }

    #[test]
    fn whitespace_and_parentheses() {
        let a = parse(" ( x1+ 1 ) * (x1 -1)").unwrap();
        assert_eq!(a.to_string(), "x1^2 - 1");
        assert_eq!(parse("-x1^2").unwrap().to_string(), "-x1^2");
        assert_eq!(parse("2^10").unwrap().to_string(), "1024");
    }

    #[test]
    fn errors() {
        assert!(matches!(parse("x1 +"), Err(Error::Parse { .. })));
        assert!(matches!(parse("x0"), Err(Error::Parse { .. })));
        assert!(matches!(parse("1/0"), Err(Error::Parse { .. })));
        assert!(matches!(parse_with_nvars("x3", 2), Err(Error::Parse { .. })));
        assert!(matches!(parse("x1 ) "), Err(Error::Parse { .. })));
        assert!(matches!(parse("y1"), Err(Error::Parse { .. })));
    }
}
