//! Exact values of the form `c + Σ c_p·log p` with rational `c`, `c_p`.
//!
//! Every degree and height bound is linear in logarithms of integers, so
//! bounds evaluate exactly in this representation. Logarithms are split
//! into prime logarithms, which makes the representation canonical.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::heights::factor::factorize;
use crate::linalg::{big_ln, rat_to_f64};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LogLinear {
    constant: Rational,
    logs: BTreeMap<BigInt, Rational>,
}

impl LogLinear {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn rational(c: Rational) -> Self {
        LogLinear { constant: c, logs: BTreeMap::new() }
    }

    pub fn int(c: i64) -> Self {
        Self::rational(Rational::from_integer(c.into()))
    }

    /// `log n` for a positive integer `n`.
    pub fn log(n: &BigInt) -> Self {
        assert!(n.is_positive(), "log of a non-positive integer");
        let mut out = Self::zero();
        for (p, e) in factorize(n) {
            out.logs.insert(p, Rational::from_integer(e.into()));
        }
        out
    }

    pub fn log_u(n: u64) -> Self {
        Self::log(&BigInt::from(n))
    }

    /// `log q` for a positive rational.
    pub fn log_rational(q: &Rational) -> Self {
        Self::log(q.numer()) - Self::log(q.denom())
    }

    pub fn constant(&self) -> &Rational {
        &self.constant
    }

    /// Coefficients of the prime logarithms.
    pub fn log_terms(&self) -> &BTreeMap<BigInt, Rational> {
        &self.logs
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.logs.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LogLinear {
            constant: &self.constant * c,
            logs: self.logs.iter().map(|(p, a)| (p.clone(), a * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&Rational::from_integer(c.into()))
    }

    pub fn scale_big(&self, c: &BigInt) -> Self {
        self.scale(&Rational::from_integer(c.clone()))
    }

    pub fn to_f64(&self) -> f64 {
        let mut v = rat_to_f64(&self.constant);
        for (p, c) in &self.logs {
            v += rat_to_f64(c) * big_ln(p);
        }
        v
    }

    /// Parses sums of rationals, decimals and `[coef*]log(n)` terms, for
    /// instance `2*log(3) + 1/2` or `1.25`.
    pub fn parse(text: &str) -> Result<Self> {
        let err = |msg: &str| Error::Parse { pos: 0, msg: format!("{msg} in `{text}`") };
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty value"));
        }
        let mut out = LogLinear::zero();
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'(' && bytes[i - 1] != b'e' {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        for t in terms {
            let (neg, body) = match t.as_bytes()[0] {
                b'-' => (true, &t[1..]),
                b'+' => (false, &t[1..]),
                _ => (false, t),
            };
            let value = if let Some(pos) = body.find("log(") {
                if !body.ends_with(')') {
                    return Err(err("unterminated log("));
                }
                let coef = match &body[..pos] {
                    "" => Rational::one(),
                    c => parse_number(c.strip_suffix('*').ok_or_else(|| err("expected `*` before log"))?)
                        .ok_or_else(|| err("bad coefficient"))?,
                };
                let arg = parse_number(&body[pos + 4..body.len() - 1]).ok_or_else(|| err("bad log argument"))?;
                if !arg.is_positive() {
                    return Err(err("log of a non-positive number"));
                }
                LogLinear::log_rational(&arg).scale(&coef)
            } else {
                LogLinear::rational(parse_number(body).ok_or_else(|| err("bad number"))?)
            };
            out = if neg { out - value } else { out + value };
        }
        Ok(out)
    }
}

/// Integer, `p/q`, or finite decimal, as an exact rational.
pub fn parse_number(s: &str) -> Option<Rational> {
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.parse().ok()?;
        let d: BigInt = d.parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let neg = int.starts_with('-');
        let int_digits = int.trim_start_matches(['-', '+']);
        let digits: BigInt = format!("{}{}", if int_digits.is_empty() { "0" } else { int_digits }, frac)
            .parse()
            .ok()?;
        let v = Rational::new(digits, BigInt::from(10).pow(frac.len() as u32));
        return Some(if neg { -v } else { v });
    }
    s.parse::<BigInt>().ok().map(Rational::from_integer)
}

impl Add for LogLinear {
    type Output = LogLinear;
    fn add(mut self, rhs: LogLinear) -> LogLinear {
        self.constant += rhs.constant;
        for (p, c) in rhs.logs {
            let e = self.logs.entry(p.clone()).or_insert_with(Rational::zero);
            *e += c;
            if e.is_zero() {
                self.logs.remove(&p);
            }
        }
        self
    }
}

impl Add<&LogLinear> for &LogLinear {
    type Output = LogLinear;
    fn add(self, rhs: &LogLinear) -> LogLinear {
        self.clone() + rhs.clone()
    }
}

impl Neg for LogLinear {
    type Output = LogLinear;
    fn neg(self) -> LogLinear {
        self.scale(&-Rational::one())
    }
}

impl Sub for LogLinear {
    type Output = LogLinear;
    fn sub(self, rhs: LogLinear) -> LogLinear {
        self + (-rhs)
    }
}

impl Mul<i64> for LogLinear {
    type Output = LogLinear;
    fn mul(self, rhs: i64) -> LogLinear {
        self.scale_int(rhs)
    }
}

impl Mul<&Rational> for LogLinear {
    type Output = LogLinear;
    fn mul(self, rhs: &Rational) -> LogLinear {
        self.scale(rhs)
    }
}

impl std::iter::Sum for LogLinear {
    fn sum<I: Iterator<Item = LogLinear>>(iter: I) -> LogLinear {
        iter.fold(LogLinear::zero(), |a, b| a + b)
    }
}

impl fmt::Display for LogLinear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<(bool, String)> = Vec::new();
        if !self.constant.is_zero() {
            parts.push((self.constant.is_negative(), self.constant.abs().to_string()));
        }
        for (p, c) in &self.logs {
            let body = if c.abs().is_one() { format!("log({p})") } else { format!("{}*log({p})", c.abs()) };
            parts.push((c.is_negative(), body));
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        for (k, (neg, body)) in parts.iter().enumerate() {
            match (k, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ratio;

    #[test]
    fn canonical_prime_split() {
        let v = LogLinear::log_u(12) + LogLinear::log_u(3).scale_int(-1);
        assert_eq!(v, LogLinear::log_u(4));
        assert_eq!(v.to_string(), "2*log(2)");
        assert!((v.to_f64() - 4f64.ln()).abs() < 1e-15);
        assert_eq!(LogLinear::log_u(1).to_string(), "0");
    }

    #[test]
    fn display_and_parse_roundtrip() {
        let v = LogLinear::rational(ratio(-3, 2)) + LogLinear::log_u(6).scale(&ratio(5, 4));
        let s = v.to_string();
        assert_eq!(s, "-3/2 + 5/4*log(2) + 5/4*log(3)");
        assert_eq!(LogLinear::parse(&s).unwrap(), v);
        assert_eq!(LogLinear::parse("log(4)").unwrap(), LogLinear::log_u(4));
        assert_eq!(LogLinear::parse("1.25").unwrap(), LogLinear::rational(ratio(5, 4)));
        assert_eq!(LogLinear::parse("-log(1/2)").unwrap(), LogLinear::log_u(2));
        assert!(LogLinear::parse("log(0)").is_err());
        assert!(LogLinear::parse("abc").is_err());
    }
}
