//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`], whose `Ord` is the
//! graded reverse-lexicographic order with `x1 > x2 > ... > xn`. Iterating the
//! map backwards therefore yields the canonical (grevlex-descending) rendering
//! order. Zero coefficients are never stored.

mod parse;
pub mod univariate;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::{Integer, Rational};

pub use parse::{max_var_index, parse, parse_with_nvars};

/// Exponent vector of a monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides_by(other) {
            Some(Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
        } else {
            None
        }
    }

    pub fn divides_by(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Sum of exponents over the given variable indices.
    pub fn block_degree(&self, block: &[usize]) -> u32 {
        block.iter().map(|&i| self.0[i]).sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.degree().cmp(&other.degree()))
            .then_with(|| {
                for (a, b) in self.0.iter().zip(&other.0).rev() {
                    if a != b {
                        // smaller exponent in the last differing variable wins
                        return b.cmp(a);
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `nvars` variables over Q.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(Rational::one(), nvars)
    }

    pub fn constant(c: Rational, nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn from_int(c: i64, nvars: usize) -> Self {
        Self::constant(Rational::from_integer(c.into()), nvars)
    }

    /// The variable `x_{index+1}`.
    pub fn var(index: usize, nvars: usize) -> Self {
        assert!(index < nvars, "variable index {index} out of range for {nvars} variables");
        let mut p = Self::zero(nvars);
        p.terms.insert(Monomial::var(nvars, index), Rational::one());
        p
    }

    pub fn monomial(exponents: Vec<u32>, coeff: Rational) -> Self {
        let nvars = exponents.len();
        let mut p = Self::zero(nvars);
        if !coeff.is_zero() {
            p.terms.insert(Monomial(exponents), coeff);
        }
        p
    }

    /// Builds a polynomial from (exponents, coefficient) pairs, merging
    /// repeated monomials and dropping zeros.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(Monomial(e), c);
        }
        p
    }

    /// Same as [`from_terms`](Self::from_terms) with integer coefficients.
    pub fn from_int_terms(nvars: usize, terms: &[(&[u32], i64)]) -> Self {
        Self::from_terms(
            nvars,
            terms
                .iter()
                .map(|(e, c)| (e.to_vec(), Rational::from_integer((*c).into()))),
        )
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// `self -= c·x^m·g`, in place.
    pub(crate) fn sub_scaled_shift(&mut self, g: &MultiPoly, m: &Monomial, c: &Rational) {
        for (k, a) in &g.terms {
            self.add_term(k.mul(m), -(a * c));
        }
    }

    /// Removes and returns the leading term.
    pub(crate) fn pop_leading(&mut self) -> Option<(Monomial, Rational)> {
        self.terms.pop_last()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in grevlex-descending order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coefficients(&self) -> impl Iterator<Item = &Rational> + '_ {
        self.terms.values()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.nvars))
    }

    /// Total degree; `None` encodes the degree of the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Total degree with the zero polynomial mapped to 0.
    pub fn degree_or_zero(&self) -> u32 {
        self.degree().unwrap_or(0)
    }

    /// Maximum over terms of the exponent sum in `block` (0-based indices).
    pub fn partial_degree(&self, block: &[usize]) -> Option<u32> {
        self.terms.keys().map(|m| m.block_degree(block)).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.partial_degree(&[var])
    }

    /// Grevlex-leading term.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    /// Exponent vectors of all terms.
    pub fn support(&self) -> Vec<Vec<u32>> {
        self.terms.keys().map(|m| m.0.clone()).collect()
    }

    /// Variables that occur with positive exponent.
    pub fn occurring_vars(&self) -> Vec<usize> {
        (0..self.nvars)
            .filter(|&i| self.terms.keys().any(|m| m.0[i] > 0))
            .collect()
    }

    /// Whether every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    fn check_same(&self, other: &MultiPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VarCountMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_same(other)?;
        let mut out = MultiPoly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Multiplies by `c * x^m`.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut result = MultiPoly::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::LengthMismatch { expected: self.nvars, got: point.len() });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Substitutes `x_i := subs[i]`; every entry of `subs` must share one
    /// variable count, which becomes the variable count of the result.
    pub fn compose(&self, subs: &[MultiPoly]) -> Result<MultiPoly> {
        if subs.len() != self.nvars {
            return Err(Error::LengthMismatch { expected: self.nvars, got: subs.len() });
        }
        let target = match subs.first() {
            Some(p) => p.nvars,
            None => return Ok(self.clone()),
        };
        for s in subs {
            if s.nvars != target {
                return Err(Error::VarCountMismatch { left: target, right: s.nvars });
            }
        }
        // cache powers of each substituted polynomial
        let mut powers: Vec<Vec<MultiPoly>> = subs.iter().map(|s| vec![MultiPoly::one(target), s.clone()]).collect();
        let mut out = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(c.clone(), target);
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &subs[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Composes with the affine map `x -> matrix * x + shift`.
    pub fn substitute_affine(&self, matrix: &Matrix, shift: &[Rational]) -> Result<MultiPoly> {
        let n = self.nvars;
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::LengthMismatch { expected: n, got: matrix.rows() });
        }
        if shift.len() != n {
            return Err(Error::LengthMismatch { expected: n, got: shift.len() });
        }
        if matrix.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        let subs: Vec<MultiPoly> = (0..n)
            .map(|i| {
                let mut p = MultiPoly::constant(shift[i].clone(), n);
                for j in 0..n {
                    p.add_term(Monomial::var(n, j), matrix[(i, j)].clone());
                }
                p
            })
            .collect();
        self.compose(&subs)
    }

    /// Homogenizes with a new variable `x0` placed at index 0.
    pub fn homogenize(&self) -> MultiPoly {
        let d = self.degree_or_zero();
        let mut out = MultiPoly::zero(self.nvars + 1);
        for (m, c) in &self.terms {
            let mut e = Vec::with_capacity(self.nvars + 1);
            e.push(d - m.degree());
            e.extend_from_slice(&m.0);
            out.terms.insert(Monomial(e), c.clone());
        }
        out
    }

    /// Sets the variable at index 0 to 1 and drops it.
    pub fn dehomogenize(&self) -> MultiPoly {
        assert!(self.nvars >= 1);
        let mut out = MultiPoly::zero(self.nvars - 1);
        for (m, c) in &self.terms {
            out.add_term(Monomial(m.0[1..].to_vec()), c.clone());
        }
        out
    }

    /// Re-embeds into `nvars` variables; variable `i` goes to `map[i]`.
    pub fn embed(&self, nvars: usize, map: &[usize]) -> MultiPoly {
        assert_eq!(map.len(), self.nvars);
        let mut out = MultiPoly::zero(nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0; nvars];
            for (i, &x) in m.0.iter().enumerate() {
                e[map[i]] += x;
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Pads with extra trailing variables.
    pub fn with_nvars(&self, nvars: usize) -> MultiPoly {
        assert!(nvars >= self.nvars);
        let map: Vec<usize> = (0..self.nvars).collect();
        self.embed(nvars, &map)
    }

    pub fn derivative(&self, var: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e > 0 {
                let mut ne = m.0.clone();
                ne[var] -= 1;
                out.add_term(Monomial(ne), c * Rational::from_integer(e.into()));
            }
        }
        out
    }

    /// Splits `f = content * primitive` where `primitive` has coprime integer
    /// coefficients and a positive grevlex-leading coefficient.
    pub fn content_and_primitive(&self) -> Result<(Rational, MultiPoly)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = Rational::new(num_gcd, den_lcm);
        if self.leading_coeff().map(|c| c.is_negative()).unwrap_or(false) {
            content = -content;
        }
        let inv = content.recip();
        Ok((content, self.scale(&inv)))
    }

    /// Least common multiple of coefficient denominators.
    pub fn denominator_lcm(&self) -> Integer {
        self.terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Canonical text form, naming variable `i` as `names(i)`.
    pub fn render_with<F: Fn(usize) -> String>(&self, names: F) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names(i)),
                    _ => factors.push(format!("{}^{}", names(i), e)),
                }
            }
            s.push_str(&factors.join("*"));
        }
        s
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(|i| format!("x{}", i + 1)))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                self.$checked(rhs).expect("polynomial variable counts differ")
            }
        }
        impl $trait<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

/// Determinant of a square matrix of polynomials by Laplace expansion along
/// the first row.
pub fn det_poly(m: &[Vec<MultiPoly>], nvars: usize) -> MultiPoly {
    let n = m.len();
    if n == 0 {
        return MultiPoly::one(nvars);
    }
    assert!(m.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = MultiPoly::zero(nvars);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<MultiPoly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, p)| p.clone()).collect())
            .collect();
        let t = &m[0][j] * &det_poly(&minor, nvars);
        acc = if j % 2 == 0 { &acc + &t } else { &acc - &t };
    }
    acc
}

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Shorthand for `n/d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        parse(s).unwrap()
    }

    fn pn(s: &str, n: usize) -> MultiPoly {
        parse_with_nvars(s, n).unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(p("x1 + 1") + p("x1 - 1"), p("2*x1"));
        assert_eq!(p("x1^2 + 1/2") + MultiPoly::zero(1), p("x1^2 + 1/2"));
        assert_eq!(p("x1^2 + 1/2") + p("x1^2 + 1/2"), p("2*x1^2 + 1"));
        assert!(matches!(
            p("x1").checked_add(&pn("x2", 2)),
            Err(Error::VarCountMismatch { .. })
        ));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p("x1 - 1") * p("x1 + 1"), p("x1^2 - 1"));
        let f = pn("3*x1^2*x2 - 1/2*x2 + 7", 2);
        assert_eq!(&f * &MultiPoly::one(2), f);
        assert_eq!(p("(x1 + x2)^2"), p("x1^2 + 2*x1*x2 + x2^2"));
        assert_eq!(pn("x1 + x2", 2).pow(2), p("x1^2 + 2*x1*x2 + x2^2"));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p("x1^2 - 2").eval(&[ratio(3, 2)]).unwrap(), ratio(1, 4));
        let f = pn("3*x1^2*x2 - 1/2*x2 + 7", 2);
        assert_eq!(f.eval(&[rat(0), rat(0)]).unwrap(), f.constant_term());
        assert_eq!(p("x1*x2 - 1").eval(&[rat(2), ratio(1, 2)]).unwrap(), rat(0));
        assert!(matches!(p("x1").eval(&[]), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn affine_substitution() {
        let id = Matrix::identity(1);
        assert_eq!(p("x1").substitute_affine(&id, &[rat(1)]).unwrap(), p("x1 + 1"));
        let two = Matrix::from_rows(vec![vec![rat(2)]]);
        assert_eq!(p("x1^2").substitute_affine(&two, &[rat(0)]).unwrap(), p("4*x1^2"));
        let sing = Matrix::from_rows(vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)]]);
        assert_eq!(
            pn("x1", 2).substitute_affine(&sing, &[rat(0), rat(0)]),
            Err(Error::SingularMatrix)
        );
    }

    #[test]
    fn homogenize_examples() {
        // x0 is index 0, so x1 of the input becomes index 1
        let h = p("x1 + 1").homogenize();
        assert_eq!(h, pn("x2 + x1", 2));
        assert_eq!(h.render_with(|i| format!("x{i}")), "x0 + x1");
        assert_eq!(MultiPoly::from_int(5, 1).homogenize(), MultiPoly::from_int(5, 2));
        let h = p("x1^2 + x2").homogenize();
        assert_eq!(h.render_with(|i| format!("x{i}")), "x1^2 + x0*x2");
        assert_eq!(h.dehomogenize(), p("x1^2 + x2"));
    }

    #[test]
    fn content_examples() {
        let (c, q) = p("4*x1 + 6").content_and_primitive().unwrap();
        assert_eq!((c, q), (rat(2), p("2*x1 + 3")));
        let (c, q) = p("1/3*x1").content_and_primitive().unwrap();
        assert_eq!((c, q), (ratio(1, 3), p("x1")));
        let (c, q) = p("-2/3*x1^2 + 4/9").content_and_primitive().unwrap();
        assert_eq!(c, ratio(-2, 9));
        assert_eq!(q, p("3*x1^2 - 2"));
        assert_eq!(q.content_and_primitive().unwrap().0, rat(1));
        assert_eq!(MultiPoly::zero(1).content_and_primitive(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn partial_degree_examples() {
        let f = p("x1^2*x2");
        assert_eq!(f.partial_degree(&[0]), Some(2));
        assert_eq!(f.partial_degree(&[1]), Some(1));
        assert_eq!(f.partial_degree(&[0, 1]), f.degree());
        assert_eq!(MultiPoly::zero(2).degree(), None);
        assert_eq!(MultiPoly::one(2).degree(), Some(0));
    }

    #[test]
    fn grevlex_order() {
        // x1^2 > x1*x2 > x2^2 > x1*x3 > x2*x3 > x3^2 in grevlex
        let m = |e: &[u32]| Monomial::new(e.to_vec());
        let seq = [m(&[2, 0, 0]), m(&[1, 1, 0]), m(&[0, 2, 0]), m(&[1, 0, 1]), m(&[0, 1, 1]), m(&[0, 0, 2])];
        for w in seq.windows(2) {
            assert!(w[0] > w[1], "{:?} > {:?}", w[0], w[1]);
        }
        assert!(m(&[0, 0, 1]) > m(&[0, 0, 0]));
    }

    #[test]
    fn render_is_canonical() {
        let f = pn("7 - 1/2*x2 + 3*x2*x1^2", 2);
        assert_eq!(f.to_string(), "3*x1^2*x2 - 1/2*x2 + 7");
        assert_eq!(p("-x1 + 1").to_string(), "-x1 + 1");
        assert_eq!(MultiPoly::zero(3).to_string(), "0");
    }
}
