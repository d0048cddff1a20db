//! Dense univariate polynomials over Q.
//!
//! Used by the exact Mahler path (squarefree splitting before root finding),
//! by radicality tests on characteristic polynomials, and as the resultant
//! oracle for Canny–Emiris checks.

use std::fmt;

use num_traits::{One, Zero};

use super::{Monomial, MultiPoly};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::Rational;

/// Coefficients in increasing degree; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly { coeffs: vec![Rational::one()] }
    }

    /// `x - root`
    pub fn linear(root: Rational) -> Self {
        UniPoly::new(vec![-root, Rational::one()])
    }

    /// Reads a polynomial in which at most one variable occurs.
    pub fn from_multi(f: &MultiPoly) -> Result<Self> {
        let vars = f.occurring_vars();
        if vars.len() > 1 {
            return Err(Error::NotUnivariate);
        }
        let deg = f.degree_or_zero() as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (m, c) in f.terms() {
            coeffs[m.degree() as usize] = c.clone();
        }
        Ok(UniPoly::new(coeffs))
    }

    /// Embeds as a polynomial in variable `var` of an `nvars`-variate ring.
    pub fn to_multi(&self, var: usize, nvars: usize) -> MultiPoly {
        let mut f = MultiPoly::zero(nvars);
        for (k, c) in self.coeffs.iter().enumerate() {
            let mut e = vec![0; nvars];
            e[var] = k as u32;
            f.add_term(Monomial::new(e), c.clone());
        }
        f
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => {
                let inv = l.recip();
                UniPoly { coeffs: self.coeffs.iter().map(|c| c * &inv).collect() }
            }
            None => self.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = Rational::zero();
        UniPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(UniPoly::one(), |acc, _| acc.mul(self))
    }

    pub fn derivative(&self) -> Self {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(k.into()))
                .collect(),
        )
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd).max(1)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1;
            let c = &rem[k] * &lead_inv;
            if !c.is_zero() {
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    let t = &c * b;
                    rem[k - dd + j] -= t;
                }
                quot[k - dd] = c;
            }
            rem.pop();
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Monic greatest common divisor (zero if both inputs vanish).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    /// Yun's algorithm: returns `(multiplicity, factor)` pairs of monic
    /// squarefree coprime factors whose powers multiply to `self` up to the
    /// leading coefficient.
    pub fn squarefree_decomposition(&self) -> Vec<(u32, UniPoly)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_rem(&a0).0;
        let mut c = df.div_rem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        loop {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((i, a.clone()));
            }
            b = b.div_rem(&a).0;
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = d.div_rem(&a).0;
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    /// Resultant as the determinant of the Sylvester matrix.
    pub fn resultant(&self, other: &Self) -> Rational {
        let (m, n) = match (self.degree(), other.degree()) {
            (Some(m), Some(n)) => (m, n),
            _ => return Rational::zero(),
        };
        if m == 0 && n == 0 {
            return Rational::one();
        }
        sylvester_matrix(self, other).det()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(crate::linalg::rat_to_f64).collect()
    }
}

/// Sylvester matrix of `f` (degree m) and `g` (degree n): n shifted rows of
/// f's coefficients followed by m shifted rows of g's, highest degree first.
pub fn sylvester_matrix(f: &UniPoly, g: &UniPoly) -> Matrix {
    let m = f.degree().unwrap_or(0);
    let n = g.degree().unwrap_or(0);
    let size = m + n;
    let mut rows = vec![vec![Rational::zero(); size]; size];
    for i in 0..n {
        for (k, c) in f.coeffs.iter().enumerate() {
            rows[i][i + m - k] = c.clone();
        }
    }
    for i in 0..m {
        for (k, c) in g.coeffs.iter().enumerate() {
            rows[n + i][i + n - k] = c.clone();
        }
    }
    Matrix::from_rows(rows)
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_multi(0, 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse, rat};

    fn u(s: &str) -> UniPoly {
        UniPoly::from_multi(&parse(s).unwrap()).unwrap()
    }

    #[test]
    fn division_and_gcd() {
        let (q, r) = u("x1^3 - 1").div_rem(&u("x1 - 1"));
        assert_eq!(q, u("x1^2 + x1 + 1"));
        assert!(r.is_zero());
        assert_eq!(u("x1^2 - 1").gcd(&u("x1^2 + 2*x1 + 1")), u("x1 + 1"));
    }

    #[test]
    fn squarefree_parts() {
        let f = u("(x1 - 1)^3*(x1 + 2)*(x1^2 + 1)^2");
        let dec = f.squarefree_decomposition();
        assert_eq!(dec, vec![(1, u("x1 + 2")), (2, u("x1^2 + 1")), (3, u("x1 - 1"))]);
        assert!(!f.is_squarefree());
        assert!(u("x1^2 - 2").is_squarefree());
    }

    #[test]
    fn resultant_by_hand() {
        // Res(x - 1, x - 2) = 1 - 2 up to sign convention: det [[1,-1],[1,-2]] = -1
        assert_eq!(u("x1 - 1").resultant(&u("x1 - 2")), rat(-1));
        // roots ±1 and ±2: prod (a - b) = (1-2)(1+2)(-1-2)(-1+2) = 9
        assert_eq!(u("x1^2 - 1").resultant(&u("x1^2 - 4")), rat(9));
        assert_eq!(u("x1^2 - 1").resultant(&u("x1^2 - 1")), rat(0));
    }

    #[test]
    fn not_univariate() {
        assert_eq!(UniPoly::from_multi(&parse("x1*x2").unwrap()), Err(Error::NotUnivariate));
        // a single occurring variable in a larger ring is accepted
        let f = crate::poly::parse_with_nvars("x2^2 + 1", 3).unwrap();
        assert_eq!(UniPoly::from_multi(&f).unwrap(), u("x1^2 + 1"));
    }
}
