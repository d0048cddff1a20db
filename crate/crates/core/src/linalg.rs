//! Exact dense linear algebra over Q and Z.
//!
//! Determinants use Bareiss elimination on integer-scaled rows. Linear
//! systems go through a fraction-free Gauss–Jordan on integer rows with
//! per-row content stripping; row updates for a pivot run in parallel.

use std::ops::{Index, IndexMut};

use num_bigint::{BigInt, Sign};
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::Rational;

/// Nearest `f64` to a big integer, saturating to infinity.
pub fn big_to_f64(x: &BigInt) -> f64 {
    x.to_f64().unwrap_or(if x.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY })
}

/// Nearest `f64` to a rational, robust to huge numerators and denominators.
pub fn rat_to_f64(x: &Rational) -> f64 {
    let (n, d) = (x.numer(), x.denom());
    let (nb, db) = (n.bits() as i64, d.bits() as i64);
    if nb < 1000 && db < 1000 {
        return big_to_f64(n) / big_to_f64(d);
    }
    // keep ~60 significant bits of each and rescale by the exponent gap
    let shift_n = (nb - 60).max(0);
    let shift_d = (db - 60).max(0);
    let nn = big_to_f64(&(n >> shift_n as usize));
    let dd = big_to_f64(&(d >> shift_d as usize));
    nn / dd * 2f64.powi((shift_n - shift_d) as i32)
}

/// Natural logarithm of `|x|`; `-inf` for zero.
pub fn big_ln(x: &BigInt) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits() as i64;
    if bits < 1000 {
        return big_to_f64(&x.abs()).ln();
    }
    let shift = bits - 60;
    big_to_f64(&(x.abs() >> shift as usize)).ln() + shift as f64 * std::f64::consts::LN_2
}

/// Natural logarithm of `|x|` for a nonzero rational.
pub fn rat_ln(x: &Rational) -> f64 {
    big_ln(x.numer()) - big_ln(x.denom())
}

/// Dense row-major matrix over Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_ints(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shapes");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .map(|(a, b)| a * b)
                    .fold(Rational::zero(), |x, y| x + y)
            })
            .collect()
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    /// Evaluates a polynomial (coefficients in increasing degree) at the
    /// matrix by Horner's rule.
    pub fn eval_poly(&self, coeffs: &[Rational]) -> Matrix {
        assert!(self.is_square());
        let n = self.rows;
        let mut acc = Matrix::zeros(n, n);
        for c in coeffs.iter().rev() {
            acc = acc.mul(self).add(&Matrix::identity(n).scale(c));
        }
        acc
    }

    /// Integer rows obtained by clearing each row's denominators.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
        let mut scales = Vec::with_capacity(self.rows);
        let rows = (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let l = row.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
                let out = row.iter().map(|c| c.numer() * (&l / c.denom())).collect();
                scales.push(l);
                out
            })
            .collect();
        (rows, scales)
    }

    /// Determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> Rational {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Rational::one();
        }
        let (mut a, scales) = self.integer_rows();
        let denom: BigInt = scales.iter().product();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                    None => return Rational::zero(),
                }
            }
            let (top, bottom) = a.split_at_mut(k + 1);
            let pivot_row = &top[k];
            bottom.par_iter_mut().for_each(|row| {
                for j in k + 1..n {
                    let v = &row[j] * &pivot_row[k] - &row[k] * &pivot_row[j];
                    row[j] = v / &prev;
                }
                row[k] = BigInt::zero();
            });
            prev = a[k][k].clone();
        }
        Rational::new(sign * &a[n - 1][n - 1], denom)
    }

    /// Rank over Q.
    pub fn rank(&self) -> usize {
        let (rows, _) = self.integer_rows();
        let rhs = vec![BigInt::zero(); self.rows];
        IntegerSystem::new(rows, rhs, self.cols).reduce().pivots.len()
    }

    /// A solution of `self * x = b` with free variables set to zero, or
    /// `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows);
        let mut rows = Vec::with_capacity(self.rows);
        let mut rhs = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let row = self.row(i);
            let l = row
                .iter()
                .chain(std::iter::once(&b[i]))
                .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            rows.push(row.iter().map(|c| c.numer() * (&l / c.denom())).collect());
            rhs.push(b[i].numer() * (&l / b[i].denom()));
        }
        IntegerSystem::new(rows, rhs, self.cols).reduce().solution()
    }

    pub fn inverse(&self) -> Result<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        let mut inv = Matrix::zeros(n, n);
        for j in 0..n {
            let e: Vec<Rational> = (0..n)
                .map(|i| if i == j { Rational::one() } else { Rational::zero() })
                .collect();
            let x = self.solve(&e).ok_or(Error::SingularMatrix)?;
            if self.mul_vec(&x) != e {
                return Err(Error::SingularMatrix);
            }
            for i in 0..n {
                inv[(i, j)] = x[i].clone();
            }
        }
        Ok(inv)
    }

    /// Characteristic polynomial `det(t I - A)` as monic coefficients in
    /// increasing degree (length `n + 1`), via similarity reduction to upper
    /// Hessenberg form followed by the Hessenberg recurrence.
    pub fn charpoly(&self) -> Vec<Rational> {
        assert!(self.is_square());
        let n = self.rows;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !h[(i, m - 1)].is_zero()) else {
                continue;
            };
            if i != m {
                for j in 0..n {
                    let t = h[(i, j)].clone();
                    h[(i, j)] = h[(m, j)].clone();
                    h[(m, j)] = t;
                }
                for r in 0..n {
                    let t = h[(r, i)].clone();
                    h[(r, i)] = h[(r, m)].clone();
                    h[(r, m)] = t;
                }
            }
            for i in m + 1..n {
                if h[(i, m - 1)].is_zero() {
                    continue;
                }
                let u = &h[(i, m - 1)] / &h[(m, m - 1)];
                for j in 0..n {
                    let t = &u * &h[(m, j)];
                    h[(i, j)] -= t;
                }
                for r in 0..n {
                    let t = &u * &h[(r, i)];
                    h[(r, m)] += t;
                }
            }
        }
        // p_k = characteristic polynomial of the leading k x k block
        let mut p: Vec<Vec<Rational>> = vec![vec![Rational::one()]];
        for k in 0..n {
            // (t - h_kk) p_k
            let mut next = vec![Rational::zero(); k + 2];
            for (j, c) in p[k].iter().enumerate() {
                next[j + 1] += c;
                next[j] -= c * &h[(k, k)];
            }
            let mut prod = Rational::one();
            for i in (0..k).rev() {
                prod *= &h[(i + 1, i)];
                if prod.is_zero() {
                    break;
                }
                let c = &prod * &h[(i, k)];
                if c.is_zero() {
                    continue;
                }
                for (j, a) in p[i].iter().enumerate() {
                    next[j] -= &c * a;
                }
            }
            p.push(next);
        }
        p.pop().expect("nonempty")
    }
}

/// An integer linear system `rows * x = rhs` under fraction-free
/// Gauss–Jordan reduction.
pub struct IntegerSystem {
    rows: Vec<Vec<BigInt>>,
    rhs: Vec<BigInt>,
    ncols: usize,
    pivots: Vec<(usize, usize)>,
    inconsistent: bool,
}

impl IntegerSystem {
    pub fn new(rows: Vec<Vec<BigInt>>, rhs: Vec<BigInt>, ncols: usize) -> Self {
        assert_eq!(rows.len(), rhs.len());
        IntegerSystem { rows, rhs, ncols, pivots: Vec::new(), inconsistent: false }
    }

    fn strip_content(row: &mut [BigInt], rhs: &mut BigInt) {
        let mut g = rhs.abs();
        for c in row.iter() {
            if !c.is_zero() {
                g = g.gcd(c);
                if g.is_one() {
                    return;
                }
            }
        }
        if g.is_zero() || g.is_one() {
            return;
        }
        for c in row.iter_mut() {
            if !c.is_zero() {
                *c /= &g;
            }
        }
        *rhs /= &g;
    }

    /// Reduces to row echelon form with every pivot column cleared in all
    /// other rows. Pivot rows are chosen by smallest pivot magnitude.
    pub fn reduce(mut self) -> Self {
        let nrows = self.rows.len();
        let mut used = vec![false; nrows];
        for col in 0..self.ncols {
            let pivot = (0..nrows)
                .filter(|&r| !used[r] && !self.rows[r][col].is_zero())
                .min_by_key(|&r| (self.rows[r][col].bits(), r));
            let Some(p) = pivot else { continue };
            used[p] = true;
            self.pivots.push((p, col));
            let prow = std::mem::take(&mut self.rows[p]);
            let prhs = std::mem::take(&mut self.rhs[p]);
            let pv = prow[col].clone();
            let ncols = self.ncols;
            self.rows
                .par_iter_mut()
                .zip(self.rhs.par_iter_mut())
                .enumerate()
                .filter(|(r, (row, _))| *r != p && !row.is_empty() && !row[col].is_zero())
                .for_each(|(_, (row, rhs))| {
                    let f = row[col].clone();
                    let g = f.gcd(&pv);
                    let (a, b) = (&pv / &g, &f / &g);
                    for j in 0..ncols {
                        if prow[j].is_zero() {
                            if !row[j].is_zero() {
                                row[j] *= &a;
                            }
                        } else {
                            row[j] = &row[j] * &a - &b * &prow[j];
                        }
                    }
                    *rhs = &*rhs * &a - &b * &prhs;
                    Self::strip_content(row, rhs);
                });
            self.rows[p] = prow;
            self.rhs[p] = prhs;
        }
        self.inconsistent = (0..nrows).any(|r| !used[r] && !self.rhs[r].is_zero());
        self
    }

    pub fn is_consistent(&self) -> bool {
        !self.inconsistent
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Solution with free variables set to zero.
    pub fn solution(&self) -> Option<Vec<Rational>> {
        if self.inconsistent {
            return None;
        }
        let mut x = vec![Rational::zero(); self.ncols];
        for &(r, c) in &self.pivots {
            x[c] = Rational::new(self.rhs[r].clone(), self.rows[r][c].clone());
        }
        Some(x)
    }

    /// Solution as a common denominator and integer numerators, with free
    /// variables set to zero.
    pub fn integer_solution(&self) -> Option<(BigInt, Vec<BigInt>)> {
        let x = self.solution()?;
        let l = x.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums = x.iter().map(|c| c.numer() * (&l / c.denom())).collect();
        let l = if l.sign() == Sign::Minus { -l } else { l };
        Some((l, nums))
    }
}
