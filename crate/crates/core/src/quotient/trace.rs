//! Pseudo-Jacobian, the Tate trace `σ`, and division through
//! `q = (1/N(Jf)) Σ_m Tr((Jf)*·g·a_m)·c_m`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::{adjoint_matrix, ser_rational, ser_rationals, QuotientAlgebra};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::{det_poly, Monomial, MultiPoly};
use crate::Rational;

/// Which block of variables indexes the monomials `b_m` when `Δ(x, y)` is
/// split as `Σ_m a_m·b_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SplitBy {
    Y,
    X,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TraceDecomposition {
    pub n: usize,
    /// `l_ij` in `2n` variables: `x` at indices `0..n`, `y` at `n..2n`.
    #[serde(serialize_with = "ser_matrix")]
    pub l_matrix: Vec<Vec<MultiPoly>>,
    #[serde(serialize_with = "ser_poly")]
    pub delta: MultiPoly,
    /// `(a_m, c_m)` as polynomials in `x` alone.
    #[serde(serialize_with = "ser_pairs")]
    pub pairs: Vec<(MultiPoly, MultiPoly)>,
}

fn ser_poly<S: serde::Serializer>(p: &MultiPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

fn ser_matrix<S: serde::Serializer>(m: &[Vec<MultiPoly>], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(m.iter().map(|r| r.iter().map(|p| p.to_string()).collect::<Vec<_>>()))
}

fn ser_pairs<S: serde::Serializer>(v: &[(MultiPoly, MultiPoly)], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|(a, c)| [a.to_string(), c.to_string()]))
}

/// `l_ij = (F_i(x_1..x_{j−1}, y_j..y_n) − F_i(x_1..x_j, y_{j+1}..y_n)) / (y_j − x_j)`,
/// computed termwise.
fn telescoping_entry(f: &MultiPoly, j: usize) -> MultiPoly {
    let n = f.nvars();
    let mut out = MultiPoly::zero(2 * n);
    for (m, c) in f.terms() {
        let alpha = m.exponents();
        let a = alpha[j];
        if a == 0 {
            continue;
        }
        let mut base = vec![0u32; 2 * n];
        for k in 0..j {
            base[k] = alpha[k];
        }
        for k in j + 1..n {
            base[n + k] = alpha[k];
        }
        for e in 0..a {
            let mut exps = base.clone();
            exps[j] += e;
            exps[n + j] += a - 1 - e;
            out = out + MultiPoly::monomial(exps, c.clone());
        }
    }
    out
}

pub fn pseudo_jacobian(fs: &[MultiPoly]) -> Result<TraceDecomposition> {
    pseudo_jacobian_split(fs, SplitBy::Y)
}

/// As [`pseudo_jacobian`], choosing which block of `Δ` indexes the pairs.
pub fn pseudo_jacobian_split(fs: &[MultiPoly], split: SplitBy) -> Result<TraceDecomposition> {
    let first = fs.first().ok_or(Error::EmptyInput)?;
    let n = first.nvars();
    if fs.len() != n {
        return Err(Error::NonSquareSystem { polys: fs.len(), vars: n });
    }
    if let Some(f) = fs.iter().find(|f| f.nvars() != n) {
        return Err(Error::VarCountMismatch { left: n, right: f.nvars() });
    }
    let l_matrix: Vec<Vec<MultiPoly>> = fs.iter().map(|f| (0..n).map(|j| telescoping_entry(f, j)).collect()).collect();
    let delta = det_poly(&l_matrix, 2 * n);
    let (keep, index) = match split {
        SplitBy::Y => (0..n, n..2 * n),
        SplitBy::X => (n..2 * n, 0..n),
    };
    let mut groups: BTreeMap<Monomial, MultiPoly> = BTreeMap::new();
    for (m, c) in delta.terms() {
        let e = m.exponents();
        let key = Monomial::new(e[index.clone()].to_vec());
        let coeff = MultiPoly::monomial(e[keep.clone()].to_vec(), c.clone());
        let slot = groups.entry(key).or_insert_with(|| MultiPoly::zero(n));
        *slot = &*slot + &coeff;
    }
    let pairs = groups
        .into_iter()
        .filter(|(_, a)| !a.is_zero())
        .map(|(b, a)| (a, MultiPoly::monomial(b.exponents().to_vec(), Rational::one())))
        .collect();
    Ok(TraceDecomposition { n, l_matrix, delta, pairs })
}

/// `det(∂F_i/∂x_j)`.
pub fn jacobian(fs: &[MultiPoly]) -> Result<MultiPoly> {
    let first = fs.first().ok_or(Error::EmptyInput)?;
    let n = first.nvars();
    if fs.len() != n {
        return Err(Error::NonSquareSystem { polys: fs.len(), vars: n });
    }
    let m: Vec<Vec<MultiPoly>> = fs.iter().map(|f| (0..n).map(|j| f.derivative(j)).collect()).collect();
    Ok(det_poly(&m, n))
}

/// The trace functional `σ`, stored as its values on the standard basis.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TateTrace {
    #[serde(serialize_with = "ser_rationals")]
    pub values: Vec<Rational>,
}

impl TateTrace {
    pub fn apply(&self, b: &QuotientAlgebra, g: &MultiPoly) -> Rational {
        b.coords(g).iter().zip(&self.values).map(|(x, s)| x * s).sum()
    }

    /// `Σ_m σ(g·a_m)·c_m`, reduced.
    pub fn reconstruct(&self, b: &QuotientAlgebra, td: &TraceDecomposition, g: &MultiPoly) -> MultiPoly {
        let n = b.nvars();
        let sum = td
            .pairs
            .iter()
            .fold(MultiPoly::zero(n), |acc, (a, c)| acc + c.scale(&self.apply(b, &(g * a))));
        b.reduce(&sum)
    }
}

/// Solves `b_j = Σ_m σ(b_j·a_m)·c_m` for every basis element `b_j`: `D²`
/// equations in the `D` unknowns `σ(b_k)`.
pub fn tate_trace(b: &QuotientAlgebra, td: &TraceDecomposition) -> Result<TateTrace> {
    let d = b.dim();
    let c_coords: Vec<Vec<Rational>> = td.pairs.iter().map(|(_, c)| b.coords(c)).collect();
    let mut rows = Vec::with_capacity(d * d);
    let mut rhs = Vec::with_capacity(d * d);
    for (j, bj) in b.basis().iter().enumerate() {
        let prod: Vec<Vec<Rational>> =
            td.pairs.iter().map(|(a, _)| b.coords(&a.mul_term(bj, &Rational::one()))).collect();
        for i in 0..d {
            let row: Vec<Rational> = (0..d)
                .map(|k| (0..td.pairs.len()).map(|m| &c_coords[m][i] * &prod[m][k]).sum())
                .collect();
            rows.push(row);
            rhs.push(if i == j { Rational::one() } else { Rational::zero() });
        }
    }
    if Matrix::from_rows(c_coords.clone()).rank() < d {
        return Err(Error::TraceDoesNotSpan);
    }
    let system = Matrix::from_rows(rows);
    let values = system.solve(&rhs).ok_or(Error::TraceInconsistent)?;
    Ok(TateTrace { values })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DivisionReport {
    /// `Σ_m Λ_m c_m / N(Jf)` before reduction; its degree is the one bounded.
    #[serde(serialize_with = "ser_poly")]
    pub q: MultiPoly,
    #[serde(serialize_with = "ser_poly")]
    pub q_reduced: MultiPoly,
    #[serde(serialize_with = "ser_rational")]
    pub norm_jf: Rational,
    pub identity: bool,
    pub degree_x: u32,
    pub degree_bound: u32,
    pub degree_ok: bool,
}

/// Division of `g` by `f` in `B` with `Λ_m = Tr((Jf)*·g·a_m)`; `f^{-1}` is
/// never formed.
pub fn divide_trace_formula(
    b: &QuotientAlgebra,
    td: &TraceDecomposition,
    f: &MultiPoly,
    g: &MultiPoly,
) -> Result<DivisionReport> {
    let n = b.nvars();
    let j = jacobian(b.generators())?;
    let mjf = b.matrix_of(&(&j * f));
    let norm_jf = mjf.det();
    if norm_jf.is_zero() {
        return Err(Error::ZeroNorm);
    }
    let left = adjoint_matrix(&mjf).mul(&b.matrix_of(g));
    let lambdas: Vec<Rational> = td.pairs.par_iter().map(|(a, _)| left.mul(&b.matrix_of(a)).trace()).collect();
    let inv = Rational::one() / &norm_jf;
    let q = td
        .pairs
        .iter()
        .zip(&lambdas)
        .fold(MultiPoly::zero(n), |acc, ((_, c), l)| acc + c.scale(&(l * &inv)));
    let identity = b.is_zero(&(&(&q * f) - g));
    if !identity {
        return Err(Error::DivisibilityFailure);
    }
    let d = b.generators().iter().chain(std::iter::once(f)).map(|p| p.degree_or_zero()).max().unwrap_or(0);
    let degree_x = q.degree_or_zero();
    let degree_bound = n as u32 * d;
    Ok(DivisionReport {
        q_reduced: b.reduce(&q),
        q,
        norm_jf,
        identity,
        degree_x,
        degree_bound,
        degree_ok: degree_x <= degree_bound,
    })
}
