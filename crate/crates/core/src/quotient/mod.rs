//! Zero-dimensional quotient algebras `Q[x]/(F)`: multiplication matrices,
//! norms and traces, adjoints, and division through the trace formula.

pub mod groebner;
mod trace;

use std::collections::HashMap;

use num_complex::Complex64;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{rat_to_f64, Matrix};
use crate::poly::univariate::UniPoly;
use crate::poly::{Monomial, MultiPoly};
use crate::Rational;

pub use groebner::{groebner, normal_form, GroebnerBasis};
pub use trace::{
    divide_trace_formula, jacobian, pseudo_jacobian, pseudo_jacobian_split, tate_trace, DivisionReport, SplitBy,
    TateTrace, TraceDecomposition,
};

/// `Q[x_1..x_n]/(F)` with its standard-monomial basis (ascending grevlex)
/// and the matrices of multiplication by each variable. Column `j` of a
/// multiplication matrix holds the coordinates of `x·b_j`.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    generators: Vec<MultiPoly>,
    gb: GroebnerBasis,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    mult: Vec<Matrix>,
}

impl QuotientAlgebra {
    pub fn new(fs: &[MultiPoly]) -> Result<Self> {
        let gb = groebner(fs)?;
        if gb.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let nvars = fs[0].nvars();
        let leads = gb.leading_monomials();
        for i in 0..nvars {
            let pure = leads.iter().any(|m| m.exponents().iter().enumerate().all(|(k, &e)| (k == i) == (e > 0)));
            if !pure {
                return Err(Error::PositiveDimensional);
            }
        }
        let standard = |m: &Monomial| !leads.iter().any(|l| m.divides_by(l));
        let mut basis = vec![Monomial::one(nvars)];
        let mut frontier = vec![Monomial::one(nvars)];
        while let Some(m) = frontier.pop() {
            for i in 0..nvars {
                let next = m.mul(&Monomial::var(nvars, i));
                if standard(&next) && !basis.contains(&next) {
                    basis.push(next.clone());
                    frontier.push(next);
                }
            }
        }
        basis.sort();
        let index: HashMap<Monomial, usize> = basis.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect();
        let mut alg = QuotientAlgebra { generators: fs.to_vec(), gb, basis, index, mult: Vec::new() };
        let dim = alg.basis.len();
        alg.mult = (0..nvars)
            .map(|i| {
                let mut m = Matrix::zeros(dim, dim);
                for (j, b) in alg.basis.iter().enumerate() {
                    let v = alg.coords(&MultiPoly::monomial(b.mul(&Monomial::var(nvars, i)).exponents().to_vec(), Rational::one()));
                    for (k, c) in v.into_iter().enumerate() {
                        m[(k, j)] = c;
                    }
                }
                m
            })
            .collect();
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn nvars(&self) -> usize {
        self.generators[0].nvars()
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn mult_matrices(&self) -> &[Matrix] {
        &self.mult
    }

    pub fn reduce(&self, f: &MultiPoly) -> MultiPoly {
        self.gb.normal_form(f)
    }

    pub fn is_zero(&self, f: &MultiPoly) -> bool {
        self.reduce(f).is_zero()
    }

    /// Coordinates of `f` in the standard basis.
    pub fn coords(&self, f: &MultiPoly) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        for (m, c) in self.reduce(f).terms() {
            v[self.index[m]] = c.clone();
        }
        v
    }

    pub fn from_coords(&self, v: &[Rational]) -> MultiPoly {
        MultiPoly::from_terms(self.nvars(), self.basis.iter().zip(v).map(|(m, c)| (m.exponents().to_vec(), c.clone())))
    }

    /// Matrix of multiplication by `f`.
    pub fn matrix_of(&self, f: &MultiPoly) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for (j, b) in self.basis.iter().enumerate() {
            let v = self.coords(&f.mul_term(b, &Rational::one()));
            for (i, c) in v.into_iter().enumerate() {
                m[(i, j)] = c;
            }
        }
        m
    }

    /// Coordinates of the element whose multiplication matrix is `m`.
    pub fn element_of(&self, m: &Matrix) -> Vec<Rational> {
        // the image of 1 is the element itself
        m.column(self.index[&Monomial::one(self.nvars())])
    }
}

/// Convenience constructor matching [`QuotientAlgebra::new`].
pub fn quotient_algebra(fs: &[MultiPoly]) -> Result<QuotientAlgebra> {
    QuotientAlgebra::new(fs)
}

/// `X_f = t^D + b_{D−1} t^{D−1} + ⋯ + b_0` with `N(f) = (−1)^D b_0` and
/// `Tr(f) = −b_{D−1}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CharPolyResult {
    #[serde(serialize_with = "ser_rationals")]
    pub coefficients: Vec<Rational>,
    #[serde(serialize_with = "ser_rational")]
    pub norm: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub trace: Rational,
}

pub(crate) fn ser_rationals<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

pub(crate) fn ser_rational<S: serde::Serializer>(v: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn charpoly_of_matrix(m: &Matrix) -> CharPolyResult {
    let coefficients = m.charpoly();
    let d = coefficients.len() - 1;
    let b0 = coefficients[0].clone();
    let norm = if d.is_multiple_of(2) { b0 } else { -b0 };
    let trace = if d == 0 { Rational::zero() } else { -coefficients[d - 1].clone() };
    CharPolyResult { coefficients, norm, trace }
}

pub fn charpoly(b: &QuotientAlgebra, f: &MultiPoly) -> CharPolyResult {
    charpoly_of_matrix(&b.matrix_of(f))
}

pub fn norm(b: &QuotientAlgebra, f: &MultiPoly) -> Rational {
    b.matrix_of(f).det()
}

pub fn trace(b: &QuotientAlgebra, f: &MultiPoly) -> Rational {
    b.matrix_of(f).trace()
}

/// Matrix of `f* = (−1)^{D−1}(f^{D−1} + b_{D−1} f^{D−2} + ⋯ + b_1)`.
pub(crate) fn adjoint_matrix(mf: &Matrix) -> Matrix {
    let coeffs = mf.charpoly();
    let d = coeffs.len() - 1;
    // Horner on the shifted coefficients b_1..b_D
    let mut acc = Matrix::zeros(d, d);
    for k in (1..=d).rev() {
        acc = acc.mul(mf).add(&Matrix::identity(d).scale(&coeffs[k]));
    }
    if d.is_multiple_of(2) {
        acc.scale(&-Rational::one())
    } else {
        acc
    }
}

/// The adjoint `f*` reduced to the standard basis; checks `f*·f ≡ N(f)`.
pub fn adjoint(b: &QuotientAlgebra, f: &MultiPoly) -> Result<MultiPoly> {
    let mf = b.matrix_of(f);
    let adj = adjoint_matrix(&mf);
    let n = mf.det();
    if adj.mul(&mf) != Matrix::identity(b.dim()).scale(&n) {
        return Err(Error::IdentityFailed("f* f = N(f)".into()));
    }
    Ok(b.from_coords(&b.element_of(&adj)))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RootsOfUnityTrace {
    #[serde(serialize_with = "ser_rational")]
    pub exact: Rational,
    pub oracle: f64,
    pub agrees: bool,
    pub q: usize,
}

fn complex_det(mut a: Vec<Vec<Complex64>>) -> Complex64 {
    let n = a.len();
    let mut det = Complex64::new(1.0, 0.0);
    for k in 0..n {
        let p = (k..n).max_by(|&i, &j| a[i][k].norm().total_cmp(&a[j][k].norm())).unwrap();
        if a[p][k].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        det *= a[k][k];
        for i in k + 1..n {
            let f = a[i][k] / a[k][k];
            for j in k..n {
                let v = a[k][j];
                a[i][j] -= f * v;
            }
        }
    }
    det
}

/// `Tr(f*·g)` read off as `−c_{D−1}` of `Q(t) = N(t·f − g)`, next to the
/// roots-of-unity average `−(1/q) Σ_ω N(ωf − g) ω^{1−D}` in floating point.
pub fn trace_roots_of_unity(b: &QuotientAlgebra, f: &MultiPoly, g: &MultiPoly, q: usize) -> Result<RootsOfUnityTrace> {
    let d = b.dim();
    if q <= d {
        return Err(Error::RootOrderTooSmall { q, dim: d });
    }
    let mf = b.matrix_of(f);
    let mg = b.matrix_of(g);
    // interpolate Q(t) from D+1 integer nodes
    let nodes: Vec<Rational> = (0..=d as i64).map(|t| Rational::from_integer(t.into())).collect();
    let values: Vec<Rational> = nodes.iter().map(|t| mf.scale(t).add(&mg.scale(&-Rational::one())).det()).collect();
    let qpoly = lagrange(&nodes, &values);
    let c = qpoly.coeffs().get(d - 1).cloned().unwrap_or_else(Rational::zero);
    let exact = -c;

    let mff: Vec<Vec<f64>> = (0..d).map(|i| (0..d).map(|j| rat_to_f64(&mf[(i, j)])).collect()).collect();
    let mgf: Vec<Vec<f64>> = (0..d).map(|i| (0..d).map(|j| rat_to_f64(&mg[(i, j)])).collect()).collect();
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..q {
        let w = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / q as f64);
        let m: Vec<Vec<Complex64>> =
            (0..d).map(|i| (0..d).map(|j| w * mff[i][j] - Complex64::new(mgf[i][j], 0.0)).collect()).collect();
        sum += complex_det(m) * w.powi(1 - d as i32);
    }
    let oracle = -(sum / q as f64).re;
    let ex = rat_to_f64(&exact);
    let agrees = (oracle - ex).abs() <= 1e-9 * ex.abs().max(1.0);
    Ok(RootsOfUnityTrace { exact, oracle, agrees, q })
}

fn lagrange(nodes: &[Rational], values: &[Rational]) -> UniPoly {
    let mut acc = UniPoly::zero();
    for (i, (xi, yi)) in nodes.iter().zip(values).enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = UniPoly::one();
        let mut denom = Rational::one();
        for (j, xj) in nodes.iter().enumerate() {
            if i != j {
                basis = basis.mul(&UniPoly::linear(xj.clone()));
                denom *= xi - xj;
            }
        }
        acc = acc.add(&basis.scale(&(yi / denom)));
    }
    acc
}

/// Squarefree characteristic polynomial of a random linear form with
/// coefficients in `[−10, 10]`, tried `tries` times. A squarefree one shows
/// the algebra has `D` distinct points, hence a radical ideal.
pub fn is_radical(b: &QuotientAlgebra, seed: u64, tries: usize) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = b.nvars();
    for _ in 0..tries {
        let form = (0..n).fold(MultiPoly::zero(n), |acc, i| {
            acc + MultiPoly::var(i, n).scale(&Rational::from_integer(rng.random_range(-10i64..=10).into()))
        });
        let cp = UniPoly::new(b.matrix_of(&form).charpoly());
        if cp.is_squarefree() {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse, rat};

    fn p(s: &str) -> MultiPoly {
        parse(s).unwrap()
    }

    fn p2(s: &str) -> MultiPoly {
        crate::poly::parse_with_nvars(s, 2).unwrap()
    }

    #[test]
    fn algebra_examples() {
        let b = QuotientAlgebra::new(&[p("x1^2 - 2")]).unwrap();
        assert_eq!(b.dim(), 2);
        assert_eq!(b.mult_matrices()[0], Matrix::from_ints(&[vec![0, 2], vec![1, 0]]));
        assert_eq!(QuotientAlgebra::new(&[p("x1 - 1")]).unwrap().dim(), 1);
        let b = QuotientAlgebra::new(&[p2("x1^2 - 1"), p2("x2^2 - 1")]).unwrap();
        assert_eq!(b.dim(), 4);
        assert_eq!(QuotientAlgebra::new(&[p("x1"), p("x1 + 1")]).unwrap_err(), Error::UnitIdeal);
        assert_eq!(QuotientAlgebra::new(&[p2("x1*x2")]).unwrap_err(), Error::PositiveDimensional);
    }

    #[test]
    fn charpoly_examples() {
        let b = QuotientAlgebra::new(&[p("x1^2 - 2")]).unwrap();
        let c = charpoly(&b, &p("x1"));
        assert_eq!(c.coefficients, vec![rat(-2), rat(0), rat(1)]);
        assert_eq!(c.norm, rat(-2));
        assert_eq!(c.trace, rat(0));
        let one = charpoly(&b, &MultiPoly::one(1));
        assert_eq!((one.norm, one.trace), (rat(1), rat(2)));
        let zero = charpoly(&b, &MultiPoly::zero(1));
        assert_eq!((zero.norm, zero.trace), (rat(0), rat(0)));
    }

    #[test]
    fn adjoint_examples() {
        let b = QuotientAlgebra::new(&[p("x1^2 - 2")]).unwrap();
        assert_eq!(adjoint(&b, &p("x1")).unwrap(), p("-x1"));
        assert_eq!(adjoint(&b, &MultiPoly::one(1)).unwrap(), MultiPoly::one(1));
        let u = p("x1 + 3");
        let star = adjoint(&b, &u).unwrap();
        let n = norm(&b, &u);
        assert!(b.is_zero(&(&(&u * &star) - &MultiPoly::constant(n, 1))));
    }

    #[test]
    fn roots_of_unity_trace() {
        let b = QuotientAlgebra::new(&[p("x1^2 - 2")]).unwrap();
        let t = trace_roots_of_unity(&b, &p("x1"), &p("x1"), 3).unwrap();
        assert_eq!(t.exact, rat(-4));
        assert!(t.agrees);
        assert!(matches!(trace_roots_of_unity(&b, &p("x1"), &p("x1"), 2), Err(Error::RootOrderTooSmall { .. })));
        let b = QuotientAlgebra::new(&[p2("x1^2 - 1"), p2("x2^2 - 3*x1")]).unwrap();
        let f = MultiPoly::one(2);
        let g = p2("x1 + 2*x2 + 5");
        let t = trace_roots_of_unity(&b, &f, &g, 7).unwrap();
        // 1* = (−1)^{D−1}(1 + b_{D−1} + ⋯ + b_1) = 1 since X_1 = (t−1)^D
        assert_eq!(t.exact, trace(&b, &g));
        assert!(t.agrees);
    }

    #[test]
    fn radical_detection() {
        let b = QuotientAlgebra::new(&[p2("x1^2 - 1"), p2("x2^2 - 1")]).unwrap();
        assert!(is_radical(&b, 0, 3));
        let b = QuotientAlgebra::new(&[p2("x1^2"), p2("x2 - 1")]).unwrap();
        assert!(!is_radical(&b, 0, 3));
    }
}
