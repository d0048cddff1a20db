//! Heights over Q: local heights at the archimedean and p-adic places,
//! global heights, Mahler measures, and heights of point varieties and
//! hypersurfaces.
//!
//! p-adic heights are integer multiples of `log p` and are returned exactly
//! as [`LogLinear`] values; the archimedean height `max(0, log max|a|)` is
//! the logarithm of a rational and is exact too. Only Mahler measures are
//! floating point.

pub mod factor;
pub mod inequalities;
pub mod mahler;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::logexpr::LogLinear;
use crate::poly::MultiPoly;
use crate::Rational;

pub use mahler::{
    mahler_auto, mahler_sphere_mc, mahler_torus_mc, mahler_univariate_exact, MahlerEstimate, MahlerMethod,
    DEFAULT_SAMPLES,
};

/// An absolute value of Q.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Archimedean,
    Prime(BigInt),
}

impl Place {
    pub fn prime(p: u64) -> Result<Place> {
        Self::from_big(BigInt::from(p))
    }

    pub fn from_big(p: BigInt) -> Result<Place> {
        if factor::is_prime(&p) {
            Ok(Place::Prime(p))
        } else {
            Err(Error::InvalidPlace(p.to_string()))
        }
    }

    /// Parses `inf` or a prime.
    pub fn parse(s: &str) -> Result<Place> {
        match s {
            "inf" | "infinity" | "∞" => Ok(Place::Archimedean),
            _ => {
                let p: BigInt = s.parse().map_err(|_| Error::InvalidPlace(s.to_string()))?;
                Self::from_big(p)
            }
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Archimedean => f.write_str("inf"),
            Place::Prime(p) => write!(f, "{p}"),
        }
    }
}

impl Serialize for Place {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `ord_p(q)` for nonzero rational `q`.
pub fn ord_p(q: &Rational, p: &BigInt) -> i64 {
    factor::valuation(q.numer(), p) as i64 - factor::valuation(q.denom(), p) as i64
}

/// `log|q|_v` exactly.
pub fn log_abs_rational(q: &Rational, v: &Place) -> Result<LogLinear> {
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(match v {
        Place::Archimedean => LogLinear::log_rational(&q.abs()),
        Place::Prime(p) => LogLinear::log(p).scale_int(-ord_p(q, p)),
    })
}

/// `Σ_v log|q|_v` over every place where `q` is not a unit; zero by the
/// product formula.
pub fn product_formula_sum(q: &Rational) -> Result<LogLinear> {
    let mut total = log_abs_rational(q, &Place::Archimedean)?;
    for p in prime_support(std::slice::from_ref(q)) {
        total = total + log_abs_rational(q, &Place::Prime(p))?;
    }
    Ok(total)
}

/// Largest coefficient absolute value `|f|_∞`.
pub fn max_abs_coeff(f: &MultiPoly) -> Rational {
    f.coefficients().map(|c| c.abs()).max().unwrap_or_else(Rational::zero)
}

/// `-min ord_p` over coefficients, so that `log|f|_p = e·log p`.
pub fn padic_exponent(f: &MultiPoly, p: &BigInt) -> Result<i64> {
    f.coefficients()
        .map(|c| -ord_p(c, p))
        .max()
        .ok_or(Error::ZeroPolynomial)
}

/// `log|f|_v` exactly (not truncated at 0).
pub fn log_abs(f: &MultiPoly, v: &Place) -> Result<LogLinear> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(match v {
        Place::Archimedean => LogLinear::log_rational(&max_abs_coeff(f)),
        Place::Prime(p) => LogLinear::log(p).scale_int(padic_exponent(f, p)?),
    })
}

/// `h_v(f) = max(0, log|f|_v)` exactly.
pub fn local_height_exact(f: &MultiPoly, v: &Place) -> Result<LogLinear> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(match v {
        Place::Archimedean => {
            let m = max_abs_coeff(f);
            if m > Rational::one() {
                LogLinear::log_rational(&m)
            } else {
                LogLinear::zero()
            }
        }
        Place::Prime(p) => LogLinear::log(p).scale_int(padic_exponent(f, p)?.max(0)),
    })
}

pub fn local_height(f: &MultiPoly, v: &Place) -> Result<f64> {
    local_height_exact(f, v).map(|h| h.to_f64())
}

/// Primes dividing some numerator or denominator.
pub fn prime_support(coeffs: &[Rational]) -> BTreeSet<BigInt> {
    let mut out = BTreeSet::new();
    for c in coeffs {
        for n in [c.numer(), c.denom()] {
            for (p, _) in factor::factorize(n) {
                out.insert(p);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LocalHeight {
    pub place: Place,
    pub value: f64,
    pub exact: String,
}

/// Global height with its local contributions; `global` is the sum of the
/// listed locals.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HeightReport {
    pub global: f64,
    pub global_exact: String,
    pub locals: Vec<LocalHeight>,
    #[serde(skip)]
    pub exact: LogLinear,
}

/// `h(f_1, …, f_s) = Σ_v max_i h_v(f_i)` over ∞ and every prime occurring
/// in a coefficient.
pub fn global_height(fs: &[MultiPoly]) -> Result<HeightReport> {
    if fs.is_empty() {
        return Err(Error::EmptyInput);
    }
    if fs.iter().any(MultiPoly::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    let coeffs: Vec<Rational> = fs.iter().flat_map(|f| f.coefficients().cloned()).collect();
    let mut places = vec![Place::Archimedean];
    places.extend(prime_support(&coeffs).into_iter().map(Place::Prime));
    let mut locals = Vec::with_capacity(places.len());
    let mut total = LogLinear::zero();
    for v in places {
        let best = fs
            .iter()
            .map(|f| local_height_exact(f, &v))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .max_by(|a, b| a.to_f64().total_cmp(&b.to_f64()))
            .expect("nonempty");
        total = total + best.clone();
        locals.push(LocalHeight { place: v, value: best.to_f64(), exact: best.to_string() });
    }
    Ok(HeightReport { global: total.to_f64(), global_exact: total.to_string(), locals, exact: total })
}

/// `h(q) = log max(|m|, n)` for `q = m/n` in lowest terms.
pub fn rational_height(q: &Rational) -> LogLinear {
    let m = q.numer().abs();
    let n = q.denom().clone();
    let top = if m > n { m } else { n };
    LogLinear::log(&top.max(BigInt::one()))
}

/// `Σ_{i=1}^n Σ_{j=1}^i 1/(2j)`.
pub fn stoll_number(n: usize) -> Rational {
    let mut total = Rational::zero();
    let mut inner = Rational::zero();
    for i in 1..=n {
        inner += Rational::new(BigInt::one(), BigInt::from(2 * i));
        total += &inner;
    }
    total
}

/// `Σ_{i=1}^n 1/(2i)`.
pub fn half_harmonic(n: usize) -> Rational {
    (1..=n).map(|i| Rational::new(BigInt::one(), BigInt::from(2 * i))).sum()
}

/// A zero-dimensional variety given by distinct rational points.
#[derive(Clone, Debug, PartialEq)]
pub struct PointVariety {
    points: Vec<Vec<Rational>>,
}

impl PointVariety {
    pub fn new(points: Vec<Vec<Rational>>) -> Result<Self> {
        let n = points.first().ok_or(Error::EmptyInput)?.len();
        if let Some(p) = points.iter().find(|p| p.len() != n) {
            return Err(Error::LengthMismatch { expected: n, got: p.len() });
        }
        let distinct: BTreeSet<&Vec<Rational>> = points.iter().collect();
        if distinct.len() != points.len() {
            return Err(Error::InvalidArgument("points must be pairwise distinct".into()));
        }
        Ok(PointVariety { points })
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    pub fn ambient_dim(&self) -> usize {
        self.points[0].len()
    }

    pub fn degree(&self) -> usize {
        self.points.len()
    }

    /// Normalized Chow form: the product over points of
    /// `u0 + ξ_1 u1 + ⋯ + ξ_n un`, in `n + 1` variables.
    pub fn chow_form(&self) -> MultiPoly {
        let n = self.ambient_dim();
        let mut ch = MultiPoly::one(n + 1);
        for xi in &self.points {
            let mut l = MultiPoly::var(0, n + 1);
            for (i, c) in xi.iter().enumerate() {
                l = &l + &MultiPoly::var(i + 1, n + 1).scale(c);
            }
            ch = &ch * &l;
        }
        ch
    }
}

/// Height of a point variety: `Σ ½·log(1 + Σ|ξ_i|²)` at ∞ and `Σ h_p(ξ)` at
/// a prime, with `h_p(ξ) = max(0, max_i log|ξ_i|_p)`.
pub fn height_point_variety(v: &PointVariety, place: &Place) -> Result<LogLinear> {
    let mut total = LogLinear::zero();
    for xi in v.points() {
        total = total
            + match place {
                Place::Archimedean => {
                    let s: Rational = Rational::one() + xi.iter().map(|c| c * c).sum::<Rational>();
                    LogLinear::log_rational(&s).scale(&Rational::new(1.into(), 2.into()))
                }
                Place::Prime(p) => {
                    let e = xi.iter().filter(|c| !c.is_zero()).map(|c| -ord_p(c, p)).max().unwrap_or(0).max(0);
                    LogLinear::log(p).scale_int(e)
                }
            };
    }
    Ok(total)
}

/// Height estimate carrying a Monte Carlo error when it has one.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HeightEstimate {
    pub value: f64,
    pub stderr: f64,
    pub samples: u64,
    pub exact: Option<String>,
}

impl HeightEstimate {
    fn exact(v: LogLinear) -> Self {
        HeightEstimate { value: v.to_f64(), stderr: 0.0, samples: 0, exact: Some(v.to_string()) }
    }
}

/// Archimedean height of a point variety through its Chow form:
/// `m(Ch_V; S_{n+1}) + deg V · Σ_{i=1}^n 1/(2i)`.
pub fn height_point_variety_mc(v: &PointVariety, samples: u64, seed: u64) -> Result<HeightEstimate> {
    let n = v.ambient_dim();
    let ch = v.chow_form();
    let m = mahler_sphere_mc(&ch, 1, n + 1, samples, seed)?;
    let corr = crate::linalg::rat_to_f64(&half_harmonic(n)) * v.degree() as f64;
    Ok(HeightEstimate { value: m.value + corr, stderr: m.stderr, samples, exact: None })
}

/// Height of the hypersurface `V(f)`, with `f` squarefree and normalized so
/// that the coefficient of `x_n^{deg f}` is 1.
///
/// At ∞ this is `m(f^h; S_{n+1}) + stoll(n)·deg V`; with this correction a
/// coordinate hyperplane gets the height of the affine space it is
/// isomorphic to. At a prime it is `h_p(f)`.
pub fn height_hypersurface(f: &MultiPoly, place: &Place, samples: u64, seed: u64) -> Result<HeightEstimate> {
    let n = f.nvars();
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 || d == 0 {
        return Err(Error::InvalidArgument("a hypersurface needs a non-constant polynomial".into()));
    }
    let mut e = vec![0; n];
    e[n - 1] = d;
    let lead = f.coeff(&crate::poly::Monomial::new(e));
    if !lead.is_one() {
        return Err(Error::NormalizationViolated { var: n, degree: d, found: lead.to_string() });
    }
    if let Ok(u) = crate::poly::univariate::UniPoly::from_multi(f) {
        if !u.is_squarefree() {
            return Err(Error::InvalidArgument("defining polynomial must be squarefree".into()));
        }
    }
    match place {
        Place::Prime(_) => Ok(HeightEstimate::exact(local_height_exact(f, place)?)),
        Place::Archimedean => {
            let m = mahler_sphere_mc(&f.homogenize(), 1, n + 1, samples, seed)?;
            let corr = crate::linalg::rat_to_f64(&stoll_number(n)) * d as f64;
            Ok(HeightEstimate { value: m.value + corr, stderr: m.stderr, samples, exact: None })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse, parse_with_nvars, rat, ratio};

    fn inf() -> Place {
        Place::Archimedean
    }

    #[test]
    fn local_height_examples() {
        assert!((local_height(&parse("3*x1 + 7").unwrap(), &inf()).unwrap() - 7f64.ln()).abs() < 1e-15);
        assert_eq!(local_height(&parse("x1 + 1").unwrap(), &inf()).unwrap(), 0.0);
        let h = local_height_exact(&parse("1/4*x1 + 2").unwrap(), &Place::prime(2).unwrap()).unwrap();
        assert_eq!(h, LogLinear::log_u(4));
        assert_eq!(local_height(&MultiPoly::zero(1), &inf()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn global_height_of_three_halves() {
        let r = global_height(&[MultiPoly::constant(ratio(3, 2), 0)]).unwrap();
        assert_eq!(r.exact, LogLinear::log_u(3));
        assert_eq!(r.exact, rational_height(&ratio(3, 2)));
        let places: Vec<String> = r.locals.iter().map(|l| l.place.to_string()).collect();
        assert_eq!(places, ["inf", "2", "3"]);
        assert_eq!(r.locals[0].exact, "-log(2) + log(3)");
        assert_eq!(r.locals[1].exact, "log(2)");
        assert_eq!(r.locals[2].exact, "0");
    }

    #[test]
    fn global_height_integer_unit() {
        let r = global_height(&[parse("x1 + 1").unwrap()]).unwrap();
        assert_eq!(r.global, 0.0);
        assert_eq!(global_height(&[]), Err(Error::EmptyInput));
    }

    #[test]
    fn product_formula() {
        for q in [ratio(3, 2), ratio(-100, 63), rat(7), ratio(1, 1024)] {
            assert!(product_formula_sum(&q).unwrap().is_zero(), "{q}");
        }
    }

    #[test]
    fn stoll_values() {
        assert_eq!(stoll_number(0), rat(0));
        assert_eq!(stoll_number(1), ratio(1, 2));
        assert_eq!(stoll_number(2), ratio(5, 4));
    }

    #[test]
    fn point_variety_examples() {
        let zero = PointVariety::new(vec![vec![rat(0)]]).unwrap();
        assert!(height_point_variety(&zero, &inf()).unwrap().is_zero());
        assert!(height_point_variety(&zero, &Place::prime(5).unwrap()).unwrap().is_zero());
        let v = PointVariety::new(vec![vec![rat(3), rat(4)]]).unwrap();
        assert_eq!(
            height_point_variety(&v, &inf()).unwrap(),
            LogLinear::log_u(26).scale(&ratio(1, 2))
        );
        let half = PointVariety::new(vec![vec![ratio(1, 2)]]).unwrap();
        assert_eq!(height_point_variety(&half, &Place::prime(2).unwrap()).unwrap(), LogLinear::log_u(2));
        assert!(PointVariety::new(vec![]).is_err());
    }

    #[test]
    fn point_variety_chow_path() {
        let v = PointVariety::new(vec![vec![ratio(3, 2), rat(-1)]]).unwrap();
        let mc = height_point_variety_mc(&v, 100_000, 0).unwrap();
        let exact = height_point_variety(&v, &inf()).unwrap().to_f64();
        assert!((mc.value - exact).abs() <= 4.0 * mc.stderr, "{} vs {exact}", mc.value);
    }

    #[test]
    fn hypersurface_examples() {
        let h = height_hypersurface(&parse("x1").unwrap(), &inf(), 100_000, 0).unwrap();
        assert!(h.value.abs() <= 4.0 * h.stderr, "{h:?}");
        let h2 = height_hypersurface(&parse("x1 - 1/2").unwrap(), &Place::prime(2).unwrap(), 0, 0).unwrap();
        assert_eq!(h2.exact.as_deref(), Some("log(2)"));
        let h3 = height_hypersurface(&parse("x1 - 2").unwrap(), &Place::prime(3).unwrap(), 0, 0).unwrap();
        assert_eq!(h3.value, 0.0);
        // x2 - x1^2 has no x2^2 term: the fiber over x1 = 0 is one point
        assert!(matches!(
            height_hypersurface(&parse("x2 - x1^2").unwrap(), &inf(), 10, 0),
            Err(Error::NormalizationViolated { .. })
        ));
        let f = parse_with_nvars("x2^2 - x1", 2).unwrap();
        let a = height_hypersurface(&f, &inf(), 100_000, 1).unwrap();
        let b = height_hypersurface(&f, &inf(), 100_000, 2).unwrap();
        let tol = 4.0 * (a.stderr.powi(2) + b.stderr.powi(2)).sqrt();
        assert!((a.value - b.value).abs() <= tol);
    }
}
