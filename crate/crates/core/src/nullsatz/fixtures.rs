//! Extremal systems: the geometric-series family with its closed-form
//! certificate, the Masser–Philippon family, and the `d^n h` family, with
//! the divisibility checks that witness their height lower bounds.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed};
use serde::Serialize;

use super::{BezoutCertificate, Provenance};
use crate::error::{Error, Result};
use crate::logexpr::LogLinear;
use crate::poly::MultiPoly;
use crate::Rational;

/// A system, with a closed-form certificate when one is known.
#[derive(Clone, Debug, PartialEq)]
pub struct Fixture {
    pub name: &'static str,
    pub n: usize,
    pub d: u32,
    pub big_h: BigInt,
    pub system: Vec<MultiPoly>,
    pub certificate: Option<BezoutCertificate>,
}

fn int(c: &BigInt, n: usize) -> MultiPoly {
    MultiPoly::constant(Rational::from_integer(c.clone()), n)
}

fn x(i: usize, n: usize) -> MultiPoly {
    MultiPoly::var(i, n)
}

fn check_h(big_h: &BigInt, min: i64) -> Result<()> {
    if *big_h < BigInt::from(min) {
        return Err(Error::InvalidArgument(format!("H must be at least {min}")));
    }
    Ok(())
}

/// `1 + x + ⋯ + x^{d−1}`.
fn geometric_series(i: usize, n: usize, d: u32) -> MultiPoly {
    (0..d).fold(MultiPoly::zero(n), |acc, e| acc + x(i, n).pow(e))
}

/// `f_1 = x_1 − 1`, `f_i = x_i − x_{i−1}^d`, `f_{n+1} = H − x_n^d`, with
/// `H − 1 = Π_{k≥1} φ(x_k)·f_1 + Π_{k≥2} φ(x_k)·f_2 + ⋯ + f_{n+1}` where
/// `φ(x) = (x^d − 1)/(x − 1)`.
pub fn fixture_geometric(n: usize, d: u32, big_h: &BigInt) -> Result<Fixture> {
    if n == 0 || d == 0 {
        return Err(Error::InvalidArgument("n and d must be positive".into()));
    }
    check_h(big_h, 2)?;
    let mut system = vec![&x(0, n) - &MultiPoly::one(n)];
    for i in 1..n {
        system.push(&x(i, n) - &x(i - 1, n).pow(d));
    }
    system.push(&int(big_h, n) - &x(n - 1, n).pow(d));
    let mut g = Vec::with_capacity(n + 1);
    for i in 0..n {
        g.push((i..n).fold(MultiPoly::one(n), |acc, k| &acc * &geometric_series(k, n, d)));
    }
    g.push(MultiPoly::one(n));
    let certificate = BezoutCertificate {
        n,
        s: n + 1,
        a: big_h - 1,
        g,
        degree_bound: n as u32 * (d - 1),
        provenance: Provenance::Fixture,
    };
    Ok(Fixture { name: "geo", n, d, big_h: big_h.clone(), system, certificate: Some(certificate) })
}

/// `f_1 = x_1^d`, `f_i = x_{i−1} x_n^{d−1} − x_i^d` for `2 ≤ i ≤ n−1`,
/// `f_n = x_{n−1} x_n^{d−1} − H`.
pub fn fixture_masser_philippon(n: usize, d: u32, big_h: &BigInt) -> Result<Fixture> {
    if n < 2 || d < 2 {
        return Err(Error::InvalidArgument("the family needs n >= 2 and d >= 2".into()));
    }
    check_h(big_h, 1)?;
    let tail = x(n - 1, n).pow(d - 1);
    let mut system = vec![x(0, n).pow(d)];
    for i in 1..n - 1 {
        system.push(&(&x(i - 1, n) * &tail) - &x(i, n).pow(d));
    }
    system.push(&(&x(n - 2, n) * &tail) - &int(big_h, n));
    Ok(Fixture { name: "mp", n, d, big_h: big_h.clone(), system, certificate: None })
}

/// `f_1 = x_1 − H`, `f_i = x_i − x_{i−1}^d`, `f_{n+1} = x_n^d`.
pub fn fixture_dnh(n: usize, d: u32, big_h: &BigInt) -> Result<Fixture> {
    if n == 0 || d == 0 {
        return Err(Error::InvalidArgument("n and d must be positive".into()));
    }
    check_h(big_h, 1)?;
    let mut system = vec![&x(0, n) - &int(big_h, n)];
    for i in 1..n {
        system.push(&x(i, n) - &x(i - 1, n).pow(d));
    }
    system.push(x(n - 1, n).pow(d));
    Ok(Fixture { name: "dnh", n, d, big_h: big_h.clone(), system, certificate: None })
}

/// Outcome of evaluating a certificate at the point that witnesses a height
/// lower bound: `a = value·H^e`, so `H^e | a` and `h(a) ≥ e·log H`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WitnessCheck {
    pub exponent: u64,
    pub divisor: String,
    pub cofactor_value: String,
    pub divisible: bool,
    pub height_a: f64,
    pub height_lower_bound: f64,
    pub height_ok: bool,
    /// For the Masser–Philippon family: `deg g_1 ≥ d^n − d`.
    pub cofactor_degree: Option<u32>,
    pub cofactor_degree_lower_bound: Option<u64>,
}

fn eval_int(f: &MultiPoly, point: &[BigInt]) -> Result<BigInt> {
    let pt: Vec<Rational> = point.iter().cloned().map(Rational::from_integer).collect();
    let v = f.eval(&pt)?;
    if !v.is_integer() {
        return Err(Error::IdentityFailed(format!("cofactor value {v} is not an integer")));
    }
    Ok(v.to_integer())
}

fn witness(
    cert: &BezoutCertificate,
    big_h: &BigInt,
    exponent: u64,
    point: &[BigInt],
    cofactor: usize,
    degree: Option<(u32, u64)>,
) -> Result<WitnessCheck> {
    let e = usize::try_from(exponent).map_err(|_| Error::InvalidArgument("exponent too large".into()))?;
    let divisor = num_traits::pow(big_h.clone(), e);
    let value = eval_int(&cert.g[cofactor], point)?;
    if &value * &divisor != cert.a {
        return Err(Error::IdentityFailed("certificate does not specialize to a = g(ξ)·H^e".into()));
    }
    let divisible = cert.a.is_multiple_of(&divisor);
    let height_a = LogLinear::log(&cert.a.abs()).to_f64();
    let lower = exponent as f64 * LogLinear::log(big_h).to_f64();
    Ok(WitnessCheck {
        exponent,
        divisor: divisor.to_string(),
        cofactor_value: value.to_string(),
        divisible,
        height_a,
        height_lower_bound: lower,
        height_ok: height_a + 1e-9 >= lower,
        cofactor_degree: degree.map(|(g, _)| g),
        cofactor_degree_lower_bound: degree.map(|(_, b)| b),
    })
}

fn pow_u(d: u32, e: usize) -> Result<u64> {
    (d as u64).checked_pow(e as u32).ok_or_else(|| Error::InvalidArgument("exponent overflow".into()))
}

/// Evaluates at `(H^{d^{n−2}}, …, H^d, H, 1)`, where every `f_i` but `f_1`
/// vanishes and `f_1 = H^{d^{n−1}}`.
pub fn check_masser_philippon(cert: &BezoutCertificate, n: usize, d: u32, big_h: &BigInt) -> Result<WitnessCheck> {
    if cert.g.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: cert.g.len() });
    }
    let mut point = Vec::with_capacity(n);
    for i in 0..n - 1 {
        let e = pow_u(d, n - 2 - i)?;
        point.push(num_traits::pow(big_h.clone(), e as usize));
    }
    point.push(BigInt::one());
    let deg_g1 = cert.g[0].degree_or_zero();
    let lower = pow_u(d, n)? - d as u64;
    witness(cert, big_h, pow_u(d, n - 1)?, &point, 0, Some((deg_g1, lower)))
}

/// Evaluates at `(H, H^d, …, H^{d^{n−1}})`, giving `a = g_{n+1}(ξ)·H^{d^n}`.
pub fn check_dnh(cert: &BezoutCertificate, n: usize, d: u32, big_h: &BigInt) -> Result<WitnessCheck> {
    if cert.g.len() != n + 1 {
        return Err(Error::LengthMismatch { expected: n + 1, got: cert.g.len() });
    }
    let point: Vec<BigInt> =
        (0..n).map(|i| pow_u(d, i).map(|e| num_traits::pow(big_h.clone(), e as usize))).collect::<Result<_>>()?;
    witness(cert, big_h, pow_u(d, n)?, &point, n, None)
}
