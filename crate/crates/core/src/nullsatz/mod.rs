//! Bézout certificates `a = g_1 f_1 + ⋯ + g_s f_s`: search by exact linear
//! algebra, verification against the degree and height bounds, fixtures for
//! the extremal families, and generic-position preparation.

mod fixtures;
mod prepare;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::geometry::{bound, normalized_volume, support, BoundInputs, BoundReport};
use crate::linalg::IntegerSystem;
use crate::logexpr::LogLinear;
use crate::poly::{parse_with_nvars, Monomial, MultiPoly};
use crate::quotient::groebner;
use crate::Rational;

pub use fixtures::{
    check_dnh, check_masser_philippon, fixture_dnh, fixture_geometric, fixture_masser_philippon, Fixture, WitnessCheck,
};
pub use prepare::{prepare_system, PreparedSystem, COEFFICIENT_RANGE, PREPARE_RETRIES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Searched,
    Fixture,
    External,
}

impl Provenance {
    fn parse(s: &str) -> Result<Self> {
        match s {
            "searched" => Ok(Provenance::Searched),
            "fixture" => Ok(Provenance::Fixture),
            "external" => Ok(Provenance::External),
            other => Err(Error::InvalidArgument(format!("unknown provenance `{other}`"))),
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Provenance::Searched => "searched",
            Provenance::Fixture => "fixture",
            Provenance::External => "external",
        }
    }
}

/// `a = Σ g_i f_i` with `a` a nonzero integer and integral `g_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct BezoutCertificate {
    pub n: usize,
    pub s: usize,
    pub a: BigInt,
    pub g: Vec<MultiPoly>,
    pub degree_bound: u32,
    pub provenance: Provenance,
}

impl BezoutCertificate {
    pub fn degree(&self) -> u32 {
        self.g.iter().filter_map(MultiPoly::degree).max().unwrap_or(0)
    }

    /// `max(log|a|, h(g_1), …, h(g_s))` with `h` the log of the largest
    /// coefficient.
    pub fn height(&self) -> LogLinear {
        let mut top = self.a.abs();
        for g in &self.g {
            for c in g.coefficients() {
                let m = c.numer().abs();
                if m > top {
                    top = m;
                }
            }
        }
        LogLinear::log(&top)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "s": self.s,
            "a": self.a.to_string(),
            "g": self.g.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "degree_bound": self.degree_bound,
            "provenance": self.provenance.as_str(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let field = |k: &str| v.get(k).ok_or_else(|| Error::Json(format!("missing field `{k}`")));
        let count = |k: &str| -> Result<usize> {
            field(k)?.as_u64().map(|x| x as usize).ok_or_else(|| Error::Json(format!("`{k}` must be a count")))
        };
        let n = count("n")?;
        let s = count("s")?;
        let a: BigInt = field("a")?
            .as_str()
            .and_then(|t| t.trim().parse().ok())
            .ok_or_else(|| Error::Json("`a` must be a decimal string".into()))?;
        let g = field("g")?
            .as_array()
            .ok_or_else(|| Error::Json("`g` must be an array".into()))?
            .iter()
            .map(|x| {
                let t = x.as_str().ok_or_else(|| Error::Json("cofactors must be strings".into()))?;
                parse_with_nvars(t, n)
            })
            .collect::<Result<Vec<_>>>()?;
        if g.len() != s {
            return Err(Error::LengthMismatch { expected: s, got: g.len() });
        }
        let degree_bound = count("degree_bound")? as u32;
        let provenance = match v.get("provenance").and_then(Value::as_str) {
            Some(p) => Provenance::parse(p)?,
            None => Provenance::External,
        };
        Ok(BezoutCertificate { n, s, a, g, degree_bound, provenance })
    }
}

impl Serialize for BezoutCertificate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

/// Shape parameters of a system: `n`, `s`, `d = max deg f_i` and
/// `h = max_i log ‖L_i f_i‖_∞`, with `L_i` clearing the denominators of `f_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct SystemParams {
    pub n: usize,
    pub s: usize,
    pub d: u32,
    pub degrees: Vec<u32>,
    pub h: LogLinear,
}

fn check_system(fs: &[MultiPoly]) -> Result<usize> {
    let first = fs.first().ok_or(Error::EmptyInput)?;
    let n = first.nvars();
    if let Some(f) = fs.iter().find(|f| f.nvars() != n) {
        return Err(Error::VarCountMismatch { left: n, right: f.nvars() });
    }
    if fs.iter().any(MultiPoly::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    Ok(n)
}

fn integral(f: &MultiPoly) -> (BigInt, MultiPoly) {
    let l = f.denominator_lcm();
    (l.clone(), f.scale(&Rational::from_integer(l)))
}

pub fn system_params(fs: &[MultiPoly]) -> Result<SystemParams> {
    let n = check_system(fs)?;
    let degrees: Vec<u32> = fs.iter().map(MultiPoly::degree_or_zero).collect();
    let mut top = BigInt::one();
    for f in fs {
        for c in integral(f).1.coefficients() {
            let m = c.numer().abs();
            if m > top {
                top = m;
            }
        }
    }
    Ok(SystemParams { n, s: fs.len(), d: degrees.iter().copied().max().unwrap_or(0), degrees, h: LogLinear::log(&top) })
}

/// The degree cap `4 n d^n` with `d ≥ 1`.
pub fn degree_cap(n: usize, d: u32) -> u32 {
    let d = d.max(1) as u64;
    let cap = 4 * n.max(1) as u64 * d.saturating_pow(n as u32);
    u32::try_from(cap).unwrap_or(u32::MAX)
}

/// All monomials of total degree `≤ deg` in `n` variables, ascending grevlex.
pub fn monomials_up_to(n: usize, deg: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == cur.len() {
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, deg, &mut cur, &mut out);
    out.sort();
    out
}

/// Solves `Σ p_i f_i = 1` with `deg p_i ≤ deg` exactly. Columns are ordered
/// by `(i, monomial)` with monomials ascending in grevlex, and free unknowns
/// are set to zero. Returns `None` when the linear system is inconsistent.
pub fn solve_at_degree(fs: &[MultiPoly], deg: u32) -> Result<Option<BezoutCertificate>> {
    let n = check_system(fs)?;
    let scaled: Vec<(BigInt, MultiPoly)> = fs.iter().map(integral).collect();
    let d = fs.iter().map(MultiPoly::degree_or_zero).max().unwrap_or(0);
    let cols = monomials_up_to(n, deg);
    let rows_m = monomials_up_to(n, deg + d);
    let row_of: HashMap<&Monomial, usize> = rows_m.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let ncols = cols.len() * fs.len();
    let mut rows = vec![vec![BigInt::zero(); ncols]; rows_m.len()];
    for (i, (_, f)) in scaled.iter().enumerate() {
        for (k, mu) in cols.iter().enumerate() {
            for (m, c) in f.terms() {
                rows[row_of[&mu.mul(m)]][i * cols.len() + k] = c.numer().clone();
            }
        }
    }
    let mut rhs = vec![BigInt::zero(); rows_m.len()];
    rhs[row_of[&Monomial::one(n)]] = BigInt::one();
    let sys = IntegerSystem::new(rows, rhs, ncols).reduce();
    let Some((a, nums)) = sys.integer_solution() else {
        return Ok(None);
    };
    let g = scaled
        .iter()
        .enumerate()
        .map(|(i, (l, _))| {
            MultiPoly::from_terms(
                n,
                cols.iter()
                    .enumerate()
                    .map(|(k, mu)| (mu.exponents().to_vec(), Rational::from_integer(&nums[i * cols.len() + k] * l))),
            )
        })
        .collect();
    Ok(Some(BezoutCertificate { n, s: fs.len(), a, g, degree_bound: deg, provenance: Provenance::Searched }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchStrategy {
    /// Try `0, 1, …, bound` and stop at the first feasible degree.
    MinimalFirst,
    /// Solve at `bound` only.
    AtBound,
}

/// Certificate search up to `degree_bound`, which defaults to `4 n d^n`.
/// A system with a common zero is reported as such without solving.
pub fn certificate_search(
    fs: &[MultiPoly],
    degree_bound: Option<u32>,
    strategy: SearchStrategy,
) -> Result<BezoutCertificate> {
    let p = system_params(fs)?;
    let cap = degree_bound.unwrap_or_else(|| degree_cap(p.n, p.d));
    if !has_no_common_zero(fs)? {
        return Err(Error::Infeasible { cap, common_zero: true });
    }
    let degrees: Vec<u32> = match strategy {
        SearchStrategy::MinimalFirst => (0..=cap).collect(),
        SearchStrategy::AtBound => vec![cap],
    };
    for deg in degrees {
        if let Some(c) = solve_at_degree(fs, deg)? {
            return Ok(c);
        }
    }
    Err(Error::Infeasible { cap, common_zero: false })
}

/// True when the reduced Gröbner basis of `fs` is `{1}`.
pub fn has_no_common_zero(fs: &[MultiPoly]) -> Result<bool> {
    Ok(groebner(fs)?.is_unit())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundCheck {
    pub statement: String,
    pub degree_bound: Option<String>,
    pub degree_ok: Option<bool>,
    pub height_bound: Option<f64>,
    pub height_ok: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundEntry {
    pub report: BoundReport,
    pub check: Option<BoundCheck>,
}

/// Applicable bounds for a system, with checks against a certificate when
/// one is given.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundBundle {
    pub n: usize,
    pub s: usize,
    pub d: u32,
    pub h: f64,
    pub h_exact: String,
    pub intrinsic: IntrinsicParams,
    pub entries: Vec<BoundEntry>,
    pub skipped: Vec<String>,
    pub note: &'static str,
}

const HEIGHT_NOTE: &str = "height bounds bound some certificate; a searched certificate is compared, not required to meet them";

fn leq(a: &LogLinear, b: &LogLinear) -> bool {
    let (x, y) = (a.to_f64(), b.to_f64());
    x <= y + 1e-9 * y.abs().max(1.0)
}

fn check_against(report: &BoundReport, cert: &BezoutCertificate) -> BoundCheck {
    let deg = BigInt::from(cert.degree());
    let h = cert.height();
    BoundCheck {
        statement: report.statement.clone(),
        degree_bound: report.degree_bound.as_ref().map(ToString::to_string),
        degree_ok: report.degree_bound.as_ref().map(|b| deg <= *b),
        height_bound: report.height_bound.as_ref().map(LogLinear::to_f64),
        height_ok: report.height_bound.as_ref().map(|b| leq(&h, b)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IntrinsicSource {
    User,
    FromDegrees,
    FromVolume,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IntrinsicParams {
    pub delta: u64,
    pub eta: LogLinear,
    pub source: IntrinsicSource,
}

impl Serialize for IntrinsicParams {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        json!({"delta": self.delta, "eta": self.eta.to_f64(), "eta_exact": self.eta.to_string(), "source": self.source})
            .serialize(s)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum IntrinsicMode {
    FromDegrees,
    FromVolume,
    User { delta: u64, eta: LogLinear },
}

fn framed_volume(fs: &[MultiPoly]) -> Result<u64> {
    normalized_volume(&support(fs, true)?)
}

/// Surrogates for the degree `δ` and height `η` of the system.
pub fn intrinsic_params(fs: &[MultiPoly], mode: &IntrinsicMode) -> Result<IntrinsicParams> {
    let p = system_params(fs)?;
    let (statement, inputs, source) = match mode {
        IntrinsicMode::User { delta, eta } => {
            if *delta == 0 {
                return Err(Error::InvalidArgument("delta must be at least 1".into()));
            }
            if eta.to_f64() < 0.0 {
                return Err(Error::InvalidArgument("eta must be nonnegative".into()));
            }
            return Ok(IntrinsicParams { delta: *delta, eta: eta.clone(), source: IntrinsicSource::User });
        }
        IntrinsicMode::FromDegrees => (
            "lemma-dn",
            BoundInputs {
                n: Some(p.n as u64),
                s: Some(p.s as u64),
                h: Some(p.h.clone()),
                di: Some(p.degrees.iter().map(|&d| d.max(1) as u64).collect()),
                ..Default::default()
            },
            IntrinsicSource::FromDegrees,
        ),
        IntrinsicMode::FromVolume => (
            "cota-esparsa",
            BoundInputs {
                n: Some(p.n as u64),
                s: Some(p.s as u64),
                d: Some(p.d as u64),
                h: Some(p.h.clone()),
                vol: Some(framed_volume(fs)?),
                ..Default::default()
            },
            IntrinsicSource::FromVolume,
        ),
    };
    let r = bound(statement, &inputs)?;
    let delta = r.value("delta").expect("delta reported").constant().to_integer();
    let delta = u64::try_from(delta).map_err(|_| Error::InvalidArgument("delta does not fit in 64 bits".into()))?;
    let eta = r.value("eta").expect("eta reported").clone();
    Ok(IntrinsicParams { delta: delta.max(1), eta, source })
}

/// The main degree and height bound, its intrinsic and sparse variants, and the linear and
/// univariate special cases, as they apply to `fs`.
pub fn report_all_bounds(fs: &[MultiPoly], cert: Option<&BezoutCertificate>) -> Result<BoundBundle> {
    let p = system_params(fs)?;
    let (n, s, d) = (p.n as u64, p.s as u64, p.d.max(1) as u64);
    let base = BoundInputs { n: Some(n), d: Some(d), s: Some(s), h: Some(p.h.clone()), ..Default::default() };
    let intrinsic = intrinsic_params(fs, &IntrinsicMode::FromDegrees)?;
    let mut reports = vec![bound("theorem1", &base)?];
    reports.push(bound(
        "theorem2",
        &BoundInputs { delta: Some(intrinsic.delta), eta: Some(intrinsic.eta.clone()), ..base.clone() },
    )?);
    reports.push(bound(
        "cor-intrinsic",
        &BoundInputs { di: Some(p.degrees.iter().map(|&x| x.max(1) as u64).collect()), ..base.clone() },
    )?);
    let mut skipped = Vec::new();
    match framed_volume(fs) {
        Ok(v) => reports.push(bound("cor3", &BoundInputs { vol: Some(v), ..base.clone() })?),
        Err(e) => skipped.push(format!("cor3: {e}")),
    }
    if p.d <= 1 {
        reports.push(bound("lemma-d1", &base)?);
    }
    if p.n == 1 {
        reports.push(bound("lemma-n1", &base)?);
    }
    let entries = reports
        .into_iter()
        .map(|report| {
            let check = cert.map(|c| check_against(&report, c));
            BoundEntry { report, check }
        })
        .collect();
    Ok(BoundBundle {
        n: p.n,
        s: p.s,
        d: p.d,
        h: p.h.to_f64(),
        h_exact: p.h.to_string(),
        intrinsic,
        entries,
        skipped,
        note: HEIGHT_NOTE,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub identity: bool,
    pub degree: u32,
    pub height: f64,
    pub height_exact: String,
    pub degree_bound_used: u32,
    pub degree_within_used_bound: bool,
    pub bounds: BoundBundle,
}

/// Checks `a = Σ g_i f_i` exactly (a failure is an error) and compares the
/// certificate with every applicable bound.
pub fn certificate_verify(cert: &BezoutCertificate, fs: &[MultiPoly]) -> Result<VerifyReport> {
    let n = check_system(fs)?;
    if cert.n != n {
        return Err(Error::VarCountMismatch { left: n, right: cert.n });
    }
    if cert.g.len() != fs.len() || cert.s != fs.len() {
        return Err(Error::LengthMismatch { expected: fs.len(), got: cert.g.len() });
    }
    if let Some(g) = cert.g.iter().find(|g| g.nvars() != n) {
        return Err(Error::VarCountMismatch { left: n, right: g.nvars() });
    }
    if cert.a.is_zero() {
        return Err(Error::IdentityFailed("a is zero".into()));
    }
    if let Some(g) = cert.g.iter().find(|g| !g.is_integral()) {
        return Err(Error::IdentityFailed(format!("cofactor {g} is not integral")));
    }
    let sum = cert.g.iter().zip(fs).fold(MultiPoly::zero(n), |acc, (g, f)| acc + g * f);
    let a = MultiPoly::constant(Rational::from_integer(cert.a.clone()), n);
    if sum != a {
        return Err(Error::IdentityFailed(format!("Σ g_i f_i − a = {}", &sum - &a)));
    }
    let h = cert.height();
    Ok(VerifyReport {
        identity: true,
        degree: cert.degree(),
        height: h.to_f64(),
        height_exact: h.to_string(),
        degree_bound_used: cert.degree_bound,
        degree_within_used_bound: cert.degree() <= cert.degree_bound,
        bounds: report_all_bounds(fs, Some(cert))?,
    })
}

/// `gcd` of `a` and every cofactor coefficient, for callers that want the
/// primitive form of a certificate.
pub fn certificate_content(cert: &BezoutCertificate) -> BigInt {
    let mut g = cert.a.abs();
    for p in &cert.g {
        for c in p.coefficients() {
            g = g.gcd(c.numer());
        }
    }
    g
}
