//! Exact evaluation of the degree and height bounds of the effective
//! Nullstellensatz and of the intersection, projection and toric estimates
//! it is built from.
//!
//! Every bound is a rational linear combination of logarithms of integers,
//! so it is evaluated exactly as a [`LogLinear`]. Bounds that carry an
//! unspecified `−log|λ|_v` correction are evaluated without it.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use super::big;
use crate::error::{Error, Result};
use crate::heights::Place;
use crate::logexpr::LogLinear;
use crate::Rational;

/// Statement ids understood by [`bound`], with a one-line description.
pub const STATEMENTS: [(&str, &str); 31] = [
    ("theorem1", "effective arithmetic Nullstellensatz: deg g_i <= 4nd^n and the height bound"),
    ("theorem2", "intrinsic Nullstellensatz in terms of delta and eta"),
    ("cor3", "sparse Nullstellensatz in terms of the volume V"),
    ("lemma-d1", "linear systems: height (n+1)(h + log(n+1))"),
    ("lemma-n1", "univariate systems: deg <= d-1, height 2d(h+d)"),
    ("bertini", "generic combinations: t <= min(n+1,s), h(a_i) <= 2(n+1)log(d+1)"),
    ("variables", "generic coordinates: h(b_k) <= 2(n+1)log(d+1)"),
    ("radical", "degree of the discriminant polynomial F"),
    ("noether", "degree of the Noether-position polynomial G"),
    ("bernstein", "arithmetic Bernstein-Kushnirenko: deg <= Vol, height bound"),
    ("toric", "height of the toric variety X_A"),
    ("arith-bezout", "arithmetic Bezout inequality for V and W"),
    ("afin", "height of the image of V under an affine map"),
    ("proyeccion", "height of a linear projection of V"),
    ("inversible", "height of V under an injective affine map"),
    ("import", "height of the Chow form of V twisted by f"),
    ("inters", "height of V intersected with V(f)"),
    ("bezloc", "height of V intersected with a complete intersection"),
    ("bezloc1", "height of a complete intersection in affine space"),
    ("inters-global", "global height of V intersected with V(f_1..f_s)"),
    ("norma", "degree and height of the norm N_V(f)"),
    ("traza", "degree and height of the trace Tr_V(f*g)"),
    ("division", "degree and height of the quotient in the division lemma"),
    ("division-n0", "division lemma without x-variables"),
    ("nullstlocal", "local Nullstellensatz for a weak regular sequence"),
    ("extrinsecolocal", "local Nullstellensatz with extrinsic parameters"),
    ("lemma-dn", "intrinsic degree and height from the degrees d_j"),
    ("cota-esparsa", "intrinsic degree and height from the volume V"),
    ("cor-intrinsic", "Nullstellensatz in terms of the degrees d_j"),
    ("ejemplosparse", "Nullstellensatz for the sparse family supported on P_d"),
    ("geometric", "estimates for the geometric-series family"),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    Degree,
    Height,
    Count,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundValue {
    pub name: String,
    pub kind: BoundKind,
    pub value: LogLinear,
}

/// Inputs to the bound dispatcher. Each statement reads only the fields it
/// needs and reports the missing ones by name.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct BoundInputs {
    pub n: Option<u64>,
    pub d: Option<u64>,
    pub s: Option<u64>,
    pub h: Option<LogLinear>,
    pub delta: Option<u64>,
    pub eta: Option<LogLinear>,
    pub vol: Option<u64>,
    pub di: Option<Vec<u64>>,
    /// Per-polynomial heights; default to `h` for every polynomial.
    pub hi: Option<Vec<LogLinear>>,
    pub place: Option<Place>,
    pub r: Option<u64>,
    pub m: Option<u64>,
    pub big_n: Option<u64>,
    pub card: Option<u64>,
    pub deg_v: Option<u64>,
    pub h_v: Option<LogLinear>,
    pub deg_w: Option<u64>,
    pub h_w: Option<LogLinear>,
    pub dim_v: Option<u64>,
    pub dim_w: Option<u64>,
    pub h_phi: Option<LogLinear>,
    pub deg_f: Option<u64>,
    pub h_f: Option<LogLinear>,
    pub deg_g: Option<u64>,
    pub h_g: Option<LogLinear>,
    pub deg_t_g: Option<u64>,
    pub deg_x_g: Option<u64>,
    pub ell: Option<u64>,
    pub deg_vj: Option<Vec<u64>>,
    pub h_vj: Option<Vec<LogLinear>>,
}

impl BoundInputs {
    /// Sets a field from its name and text form: counts as integers, heights
    /// as [`LogLinear`] text, `di`/`deg_vj` comma-separated, `hi`/`h_vj`
    /// semicolon-separated.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let count = |v: &str| {
            v.trim().parse::<u64>().map_err(|_| Error::InvalidArgument(format!("`{key}` expects a count, got `{v}`")))
        };
        let counts = |v: &str| v.split(',').map(count).collect::<Result<Vec<_>>>();
        let logs = |v: &str| v.split(';').map(LogLinear::parse).collect::<Result<Vec<_>>>();
        match key {
            "n" => self.n = Some(count(value)?),
            "d" => self.d = Some(count(value)?),
            "s" => self.s = Some(count(value)?),
            "h" => self.h = Some(LogLinear::parse(value)?),
            "delta" => self.delta = Some(count(value)?),
            "eta" => self.eta = Some(LogLinear::parse(value)?),
            "vol" => self.vol = Some(count(value)?),
            "di" => self.di = Some(counts(value)?),
            "hi" => self.hi = Some(logs(value)?),
            "place" => self.place = Some(Place::parse(value)?),
            "r" => self.r = Some(count(value)?),
            "m" => self.m = Some(count(value)?),
            "big_n" => self.big_n = Some(count(value)?),
            "card" => self.card = Some(count(value)?),
            "deg_v" => self.deg_v = Some(count(value)?),
            "h_v" => self.h_v = Some(LogLinear::parse(value)?),
            "deg_w" => self.deg_w = Some(count(value)?),
            "h_w" => self.h_w = Some(LogLinear::parse(value)?),
            "dim_v" => self.dim_v = Some(count(value)?),
            "dim_w" => self.dim_w = Some(count(value)?),
            "h_phi" => self.h_phi = Some(LogLinear::parse(value)?),
            "deg_f" => self.deg_f = Some(count(value)?),
            "h_f" => self.h_f = Some(LogLinear::parse(value)?),
            "deg_g" => self.deg_g = Some(count(value)?),
            "h_g" => self.h_g = Some(LogLinear::parse(value)?),
            "deg_t_g" => self.deg_t_g = Some(count(value)?),
            "deg_x_g" => self.deg_x_g = Some(count(value)?),
            "ell" => self.ell = Some(count(value)?),
            "deg_vj" => self.deg_vj = Some(counts(value)?),
            "h_vj" => self.h_vj = Some(logs(value)?),
            other => return Err(Error::InvalidArgument(format!("unknown bound input `{other}`"))),
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub statement: String,
    pub place: Option<Place>,
    pub inputs: BTreeMap<String, String>,
    pub values: Vec<BoundValue>,
    pub degree_bound: Option<BigInt>,
    pub height_bound: Option<LogLinear>,
    pub formula: String,
}

impl BoundReport {
    pub fn value(&self, name: &str) -> Option<&LogLinear> {
        self.values.iter().find(|v| v.name == name).map(|v| &v.value)
    }

    pub fn to_json(&self) -> Value {
        let degree = self.degree_bound.as_ref().map(|d| match d.to_u64() {
            Some(x) => json!(x),
            None => json!(d.to_string()),
        });
        let mut exact = serde_json::Map::new();
        if let Some(d) = &self.degree_bound {
            exact.insert("degree_bound".into(), json!(d.to_string()));
        }
        if let Some(h) = &self.height_bound {
            exact.insert("height_bound".into(), json!(h.to_string()));
        }
        let bounds: Vec<Value> = self
            .values
            .iter()
            .map(|v| json!({"name": v.name, "kind": v.kind, "value": v.value.to_f64(), "exact": v.value.to_string()}))
            .collect();
        let mut out = json!({
            "statement": self.statement,
            "inputs": self.inputs,
            "degree_bound": degree,
            "height_bound": self.height_bound.as_ref().map(LogLinear::to_f64),
            "bounds": bounds,
            "formula": self.formula,
            "exact": exact,
        });
        if let Some(p) = &self.place {
            out["place"] = json!(p.to_string());
        }
        out
    }
}

impl Serialize for BoundReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

fn k(x: impl Into<BigInt>) -> LogLinear {
    LogLinear::rational(Rational::from_integer(x.into()))
}

fn lg(x: u64) -> LogLinear {
    LogLinear::log_u(x)
}

fn pw(b: u64, e: u64) -> BigInt {
    num_traits::pow(big(b), e as usize)
}

fn prod(xs: &[u64]) -> BigInt {
    xs.iter().fold(BigInt::one(), |a, &x| a * x)
}

fn fmt_list<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

struct Ctx<'a> {
    statement: &'a str,
    inp: &'a BoundInputs,
    used: BTreeMap<String, String>,
    values: Vec<BoundValue>,
}

impl<'a> Ctx<'a> {
    fn missing(&self, name: &str) -> Error {
        Error::MissingInput { statement: self.statement.into(), input: name.into() }
    }

    fn u(&mut self, name: &str, v: Option<u64>) -> Result<u64> {
        let x = v.ok_or_else(|| self.missing(name))?;
        self.used.insert(name.into(), x.to_string());
        Ok(x)
    }

    fn pos(&mut self, name: &str, v: Option<u64>) -> Result<u64> {
        let x = self.u(name, v)?;
        if x == 0 {
            return Err(Error::InvalidArgument(format!("`{name}` must be positive for `{}`", self.statement)));
        }
        Ok(x)
    }

    fn ll(&mut self, name: &str, v: &Option<LogLinear>) -> Result<LogLinear> {
        let x = v.clone().ok_or_else(|| self.missing(name))?;
        self.used.insert(name.into(), x.to_string());
        Ok(x)
    }

    fn list(&mut self, name: &str, v: &Option<Vec<u64>>) -> Result<Vec<u64>> {
        let x = v.clone().ok_or_else(|| self.missing(name))?;
        if x.is_empty() {
            return Err(self.missing(name));
        }
        self.used.insert(name.into(), fmt_list(&x));
        Ok(x)
    }

    /// Degrees sorted in decreasing order, as the intersection estimates assume.
    fn degrees_desc(&mut self) -> Result<Vec<u64>> {
        let mut di = self.list("di", &self.inp.di.clone())?;
        di.sort_unstable_by(|a, b| b.cmp(a));
        Ok(di)
    }

    /// Per-polynomial heights, one per entry of `di`, before sorting.
    fn heights_for(&mut self, count: usize) -> Result<Vec<LogLinear>> {
        match &self.inp.hi {
            Some(hs) => {
                if hs.len() != count {
                    return Err(Error::LengthMismatch { expected: count, got: hs.len() });
                }
                self.used.insert("hi".into(), fmt_list(hs));
                Ok(hs.clone())
            }
            None => {
                let h = self.ll("h", &self.inp.h.clone())?;
                Ok(vec![h; count])
            }
        }
    }

    fn archimedean(&mut self) -> bool {
        let place = self.inp.place.clone().unwrap_or(Place::Archimedean);
        self.used.insert("place".into(), place.to_string());
        place == Place::Archimedean
    }

    fn push(&mut self, name: &str, kind: BoundKind, value: LogLinear) {
        self.values.push(BoundValue { name: name.into(), kind, value });
    }

    fn deg(&mut self, name: &str, value: impl Into<BigInt>) {
        self.push(name, BoundKind::Degree, k(value));
    }
}

fn is_place_dependent(statement: &str) -> bool {
    matches!(
        statement,
        "import"
            | "inters"
            | "bezloc"
            | "bezloc1"
            | "norma"
            | "traza"
            | "division"
            | "division-n0"
            | "nullstlocal"
            | "extrinsecolocal"
    )
}

/// Evaluates the named statement's right-hand sides exactly.
pub fn bound(statement: &str, inputs: &BoundInputs) -> Result<BoundReport> {
    use BoundKind::*;
    let mut c = Ctx { statement, inp: inputs, used: BTreeMap::new(), values: Vec::new() };
    let inp = inputs;
    let formula: &str = match statement {
        "theorem1" => {
            let n = c.pos("n", inp.n)?;
            let d = c.pos("d", inp.d)?;
            let dn = pw(d, n);
            c.deg("degree", big(4 * n) * &dn);
            // the degree bullet stands alone; the height needs s and h
            if inp.s.is_none() && inp.h.is_none() {
                "deg g_i <= 4 n d^n"
            } else {
                let s = c.pos("s", inp.s)?;
                let h = c.ll("h", &inp.h)?;
                let inner = h + lg(s) + lg(n + 1).scale_int(((n + 7) * d) as i64);
                c.push("height", Height, inner.scale_big(&(big(4 * n * (n + 1)) * dn)));
                "deg g_i <= 4 n d^n; h(a,g) <= 4 n (n+1) d^n (h + log s + (n+7) log(n+1) d)"
            }
        }
        "theorem2" => {
            let n = c.pos("n", inp.n)?;
            let d = c.pos("d", inp.d)?;
            let s = c.pos("s", inp.s)?;
            let h = c.ll("h", &inp.h)?;
            let delta = c.pos("delta", inp.delta)?;
            let eta = c.ll("eta", &inp.eta)?;
            c.deg("degree", big(2 * n * n * d * delta));
            let inner = eta.scale_int(2)
                + (h + lg(s)).scale_int(delta as i64)
                + lg(d + 1).scale_big(&(big(21 * (n + 1) * (n + 1) * d) * delta));
            c.push("height", Height, inner.scale_big(&big((n + 1) * (n + 1) * d)));
            "deg g_i <= 2 n^2 d delta; h <= (n+1)^2 d (2 eta + (h + log s) delta + 21 (n+1)^2 d log(d+1) delta)"
        }
        "cor3" => {
            let n = c.pos("n", inp.n)?;
            let d = c.pos("d", inp.d)?;
            let s = c.pos("s", inp.s)?;
            let h = c.ll("h", &inp.h)?;
            let v = c.u("vol", inp.vol)?;
            c.deg("degree", big(2 * n * n * d) * v);
            let inner = h + lg(s) + lg(d + 1).scale_big(&(pw(2, 2 * n + 4) * d));
            c.push("height", Height, inner.scale_big(&(big(2 * (n + 1).pow(3) * d) * v)));
            "deg g_i <= 2 n^2 d V; h <= 2 (n+1)^3 d V (h + log s + 2^(2n+4) d log(d+1))"
        }
        "lemma-d1" => {
            let n = c.pos("n", inp.n)?;
            let h = c.ll("h", &inp.h)?;
            c.deg("degree", 0);
            c.push("height", Height, (h + lg(n + 1)).scale_int((n + 1) as i64));
            "cofactors are constants; h <= (n+1)(h + log(n+1))"
        }
        "lemma-n1" => {
            let d = c.pos("d", inp.d)?;
            let h = c.ll("h", &inp.h)?;
            c.deg("degree", d - 1);
            c.push("height", Height, (h + k(d)).scale_int(2 * d as i64));
            "deg g_i <= d - 1; h <= 2 d (h + d)"
        }
        "bertini" => {
            let n = c.pos("n", inp.n)?;
            let s = c.pos("s", inp.s)?;
            let d = c.pos("d", inp.d)?;
            c.push("t", Count, k((n + 1).min(s)));
            c.push("coefficient_height", Height, lg(d + 1).scale_int(2 * (n + 1) as i64));
            "t <= min(n+1, s); h(a_i) <= 2 (n+1) log(d+1)"
        }
        "variables" => {
            let n = c.pos("n", inp.n)?;
            let d = c.pos("d", inp.d)?;
            c.push("coefficient_height", Height, lg(d + 1).scale_int(2 * (n + 1) as i64));
            "h(b_k) <= 2 (n+1) log(d+1)"
        }
        "radical" => {
            let d = c.pos("d", inp.d)?;
            let ell = c.u("ell", inp.ell)?;
            c.deg("degree", big(2) * pw(d + 1, 2 * ell));
            c.deg("degree_eliminating", pw(d + 1, ell));
            "deg F <= 2 (d+1)^(2 ell); deg F <= (d+1)^ell when the ideal meets k[Z]"
        }
        "noether" => {
            let dv = c.pos("deg_v", inp.deg_v)?;
            c.deg("degree", big(2) * dv * dv);
            "deg_{U_k} G <= 2 (deg V)^2"
        }
        "bernstein" => {
            let n = c.pos("n", inp.n)?;
            let d = c.u("d", inp.d)?;
            let h = c.ll("h", &inp.h)?;
            let v = c.u("vol", inp.vol)?;
            c.deg("degree", v);
            let inner = h.scale_int(n as i64) + lg(n + 1).scale_big(&(pw(2, 2 * n + 3) * d));
            c.push("height", Height, inner.scale_int(v as i64));
            "deg V <= Vol(A); h(V) <= (n h + 2^(2n+3) log(n+1) d) Vol(A)"
        }
        "toric" => {
            let r = c.u("r", inp.r)?;
            let card = c.u("card", inp.card)?;
            if card < 2 {
                return Err(Error::CardinalityTooSmall);
            }
            let v = c.u("vol", inp.vol)?;
            let factor = pw(2, 2 * r + 2) * v;
            c.push("height", Height, lg(card).scale_big(&factor));
            if let (Some(n), Some(d)) = (inp.n, inp.d) {
                c.used.insert("n".into(), n.to_string());
                c.used.insert("d".into(), d.to_string());
                c.push("height_polynomial_support", Height, lg(n + 1).scale_big(&(factor * d)));
            }
            "h(X_A) <= 2^(2r+2) log(#A) Vol(A); h(X_A) <= 2^(2r+2) log(n+1) d Vol(A)"
        }
        "arith-bezout" => {
            let n = c.u("n", inp.n)?;
            let dim_v = c.u("dim_v", inp.dim_v)?;
            let dim_w = c.u("dim_w", inp.dim_w)?;
            let dv = c.u("deg_v", inp.deg_v)?;
            let hv = c.ll("h_v", &inp.h_v)?;
            let dw = c.u("deg_w", inp.deg_w)?;
            let hw = c.ll("h_w", &inp.h_w)?;
            let mut cst = Rational::zero();
            for i in 0..=dim_v {
                for j in 0..=dim_w {
                    cst += Rational::new(BigInt::one(), big(2 * (i + j + 1)));
                }
            }
            let log2_coef = Rational::from_integer(big(2 * n)) - Rational::from_integer(big(dim_v + dim_w));
            let cc = LogLinear::rational(cst) + lg(2).scale(&(log2_coef / Rational::from_integer(big(2))));
            c.push("c", Height, cc.clone());
            c.deg("degree", big(dv) * dw);
            c.push("height", Height, hv.scale_int(dw as i64) + hw.scale_int(dv as i64) + cc.scale_big(&(big(dv) * dw)));
            "h(V cap W) <= h(V) deg W + deg V h(W) + c deg V deg W, c = sum_{i<=dim V, j<=dim W} 1/(2(i+j+1)) + (n - (dim V + dim W)/2) log 2"
        }
        "afin" => {
            let n = c.u("n", inp.n)?;
            let nn = c.u("big_n", inp.big_n)?;
            let r = c.u("r", inp.r)?;
            let hv = c.ll("h_v", &inp.h_v)?;
            let hphi = c.ll("h_phi", &inp.h_phi)?;
            let dv = c.u("deg_v", inp.deg_v)?;
            let inner = hphi + lg(n + nn + 1).scale_int(8);
            c.push("height", Height, hv + inner.scale_big(&(big(r + 1) * dv)));
            "h(phi(V)) <= h(V) + (r+1)(h(phi) + 8 log(n+N+1)) deg V"
        }
        "proyeccion" => {
            let n = c.u("n", inp.n)?;
            let m = c.u("m", inp.m)?;
            let r = c.u("r", inp.r)?;
            let hv = c.ll("h_v", &inp.h_v)?;
            let dv = c.u("deg_v", inp.deg_v)?;
            c.push("height", Height, hv + lg(n + m + 1).scale_big(&(big(3 * (r + 1)) * dv)));
            "h(pi(V)) <= h(V) + 3 (r+1) log(n+m+1) deg V"
        }
        "inversible" => {
            let n = c.u("n", inp.n)?;
            let r = c.u("r", inp.r)?;
            let hv = c.ll("h_v", &inp.h_v)?;
            let hphi = c.ll("h_phi", &inp.h_phi)?;
            let dv = c.u("deg_v", inp.deg_v)?;
            let inner = hphi + lg(n + 1).scale_int(5);
            c.push("height", Height, hv + inner.scale_big(&(big(r + 1) * dv)));
            "h(psi(V)) <= h(V) + (r+1)(h(psi) + 5 log(n+1)) deg V"
        }
        "import" | "inters" => {
            let arch = c.archimedean();
            let n = c.u("n", inp.n)?;
            let df = c.u("deg_f", inp.deg_f)?;
            let hv = c.ll("h_v", &inp.h_v)?;
            let hf = c.ll("h_f", &inp.h_f)?;
            let dv = c.u("deg_v", inp.deg_v)?;
            if statement == "inters" {
                c.deg("degree", big(df) * dv);
            }
            let mut val = hv.scale_int(df as i64) + hf.scale_int(dv as i64);
            if arch {
                val = val + lg(n + 1).scale_big(&(big(df) * dv));
            }
            c.push("height", Height, val);
            if arch {
                "deg f h_v(V) + h_v(f) deg V + log(n+1) deg f deg V"
            } else {
                "deg f h_p(V) + h_p(f) deg V"
            }
        }
        "bezloc" | "bezloc1" => {
            let arch = c.archimedean();
            let n = c.u("n", inp.n)?;
            let di = c.list("di", &inp.di)?;
            if di.contains(&0) {
                return Err(Error::InvalidArgument("degrees d_i must be positive".into()));
            }
            let hi = c.heights_for(di.len())?;
            let s = di.len() as u64;
            let (hv, dv) = if statement == "bezloc" {
                (c.ll("h_v", &inp.h_v)?, c.u("deg_v", inp.deg_v)?)
            } else {
                (LogLinear::zero(), 1)
            };
            let p = prod(&di);
            let ratio_sum: LogLinear =
                hi.iter().zip(&di).map(|(h, &d)| h.scale(&Rational::new(BigInt::one(), big(d)))).sum();
            let mut inner = hv + ratio_sum.scale_int(dv as i64);
            if arch {
                let logs = if statement == "bezloc" { s * dv } else { n + s };
                inner = inner + lg(n + 1).scale_int(logs as i64);
            }
            c.deg("degree", &p * dv);
            c.push("height", Height, inner.scale_big(&p));
            match (statement, arch) {
                ("bezloc", true) => "prod d_i (h_v(V) + (sum h_v(f_i)/d_i) deg V + s log(n+1) deg V)",
                ("bezloc", false) => "prod d_i (h_p(V) + (sum h_p(f_i)/d_i) deg V)",
                (_, true) => "prod d_i (sum h_v(f_i)/d_i + (n+s) log(n+1))",
                _ => "prod d_i (sum h_p(f_i)/d_i)",
            }
        }
        "inters-global" => {
            let n = c.u("n", inp.n)?;
            let di = c.degrees_desc()?;
            if di.contains(&0) {
                return Err(Error::InvalidArgument("degrees d_i must be positive".into()));
            }
            let h = c.ll("h", &inp.h)?;
            let s = di.len() as u64;
            let affine_space = inp.deg_v.is_none() && inp.h_v.is_none();
            let r = if affine_space { inp.r.unwrap_or(n) } else { c.u("r", inp.r)? };
            let n0 = r.min(s) as usize;
            let p = prod(&di[..n0]);
            let inv_sum: Rational = di[..n0].iter().map(|&d| Rational::new(BigInt::one(), big(d))).sum();
            let f = if affine_space {
                let inner = h.scale(&inv_sum) + lg(n + 1).scale_int(n as i64 + n0 as i64);
                c.push("height", Height, inner.scale_big(&p));
                "V = A^n: prod_{i<=n0} d_i ((sum_{i<=n0} 1/d_i) h + (n + n0) log(n+1))"
            } else {
                let hv = c.ll("h_v", &inp.h_v)?;
                let dv = c.u("deg_v", inp.deg_v)?;
                let inner = hv + h.scale(&inv_sum).scale_int(dv as i64) + lg(n + 1).scale_big(&(big(n0 as u64) * dv));
                c.push("height", Height, inner.scale_big(&p));
                "prod_{i<=n0} d_i (h(V) + (sum_{i<=n0} 1/d_i) h deg V + n0 log(n+1) deg V), n0 = min(r, s), d_i decreasing"
            };
            c.used.insert("n0".into(), n0.to_string());
            f
        }
        "norma" => {
            let arch = c.archimedean();
            let n = c.u("n", inp.n)?;
            let r = c.u("r", inp.r)?;
            let df = c.u("deg_f", inp.deg_f)?;
            let hf = c.ll("h_f", &inp.h_f)?;
            let hv = c.ll("h_v", &inp.h_v)?;
            let dv = c.u("deg_v", inp.deg_v)?;
            c.deg("degree", big(df) * dv);
            let mut val = hv.scale_int(df as i64) + hf.scale_int(dv as i64);
            if arch {
                val = val + lg(n + 1).scale_big(&(big((r + 1) * df) * dv));
            }
            c.push("height", Height, val);
            if arch {
                "deg N <= deg f deg V; h <= deg f h_v(V) + h_v(f) deg V + (r+1) log(n+1) deg f deg V"
            } else {
                "deg N <= deg f deg V; h <= deg f h_p(V) + h_p(f) deg V"
            }
        }
        "traza" => {
            let arch = c.archimedean();
            let n = c.u("n", inp.n)?;
            let r = c.u("r", inp.r)?;
            let d = c.u("d", inp.d)?;
            let h = c.ll("h", &inp.h)?;
            let hv = c.ll("h_v", &inp.h_v)?;
            let dv = c.u("deg_v", inp.deg_v)?;
            c.deg("degree", big(d) * dv);
            let val = if arch {
                hv.scale_int(d as i64) + (h + lg(2)).scale_int(dv as i64) + lg(n + 1).scale_big(&(big((r + 1) * d) * dv))
            } else {
                hv.scale_int(d as i64) + h.scale_int(dv as i64)
            };
            c.push("height", Height, val);
            if arch {
                "deg Tr <= d deg V; h <= d h_v(V) + (h_v + log 2) deg V + (r+1) log(n+1) d deg V"
            } else {
                "deg Tr <= d deg V; h <= d h_p(V) + h_p deg V"
            }
        }
        "division" => {
            let arch = c.archimedean();
            let n = c.u("n", inp.n)?;
            let r = c.u("r", inp.r)?;
            let d = c.u("d", inp.d)?;
            let h = c.ll("h", &inp.h)?;
            let hv = c.ll("h_v", &inp.h_v)?;
            let dv = c.u("deg_v", inp.deg_v)?;
            let hg = c.ll("h_g", &inp.h_g)?;
            let dtg = c.u("deg_t_g", inp.deg_t_g)?;
            let dxg = c.u("deg_x_g", inp.deg_x_g)?;
            let wide = n * d + ((n + 1) * d).max(dxg);
            let narrow = n * d + d.max(dxg);
            c.deg("degree_x", n * d);
            c.deg("degree", big(dtg) + big(wide) * dv);
            let mut val = hg + hv.scale_int(narrow as i64);
            if arch {
                let inner = h.scale_int((n + 1) as i64) + lg(n + r + 1).scale_big(&(big(r + 6) * wide));
                val = val + inner.scale_int(dv as i64) + lg(r + 1).scale_int(2 * dtg as i64);
            } else {
                val = val + h.scale_big(&(big(n + 1) * dv));
            }
            c.push("height", Height, val);
            if arch {
                "deg_x q <= n d; deg q <= deg_t g + (n d + max((n+1) d, deg_x g)) deg V; h(q) <= h(g) + (n d + max(d, deg_x g)) h(V) + ((n+1) h + (r+6) log(n+r+1) (n d + max((n+1) d, deg_x g))) deg V + 2 log(r+1) deg_t g"
            } else {
                "deg_x q <= n d; deg q <= deg_t g + (n d + max((n+1) d, deg_x g)) deg V; h_p(q) <= h_p(g) + (n d + max(d, deg_x g)) h_p(V) + (n+1) h_p deg V"
            }
        }
        "division-n0" => {
            let arch = c.archimedean();
            let r = c.u("r", inp.r)?;
            let h = c.ll("h", &inp.h)?;
            let hg = c.ll("h_g", &inp.h_g)?;
            let dg = c.u("deg_g", inp.deg_g)?;
            c.deg("degree", dg);
            let mut val = hg + h;
            if arch {
                val = val + lg(r + 1).scale_int(2 * dg as i64);
            }
            c.push("height", Height, val);
            if arch {
                "deg q <= deg g; h(q) <= h(g) + h + 2 log(r+1) deg g"
            } else {
                "deg q <= deg g; h_p(q) <= h_p(g) + h_p"
            }
        }
        "nullstlocal" => {
            let arch = c.archimedean();
            let n = c.u("n", inp.n)?;
            if n < 2 {
                return Err(Error::InvalidArgument("`nullstlocal` needs n >= 2".into()));
            }
            let s = c.pos("s", inp.s)?;
            let d = c.u("d", inp.d)?.max(2);
            let h = c.ll("h", &inp.h)?;
            let need = (s - 1) as usize;
            let deg_vj = inp.deg_vj.clone().unwrap_or_default();
            let h_vj = inp.h_vj.clone().unwrap_or_default();
            if deg_vj.len() != need {
                return Err(if inp.deg_vj.is_none() && need > 0 {
                    c.missing("deg_vj")
                } else {
                    Error::LengthMismatch { expected: need, got: deg_vj.len() }
                });
            }
            if h_vj.len() != need {
                return Err(if inp.h_vj.is_none() && need > 0 {
                    c.missing("h_vj")
                } else {
                    Error::LengthMismatch { expected: need, got: h_vj.len() }
                });
            }
            c.used.insert("deg_vj".into(), fmt_list(&deg_vj));
            c.used.insert("h_vj".into(), fmt_list(&h_vj));
            let short = (n.min(s) - 1) as usize;
            let deg_short: u64 = 1 + deg_vj[..short].iter().sum::<u64>();
            let deg_all: u64 = 1 + deg_vj.iter().sum::<u64>();
            let h_sum: LogLinear = h_vj.iter().cloned().sum();
            c.deg("degree", big(2 * n * d) * deg_short);
            let mut inner = h.scale_int((n + 1) as i64);
            if arch {
                inner = inner + lg(n + 1).scale_int((2 * n * (2 * n + 5) * d) as i64);
            }
            c.push("height", Height, h_sum.scale_int((2 * n * d) as i64) + inner.scale_int(deg_all as i64));
            if arch {
                "d = max(deg f_i, 2); deg p_i <= 2 n d (1 + sum_{j<min(n,s)} deg V_j); h <= 2 n d sum_{j<s} h(V_j) + ((n+1) h + 2 n (2n+5) log(n+1) d)(1 + sum_{j<s} deg V_j)"
            } else {
                "d = max(deg f_i, 2); deg p_i <= 2 n d (1 + sum_{j<min(n,s)} deg V_j); h_p <= 2 n d sum_{j<s} h_p(V_j) + (n+1) h_p (1 + sum_{j<s} deg V_j)"
            }
        }
        "extrinsecolocal" => {
            let arch = c.archimedean();
            let n = c.pos("n", inp.n)?;
            let d = c.u("d", inp.d)?.max(2);
            let h = c.ll("h", &inp.h)?;
            let dn = pw(d, n);
            c.deg("degree", big(4 * n) * &dn);
            let mut val = h.scale_big(&(big(4 * n * (n + 1)) * &dn));
            if arch {
                val = val + lg(n + 1).scale_big(&(big(4 * n * (4 * n + 5)) * dn * d));
            }
            c.push("height", Height, val);
            if arch {
                "d = max(deg f_i, 2); deg p_i <= 4 n d^n; h <= 4 n (n+1) d^n h + 4 n (4n+5) log(n+1) d^(n+1)"
            } else {
                "d = max(deg f_i, 2); deg p_i <= 4 n d^n; h_p <= 4 n (n+1) d^n h_p"
            }
        }
        "lemma-dn" => {
            let n = c.pos("n", inp.n)?;
            let di = c.degrees_desc()?;
            let s = di.len() as u64;
            if let Some(given) = inp.s {
                if given != s {
                    return Err(Error::LengthMismatch { expected: given as usize, got: di.len() });
                }
            }
            let h = c.ll("h", &inp.h)?;
            let d = di[0];
            let n0 = n.min(s) as usize;
            let n1 = (n + 1).min(s) as usize;
            let delta = prod(&di[..n0.saturating_sub(1)]);
            let eta_prod = prod(&di[..n1.saturating_sub(2)]);
            c.deg("delta", delta);
            let inner = h + lg(s) + k(3 * n * (n + 1) * d);
            c.push("eta", Height, inner.scale_big(&(eta_prod * n)));
            "delta <= prod_{j<=n0-1} d_j; eta <= n prod_{j<=n1-2} d_j (h + log s + 3 n (n+1) d), n0 = min(n,s), n1 = min(n+1,s), d_j decreasing"
        }
        "cota-esparsa" => {
            let n = c.pos("n", inp.n)?;
            let s = c.pos("s", inp.s)?;
            let d = c.u("d", inp.d)?;
            let h = c.ll("h", &inp.h)?;
            let v = c.u("vol", inp.vol)?;
            c.deg("delta", v);
            let inner = h + lg(s) + k(pw(2, 2 * n + 4) * d);
            c.push("eta", Height, inner.scale_big(&big(n * v)));
            "delta <= V; eta <= n V (h + log s + 2^(2n+4) d)"
        }
        "cor-intrinsic" => {
            let n = c.pos("n", inp.n)?;
            let di = c.degrees_desc()?;
            let s = di.len() as u64;
            let h = c.ll("h", &inp.h)?;
            let d = di[0];
            let n0 = n.min(s) as usize;
            let p = prod(&di[..n0.saturating_sub(1)]);
            c.deg("degree", big(2 * n * n * d) * &p);
            let inner = h + lg(s) + lg(d + 1).scale_int((3 * n * (n + 7) * d) as i64);
            c.push("height", Height, inner.scale_big(&(big(2 * (n + 1).pow(3) * d) * p)));
            "deg g_i <= 2 n^2 d prod_{j<=n0-1} d_j; h <= 2 (n+1)^3 d prod_{j<=n0-1} d_j (h + log s + 3 n (n+7) d log(d+1))"
        }
        "ejemplosparse" => {
            let n = c.pos("n", inp.n)?;
            let d = c.pos("d", inp.d)?;
            let s = c.pos("s", inp.s)?;
            let h = c.ll("h", &inp.h)?;
            c.push("vol", Count, k(n * d));
            c.deg("degree", big(2) * pw(n, 4) * d * d);
            let inner = h + lg(s) + lg(n * d + 1).scale_big(&(pw(2, 2 * n + 4) * n * d));
            c.push("height", Height, inner.scale_big(&(big(2 * n * n * (n + 1).pow(3)) * d * d)));
            "Vol(P_d) = n d; deg g_i <= 2 n^4 d^2; h <= 2 n^2 (n+1)^3 d^2 (h + log s + n 2^(2n+4) d log(n d + 1))"
        }
        "geometric" => {
            let n = c.pos("n", inp.n)?;
            let d = c.pos("d", inp.d)?;
            let h = c.ll("h", &inp.h)?;
            c.deg("degree", 2 * n * n * d);
            let inner = h + lg(n + 1).scale_int((8 * n * d) as i64);
            c.push("height", Height, inner.scale_big(&big((n + 1) * (n + 1))));
            "deg g_i <= 2 n^2 d; h <= (n+1)^2 (h + 8 n log(n+1) d)"
        }
        other => return Err(Error::UnknownStatement(other.into())),
    };
    let place = is_place_dependent(statement).then(|| inp.place.clone().unwrap_or(Place::Archimedean));
    let degree_bound = c
        .values
        .iter()
        .find(|v| v.kind == BoundKind::Degree)
        .map(|v| v.value.constant().to_integer());
    let height_bound = c.values.iter().find(|v| v.kind == BoundKind::Height).map(|v| v.value.clone());
    Ok(BoundReport {
        statement: statement.into(),
        place,
        inputs: c.used,
        values: c.values,
        degree_bound,
        height_bound,
        formula: formula.into(),
    })
}
