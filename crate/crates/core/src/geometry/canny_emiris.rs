//! Canny–Emiris matrices for `r+1` generic polynomials with a common support.
//!
//! Everything is computed in the lattice coordinates of `Z·A`, where the
//! support is full-dimensional. Rows are indexed by
//! `E = ((r+1)Q + ε) ∩ Z^r`. The cell of the coherent mixed subdivision
//! containing `p − ε` comes from an exact linear program over the lifted
//! summands; its row content is the last summand that is a single vertex.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{lattice_data, placing_triangulation, small_det, LatticeData, SupportSet};
use crate::error::{Error, Result};
use crate::heights::factor::{is_prime, valuation};
use crate::linalg::Matrix;
use crate::poly::univariate::UniPoly;
use crate::Rational;

/// Which generic polynomial a row belongs to and the vertex `a` of its
/// summand; the row holds the coefficients of `x^{p−a} F_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowContent {
    pub poly: usize,
    pub vertex: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CeMatrixSpec {
    pub r: usize,
    pub order: usize,
    /// Support in lattice coordinates, in the order used by `entries`.
    pub support: Vec<Vec<i64>>,
    pub points: Vec<Vec<i64>>,
    pub rows: Vec<RowContent>,
    /// `entries[p][q] = Some((i, k))` stands for the variable `U_{i, support[k]}`.
    pub entries: Vec<Vec<Option<(usize, usize)>>>,
    #[serde(serialize_with = "ser_rationals")]
    pub epsilon: Vec<Rational>,
    pub lifting_seed: u64,
}

fn ser_rationals<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

impl CeMatrixSpec {
    /// Substitutes `U_{ik} ↦ values[i][k]`.
    pub fn specialize(&self, values: &[Vec<Rational>]) -> Result<Matrix> {
        if values.len() != self.r + 1 {
            return Err(Error::LengthMismatch { expected: self.r + 1, got: values.len() });
        }
        for v in values {
            if v.len() != self.support.len() {
                return Err(Error::LengthMismatch { expected: self.support.len(), got: v.len() });
            }
        }
        let rows = self
            .entries
            .iter()
            .map(|row| row.iter().map(|e| e.map_or_else(Rational::zero, |(i, k)| values[i][k].clone())).collect())
            .collect();
        Ok(Matrix::from_rows(rows))
    }

    pub fn nonzero_per_row(&self) -> Vec<usize> {
        self.entries.iter().map(|row| row.iter().filter(|e| e.is_some()).count()).collect()
    }
}

/// Supporting hyperplanes `b + a·x ≥ 0` of `Conv(pts)`, from the boundary of
/// a triangulation.
fn hull_facets(pts: &[Vec<i64>]) -> Result<Vec<(Vec<i128>, i128)>> {
    let r = pts[0].len();
    let cells = placing_triangulation(pts)?;
    let mut count: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for cell in &cells {
        for &opp in cell {
            count.entry(cell.iter().copied().filter(|&v| v != opp).collect()).or_default().push(opp);
        }
    }
    let mut out = Vec::new();
    for (facet, opps) in count {
        if opps.len() != 1 {
            continue;
        }
        let v1: Vec<i128> = pts[facet[0]].iter().map(|&x| x as i128).collect();
        let edges: Vec<Vec<i128>> =
            facet[1..].iter().map(|&v| pts[v].iter().zip(&v1).map(|(x, b)| *x as i128 - b).collect()).collect();
        let eval = |x: &[i128]| {
            let mut m = edges.clone();
            m.push(x.iter().zip(&v1).map(|(a, b)| a - b).collect());
            small_det(&m)
        };
        let b = eval(&vec![0; r]);
        let mut a: Vec<i128> = (0..r)
            .map(|j| {
                let mut e = vec![0; r];
                e[j] = 1;
                eval(&e) - b
            })
            .collect();
        let mut b = b;
        let opp: Vec<i128> = pts[opps[0]].iter().map(|&x| x as i128).collect();
        if b + a.iter().zip(&opp).map(|(x, y)| x * y).sum::<i128>() < 0 {
            a.iter_mut().for_each(|x| *x = -*x);
            b = -b;
        }
        out.push((a, b));
    }
    Ok(out)
}

fn check_r(lat: &LatticeData, r: usize) -> Result<()> {
    if lat.r != r {
        return Err(Error::InvalidArgument(format!("support has dimension {}, not {r}", lat.r)));
    }
    if r == 0 {
        return Err(Error::CardinalityTooSmall);
    }
    Ok(())
}

/// Lattice points of `(r+1)·Conv(A) + ε` in lattice coordinates, in lex order.
pub fn ce_point_set(a: &SupportSet, epsilon: &[Rational], r: usize) -> Result<Vec<Vec<i64>>> {
    let lat = lattice_data(a)?;
    check_r(&lat, r)?;
    point_set(&lat.coords, epsilon)
}

fn point_set(coords: &[Vec<i64>], epsilon: &[Rational]) -> Result<Vec<Vec<i64>>> {
    let r = coords[0].len();
    if epsilon.len() != r {
        return Err(Error::LengthMismatch { expected: r, got: epsilon.len() });
    }
    let facets = hull_facets(coords)?;
    let dil = (r + 1) as i64;
    let mut ranges = Vec::with_capacity(r);
    for k in 0..r {
        let lo = coords.iter().map(|p| p[k]).min().unwrap() * dil;
        let hi = coords.iter().map(|p| p[k]).max().unwrap() * dil;
        let lo = (Rational::from_integer(lo.into()) + &epsilon[k]).ceil().to_integer().to_i64().unwrap();
        let hi = (Rational::from_integer(hi.into()) + &epsilon[k]).floor().to_integer().to_i64().unwrap();
        ranges.push(lo..=hi);
    }
    let mut out = Vec::new();
    let mut cur = vec![0i64; r];
    enumerate_box(&ranges, 0, &mut cur, &mut |x| {
        let mut inside = true;
        for (av, b) in &facets {
            let mut v = Rational::from_integer(BigInt::from(b * dil as i128));
            for j in 0..r {
                v += Rational::from_integer(BigInt::from(av[j])) * (Rational::from_integer(x[j].into()) - &epsilon[j]);
            }
            if v.is_zero() {
                return Err(Error::NonGenericEpsilon(x.to_vec()));
            }
            if v.is_negative() {
                inside = false;
            }
        }
        if inside {
            out.push(x.to_vec());
        }
        Ok(())
    })?;
    Ok(out)
}

fn enumerate_box(
    ranges: &[std::ops::RangeInclusive<i64>],
    k: usize,
    cur: &mut Vec<i64>,
    f: &mut dyn FnMut(&[i64]) -> Result<()>,
) -> Result<()> {
    if k == ranges.len() {
        return f(cur);
    }
    for v in ranges[k].clone() {
        cur[k] = v;
        enumerate_box(ranges, k + 1, cur, f)?;
    }
    Ok(())
}

/// Default shift: `ε_k = 1/m^(k+1)` with `m = 2(r+1)D + 1`, where `D`
/// bounds the lattice coordinates.
pub fn default_epsilon(a: &SupportSet) -> Result<Vec<Rational>> {
    let lat = lattice_data(a)?;
    let big_d = lat.coords.iter().flatten().map(|x| x.unsigned_abs()).max().unwrap_or(0) + 1;
    let m = BigInt::from(2 * (lat.r as u64 + 1) * big_d + 1);
    Ok((0..lat.r).map(|k| Rational::new(BigInt::one(), num_traits::pow(m.clone(), k + 1))).collect())
}

fn random_epsilon(r: usize, m: u64, rng: &mut ChaCha8Rng) -> Vec<Rational> {
    (0..r)
        .map(|k| Rational::new(BigInt::from(rng.random_range(1..m)), num_traits::pow(BigInt::from(m), k + 1)))
        .collect()
}

struct LpOutcome {
    values: Vec<Rational>,
    degenerate_point: bool,
    tied_optimum: bool,
}

/// Exact two-phase simplex with Bland's rule for `min c·x, Ax = b, x ≥ 0`.
fn lp_min(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> Option<LpOutcome> {
    let m = a.len();
    let nv = c.len();
    let width = nv + m + 1;
    let mut t: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let neg = b[i].is_negative();
            let mut row = vec![Rational::zero(); width];
            for j in 0..nv {
                row[j] = if neg { -a[i][j].clone() } else { a[i][j].clone() };
            }
            row[nv + i] = Rational::one();
            row[width - 1] = b[i].abs();
            row
        })
        .collect();
    let mut basis: Vec<usize> = (nv..nv + m).collect();

    let mut obj = vec![Rational::zero(); width];
    for row in &t {
        for j in 0..nv {
            obj[j] -= &row[j];
        }
        obj[width - 1] -= &row[width - 1];
    }
    run_simplex(&mut t, &mut basis, &mut obj, nv + m);
    if !obj[width - 1].is_zero() {
        return None;
    }
    // drive artificials out of the basis; drop redundant rows
    let mut i = 0;
    while i < t.len() {
        if basis[i] >= nv {
            match (0..nv).find(|&j| !t[i][j].is_zero()) {
                Some(j) => pivot(&mut t, &mut obj, &mut basis, i, j),
                None => {
                    t.remove(i);
                    basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }
    let mut obj = vec![Rational::zero(); width];
    obj[..nv].clone_from_slice(c);
    for (row, &bv) in t.iter().zip(&basis) {
        let cb = c[bv].clone();
        if cb.is_zero() {
            continue;
        }
        for j in 0..width {
            obj[j] -= &cb * &row[j];
        }
    }
    run_simplex(&mut t, &mut basis, &mut obj, nv);
    let mut values = vec![Rational::zero(); nv];
    let mut degenerate_point = false;
    for (row, &bv) in t.iter().zip(&basis) {
        if row[width - 1].is_zero() {
            degenerate_point = true;
        }
        values[bv] = row[width - 1].clone();
    }
    let tied_optimum = (0..nv).any(|j| !basis.contains(&j) && obj[j].is_zero());
    Some(LpOutcome { values, degenerate_point, tied_optimum })
}

fn pivot(t: &mut [Vec<Rational>], obj: &mut [Rational], basis: &mut [usize], r: usize, c: usize) {
    let p = t[r][c].clone();
    t[r].iter_mut().for_each(|x| *x /= &p);
    let prow = t[r].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i == r || row[c].is_zero() {
            continue;
        }
        let f = row[c].clone();
        for (x, y) in row.iter_mut().zip(&prow) {
            *x -= &f * y;
        }
    }
    if !obj[c].is_zero() {
        let f = obj[c].clone();
        for (x, y) in obj.iter_mut().zip(&prow) {
            *x -= &f * y;
        }
    }
    basis[r] = c;
}

fn run_simplex(t: &mut [Vec<Rational>], basis: &mut [usize], obj: &mut [Rational], allowed: usize) {
    let rhs = obj.len() - 1;
    while let Some(j) = (0..allowed).find(|&j| obj[j].is_negative()) {
        let mut best: Option<(Rational, usize)> = None;
        for (i, row) in t.iter().enumerate() {
            if row[j].is_positive() {
                let ratio = &row[rhs] / &row[j];
                let better = match &best {
                    None => true,
                    Some((q, bi)) => ratio < *q || (ratio == *q && basis[i] < basis[*bi]),
                };
                if better {
                    best = Some((ratio, i));
                }
            }
        }
        // the feasible region is a product of simplices, hence bounded
        let (_, i) = best.expect("bounded linear program");
        pivot(t, obj, basis, i, j);
    }
}

/// Builds the symbolic Canny–Emiris matrix. `epsilon = None` starts from
/// [`default_epsilon`] and redraws the shift from the seed when a lattice
/// point falls on a cell boundary.
pub fn ce_matrix(a: &SupportSet, r: usize, epsilon: Option<&[Rational]>, lifting_seed: u64) -> Result<CeMatrixSpec> {
    let lat = lattice_data(a)?;
    check_r(&lat, r)?;
    let mut rng = ChaCha8Rng::seed_from_u64(lifting_seed);
    let nsup = lat.coords.len();
    let lifting: Vec<Vec<i64>> = (0..=r).map(|_| (0..nsup).map(|_| rng.random_range(0..1i64 << 20)).collect()).collect();
    match epsilon {
        Some(eps) => build(&lat, r, eps.to_vec(), &lifting, lifting_seed),
        None => {
            let mut eps = default_epsilon(a)?;
            let big_d = lat.coords.iter().flatten().map(|x| x.unsigned_abs()).max().unwrap_or(0) + 1;
            let m = 2 * (r as u64 + 1) * big_d + 1;
            let mut last = None;
            for _ in 0..16 {
                match build(&lat, r, eps.clone(), &lifting, lifting_seed) {
                    Err(e @ Error::NonGenericEpsilon(_)) => {
                        last = Some(e);
                        eps = random_epsilon(r, m, &mut rng);
                    }
                    other => return other,
                }
            }
            Err(last.expect("at least one attempt"))
        }
    }
}

/// [`ce_matrix`] with fresh lifting seeds after degenerate liftings.
pub fn ce_matrix_retrying(a: &SupportSet, r: usize, epsilon: Option<&[Rational]>, seed: u64, tries: u64) -> Result<CeMatrixSpec> {
    let mut last = Error::DegenerateLifting("no attempt made".into());
    for k in 0..tries.max(1) {
        match ce_matrix(a, r, epsilon, seed.wrapping_add(k)) {
            Err(e @ Error::DegenerateLifting(_)) => last = e,
            other => return other,
        }
    }
    Err(last)
}

fn build(lat: &LatticeData, r: usize, epsilon: Vec<Rational>, lifting: &[Vec<i64>], seed: u64) -> Result<CeMatrixSpec> {
    let coords = &lat.coords;
    let nsup = coords.len();
    let points = point_set(coords, &epsilon)?;
    let index: HashMap<&[i64], usize> = points.iter().enumerate().map(|(k, p)| (p.as_slice(), k)).collect();

    // constraint matrix: r coordinate rows, then r+1 convexity rows
    let nv = (r + 1) * nsup;
    let mut cons = vec![vec![Rational::zero(); nv]; 2 * r + 1];
    let mut cost = vec![Rational::zero(); nv];
    for i in 0..=r {
        for (k, alpha) in coords.iter().enumerate() {
            let col = i * nsup + k;
            for j in 0..r {
                cons[j][col] = Rational::from_integer(alpha[j].into());
            }
            cons[r + i][col] = Rational::one();
            cost[col] = Rational::from_integer(lifting[i][k].into());
        }
    }

    let mut rows = Vec::with_capacity(points.len());
    let mut entries = Vec::with_capacity(points.len());
    for p in &points {
        let mut rhs: Vec<Rational> = (0..r).map(|j| Rational::from_integer(p[j].into()) - &epsilon[j]).collect();
        rhs.extend((0..=r).map(|_| Rational::one()));
        let lp = lp_min(&cons, &rhs, &cost).ok_or_else(|| Error::DegenerateLifting(format!("point {p:?} outside (r+1)Q + eps")))?;
        if lp.degenerate_point {
            return Err(Error::NonGenericEpsilon(p.clone()));
        }
        if lp.tied_optimum {
            return Err(Error::DegenerateLifting(format!("tied lifted cells at {p:?}")));
        }
        let cells: Vec<Vec<usize>> =
            (0..=r).map(|i| (0..nsup).filter(|&k| lp.values[i * nsup + k].is_positive()).collect()).collect();
        let poly = (0..=r)
            .rev()
            .find(|&i| cells[i].len() == 1)
            .ok_or_else(|| Error::DegenerateLifting(format!("cell at {p:?} has no vertex summand")))?;
        let vertex = coords[cells[poly][0]].clone();
        let mut row = vec![None; points.len()];
        for (k, alpha) in coords.iter().enumerate() {
            let q: Vec<i64> = (0..r).map(|j| p[j] - vertex[j] + alpha[j]).collect();
            let col = *index
                .get(q.as_slice())
                .ok_or_else(|| Error::DegenerateLifting(format!("shifted support of row {p:?} leaves E")))?;
            row[col] = Some((poly, k));
        }
        rows.push(RowContent { poly, vertex });
        entries.push(row);
    }
    Ok(CeMatrixSpec {
        r,
        order: points.len(),
        support: coords.clone(),
        points,
        rows,
        entries,
        epsilon,
        lifting_seed: seed,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResultantCheck {
    #[serde(serialize_with = "ser_rational")]
    pub det: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub resultant: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub quotient: Rational,
    /// `det / resultant` is an integer.
    pub divisible: bool,
}

fn ser_rational<S: serde::Serializer>(v: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// For univariate supports: the determinant of the specialized matrix next
/// to the classical resultant of `f_i = Σ_k values[i][k]·y^{support[k]}`.
pub fn ce_resultant_check(spec: &CeMatrixSpec, values: &[Vec<Rational>]) -> Result<ResultantCheck> {
    if spec.r != 1 {
        return Err(Error::InvalidArgument("resultant comparison is implemented for univariate supports".into()));
    }
    let det = spec.specialize(values)?.det();
    let deg = spec.support.iter().map(|a| a[0]).max().unwrap_or(0) as usize;
    let polys: Vec<UniPoly> = values
        .iter()
        .map(|v| {
            let mut c = vec![Rational::zero(); deg + 1];
            for (k, a) in spec.support.iter().enumerate() {
                c[a[0] as usize] = v[k].clone();
            }
            UniPoly::new(c)
        })
        .collect();
    if polys.iter().any(|p| p.degree() != Some(deg)) {
        return Err(Error::ZeroResultant);
    }
    let resultant = polys[0].resultant(&polys[1]);
    if resultant.is_zero() {
        return Err(Error::ZeroResultant);
    }
    let quotient = &det / &resultant;
    Ok(ResultantCheck { divisible: quotient.is_integer(), det, resultant, quotient })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResultantSuite {
    pub checks: Vec<ResultantCheck>,
    /// Exponents `e_{ik}` with `|det / Res| = Π |U_{ik}|^{e_{ik}}` on every
    /// specialization, when such a monomial exists.
    pub monomial_exponents: Option<Vec<Vec<u32>>>,
    pub all_divisible: bool,
}

/// Runs [`ce_resultant_check`] on `trials` specializations whose entries are
/// distinct primes with random signs, so the quotient's factorization reads
/// off a monomial in the coefficients.
pub fn ce_resultant_suite(spec: &CeMatrixSpec, trials: usize, seed: u64) -> Result<ResultantSuite> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nsup = spec.support.len();
    let mut checks = Vec::new();
    let mut exponents: Option<Vec<Vec<u32>>> = None;
    let mut consistent = true;
    let mut attempts = 0;
    while checks.len() < trials {
        attempts += 1;
        if attempts > 16 * trials.max(1) {
            return Err(Error::RetriesExhausted("resultant vanished on every specialization".into()));
        }
        let mut primes: Vec<BigInt> = Vec::new();
        while primes.len() < (spec.r + 1) * nsup {
            let c = BigInt::from(rng.random_range(2u64..500));
            if is_prime(&c) && !primes.contains(&c) {
                primes.push(c);
            }
        }
        let values: Vec<Vec<Rational>> = (0..=spec.r)
            .map(|i| {
                (0..nsup)
                    .map(|k| {
                        let p = primes[i * nsup + k].clone();
                        Rational::from_integer(if rng.random_bool(0.5) { -p } else { p })
                    })
                    .collect()
            })
            .collect();
        let check = match ce_resultant_check(spec, &values) {
            Err(Error::ZeroResultant) => continue,
            other => other?,
        };
        if check.divisible {
            let mut rest = check.quotient.to_integer().abs();
            let e: Vec<Vec<u32>> = (0..=spec.r)
                .map(|i| {
                    (0..nsup)
                        .map(|k| {
                            let p = &primes[i * nsup + k];
                            let v = if rest.is_zero() { 0 } else { valuation(&rest, p) };
                            rest = rest.div_floor(&num_traits::pow(p.clone(), v as usize));
                            v
                        })
                        .collect()
                })
                .collect();
            if !rest.is_one() {
                consistent = false;
            }
            match &exponents {
                None => exponents = Some(e),
                Some(prev) if *prev != e => consistent = false,
                _ => {}
            }
        } else {
            consistent = false;
        }
        checks.push(check);
    }
    let all_divisible = checks.iter().all(|c| c.divisible);
    Ok(ResultantSuite { checks, monomial_exponents: if consistent { exponents } else { None }, all_divisible })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::normalized_volume;
    use crate::poly::ratio;
    use crate::poly::univariate::sylvester_matrix;

    fn dense(d: i64) -> SupportSet {
        SupportSet::new(1, (0..=d).map(|k| vec![k]).collect()).unwrap()
    }

    #[test]
    fn interval_point_set() {
        let a = dense(1);
        assert_eq!(ce_point_set(&a, &[ratio(1, 3)], 1).unwrap(), vec![vec![1], vec![2]]);
        assert!(matches!(ce_point_set(&a, &[ratio(0, 1)], 1), Err(Error::NonGenericEpsilon(_))));
    }

    #[test]
    fn univariate_matrix_is_sylvester_shaped() {
        for d in 1..=3 {
            let a = dense(d);
            let spec = ce_matrix_retrying(&a, 1, None, 7, 8).unwrap();
            assert_eq!(spec.order, 2 * d as usize);
            assert!(spec.nonzero_per_row().iter().all(|&c| c == d as usize + 1));
            for (row, content) in spec.entries.iter().zip(&spec.rows) {
                let ks: Vec<usize> = row.iter().flatten().map(|&(i, k)| {
                    assert_eq!(i, content.poly);
                    k
                }).collect();
                assert_eq!(ks, (0..=d as usize).collect::<Vec<_>>());
            }
            assert!(spec.order as u64 <= 4 * normalized_volume(&a).unwrap());
        }
    }

    #[test]
    fn determinant_against_sylvester() {
        let a = dense(2);
        let spec = ce_matrix_retrying(&a, 1, None, 3, 8).unwrap();
        let f = UniPoly::from_ints(&[-1, 0, 1]);
        let g = UniPoly::from_ints(&[-4, 0, 1]);
        let values = vec![f.coeffs().to_vec(), g.coeffs().to_vec()];
        let chk = ce_resultant_check(&spec, &values).unwrap();
        assert_eq!(chk.resultant, Rational::from_integer(9.into()));
        assert_eq!(chk.resultant.abs(), sylvester_matrix(&f, &g).det().abs());
        assert!(chk.divisible);
        let same = vec![f.coeffs().to_vec(), f.coeffs().to_vec()];
        assert_eq!(ce_resultant_check(&spec, &same).unwrap_err(), Error::ZeroResultant);
    }

    #[test]
    fn suite_finds_consistent_monomial() {
        for d in 1..=3 {
            let spec = ce_matrix_retrying(&dense(d), 1, None, 11, 8).unwrap();
            let suite = ce_resultant_suite(&spec, 5, 1).unwrap();
            assert!(suite.all_divisible);
            assert!(suite.monomial_exponents.is_some());
        }
    }

    #[test]
    fn two_dimensional_rows_have_full_support() {
        let a = SupportSet::new(2, vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        let spec = ce_matrix_retrying(&a, 2, None, 5, 16).unwrap();
        assert!(spec.nonzero_per_row().iter().all(|&c| c == 4));
        assert!(spec.order as u64 <= 16 * normalized_volume(&a).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let values: Vec<Vec<Rational>> =
            (0..3).map(|_| (0..4).map(|_| Rational::from_integer(rng.random_range(-50i64..50).into())).collect()).collect();
        assert!(!spec.specialize(&values).unwrap().det().is_zero());
    }
}
