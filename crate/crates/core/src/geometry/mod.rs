//! Supports, lattice reduction, normalized volumes and toric bounds.

pub mod bounds;
pub mod canny_emiris;

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::logexpr::LogLinear;
use crate::poly::MultiPoly;

pub use bounds::{bound, BoundInputs, BoundReport, BoundValue, STATEMENTS};
pub use canny_emiris::{ce_matrix, ce_point_set, ce_resultant_check, CeMatrixSpec, ResultantCheck};

/// A finite set of exponent vectors in `Z^n`, sorted and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupportSet {
    pub n: usize,
    pub points: Vec<Vec<i64>>,
}

impl SupportSet {
    pub fn new(n: usize, points: Vec<Vec<i64>>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyInput);
        }
        for p in &points {
            if p.len() != n {
                return Err(Error::LengthMismatch { expected: n, got: p.len() });
            }
        }
        let set: BTreeSet<Vec<i64>> = points.into_iter().collect();
        Ok(SupportSet { n, points: set.into_iter().collect() })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains_origin(&self) -> bool {
        self.points.iter().any(|p| p.iter().all(|&c| c == 0))
    }

    /// Largest total degree among the points.
    pub fn max_degree(&self) -> i64 {
        self.points.iter().map(|p| p.iter().sum::<i64>()).max().unwrap_or(0)
    }

    /// `P_d = Conv(0, e_1, …, e_n, d·(e_1+⋯+e_n))`, given by its vertices.
    pub fn sparse_example(n: usize, d: i64) -> Self {
        let mut pts = vec![vec![0; n], vec![d; n]];
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            pts.push(e);
        }
        SupportSet::new(n, pts).expect("nonempty")
    }
}

/// Union of the supports, optionally with `0, e_1, …, e_n` adjoined.
pub fn support(fs: &[MultiPoly], include_affine_frame: bool) -> Result<SupportSet> {
    let first = fs.first().ok_or(Error::EmptyInput)?;
    let n = first.nvars();
    let mut pts = Vec::new();
    for f in fs {
        if f.nvars() != n {
            return Err(Error::VarCountMismatch { left: n, right: f.nvars() });
        }
        pts.extend(f.support().into_iter().map(|e| e.into_iter().map(i64::from).collect::<Vec<_>>()));
    }
    if include_affine_frame {
        pts.push(vec![0; n]);
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            pts.push(e);
        }
    }
    if pts.is_empty() {
        // the zero polynomial has empty support
        return Err(Error::ZeroPolynomial);
    }
    SupportSet::new(n, pts)
}

/// The lattice `Z·(A − a_0)` with a Hermite basis and the coordinates of
/// every point of `A` in that basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeData {
    pub r: usize,
    pub origin: Vec<i64>,
    pub basis: Vec<Vec<i64>>,
    pub coords: Vec<Vec<i64>>,
}

fn overflow() -> Error {
    Error::InvalidArgument("lattice coordinates overflow 64-bit integers".into())
}

fn to_i64(x: i128) -> Result<i64> {
    i64::try_from(x).map_err(|_| overflow())
}

/// Row Hermite normal form of an integer matrix; returns the nonzero rows.
fn hermite_rows(mut rows: Vec<Vec<i128>>, ncols: usize) -> Vec<Vec<i128>> {
    let mut rank = 0;
    for col in 0..ncols {
        loop {
            let nonzero: Vec<usize> = (rank..rows.len()).filter(|&i| rows[i][col] != 0).collect();
            if nonzero.is_empty() {
                break;
            }
            let piv = *nonzero.iter().min_by_key(|&&i| rows[i][col].abs()).unwrap();
            rows.swap(rank, piv);
            let mut done = true;
            for i in rank + 1..rows.len() {
                let q = rows[i][col].div_euclid(rows[rank][col]);
                if q != 0 {
                    let pivot_row = rows[rank].clone();
                    for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                        *x -= q * y;
                    }
                }
                if rows[i][col] != 0 {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if rank < rows.len() && rows[rank][col] != 0 {
            if rows[rank][col] < 0 {
                rows[rank].iter_mut().for_each(|x| *x = -*x);
            }
            for i in 0..rank {
                let q = rows[i][col].div_euclid(rows[rank][col]);
                if q != 0 {
                    let pivot_row = rows[rank].clone();
                    for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                        *x -= q * y;
                    }
                }
            }
            rank += 1;
        }
    }
    rows.truncate(rank);
    rows
}

pub fn lattice_data(a: &SupportSet) -> Result<LatticeData> {
    let origin = a.points[0].clone();
    let diffs: Vec<Vec<i128>> = a
        .points
        .iter()
        .map(|p| p.iter().zip(&origin).map(|(x, o)| *x as i128 - *o as i128).collect())
        .collect();
    let basis = hermite_rows(diffs.clone(), a.n);
    let pivots: Vec<usize> = basis.iter().map(|b| b.iter().position(|&x| x != 0).unwrap()).collect();
    let mut coords = Vec::with_capacity(diffs.len());
    for d in &diffs {
        let mut res = d.clone();
        let mut c = Vec::with_capacity(basis.len());
        for (b, &pc) in basis.iter().zip(&pivots) {
            let q = res[pc] / b[pc];
            debug_assert_eq!(res[pc] % b[pc], 0);
            for (x, y) in res.iter_mut().zip(b) {
                *x -= q * y;
            }
            c.push(to_i64(q)?);
        }
        debug_assert!(res.iter().all(|&x| x == 0));
        coords.push(c);
    }
    Ok(LatticeData {
        r: basis.len(),
        origin,
        basis: basis.into_iter().map(|b| b.into_iter().map(to_i64).collect::<Result<Vec<_>>>()).collect::<Result<_>>()?,
        coords,
    })
}

/// Determinant of a small square integer matrix by cofactor expansion.
pub(crate) fn small_det(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        k => (0..k)
            .map(|j| {
                let minor: Vec<Vec<i128>> =
                    m[1..].iter().map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect()).collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * small_det(&minor)
            })
            .sum(),
    }
}

fn edge_det(vertices: &[&[i64]]) -> i128 {
    let base = vertices[0];
    let m: Vec<Vec<i128>> = vertices[1..]
        .iter()
        .map(|v| v.iter().zip(base).map(|(x, b)| *x as i128 - *b as i128).collect())
        .collect();
    small_det(&m)
}

/// Lexicographic placing triangulation of full-dimensional points in `Z^r`.
/// Returns simplices as sorted index lists into `pts`.
pub fn placing_triangulation(pts: &[Vec<i64>]) -> Result<Vec<Vec<usize>>> {
    let r = pts.first().map_or(0, |p| p.len());
    if r > 3 {
        return Err(Error::DimensionTooHigh(r));
    }
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by(|&i, &j| pts[i].cmp(&pts[j]));

    // initial simplex: first affinely independent points in lex order
    let mut simplex = vec![order[0]];
    for &i in &order[1..] {
        if simplex.len() == r + 1 {
            break;
        }
        let mut cand: Vec<Vec<i128>> = simplex[1..]
            .iter()
            .chain(std::iter::once(&i))
            .map(|&k| pts[k].iter().zip(&pts[simplex[0]]).map(|(x, b)| *x as i128 - *b as i128).collect())
            .collect();
        if rank_i128(&mut cand) == simplex.len() {
            simplex.push(i);
        }
    }
    if simplex.len() != r + 1 {
        return Err(Error::InvalidArgument("points do not span the ambient lattice".into()));
    }
    let mut cells: Vec<Vec<usize>> = vec![sorted(simplex.clone())];
    for &p in &order {
        if simplex.contains(&p) {
            continue;
        }
        let mut facets: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for cell in &cells {
            for &opp in cell {
                let facet: Vec<usize> = cell.iter().copied().filter(|&v| v != opp).collect();
                facets.entry(facet).or_default().push(opp);
            }
        }
        let mut added = Vec::new();
        for (facet, opps) in &facets {
            if opps.len() != 1 {
                continue;
            }
            let orient = |q: usize| {
                let mut vs: Vec<&[i64]> = facet.iter().map(|&v| pts[v].as_slice()).collect();
                vs.push(&pts[q]);
                edge_det(&vs).signum()
            };
            if orient(p) * orient(opps[0]) < 0 {
                let mut c = facet.clone();
                c.push(p);
                added.push(sorted(c));
            }
        }
        cells.extend(added);
    }
    Ok(cells)
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

fn rank_i128(rows: &mut [Vec<i128>]) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    hermite_rows(rows.to_vec(), ncols).len()
}

/// Normalized volume with respect to the lattice `Z·A`: every elementary
/// simplex of that lattice has volume 1. Zero when `A` is a single point.
pub fn normalized_volume(a: &SupportSet) -> Result<u64> {
    let lat = lattice_data(a)?;
    if lat.r == 0 {
        return Ok(0);
    }
    let cells = placing_triangulation(&lat.coords)?;
    let mut vol: i128 = 0;
    for c in &cells {
        let vs: Vec<&[i64]> = c.iter().map(|&i| lat.coords[i].as_slice()).collect();
        vol += edge_det(&vs).abs();
    }
    u64::try_from(vol).map_err(|_| overflow())
}

/// Degree and height bounds for the variety of a polynomial system in terms
/// of the normalized volume of its framed support.
pub fn bk_bounds(fs: &[MultiPoly], h: &LogLinear) -> Result<BoundReport> {
    let a = support(fs, true)?;
    let vol = normalized_volume(&a)?;
    let d = fs.iter().map(|f| f.degree_or_zero()).max().unwrap_or(0) as u64;
    let inputs = BoundInputs { n: Some(a.n as u64), d: Some(d), h: Some(h.clone()), vol: Some(vol), ..Default::default() };
    bound("bernstein", &inputs)
}

/// Height bounds for the toric variety `X_A`, in terms of `#A` and in terms
/// of the ambient dimension and degree.
pub fn toric_height_bound(a: &SupportSet) -> Result<BoundReport> {
    if a.len() < 2 {
        return Err(Error::CardinalityTooSmall);
    }
    let lat = lattice_data(a)?;
    let vol = normalized_volume(a)?;
    let inputs = BoundInputs {
        n: Some(a.n as u64),
        d: Some(a.max_degree().max(0) as u64),
        r: Some(lat.r as u64),
        card: Some(a.len() as u64),
        vol: Some(vol),
        ..Default::default()
    };
    bound("toric", &inputs)
}

pub(crate) fn big(x: u64) -> BigInt {
    BigInt::from(x)
}
