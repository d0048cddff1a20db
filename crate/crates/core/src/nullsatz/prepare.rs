//! Generic integer combinations and coordinate changes, validated by
//! explicit fiber checks in the quotient algebra.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use super::{check_system, has_no_common_zero};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::logexpr::LogLinear;
use crate::poly::MultiPoly;
use crate::quotient::{is_radical, QuotientAlgebra};
use crate::Rational;

/// Entries are drawn from `[−COEFFICIENT_RANGE, COEFFICIENT_RANGE]`, well
/// inside the cap `log|a| ≤ 2(n+1) log(d+1)` for every `d ≥ 1`.
pub const COEFFICIENT_RANGE: i64 = 10;
pub const PREPARE_RETRIES: usize = 16;

#[derive(Clone, Debug, PartialEq)]
pub struct PreparedSystem {
    /// `t × s` combination matrix.
    pub combination: Vec<Vec<BigInt>>,
    /// `x ↦ B x + b`.
    pub change: Vec<Vec<BigInt>>,
    pub shift: Vec<BigInt>,
    pub polys: Vec<MultiPoly>,
    pub t: usize,
    pub attempts: usize,
    pub seed_used: u64,
    /// `log` of the largest entry, and the cap it is checked against.
    pub max_entry_log: LogLinear,
    pub cap: LogLinear,
    /// Dimension of each fiber algebra checked, `None` where the fiber is empty.
    pub fibers: Vec<Option<usize>>,
}

impl Serialize for PreparedSystem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let m = |rows: &[Vec<BigInt>]| -> Vec<Vec<String>> {
            rows.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
        };
        json!({
            "t": self.t,
            "combination": m(&self.combination),
            "change": m(&self.change),
            "shift": self.shift.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "polys": self.polys.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "attempts": self.attempts,
            "seed_used": self.seed_used,
            "max_entry_log": self.max_entry_log.to_f64(),
            "cap": self.cap.to_f64(),
            "fibers": self.fibers,
        })
        .serialize(s)
    }
}

fn to_matrix(rows: &[Vec<BigInt>]) -> Matrix {
    Matrix::from_rows(rows.iter().map(|r| r.iter().cloned().map(Rational::from_integer).collect()).collect())
}

fn identity(rows: usize, cols: usize) -> Vec<Vec<BigInt>> {
    (0..rows).map(|i| (0..cols).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

fn random_rows(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Vec<Vec<BigInt>> {
    (0..rows)
        .map(|_| (0..cols).map(|_| BigInt::from(rng.random_range(-COEFFICIENT_RANGE..=COEFFICIENT_RANGE))).collect())
        .collect()
}

/// Checks the fibres of `V(q_1..q_i)` over the origin of the last `n − i`
/// coordinates: each must be empty or a radical zero-dimensional algebra,
/// so that it has as many points as its dimension.
fn validate(qs: &[MultiPoly], n: usize, seed: u64) -> std::result::Result<Vec<Option<usize>>, String> {
    let mut fibers = Vec::new();
    for i in 1..=qs.len().min(n) {
        let mut sys: Vec<MultiPoly> = qs[..i].to_vec();
        sys.extend((i..n).map(|k| MultiPoly::var(k, n)));
        match QuotientAlgebra::new(&sys) {
            Ok(b) => {
                if !is_radical(&b, seed, 3) {
                    return Err(format!("fiber of q_1..q_{i} is not radical"));
                }
                fibers.push(Some(b.dim()));
            }
            Err(Error::UnitIdeal) => fibers.push(None),
            Err(Error::PositiveDimensional) => return Err(format!("fiber of q_1..q_{i} is positive-dimensional")),
            Err(e) => return Err(e.to_string()),
        }
    }
    Ok(fibers)
}

/// Integer combinations `q_i = Σ_j a_ij f_j(Bx + b)` with `t = min(n+1, s)`.
/// The identity is tried first when `s ≤ n + 1`; otherwise, and on failure,
/// entries are drawn at random and validated, up to [`PREPARE_RETRIES`] times.
pub fn prepare_system(fs: &[MultiPoly], seed: u64) -> Result<PreparedSystem> {
    let n = check_system(fs)?;
    let s = fs.len();
    let t = (n + 1).min(s);
    let d = fs.iter().map(MultiPoly::degree_or_zero).max().unwrap_or(0).max(1) as u64;
    let cap = LogLinear::log_u(d + 1).scale_int(2 * (n as i64 + 1));
    let empty = has_no_common_zero(fs)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last = String::from("no attempt made");
    let first_random = usize::from(t == s);
    for attempt in 0..PREPARE_RETRIES + first_random {
        let (combination, change, shift) = if attempt == 0 && t == s {
            (identity(t, s), identity(n, n), vec![BigInt::zero(); n])
        } else {
            let change = random_rows(&mut rng, n, n);
            let shift = random_rows(&mut rng, 1, n).remove(0);
            (random_rows(&mut rng, t, s), change, shift)
        };
        let bmat = to_matrix(&change);
        if bmat.det().is_zero() {
            last = "coordinate change is singular".into();
            continue;
        }
        let shift_q: Vec<Rational> = shift.iter().cloned().map(Rational::from_integer).collect();
        let moved = fs.iter().map(|f| f.substitute_affine(&bmat, &shift_q)).collect::<Result<Vec<_>>>()?;
        let polys: Vec<MultiPoly> = combination
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&moved)
                    .fold(MultiPoly::zero(n), |acc, (a, f)| acc + f.scale(&Rational::from_integer(a.clone())))
            })
            .collect();
        if polys.iter().any(MultiPoly::is_zero) {
            last = "a combination vanishes".into();
            continue;
        }
        if has_no_common_zero(&polys)? != empty {
            last = "combinations change the common zero set".into();
            continue;
        }
        match validate(&polys, n, seed.wrapping_add(attempt as u64)) {
            Ok(fibers) => {
                let top = combination
                    .iter()
                    .chain(&change)
                    .chain(std::iter::once(&shift))
                    .flatten()
                    .map(Signed::abs)
                    .max()
                    .unwrap_or_else(BigInt::zero)
                    .max(BigInt::one());
                return Ok(PreparedSystem {
                    combination,
                    change,
                    shift,
                    polys,
                    t,
                    attempts: attempt + 1,
                    seed_used: seed,
                    max_entry_log: LogLinear::log(&top),
                    cap,
                    fibers,
                });
            }
            Err(why) => last = why,
        }
    }
    Err(Error::RetriesExhausted(last))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_with_nvars;

    fn p(s: &str, n: usize) -> MultiPoly {
        parse_with_nvars(s, n).unwrap()
    }

    #[test]
    fn coordinate_hyperplanes_take_the_identity() {
        let r = prepare_system(&[p("x1", 2), p("x2", 2)], 0).unwrap();
        assert_eq!(r.attempts, 1);
        assert_eq!(r.combination, identity(2, 2));
        assert_eq!(r.fibers, vec![Some(1), Some(1)]);
    }

    #[test]
    fn three_polynomials_in_two_variables() {
        let r = prepare_system(&[p("x1^2", 2), p("x1 + x2", 2), p("x2 - 1", 2)], 0).unwrap();
        assert!(r.t <= 3);
        assert!(r.max_entry_log.to_f64() <= r.cap.to_f64());
        assert!(has_no_common_zero(&r.polys).unwrap());
    }

    #[test]
    fn retries_surface_the_condition() {
        // a double point stays non-radical under every change of coordinates
        let err = prepare_system(&[p("x1^2", 1)], 3).unwrap_err();
        assert!(matches!(err, Error::RetriesExhausted(ref m) if m.contains("not radical")), "{err}");
    }
}
