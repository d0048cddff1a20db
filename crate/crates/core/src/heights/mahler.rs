//! Mahler measures: exact univariate (Jensen/Lehmer) and Monte Carlo over
//! the torus or products of complex unit spheres.
//!
//! Monte Carlo runs in fixed batches of [`BATCH`] samples. Batch `k` draws
//! from a ChaCha8 stream seeded by the master seed with stream id `k`, and
//! batch sums are combined in batch order, so results are bit-stable for a
//! given seed regardless of thread count.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{rat_ln, rat_to_f64};
use crate::poly::univariate::UniPoly;
use crate::poly::MultiPoly;

/// Samples per deterministic batch.
pub const BATCH: u64 = 10_000;
/// Default Monte Carlo sample count.
pub const DEFAULT_SAMPLES: u64 = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MahlerMethod {
    JensenExact,
    TorusMc,
    SphereMc,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MahlerEstimate {
    pub value: f64,
    pub stderr: f64,
    pub samples: u64,
    pub method: MahlerMethod,
}

/// Roots of a squarefree polynomial by Aberth–Ehrlich iteration.
pub fn aberth_roots(p: &UniPoly, precision: f64) -> Vec<Complex64> {
    let deg = p.degree().unwrap_or(0);
    if deg == 0 {
        return Vec::new();
    }
    let monic = p.monic();
    let c: Vec<Complex64> = monic.to_f64().into_iter().map(|x| Complex64::new(x, 0.0)).collect();
    let dc: Vec<Complex64> = (1..c.len()).map(|k| c[k] * k as f64).collect();
    let horner = |coeffs: &[Complex64], z: Complex64| coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |a, &b| a * z + b);

    // initial guesses on a circle of the Cauchy-type radius, slightly rotated
    let radius = 1.0 + c[..deg].iter().map(|z| z.norm()).fold(0.0, f64::max);
    let r0 = radius.min(
        c[..deg]
            .iter()
            .enumerate()
            .map(|(k, z)| z.norm().powf(1.0 / (deg - k) as f64))
            .fold(0.0, f64::max)
            .max(1e-3)
            * 1.1,
    );
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| Complex64::from_polar(r0, 2.0 * std::f64::consts::PI * k as f64 / deg as f64 + 0.4))
        .collect();
    for _ in 0..500 {
        let mut max_step: f64 = 0.0;
        for i in 0..deg {
            let pv = horner(&c, z[i]);
            if pv.norm() == 0.0 {
                continue;
            }
            let ratio = pv / horner(&dc, z[i]);
            let repulsion: Complex64 = (0..deg).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / z[i].norm().max(1.0));
            }
        }
        if max_step < precision * 1e-3 {
            break;
        }
    }
    // Newton polish
    for zi in z.iter_mut() {
        for _ in 0..3 {
            let d = horner(&dc, *zi);
            if d.norm() == 0.0 {
                break;
            }
            let step = horner(&c, *zi) / d;
            if step.is_finite() {
                *zi -= step;
            }
        }
    }
    z
}

/// `m(f) = log|lead| + Σ log⁺|α|` with roots found per squarefree factor.
pub fn mahler_univariate_exact(f: &MultiPoly, precision: f64) -> Result<MahlerEstimate> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let u = UniPoly::from_multi(f)?;
    let lead = u.leading().expect("nonzero");
    let mut value = rat_ln(lead);
    for (mult, factor) in u.squarefree_decomposition() {
        let roots = aberth_roots(&factor, precision);
        let s: f64 = roots.iter().map(|r| r.norm().ln().max(0.0)).sum();
        value += mult as f64 * s;
    }
    Ok(MahlerEstimate { value, stderr: 0.0, samples: 0, method: MahlerMethod::JensenExact })
}

/// Polynomial compiled to floating point for fast evaluation.
struct Compiled {
    nvars: usize,
    max_exp: Vec<usize>,
    terms: Vec<(Complex64, Vec<u32>)>,
}

impl Compiled {
    fn new(f: &MultiPoly) -> Self {
        let nvars = f.nvars();
        let max_exp = (0..nvars).map(|i| f.degree_in(i).unwrap_or(0) as usize).collect();
        let terms = f
            .terms()
            .map(|(m, c)| (Complex64::new(rat_to_f64(c), 0.0), m.exponents().to_vec()))
            .collect();
        Compiled { nvars, max_exp, terms }
    }

    fn log_abs(&self, z: &[Complex64], powers: &mut [Vec<Complex64>]) -> f64 {
        for i in 0..self.nvars {
            let p = &mut powers[i];
            p[0] = Complex64::new(1.0, 0.0);
            for k in 1..=self.max_exp[i] {
                p[k] = p[k - 1] * z[i];
            }
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (c, e) in &self.terms {
            let mut t = *c;
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t *= powers[i][k as usize];
                }
            }
            acc += t;
        }
        acc.norm().ln()
    }
}

/// Runs `samples` draws of `log|f(point)|` in deterministic batches; `draw`
/// fills a point from the batch RNG.
fn run_batches<F>(f: &MultiPoly, samples: u64, seed: u64, draw: F) -> (f64, f64)
where
    F: Fn(&mut ChaCha8Rng, &mut [Complex64]) + Sync,
{
    let compiled = Compiled::new(f);
    let nbatches = samples.div_ceil(BATCH);
    let sums: Vec<(f64, f64)> = (0..nbatches)
        .into_par_iter()
        .map(|b| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(b);
            let count = BATCH.min(samples - b * BATCH);
            let mut z = vec![Complex64::new(0.0, 0.0); compiled.nvars];
            let mut powers: Vec<Vec<Complex64>> =
                compiled.max_exp.iter().map(|&m| vec![Complex64::new(0.0, 0.0); m + 1]).collect();
            let (mut s1, mut s2) = (0.0, 0.0);
            for _ in 0..count {
                // zeros are a null set; redraw if one is hit exactly
                let v = loop {
                    draw(&mut rng, &mut z);
                    let v = compiled.log_abs(&z, &mut powers);
                    if v.is_finite() {
                        break v;
                    }
                };
                s1 += v;
                s2 += v * v;
            }
            (s1, s2)
        })
        .collect();
    let (s1, s2) = sums.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x, b + y));
    let n = samples as f64;
    let mean = s1 / n;
    let var = ((s2 / n) - mean * mean).max(0.0) * n / (n - 1.0).max(1.0);
    (mean, (var / n).sqrt())
}

/// Monte Carlo average of `log|f|` over the unit torus.
pub fn mahler_torus_mc(f: &MultiPoly, samples: u64, seed: u64) -> Result<MahlerEstimate> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if samples == 0 {
        return Err(Error::InvalidArgument("sample count must be positive".into()));
    }
    let (value, stderr) = run_batches(f, samples, seed, |rng, z| {
        for zi in z.iter_mut() {
            let t: f64 = rng.random();
            *zi = Complex64::from_polar(1.0, std::f64::consts::TAU * t);
        }
    });
    Ok(MahlerEstimate { value, stderr, samples, method: MahlerMethod::TorusMc })
}

/// Monte Carlo average of `log|f|` over `S_n^r`, the variables read as `r`
/// consecutive groups of `n` complex coordinates.
pub fn mahler_sphere_mc(f: &MultiPoly, groups: usize, group_size: usize, samples: u64, seed: u64) -> Result<MahlerEstimate> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.nvars() != groups * group_size {
        return Err(Error::VarCountMismatch { left: f.nvars(), right: groups * group_size });
    }
    if samples == 0 {
        return Err(Error::InvalidArgument("sample count must be positive".into()));
    }
    let (value, stderr) = run_batches(f, samples, seed, |rng, z| {
        for block in z.chunks_mut(group_size) {
            let mut norm2 = 0.0;
            for zi in block.iter_mut() {
                let re: f64 = rng.sample(StandardNormal);
                let im: f64 = rng.sample(StandardNormal);
                *zi = Complex64::new(re, im);
                norm2 += re * re + im * im;
            }
            let inv = norm2.sqrt().recip();
            for zi in block.iter_mut() {
                *zi *= inv;
            }
        }
    });
    Ok(MahlerEstimate { value, stderr, samples, method: MahlerMethod::SphereMc })
}

/// Exact path for univariate input, torus Monte Carlo otherwise.
pub fn mahler_auto(f: &MultiPoly, samples: u64, seed: u64) -> Result<MahlerEstimate> {
    if f.occurring_vars().len() <= 1 {
        mahler_univariate_exact(f, 1e-12)
    } else {
        mahler_torus_mc(f, samples, seed)
    }
}
