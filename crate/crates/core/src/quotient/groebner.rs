//! Reduced grevlex Gröbner bases by Buchberger's algorithm.

use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Monomial, MultiPoly};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GroebnerBasis {
    #[serde(serialize_with = "ser_polys")]
    pub generators: Vec<MultiPoly>,
    pub reduced: bool,
}

fn ser_polys<S: serde::Serializer>(v: &[MultiPoly], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|p| p.to_string()))
}

impl GroebnerBasis {
    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_constant() && !self.generators[0].is_zero()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators.iter().filter_map(|g| g.leading_monomial().cloned()).collect()
    }

    pub fn normal_form(&self, f: &MultiPoly) -> MultiPoly {
        normal_form(f, &self.generators)
    }

    pub fn contains(&self, f: &MultiPoly) -> bool {
        self.normal_form(f).is_zero()
    }
}

fn monic(f: &MultiPoly) -> MultiPoly {
    match f.leading_coeff() {
        Some(c) if !c.is_one() => f.scale(&(Rational::one() / c)),
        _ => f.clone(),
    }
}

/// Fully reduced remainder of `f` modulo `gs`.
pub fn normal_form(f: &MultiPoly, gs: &[MultiPoly]) -> MultiPoly {
    let mut p = f.clone();
    let mut rem = MultiPoly::zero(f.nvars());
    let leads: Vec<(Monomial, Rational)> =
        gs.iter().filter_map(|g| g.leading_term().map(|(m, c)| (m.clone(), c.clone()))).collect();
    while let Some((m, c)) = p.pop_leading() {
        match leads.iter().position(|(lm, _)| m.divides_by(lm)) {
            Some(k) => {
                let (lm, lc) = &leads[k];
                let shift = m.div(lm).expect("divisible");
                let factor = &c / lc;
                // the leading term cancels; subtract the tail only
                let mut tail = gs[k].clone();
                tail.pop_leading();
                p.sub_scaled_shift(&tail, &shift, &factor);
            }
            None => rem = rem + MultiPoly::monomial(m.exponents().to_vec(), c),
        }
    }
    rem
}

fn s_polynomial(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let (mf, cf) = f.leading_term().expect("nonzero");
    let (mg, cg) = g.leading_term().expect("nonzero");
    let l = mf.lcm(mg);
    let a = f.mul_term(&l.div(mf).unwrap(), &(Rational::one() / cf));
    let b = g.mul_term(&l.div(mg).unwrap(), &(Rational::one() / cg));
    a - b
}

fn coprime(a: &Monomial, b: &Monomial) -> bool {
    a.exponents().iter().zip(b.exponents()).all(|(x, y)| *x == 0 || *y == 0)
}

/// Reduced Gröbner basis for the grevlex order. Pairs are processed by the
/// normal strategy (smallest lcm first) with the coprime and chain criteria.
pub fn groebner(fs: &[MultiPoly]) -> Result<GroebnerBasis> {
    let first = fs.first().ok_or(Error::EmptyInput)?;
    let nvars = first.nvars();
    for f in fs {
        if f.nvars() != nvars {
            return Err(Error::VarCountMismatch { left: nvars, right: f.nvars() });
        }
    }
    let mut basis: Vec<MultiPoly> = Vec::new();
    let mut pairs: Vec<(usize, usize, Monomial)> = Vec::new();
    let add = |basis: &mut Vec<MultiPoly>, pairs: &mut Vec<(usize, usize, Monomial)>, h: MultiPoly| {
        let h = monic(&h);
        let k = basis.len();
        let lh = h.leading_monomial().unwrap().clone();
        for (i, g) in basis.iter().enumerate() {
            pairs.push((i, k, g.leading_monomial().unwrap().lcm(&lh)));
        }
        basis.push(h);
    };
    for f in fs {
        let r = normal_form(f, &basis);
        if !r.is_zero() {
            add(&mut basis, &mut pairs, r);
        }
    }
    while !pairs.is_empty() {
        let pos = (0..pairs.len()).min_by(|&a, &b| pairs[a].2.cmp(&pairs[b].2).then(a.cmp(&b))).unwrap();
        let (i, j, l) = pairs.remove(pos);
        let li = basis[i].leading_monomial().unwrap().clone();
        let lj = basis[j].leading_monomial().unwrap().clone();
        if coprime(&li, &lj) {
            continue;
        }
        let has_pair = |a: usize, b: usize, pairs: &[(usize, usize, Monomial)]| {
            pairs.iter().any(|&(x, y, _)| (x, y) == (a.min(b), a.max(b)))
        };
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && l.divides_by(basis[k].leading_monomial().unwrap())
                && !has_pair(i, k, &pairs)
                && !has_pair(j, k, &pairs)
        });
        if chain {
            continue;
        }
        let r = normal_form(&s_polynomial(&basis[i], &basis[j]), &basis);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return Ok(GroebnerBasis { generators: vec![MultiPoly::one(nvars)], reduced: true });
        }
        add(&mut basis, &mut pairs, r);
    }
    Ok(GroebnerBasis { generators: reduce_basis(basis), reduced: true })
}

fn reduce_basis(basis: Vec<MultiPoly>) -> Vec<MultiPoly> {
    let mut minimal: Vec<MultiPoly> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let lg = g.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            let lh = h.leading_monomial().unwrap();
            j != i && lg.divides_by(lh) && (lg != lh || j < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<MultiPoly> =
            minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
        let mut g = minimal[i].clone();
        let (lm, lc) = g.pop_leading().unwrap();
        let tail = normal_form(&g, &others);
        out.push(monic(&(tail + MultiPoly::monomial(lm.exponents().to_vec(), lc))));
    }
    out.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;

    fn p(s: &str) -> MultiPoly {
        parse(s).unwrap()
    }

    fn p2(s: &str) -> MultiPoly {
        crate::poly::parse_with_nvars(s, 2).unwrap()
    }

    #[test]
    fn examples() {
        let g = groebner(&[p("x1^2 - 2")]).unwrap();
        assert_eq!(g.generators, vec![p("x1^2 - 2")]);
        let g = groebner(&[p("x1"), p("x1 + 1")]).unwrap();
        assert!(g.is_unit());
    }

    #[test]
    fn two_variable_instance_by_hand() {
        // x2 - x1^2, x1^3: grevlex leads are x1^2 (deg 2) and x1^3;
        // reducing x1^3 by x1^2 -> x2 gives x1*x2, so the basis is
        // {x1^2 - x2, x1*x2, x2^2}.
        let g = groebner(&[p2("x2 - x1^2"), p2("x1^3")]).unwrap();
        let expect: Vec<MultiPoly> = vec![p2("x2^2"), p2("x1*x2"), p2("x1^2 - x2")];
        let mut got = g.generators.clone();
        got.sort_by_key(|q| q.to_string());
        let mut want = expect.clone();
        want.sort_by_key(|q| q.to_string());
        assert_eq!(got, want);
        assert!(g.contains(&p2("x1^3")));
        assert!(g.contains(&p2("x2 - x1^2")));
        assert!(!g.contains(&p2("x1")));
    }

    #[test]
    fn s_polynomials_reduce_to_zero() {
        let g = groebner(&[p("x1^2 + x2^2 - 5"), p("x1*x2 - 2")]).unwrap();
        for a in &g.generators {
            for b in &g.generators {
                if a != b {
                    assert!(g.normal_form(&s_polynomial(a, b)).is_zero());
                }
            }
        }
    }
}
