use arithnull::geometry::bounds::{bound, BoundInputs};
use arithnull::geometry::{normalized_volume, SupportSet};
use arithnull::heights::product_formula_sum;
use arithnull::linalg::Matrix;
use arithnull::logexpr::LogLinear;
use arithnull::nullsatz::{certificate_verify, fixture_geometric};
use arithnull::poly::parse_with_nvars;
use arithnull::poly::{ratio, MultiPoly};
use arithnull::quotient::{charpoly, norm, pseudo_jacobian_split, quotient_algebra, tate_trace, trace, SplitBy};
use arithnull::selftest::random_radical_system;
use arithnull::{Integer, Rational};
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const N: usize = 2;

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(((0u32..4, 0u32..4), -9i64..10, 1i64..4), 0..6).prop_map(|terms| {
        MultiPoly::from_terms(
            N,
            terms.into_iter().map(|((a, b), num, den)| (vec![a, b], ratio(num, den))),
        )
    })
}

fn point() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-7i64..8, 1i64..5).prop_map(|(a, b)| ratio(a, b)), N)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(f in poly(), g in poly(), h in poly()) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&f * &MultiPoly::one(N), f.clone());
    }

    #[test]
    fn evaluation_is_a_ring_map(f in poly(), g in poly(), x in point()) {
        let (fx, gx) = (f.eval(&x).unwrap(), g.eval(&x).unwrap());
        prop_assert_eq!((&f * &g).eval(&x).unwrap(), &fx * &gx);
        prop_assert_eq!((&f + &g).eval(&x).unwrap(), fx + gx);
    }

    #[test]
    fn degree_of_product(f in poly(), g in poly()) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        prop_assert_eq!((&f * &g).degree(), Some(f.degree().unwrap() + g.degree().unwrap()));
    }

    #[test]
    fn display_parses_back(f in poly()) {
        let text = f.to_string();
        prop_assert_eq!(parse_with_nvars(&text, N).unwrap(), f, "{}", text);
    }

    #[test]
    fn loglinear_display_parses_back(
        c in (-50i64..50, 1i64..7),
        logs in prop::collection::vec((prop::sample::select(vec![2u64, 3, 5, 7, 11, 97]), -5i64..6, 1i64..4), 0..4),
    ) {
        let mut x = LogLinear::rational(ratio(c.0, c.1));
        for (p, a, b) in logs {
            x = x + LogLinear::log_u(p) * &ratio(a, b);
        }
        prop_assert_eq!(LogLinear::parse(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn product_formula(num in -10_000i64..10_000, den in 1i64..10_000) {
        prop_assume!(num != 0);
        prop_assert!(product_formula_sum(&ratio(num, den)).unwrap().is_zero());
    }

    #[test]
    fn volume_is_affine_unimodular_invariant(
        pts in prop::collection::vec((-4i64..5, -4i64..5), 3..7),
        shears in prop::collection::vec((any::<bool>(), -3i64..4), 1..4),
        shift in (-5i64..6, -5i64..6),
        swap in any::<bool>(),
    ) {
        let a = SupportSet::new(2, pts.iter().map(|&(x, y)| vec![x, y]).collect()).unwrap();
        let moved: Vec<Vec<i64>> = pts
            .iter()
            .map(|&(x, y)| {
                let (mut x, mut y) = if swap { (y, x) } else { (x, y) };
                for &(upper, k) in &shears {
                    if upper { x += k * y } else { y += k * x }
                }
                vec![x + shift.0, y + shift.1]
            })
            .collect();
        let b = SupportSet::new(2, moved).unwrap();
        prop_assert_eq!(normalized_volume(&a).unwrap(), normalized_volume(&b).unwrap());
    }

    #[test]
    fn volume_is_measured_in_the_lattice_of_a(pts in prop::collection::vec((-3i64..4, -3i64..4), 3..6), k in 1i64..4) {
        let a = SupportSet::new(2, pts.iter().map(|&(x, y)| vec![x, y]).collect()).unwrap();
        let b = SupportSet::new(2, pts.iter().map(|&(x, y)| vec![k * x, k * y]).collect()).unwrap();
        prop_assert_eq!(normalized_volume(&b).unwrap(), normalized_volume(&a).unwrap());
        // with e_1 and e_2 adjoined the lattice is Z^2 and the dilated simplex has volume k^2
        let simplex = SupportSet::new(2, vec![vec![0, 0], vec![k, 0], vec![0, k], vec![1, 0], vec![0, 1]]).unwrap();
        prop_assert_eq!(normalized_volume(&simplex).unwrap(), (k * k) as u64);
    }

    #[test]
    fn theorem1_degree_is_monotone(n in 1usize..5, d in 1usize..6) {
        let degree = |n: usize, d: usize| {
            let mut inp = BoundInputs::default();
            inp.set("n", &n.to_string()).unwrap();
            inp.set("d", &d.to_string()).unwrap();
            bound("theorem1", &inp).unwrap().degree_bound.unwrap()
        };
        let here = degree(n, d);
        prop_assert!(degree(n + 1, d) >= here);
        prop_assert!(degree(n, d + 1) >= here);
        prop_assert_eq!(here, Integer::from(4 * n * d.pow(n as u32)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn quotient_algebra_invariants(seed in any::<u64>(), f in poly(), g in poly()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let system = random_radical_system(&mut rng, 6);
        let n = system[0].nvars();
        let embed = |p: &MultiPoly| {
            if n >= N { p.with_nvars(n) } else { p.embed(n, &(0..N).map(|i| i.min(n - 1)).collect::<Vec<_>>()) }
        };
        let (f, g) = (embed(&f), embed(&g));
        let b = quotient_algebra(&system).unwrap();
        let (mf, mg) = (b.matrix_of(&f), b.matrix_of(&g));
        prop_assert_eq!(mf.mul(&mg), mg.mul(&mf));
        prop_assert_eq!(b.matrix_of(&(&f * &g)), mf.mul(&mg));
        let cp = charpoly(&b, &f);
        prop_assert!(mf.eval_poly(&cp.coefficients).is_zero());
        prop_assert_eq!(norm(&b, &(&f * &g)), norm(&b, &f) * norm(&b, &g));
        prop_assert_eq!(trace(&b, &(&f + &g)), trace(&b, &f) + trace(&b, &g));
        prop_assert_eq!(cp.trace, mf.trace());
        prop_assert_eq!(cp.norm, mf.det());
    }

    #[test]
    fn trace_functional_is_independent_of_the_decomposition(seed in any::<u64>(), g in poly()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let system = random_radical_system(&mut rng, 6);
        let b = quotient_algebra(&system).unwrap();
        let by_y = pseudo_jacobian_split(&system, SplitBy::Y).unwrap();
        let by_x = pseudo_jacobian_split(&system, SplitBy::X).unwrap();
        let sigma = tate_trace(&b, &by_y).unwrap();
        prop_assert_eq!(&sigma, &tate_trace(&b, &by_x).unwrap());
        let n = system[0].nvars();
        let g = if n >= N { g.with_nvars(n) } else { g.embed(n, &(0..N).map(|i| i.min(n - 1)).collect::<Vec<_>>()) };
        prop_assert_eq!(sigma.reconstruct(&b, &by_x, &g), b.reduce(&g));
    }

    #[test]
    fn perturbed_certificate_is_rejected(
        n in 1usize..3,
        d in 1u32..4,
        which in any::<prop::sample::Index>(),
        delta in prop::sample::select(vec![-2i64, -1, 1, 2]),
        bump_a in any::<bool>(),
    ) {
        let fx = fixture_geometric(n, d, &Integer::from(3)).unwrap();
        let mut cert = fx.certificate.clone().unwrap();
        prop_assert!(certificate_verify(&cert, &fx.system).is_ok());
        if bump_a {
            cert.a += delta;
        } else {
            let i = which.index(cert.g.len());
            cert.g[i] = &cert.g[i] + &MultiPoly::from_int(delta, n);
        }
        prop_assert!(certificate_verify(&cert, &fx.system).is_err());
    }
}

#[test]
fn unimodular_substitution_keeps_quotient_dimension() {
    let fs = vec![parse_with_nvars("x1^2 - 2", 2).unwrap(), parse_with_nvars("x2^3 - x1 - 1", 2).unwrap()];
    let mut m = Matrix::identity(2);
    m[(0, 1)] = Rational::one() + Rational::one();
    let shift = vec![ratio(1, 2), Rational::zero()];
    let moved: Vec<MultiPoly> = fs.iter().map(|f| f.substitute_affine(&m, &shift).unwrap()).collect();
    assert_eq!(quotient_algebra(&fs).unwrap().dim(), 6);
    assert_eq!(quotient_algebra(&moved).unwrap().dim(), 6);
}
