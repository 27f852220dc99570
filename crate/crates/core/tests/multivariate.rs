use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ratinterp_core::harness::{
    kronecker_image, random_instance, random_monomial, random_poly, resultant, CountingBlackBox, InstanceSpec,
    PairBlackBox,
};
use ratinterp_core::poly::lex_cmp;
use ratinterp_core::{
    build_chain, coef_bound, mpoly_decode, mrfunsi1, mrfunsi2, BlackBox, BoundMode, Bounds, ExpBase, MultiOptions, MultiPoly,
    MultiTerm, SubstitutionChain,
};

fn sorted_shifts(rng: &mut ChaCha8Rng, n: usize, range: u64) -> Vec<u64> {
    let mut s: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=range)).collect();
    s.sort_unstable();
    s
}

fn monomial_value(points: &[BigInt], exps: &[u64]) -> BigInt {
    points.iter().zip(exps).map(|(b, &e)| Pow::pow(b, e)).product()
}

/// Random polynomial with a matching chain `beta = 2C + 1`, base `D + 1`.
fn poly_with_chain(rng: &mut ChaCha8Rng) -> (MultiPoly, SubstitutionChain, BigInt) {
    let n = rng.gen_range(1..=4);
    let c = rng.gen_range(1..=50u64);
    let f = random_poly(rng, n, 20, 6, c);
    let cb = BigInt::from(c);
    let shifts = sorted_shifts(rng, n, 20);
    let chain = build_chain(&(&cb * 2u32 + 1u32), &shifts, f.total_degree().unwrap(), ExpBase::DPlusOne).unwrap();
    (f, chain, cb)
}

#[test]
fn chain_preserves_monomial_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut checked = 0;
    while checked < 1000 {
        let n = rng.gen_range(1..=4);
        let d = rng.gen_range(1..=5);
        let beta = BigInt::from(rng.gen_range(3..=40u64));
        let chain = build_chain(&beta, &sorted_shifts(&mut rng, n, 30), d, ExpBase::DPlusOne).unwrap();
        let mut m1: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=d)).collect();
        let mut m2: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=d)).collect();
        match lex_cmp(&m1, &m2) {
            Ordering::Equal => continue,
            Ordering::Less => std::mem::swap(&mut m1, &mut m2),
            Ordering::Greater => {}
        }
        let (v1, v2) = (monomial_value(chain.points(), &m1), monomial_value(chain.points(), &m2));
        assert!(v1 > v2);
        assert!(BigRational::new(v2, v1) <= BigRational::new(BigInt::one(), chain.points()[0].clone()));
        checked += 1;
    }
}

#[test]
fn multivariate_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..300 {
        let (f, chain, c) = poly_with_chain(&mut rng);
        let rho = f.eval(chain.points()).unwrap();
        let t = Some(f.len() as u64);
        let d = f.total_degree().unwrap();
        assert_eq!(mpoly_decode(chain.points(), &rho, t, d, &c, BoundMode::Exact).unwrap(), f);
        assert_eq!(mpoly_decode(chain.points(), &rho, None, d, &c, BoundMode::Remark).unwrap(), f);
    }
}

#[test]
fn leading_exponents_separate_per_variable() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    for _ in 0..300 {
        let (f, chain, _) = poly_with_chain(&mut rng);
        if f.is_zero() {
            continue;
        }
        let p = chain.points();
        let lead = &f.leading().unwrap().exps;
        let v = f.eval(p).unwrap().abs();
        for j in 0..p.len() {
            let upper = monomial_value(&p[j + 1..], &lead[j + 1..]);
            let ratio = |k: u64| BigRational::new(v.clone(), Pow::pow(&p[j], k) * &upper);
            assert!(ratio(lead[j]) > half, "below half at k = d_j");
            assert!(ratio(lead[j] + 1) < half, "above half at k = d_j + 1");
        }
    }
}

/// Walks the true intermediate values the decoder sees, with the budgets it
/// passes down, and checks each against its level's bound.
fn check_intermediates(f_terms: &[MultiTerm], points: &[BigInt], terms: u64, degree: u64, c: &BigInt) {
    let level = points.len();
    if level == 1 {
        return;
    }
    let mut groups: BTreeMap<u64, Vec<MultiTerm>> = BTreeMap::new();
    for t in f_terms {
        let mut rest = t.clone();
        let e = rest.exps.pop().unwrap();
        groups.entry(e).or_default().push(rest);
    }
    let t = groups.len() as u64;
    let below = &points[..level - 1];
    for (e, sub) in groups {
        let value: BigInt = sub.iter().map(|m| &m.coef * monomial_value(below, &m.exps)).sum();
        let bound = coef_bound(c, level, points, Some(terms), degree, BoundMode::Exact);
        assert!(value.abs() <= bound, "level {level}: |{value}| > {bound}");
        assert!(value.abs() <= coef_bound(c, level, points, None, degree, BoundMode::Remark));
        check_intermediates(&sub, below, terms - t + 1, degree - e, c);
    }
}

#[test]
fn intermediate_values_respect_bounds() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..300 {
        let (f, chain, c) = poly_with_chain(&mut rng);
        if f.is_zero() {
            continue;
        }
        check_intermediates(f.terms(), chain.points(), f.len() as u64, f.total_degree().unwrap(), &c);
    }
}

#[test]
fn bounded_polynomials_do_not_vanish_on_chains() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..500 {
        let (f, chain, _) = poly_with_chain(&mut rng);
        assert_eq!(f.is_zero(), f.eval(chain.points()).unwrap().is_zero());
    }
}

#[test]
fn shifted_images_keep_coprimality() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..100 {
        let n = rng.gen_range(1..=3);
        let h = random_instance(&InstanceSpec::new(n, rng.gen_range(1..=4), 3, 5, rng.gen())).unwrap();
        let shifts = sorted_shifts(&mut rng, n, 1 << 20);
        let fi = kronecker_image(h.num(), &shifts, 4);
        let gi = kronecker_image(h.den(), &shifts, 4);
        if fi.is_zero() {
            continue;
        }
        assert!(!resultant(&fi, &gi).unwrap().is_zero(), "{h}");
    }
}

#[test]
fn zero_fraction_on_grid_is_bounded_by_degree() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let grid: Vec<BigInt> = (1..=20).map(BigInt::from).collect();
    let zero_fraction = |p: &MultiPoly| {
        let mut zeros = 0u32;
        for a in &grid {
            for b in &grid {
                for c in &grid {
                    if p.eval(&[a.clone(), b.clone(), c.clone()]).unwrap().is_zero() {
                        zeros += 1;
                    }
                }
            }
        }
        f64::from(zeros) / 8000.0
    };
    for _ in 0..20 {
        let d = rng.gen_range(1..=4);
        let p = random_poly(&mut rng, 3, 6, d, 3);
        if p.is_zero() {
            continue;
        }
        let d = p.total_degree().unwrap() as f64;
        assert!(zero_fraction(&p) <= d / 20.0);
    }
    // (x1 - 1)(x1 - 2)(x1 - 3)(x1 - 4) meets the bound exactly.
    let tight = MultiPoly::from_pairs(
        3,
        [(24, vec![0, 0, 0]), (-50, vec![1, 0, 0]), (35, vec![2, 0, 0]), (-10, vec![3, 0, 0]), (1, vec![4, 0, 0])],
    )
    .unwrap();
    assert_eq!(zero_fraction(&tight), 4.0 / 20.0);
}

#[test]
fn query_counts_and_validation() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut validated = 0;
    for _ in 0..50 {
        let h = random_instance(&InstanceSpec::new(3, 4, 2, 5, rng.gen())).unwrap();
        // Scales run into the millions when a numerator shares monomial
        // factors with the denominator's values; cap the search so the count
        // is checked either way.
        let b = Bounds::new(5)
            .with_terms(4)
            .with_degree(2)
            .with_last_degree(2)
            .with_max_iter(20_000);
        let o = MultiOptions::seeded(rng.gen());
        let mut bb = CountingBlackBox::new(h.clone());
        let first = mrfunsi1(&mut bb, &b, &o);
        assert_eq!(bb.queries(), 1);
        let mut bb = CountingBlackBox::new(h.clone());
        let _ = mrfunsi2(&mut bb, &b, &o);
        assert_eq!(bb.queries(), 2);
        if let Ok(r) = first {
            assert_eq!(r.function, h);
            let mut bb = CountingBlackBox::new(h.clone());
            assert_eq!(mrfunsi1(&mut bb, &b, &o.clone().with_validation()).unwrap().function, h);
            assert_eq!(bb.queries(), 11);
            validated += 1;
        }
    }
    assert!(validated >= 40, "only {validated} runs finished");
}

#[test]
fn scaled_pairs_interpolate_identically() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..50 {
        let h = random_instance(&InstanceSpec::new(2, 4, 3, 6, rng.gen())).unwrap();
        let k = rng.gen_range(1..=1_000_000i64);
        let k = BigInt::from(if rng.gen_bool(0.5) { -k } else { k });
        let (f, g) = h.scaled_raw(&k);
        let b = Bounds::new(6).with_terms(4).with_degree(3).with_last_degree(3);
        let o = MultiOptions::seeded(rng.gen());
        let plain = mrfunsi1(CountingBlackBox::new(h.clone()), &b, &o).map(|r| r.function);
        let scaled = mrfunsi1(PairBlackBox::new(f.clone(), g.clone()).unwrap(), &b, &o).map(|r| r.function);
        assert_eq!(plain, scaled);
        let plain = mrfunsi2(CountingBlackBox::new(h), &b, &o).map(|r| r.function);
        let scaled = mrfunsi2(PairBlackBox::new(f, g).unwrap(), &b, &o).map(|r| r.function);
        assert_eq!(plain, scaled);
    }
}

#[test]
fn generated_instances_pass_audit() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..1000 {
        let h = random_instance(&InstanceSpec::new(2, 5, 4, 10, rng.gen())).unwrap();
        for p in [h.num(), h.den()] {
            assert!(p.len() <= 5);
            assert!(p.total_degree().unwrap_or(0) <= 4);
            assert!(p.height() <= BigInt::from(10));
        }
        assert!(!h.den().is_zero());
        // Images under an injective substitution share every common factor,
        // so a nonzero image resultant certifies coprimality.
        let shifts = sorted_shifts(&mut rng, 2, 1 << 20);
        let (fi, gi) = (kronecker_image(h.num(), &shifts, 5), kronecker_image(h.den(), &shifts, 5));
        if h.num().is_zero() {
            assert_eq!(h.den().len(), 1);
            continue;
        }
        assert!(!resultant(&fi, &gi).unwrap().is_zero(), "{h}");
    }
}

#[test]
fn monomials_stay_within_degree() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1000 {
        let m = random_monomial(&mut rng, 3, 5);
        assert!(m.iter().sum::<u64>() <= 5);
    }
}
