//! Black boxes, random instances and brute-force oracles for testing and
//! benchmarking the interpolators.
//!
//! Nothing here calls the decoders it is meant to audit.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::blackbox::BlackBox;
use crate::error::{InterpError, Result};
use crate::poly::{MultiPoly, MultiTerm, UniPoly, UniTerm};
use crate::rational::{canonicalize, Rational, RationalFunction};
use crate::unipoly::DecodeFailure;

/// Black box over a known function that records every query.
#[derive(Debug, Clone)]
pub struct CountingBlackBox {
    target: RationalFunction,
    transcript: Vec<(Vec<BigInt>, Rational)>,
    attempts: usize,
}

impl CountingBlackBox {
    pub fn new(target: RationalFunction) -> Self {
        Self {
            target,
            transcript: Vec::new(),
            attempts: 0,
        }
    }

    pub fn target(&self) -> &RationalFunction {
        &self.target
    }

    /// Successful queries with their answers, in order.
    pub fn transcript(&self) -> &[(Vec<BigInt>, Rational)] {
        &self.transcript
    }
}

/// Wraps `h` in a fresh [`CountingBlackBox`].
pub fn make_blackbox(h: RationalFunction) -> CountingBlackBox {
    CountingBlackBox::new(h)
}

impl BlackBox for CountingBlackBox {
    fn nvars(&self) -> usize {
        self.target.nvars()
    }

    fn query(&mut self, point: &[BigInt]) -> Result<Rational> {
        self.attempts += 1;
        let v = self.target.eval(point)?;
        self.transcript.push((point.to_vec(), v.clone()));
        Ok(v)
    }

    /// Every query counts, including ones that hit a pole.
    fn queries(&self) -> usize {
        self.attempts
    }
}

/// Black box over an arbitrary, possibly non-canonical, pair `f/g`.
#[derive(Debug, Clone)]
pub struct PairBlackBox {
    num: MultiPoly,
    den: MultiPoly,
    queries: usize,
}

impl PairBlackBox {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(InterpError::ZeroDenominator);
        }
        Ok(Self { num, den, queries: 0 })
    }
}

impl BlackBox for PairBlackBox {
    fn nvars(&self) -> usize {
        self.den.nvars()
    }

    fn query(&mut self, point: &[BigInt]) -> Result<Rational> {
        self.queries += 1;
        let d = self.den.eval(point)?;
        if d.is_zero() {
            return Err(InterpError::Pole);
        }
        Ok(Rational::new(self.num.eval(point)?, d))
    }

    fn queries(&self) -> usize {
        self.queries
    }
}

/// Shape of a random instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InstanceSpec {
    pub n: usize,
    pub terms: u64,
    pub degree: u64,
    pub coef: u64,
    pub seed: u64,
}

impl InstanceSpec {
    pub fn new(n: usize, terms: u64, degree: u64, coef: u64, seed: u64) -> Self {
        Self {
            n,
            terms,
            degree,
            coef,
            seed,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 || self.terms == 0 || self.coef == 0 {
            return Err(InterpError::InvalidBounds(format!(
                "instance needs n, T, C >= 1, got n={} T={} C={}",
                self.n, self.terms, self.coef
            )));
        }
        Ok(())
    }
}

const GENERATION_TRIES: usize = 1000;
const CERTIFY_ROUNDS: usize = 3;

/// Nonzero integer uniform in `[-C, C]`.
pub fn random_coef<R: Rng + ?Sized>(rng: &mut R, coef: u64) -> BigInt {
    let c = coef as i64;
    let v = rng.gen_range(1..=c);
    BigInt::from(if rng.gen_bool(0.5) { v } else { -v })
}

/// Monomial uniform among those in `n` variables with total degree at
/// most `degree` (a uniform choice of bar positions).
pub fn random_monomial<R: Rng + ?Sized>(rng: &mut R, n: usize, degree: u64) -> Vec<u64> {
    let slots = degree as usize + n;
    let mut bars = index::sample(rng, slots, n).into_vec();
    bars.sort_unstable();
    let mut prev = 0usize;
    bars.iter()
        .map(|&b| {
            let e = b - prev;
            prev = b + 1;
            e as u64
        })
        .collect()
}

/// Number of monomials in `n` variables with total degree at most `degree`,
/// saturating at `u64::MAX`.
pub fn monomial_count(n: usize, degree: u64) -> u64 {
    // C(degree + n, n), built incrementally to stay exact.
    let mut acc: u128 = 1;
    for k in 1..=n as u128 {
        acc = acc * (degree as u128 + k) / k;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Random polynomial with between 1 and `terms` terms, total degree at most
/// `degree` and nonzero coefficients in `[-C, C]`.
pub fn random_poly<R: Rng + ?Sized>(rng: &mut R, n: usize, terms: u64, degree: u64, coef: u64) -> MultiPoly {
    let t = rng.gen_range(1..=terms.min(monomial_count(n, degree)));
    random_poly_exact(rng, n, t, degree, coef)
}

/// Random polynomial with exactly `t` terms (`t` must not exceed the number
/// of available monomials).
pub fn random_poly_exact<R: Rng + ?Sized>(rng: &mut R, n: usize, t: u64, degree: u64, coef: u64) -> MultiPoly {
    assert!(t <= monomial_count(n, degree), "not enough monomials");
    let mut monos = BTreeSet::new();
    if n == 1 {
        let picked = index::sample(rng, degree as usize + 1, t as usize);
        monos.extend(picked.into_iter().map(|e| vec![e as u64]));
    } else {
        while (monos.len() as u64) < t {
            monos.insert(random_monomial(rng, n, degree));
        }
    }
    let terms = monos.into_iter().map(|exps| MultiTerm {
        coef: random_coef(rng, coef),
        exps,
    });
    MultiPoly::new(n, terms).expect("generated exponents are small")
}

/// Univariate version of [`random_poly`].
pub fn random_uni_poly<R: Rng + ?Sized>(rng: &mut R, terms: u64, degree: u64, coef: u64) -> UniPoly {
    random_poly(rng, 1, terms, degree, coef)
        .to_uni()
        .expect("one variable")
}

/// Random canonical `f/g` with `#f, #g <= T`, total degrees at most `D`,
/// coefficients in `[-C, C]` and no common factor. Deterministic in the
/// seed.
pub fn random_instance(spec: &InstanceSpec) -> Result<RationalFunction> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    for _ in 0..GENERATION_TRIES {
        let f = random_poly(&mut rng, spec.n, spec.terms, spec.degree, spec.coef);
        let g = random_poly(&mut rng, spec.n, spec.terms, spec.degree, spec.coef);
        let h = canonicalize(f, g)?;
        if certify_coprime(h.num(), h.den(), &mut rng) {
            return Ok(h);
        }
    }
    Err(InterpError::GenerationFailed(GENERATION_TRIES))
}

/// Random coprime univariate pair `(f, g)`, both nonzero, with degree at
/// most `degree`.
pub fn random_coprime_pair<R: Rng + ?Sized>(rng: &mut R, terms: u64, degree: u64, coef: u64) -> (UniPoly, UniPoly) {
    loop {
        let f = random_uni_poly(rng, terms, degree, coef);
        let g = random_uni_poly(rng, terms, degree, coef);
        if certify_coprime(&f.to_multi(), &g.to_multi(), rng) {
            return (f, g);
        }
    }
}

/// Sound certificate that `f` and `g` share no nonconstant factor: for
/// random shifts, the images `p(x + c_1, (x + c_2)^B, ...)` with
/// `B = D + 1` have a trivial gcd modulo a large prime and keep their
/// degrees. May report `false` for coprime input with tiny probability.
pub fn certify_coprime<R: Rng + ?Sized>(f: &MultiPoly, g: &MultiPoly, rng: &mut R) -> bool {
    let n = f.nvars();
    let deg = f.total_degree().unwrap_or(0).max(g.total_degree().unwrap_or(0));
    let base = deg + 1;
    (0..CERTIFY_ROUNDS).any(|_| {
        let shifts: Vec<u64> = (0..n).map(|_| rng.gen_range(1..1_000_000)).collect();
        let fi = modp::image(f, &shifts, base);
        let gi = modp::image(g, &shifts, base);
        fi.len() as u64 == weighted_degree(f, base) + 1
            && gi.len() as u64 == weighted_degree(g, base) + 1
            && modp::gcd(fi, gi).len() == 1
    })
}

fn weighted_degree(p: &MultiPoly, base: u64) -> u64 {
    p.terms()
        .iter()
        .map(|t| t.exps.iter().rev().fold(0u64, |acc, &e| acc * base + e))
        .max()
        .unwrap_or(0)
}

/// Integer image `p(x + c_1, (x + c_2)^B, ..., (x + c_n)^(B^(n-1)))`.
pub fn kronecker_image(p: &MultiPoly, shifts: &[u64], base: u64) -> UniPoly {
    assert_eq!(shifts.len(), p.nvars());
    let mut bases = Vec::with_capacity(shifts.len());
    let mut k = 1u64;
    for &c in shifts {
        bases.push(dense_pow(&[BigInt::from(c), BigInt::one()], k));
        k *= base;
    }
    let mut acc: Vec<BigInt> = Vec::new();
    for t in p.terms() {
        let mut m = vec![t.coef.clone()];
        for (b, &e) in bases.iter().zip(&t.exps) {
            m = dense_mul(&m, &dense_pow(b, e));
        }
        if acc.len() < m.len() {
            acc.resize(m.len(), BigInt::zero());
        }
        for (a, v) in acc.iter_mut().zip(m) {
            *a += v;
        }
    }
    UniPoly::from_pairs(acc.into_iter().enumerate().map(|(e, c)| (c, e as u64))).expect("small degree")
}

fn dense_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn dense_pow(b: &[BigInt], mut e: u64) -> Vec<BigInt> {
    let mut result = vec![BigInt::one()];
    let mut sq = b.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            result = dense_mul(&result, &sq);
        }
        e >>= 1;
        if e > 0 {
            sq = dense_mul(&sq, &sq);
        }
    }
    result
}

/// Largest degree accepted by [`resultant`].
pub const RESULTANT_MAX_DEGREE: u64 = 64;

/// Sylvester resultant of `f` and `g` by fraction-free elimination.
pub fn resultant(f: &UniPoly, g: &UniPoly) -> Result<BigInt> {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return Ok(BigInt::zero());
    };
    for d in [m, n] {
        if d > RESULTANT_MAX_DEGREE {
            return Err(InterpError::OracleScale(d));
        }
    }
    let (m, n) = (m as usize, n as usize);
    let size = m + n;
    if size == 0 {
        return Ok(BigInt::one());
    }
    let fd = f.to_dense();
    let gd = g.to_dense();
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    for r in 0..n {
        for (k, c) in fd.iter().rev().enumerate() {
            mat[r][r + k] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in gd.iter().rev().enumerate() {
            mat[n + r][r + k] = c.clone();
        }
    }
    Ok(bareiss_det(mat))
}

fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let size = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..size {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..size).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[size - 1][size - 1]
}

/// Digit cap for [`dense_decode_oracle`].
pub const ORACLE_MAX_DIGITS: u64 = 100_000;

/// Reference decoder: reads every base-`beta` digit from the bottom,
/// mapping residues above `C` to negative digits with a borrow.
pub fn dense_decode_oracle(rho: &BigInt, beta: &BigInt, c: &BigInt) -> std::result::Result<UniPoly, DecodeFailure> {
    let upper = beta - c;
    let mut u = rho.clone();
    let mut terms = Vec::new();
    let mut e = 0u64;
    while !u.is_zero() {
        if e > ORACLE_MAX_DIGITS {
            return Err(DecodeFailure::DegreeOverflow);
        }
        let (q, v) = u.div_mod_floor(beta);
        let (digit, next) = if v <= *c {
            (v, q)
        } else if v >= upper {
            (v - beta, q + 1)
        } else {
            return Err(DecodeFailure::GapResidue);
        };
        if !digit.is_zero() {
            terms.push(UniTerm { coef: digit, exp: e });
        }
        u = next;
        e += 1;
    }
    UniPoly::new(terms).map_err(|_| DecodeFailure::DegreeOverflow)
}

/// Whether `gcd(f(x), g(x))` divides `Res(f, g)`.
pub fn value_gcd_divides_resultant(f: &UniPoly, g: &UniPoly, x: &BigInt) -> Result<bool> {
    let r = resultant(f, g)?;
    let mu = f.eval(x).gcd(&g.eval(x));
    Ok(if mu.is_zero() { r.is_zero() } else { (r % mu).is_zero() })
}

/// `(D+1)^D * C^(2D)` as an integer.
pub fn resultant_bound(degree: u64, coef: u64) -> BigInt {
    let d = u32::try_from(degree).expect("small degree");
    num_traits::pow(BigInt::from(degree + 1), d as usize) * num_traits::pow(BigInt::from(coef), 2 * d as usize)
}

mod modp {
    //! Dense polynomials over `Z/pZ`, `p = 2^61 - 1`, low degree first.

    use std::collections::{BTreeMap, BTreeSet};

    use num_bigint::BigInt;
    use num_traits::ToPrimitive;

    use crate::poly::MultiPoly;

    pub const P: u64 = (1 << 61) - 1;

    fn mul(a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % P as u128) as u64
    }

    fn add(a: u64, b: u64) -> u64 {
        (a + b) % P
    }

    fn sub(a: u64, b: u64) -> u64 {
        (a + P - b) % P
    }

    fn pow(mut b: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = mul(r, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        r
    }

    fn inv(a: u64) -> u64 {
        pow(a, P - 2)
    }

    fn reduce(c: &BigInt) -> u64 {
        let m = BigInt::from(P);
        let r = ((c % &m) + &m) % &m;
        r.to_u64().expect("reduced")
    }

    fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn poly_mul(a: &[u64], b: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = add(out[i + j], mul(x, y));
            }
        }
        out
    }

    fn poly_pow(b: &[u64], mut e: u64) -> Vec<u64> {
        let mut r = vec![1u64];
        let mut sq = b.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                r = poly_mul(&r, &sq);
            }
            e >>= 1;
            if e > 0 {
                sq = poly_mul(&sq, &sq);
            }
        }
        r
    }

    /// Image of `p` under `x_i -> (x + c_i)^(base^(i-1))`, reduced mod `P`.
    pub fn image(p: &MultiPoly, shifts: &[u64], base: u64) -> Vec<u64> {
        // powers[i][e] = (x + c_i)^(base^(i-1) * e) for the exponents in use,
        // each built from the previous one.
        let mut powers: Vec<BTreeMap<u64, Vec<u64>>> = Vec::with_capacity(shifts.len());
        let mut k = 1u64;
        for (i, &c) in shifts.iter().enumerate() {
            let used: BTreeSet<u64> = p.terms().iter().map(|t| t.exps[i]).filter(|&e| e > 0).collect();
            let b = poly_pow(&[c % P, 1], k);
            let mut row = BTreeMap::new();
            let (mut prev_e, mut prev) = (0u64, vec![1u64]);
            for e in used {
                prev = poly_mul(&prev, &poly_pow(&b, e - prev_e));
                prev_e = e;
                row.insert(e, prev.clone());
            }
            powers.push(row);
            k = k.saturating_mul(base);
        }
        let mut acc: Vec<u64> = Vec::new();
        for t in p.terms() {
            let mut m = vec![reduce(&t.coef)];
            for (row, e) in powers.iter().zip(&t.exps) {
                if let Some(pw) = row.get(e) {
                    m = poly_mul(&m, pw);
                }
            }
            if acc.len() < m.len() {
                acc.resize(m.len(), 0);
            }
            for (a, v) in acc.iter_mut().zip(m) {
                *a = add(*a, v);
            }
        }
        trim(acc)
    }

    fn rem(mut a: Vec<u64>, b: &[u64]) -> Vec<u64> {
        let lead_inv = inv(*b.last().expect("nonzero divisor"));
        while a.len() >= b.len() {
            let q = mul(*a.last().unwrap(), lead_inv);
            let shift = a.len() - b.len();
            for (j, &bj) in b.iter().enumerate() {
                a[shift + j] = sub(a[shift + j], mul(q, bj));
            }
            a = trim(a);
        }
        a
    }

    /// Monic-free gcd; only its length (degree + 1) is meaningful.
    pub fn gcd(mut a: Vec<u64>, mut b: Vec<u64>) -> Vec<u64> {
        while !b.is_empty() {
            let r = rem(a, &b);
            a = b;
            b = r;
        }
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uni(pairs: &[(i64, u64)]) -> UniPoly {
        UniPoly::from_pairs(pairs.iter().copied()).unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn blackbox_counts_and_records() {
        let h: RationalFunction = "(1*x1^0+1*x1^1)/(-1*x1^0+1*x1^1)".parse().unwrap();
        let mut bb = make_blackbox(h.clone());
        let v = bb.query(&[big(5)]).unwrap();
        assert_eq!(v, Rational::new(big(3), big(2)));
        assert_eq!(bb.queries(), 1);
        bb.query(&[big(9)]).unwrap();
        assert_eq!(bb.queries(), 2);
        for (p, v) in bb.transcript() {
            assert_eq!(&h.eval(p).unwrap(), v);
        }
        assert_eq!(bb.query(&[big(1)]), Err(InterpError::Pole));
        assert_eq!(bb.queries(), 3);
        assert_eq!(bb.transcript().len(), 2);
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(resultant(&uni(&[(1, 0), (1, 1)]), &uni(&[(-1, 0), (1, 1)])).unwrap(), big(-2));
        assert_eq!(resultant(&uni(&[(1, 1)]), &uni(&[(1, 1)])).unwrap(), big(0));
        assert_eq!(resultant(&uni(&[(1, 0), (1, 2)]), &uni(&[(-1, 0), (1, 1)])).unwrap(), big(2));
        assert_eq!(resultant(&uni(&[(3, 0)]), &uni(&[(1, 0), (1, 2)])).unwrap(), big(9));
        assert!(matches!(
            resultant(&uni(&[(1, 65)]), &uni(&[(1, 0)])),
            Err(InterpError::OracleScale(65))
        ));
    }

    #[test]
    fn resultant_matches_root_product() {
        // Res(prod (x - r_i), g) = prod g(r_i) for monic f.
        let f = uni(&[(6, 0), (-5, 1), (1, 2)]); // (x-2)(x-3)
        let g = uni(&[(1, 0), (4, 1), (-2, 3)]);
        let expect = g.eval(&big(2)) * g.eval(&big(3));
        assert_eq!(resultant(&f, &g).unwrap(), expect);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(dense_decode_oracle(&big(245), &big(5), &big(2)), Ok(uni(&[(-1, 1), (2, 3)])));
        assert_eq!(dense_decode_oracle(&big(0), &big(5), &big(2)), Ok(UniPoly::zero()));
        assert_eq!(dense_decode_oracle(&big(3), &big(7), &big(2)), Err(DecodeFailure::GapResidue));
    }

    #[test]
    fn smallest_instance_family() {
        for seed in 0..20 {
            let h = random_instance(&InstanceSpec::new(1, 1, 0, 1, seed)).unwrap();
            let s = h.to_string();
            assert!(s == "(1*x1^0)/(1*x1^0)" || s == "(-1*x1^0)/(1*x1^0)", "{s}");
        }
    }

    #[test]
    fn instances_are_reproducible_and_bounded() {
        let spec = InstanceSpec::new(2, 5, 4, 10, 77);
        assert_eq!(random_instance(&spec).unwrap(), random_instance(&spec).unwrap());
        for seed in 0..200 {
            let h = random_instance(&InstanceSpec { seed, ..spec }).unwrap();
            assert!(h.term_count() <= 5);
            assert!(h.total_degree() <= 4);
            assert!(h.height() <= big(10));
            assert!(!h.num().is_zero());
        }
    }

    #[test]
    fn monomials_respect_degree() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..1000 {
            let m = random_monomial(&mut rng, 3, 4);
            assert_eq!(m.len(), 3);
            assert!(m.iter().sum::<u64>() <= 4);
        }
        assert_eq!(monomial_count(2, 1), 3);
        assert_eq!(monomial_count(3, 4), 35);
        let p = random_poly_exact(&mut rng, 3, 35, 4, 2);
        assert_eq!(p.len(), 35);
    }

    #[test]
    fn certificate_rejects_planted_factor() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let common = MultiPoly::from_pairs(2, [(1, vec![1, 0]), (2, vec![0, 1])]).unwrap();
        let f = MultiPoly::from_pairs(2, [(1, vec![2, 0]), (2, vec![1, 1]), (3, vec![1, 0]), (6, vec![0, 1])]).unwrap();
        // f = (x1 + 2 x2)(x1 + 3)
        assert!(!certify_coprime(&f, &common, &mut rng));
        let g = MultiPoly::from_pairs(2, [(1, vec![1, 0]), (-1, vec![0, 1])]).unwrap();
        assert!(certify_coprime(&f, &g, &mut rng));
    }

    #[test]
    fn image_matches_direct_substitution() {
        let p = MultiPoly::from_pairs(2, [(3, vec![1, 1]), (-2, vec![0, 2]), (5, vec![0, 0])]).unwrap();
        let img = kronecker_image(&p, &[2, 7], 3);
        for x in -5i64..5 {
            let x = big(x);
            let y1 = &x + 2;
            let y2 = num_traits::pow(&x + 7, 3);
            assert_eq!(img.eval(&x), p.eval(&[y1, y2]).unwrap());
        }
    }

    #[test]
    fn value_gcd_divides_resultant_small() {
        let f = uni(&[(1, 0), (1, 1)]);
        let g = uni(&[(-1, 0), (1, 1)]);
        assert!(value_gcd_divides_resultant(&f, &g, &big(5)).unwrap());
        assert_eq!(resultant_bound(1, 1), big(2));
    }
}
