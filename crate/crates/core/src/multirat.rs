//! Multivariate rational-function interpolation through Kronecker chains
//! with random shifts.
//!
//! Random shifts keep the univariate images of a coprime pair coprime with
//! high probability, which makes the reduced value at the chain determine
//! the function. See [`success_lower_bound`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::blackbox::BlackBox;
use crate::bounds::Bounds;
use crate::error::{InterpError, Result};
use crate::multipoly::{build_chain, mpoly_decode, BoundMode, ExpBase};
use crate::rational::{canonicalize, RationalFunction};
use crate::unipoly::top_degree;
use crate::unirat::{gate_with, gated_search, mu_upper_bound, poly_value_ratio, MuSearchState, RatioGate, Recovered, Side};

/// Per-call options for the multivariate interpolators.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MultiOptions {
    /// Seed for the shift draw and for extra validation points.
    pub seed: u64,
    /// Fixed shifts instead of a random draw.
    pub shifts: Option<Vec<u64>>,
    /// Check the answer against the black box at 10 extra random points.
    pub validate_extra: bool,
}

impl MultiOptions {
    pub fn seeded(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }

    pub fn with_shifts(mut self, shifts: Vec<u64>) -> Self {
        self.shifts = Some(shifts);
        self
    }

    pub fn with_validation(mut self) -> Self {
        self.validate_extra = true;
        self
    }
}

const EXTRA_POINTS: usize = 10;
const EXTRA_RANGE: i64 = 1_000_000;

/// `n` shifts drawn uniformly from `1..=N`, sorted.
pub fn sample_shifts(n: usize, range: u64, seed: u64) -> Vec<u64> {
    assert!(range >= 1, "shift range must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut shifts: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=range)).collect();
    shifts.sort_unstable();
    shifts
}

/// `max(0, 1 - 2(2D+1)^(2n) / N)`.
pub fn success_lower_bound(degree: u64, n: usize, range: u64) -> BigRational {
    let bad: BigInt = Pow::pow(BigInt::from(2 * degree + 1), 2 * n as u64) * 2u32;
    let p = BigRational::one() - BigRational::new(bad, BigInt::from(range));
    if p < BigRational::zero() {
        BigRational::zero()
    } else {
        p
    }
}

fn shifts_for(n: usize, bounds: &Bounds, opts: &MultiOptions) -> Result<Vec<u64>> {
    match &opts.shifts {
        Some(s) if s.len() != n => Err(InterpError::DimensionMismatch {
            expected: n,
            got: s.len(),
        }),
        Some(s) => Ok(s.clone()),
        None => Ok(sample_shifts(n, bounds.shift_range, opts.seed)),
    }
}

/// Gate for the chain `points` and the same chain with `beta_n + 1`, using
/// the last-variable degree bracket `[d_n, Dn]`.
pub fn mv_ratio_gate(a1: &BigInt, a2: &BigInt, points: &[BigInt], d_n: u64, dn: u64, c: &BigInt) -> RatioGate {
    let b1 = &points[0];
    let bn = points.last().expect("nonempty chain");
    let e = BigRational::one() + BigRational::new(c * 2u32, (b1 - 1u32) * (bn - 1u32));
    gate_with(a1, a2, bn, d_n, dn, e)
}

/// One query at a chain with `beta = 2TC^2 + 1` and exponent base `2D+1`.
pub fn mrfunsi1<B: BlackBox>(mut bb: B, bounds: &Bounds, opts: &MultiOptions) -> Result<Recovered> {
    bounds.validate()?;
    let n = bb.nvars();
    let t = bounds.require_terms()?;
    let degree = bounds.require_degree()?;
    let c = BigInt::from(bounds.coef);
    let beta: BigInt = &c * &c * (2 * t) + 1u32;
    let shifts = shifts_for(n, bounds, opts)?;
    let chain = build_chain(&beta, &shifts, degree, ExpBase::TwoDPlusOne)?;
    let h = bb.query(chain.points())?;
    let found = if h.numer().is_zero() {
        Recovered {
            function: RationalFunction::zero(n),
            mu: 1,
            side: Side::Base,
            shifts,
        }
    } else {
        let mut search = MuSearchState::new(bounds.max_iter, Side::Base);
        let mut found = None;
        for i in search.by_ref() {
            let decode = |v: &BigInt| mpoly_decode(chain.points(), &(v * i), Some(t), degree, &c, BoundMode::Exact);
            let (Ok(f), Ok(g)) = (decode(h.numer()), decode(h.denom())) else {
                continue;
            };
            found = Some(Recovered {
                function: canonicalize(f, g)?,
                mu: i,
                side: Side::Base,
                shifts: shifts.clone(),
            });
            break;
        }
        found.ok_or_else(|| search.exhausted())?
    };
    if opts.validate_extra {
        validate(&mut bb, &found.function, opts.seed)?;
    }
    Ok(found)
}

/// Two queries at a chain with `beta = 3C + 1` and exponent base `D+1`,
/// the second with `beta_n + 1`. The scale search runs on the side with
/// the smaller scale, pruned by the ratio bracket, and each candidate is
/// checked at the other point.
pub fn mrfunsi2<B: BlackBox>(mut bb: B, bounds: &Bounds, opts: &MultiOptions) -> Result<Recovered> {
    bounds.validate()?;
    let n = bb.nvars();
    let degree = bounds.require_degree()?;
    let dn = bounds.require_last_degree()?;
    let c = BigInt::from(bounds.coef);
    let beta: BigInt = &c * 3u32 + 1u32;
    let shifts = shifts_for(n, bounds, opts)?;
    let chain = build_chain(&beta, &shifts, degree, ExpBase::DPlusOne)?;
    let p1 = chain.points().to_vec();
    let p2 = chain.bumped_last();
    let h1 = bb.query(&p1)?;
    let h2 = bb.query(&p2)?;
    let mut found = if h1.numer().is_zero() {
        Recovered {
            function: RationalFunction::zero(n),
            mu: 1,
            side: Side::Base,
            shifts: Vec::new(),
        }
    } else {
        if h2.numer().is_zero() {
            return Err(InterpError::ZeroNumerator);
        }
        let bn = &p1[n - 1];
        let bn1 = &p2[n - 1];
        let d = top_degree(h1.numer(), bn)?.max(top_degree(h2.numer(), bn1)?);
        let k1 = mu_upper_bound(h1.numer(), bn, dn)?;
        let k2 = mu_upper_bound(h2.numer(), bn1, dn)?;
        let gate = mv_ratio_gate(h1.numer(), h2.numer(), &p1, d, dn, &c);
        let side = gate.decide(&k1, &k2);
        let (point, value, other, other_value, k) = match side {
            Side::Base => (&p1, &h1, &p2, &h2, &k1),
            Side::Shifted => (&p2, &h2, &p1, &h1, &k2),
        };
        gated_search(&gate, side, k, bounds.max_iter, |i| {
            let decode = |v: &BigInt| mpoly_decode(point, &(v * i), None, degree, &c, BoundMode::Remark).ok();
            let f = decode(value.numer())?;
            let g = decode(value.denom())?;
            (poly_value_ratio(&f, &g, other).as_ref() == Some(other_value))
                .then(|| canonicalize(f, g).ok())
                .flatten()
        })?
    };
    found.shifts = shifts;
    if opts.validate_extra {
        validate(&mut bb, &found.function, opts.seed)?;
    }
    Ok(found)
}

/// Compares `h` with the black box at fresh random points.
fn validate<B: BlackBox>(bb: &mut B, h: &RationalFunction, seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5e_ed0f_7e57);
    let n = h.nvars();
    for _ in 0..EXTRA_POINTS {
        let point: Vec<BigInt> = (0..n)
            .map(|_| BigInt::from(rng.gen_range(-EXTRA_RANGE..=EXTRA_RANGE)))
            .collect();
        let ours = h.eval(&point);
        let theirs = bb.query(&point);
        let agree = match (&ours, &theirs) {
            (Ok(x), Ok(y)) => x == y,
            (Err(InterpError::Pole), Err(InterpError::Pole)) => true,
            _ => false,
        };
        if !agree {
            let shown: Vec<String> = point.iter().map(|v| v.to_string()).collect();
            return Err(InterpError::ValidationFailed(format!("({})", shown.join(", "))));
        }
    }
    Ok(())
}
