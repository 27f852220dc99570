//! Univariate rational-function interpolation by scale search.
//!
//! A query returns `h(beta) = a/b` in lowest terms, so `f(beta) = mu * a`
//! and `g(beta) = mu * b` for an unknown integer `mu`. The interpolators
//! try candidate scales `i = 1, 2, ...` and accept the first one whose
//! scaled values decode to coefficient-bounded polynomials.
//!
//! Decoding is symmetric under negation, so a negative true scale decodes
//! to `(-f, -g)` at `i = |mu|`; canonicalization then removes the sign.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::blackbox::BlackBox;
use crate::bounds::Bounds;
use crate::error::{InterpError, Result};
use crate::poly::MultiPoly;
use crate::rational::{canonicalize, Rational, RationalFunction};
use crate::unipoly::{top_degree, upoly_decode, DecodeCaps};

/// Which of the two evaluation points a scale search decodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// The first point (`beta`, or the unshifted chain).
    Base,
    /// The second point (`beta + 1`, or the chain with `beta_n + 1`).
    Shifted,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::Base => "base",
            Side::Shifted => "shifted",
        })
    }
}

/// Successful interpolation together with how it was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recovered {
    pub function: RationalFunction,
    /// Accepted scale on the decoded side.
    pub mu: u64,
    pub side: Side,
    /// Shifts of the substitution chain, empty for univariate runs.
    pub shifts: Vec<u64>,
}

impl Recovered {
    fn base(function: RationalFunction, mu: u64) -> Self {
        Self {
            function,
            mu,
            side: Side::Base,
            shifts: Vec::new(),
        }
    }
}

/// Candidate scales `1..=cap` on one side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuSearchState {
    pub i: u64,
    pub cap: u64,
    pub side: Side,
}

impl MuSearchState {
    pub fn new(cap: u64, side: Side) -> Self {
        Self { i: 0, cap, side }
    }

    pub fn exhausted(&self) -> InterpError {
        InterpError::MuSearchExhausted { cap: self.cap }
    }
}

impl Iterator for MuSearchState {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.i >= self.cap {
            return None;
        }
        self.i += 1;
        Some(self.i)
    }
}

/// Bracket on the ratio of the two unknown scales:
/// `q1 / e < |mu2 / mu1| < q2 * e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioGate {
    pub q1: BigRational,
    pub q2: BigRational,
    pub e: BigRational,
    pub d: u64,
    pub dcap: u64,
}

impl RatioGate {
    /// Side with the provably smaller scale, falling back to the smaller
    /// of the two scale caps when the bracket straddles 1.
    pub fn decide(&self, k1: &BigInt, k2: &BigInt) -> Side {
        if self.q1 >= self.e {
            Side::Base
        } else if self.q2 <= self.e.recip() {
            Side::Shifted
        } else if k1 < k2 {
            Side::Base
        } else {
            Side::Shifted
        }
    }

    /// Whether scale `i` on `side` is compatible with the bracket, that is
    /// whether the matching scale on the other side can be an integer.
    pub fn admits(&self, side: Side, i: u64) -> bool {
        let i = BigRational::from_integer(BigInt::from(i));
        let (lo, hi) = match side {
            Side::Base => (&self.q1 / &self.e * &i, &self.q2 * &self.e * &i),
            Side::Shifted => (&i / (&self.q2 * &self.e), &self.e * &i / &self.q1),
        };
        interval_contains_integer(&lo, &hi)
    }
}

/// `max(1, floor(beta^(D+1) / (2|a|)))`, a bound on the scale linking a
/// reduced numerator value to the true one.
pub fn mu_upper_bound(a: &BigInt, beta: &BigInt, degree: u64) -> Result<BigInt> {
    if a.is_zero() {
        return Err(InterpError::ZeroNumerator);
    }
    let k: BigInt = Pow::pow(beta, degree + 1) / (a.abs() * 2u32);
    Ok(k.max(BigInt::one()))
}

/// Gate for two points `beta` and `beta + 1` with degree bracket `[d, dcap]`.
pub fn ratio_gate(a1: &BigInt, a2: &BigInt, beta: &BigInt, d: u64, dcap: u64, c: &BigInt) -> RatioGate {
    let e = BigRational::one() + BigRational::new(c * 2u32, beta * (beta - 1u32));
    gate_with(a1, a2, beta, d, dcap, e)
}

pub(crate) fn gate_with(
    a1: &BigInt,
    a2: &BigInt,
    base: &BigInt,
    d: u64,
    dcap: u64,
    e: BigRational,
) -> RatioGate {
    assert!(!a1.is_zero() && !a2.is_zero(), "gate needs nonzero values");
    let q = |k: u64| {
        BigRational::new(
            a1.abs() * Pow::pow(base + 1u32, k),
            a2.abs() * Pow::pow(base, k),
        )
    };
    RatioGate {
        q1: q(d),
        q2: q(dcap),
        e,
        d,
        dcap,
    }
}

/// Whether the open interval `(lo, hi)` contains an integer.
pub fn interval_contains_integer(lo: &BigRational, hi: &BigRational) -> bool {
    BigRational::from_integer(lo.floor().to_integer() + 1) < *hi
}

fn one_var<B: BlackBox>(bb: &B) -> Result<()> {
    match bb.nvars() {
        1 => Ok(()),
        got => Err(InterpError::DimensionMismatch { expected: 1, got }),
    }
}

fn query1<B: BlackBox>(bb: &mut B, x: &BigInt) -> Result<Rational> {
    bb.query(std::slice::from_ref(x))
}

fn value_at(h: &RationalFunction, x: &BigInt) -> Option<Rational> {
    h.eval(std::slice::from_ref(x)).ok()
}

/// One query at `beta = 2TC^2 + 1`; the first decodable scale is correct.
pub fn urfunsi1<B: BlackBox>(mut bb: B, bounds: &Bounds) -> Result<Recovered> {
    bounds.validate()?;
    one_var(&bb)?;
    let t = bounds.require_terms()?;
    let c = BigInt::from(bounds.coef);
    let beta: BigInt = &c * &c * (2 * t) + 1u32;
    let h = query1(&mut bb, &beta)?;
    if h.numer().is_zero() {
        return Ok(Recovered::base(RationalFunction::zero(1), 1));
    }
    let caps = DecodeCaps::terms(usize::try_from(t).unwrap_or(usize::MAX));
    let mut search = MuSearchState::new(bounds.max_iter, Side::Base);
    for i in search.by_ref() {
        let Ok(f) = upoly_decode(&(h.numer() * i), &beta, &c, caps) else {
            continue;
        };
        let Ok(g) = upoly_decode(&(h.denom() * i), &beta, &c, caps) else {
            continue;
        };
        return Ok(Recovered::base(canonicalize(f.to_multi(), g.to_multi())?, i));
    }
    Err(search.exhausted())
}

/// Smallest `beta` with `beta^2 >= 2 * T1 * C^2`, `T1 = max(T, 5)`.
pub fn urfunsi2_beta(t: u64, c: &BigInt) -> BigInt {
    let target: BigInt = c * c * (2 * t.max(5));
    let r = target.sqrt();
    if &r * &r == target {
        r
    } else {
        r + 1u32
    }
}

/// Two queries at `beta` and `beta + 1` with `beta ~ sqrt(2T) C`; a
/// decodable candidate is kept only if it reproduces the second value.
pub fn urfunsi2<B: BlackBox>(mut bb: B, bounds: &Bounds) -> Result<Recovered> {
    bounds.validate()?;
    one_var(&bb)?;
    let t = bounds.require_terms()?;
    let c = BigInt::from(bounds.coef);
    let beta = urfunsi2_beta(t, &c);
    let beta1: BigInt = &beta + 1u32;
    let h1 = query1(&mut bb, &beta)?;
    let h2 = query1(&mut bb, &beta1)?;
    if h1.numer().is_zero() {
        return Ok(Recovered::base(RationalFunction::zero(1), 1));
    }
    let caps = DecodeCaps::terms(usize::try_from(t).unwrap_or(usize::MAX));
    let mut search = MuSearchState::new(bounds.max_iter, Side::Base);
    for i in search.by_ref() {
        let Ok(f) = upoly_decode(&(h1.numer() * i), &beta, &c, caps) else {
            continue;
        };
        let Ok(g) = upoly_decode(&(h1.denom() * i), &beta, &c, caps) else {
            continue;
        };
        let cand = canonicalize(f.to_multi(), g.to_multi())?;
        if value_at(&cand, &beta1).as_ref() == Some(&h2) {
            return Ok(Recovered::base(cand, i));
        }
    }
    Err(search.exhausted())
}

/// Two queries at `beta = 3C + 1` and `beta + 1`, searching the side with
/// the smaller scale and skipping scales the ratio bracket rules out.
/// Acceptance is checked at one extra point only, so a wrong answer is
/// possible though rare.
pub fn urfunsip<B: BlackBox>(mut bb: B, bounds: &Bounds) -> Result<Recovered> {
    bounds.validate()?;
    one_var(&bb)?;
    let dcap = bounds.require_degree()?;
    let c = BigInt::from(bounds.coef);
    let beta: BigInt = &c * 3u32 + 1u32;
    let beta1: BigInt = &beta + 1u32;
    let h1 = query1(&mut bb, &beta)?;
    let h2 = query1(&mut bb, &beta1)?;
    if h1.numer().is_zero() {
        return Ok(Recovered::base(RationalFunction::zero(1), 1));
    }
    if h2.numer().is_zero() {
        return Err(InterpError::ZeroNumerator);
    }
    let d = top_degree(h1.numer(), &beta)?.max(top_degree(h2.numer(), &beta1)?);
    let k1 = mu_upper_bound(h1.numer(), &beta, dcap)?;
    let k2 = mu_upper_bound(h2.numer(), &beta1, dcap)?;
    let gate = ratio_gate(h1.numer(), h2.numer(), &beta, d, dcap, &c);
    let side = gate.decide(&k1, &k2);
    let (point, value, other, other_value, k) = match side {
        Side::Base => (&beta, &h1, &beta1, &h2, &k1),
        Side::Shifted => (&beta1, &h2, &beta, &h1, &k2),
    };
    let caps = DecodeCaps::degree(dcap);
    gated_search(&gate, side, k, bounds.max_iter, |i| {
        let f = upoly_decode(&(value.numer() * i), point, &c, caps).ok()?;
        let g = upoly_decode(&(value.denom() * i), point, &c, caps).ok()?;
        let cand = canonicalize(f.to_multi(), g.to_multi()).ok()?;
        (value_at(&cand, other).as_ref() == Some(other_value)).then_some(cand)
    })
}

/// Scale loop shared by the two-point probabilistic interpolators.
pub(crate) fn gated_search(
    gate: &RatioGate,
    side: Side,
    k: &BigInt,
    max_iter: u64,
    mut attempt: impl FnMut(u64) -> Option<RationalFunction>,
) -> Result<Recovered> {
    let cap = k.to_u64().unwrap_or(u64::MAX).min(max_iter);
    let mut search = MuSearchState::new(cap, side);
    for i in search.by_ref() {
        if !gate.admits(side, i) {
            continue;
        }
        if let Some(function) = attempt(i) {
            return Ok(Recovered {
                function,
                mu: i,
                side,
                shifts: Vec::new(),
            });
        }
    }
    Err(search.exhausted())
}

pub(crate) fn poly_value_ratio(f: &MultiPoly, g: &MultiPoly, point: &[BigInt]) -> Option<Rational> {
    let den = g.eval(point).ok()?;
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(f.eval(point).ok()?, den))
}
