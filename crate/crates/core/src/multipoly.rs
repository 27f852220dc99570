//! Kronecker-chain evaluation points and recursive decoding of sparse
//! multivariate polynomials from a single value.
//!
//! With points satisfying `beta_i >= beta_{i-1}^(D+1)`, the value
//! `f(beta_1, ..., beta_n)` read in base `beta_n` has the digits
//! `f_j(beta_1, ..., beta_{n-1})`, where `f = sum_j f_j * x_n^(d_j)`.
//! Each digit is bounded (see [`coef_bound`]) well below `beta_n / 2`, so
//! it can be peeled with the univariate decoder and recursed on.

use num_bigint::BigInt;
use num_traits::{One, Pow};

use crate::error::{InterpError, Result};
use crate::poly::{MultiPoly, MultiTerm, MAX_EXPONENT};
use crate::unipoly::{upoly_decode, DecodeCaps, DecodeFailure};

/// Exponent tower used by a substitution chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpBase {
    /// `beta_i = (beta + c_i)^((D+1)^(i-1))`.
    DPlusOne,
    /// `beta_i = (beta + c_i)^((2D+1)^(i-1))`.
    TwoDPlusOne,
}

impl ExpBase {
    pub fn value(self, degree: u64) -> u64 {
        match self {
            ExpBase::DPlusOne => degree + 1,
            ExpBase::TwoDPlusOne => 2 * degree + 1,
        }
    }
}

/// Evaluation points `beta_1, ..., beta_n` built from a base and shifts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubstitutionChain {
    beta: BigInt,
    shifts: Vec<u64>,
    degree: u64,
    exp_base: ExpBase,
    points: Vec<BigInt>,
}

impl SubstitutionChain {
    pub fn beta(&self) -> &BigInt {
        &self.beta
    }

    pub fn shifts(&self) -> &[u64] {
        &self.shifts
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn exp_base(&self) -> ExpBase {
        self.exp_base
    }

    pub fn points(&self) -> &[BigInt] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The points with 1 added to the last coordinate. They still satisfy
    /// the chain growth condition, so they decode the same way.
    pub fn bumped_last(&self) -> Vec<BigInt> {
        let mut pts = self.points.clone();
        if let Some(last) = pts.last_mut() {
            *last += 1u32;
        }
        pts
    }
}

/// Builds `beta_i = (beta + c_i)^(B^(i-1))` with `B = D+1` or `2D+1`.
///
/// Shifts must be positive and nondecreasing. The chain is rejected when
/// the largest exponent that a degree-`D` monomial can reach,
/// `B^(n-1) * D`, exceeds 2^62.
pub fn build_chain(
    beta: &BigInt,
    shifts: &[u64],
    degree: u64,
    exp_base: ExpBase,
) -> Result<SubstitutionChain> {
    if shifts.is_empty() {
        return Err(InterpError::InvalidShifts("need at least one shift".into()));
    }
    if shifts.contains(&0) {
        return Err(InterpError::InvalidShifts("shifts must be positive".into()));
    }
    if shifts.windows(2).any(|w| w[0] > w[1]) {
        return Err(InterpError::InvalidShifts("shifts must be nondecreasing".into()));
    }
    let base = exp_base.value(degree);
    let mut tower = Vec::with_capacity(shifts.len());
    let mut e: u64 = 1;
    for i in 0..shifts.len() {
        if i > 0 {
            e = e.checked_mul(base).ok_or(InterpError::ChainTooLarge)?;
        }
        let reach = e.checked_mul(degree.max(1)).ok_or(InterpError::ChainTooLarge)?;
        if reach > MAX_EXPONENT {
            return Err(InterpError::ChainTooLarge);
        }
        tower.push(e);
    }
    let points: Vec<BigInt> = shifts
        .iter()
        .zip(&tower)
        .map(|(c, e)| Pow::pow(beta + *c, *e))
        .collect();
    for w in points.windows(2) {
        assert!(
            w[1] >= Pow::pow(&w[0], degree + 1),
            "chain growth condition violated"
        );
    }
    Ok(SubstitutionChain {
        beta: beta.clone(),
        shifts: shifts.to_vec(),
        degree,
        exp_base,
        points,
    })
}

/// Which bound on the recursive digit values to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundMode {
    /// `C * beta_{i-1}^D * (beta_1 - beta_1^(1-T)) / (beta_1 - 1)`.
    Exact,
    /// `C * beta_{i-1}^D * beta_1 / (beta_1 - 1)`, independent of `T`.
    Remark,
}

/// Bound on `|f_j(beta_1, ..., beta_{level-1})|` for the digits decoded at
/// `level` (1-based). Level 1 digits are the coefficients themselves.
///
/// `terms` is required in [`BoundMode::Exact`].
pub fn coef_bound(
    c: &BigInt,
    level: usize,
    points: &[BigInt],
    terms: Option<u64>,
    degree: u64,
    mode: BoundMode,
) -> BigInt {
    assert!(level >= 1 && level <= points.len());
    if level == 1 {
        return c.clone();
    }
    let b1 = &points[0];
    let scale = c * Pow::pow(&points[level - 2], degree);
    match mode {
        BoundMode::Exact => {
            let t = terms.expect("exact coefficient bound needs T");
            assert!(t >= 1);
            // (b1 - b1^(1-T)) / (b1 - 1) = (b1^T - 1) / (b1^(T-1) * (b1 - 1))
            let top: BigInt = Pow::pow(b1, t) - BigInt::one();
            let bottom: BigInt = Pow::pow(b1, t - 1) * (b1 - 1u32);
            scale * top / bottom
        }
        BoundMode::Remark => scale * b1 / (b1 - 1u32),
    }
}

/// Decodes `rho = f(points)` into a polynomial with total degree at most
/// `degree`, coefficients in `[-C, C]` and, when given, at most `terms`
/// terms per level.
///
/// Each sub-decode of the digit attached to `x_n^(d_j)` gets the budgets
/// `T - t + 1` and `D - d_j`, where `t` is the digit count at that level.
pub fn mpoly_decode(
    points: &[BigInt],
    rho: &BigInt,
    terms: Option<u64>,
    degree: u64,
    c: &BigInt,
    mode: BoundMode,
) -> std::result::Result<MultiPoly, DecodeFailure> {
    assert!(!points.is_empty(), "need at least one point");
    assert!(
        points[0] > c * 2u32,
        "first point must be at least 2C + 1"
    );
    let terms = decode_level(points, rho, terms, degree, c, mode)?;
    Ok(MultiPoly::from_sorted_unchecked(points.len(), terms))
}

fn decode_level(
    points: &[BigInt],
    rho: &BigInt,
    terms: Option<u64>,
    degree: u64,
    c: &BigInt,
    mode: BoundMode,
) -> std::result::Result<Vec<MultiTerm>, DecodeFailure> {
    let level = points.len();
    let bound = coef_bound(c, level, points, terms, degree, mode);
    let caps = DecodeCaps {
        max_deg: Some(degree),
        max_terms: terms.map(|t| usize::try_from(t).unwrap_or(usize::MAX)),
    };
    let digits = upoly_decode(rho, &points[level - 1], &bound, caps)?;
    if level == 1 {
        return Ok(digits
            .terms()
            .iter()
            .map(|t| MultiTerm {
                coef: t.coef.clone(),
                exps: vec![t.exp],
            })
            .collect());
    }
    let t = digits.len() as u64;
    let mut out = Vec::new();
    for digit in digits.terms() {
        let sub = decode_level(
            &points[..level - 1],
            &digit.coef,
            terms.map(|tt| tt - t + 1),
            degree - digit.exp,
            c,
            mode,
        )?;
        out.extend(sub.into_iter().map(|mut m| {
            m.exps.push(digit.exp);
            m
        }));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::unipoly::DecodeCaps;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn chain_examples() {
        let ch = build_chain(&big(2), &[1, 1], 1, ExpBase::DPlusOne).unwrap();
        assert_eq!(ch.points(), &[big(3), big(9)]);
        let ch = build_chain(&big(5), &[1, 1], 1, ExpBase::TwoDPlusOne).unwrap();
        assert_eq!(ch.points(), &[big(6), big(216)]);
        let ch = build_chain(&big(5), &[1, 2, 2], 2, ExpBase::TwoDPlusOne).unwrap();
        assert_eq!(
            ch.points(),
            &[big(6), Pow::pow(big(7), 5u32), Pow::pow(big(7), 25u32)]
        );
        assert_eq!(ch.bumped_last()[2], Pow::pow(big(7), 25u32) + 1);
    }

    #[test]
    fn chain_rejects_bad_shifts_and_overflow() {
        assert!(matches!(
            build_chain(&big(5), &[0, 1], 1, ExpBase::DPlusOne),
            Err(InterpError::InvalidShifts(_))
        ));
        assert!(matches!(
            build_chain(&big(5), &[2, 1], 1, ExpBase::DPlusOne),
            Err(InterpError::InvalidShifts(_))
        ));
        assert!(build_chain(&big(5), &[], 1, ExpBase::DPlusOne).is_err());
        // (2*1000+1)^6 * 1000 > 2^62
        assert_eq!(
            build_chain(&big(3), &[1; 7], 1000, ExpBase::TwoDPlusOne),
            Err(InterpError::ChainTooLarge)
        );
    }

    #[test]
    fn coef_bound_examples() {
        let pts = [big(3), big(9)];
        assert_eq!(coef_bound(&big(1), 2, &pts, Some(2), 1, BoundMode::Exact), big(4));
        assert_eq!(coef_bound(&big(1), 2, &pts, None, 1, BoundMode::Remark), big(4));
        assert_eq!(coef_bound(&big(7), 1, &pts, Some(2), 1, BoundMode::Exact), big(7));
    }

    #[test]
    fn decode_examples() {
        let x1_plus_x2 = MultiPoly::from_pairs(2, [(1, vec![1, 0]), (1, vec![0, 1])]).unwrap();
        let pts = [big(3), big(9)];
        assert_eq!(
            mpoly_decode(&pts, &big(12), Some(2), 1, &big(1), BoundMode::Exact),
            Ok(x1_plus_x2.clone())
        );
        let ch = build_chain(&big(5), &[1, 1], 1, ExpBase::TwoDPlusOne).unwrap();
        assert_eq!(
            mpoly_decode(ch.points(), &big(222), Some(2), 1, &big(1), BoundMode::Exact),
            Ok(x1_plus_x2.clone())
        );
        assert_eq!(
            mpoly_decode(ch.points(), &big(-222), Some(2), 1, &big(1), BoundMode::Exact),
            Ok(x1_plus_x2.neg())
        );
    }

    #[test]
    fn single_point_matches_univariate() {
        let c = big(4);
        for rho in -500i64..500 {
            let rho = big(rho);
            let multi = mpoly_decode(&[big(9)], &rho, Some(3), 6, &c, BoundMode::Exact);
            let uni = upoly_decode(&rho, &big(9), &c, DecodeCaps { max_deg: Some(6), max_terms: Some(3) });
            assert_eq!(multi, uni.map(|p| p.to_multi()));
        }
    }

    #[test]
    fn degree_budget_is_enforced() {
        // x2^2 at (3, 27) decodes fine with D = 2 but not D = 1.
        let pts = [big(3), big(27)];
        let rho = big(27 * 27);
        assert!(mpoly_decode(&pts, &rho, Some(1), 2, &big(1), BoundMode::Exact).is_ok());
        assert_eq!(
            mpoly_decode(&pts, &rho, Some(1), 1, &big(1), BoundMode::Exact),
            Err(DecodeFailure::DegreeOverflow)
        );
    }
}
