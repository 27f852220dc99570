//! Recovery of a sparse univariate integer polynomial from one value
//! `rho = f(beta)`, for `beta >= 2C + 1` where `C` bounds the coefficients.
//!
//! Coefficients are read as balanced base-`beta` digits: a residue `v` in
//! `{0, ..., beta-1}` stands for `v` when `v <= C` and for `v - beta` when
//! `v >= beta - C`. Residues strictly between the two ranges cannot come
//! from a coefficient bounded by `C`; decoding reports them as
//! [`DecodeFailure::GapResidue`].
//!
//! The lowest exponent of each remaining term is found with a ladder of
//! repeated squares `beta, beta^2, beta^4, ...`, so a term after a gap of
//! `e` zero digits costs `O(log^2 e)` big-integer operations instead of `e`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{InterpError, Result};
use crate::poly::{UniPoly, UniTerm};

/// Why a value does not decode to a coefficient-bounded polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DecodeFailure {
    /// A digit fell in the gap `(C, beta - C)`.
    GapResidue,
    /// The decoded degree exceeded the caller's cap.
    DegreeOverflow,
    /// The decoded term count exceeded the caller's cap.
    TermOverflow,
}

impl std::fmt::Display for DecodeFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            DecodeFailure::GapResidue => "gap-residue",
            DecodeFailure::DegreeOverflow => "degree-overflow",
            DecodeFailure::TermOverflow => "term-overflow",
        })
    }
}

pub type DecodeResult = std::result::Result<UniPoly, DecodeFailure>;

/// Optional limits on the decoded polynomial.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DecodeCaps {
    pub max_deg: Option<u64>,
    pub max_terms: Option<usize>,
}

impl DecodeCaps {
    pub const NONE: DecodeCaps = DecodeCaps {
        max_deg: None,
        max_terms: None,
    };

    pub fn degree(max_deg: u64) -> Self {
        Self {
            max_deg: Some(max_deg),
            max_terms: None,
        }
    }

    pub fn terms(max_terms: usize) -> Self {
        Self {
            max_deg: None,
            max_terms: Some(max_terms),
        }
    }
}

/// Work counters for one decode call.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DecodeStats {
    /// Passes through the digit loop, one per recovered term.
    pub iterations: usize,
    /// Big-integer divisions, remainders and squarings spent locating
    /// lowest exponents.
    pub ladder_ops: usize,
}

/// Maps a residue `v` in `{0, ..., beta-1}` to its balanced digit, or
/// `None` when it lies in the gap.
fn balanced_digit(v: BigInt, beta: &BigInt, c: &BigInt) -> Option<BigInt> {
    #[cfg(not(feature = "fault-injection"))]
    let low = v <= *c;
    #[cfg(feature = "fault-injection")]
    let low = v < *c;
    if low {
        Some(v)
    } else if v >= beta - c {
        Some(v - beta)
    } else {
        None
    }
}

/// Returns `(e, |rho| / beta^e)` for the largest `e` with `beta^e | rho`.
fn min_deg_quotient(rho: &BigInt, beta: &BigInt, ops: &mut usize) -> (u64, BigInt) {
    debug_assert!(!rho.is_zero());
    let mut a = rho.abs();
    *ops += 1;
    if !(&a % beta).is_zero() {
        return (0, a);
    }
    // ladder[j] = beta^(2^j); extend while the next square still divides.
    let mut ladder = vec![beta.clone()];
    loop {
        let next = ladder.last().unwrap().pow(2u32);
        *ops += 1;
        if next.bits() > a.bits() {
            break;
        }
        *ops += 1;
        if !(&a % &next).is_zero() {
            break;
        }
        ladder.push(next);
    }
    let s = ladder.len() - 1;
    let mut lo: u64 = 1 << s;
    let mut hi: u64 = 1 << (s + 1);
    a /= &ladder[s];
    *ops += 1;
    while hi - lo > 1 {
        *ops += 1;
        if !(&a % beta).is_zero() {
            return (lo, a);
        }
        let mut s1 = 0;
        while s1 + 1 < ladder.len() {
            *ops += 1;
            if ladder[s1 + 1].bits() > a.bits() || !(&a % &ladder[s1 + 1]).is_zero() {
                break;
            }
            s1 += 1;
        }
        hi = lo + (1 << (s1 + 1));
        lo += 1 << s1;
        a /= &ladder[s1];
        *ops += 1;
    }
    (lo, a)
}

/// Largest `e` such that `beta^e` divides `rho` (sign ignored).
pub fn min_deg(rho: &BigInt, beta: &BigInt) -> Result<u64> {
    min_deg_counted(rho, beta).map(|(e, _)| e)
}

/// [`min_deg`] together with the number of big-integer operations it used.
pub fn min_deg_counted(rho: &BigInt, beta: &BigInt) -> Result<(u64, usize)> {
    if rho.is_zero() {
        return Err(InterpError::ZeroInput);
    }
    assert!(*beta >= BigInt::from(2), "beta must be at least 2");
    let mut ops = 0;
    let (e, _) = min_deg_quotient(rho, beta, &mut ops);
    Ok((e, ops))
}

/// Balanced digit of `rho / beta^d` modulo `beta`, or `0` when that digit
/// lies in the gap `(C, beta - C)`. Requires `beta^d | rho`.
pub fn min_coef(rho: &BigInt, beta: &BigInt, d: u64, c: &BigInt) -> BigInt {
    let shifted = rho / Pow::pow(beta, d);
    let v = shifted.mod_floor(beta);
    balanced_digit(v, beta, c).unwrap_or_default()
}

/// Decodes `rho` as `f(beta)` for a polynomial `f` with coefficients in
/// `[-C, C]`. Such an `f` is unique when it exists.
pub fn upoly_decode(rho: &BigInt, beta: &BigInt, c: &BigInt, caps: DecodeCaps) -> DecodeResult {
    upoly_decode_with_stats(rho, beta, c, caps).0
}

pub fn upoly_decode_with_stats(
    rho: &BigInt,
    beta: &BigInt,
    c: &BigInt,
    caps: DecodeCaps,
) -> (DecodeResult, DecodeStats) {
    assert!(
        *beta > c * 2u32 && c.is_positive(),
        "decoding needs C >= 1 and beta >= 2C + 1"
    );
    let mut stats = DecodeStats::default();
    let mut terms = Vec::new();
    let mut u = rho.clone();
    let mut k: u64 = 0;
    while !u.is_zero() {
        if caps.max_terms.is_some_and(|cap| terms.len() >= cap) {
            return (Err(DecodeFailure::TermOverflow), stats);
        }
        stats.iterations += 1;
        let (d, q_abs) = min_deg_quotient(&u, beta, &mut stats.ladder_ops);
        let exp = k + d;
        if caps.max_deg.is_some_and(|cap| exp > cap) {
            return (Err(DecodeFailure::DegreeOverflow), stats);
        }
        let q = if u.is_negative() { -q_abs } else { q_abs };
        let Some(coef) = balanced_digit(q.mod_floor(beta), beta, c) else {
            return (Err(DecodeFailure::GapResidue), stats);
        };
        debug_assert!(!coef.is_zero());
        u = (q - &coef) / beta;
        terms.push(UniTerm { coef, exp });
        k = exp + 1;
    }
    (Ok(UniPoly::from_sorted_unchecked(terms)), stats)
}

/// `floor(log_beta(2 |rho|))`, the degree of any coefficient-bounded `f`
/// with `f(beta) = rho`. Exact integer arithmetic only.
pub fn top_degree(rho: &BigInt, beta: &BigInt) -> Result<u64> {
    if rho.is_zero() {
        return Err(InterpError::ZeroInput);
    }
    assert!(*beta >= BigInt::from(2), "beta must be at least 2");
    let x = rho.abs() * 2u32;
    let mut ladder = vec![beta.clone()];
    while ladder.last().unwrap() <= &x {
        let next = ladder.last().unwrap().pow(2u32);
        ladder.push(next);
    }
    let mut acc = BigInt::one();
    let mut k = 0u64;
    for (j, step) in ladder.iter().enumerate().rev() {
        let cand = &acc * step;
        if cand <= x {
            acc = cand;
            k += 1 << j;
        }
    }
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn poly(pairs: &[(i64, u64)]) -> UniPoly {
        UniPoly::from_pairs(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn min_deg_examples() {
        // Trial-division oracle: 16954 = 2 * 7^2 * 173.
        assert_eq!(min_deg(&big(16954), &big(7)), Ok(2));
        assert_eq!(min_deg(&big(5), &big(7)), Ok(0));
        assert_eq!(min_deg(&Pow::pow(&big(7), 9u32), &big(7)), Ok(9));
        assert_eq!(min_deg(&-Pow::pow(&big(7), 9u32), &big(7)), Ok(9));
        assert_eq!(min_deg(&big(0), &big(7)), Err(InterpError::ZeroInput));
    }

    #[test]
    fn min_deg_matches_trial_division() {
        for beta in [2i64, 3, 7, 10] {
            for e in 0..200u64 {
                for unit in [1i64, -1, 2, 3, 5] {
                    if unit % beta == 0 {
                        continue;
                    }
                    let rho = Pow::pow(&big(beta), e) * unit;
                    assert_eq!(min_deg(&rho, &big(beta)).unwrap(), e, "beta={beta} e={e}");
                }
            }
        }
    }

    #[test]
    fn min_deg_op_count_is_polylog() {
        for e in [1u64, 7, 64, 500, 4095, 4096, 5000] {
            let rho = Pow::pow(&big(3), e) * 2;
            let (got, ops) = min_deg_counted(&rho, &big(3)).unwrap();
            assert_eq!(got, e);
            let l = 64 - e.leading_zeros() as usize + 1;
            assert!(ops <= 4 * l * l + 4, "e={e} ops={ops}");
        }
    }

    #[test]
    fn min_coef_examples() {
        assert_eq!(min_coef(&big(-11), &big(7), 0, &big(3)), big(3));
        assert_eq!(min_coef(&big(245), &big(5), 1, &big(2)), big(-1));
        assert_eq!(min_coef(&big(4), &big(7), 0, &big(1)), big(0));
    }

    #[test]
    fn decode_examples() {
        let caps = DecodeCaps::NONE;
        assert_eq!(upoly_decode(&big(245), &big(5), &big(2), caps), Ok(poly(&[(2, 3), (-1, 1)])));
        assert_eq!(upoly_decode(&big(0), &big(5), &big(2), caps), Ok(UniPoly::zero()));
        assert_eq!(upoly_decode(&big(3), &big(5), &big(1), caps), Err(DecodeFailure::GapResidue));
        assert_eq!(upoly_decode(&big(6), &big(5), &big(1), caps), Ok(poly(&[(1, 0), (1, 1)])));
    }

    #[test]
    fn decode_caps() {
        let rho = poly(&[(1, 0), (1, 3), (-1, 9)]).eval(&big(5));
        let c = big(2);
        assert_eq!(
            upoly_decode(&rho, &big(5), &c, DecodeCaps::degree(8)),
            Err(DecodeFailure::DegreeOverflow)
        );
        assert_eq!(
            upoly_decode(&rho, &big(5), &c, DecodeCaps::terms(2)),
            Err(DecodeFailure::TermOverflow)
        );
        assert!(upoly_decode(&rho, &big(5), &c, DecodeCaps { max_deg: Some(9), max_terms: Some(3) }).is_ok());
    }

    #[test]
    fn top_degree_examples() {
        assert_eq!(top_degree(&big(245), &big(5)), Ok(3));
        assert_eq!(top_degree(&big(6), &big(5)), Ok(1));
        assert_eq!(top_degree(&big(1), &big(5)), Ok(0));
        assert_eq!(top_degree(&big(-245), &big(5)), Ok(3));
        assert_eq!(top_degree(&big(0), &big(5)), Err(InterpError::ZeroInput));
    }

    #[test]
    fn iteration_count_equals_term_count() {
        let f = poly(&[(3, 0), (-1, 17), (2, 18), (1, 1000)]);
        let (res, stats) = upoly_decode_with_stats(&f.eval(&big(7)), &big(7), &big(3), DecodeCaps::NONE);
        assert_eq!(res, Ok(f));
        assert_eq!(stats.iterations, 4);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_instance() -> impl Strategy<Value = (UniPoly, u64)> {
            (1u64..=1000).prop_flat_map(|c| {
                let ci = c as i64;
                (
                    proptest::collection::vec(
                        ((-ci..=ci).prop_filter("nonzero", |v| *v != 0), 0u64..=5000),
                        0..=50,
                    )
                    .prop_map(|pairs| {
                        let mut seen = std::collections::HashSet::new();
                        let pairs: Vec<_> = pairs.into_iter().filter(|(_, e)| seen.insert(*e)).collect();
                        UniPoly::from_pairs(pairs).unwrap()
                    }),
                    Just(c),
                )
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn round_trip_and_degree_lemmas((f, c) in arb_instance(), extra in 0u64..3) {
                let cb = BigInt::from(c);
                let beta = BigInt::from(2 * c + 1 + extra);
                let rho = f.eval(&beta);
                let (res, stats) = upoly_decode_with_stats(&rho, &beta, &cb, DecodeCaps::NONE);
                prop_assert_eq!(res.as_ref(), Ok(&f));
                prop_assert_eq!(stats.iterations, f.len());
                if !f.is_zero() {
                    prop_assert_eq!(top_degree(&rho, &beta).unwrap(), f.degree().unwrap());
                    prop_assert_eq!(min_deg(&rho, &beta).unwrap(), f.min_exp().unwrap());
                }
            }

            #[test]
            fn negation_symmetry(rho in any::<i64>(), c in 1u64..20, extra in 0u64..10) {
                let rho = BigInt::from(rho);
                let cb = BigInt::from(c);
                let beta = BigInt::from(2 * c + 1 + extra);
                let pos = upoly_decode(&rho, &beta, &cb, DecodeCaps::NONE);
                let neg = upoly_decode(&-&rho, &beta, &cb, DecodeCaps::NONE);
                match pos {
                    Ok(p) => prop_assert_eq!(neg, Ok(p.neg())),
                    Err(e) => prop_assert_eq!(neg, Err(e)),
                }
            }
        }
    }
}
