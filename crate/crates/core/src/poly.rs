//! Sparse integer polynomials.
//!
//! Both representations keep their terms sorted, strictly increasing and free
//! of zero coefficients, so structural equality is polynomial equality. The
//! zero polynomial is the empty term list; its degree is `None`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{InterpError, Result};

/// Largest exponent accepted anywhere in the library.
pub const MAX_EXPONENT: u64 = 1 << 62;

fn check_exponent(e: u64) -> Result<()> {
    if e > MAX_EXPONENT {
        Err(InterpError::ExponentTooLarge(e))
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniTerm {
    pub coef: BigInt,
    pub exp: u64,
}

/// Sparse univariate polynomial over the integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    terms: Vec<UniTerm>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    /// Builds a polynomial from terms in any order. Repeated exponents are
    /// summed and zero coefficients dropped.
    pub fn new(terms: impl IntoIterator<Item = UniTerm>) -> Result<Self> {
        let mut acc: BTreeMap<u64, BigInt> = BTreeMap::new();
        for t in terms {
            check_exponent(t.exp)?;
            *acc.entry(t.exp).or_default() += t.coef;
        }
        Ok(Self {
            terms: acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(exp, coef)| UniTerm { coef, exp })
                .collect(),
        })
    }

    /// Convenience constructor from `(coefficient, exponent)` pairs.
    pub fn from_pairs<C: Into<BigInt>>(pairs: impl IntoIterator<Item = (C, u64)>) -> Result<Self> {
        Self::new(pairs.into_iter().map(|(c, e)| UniTerm {
            coef: c.into(),
            exp: e,
        }))
    }

    /// Wraps terms that are already strictly increasing with nonzero coefficients.
    pub(crate) fn from_sorted_unchecked(terms: Vec<UniTerm>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].exp < w[1].exp));
        debug_assert!(terms.iter().all(|t| !t.coef.is_zero()));
        Self { terms }
    }

    pub fn terms(&self) -> &[UniTerm] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u64> {
        self.terms.last().map(|t| t.exp)
    }

    pub fn min_exp(&self) -> Option<u64> {
        self.terms.first().map(|t| t.exp)
    }

    /// Largest absolute coefficient, zero for the zero polynomial.
    pub fn height(&self) -> BigInt {
        self.terms
            .iter()
            .map(|t| t.coef.abs())
            .max()
            .unwrap_or_default()
    }

    pub fn leading_coef(&self) -> Option<&BigInt> {
        self.terms.last().map(|t| &t.coef)
    }

    /// Exact value at an integer point, by sparse Horner from the top term.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut iter = self.terms.iter().rev();
        let Some(top) = iter.next() else {
            return BigInt::zero();
        };
        let mut acc = top.coef.clone();
        let mut prev = top.exp;
        for t in iter {
            acc *= Pow::pow(x, prev - t.exp);
            acc += &t.coef;
            prev = t.exp;
        }
        if prev > 0 {
            acc *= Pow::pow(x, prev);
        }
        acc
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|t| UniTerm {
                    coef: -&t.coef,
                    exp: t.exp,
                })
                .collect(),
        }
    }

    /// Multiplies every coefficient by a nonzero integer.
    pub fn scale(&self, k: &BigInt) -> Self {
        assert!(!k.is_zero(), "scale by zero");
        Self {
            terms: self
                .terms
                .iter()
                .map(|t| UniTerm {
                    coef: &t.coef * k,
                    exp: t.exp,
                })
                .collect(),
        }
    }

    /// Dense coefficient vector, lowest degree first.
    pub fn to_dense(&self) -> Vec<BigInt> {
        let Some(d) = self.degree() else {
            return Vec::new();
        };
        let mut out = vec![BigInt::zero(); d as usize + 1];
        for t in &self.terms {
            out[t.exp as usize] = t.coef.clone();
        }
        out
    }

    pub fn to_multi(&self) -> MultiPoly {
        MultiPoly {
            n: 1,
            terms: self
                .terms
                .iter()
                .map(|t| MultiTerm {
                    coef: t.coef.clone(),
                    exps: vec![t.exp],
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiTerm {
    pub coef: BigInt,
    pub exps: Vec<u64>,
}

/// Lexicographic order with `x1 < x2 < ... < xn`: the exponent of the last
/// variable is the most significant.
pub fn lex_cmp(a: &[u64], b: &[u64]) -> Ordering {
    debug_assert_eq!(a.len(), b.len());
    a.iter().rev().cmp(b.iter().rev())
}

/// Sparse multivariate polynomial over the integers in `n` variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    n: usize,
    terms: Vec<MultiTerm>,
}

impl MultiPoly {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: Vec::new(),
        }
    }

    /// The constant polynomial `c` in `n` variables.
    pub fn constant(n: usize, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero(n);
        }
        Self {
            n,
            terms: vec![MultiTerm {
                coef: c,
                exps: vec![0; n],
            }],
        }
    }

    /// Builds a polynomial from terms in any order, merging repeated
    /// monomials and dropping zero coefficients.
    pub fn new(n: usize, terms: impl IntoIterator<Item = MultiTerm>) -> Result<Self> {
        let mut terms: Vec<MultiTerm> = terms.into_iter().collect();
        for t in &terms {
            if t.exps.len() != n {
                return Err(InterpError::DimensionMismatch {
                    expected: n,
                    got: t.exps.len(),
                });
            }
            for &e in &t.exps {
                check_exponent(e)?;
            }
        }
        terms.sort_by(|a, b| lex_cmp(&a.exps, &b.exps));
        let mut merged: Vec<MultiTerm> = Vec::with_capacity(terms.len());
        for t in terms {
            match merged.last_mut() {
                Some(last) if last.exps == t.exps => last.coef += t.coef,
                _ => merged.push(t),
            }
        }
        merged.retain(|t| !t.coef.is_zero());
        Ok(Self { n, terms: merged })
    }

    pub fn from_pairs<C: Into<BigInt>>(
        n: usize,
        pairs: impl IntoIterator<Item = (C, Vec<u64>)>,
    ) -> Result<Self> {
        Self::new(
            n,
            pairs.into_iter().map(|(c, exps)| MultiTerm {
                coef: c.into(),
                exps,
            }),
        )
    }

    pub(crate) fn from_sorted_unchecked(n: usize, terms: Vec<MultiTerm>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| lex_cmp(&w[0].exps, &w[1].exps) == Ordering::Less));
        debug_assert!(terms.iter().all(|t| !t.coef.is_zero() && t.exps.len() == n));
        Self { n, terms }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[MultiTerm] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading (lex-largest) term.
    pub fn leading(&self) -> Option<&MultiTerm> {
        self.terms.last()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.exps.iter().sum()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u64> {
        self.terms.iter().map(|t| t.exps[var]).max()
    }

    pub fn height(&self) -> BigInt {
        self.terms
            .iter()
            .map(|t| t.coef.abs())
            .max()
            .unwrap_or_default()
    }

    /// Gcd of the coefficients (nonnegative, zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        use num_integer::Integer;
        self.terms
            .iter()
            .fold(BigInt::zero(), |g, t| g.gcd(&t.coef))
    }

    pub fn neg(&self) -> Self {
        self.map_coefs(|c| -c)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        assert!(!k.is_zero(), "scale by zero");
        self.map_coefs(|c| c * k)
    }

    /// Exact division of every coefficient by `k`; `k` must divide the content.
    pub fn div_exact(&self, k: &BigInt) -> Self {
        self.map_coefs(|c| {
            debug_assert!((c % k).is_zero());
            c / k
        })
    }

    fn map_coefs(&self, f: impl Fn(&BigInt) -> BigInt) -> Self {
        Self {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|t| MultiTerm {
                    coef: f(&t.coef),
                    exps: t.exps.clone(),
                })
                .collect(),
        }
    }

    /// Exact value at an integer point.
    pub fn eval(&self, point: &[BigInt]) -> Result<BigInt> {
        if point.len() != self.n {
            return Err(InterpError::DimensionMismatch {
                expected: self.n,
                got: point.len(),
            });
        }
        if self.n == 1 {
            return Ok(self.univariate_view().eval(&point[0]));
        }
        // Per-variable power tables, built incrementally over sorted exponents.
        let tables: Vec<BTreeMap<u64, BigInt>> = (0..self.n)
            .map(|v| {
                let mut exps: Vec<u64> = self.terms.iter().map(|t| t.exps[v]).collect();
                exps.sort_unstable();
                exps.dedup();
                let mut table = BTreeMap::new();
                let mut cur = BigInt::one();
                let mut cur_e = 0u64;
                for e in exps {
                    cur *= Pow::pow(&point[v], e - cur_e);
                    cur_e = e;
                    table.insert(e, cur.clone());
                }
                table
            })
            .collect();
        let mut acc = BigInt::zero();
        for t in &self.terms {
            let mut m = t.coef.clone();
            for (v, e) in t.exps.iter().enumerate() {
                if *e > 0 {
                    m *= &tables[v][e];
                }
            }
            acc += m;
        }
        Ok(acc)
    }

    fn univariate_view(&self) -> UniPoly {
        UniPoly::from_sorted_unchecked(
            self.terms
                .iter()
                .map(|t| UniTerm {
                    coef: t.coef.clone(),
                    exp: t.exps[0],
                })
                .collect(),
        )
    }

    /// The univariate form when `n == 1`.
    pub fn to_uni(&self) -> Option<UniPoly> {
        (self.n == 1).then(|| self.univariate_view())
    }
}

impl From<&UniPoly> for MultiPoly {
    fn from(p: &UniPoly) -> Self {
        p.to_multi()
    }
}

impl fmt::Display for MultiPoly {
    /// Canonical text: `(c*x1^e1*...*xn^en+...)` in increasing lex order,
    /// `(0)` for the zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 && t.coef.is_positive() {
                f.write_str("+")?;
            }
            write!(f, "{}", t.coef)?;
            for (v, e) in t.exps.iter().enumerate() {
                write!(f, "*x{}^{}", v + 1, e)?;
            }
        }
        f.write_str(")")
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_multi().fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn uni_normalizes_and_evaluates() {
        let p = UniPoly::from_pairs([(1, 5), (1, 2), (0, 7), (2, 2)]).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.terms()[0], UniTerm { coef: big(3), exp: 2 });
        assert_eq!(p.eval(&big(7)), big(16954));
        assert_eq!(p.degree(), Some(5));
        assert_eq!(UniPoly::zero().degree(), None);
        assert_eq!(UniPoly::zero().eval(&big(9)), big(0));
    }

    #[test]
    fn rejects_huge_exponent() {
        assert_eq!(
            UniPoly::from_pairs([(1, MAX_EXPONENT + 1)]),
            Err(InterpError::ExponentTooLarge(MAX_EXPONENT + 1))
        );
        assert!(MultiPoly::from_pairs(2, [(1, vec![0, MAX_EXPONENT + 1])]).is_err());
    }

    #[test]
    fn multi_lex_order_is_last_variable_first() {
        let p = MultiPoly::from_pairs(2, [(1, vec![0, 1]), (1, vec![5, 0]), (2, vec![1, 1])]).unwrap();
        let exps: Vec<_> = p.terms().iter().map(|t| t.exps.clone()).collect();
        assert_eq!(exps, vec![vec![5, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(p.leading().unwrap().exps, vec![1, 1]);
    }

    #[test]
    fn multi_eval_matches_direct() {
        let p = MultiPoly::from_pairs(2, [(1, vec![1, 0]), (1, vec![0, 1])]).unwrap();
        assert_eq!(p.eval(&[big(6), big(216)]).unwrap(), big(222));
        assert!(p.eval(&[big(1)]).is_err());
    }

    #[test]
    fn display_is_canonical() {
        let p = MultiPoly::from_pairs(1, [(1, vec![1]), (-1, vec![0])]).unwrap();
        assert_eq!(p.to_string(), "(-1*x1^0+1*x1^1)");
        let q = MultiPoly::from_pairs(2, [(3, vec![0, 0]), (-2, vec![1, 1])]).unwrap();
        assert_eq!(q.to_string(), "(3*x1^0*x2^0-2*x1^1*x2^1)");
        assert_eq!(MultiPoly::zero(3).to_string(), "(0)");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn shuffled_insertion_yields_sorted_terms(
                raw in proptest::collection::vec((-5i64..=5, proptest::collection::vec(0u64..4, 3)), 0..25),
                seed in any::<u64>(),
            ) {
                use rand::{seq::SliceRandom, SeedableRng};
                let p = MultiPoly::from_pairs(3, raw.clone()).unwrap();
                let mut shuffled = raw;
                shuffled.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
                let q = MultiPoly::from_pairs(3, shuffled).unwrap();
                prop_assert_eq!(&p, &q);
                for w in p.terms().windows(2) {
                    prop_assert_eq!(lex_cmp(&w[0].exps, &w[1].exps), Ordering::Less);
                }
                prop_assert!(p.terms().iter().all(|t| !t.coef.is_zero()));
            }
        }
    }
}
