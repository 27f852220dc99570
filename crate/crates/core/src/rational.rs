//! Rational functions `f/g` in canonical form and their exact evaluation.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{InterpError, Result};
use crate::poly::{MultiPoly, MultiTerm, UniPoly};

/// Exact reduced rational value with a positive denominator.
pub type Rational = BigRational;

/// A rational function `num/den` whose joint integer content is 1 and whose
/// denominator has a positive leading coefficient.
///
/// Structural equality coincides with equality of rational functions as
/// long as the polynomial parts are coprime, which the interpolators
/// guarantee for their outputs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: MultiPoly,
    den: MultiPoly,
}

impl RationalFunction {
    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.den.nvars()
    }

    pub fn zero(n: usize) -> Self {
        Self {
            num: MultiPoly::zero(n),
            den: MultiPoly::constant(n, 1),
        }
    }

    /// `max(#num, #den)`.
    pub fn term_count(&self) -> usize {
        self.num.len().max(self.den.len())
    }

    pub fn total_degree(&self) -> u64 {
        self.num
            .total_degree()
            .unwrap_or(0)
            .max(self.den.total_degree().unwrap_or(0))
    }

    pub fn height(&self) -> BigInt {
        self.num.height().max(self.den.height())
    }

    /// Same function with numerator and denominator both multiplied by `k`;
    /// the result is deliberately not canonical.
    pub fn scaled_raw(&self, k: &BigInt) -> (MultiPoly, MultiPoly) {
        (self.num.scale(k), self.den.scale(k))
    }

    pub fn eval(&self, point: &[BigInt]) -> Result<Rational> {
        eval_rational(self, point)
    }
}

/// Removes the joint integer content of `(f, g)` and fixes the sign so the
/// leading coefficient of the denominator is positive.
pub fn canonicalize(f: MultiPoly, g: MultiPoly) -> Result<RationalFunction> {
    if g.is_zero() {
        return Err(InterpError::ZeroDenominator);
    }
    if f.nvars() != g.nvars() {
        return Err(InterpError::DimensionMismatch {
            expected: g.nvars(),
            got: f.nvars(),
        });
    }
    let n = g.nvars();
    if f.is_zero() {
        return Ok(RationalFunction::zero(n));
    }
    let mut k = f.content().gcd(&g.content());
    if g.leading().is_some_and(|t| t.coef.is_negative()) {
        k = -k;
    }
    Ok(RationalFunction {
        num: f.div_exact(&k),
        den: g.div_exact(&k),
    })
}

/// Univariate convenience wrapper around [`canonicalize`].
pub fn canonicalize_uni(f: &UniPoly, g: &UniPoly) -> Result<RationalFunction> {
    canonicalize(f.to_multi(), g.to_multi())
}

/// Exact reduced value of `h` at `point`.
pub fn eval_rational(h: &RationalFunction, point: &[BigInt]) -> Result<Rational> {
    let den = h.den.eval(point)?;
    if den.is_zero() {
        return Err(InterpError::Pole);
    }
    let num = h.num.eval(point)?;
    Ok(BigRational::new(num, den))
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Parses the canonical polynomial text `(c*x1^e1*...+...)` or `(0)`.
///
/// Every term must list the variables `x1..xn` in order. Returns `None`
/// for the variable count when the polynomial is `(0)`.
pub fn parse_poly(text: &str) -> Result<(Option<usize>, Vec<MultiTerm>)> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = s
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| InterpError::Parse(format!("expected parenthesized polynomial, got {text:?}")))?;
    if inner == "0" {
        return Ok((None, Vec::new()));
    }
    if inner.is_empty() {
        return Err(InterpError::Parse("empty polynomial".into()));
    }
    // Split at '+'/'-' that start a new term (never right after '^' or at the start).
    let bytes = inner.as_bytes();
    let mut pieces = Vec::new();
    let mut start = 0;
    for i in 1..bytes.len() {
        if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' && bytes[i - 1] != b'*' {
            pieces.push(&inner[start..i]);
            start = i;
        }
    }
    pieces.push(&inner[start..]);

    let mut n = None;
    let mut terms = Vec::with_capacity(pieces.len());
    for piece in pieces {
        let piece = piece.strip_prefix('+').unwrap_or(piece);
        let mut factors = piece.split('*');
        let coef_text = factors.next().unwrap_or_default();
        let coef = BigInt::from_str(coef_text)
            .map_err(|_| InterpError::Parse(format!("bad coefficient {coef_text:?}")))?;
        let mut exps = Vec::new();
        for (idx, factor) in factors.enumerate() {
            let (var, exp) = factor
                .split_once('^')
                .ok_or_else(|| InterpError::Parse(format!("bad factor {factor:?}")))?;
            if var != format!("x{}", idx + 1) {
                return Err(InterpError::Parse(format!(
                    "expected variable x{} but found {var:?}",
                    idx + 1
                )));
            }
            let e: u64 = exp
                .parse()
                .map_err(|_| InterpError::Parse(format!("bad exponent {exp:?}")))?;
            exps.push(e);
        }
        match n {
            None => n = Some(exps.len()),
            Some(k) if k != exps.len() => {
                return Err(InterpError::Parse(format!(
                    "term {piece:?} has {} variables, expected {k}",
                    exps.len()
                )))
            }
            _ => {}
        }
        if n == Some(0) {
            return Err(InterpError::Parse("terms must name at least x1".into()));
        }
        terms.push(MultiTerm { coef, exps });
    }
    Ok((n, terms))
}

impl FromStr for RationalFunction {
    type Err = InterpError;

    /// Parses `num/den` in canonical text and canonicalizes the result.
    fn from_str(s: &str) -> Result<Self> {
        let (num_text, den_text) = s
            .split_once(")/(")
            .map(|(a, b)| (format!("{a})"), format!("({b}")))
            .ok_or_else(|| InterpError::Parse(format!("expected (num)/(den), got {s:?}")))?;
        let (nn, nterms) = parse_poly(&num_text)?;
        let (dn, dterms) = parse_poly(&den_text)?;
        let n = match (nn, dn) {
            (Some(a), Some(b)) if a != b => {
                return Err(InterpError::Parse(format!(
                    "numerator has {a} variables but denominator has {b}"
                )))
            }
            (_, Some(b)) => b,
            (Some(_), None) | (None, None) => return Err(InterpError::ZeroDenominator),
        };
        canonicalize(MultiPoly::new(n, nterms)?, MultiPoly::new(n, dterms)?)
    }
}
