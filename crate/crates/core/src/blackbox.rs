use num_bigint::BigInt;

use crate::error::Result;
use crate::rational::Rational;

/// Query access to an unknown rational function.
///
/// Each query returns the exact reduced value (positive denominator) at an
/// integer point. Implementations count their queries so callers can check
/// how many evaluations an algorithm spent.
pub trait BlackBox {
    fn nvars(&self) -> usize;

    fn query(&mut self, point: &[BigInt]) -> Result<Rational>;

    fn queries(&self) -> usize;
}

impl<B: BlackBox + ?Sized> BlackBox for &mut B {
    fn nvars(&self) -> usize {
        (**self).nvars()
    }

    fn query(&mut self, point: &[BigInt]) -> Result<Rational> {
        (**self).query(point)
    }

    fn queries(&self) -> usize {
        (**self).queries()
    }
}
