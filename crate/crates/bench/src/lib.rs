//! Fixed inputs shared by the benchmarks.

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ratinterp_core::harness::{random_instance, random_uni_poly, InstanceSpec};
use ratinterp_core::{RationalFunction, UniPoly};

/// A polynomial with `terms` terms of degree at most `degree`, its value at
/// `2C + 1`, that point and `C`.
pub fn decode_input(terms: u64, degree: u64, coef: u64) -> (UniPoly, BigInt, BigInt, BigInt) {
    let mut rng = ChaCha8Rng::seed_from_u64(terms ^ (degree << 20));
    let f = random_uni_poly(&mut rng, terms, degree, coef);
    let c = BigInt::from(coef);
    let beta: BigInt = &c * 2u32 + 1u32;
    let rho = f.eval(&beta);
    (f, rho, beta, c)
}

pub fn instance(n: usize, terms: u64, degree: u64, coef: u64) -> RationalFunction {
    random_instance(&InstanceSpec::new(n, terms, degree, coef, 7 + terms)).expect("instance generates")
}
