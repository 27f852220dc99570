//! Sparse interpolation of rational functions `h = f/g` with bounded
//! integer coefficients from one or two black-box values at large integer
//! points.

pub mod blackbox;
pub mod bounds;
pub mod error;
pub mod harness;
pub mod multipoly;
pub mod multirat;
pub mod poly;
pub mod rational;
pub mod unipoly;
pub mod unirat;

pub use blackbox::BlackBox;
pub use bounds::Bounds;
pub use error::{InterpError, Result};
pub use poly::{MultiPoly, MultiTerm, UniPoly, UniTerm};
pub use rational::{canonicalize, eval_rational, Rational, RationalFunction};
pub use unipoly::{upoly_decode, DecodeCaps, DecodeFailure, DecodeResult};
pub use multipoly::{build_chain, coef_bound, mpoly_decode, BoundMode, ExpBase, SubstitutionChain};
pub use multirat::{mrfunsi1, mrfunsi2, sample_shifts, success_lower_bound, MultiOptions};
pub use unirat::{urfunsi1, urfunsi2, urfunsip, Recovered, Side};
