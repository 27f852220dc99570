//! Timing sweeps over random instances, written as CSV.
//!
//! Columns: `algo,n,T,D,C,seed,trial,time_ms,queries,mu,success,base_time_ms`.
//! `base_time_ms` is the time to recover the numerator and the
//! denominator separately from their own polynomial black boxes, the
//! baseline the rational interpolators are compared against. Rows are
//! ordered by parameter value, then trial, whatever order the trials
//! finish in.

use std::io::Write;
use std::str::FromStr;
use std::time::Instant;

use clap::ValueEnum;
use num_bigint::BigInt;
use rayon::prelude::*;
use ratinterp_core::harness::{random_instance, CountingBlackBox, InstanceSpec};
use ratinterp_core::unipoly::DecodeCaps;
use ratinterp_core::{
    build_chain, canonicalize, mpoly_decode, upoly_decode, BlackBox, BoundMode, Bounds, ExpBase, MultiOptions,
    MultiPoly, RationalFunction,
};
use serde::Serialize;

use crate::error::{CliError, Result};
use crate::interpolate::{run_algo, Algo};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Param {
    #[value(name = "T")]
    Terms,
    #[value(name = "D")]
    Degree,
    #[value(name = "n")]
    Vars,
}

/// Parameters held fixed during a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FixedParams {
    pub terms: u64,
    pub degree: u64,
    pub coef: u64,
    pub n: usize,
}

impl Default for FixedParams {
    fn default() -> Self {
        Self {
            terms: 10,
            degree: 10,
            coef: 10,
            n: 1,
        }
    }
}

impl FromStr for FixedParams {
    type Err = CliError;

    /// Parses `T=..,D=..,C=..,n=..`; omitted keys keep their defaults.
    fn from_str(s: &str) -> Result<Self> {
        let mut p = FixedParams::default();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("--fixed entry {part:?} is not key=value")))?;
            let v: u64 = v
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("--fixed value {v:?} is not an integer")))?;
            match k.trim() {
                "T" => p.terms = v,
                "D" => p.degree = v,
                "C" => p.coef = v,
                "n" => p.n = v as usize,
                other => return Err(CliError::Usage(format!("--fixed has unknown key {other:?}"))),
            }
        }
        Ok(p)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchConfig {
    pub algo: Algo,
    pub vary: Param,
    pub values: Vec<u64>,
    pub fixed: FixedParams,
    pub trials: u64,
    pub seed: u64,
    pub max_iter: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchRow {
    pub algo: String,
    pub n: usize,
    #[serde(rename = "T")]
    pub terms: u64,
    #[serde(rename = "D")]
    pub degree: u64,
    #[serde(rename = "C")]
    pub coef: u64,
    pub seed: u64,
    pub trial: u64,
    pub time_ms: u64,
    pub queries: usize,
    pub mu: u64,
    pub success: u8,
    pub base_time_ms: u64,
}

impl BenchConfig {
    fn point(&self, value: u64) -> FixedParams {
        let mut p = self.fixed;
        match self.vary {
            Param::Terms => p.terms = value,
            Param::Degree => p.degree = value,
            Param::Vars => p.n = value as usize,
        }
        p
    }

    fn check(&self) -> Result<()> {
        if self.values.is_empty() {
            return Err(CliError::Usage("--values must list at least one value".into()));
        }
        if self.trials == 0 {
            return Err(CliError::Usage("--trials must be at least 1".into()));
        }
        if self.algo.univariate() && (self.vary == Param::Vars || self.fixed.n != 1) {
            return Err(CliError::Usage(format!(
                "--algo {} is univariate; it cannot vary n or use n != 1",
                self.algo
            )));
        }
        for &v in &self.values {
            let p = self.point(v);
            if p.terms == 0 || p.coef == 0 || p.n == 0 {
                return Err(CliError::Usage(format!("T, C and n must be positive (value {v})")));
            }
        }
        Ok(())
    }
}

fn instance_seed(base: u64, value_index: usize, trial: u64) -> u64 {
    base.wrapping_mul(0x9e37_79b9_7f4a_7c15)
        .wrapping_add((value_index as u64) << 32)
        .wrapping_add(trial)
}

fn bounds_for(algo: Algo, p: &FixedParams, max_iter: Option<u64>) -> Bounds {
    let mut b = Bounds::new(p.coef).with_terms(p.terms).with_degree(p.degree);
    if algo == Algo::Mrf2 {
        b = b.with_last_degree(p.degree);
    }
    if let Some(m) = max_iter {
        b = b.with_max_iter(m);
    }
    b
}

/// Time to decode numerator and denominator from their own black boxes at
/// `beta = 2C + 1`.
fn base_case(h: &RationalFunction, p: &FixedParams) -> Result<u64> {
    let start = Instant::now();
    let c = BigInt::from(p.coef);
    let beta: BigInt = &c * 2u32 + 1u32;
    let chain = build_chain(&beta, &vec![1; p.n], p.degree, ExpBase::DPlusOne)?;
    for poly in [h.num(), h.den()] {
        if poly.is_zero() {
            continue;
        }
        let mut bb = CountingBlackBox::new(canonicalize(poly.clone(), MultiPoly::constant(p.n, 1))?);
        let v = bb.query(chain.points())?;
        if p.n == 1 {
            std::hint::black_box(upoly_decode(v.numer(), &chain.points()[0], &c, DecodeCaps::NONE).ok());
        } else {
            std::hint::black_box(
                mpoly_decode(chain.points(), v.numer(), Some(p.terms), p.degree, &c, BoundMode::Exact).ok(),
            );
        }
    }
    Ok(start.elapsed().as_millis() as u64)
}

fn run_trial(cfg: &BenchConfig, value_index: usize, value: u64, trial: u64) -> Result<BenchRow> {
    let p = cfg.point(value);
    let seed = instance_seed(cfg.seed, value_index, trial);
    let h = random_instance(&InstanceSpec::new(p.n, p.terms, p.degree, p.coef, seed))?;
    let bounds = bounds_for(cfg.algo, &p, cfg.max_iter);
    let mut bb = CountingBlackBox::new(h.clone());
    let start = Instant::now();
    let result = run_algo(cfg.algo, &mut bb, &bounds, &MultiOptions::seeded(seed));
    let time_ms = start.elapsed().as_millis() as u64;
    let (mu, success) = match &result {
        Ok(r) => (r.mu, u8::from(r.function == h)),
        Err(_) => (0, 0),
    };
    Ok(BenchRow {
        algo: cfg.algo.name().to_string(),
        n: p.n,
        terms: p.terms,
        degree: p.degree,
        coef: p.coef,
        seed,
        trial,
        time_ms,
        queries: bb.queries(),
        mu,
        success,
        base_time_ms: base_case(&h, &p)?,
    })
}

/// Runs every (value, trial) pair, in parallel, and returns rows in order.
pub fn run_bench(cfg: &BenchConfig) -> Result<Vec<BenchRow>> {
    cfg.check()?;
    let jobs: Vec<(usize, u64, u64)> = cfg
        .values
        .iter()
        .enumerate()
        .flat_map(|(i, &v)| (0..cfg.trials).map(move |t| (i, v, t)))
        .collect();
    jobs.par_iter()
        .map(|&(i, v, t)| run_trial(cfg, i, v, t))
        .collect()
}

pub fn write_csv<W: Write>(rows: &[BenchRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    if rows.is_empty() {
        w.write_record([
            "algo", "n", "T", "D", "C", "seed", "trial", "time_ms", "queries", "mu", "success", "base_time_ms",
        ])?;
    }
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}
