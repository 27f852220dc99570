use std::time::{Duration, Instant};

use clap::ValueEnum;
use ratinterp_core::harness::CountingBlackBox;
use ratinterp_core::{
    mrfunsi1, mrfunsi2, urfunsi1, urfunsi2, urfunsip, BlackBox, Bounds, InterpError, MultiOptions,
    RationalFunction, Recovered,
};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum)]
pub enum Algo {
    Urf1,
    Urf2,
    Urfp,
    Mrf1,
    Mrf2,
}

impl Algo {
    pub const ALL: [Algo; 5] = [Algo::Urf1, Algo::Urf2, Algo::Urfp, Algo::Mrf1, Algo::Mrf2];

    pub fn name(self) -> &'static str {
        match self {
            Algo::Urf1 => "urf1",
            Algo::Urf2 => "urf2",
            Algo::Urfp => "urfp",
            Algo::Mrf1 => "mrf1",
            Algo::Mrf2 => "mrf2",
        }
    }

    pub fn univariate(self) -> bool {
        matches!(self, Algo::Urf1 | Algo::Urf2 | Algo::Urfp)
    }

    /// Black-box queries one successful run spends.
    pub fn expected_queries(self) -> usize {
        match self {
            Algo::Urf1 | Algo::Mrf1 => 1,
            _ => 2,
        }
    }

    /// Whether a successful answer is always correct.
    pub fn deterministic(self) -> bool {
        matches!(self, Algo::Urf1 | Algo::Urf2)
    }
}

impl std::fmt::Display for Algo {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Bounds and options as given on the command line.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunParams {
    pub terms: Option<u64>,
    pub degree: Option<u64>,
    pub last_degree: Option<u64>,
    pub coef: Option<u64>,
    pub shift_range: Option<u64>,
    pub max_iter: Option<u64>,
    pub seed: u64,
    pub validate_extra: bool,
}

impl RunParams {
    /// Checks that `algo` gets every bound it needs.
    pub fn bounds_for(&self, algo: Algo) -> Result<Bounds> {
        let need = |v: Option<u64>, flag: &str| {
            v.ok_or_else(|| CliError::Usage(format!("--algo {algo} requires --{flag}")))
        };
        let mut b = Bounds::new(need(self.coef, "C")?);
        match algo {
            Algo::Urf1 | Algo::Urf2 => b = b.with_terms(need(self.terms, "T")?),
            Algo::Urfp => b = b.with_degree(need(self.degree, "D")?),
            Algo::Mrf1 => {
                b = b
                    .with_terms(need(self.terms, "T")?)
                    .with_degree(need(self.degree, "D")?)
            }
            Algo::Mrf2 => {
                b = b
                    .with_degree(need(self.degree, "D")?)
                    .with_last_degree(need(self.last_degree, "Dn")?)
            }
        }
        if let Some(n) = self.shift_range {
            b = b.with_shift_range(n);
        }
        if let Some(m) = self.max_iter {
            b = b.with_max_iter(m);
        }
        b.validate()?;
        Ok(b)
    }

    pub fn options(&self) -> MultiOptions {
        MultiOptions {
            seed: self.seed,
            shifts: None,
            validate_extra: self.validate_extra,
        }
    }
}

/// Runs one interpolator against `bb`.
pub fn run_algo<B: BlackBox>(
    algo: Algo,
    bb: B,
    bounds: &Bounds,
    opts: &MultiOptions,
) -> std::result::Result<Recovered, InterpError> {
    match algo {
        Algo::Urf1 => urfunsi1(bb, bounds),
        Algo::Urf2 => urfunsi2(bb, bounds),
        Algo::Urfp => urfunsip(bb, bounds),
        Algo::Mrf1 => mrfunsi1(bb, bounds, opts),
        Algo::Mrf2 => mrfunsi2(bb, bounds, opts),
    }
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub recovered: Recovered,
    pub queries: usize,
    pub elapsed: Duration,
}

impl Outcome {
    pub fn stats_line(&self) -> String {
        format!(
            "queries={} mu={} side={} time_ms={}",
            self.queries,
            self.recovered.mu,
            self.recovered.side,
            self.elapsed.as_millis()
        )
    }
}

/// Interpolates `h` through a counting black box.
pub fn interpolate(algo: Algo, h: RationalFunction, params: &RunParams) -> Result<Outcome> {
    let bounds = params.bounds_for(algo)?;
    if algo.univariate() && h.nvars() != 1 {
        return Err(CliError::Input(format!(
            "--algo {algo} is univariate but the function has {} variables",
            h.nvars()
        )));
    }
    let mut bb = CountingBlackBox::new(h);
    let start = Instant::now();
    let recovered = run_algo(algo, &mut bb, &bounds, &params.options())?;
    Ok(Outcome {
        recovered,
        queries: bb.queries(),
        elapsed: start.elapsed(),
    })
}
