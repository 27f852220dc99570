use crate::error::{InterpError, Result};

/// Default size of the shift set `{1, ..., N}`.
pub const DEFAULT_SHIFT_RANGE: u64 = 1 << 40;
/// Default cap on the μ-search loop.
pub const DEFAULT_MAX_ITER: u64 = 10_000_000;

/// Caller-supplied bounds on the unknown function.
///
/// `terms` (T), `degree` (D) and `last_degree` (Dn) are optional because
/// each algorithm needs a different subset; the algorithms report a missing
/// bound as [`InterpError::InvalidBounds`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    pub terms: Option<u64>,
    pub degree: Option<u64>,
    pub last_degree: Option<u64>,
    pub coef: u64,
    pub shift_range: u64,
    pub max_iter: u64,
}

impl Bounds {
    pub fn new(coef: u64) -> Self {
        Self {
            terms: None,
            degree: None,
            last_degree: None,
            coef,
            shift_range: DEFAULT_SHIFT_RANGE,
            max_iter: DEFAULT_MAX_ITER,
        }
    }

    pub fn with_terms(mut self, t: u64) -> Self {
        self.terms = Some(t);
        self
    }

    pub fn with_degree(mut self, d: u64) -> Self {
        self.degree = Some(d);
        self
    }

    pub fn with_last_degree(mut self, dn: u64) -> Self {
        self.last_degree = Some(dn);
        self
    }

    pub fn with_shift_range(mut self, n: u64) -> Self {
        self.shift_range = n;
        self
    }

    pub fn with_max_iter(mut self, cap: u64) -> Self {
        self.max_iter = cap;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(InterpError::InvalidBounds(m.to_string()));
        if self.coef < 1 {
            return bad("C must be at least 1");
        }
        if self.terms == Some(0) {
            return bad("T must be at least 1");
        }
        if self.shift_range < 1 {
            return bad("N must be at least 1");
        }
        if self.max_iter < 1 {
            return bad("max_iter must be at least 1");
        }
        Ok(())
    }

    pub fn require_terms(&self) -> Result<u64> {
        self.terms
            .ok_or_else(|| InterpError::InvalidBounds("this algorithm needs the term bound T".into()))
    }

    pub fn require_degree(&self) -> Result<u64> {
        self.degree
            .ok_or_else(|| InterpError::InvalidBounds("this algorithm needs the degree bound D".into()))
    }

    pub fn require_last_degree(&self) -> Result<u64> {
        self.last_degree.ok_or_else(|| {
            InterpError::InvalidBounds("this algorithm needs the last-variable degree bound Dn".into())
        })
    }
}
