//! JSON function spec files.
//!
//! ```json
//! {"n": 1,
//!  "numerator":   [{"c": "1", "e": [0]}, {"c": "1", "e": [1]}],
//!  "denominator": [{"c": "-1", "e": [0]}, {"c": "1", "e": [1]}]}
//! ```
//!
//! Coefficients are decimal strings so that large values survive any JSON
//! tooling.

use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use ratinterp_core::{canonicalize, MultiPoly, MultiTerm, RationalFunction};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub c: String,
    pub e: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionSpec {
    pub n: usize,
    pub numerator: Vec<TermSpec>,
    pub denominator: Vec<TermSpec>,
}

impl FunctionSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("spec file: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn from_function(h: &RationalFunction) -> Self {
        let terms = |p: &MultiPoly| {
            p.terms()
                .iter()
                .map(|t| TermSpec {
                    c: t.coef.to_string(),
                    e: t.exps.clone(),
                })
                .collect()
        };
        Self {
            n: h.nvars(),
            numerator: terms(h.num()),
            denominator: terms(h.den()),
        }
    }

    pub fn to_function(&self) -> Result<RationalFunction> {
        if self.n == 0 {
            return Err(CliError::Input("n must be at least 1".into()));
        }
        let poly = |which: &str, terms: &[TermSpec]| -> Result<MultiPoly> {
            let mut out = Vec::with_capacity(terms.len());
            for t in terms {
                let coef = BigInt::from_str(t.c.trim())
                    .map_err(|_| CliError::Input(format!("{which}: bad coefficient {:?}", t.c)))?;
                if t.e.len() != self.n {
                    return Err(CliError::Input(format!(
                        "{which}: exponent vector {:?} does not have length {}",
                        t.e, self.n
                    )));
                }
                out.push(MultiTerm {
                    coef,
                    exps: t.e.clone(),
                });
            }
            Ok(MultiPoly::new(self.n, out)?)
        };
        let f = poly("numerator", &self.numerator)?;
        let g = poly("denominator", &self.denominator)?;
        Ok(canonicalize(f, g)?)
    }
}

pub fn load(path: &Path) -> Result<RationalFunction> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    FunctionSpec::from_json(&text)?.to_function()
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = r#"{"n":1,"numerator":[{"c":"2","e":[0]},{"c":"2","e":[1]}],
        "denominator":[{"c":"-2","e":[0]},{"c":"2","e":[1]}]}"#;

    #[test]
    fn parses_and_canonicalizes() {
        let h = FunctionSpec::from_json(SAMPLE).unwrap().to_function().unwrap();
        assert_eq!(h.to_string(), "(1*x1^0+1*x1^1)/(-1*x1^0+1*x1^1)");
        let back = FunctionSpec::from_function(&h);
        assert_eq!(FunctionSpec::from_json(&back.to_json()).unwrap().to_function().unwrap(), h);
    }

    #[test]
    fn rejects_malformed_specs() {
        for bad in [
            "not json",
            r#"{"n":1,"numerator":[],"denominator":[]}"#,
            r#"{"n":1,"numerator":[{"c":"x","e":[0]}],"denominator":[{"c":"1","e":[0]}]}"#,
            r#"{"n":2,"numerator":[{"c":"1","e":[0]}],"denominator":[{"c":"1","e":[0,0]}]}"#,
            r#"{"n":0,"numerator":[],"denominator":[]}"#,
            r#"{"n":1,"numerator":[],"denominator":[{"c":"1","e":[0]}],"extra":1}"#,
        ] {
            let r = FunctionSpec::from_json(bad).and_then(|s| s.to_function());
            assert_eq!(r.unwrap_err().exit_code(), 3, "{bad}");
        }
    }

    #[test]
    fn big_coefficients_survive() {
        let text = r#"{"n":1,"numerator":[{"c":"123456789012345678901234567890","e":[3]}],
            "denominator":[{"c":"1","e":[0]}]}"#;
        let h = FunctionSpec::from_json(text).unwrap().to_function().unwrap();
        assert!(h.to_string().starts_with("(123456789012345678901234567890*x1^3)"));
    }
}
