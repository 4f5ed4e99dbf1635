//! Sweep configurations: parameter grids, expansion and parallel execution.

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::registry::{evaluate, lookup, PointContext, PointError};
use crate::exact::parse_rational;
use crate::identities::{Params, VerificationReport};
use crate::Rational;

/// The built-in suite run by `verify all`.
pub const DEFAULT_SUITE: &str = include_str!("../../sweeps.json");

/// Report stream format.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

/// A rational literal written either as a JSON string (`"-3/4"`) or as a
/// JSON integer.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Literal {
    Int(i64),
    Text(String),
}

impl Literal {
    fn parse(&self) -> Result<Rational, String> {
        match self {
            Self::Int(n) => Ok(Rational::from_integer((*n).into())),
            Self::Text(s) => parse_rational(s).map_err(|e| e.to_string()),
        }
    }
}

/// Values a swept parameter takes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SweepValues {
    /// Explicit literals, in the given order.
    List(Vec<Literal>),
    /// Every distinct `n/d` with `num[0] ≤ n ≤ num[1]` and `1 ≤ d ≤ den_max`,
    /// ascending.
    Range { num: [i64; 2], den_max: i64 },
}

impl SweepValues {
    pub fn expand(&self) -> Result<Vec<Rational>, String> {
        match self {
            Self::List(items) => items.iter().map(Literal::parse).collect(),
            Self::Range { num: [lo, hi], den_max } => {
                if lo > hi || *den_max < 1 {
                    return Err(format!("empty range num [{lo}, {hi}] den_max {den_max}"));
                }
                let mut vals: Vec<Rational> = (1..=*den_max)
                    .flat_map(|d| (*lo..=*hi).map(move |n| Rational::new(n.into(), d.into())))
                    .collect();
                vals.sort();
                vals.dedup();
                Ok(vals)
            }
        }
    }
}

fn default_window() -> usize {
    12
}

/// One verifier sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub identity: String,
    #[serde(default)]
    pub fixed: BTreeMap<String, Literal>,
    #[serde(default)]
    pub swept: BTreeMap<String, SweepValues>,
    /// Length of random windows for verifiers that draw them.
    #[serde(default = "default_window")]
    pub max_window: usize,
    #[serde(default)]
    pub output: OutputFormat,
    #[serde(default)]
    pub seed: u64,
    /// Draw this many random points from the swept values instead of taking
    /// the full Cartesian product.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    /// Evaluate outside the verifier's stated hypotheses where supported.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub force: bool,
}

/// Configuration problem; maps to exit code 2.
#[derive(Debug, Clone, PartialEq)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}

/// Parses a config document: one [`SweepConfig`] object or an array of them.
pub fn parse_configs(text: &str) -> Result<Vec<SweepConfig>, ConfigError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| ConfigError(format!("config is not valid JSON: {e}")))?;
    let parsed = if value.is_array() {
        serde_json::from_value(value)
    } else {
        serde_json::from_value(value).map(|c| vec![c])
    };
    parsed.map_err(|e| ConfigError(format!("invalid sweep config: {e}")))
}

/// The built-in suite.
pub fn default_suite() -> Vec<SweepConfig> {
    parse_configs(DEFAULT_SUITE).expect("built-in suite is valid")
}

impl SweepConfig {
    /// Parameter points in deterministic order: the Cartesian product with
    /// parameters in name order (the last name varies fastest), or `samples`
    /// seeded random draws.
    pub fn expand(&self) -> Result<Vec<Params>, ConfigError> {
        let spec = lookup(&self.identity)
            .ok_or_else(|| ConfigError(format!("unknown identity '{}'", self.identity)))?;
        if let Some(dup) = self.fixed.keys().find(|k| self.swept.contains_key(*k)) {
            return Err(ConfigError(format!("parameter '{dup}' is both fixed and swept")));
        }
        spec.check_names(self.fixed.keys().chain(self.swept.keys()).map(String::as_str))
            .map_err(ConfigError)?;

        let err = |name: &str, e: String| ConfigError(format!("parameter '{name}': {e}"));
        let fixed: Params = self
            .fixed
            .iter()
            .map(|(k, v)| v.parse().map(|q| (k.clone(), q)).map_err(|e| err(k, e)))
            .collect::<Result<_, _>>()?;
        let axes: Vec<(String, Vec<Rational>)> = self
            .swept
            .iter()
            .map(|(k, v)| v.expand().map(|vals| (k.clone(), vals)).map_err(|e| err(k, e)))
            .collect::<Result<_, _>>()?;
        if let Some((name, _)) = axes.iter().find(|(_, vals)| vals.is_empty()) {
            return Err(err(name, "no values".into()));
        }

        let point = |choice: &dyn Fn(usize, &[Rational]) -> Rational| {
            let mut p = fixed.clone();
            for (i, (name, vals)) in axes.iter().enumerate() {
                p.insert(name.clone(), choice(i, vals));
            }
            p
        };
        match self.samples {
            Some(count) => {
                let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
                Ok((0..count)
                    .map(|_| {
                        let picks: Vec<Rational> = axes
                            .iter()
                            .map(|(_, vals)| vals.choose(&mut rng).expect("non-empty").clone())
                            .collect();
                        point(&|i, _| picks[i].clone())
                    })
                    .collect())
            }
            None => {
                let total: usize = axes.iter().map(|(_, v)| v.len()).product();
                Ok((0..total)
                    .map(|mut idx| {
                        let mut digits = vec![0; axes.len()];
                        for (i, (_, vals)) in axes.iter().enumerate().rev() {
                            digits[i] = idx % vals.len();
                            idx /= vals.len();
                        }
                        point(&|i, vals| vals[digits[i]].clone())
                    })
                    .collect())
            }
        }
    }

    /// Runs every point, in parallel, returning reports in point order.
    pub fn run(&self) -> Result<Vec<VerificationReport>, ConfigError> {
        let spec = lookup(&self.identity)
            .ok_or_else(|| ConfigError(format!("unknown identity '{}'", self.identity)))?;
        let points = self.expand()?;
        let results: Vec<Result<Vec<VerificationReport>, ConfigError>> = points
            .par_iter()
            .enumerate()
            .map(|(i, p)| {
                let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
                rng.set_stream(i as u64 + 1);
                let mut ctx = PointContext {
                    max_window: self.max_window,
                    force: self.force,
                    rng,
                };
                match evaluate(spec, p, &mut ctx) {
                    Ok(reports) => Ok(reports),
                    Err(PointError::Excluded(reason)) => {
                        Ok(vec![VerificationReport::excluded(spec.name, p.clone(), reason)])
                    }
                    Err(PointError::Fatal(msg)) => Err(ConfigError(format!("{}: {msg}", spec.name))),
                }
            })
            .collect();
        let mut out = Vec::new();
        for r in results {
            out.extend(r?);
        }
        Ok(out)
    }
}
