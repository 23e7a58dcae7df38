use serde::Serialize;

use crate::error::{Error, Result};

/// How certificate-producing oracles pick between exhaustive and heuristic search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Exhaustive enumeration only; larger instances are rejected.
    Exact,
    /// Spectral sweeps only, even where enumeration would fit.
    Heuristic,
    /// Exact whenever the instance fits under `exact_threshold`.
    Auto,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Mode::Exact),
            "heuristic" => Ok(Mode::Heuristic),
            "auto" => Ok(Mode::Auto),
            other => Err(Error::InvalidConfig(format!("unknown mode {other:?}"))),
        }
    }
}

/// Which oracle actually produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Evidence {
    Exact,
    Heuristic,
}

impl Evidence {
    pub fn and(self, other: Evidence) -> Evidence {
        if self == Evidence::Exact && other == Evidence::Exact {
            Evidence::Exact
        } else {
            Evidence::Heuristic
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub seed: u64,
    pub exact_threshold: usize,
    pub k_max: usize,
    pub retry_limit: usize,
    pub mode: Mode,
    /// Row-weight ceiling for inputs treated as LDPC.
    pub max_check_weight: usize,
    /// Column-weight ceiling for inputs treated as LDPC.
    pub max_bit_degree: usize,
    /// Power-iteration steps used by the spectral sweep.
    pub sweep_iterations: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 0,
            exact_threshold: 22,
            k_max: 24,
            retry_limit: 20,
            mode: Mode::Auto,
            max_check_weight: 16,
            max_bit_degree: 16,
            sweep_iterations: 3000,
        }
    }
}

/// Hard ceiling for subset enumeration; masks are 64-bit and 2^30 subsets is already minutes.
pub const MAX_EXACT_THRESHOLD: usize = 30;

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.exact_threshold == 0 || self.k_max == 0 || self.retry_limit == 0 {
            return Err(Error::InvalidConfig("thresholds must be at least 1".into()));
        }
        if self.exact_threshold > MAX_EXACT_THRESHOLD {
            return Err(Error::InvalidConfig(format!(
                "exact_threshold {} exceeds {MAX_EXACT_THRESHOLD}",
                self.exact_threshold
            )));
        }
        if self.k_max > 40 {
            return Err(Error::InvalidConfig("k_max above 40 is not enumerable".into()));
        }
        Ok(())
    }

    /// Whether an instance of `n` vertices is decided by enumeration.
    pub fn use_exact(&self, n: usize) -> Result<bool> {
        match self.mode {
            Mode::Heuristic => Ok(false),
            Mode::Auto => Ok(n <= self.exact_threshold),
            Mode::Exact if n <= self.exact_threshold => Ok(true),
            Mode::Exact => Err(Error::TooLargeForExact {
                n,
                threshold: self.exact_threshold,
            }),
        }
    }

    pub fn with_seed(&self, seed: u64) -> RunConfig {
        RunConfig { seed, ..self.clone() }
    }
}
