//! `verify` configuration: a JSON object whose missing fields take the
//! defaults below.

use std::path::{Path, PathBuf};

use qk_eigenlab_core::exact::parse_rational;
use qk_eigenlab_core::Rational;
use serde::{Deserialize, Serialize};

use crate::suites::SUITE_NAMES;

pub const MAX_CHARGE: u32 = 16;
pub const MAX_TRUNCATION: u32 = 64;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(ConfigError::Invalid(format!("unknown format `{other}`"))),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("malformed config: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("invalid config: {0}")]
    Invalid(String),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    pub suites: Vec<String>,
    /// Inclusive `[q_min, q_max]`.
    pub q_range: [u32; 2],
    pub k_values: Vec<String>,
    pub truncation: u32,
    pub fd_step: f64,
    pub tolerance: f64,
    pub output_path: String,
    pub format: Format,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suites: SUITE_NAMES.iter().map(|s| s.to_string()).collect(),
            q_range: [0, 3],
            k_values: ["-1/1", "0/1", "1/2", "1/1", "2/1"]
                .map(String::from)
                .to_vec(),
            truncation: 14,
            fd_step: 1e-4,
            tolerance: 1e-6,
            output_path: "qk-report.json".into(),
            format: Format::Json,
        }
    }
}

/// A validated config with parsed, sorted and deduplicated parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct Plan {
    pub suites: Vec<&'static str>,
    pub charges: Vec<u32>,
    pub k_values: Vec<Rational>,
    pub truncation: u32,
    pub fd_step: f64,
    pub tolerance: f64,
    pub output_path: PathBuf,
    pub format: Format,
}

impl SuiteConfig {
    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.to_owned(),
            source,
        })?;
        Ok(serde_json::from_str(&text)?)
    }

    pub fn validate(&self) -> Result<Plan, ConfigError> {
        let invalid = |msg: String| Err(ConfigError::Invalid(msg));
        let mut suites = Vec::new();
        for name in &self.suites {
            match SUITE_NAMES.iter().find(|s| *s == name) {
                Some(s) if !suites.contains(s) => suites.push(*s),
                Some(_) => {}
                None => return invalid(format!("unknown suite `{name}`")),
            }
        }
        // registry order, independent of the order in the file
        suites.sort_by_key(|s| SUITE_NAMES.iter().position(|t| t == s));
        let [lo, hi] = self.q_range;
        if lo > hi || hi > MAX_CHARGE {
            return invalid(format!(
                "q_range [{lo}, {hi}] must satisfy 0 <= lo <= hi <= {MAX_CHARGE}"
            ));
        }
        if self.truncation > MAX_TRUNCATION {
            return invalid(format!(
                "truncation {} exceeds {MAX_TRUNCATION}",
                self.truncation
            ));
        }
        if self.truncation < hi + 2 {
            return invalid(format!(
                "truncation {} must be at least q_max + 2 = {}",
                self.truncation,
                hi + 2
            ));
        }
        if self.k_values.is_empty() {
            return invalid("k_values is empty".into());
        }
        let mut k_values = self
            .k_values
            .iter()
            .map(|s| parse_rational(s).map_err(|e| ConfigError::Invalid(format!("k value: {e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        k_values.sort();
        k_values.dedup();
        if !(self.fd_step.is_finite() && self.fd_step > 0.0 && self.fd_step < 1.0) {
            return invalid(format!("fd_step {} must lie in (0, 1)", self.fd_step));
        }
        if !(self.tolerance.is_finite() && self.tolerance >= 0.0) {
            return invalid(format!(
                "tolerance {} must be finite and >= 0",
                self.tolerance
            ));
        }
        if self.output_path.is_empty() {
            return invalid("output_path is empty".into());
        }
        Ok(Plan {
            suites,
            charges: (lo..=hi).collect(),
            k_values,
            truncation: self.truncation,
            fd_step: self.fd_step,
            tolerance: self.tolerance,
            output_path: PathBuf::from(&self.output_path),
            format: self.format,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_object_is_the_default() {
        let cfg: SuiteConfig = serde_json::from_str("{}").unwrap();
        assert_eq!(cfg, SuiteConfig::default());
        let plan = cfg.validate().unwrap();
        assert_eq!(plan.charges, vec![0, 1, 2, 3]);
        assert_eq!(plan.k_values.len(), 5);
        assert_eq!(plan.suites.len(), SUITE_NAMES.len());
    }

    #[test]
    fn malformed_k_is_rejected() {
        let cfg = SuiteConfig {
            k_values: vec!["1//2".into()],
            ..SuiteConfig::default()
        };
        assert!(matches!(cfg.validate(), Err(ConfigError::Invalid(_))));
    }

    #[test]
    fn bounds() {
        let bad = [
            SuiteConfig {
                q_range: [0, 17],
                truncation: 64,
                ..SuiteConfig::default()
            },
            SuiteConfig {
                q_range: [3, 1],
                ..SuiteConfig::default()
            },
            SuiteConfig {
                truncation: 65,
                ..SuiteConfig::default()
            },
            SuiteConfig {
                truncation: 4,
                ..SuiteConfig::default()
            },
            SuiteConfig {
                suites: vec!["nope".into()],
                ..SuiteConfig::default()
            },
            SuiteConfig {
                fd_step: 0.0,
                ..SuiteConfig::default()
            },
            SuiteConfig {
                tolerance: -1.0,
                ..SuiteConfig::default()
            },
        ];
        for cfg in bad {
            assert!(cfg.validate().is_err(), "{cfg:?}");
        }
    }

    #[test]
    fn unknown_fields_are_errors() {
        assert!(serde_json::from_str::<SuiteConfig>(r#"{"truncaton": 3}"#).is_err());
    }

    #[test]
    fn k_values_are_sorted_and_deduplicated() {
        let cfg = SuiteConfig {
            k_values: vec!["2/1".into(), "-1/2".into(), "4/2".into()],
            ..SuiteConfig::default()
        };
        let plan = cfg.validate().unwrap();
        assert_eq!(plan.k_values.len(), 2);
        assert!(plan.k_values[0] < plan.k_values[1]);
    }
}
