//! Runtime configuration: flags, then environment, then a `key = value`
//! file, then built-in defaults.

use std::num::ParseIntError;

use thiserror::Error;

use crate::complementary::DEFAULT_SEARCH_BOUND;
use crate::factorial_sums::DEFAULT_SNTP_PRIME_BOUND;
use crate::numeric::DEFAULT_SIEVE_CAP;

pub const ENV_SIEVE_LIMIT: &str = "SMK_SIEVE_LIMIT";
pub const ENV_SNTP_BOUND: &str = "SMK_SNTP_BOUND";
pub const ENV_SEARCH_BOUND: &str = "SMK_SEARCH_BOUND";

pub const DEFAULT_IDENTIFY_MAX_TERMS: u64 = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    pub sieve_limit: u64,
    pub sntp_prime_bound: u64,
    pub generic_search_bound: u64,
    pub identify_max_terms: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            sieve_limit: DEFAULT_SIEVE_CAP,
            sntp_prime_bound: DEFAULT_SNTP_PRIME_BOUND,
            generic_search_bound: DEFAULT_SEARCH_BOUND,
            identify_max_terms: DEFAULT_IDENTIFY_MAX_TERMS,
        }
    }
}

/// One configuration layer; unset keys fall through to the next.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Overrides {
    pub sieve_limit: Option<u64>,
    pub sntp_prime_bound: Option<u64>,
    pub generic_search_bound: Option<u64>,
    pub identify_max_terms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("config line {line}: expected `key = value`, got {text:?}")]
    Syntax { line: usize, text: String },
    #[error("config line {line}: unknown key {key:?}")]
    UnknownKey { line: usize, key: String },
    #[error("{origin}: invalid value {value:?} for {key}: {reason}")]
    BadValue { origin: String, key: String, value: String, reason: String },
}

fn parse_value(origin: &str, key: &str, value: &str) -> Result<u64, ConfigError> {
    let bad = |reason: String| ConfigError::BadValue {
        origin: origin.to_string(),
        key: key.to_string(),
        value: value.to_string(),
        reason,
    };
    let v: u64 = value.trim().parse().map_err(|e: ParseIntError| bad(e.to_string()))?;
    if v == 0 {
        return Err(bad("must be positive".into()));
    }
    Ok(v)
}

impl Overrides {
    fn slot(&mut self, key: &str) -> Option<&mut Option<u64>> {
        match key {
            "sieve-limit" => Some(&mut self.sieve_limit),
            "sntp-prime-bound" => Some(&mut self.sntp_prime_bound),
            "generic-search-bound" => Some(&mut self.generic_search_bound),
            "identify-max-terms" => Some(&mut self.identify_max_terms),
            _ => None,
        }
    }

    /// Parses `key = value` lines; blank lines and `#` comments are ignored.
    pub fn from_file_text(text: &str) -> Result<Self, ConfigError> {
        let mut out = Overrides::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| ConfigError::Syntax { line: i + 1, text: raw.to_string() })?;
            let key = key.trim();
            let origin = format!("config line {}", i + 1);
            let v = parse_value(&origin, key, value)?;
            let slot = out
                .slot(key)
                .ok_or_else(|| ConfigError::UnknownKey { line: i + 1, key: key.to_string() })?;
            *slot = Some(v);
        }
        Ok(out)
    }

    pub fn from_env(get: impl Fn(&str) -> Option<String>) -> Result<Self, ConfigError> {
        let mut out = Overrides::default();
        for (var, key) in [
            (ENV_SIEVE_LIMIT, "sieve-limit"),
            (ENV_SNTP_BOUND, "sntp-prime-bound"),
            (ENV_SEARCH_BOUND, "generic-search-bound"),
        ] {
            if let Some(value) = get(var) {
                *out.slot(key).expect("known key") = Some(parse_value(var, key, &value)?);
            }
        }
        Ok(out)
    }

    fn apply(&self, c: &mut Config) {
        c.sieve_limit = self.sieve_limit.unwrap_or(c.sieve_limit);
        c.sntp_prime_bound = self.sntp_prime_bound.unwrap_or(c.sntp_prime_bound);
        c.generic_search_bound = self.generic_search_bound.unwrap_or(c.generic_search_bound);
        c.identify_max_terms = self.identify_max_terms.unwrap_or(c.identify_max_terms);
    }
}

impl Config {
    /// Layers are given from lowest to highest precedence.
    pub fn resolve(file: &Overrides, env: &Overrides, flags: &Overrides) -> Config {
        let mut c = Config::default();
        for layer in [file, env, flags] {
            layer.apply(&mut c);
        }
        c
    }
}
