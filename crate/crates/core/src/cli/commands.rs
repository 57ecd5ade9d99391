//! Subcommand bodies. Each returns its text instead of printing, so tests
//! can drive them without a process.

use std::fmt::Write;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use super::bfile;
use super::catalog::{Catalog, CatalogEntry, Domain, EvalError, Evaluation, Output};
use super::config::Config;
use crate::errata::ledger;
use crate::numeric::is_prime;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NOT_EXISTS: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;
pub const EXIT_SELFTEST_FAILED: i32 = 4;

pub fn exit_status(e: &Evaluation) -> i32 {
    match e {
        Evaluation::Value(_) => EXIT_OK,
        Evaluation::NotExists(_) => EXIT_NOT_EXISTS,
        Evaluation::Unknown(_) => EXIT_UNKNOWN,
    }
}

pub fn cmd_eval(catalog: &Catalog, name: &str, args: &[&str], config: &Config) -> Result<Evaluation, EvalError> {
    catalog.eval(name, args, config)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeqFormat {
    Plain,
    Csv,
    Bfile,
}

impl FromStr for SeqFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plain" => Ok(SeqFormat::Plain),
            "csv" => Ok(SeqFormat::Csv),
            "bfile" => Ok(SeqFormat::Bfile),
            other => Err(format!("unknown format {other:?}; expected plain, csv or bfile")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeqError {
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error("{0} is not a unary sequence; `smk list` marks the ones that are")]
    NotASequence(String),
    #[error("empty range: from {from} is greater than to {to}")]
    EmptyRange { from: u64, to: u64 },
    #[error("index {n}: {reason}; b-files cannot have gaps")]
    Gap { n: u64, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SeqOutput {
    pub text: String,
    pub warnings: Vec<String>,
}

fn sequence_entry<'a>(catalog: &'a Catalog, name: &str) -> Result<(&'a CatalogEntry, Domain), SeqError> {
    let entry = catalog.lookup(name)?;
    let domain = entry.sequence.ok_or_else(|| SeqError::NotASequence(entry.name.clone()))?;
    Ok((entry, domain))
}

/// Evaluates one index; `Err` carries the reason it has no value.
fn term_at(entry: &CatalogEntry, domain: Domain, n: u64, config: &Config) -> Result<Output, String> {
    if domain == Domain::Primes && !is_prime(n) {
        return Err(format!("{n} is not prime"));
    }
    match entry.evaluate(&[&n.to_string()], config) {
        Ok(Evaluation::Value(v)) => Ok(v),
        Ok(other) => Err(other.to_string()),
        Err(e) => Err(e.to_string()),
    }
}

pub fn cmd_seq(
    catalog: &Catalog,
    name: &str,
    from: u64,
    to: u64,
    format: SeqFormat,
    config: &Config,
) -> Result<SeqOutput, SeqError> {
    if from > to {
        return Err(SeqError::EmptyRange { from, to });
    }
    let (entry, domain) = sequence_entry(catalog, name)?;
    let terms: Vec<(u64, Result<Output, String>)> =
        (from..=to).into_par_iter().map(|n| (n, term_at(entry, domain, n, config))).collect();

    let mut out = SeqOutput::default();
    match format {
        SeqFormat::Bfile => {
            let mut pairs = Vec::with_capacity(terms.len());
            for (n, t) in terms {
                let t = t.map_err(|reason| SeqError::Gap { n, reason: reason.clone() })?;
                let v = t
                    .as_integer()
                    .ok_or_else(|| SeqError::Gap { n, reason: format!("{t} is not an integer") })?;
                pairs.push((n, v));
            }
            out.text = bfile::render(&pairs);
        }
        SeqFormat::Plain | SeqFormat::Csv => {
            let mut values = Vec::with_capacity(terms.len());
            for (n, t) in terms {
                match t {
                    Ok(v) => values.push((n, v)),
                    Err(reason) => out.warnings.push(format!("skipping {n}: {reason}")),
                }
            }
            if format == SeqFormat::Plain {
                let line: Vec<String> = values.iter().map(|(_, v)| v.to_string()).collect();
                out.text = line.join(" ") + "\n";
            } else {
                out.text = String::from("n,value\n");
                for (n, v) in values {
                    writeln!(out.text, "{n},{v}").expect("writing to a String");
                }
            }
        }
    }
    Ok(out)
}

pub const IDENTIFY_MIN_TERMS: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentifyError {
    #[error("identify needs at least {IDENTIFY_MIN_TERMS} terms, got {0}")]
    TooFewTerms(usize),
    #[error("identify accepts at most {max} terms, got {got}")]
    TooManyTerms { got: usize, max: u64 },
}

/// The first `count` values of a sequence from its domain start, skipping
/// indices without a value exactly as `seq` does.
fn leading_terms(entry: &CatalogEntry, domain: Domain, target: &[u128], config: &Config) -> bool {
    // Gives up on sequences that skip far more indices than they produce.
    let horizon = domain.start() + 64 * target.len() as u64 + 1024;
    let mut matched = 0;
    for n in domain.start()..horizon {
        if let Ok(v) = term_at(entry, domain, n, config) {
            if v.as_integer() != Some(target[matched]) {
                return false;
            }
            matched += 1;
            if matched == target.len() {
                return true;
            }
        }
    }
    false
}

/// Catalog sequences having `terms` as a prefix, in catalog order.
pub fn cmd_identify(catalog: &Catalog, terms: &[u128], config: &Config) -> Result<Vec<String>, IdentifyError> {
    if terms.len() < IDENTIFY_MIN_TERMS {
        return Err(IdentifyError::TooFewTerms(terms.len()));
    }
    if terms.len() as u64 > config.identify_max_terms {
        return Err(IdentifyError::TooManyTerms { got: terms.len(), max: config.identify_max_terms });
    }
    let hits: Vec<Option<String>> = catalog
        .entries()
        .par_iter()
        .map(|e| match e.sequence {
            Some(domain) if leading_terms(e, domain, terms, config) => Some(e.name.clone()),
            _ => None,
        })
        .collect();
    Ok(hits.into_iter().flatten().collect())
}

pub fn cmd_list(catalog: &Catalog) -> String {
    let mut out = String::new();
    for e in catalog.entries() {
        let aliases = if e.aliases.is_empty() { String::new() } else { format!(" (also {})", e.aliases.join(", ")) };
        let seq = match e.sequence {
            Some(Domain::From(s)) => format!(" [sequence from {s}]"),
            Some(Domain::Primes) => " [sequence over primes]".to_string(),
            None => String::new(),
        };
        let reference = if e.reference.is_empty() { String::new() } else { format!("; {}", e.reference) };
        writeln!(out, "{} {}{aliases}{seq}: {}{reference}", e.name, e.usage, e.summary).expect("writing to a String");
    }
    out
}

pub fn cmd_errata() -> String {
    ledger().iter().map(|r| format!("{r}\n")).collect()
}
