//! Field self-test: fast paths against oracles, published listings against
//! computation, and the erratum ledger against the detected divergences.

use std::fmt;
use std::str::FromStr;

use crate::complementary::{mpower_complementary_fast, prime_complementary, InternalLaw, TargetImage};
use crate::errata::{ledger, ErratumRecord};
use crate::factorial_sums::{kurepa_sk, sntp, wagstaff_sw};
use crate::fpart::{inferior_part, superior_part, StandardSequence};
use crate::golden::{LISTINGS, TABLES};
use crate::numeric::ExactDecimal;
use crate::oracle::{self, run_crosscheck, CrosscheckPair, InputDomain, OracleReport};
use crate::outcome::SearchOutcome;
use crate::smarandache::{
    ceil_sk, double_factorial_sdf, first_kind, primitive_sp, pseudo_z, smarandache_s, FirstKindBase,
};

/// Prime bound shared by both sides of the SNTP crosscheck; the 50th prime.
const SNTP_CROSSCHECK_BOUND: u64 = 229;
/// Left factorials are summed exactly by the oracle, so keep them short.
const FACTORIAL_SUM_LIMIT: u64 = 300;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    Quick,
    Full,
}

impl Scope {
    pub fn limit(self) -> u64 {
        match self {
            Scope::Quick => 200,
            Scope::Full => 2000,
        }
    }
}

impl FromStr for Scope {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "quick" => Ok(Scope::Quick),
            "full" => Ok(Scope::Full),
            other => Err(format!("unknown scope '{other}', expected quick or full")),
        }
    }
}

fn found<E: fmt::Display>(r: Result<u64, E>) -> Result<SearchOutcome, String> {
    r.map(SearchOutcome::Found).map_err(|e| e.to_string())
}

fn outcome<E: fmt::Display>(r: Result<SearchOutcome, E>) -> Result<SearchOutcome, String> {
    r.map_err(|e| e.to_string())
}

const BELOW_FIRST_TERM: &str = "below the first term";

fn part_pair(seq: StandardSequence, inferior: bool, half: bool) -> CrosscheckPair {
    let x = move |n: u64| {
        let x = ExactDecimal::from(n);
        if half {
            x + ExactDecimal::new(5, 1)
        } else {
            x
        }
    };
    let kind = if inferior { "inferior" } else { "superior" };
    let arg = if half { "n + 1/2" } else { "n" };
    CrosscheckPair::new(
        format!("{kind} {seq} part of {arg}"),
        InputDomain::All,
        move |n| {
            let r = if inferior { inferior_part(&seq, &x(n)) } else { superior_part(&seq, &x(n)) };
            match r {
                Ok(p) => Ok(SearchOutcome::Found(p.value as u64)),
                Err(crate::fpart::FpartError::Domain { .. }) => Err(BELOW_FIRST_TERM.into()),
                Err(e) => Err(e.to_string()),
            }
        },
        move |n| {
            let r = if inferior {
                oracle::oracle_part(&seq, &x(n))
            } else {
                oracle::oracle_superior_part(&seq, &x(n))
            };
            r.map(|p| SearchOutcome::Found(p.value as u64)).ok_or_else(|| BELOW_FIRST_TERM.into())
        },
    )
}

/// Every fast path with its oracle.
pub fn standard_pairs() -> Vec<CrosscheckPair> {
    let mut pairs = vec![CrosscheckPair::new(
        "S",
        InputDomain::All,
        |n| found(smarandache_s(n)),
        |n| Ok(SearchOutcome::Found(oracle::oracle_smallest_factorial_divisor(n))),
    )];
    for p in [2, 3, 5, 7] {
        pairs.push(CrosscheckPair::new(
            format!("S_{p}"),
            InputDomain::All,
            move |n| found(primitive_sp(p, n)),
            move |n| Ok(SearchOutcome::Found(oracle::oracle_primitive_sp(p, n))),
        ));
    }
    for a in [2u32, 3] {
        pairs.push(CrosscheckPair::new(
            format!("first-kind a = {a}"),
            InputDomain::All,
            move |n| found(FirstKindBase::of(n).and_then(|b| first_kind(&b, a as u64))),
            move |n| Ok(SearchOutcome::Found(oracle::oracle_first_kind(n, a))),
        ));
    }
    for k in 1..=4u32 {
        pairs.push(CrosscheckPair::new(
            format!("ceil k = {k}"),
            InputDomain::All,
            move |n| found(ceil_sk(n, k)),
            move |n| Ok(SearchOutcome::Found(oracle::oracle_smallest_power_root(n, k))),
        ));
    }
    pairs.push(CrosscheckPair::new(
        "Z",
        InputDomain::All,
        |n| found(pseudo_z(n)),
        |n| Ok(SearchOutcome::Found(oracle::oracle_triangular(n))),
    ));
    pairs.push(CrosscheckPair::new(
        "SDF",
        InputDomain::All,
        |n| found(double_factorial_sdf(n)),
        |n| Ok(SearchOutcome::Found(oracle::oracle_double_factorial(n))),
    ));
    for m in 2..=4u32 {
        pairs.push(CrosscheckPair::new(
            format!("{m}-power complementary"),
            InputDomain::All,
            move |x| found(mpower_complementary_fast(x, m)),
            move |x| {
                oracle::oracle_complementary(x, InternalLaw::Multiplication, TargetImage::Power(m))
                    .map(SearchOutcome::Found)
                    .ok_or_else(|| "no complement".to_string())
            },
        ));
    }
    pairs.push(CrosscheckPair::new(
        "prime complementary",
        InputDomain::All,
        |x| found(prime_complementary(x)),
        |x| {
            oracle::oracle_complementary(x, InternalLaw::Addition, TargetImage::Prime)
                .map(SearchOutcome::Found)
                .ok_or_else(|| "no complement".to_string())
        },
    ));
    for seq in [
        StandardSequence::Primes,
        StandardSequence::Squares,
        StandardSequence::Cubes,
        StandardSequence::Factorials,
    ] {
        for inferior in [true, false] {
            for half in [false, true] {
                pairs.push(part_pair(seq, inferior, half));
            }
        }
    }
    pairs.push(
        CrosscheckPair::new(
            "SK",
            InputDomain::Primes,
            |p| outcome(kurepa_sk(p)),
            |p| Ok(oracle::oracle_kurepa(p)),
        )
        .up_to(FACTORIAL_SUM_LIMIT),
    );
    pairs.push(
        CrosscheckPair::new(
            "SW",
            InputDomain::Primes,
            |p| outcome(wagstaff_sw(p)),
            |p| Ok(oracle::oracle_wagstaff(p)),
        )
        .up_to(FACTORIAL_SUM_LIMIT),
    );
    pairs.push(CrosscheckPair::new(
        "SNTP",
        InputDomain::All,
        |n| outcome(sntp(n, SNTP_CROSSCHECK_BOUND)),
        |n| Ok(oracle::oracle_sntp(n, SNTP_CROSSCHECK_BOUND)),
    ));
    pairs
}

/// `pairs` with the fast path of `S` off by one at a single input, for
/// checking that the harness notices.
pub fn with_injected_fault(mut pairs: Vec<CrosscheckPair>) -> Vec<CrosscheckPair> {
    if let Some(pair) = pairs.iter_mut().find(|p| p.name == "S") {
        let good = pair.fast.clone();
        pair.fast = std::sync::Arc::new(move |n| match good(n) {
            Ok(SearchOutcome::Found(v)) if n == 97 => Ok(SearchOutcome::Found(v + 1)),
            other => other,
        });
    }
    pairs
}

#[derive(Debug, Clone)]
pub struct SelftestReport {
    pub scope: Scope,
    pub checks: usize,
    pub disagreements: Vec<OracleReport>,
    pub golden_failures: Vec<String>,
    pub errata: Vec<ErratumRecord>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.disagreements.is_empty() && self.golden_failures.is_empty()
    }
}

impl fmt::Display for SelftestReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "crosschecks: {} comparisons, n <= {}", self.checks, self.scope.limit())?;
        for d in &self.disagreements {
            writeln!(f, "DISAGREE {} at {}: fast {:?}, oracle {:?}", d.function, d.input, d.fast, d.oracle)?;
        }
        for g in &self.golden_failures {
            writeln!(f, "GOLDEN {g}")?;
        }
        writeln!(f, "errata: {}", self.errata.len())?;
        for e in &self.errata {
            writeln!(f, "  {e}")?;
        }
        write!(f, "{}", if self.passed() { "selftest passed" } else { "selftest FAILED" })
    }
}

/// Listings and tables against computation, and the ledger against the
/// divergences they declare.
fn golden_failures(errata: &[ErratumRecord]) -> Vec<String> {
    let mut failures = Vec::new();
    let mut declared: Vec<&str> = Vec::new();
    for l in LISTINGS {
        if !l.matches_expected() {
            failures.push(format!("{} listing: expected {:?}, computed {:?}", l.name, l.expected, l.computed()));
        }
        match l.erratum {
            Some(key) => {
                declared.push(key);
                if l.matches_printed() {
                    failures.push(format!("{} listing: erratum '{key}' declared but printed values reproduce", l.name));
                }
            }
            None if !l.matches_printed() => {
                failures.push(format!("{} listing: printed values do not reproduce", l.name));
            }
            None => {}
        }
    }
    for t in TABLES {
        let divergent = t.divergences();
        for (n, printed, computed) in &divergent {
            match t.erratum_for(*n) {
                Some(key) => declared.push(key),
                None => failures.push(format!("{} table at {n}: printed {printed:?}, computed {computed}", t.name)),
            }
        }
        for &(n, key) in t.errata {
            if !divergent.iter().any(|d| d.0 == n) {
                failures.push(format!("{} table at {n}: erratum '{key}' declared but printed value reproduces", t.name));
            }
        }
    }
    let mut recorded: Vec<&str> = errata.iter().map(|e| e.location).collect();
    recorded.sort_unstable();
    declared.sort_unstable();
    declared.dedup();
    if recorded != declared {
        failures.push(format!("erratum ledger {recorded:?} does not match detected divergences {declared:?}"));
    }
    failures
}

pub fn run_with(scope: Scope, pairs: &[CrosscheckPair]) -> SelftestReport {
    let reports = run_crosscheck(1..=scope.limit(), pairs, false).expect("selftest ranges are small");
    let errata = ledger();
    SelftestReport {
        scope,
        checks: reports.len(),
        disagreements: reports.into_iter().filter(|r| !r.agree).collect(),
        golden_failures: golden_failures(&errata),
        errata,
    }
}

pub fn run(scope: Scope) -> SelftestReport {
    run_with(scope, &standard_pairs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_passes() {
        let report = run(Scope::Quick);
        assert!(report.passed(), "{report}");
        assert_eq!(report.errata.len(), 9);
    }

    #[test]
    fn injected_fault_is_caught() {
        let report = run_with(Scope::Quick, &with_injected_fault(standard_pairs()));
        assert!(!report.passed());
        assert_eq!(report.disagreements.len(), 1);
        assert_eq!(report.disagreements[0].input, 97);
    }
}
