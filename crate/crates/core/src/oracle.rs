//! Brute-force reference implementations.
//!
//! Nothing here factors integers or calls into the fast paths it checks:
//! every oracle is a direct scan of its definition, using trial division,
//! explicit running products and, where values outgrow 64 bits, exact
//! big integers. Oracles may be far slower than the fast paths.

use std::ops::RangeInclusive;
use std::sync::Arc;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::complementary::{InternalLaw, TargetImage};
use crate::fpart::{MonotoneSequence, PartResult};
use crate::numeric::ExactDecimal;
use crate::outcome::{Obstruction, SearchOutcome};

fn trial_division_is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

/// Smallest `m >= 1` with `n | m!`, scanning `m! mod n`.
pub fn oracle_smallest_factorial_divisor(n: u64) -> u64 {
    let mut fact = 1 % n;
    let mut m = 1;
    loop {
        fact = mulmod(fact, m, n);
        if fact == 0 {
            return m;
        }
        m += 1;
    }
}

/// Exponent of `p` in `m!`, dividing each factor `1..=m` by `p` explicitly.
pub fn oracle_factorial_valuation(m: u64, p: u64) -> u64 {
    (1..=m)
        .map(|mut k| {
            let mut e = 0;
            while k % p == 0 {
                k /= p;
                e += 1;
            }
            e
        })
        .sum()
}

/// Smallest `m` with `p^n | m!`, accumulating the exponent factor by factor.
pub fn oracle_primitive_sp(p: u64, n: u64) -> u64 {
    let mut exponent = 0;
    let mut m = 0;
    while exponent < n {
        m += 1;
        let mut k = m;
        while k % p == 0 {
            k /= p;
            exponent += 1;
        }
    }
    m
}

/// Smallest `k` with `n^a | k!`: peel `gcd(rest, k)` off `rest = n^a` for
/// `k = 1, 2, …` until nothing is left.
pub fn oracle_first_kind(n: u64, a: u32) -> u64 {
    let mut k = 0u64;
    match (n as u128).checked_pow(a) {
        Some(mut rest) => {
            while rest != 1 {
                k += 1;
                rest /= rest.gcd(&(k as u128));
            }
        }
        None => {
            let mut rest = num_traits::pow(BigUint::from(n), a as usize);
            while !rest.is_one() {
                k += 1;
                let g = rest.gcd(&BigUint::from(k));
                rest /= g;
            }
        }
    }
    k.max(1)
}

/// Smallest `m` with `n | m^k`.
pub fn oracle_smallest_power_root(n: u64, k: u32) -> u64 {
    (1..)
        .find(|&m| (0..k).fold(1 % n, |acc, _| mulmod(acc, m, n)) == 0)
        .expect("n | n^k")
}

/// Smallest `m` with `n | 1 + 2 + … + m`.
pub fn oracle_triangular(n: u64) -> u64 {
    (1..).find(|&m| (m as u128 * (m as u128 + 1) / 2).is_multiple_of(n as u128)).expect("m = 2n − 1 works")
}

/// Smallest `m` with `n | m!!`, keeping one running product per parity.
pub fn oracle_double_factorial(n: u64) -> u64 {
    let mut odd = 1 % n;
    let mut even = 1 % n;
    let mut m = 0;
    loop {
        m += 1;
        let track = if m % 2 == 1 { &mut odd } else { &mut even };
        *track = mulmod(*track, m, n);
        if *track == 0 {
            return m;
        }
    }
}

/// Complement of `x` under `law` into `image`, searched literally; `None`
/// when no complement exists.
///
/// For `×` with `m`-th powers, `k = z^m / x` grows with `z`, so the
/// smallest `k` belongs to the smallest `z` with `x | z^m`; the scan runs
/// over `z <= x`. For `+` with primes, `k` is scanned with trial division.
pub fn oracle_complementary(x: u64, law: InternalLaw, image: TargetImage) -> Option<u64> {
    if x == 0 {
        return None;
    }
    match (law, image) {
        (InternalLaw::Multiplication, TargetImage::Power(m)) => (1..=x).find_map(|z| {
            match (z as u128).checked_pow(m) {
                Some(zm) => (zm % x as u128 == 0).then(|| u64::try_from(zm / x as u128).ok()).flatten(),
                None => {
                    let zm = num_traits::pow(BigUint::from(z), m as usize);
                    (&zm % x).is_zero().then(|| u64::try_from(zm / x).ok()).flatten()
                }
            }
        }),
        (InternalLaw::Addition, TargetImage::Prime) => (0..).find(|&k| trial_division_is_prime(x + k)),
        // x·k prime forces x = 1 (k the smallest prime) or x prime (k = 1).
        (InternalLaw::Multiplication, TargetImage::Prime) => match x {
            1 => Some(2),
            _ if trial_division_is_prime(x) => Some(1),
            _ => None,
        },
        (InternalLaw::Addition, TargetImage::Power(m)) => (0..).find(|&k| {
            let v = (x + k) as u128;
            (0u128..).take_while(|z| z.pow(m) <= v).any(|z| z.pow(m) == v)
        }),
    }
}

/// `!n = 0! + 1! + … + (n−1)!`, exactly.
pub fn oracle_left_factorial(n: u64) -> BigUint {
    let mut sum = BigUint::zero();
    let mut fact = BigUint::one();
    for k in 0..n {
        if k > 0 {
            fact *= k;
        }
        sum += &fact;
    }
    sum
}

/// Smallest `n` in `[1, p]` with `p | !n`, on exact left factorials.
pub fn oracle_kurepa(p: u64) -> SearchOutcome {
    let mut sum = BigUint::zero();
    let mut fact = BigUint::one();
    for n in 1..=p {
        if n > 1 {
            fact *= n - 1;
        }
        sum += &fact;
        if (&sum % p).is_zero() {
            return SearchOutcome::Found(n);
        }
    }
    SearchOutcome::NotExists(Obstruction::ResidueStabilization)
}

/// Smallest `n` in `[1, p − 1]` with `p | 1! + … + n!`, on exact sums.
pub fn oracle_wagstaff(p: u64) -> SearchOutcome {
    let mut sum = BigUint::zero();
    let mut fact = BigUint::one();
    for n in 1..p {
        fact *= n;
        sum += &fact;
        if (&sum % p).is_zero() {
            return SearchOutcome::Found(n);
        }
    }
    SearchOutcome::NotExists(Obstruction::ResidueStabilization)
}

/// Smallest prime `p <= prime_limit` with `n` dividing `p# − 1`, `p#` or
/// `p# + 1`, on exact primorials.
pub fn oracle_sntp(n: u64, prime_limit: u64) -> SearchOutcome {
    let has_square_factor = (2..).take_while(|d: &u64| d * d <= n).any(|d| n.is_multiple_of(d * d));
    if n.is_multiple_of(4) || (n.is_multiple_of(2) && has_square_factor) {
        return SearchOutcome::NotExists(Obstruction::ParityObstruction);
    }
    let mut primorial = BigUint::one();
    for p in (2..=prime_limit).filter(|&p| trial_division_is_prime(p)) {
        primorial *= p;
        let divides = |v: &BigUint| (v % n).is_zero();
        if divides(&(&primorial - 1u32)) || divides(&primorial) || divides(&(&primorial + 1u32)) {
            return SearchOutcome::Found(p);
        }
    }
    SearchOutcome::Unknown(prime_limit)
}

/// Block `n` of the permutation family: the odd numbers up to `2n` in
/// increasing order, then the even ones in decreasing order.
pub fn oracle_permutation_block(n: u64) -> Vec<u64> {
    let odd = (1..=2 * n).filter(|v| v % 2 == 1);
    let even = (1..=2 * n).rev().filter(|v| v % 2 == 0);
    odd.chain(even).collect()
}

/// Inferior part by walking the sequence term by term.
pub fn oracle_part<S: MonotoneSequence + ?Sized>(seq: &S, x: &ExactDecimal) -> Option<PartResult> {
    let term = |k| seq.term(k).ok().map(ExactDecimal::from);
    let mut k = seq.first_index();
    if term(k)? > *x {
        return None;
    }
    while term(k + 1).is_some_and(|next| next <= *x) {
        k += 1;
    }
    Some(PartResult { index: k, value: seq.term(k).ok()? })
}

/// Superior part by walking the sequence term by term.
pub fn oracle_superior_part<S: MonotoneSequence + ?Sized>(seq: &S, x: &ExactDecimal) -> Option<PartResult> {
    let mut k = seq.first_index();
    loop {
        let v = seq.term(k).ok()?;
        if ExactDecimal::from(v) >= *x {
            return Some(PartResult { index: k, value: v });
        }
        k += 1;
    }
}

/// Largest input range `run_crosscheck` accepts without an override.
pub const CROSSCHECK_LIMIT: u64 = 100_000;

pub type Evaluator = Arc<dyn Fn(u64) -> Result<SearchOutcome, String> + Send + Sync>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputDomain {
    All,
    Primes,
}

/// A fast path paired with its oracle.
#[derive(Clone)]
pub struct CrosscheckPair {
    pub name: String,
    pub domain: InputDomain,
    /// Inputs above this are skipped; for oracles too slow to run everywhere.
    pub max_input: u64,
    pub fast: Evaluator,
    pub oracle: Evaluator,
}

impl CrosscheckPair {
    pub fn new<F, O>(name: impl Into<String>, domain: InputDomain, fast: F, oracle: O) -> Self
    where
        F: Fn(u64) -> Result<SearchOutcome, String> + Send + Sync + 'static,
        O: Fn(u64) -> Result<SearchOutcome, String> + Send + Sync + 'static,
    {
        CrosscheckPair {
            name: name.into(),
            domain,
            max_input: u64::MAX,
            fast: Arc::new(fast),
            oracle: Arc::new(oracle),
        }
    }

    pub fn up_to(mut self, max_input: u64) -> Self {
        self.max_input = max_input;
        self
    }
}

impl std::fmt::Debug for CrosscheckPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CrosscheckPair").field("name", &self.name).field("domain", &self.domain).finish()
    }
}

/// `agree` holds when both sides produce the same outcome, or both reject
/// the input with the same message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub function: String,
    pub input: u64,
    pub oracle: Result<SearchOutcome, String>,
    pub fast: Result<SearchOutcome, String>,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrosscheckError {
    #[error("range of {0} inputs exceeds the crosscheck limit of {CROSSCHECK_LIMIT}; pass an override to run it")]
    RangeTooLarge(u64),
}

/// Evaluates every pair on every input of `range` within its domain.
/// Reports are ordered by pair, then by input.
pub fn run_crosscheck(
    range: RangeInclusive<u64>,
    pairs: &[CrosscheckPair],
    allow_large: bool,
) -> Result<Vec<OracleReport>, CrosscheckError> {
    let size = range.end().saturating_sub(*range.start()).saturating_add(1);
    if size > CROSSCHECK_LIMIT && !allow_large {
        return Err(CrosscheckError::RangeTooLarge(size));
    }
    let inputs: Vec<u64> = range.collect();
    let mut reports = Vec::new();
    for pair in pairs {
        let batch: Vec<OracleReport> = inputs
            .par_iter()
            .filter(|&&n| n <= pair.max_input)
            .filter(|&&n| pair.domain == InputDomain::All || trial_division_is_prime(n))
            .map(|&n| {
                let fast = (pair.fast)(n);
                let oracle = (pair.oracle)(n);
                let agree = fast == oracle;
                OracleReport { function: pair.name.clone(), input: n, oracle, fast, agree }
            })
            .collect();
        reports.extend(batch);
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_examples() {
        assert_eq!(oracle_smallest_factorial_divisor(16), 6);
        assert_eq!(oracle_smallest_factorial_divisor(1), 1);
        assert_eq!(oracle_factorial_valuation(100, 2), 97);
        assert_eq!(oracle_primitive_sp(3, 4), 9);
        assert_eq!(oracle_primitive_sp(2, 10), 12);
        assert_eq!(oracle_first_kind(12, 2), 6);
        assert_eq!(oracle_first_kind(4, 2), 6);
        assert_eq!(oracle_first_kind(1, 5), 1);
        assert_eq!(oracle_smallest_power_root(8, 2), 4);
        assert_eq!(oracle_smallest_power_root(8, 3), 2);
        assert_eq!(oracle_triangular(4), 7);
        assert_eq!(oracle_double_factorial(15), 5);
        assert_eq!(oracle_complementary(720, InternalLaw::Multiplication, TargetImage::Power(2)), Some(5));
        assert_eq!(oracle_complementary(90, InternalLaw::Addition, TargetImage::Prime), Some(7));
        assert_eq!(oracle_complementary(6, InternalLaw::Multiplication, TargetImage::Prime), None);
        assert_eq!(oracle_left_factorial(6), BigUint::from(154u32));
        assert_eq!(oracle_kurepa(5), SearchOutcome::Found(4));
        assert_eq!(oracle_kurepa(3), SearchOutcome::NotExists(Obstruction::ResidueStabilization));
        assert_eq!(oracle_sntp(11, 100), SearchOutcome::Found(7));
        assert_eq!(oracle_sntp(9, 100), SearchOutcome::Unknown(100));
    }

    #[test]
    fn crosscheck_refuses_large_ranges() {
        let pair = CrosscheckPair::new(
            "id",
            InputDomain::All,
            |n| Ok(SearchOutcome::Found(n)),
            |n| Ok(SearchOutcome::Found(n)),
        );
        assert_eq!(
            run_crosscheck(1..=200_000, std::slice::from_ref(&pair), false),
            Err(CrosscheckError::RangeTooLarge(200_000))
        );
        let reports = run_crosscheck(1..=10, &[pair], false).unwrap();
        assert_eq!(reports.len(), 10);
        assert!(reports.iter().all(|r| r.agree));
        assert!(reports.windows(2).all(|w| w[0].input < w[1].input));
    }
}
