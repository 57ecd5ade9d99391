use super::arith::{mul_mod, pow_mod};
use super::NumericError;
use crate::outcome::{Obstruction, SearchOutcome};

// Jim Sinclair's base set: deterministic for every n < 2^64.
const MR_BASES: [u64; 7] = [2, 325, 9375, 28178, 450775, 9780504, 1795265022];

const SMALL_PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Largest prime below 2^64.
const LARGEST_U64_PRIME: u64 = u64::MAX - 58;

/// Deterministic primality test for all 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &SMALL_PRIMES {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    if n < 41 * 41 {
        return true;
    }

    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &base in &MR_BASES {
        let a = base % n;
        if a == 0 {
            continue;
        }
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Smallest prime `>= n`.
pub fn next_prime(n: u64) -> Result<u64, NumericError> {
    if n <= 2 {
        return Ok(2);
    }
    if n > LARGEST_U64_PRIME {
        return Err(NumericError::Overflow("next_prime"));
    }
    let mut c = n | 1;
    while !is_prime(c) {
        c += 2;
    }
    Ok(c)
}

/// Largest prime `<= n`, or `NotExists` when `n < 2`.
pub fn prev_prime(n: u64) -> SearchOutcome {
    if n < 2 {
        return SearchOutcome::NotExists(Obstruction::NoPrimeBelow);
    }
    if n == 2 {
        return SearchOutcome::Found(2);
    }
    let mut c = if n.is_multiple_of(2) { n - 1 } else { n };
    while !is_prime(c) {
        c -= 2;
    }
    SearchOutcome::Found(c)
}
