//! Factorial-sum functions evaluated entirely in modular arithmetic: the
//! Kurepa-type function over left factorials `!n = 0! + … + (n−1)!`, the
//! Wagstaff-type function over `W(n) = 1! + … + n!`, and the near-to-primordial
//! function over `p# − 1, p#, p# + 1`.

use crate::numeric::{factorize, is_prime, mul_mod, NumericError, SieveCache};
use crate::outcome::{Obstruction, SearchOutcome};

/// Default prime bound for [`sntp`]: the 10 000th prime.
pub const DEFAULT_SNTP_PRIME_BOUND: u64 = 104_729;

/// `!n mod m = (0! + 1! + … + (n−1)!) mod m`.
///
/// Panics if `m` is zero.
pub fn left_factorial_mod(n: u64, m: u64) -> u64 {
    assert_ne!(m, 0, "modulus must be positive");
    let mut sum = 0u64;
    let mut fact = 1 % m; // k!
    for k in 0..n {
        if k > 0 {
            fact = mul_mod(fact, k, m);
        }
        sum = ((sum as u128 + fact as u128) % m as u128) as u64;
        if fact == 0 {
            // Every later term vanishes.
            break;
        }
    }
    sum
}

/// Smallest `n` with `p | !n`. Past `n = p` every added term is a multiple
/// of `p`, so `!n mod p` is frozen and `[1, p]` is a complete search.
pub fn kurepa_sk(p: u64) -> Result<SearchOutcome, NumericError> {
    if !is_prime(p) {
        return Err(NumericError::NotPrime(p));
    }
    let mut sum = 0u64;
    let mut fact = 1u64;
    for n in 1..=p {
        // sum = !n, fact = (n−1)!
        if n > 1 {
            fact = mul_mod(fact, n - 1, p);
        }
        sum = (sum + fact) % p;
        if sum == 0 {
            return Ok(SearchOutcome::Found(n));
        }
    }
    Ok(SearchOutcome::NotExists(Obstruction::ResidueStabilization))
}

/// Smallest `n` with `p | 1! + 2! + … + n!`, searched over `[1, p − 1]`;
/// from `n = p` on the sum is constant modulo `p`.
pub fn wagstaff_sw(p: u64) -> Result<SearchOutcome, NumericError> {
    if !is_prime(p) {
        return Err(NumericError::NotPrime(p));
    }
    let mut sum = 0u64;
    let mut fact = 1u64;
    for n in 1..p {
        fact = mul_mod(fact, n, p);
        sum = (sum + fact) % p;
        if sum == 0 {
            return Ok(SearchOutcome::Found(n));
        }
    }
    Ok(SearchOutcome::NotExists(Obstruction::ResidueStabilization))
}

/// `true` when no primorial or primorial neighbour can ever be a multiple of `n`:
/// `p#` is squarefree with exactly one factor 2, and `p# ± 1` are odd.
pub fn sntp_parity_obstructed(n: u64) -> bool {
    if n.is_multiple_of(4) {
        return true;
    }
    n.is_multiple_of(2) && factorize(n).map(|f| !f.is_squarefree()).unwrap_or(false)
}

/// Smallest prime `p <= prime_bound` with `n` dividing `p# − 1`, `p#` or `p# + 1`.
pub fn sntp(n: u64, prime_bound: u64) -> Result<SearchOutcome, NumericError> {
    if n == 0 {
        return Err(NumericError::ZeroInput);
    }
    if sntp_parity_obstructed(n) {
        return Ok(SearchOutcome::NotExists(Obstruction::ParityObstruction));
    }
    let table = SieveCache::global().covering(prime_bound);
    let mut primorial = 1 % n;
    for &p in table.primes().iter().take_while(|&&p| p <= prime_bound) {
        primorial = mul_mod(primorial, p, n);
        // n | p# − 1, n | p#, n | p# + 1
        if primorial == 1 % n || primorial == 0 || primorial == n - 1 {
            return Ok(SearchOutcome::Found(p));
        }
    }
    Ok(SearchOutcome::Unknown(prime_bound))
}
