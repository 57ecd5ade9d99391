use std::fmt;

use super::arith::mul_mod;
use super::sieve::SieveCache;
use super::{is_prime, NumericError};

/// Trial division covers primes up to this bound before Pollard rho takes over.
const TRIAL_DIVISION_LIMIT: u64 = 1_000_000;

/// Canonical prime-power decomposition: primes strictly increasing, exponents ≥ 1.
/// The factorization of 1 is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn one() -> Self {
        Factorization::default()
    }

    /// Builds a factorization from arbitrary `(prime, exponent)` pairs,
    /// merging duplicates and dropping zero exponents.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u64, u32)>) -> Result<Self, NumericError> {
        let mut v: Vec<(u64, u32)> = Vec::new();
        for (p, e) in pairs {
            if !is_prime(p) {
                return Err(NumericError::NotPrime(p));
            }
            if e > 0 {
                v.push((p, e));
            }
        }
        v.sort_unstable();
        let mut merged: Vec<(u64, u32)> = Vec::with_capacity(v.len());
        for (p, e) in v {
            match merged.last_mut() {
                Some(last) if last.0 == p => last.1 += e,
                _ => merged.push((p, e)),
            }
        }
        Ok(Factorization { pairs: merged })
    }

    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    pub fn is_one(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.pairs.iter().all(|&(_, e)| e == 1)
    }

    pub fn largest_prime(&self) -> Option<u64> {
        self.pairs.last().map(|&(p, _)| p)
    }

    /// Reconstructs the integer, or `None` past `u64::MAX`.
    pub fn value(&self) -> Option<u64> {
        self.pairs.iter().try_fold(1u64, |acc, &(p, e)| acc.checked_mul(p.checked_pow(e)?))
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairs.is_empty() {
            return f.write_str("1");
        }
        for (i, &(p, e)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

pub fn factorize(n: u64) -> Result<Factorization, NumericError> {
    if n == 0 {
        return Err(NumericError::ZeroInput);
    }
    let mut pairs = Vec::new();
    let mut rest = n;

    let table = SieveCache::global().covering(TRIAL_DIVISION_LIMIT);
    for &p in table.primes() {
        if p > TRIAL_DIVISION_LIMIT || p.saturating_mul(p) > rest {
            break;
        }
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            pairs.push((p, e));
        }
    }

    if rest > 1 {
        let mut large = Vec::new();
        split(rest, &mut large);
        large.sort_unstable();
        for p in large {
            match pairs.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => pairs.push((p, 1)),
            }
        }
    }
    Ok(Factorization { pairs })
}

fn split(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_brent(n);
    split(d, out);
    split(n / d, out);
}

/// Nontrivial divisor of the odd composite `n` (Brent's cycle detection).
fn pollard_brent(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let f = |x: u64, c: u64| ((x as u128 * x as u128 + c as u128) % n as u128) as u64;
    for c in 1.. {
        let mut y = 2u64;
        let mut r = 1u64;
        let mut q = 1u64;
        let mut g = 1u64;
        let mut x = y;
        let mut ys = y;
        const BATCH: u64 = 128;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y, c);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = f(y, c);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == n {
            // Batched product collapsed; replay one step at a time.
            loop {
                ys = f(ys, c);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!()
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        assert!(factorize(1).unwrap().is_one());
        assert_eq!(factorize(12).unwrap().pairs(), &[(2, 2), (3, 1)]);
        assert_eq!(factorize((1 << 40) * 3).unwrap().pairs(), &[(2, 40), (3, 1)]);
        assert_eq!(factorize(0), Err(NumericError::ZeroInput));
    }

    #[test]
    fn large_semiprimes_and_powers() {
        let p = 1_000_003u64;
        let q = 4_294_967_291u64;
        assert_eq!(factorize(p * q).unwrap().pairs(), &[(p, 1), (q, 1)]);
        assert_eq!(factorize(p * p * p).unwrap().pairs(), &[(p, 3)]);
        let big = 4_294_967_279u64 * 4_294_967_291;
        assert_eq!(factorize(big).unwrap().pairs(), &[(4_294_967_279, 1), (4_294_967_291, 1)]);
        assert_eq!(factorize(u64::MAX).unwrap().value(), Some(u64::MAX));
    }

    #[test]
    fn reconstructs_first_hundred_thousand() {
        for n in 1..=100_000u64 {
            let f = factorize(n).unwrap();
            assert_eq!(f.value(), Some(n));
            assert!(f.pairs().windows(2).all(|w| w[0].0 < w[1].0));
        }
    }

    #[test]
    fn from_pairs_merges() {
        let f = Factorization::from_pairs([(3, 1), (2, 2), (3, 2), (5, 0)]).unwrap();
        assert_eq!(f.pairs(), &[(2, 2), (3, 3)]);
        assert!(Factorization::from_pairs([(4, 1)]).is_err());
        assert_eq!(f.to_string(), "2^2 * 3^3");
    }

    proptest! {
        #[test]
        fn canonical_and_reconstructing(n in 1u64..) {
            let f = factorize(n).unwrap();
            prop_assert_eq!(f.value(), Some(n));
            for w in f.pairs().windows(2) {
                prop_assert!(w[0].0 < w[1].0);
            }
            for &(p, e) in f.pairs() {
                prop_assert!(e >= 1 && is_prime(p));
            }
        }
    }
}
