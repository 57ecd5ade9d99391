use super::sieve::SieveCache;
use super::{is_prime, NumericError};

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// `⌊√x⌋`.
pub fn isqrt(x: u64) -> u64 {
    // x < 2^64 always has a degree-2 root.
    integer_nth_root(x, 2).unwrap_or(0)
}

fn pow_fits(base: u64, exp: u32, limit: u64) -> bool {
    match (base as u128).checked_pow(exp) {
        Some(v) => v <= limit as u128,
        None => false,
    }
}

/// `⌊x^(1/m)⌋`, exact: the result `r` satisfies `r^m <= x < (r+1)^m`.
pub fn integer_nth_root(x: u64, m: u32) -> Result<u64, NumericError> {
    if m == 0 {
        return Err(NumericError::ZeroRootDegree);
    }
    if m == 1 || x < 2 {
        return Ok(x);
    }
    if m >= 64 {
        return Ok(1);
    }
    // The float estimate is within a few units; walk it into place.
    let mut r = (x as f64).powf(1.0 / m as f64).round() as u64;
    while r > 0 && !pow_fits(r, m, x) {
        r -= 1;
    }
    while pow_fits(r + 1, m, x) {
        r += 1;
    }
    Ok(r)
}

/// Exponent of the prime `p` in `m!` (Legendre's formula), without forming `m!`.
pub fn factorial_valuation(m: u64, p: u64) -> Result<u64, NumericError> {
    if !is_prime(p) {
        return Err(NumericError::NotPrime(p));
    }
    let mut total = 0;
    let mut q = p;
    while q <= m {
        total += m / q;
        match q.checked_mul(p) {
            Some(next) => q = next,
            None => break,
        }
    }
    Ok(total)
}

/// Product of all primes `<= p`, reduced modulo `modulus` at every step.
///
/// Panics if `modulus` is zero.
pub fn primorial_mod(p: u64, modulus: u64) -> u64 {
    assert_ne!(modulus, 0, "modulus must be positive");
    let table = SieveCache::global().covering(p);
    table
        .primes()
        .iter()
        .take_while(|&&q| q <= p)
        .fold(1 % modulus, |acc, &q| mul_mod(acc, q, modulus))
}

/// `m!! mod modulus`, the descending product of integers with the parity of `m`.
/// `0!! = 1!! = 1`.
///
/// Panics if `modulus` is zero.
pub fn double_factorial_mod(m: u64, modulus: u64) -> u64 {
    assert_ne!(modulus, 0, "modulus must be positive");
    let mut acc = 1 % modulus;
    let mut k = m;
    while k > 1 {
        acc = mul_mod(acc, k, modulus);
        if acc == 0 {
            break;
        }
        k -= 2;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn valuation_examples() {
        assert_eq!(factorial_valuation(9, 3), Ok(4));
        assert_eq!(factorial_valuation(0, 2), Ok(0));
        assert_eq!(factorial_valuation(100, 2), Ok(50 + 25 + 12 + 6 + 3 + 1));
        assert_eq!(factorial_valuation(10, 4), Err(NumericError::NotPrime(4)));
        assert_eq!(factorial_valuation(u64::MAX, 2), Ok(u64::MAX - u64::MAX.count_ones() as u64));
    }

    #[test]
    fn primorial_examples() {
        assert_eq!(primorial_mod(2, 1000), 2);
        assert_eq!(primorial_mod(7, 1_000_000), 210);
        // 2·3·5·7·11·13 = 30030 = 97·309 + 57
        assert_eq!(primorial_mod(13, 97), 30030 % 97);
        assert_eq!(primorial_mod(13, 97), 57);
        assert_eq!(primorial_mod(13, 1), 0);
    }

    #[test]
    fn roots() {
        assert_eq!(integer_nth_root(12, 2), Ok(3));
        assert_eq!(integer_nth_root(27, 3), Ok(3));
        assert_eq!(integer_nth_root(1 << 62, 2), Ok(1 << 31));
        assert_eq!(integer_nth_root(u64::MAX, 2), Ok(u32::MAX as u64));
        assert_eq!(integer_nth_root(u64::MAX, 64), Ok(1));
        assert_eq!(integer_nth_root(5, 0), Err(NumericError::ZeroRootDegree));
        assert_eq!(isqrt(0), 0);
    }

    #[test]
    fn double_factorials() {
        assert_eq!(double_factorial_mod(5, 1_000_000), 15);
        assert_eq!(double_factorial_mod(6, 1_000_000), 48);
        assert_eq!(double_factorial_mod(0, 7), 1);
        assert_eq!(double_factorial_mod(1, 7), 1);
        assert_eq!(double_factorial_mod(0, 1), 0);
    }

    proptest! {
        #[test]
        fn root_brackets(x in any::<u64>(), m in 1u32..70) {
            let r = integer_nth_root(x, m).unwrap();
            prop_assert!(pow_fits(r, m, x));
            prop_assert!(!pow_fits(r + 1, m, x));
        }

        #[test]
        fn pow_mod_matches_repeated_multiplication(b in any::<u64>(), e in 0u64..200, m in 1u64..) {
            let mut acc = 1 % m;
            for _ in 0..e {
                acc = mul_mod(acc, b, m);
            }
            prop_assert_eq!(pow_mod(b, e, m), acc);
        }
    }
}
