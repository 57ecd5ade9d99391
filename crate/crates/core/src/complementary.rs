//! Complementary functions: the smallest `k` such that `x ~ k` lands in the
//! image of a strictly increasing `g`, for `~` one of `×` or `+`.

use thiserror::Error;

use crate::numeric::{factorize, integer_nth_root, is_prime, next_prime};

/// Default step budget of the generic search.
pub const DEFAULT_SEARCH_BOUND: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InternalLaw {
    Multiplication,
    Addition,
}

impl InternalLaw {
    fn apply(self, x: u64, k: u64) -> Option<u64> {
        match self {
            InternalLaw::Multiplication => x.checked_mul(k),
            InternalLaw::Addition => x.checked_add(k),
        }
    }

    /// Multiplicative complements are positive; additive ones may be zero.
    pub fn smallest_candidate(self) -> u64 {
        match self {
            InternalLaw::Multiplication => 1,
            InternalLaw::Addition => 0,
        }
    }
}

/// Image of `g`, known only through membership.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TargetImage {
    /// Perfect `m`-th powers, `m >= 2`.
    Power(u32),
    Prime,
}

impl TargetImage {
    pub fn power(m: u32) -> Result<Self, ComplementaryError> {
        if m < 2 {
            return Err(ComplementaryError::InvalidPower(m));
        }
        Ok(TargetImage::Power(m))
    }

    pub fn contains(self, v: u64) -> bool {
        match self {
            TargetImage::Prime => is_prime(v),
            TargetImage::Power(m) => {
                let r = integer_nth_root(v, m).expect("m >= 2");
                (r as u128).pow(m) == v as u128
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplementaryError {
    #[error("argument must be positive")]
    ZeroInput,
    #[error("power degree must be at least 2, got {0}")]
    InvalidPower(u32),
    #[error("no complement found within {0} search steps")]
    BoundExhausted(u64),
    #[error("complement does not fit in 64 bits")]
    Overflow,
}

/// Smallest `k` with `x ~ k` in `image`, by direct search over `k`.
pub fn complementary(
    x: u64,
    law: InternalLaw,
    image: TargetImage,
    bound: u64,
) -> Result<u64, ComplementaryError> {
    if x == 0 {
        return Err(ComplementaryError::ZeroInput);
    }
    if let TargetImage::Power(m) = image {
        TargetImage::power(m)?;
    }
    let first = law.smallest_candidate();
    for k in (first..).take(bound as usize) {
        let v = law.apply(x, k).ok_or(ComplementaryError::Overflow)?;
        if image.contains(v) {
            return Ok(k);
        }
    }
    Err(ComplementaryError::BoundExhausted(bound))
}

/// Smallest `k >= 1` making `x·k` a perfect `m`-th power:
/// `∏ p^((m − e mod m) mod m)` over `x = ∏ p^e`.
pub fn mpower_complementary_fast(x: u64, m: u32) -> Result<u64, ComplementaryError> {
    if m < 2 {
        return Err(ComplementaryError::InvalidPower(m));
    }
    let f = factorize(x).map_err(|_| ComplementaryError::ZeroInput)?;
    f.pairs().iter().try_fold(1u64, |acc, &(p, e)| {
        let missing = (m - e % m) % m;
        p.checked_pow(missing)
            .and_then(|q| acc.checked_mul(q))
            .ok_or(ComplementaryError::Overflow)
    })
}

/// Distance from `x` to the next prime `>= x`.
pub fn prime_complementary(x: u64) -> Result<u64, ComplementaryError> {
    if x == 0 {
        return Err(ComplementaryError::ZeroInput);
    }
    let p = next_prime(x).map_err(|_| ComplementaryError::Overflow)?;
    Ok(p - x)
}
