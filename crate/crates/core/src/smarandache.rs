//! The Smarandache function and its relatives: primitive functions `S_p`,
//! first/second/third kinds, ceil functions `S_k`, the pseudo-Smarandache
//! function `Z`, the double-factorial function `SDF`, and a checker for the
//! S-multiplicative property `f(ab) = max(f(a), f(b))` on coprime pairs.

use num_integer::Integer;
use thiserror::Error;

use crate::numeric::{factorial_valuation, factorize, is_prime, Factorization, NumericError};

/// Smallest `m` with `p^n | m!`. Always a multiple of `p`.
pub fn primitive_sp(p: u64, n: u64) -> Result<u64, NumericError> {
    if !is_prime(p) {
        return Err(NumericError::NotPrime(p));
    }
    if n == 0 {
        return Err(NumericError::ZeroInput);
    }
    // v_p((n·p)!) >= n, so the answer lies in [1, n·p].
    let mut hi = n.saturating_mul(p);
    if factorial_valuation(hi, p)? < n {
        return Err(NumericError::Overflow("primitive_sp"));
    }
    let mut lo = 0u64; // v_p(lo!) < n
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if factorial_valuation(mid, p)? >= n {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// Smallest `m >= 1` with `n | m!`; `S(1) = 1`.
pub fn smarandache_s(n: u64) -> Result<u64, NumericError> {
    first_kind(&FirstKindBase::of(n)?, 1)
}

/// Base `n = ∏ p_j^{r_j}` of a first-kind function; the unit base is `n = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FirstKindBase {
    factors: Factorization,
}

impl FirstKindBase {
    pub fn unit() -> Self {
        FirstKindBase { factors: Factorization::one() }
    }

    /// `n = u^r` with `u` prime.
    pub fn prime_power(u: u64, r: u32) -> Result<Self, NumericError> {
        if r == 0 {
            return Err(NumericError::ZeroInput);
        }
        Ok(FirstKindBase { factors: Factorization::from_pairs([(u, r)])? })
    }

    pub fn of(n: u64) -> Result<Self, NumericError> {
        Ok(FirstKindBase { factors: factorize(n)? })
    }

    pub fn from_factorization(factors: Factorization) -> Self {
        FirstKindBase { factors }
    }

    pub fn factors(&self) -> &Factorization {
        &self.factors
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_one()
    }
}

/// Smallest `k` with `n^a | k!` for the base `n`.
pub fn first_kind(base: &FirstKindBase, a: u64) -> Result<u64, NumericError> {
    if a == 0 {
        return Err(NumericError::ZeroInput);
    }
    base.factors.pairs().iter().try_fold(1u64, |acc, &(p, r)| {
        let exponent = (r as u64).checked_mul(a).ok_or(NumericError::Overflow("first_kind"))?;
        Ok(acc.max(primitive_sp(p, exponent)?))
    })
}

/// Smallest `m` with `n^k | m!`.
pub fn second_kind(k: u64, n: u64) -> Result<u64, NumericError> {
    first_kind(&FirstKindBase::of(n)?, k)
}

/// The two configurations excluded for the third kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum Degeneracy {
    #[error("a_n = 1 and b_n = n")]
    UnitBaseIdentityExponent,
    #[error("a_n = n and b_n = 1")]
    IdentityBaseUnitExponent,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ThirdKindError {
    #[error("degenerate sequence pair: {0}")]
    DegenerateSequences(Degeneracy),
    #[error(transparent)]
    Numeric(#[from] NumericError),
}

/// Number of leading indices inspected when classifying a sequence pair.
pub const DEGENERACY_PROBE: u64 = 64;

/// Base and exponent sequences `(a_n, b_n)` of a third-kind function.
pub struct SequencePair<A, B> {
    a: A,
    b: B,
}

impl<A, B> SequencePair<A, B>
where
    A: Fn(u64) -> u64,
    B: Fn(u64) -> u64,
{
    /// Rejects the excluded pairs, recognised on `n = 1..=DEGENERACY_PROBE`.
    pub fn new(a: A, b: B) -> Result<Self, Degeneracy> {
        let probe = 1..=DEGENERACY_PROBE;
        if probe.clone().all(|n| a(n) == 1 && b(n) == n) {
            return Err(Degeneracy::UnitBaseIdentityExponent);
        }
        if probe.clone().all(|n| a(n) == n && b(n) == 1) {
            return Err(Degeneracy::IdentityBaseUnitExponent);
        }
        Ok(SequencePair { a, b })
    }

    pub fn base(&self, n: u64) -> u64 {
        (self.a)(n)
    }

    pub fn exponent(&self, n: u64) -> u64 {
        (self.b)(n)
    }
}

/// First-kind function of base `a_n` evaluated at `b_n`.
pub fn third_kind<A, B>(seqs: &SequencePair<A, B>, n: u64) -> Result<u64, ThirdKindError>
where
    A: Fn(u64) -> u64,
    B: Fn(u64) -> u64,
{
    let base = FirstKindBase::of(seqs.base(n))?;
    Ok(first_kind(&base, seqs.exponent(n))?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SMultiplicative {
    Pass,
    /// First coprime pair `a <= b` with `f(ab) != max(f(a), f(b))`.
    Counterexample { a: u64, b: u64 },
}

/// Checks `f(ab) = max(f(a), f(b))` over every coprime pair `a <= b <= limit`.
pub fn is_s_multiplicative(f: impl Fn(u64) -> u64, limit: u64) -> SMultiplicative {
    let values: Vec<u64> = (0..=limit).map(|n| if n == 0 { 0 } else { f(n) }).collect();
    for a in 1..=limit {
        for b in a..=limit {
            if a.gcd(&b) != 1 {
                continue;
            }
            let lhs = f(a * b);
            if lhs != values[a as usize].max(values[b as usize]) {
                return SMultiplicative::Counterexample { a, b };
            }
        }
    }
    SMultiplicative::Pass
}

/// Smallest `m` with `n | m^k`: `∏ p^⌈e/k⌉`.
pub fn ceil_sk(n: u64, k: u32) -> Result<u64, NumericError> {
    if k == 0 {
        return Err(NumericError::ZeroRootDegree);
    }
    let f = factorize(n)?;
    // Each factor divides n, so the product never exceeds n.
    Ok(f.pairs().iter().map(|&(p, e)| p.pow(e.div_ceil(k))).product())
}

/// Smallest `m` with `n | m(m+1)/2`; at most `2n − 1`.
pub fn pseudo_z(n: u64) -> Result<u64, NumericError> {
    if n == 0 {
        return Err(NumericError::ZeroInput);
    }
    let modulus = n as u128;
    let mut triangular = 0u128;
    let mut m = 0u64;
    loop {
        m += 1;
        triangular = (triangular + m as u128) % modulus;
        if triangular == 0 {
            return Ok(m);
        }
    }
}

/// Smallest `m` with `n | m!!`; at most `2n`.
pub fn double_factorial_sdf(n: u64) -> Result<u64, NumericError> {
    if n == 0 {
        return Err(NumericError::ZeroInput);
    }
    let modulus = n as u128;
    // Running products of the odd and the even track.
    let mut tracks = [1u128 % modulus, 1u128 % modulus];
    let mut m = 0u64;
    loop {
        m += 1;
        let track = &mut tracks[(m % 2) as usize];
        *track = *track * m as u128 % modulus;
        if *track == 0 {
            return Ok(m);
        }
    }
}
