//! Shared integer machinery: primality, the prime sieve cache, factorization,
//! Legendre valuations, modular products, integer roots and exact decimals.

mod arith;
mod decimal;
mod factor;
mod primality;
mod sieve;

pub use arith::{
    double_factorial_mod, factorial_valuation, integer_nth_root, isqrt, mul_mod, pow_mod,
    primorial_mod,
};
pub use decimal::{ExactDecimal, ParseDecimalError};
pub use factor::{factorize, Factorization};
pub use primality::{is_prime, next_prime, prev_prime};
pub use sieve::{PrimeTable, SieveCache, DEFAULT_SIEVE_CAP};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericError {
    #[error("input must be positive")]
    ZeroInput,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("root degree must be at least 1")]
    ZeroRootDegree,
    #[error("result of {0} does not fit in 64 bits")]
    Overflow(&'static str),
}
