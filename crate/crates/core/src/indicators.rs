//! 0/1-valued prime and coprime indicator functions. Following the source
//! convention, 0 signals "all prime" / "coprime" and 1 everything else.

use std::fmt;

use num_integer::Integer;
use thiserror::Error;

use crate::numeric::is_prime;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Indicator {
    Zero,
    One,
}

impl Indicator {
    pub fn bit(self) -> u8 {
        match self {
            Indicator::Zero => 0,
            Indicator::One => 1,
        }
    }

    fn zero_if(cond: bool) -> Self {
        if cond {
            Indicator::Zero
        } else {
            Indicator::One
        }
    }
}

impl fmt::Display for Indicator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoprimeMode {
    /// Every pair has gcd 1.
    Pairwise,
    /// The gcd of all arguments is 1.
    Setwise,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndicatorError {
    #[error("at least 2 arguments are required, got {0}")]
    TooFewArguments(usize),
    #[error("arguments must be positive")]
    ZeroArgument,
}

pub fn prime_indicator(n: u64) -> Indicator {
    Indicator::zero_if(is_prime(n))
}

pub fn prime_indicator_k(ns: &[u64]) -> Result<Indicator, IndicatorError> {
    if ns.len() < 2 {
        return Err(IndicatorError::TooFewArguments(ns.len()));
    }
    Ok(Indicator::zero_if(ns.iter().all(|&n| is_prime(n))))
}

pub fn coprime_indicator_k(ns: &[u64], mode: CoprimeMode) -> Result<Indicator, IndicatorError> {
    if ns.len() < 2 {
        return Err(IndicatorError::TooFewArguments(ns.len()));
    }
    if ns.contains(&0) {
        return Err(IndicatorError::ZeroArgument);
    }
    let coprime = match mode {
        CoprimeMode::Pairwise => ns
            .iter()
            .enumerate()
            .all(|(i, a)| ns[i + 1..].iter().all(|b| a.gcd(b) == 1)),
        CoprimeMode::Setwise => ns.iter().fold(0u64, |g, n| g.gcd(n)) == 1,
    };
    Ok(Indicator::zero_if(coprime))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use CoprimeMode::*;

    #[test]
    fn prime_examples() {
        for p in [2, 3, 5, 7, 11] {
            assert_eq!(prime_indicator(p), Indicator::Zero);
        }
        for n in [0, 1, 4, 6] {
            assert_eq!(prime_indicator(n), Indicator::One);
        }
        assert_eq!(prime_indicator_k(&[3, 5]), Ok(Indicator::Zero));
        assert_eq!(prime_indicator_k(&[3, 4]), Ok(Indicator::One));
        assert_eq!(prime_indicator_k(&[2, 3, 5, 7]), Ok(Indicator::Zero));
        assert_eq!(prime_indicator_k(&[7]), Err(IndicatorError::TooFewArguments(1)));
    }

    #[test]
    fn coprime_examples() {
        for mode in [Pairwise, Setwise] {
            assert_eq!(coprime_indicator_k(&[4, 9], mode), Ok(Indicator::Zero));
            assert_eq!(coprime_indicator_k(&[2, 4], mode), Ok(Indicator::One));
        }
        assert_eq!(coprime_indicator_k(&[6, 10, 15], Pairwise), Ok(Indicator::One));
        assert_eq!(coprime_indicator_k(&[6, 10, 15], Setwise), Ok(Indicator::Zero));
        assert_eq!(coprime_indicator_k(&[0, 1], Setwise), Err(IndicatorError::ZeroArgument));
        assert_eq!(coprime_indicator_k(&[], Setwise), Err(IndicatorError::TooFewArguments(0)));
    }

    proptest! {
        #[test]
        fn pairwise_implies_setwise(a in 1u64..10_000, b in 1u64..10_000, c in 1u64..10_000) {
            if coprime_indicator_k(&[a, b, c], Pairwise).unwrap() == Indicator::Zero {
                prop_assert_eq!(coprime_indicator_k(&[a, b, c], Setwise).unwrap(), Indicator::Zero);
            }
        }

        #[test]
        fn k_ary_prime_is_max_of_unary(ns in prop::collection::vec(0u64..500, 2..6)) {
            let max = ns.iter().map(|&n| prime_indicator(n)).max().unwrap();
            prop_assert_eq!(prime_indicator_k(&ns).unwrap(), max);
        }
    }
}
