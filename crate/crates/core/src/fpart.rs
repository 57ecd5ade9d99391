//! Inferior and superior f-parts of a real number with respect to a strictly
//! increasing integer sequence, and the fractional parts derived from them.
//!
//! The inferior part of `x` is the term `f(k)` with `f(k) <= x < f(k+1)`; the
//! superior part is the smallest term `>= x`. Both are located by galloping
//! followed by binary search over the index, so a query costs `O(log k)`
//! term evaluations.

use std::fmt;

use thiserror::Error;

use crate::numeric::{ExactDecimal, SieveCache};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermError {
    /// The term exceeds `u128::MAX`; it is larger than any supported query.
    Overflow,
    /// The term exists but cannot be produced within configured limits.
    Unavailable,
}

/// A strictly increasing, unbounded integer sequence indexed from `first_index`.
pub trait MonotoneSequence {
    fn name(&self) -> &str;
    fn first_index(&self) -> u64;
    fn term(&self, k: u64) -> Result<u128, TermError>;
}

/// The sequences the library ships with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StandardSequence {
    /// 2, 3, 5, 7, … indexed from 1.
    Primes,
    /// k², from k = 0.
    Squares,
    /// k³, from k = 0.
    Cubes,
    /// k!, from k = 1 (0! = 1! would break strictness).
    Factorials,
    /// k^m for m ≥ 1, from k = 0.
    Powers(u32),
    /// k, from k = 0.
    Naturals,
}

impl MonotoneSequence for StandardSequence {
    fn name(&self) -> &str {
        match self {
            StandardSequence::Primes => "primes",
            StandardSequence::Squares => "squares",
            StandardSequence::Cubes => "cubes",
            StandardSequence::Factorials => "factorials",
            StandardSequence::Powers(_) => "powers",
            StandardSequence::Naturals => "naturals",
        }
    }

    fn first_index(&self) -> u64 {
        match self {
            StandardSequence::Primes | StandardSequence::Factorials => 1,
            _ => 0,
        }
    }

    fn term(&self, k: u64) -> Result<u128, TermError> {
        let power = |m: u32| (k as u128).checked_pow(m).ok_or(TermError::Overflow);
        match *self {
            StandardSequence::Primes => SieveCache::global()
                .nth_prime(k)
                .map(u128::from)
                .ok_or(TermError::Unavailable),
            StandardSequence::Squares => power(2),
            StandardSequence::Cubes => power(3),
            StandardSequence::Powers(m) => power(m.max(1)),
            StandardSequence::Naturals => Ok(k as u128),
            StandardSequence::Factorials => {
                (2..=k).try_fold(1u128, |acc, i| acc.checked_mul(i as u128)).ok_or(TermError::Overflow)
            }
        }
    }
}

/// The located index together with its term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PartResult {
    pub index: u64,
    pub value: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FpartError {
    #[error("{x} is below the first term of {sequence}; no inferior part exists")]
    Domain { sequence: String, x: String },
    #[error("{sequence} terms near {x} exceed the configured limits")]
    OutOfRange { sequence: String, x: String },
    #[error("{x} is too large for the {sequence} part search")]
    TooLarge { sequence: String, x: String },
}

struct Query<'a, S: ?Sized> {
    seq: &'a S,
    x: &'a ExactDecimal,
}

impl<S: MonotoneSequence + ?Sized> Query<'_, S> {
    fn err(&self, make: fn(String, String) -> FpartError) -> FpartError {
        make(self.seq.name().to_string(), self.x.to_string())
    }

    fn out_of_range(&self) -> FpartError {
        self.err(|sequence, x| FpartError::OutOfRange { sequence, x })
    }

    fn too_large(&self) -> FpartError {
        self.err(|sequence, x| FpartError::TooLarge { sequence, x })
    }

    /// `Some(term)` when `term(k) <= x`, `None` when `term(k) > x`.
    fn at_or_below(&self, k: u64) -> Result<Option<u128>, FpartError> {
        match self.seq.term(k) {
            Ok(v) if ExactDecimal::from(v) <= *self.x => Ok(Some(v)),
            Ok(_) | Err(TermError::Overflow) => Ok(None),
            Err(TermError::Unavailable) => Err(self.out_of_range()),
        }
    }

    fn floor(&self) -> Result<PartResult, FpartError> {
        let k0 = self.seq.first_index();
        let Some(first) = self.at_or_below(k0)? else {
            return Err(self.err(|sequence, x| FpartError::Domain { sequence, x }));
        };
        if *self.x > ExactDecimal::from(u128::MAX) {
            return Err(self.too_large());
        }

        let (mut lo, mut lo_value) = (k0, first);
        let mut step = 1u64;
        let mut hi = loop {
            let probe = lo.saturating_add(step);
            if probe == lo {
                return Err(self.too_large());
            }
            match self.at_or_below(probe)? {
                Some(v) => {
                    lo = probe;
                    lo_value = v;
                    step = step.saturating_mul(2);
                }
                None => break probe,
            }
        };
        // term(lo) <= x < term(hi)
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            match self.at_or_below(mid)? {
                Some(v) => {
                    lo = mid;
                    lo_value = v;
                }
                None => hi = mid,
            }
        }
        Ok(PartResult { index: lo, value: lo_value })
    }
}

/// The term `f(k)` with `f(k) <= x < f(k+1)`, and its index.
pub fn inferior_part<S: MonotoneSequence + ?Sized>(
    seq: &S,
    x: &ExactDecimal,
) -> Result<PartResult, FpartError> {
    Query { seq, x }.floor()
}

/// The smallest term `>= x`, and its index. Values at or below the first
/// term map to the first term.
pub fn superior_part<S: MonotoneSequence + ?Sized>(
    seq: &S,
    x: &ExactDecimal,
) -> Result<PartResult, FpartError> {
    let query = Query { seq, x };
    let k0 = seq.first_index();
    match seq.term(k0) {
        Ok(v) if *x <= ExactDecimal::from(v) => return Ok(PartResult { index: k0, value: v }),
        Ok(_) => {}
        Err(TermError::Overflow) => return Err(query.too_large()),
        Err(TermError::Unavailable) => return Err(query.out_of_range()),
    }
    let below = query.floor()?;
    if ExactDecimal::from(below.value) == *x {
        return Ok(below);
    }
    let index = below.index + 1;
    match seq.term(index) {
        Ok(value) => Ok(PartResult { index, value }),
        Err(TermError::Overflow) => Err(query.too_large()),
        Err(TermError::Unavailable) => Err(query.out_of_range()),
    }
}

/// `x − inferior part`, in `[0, f(k+1) − f(k))`.
pub fn fractional_inferior<S: MonotoneSequence + ?Sized>(
    seq: &S,
    x: &ExactDecimal,
) -> Result<ExactDecimal, FpartError> {
    let part = inferior_part(seq, x)?;
    Ok(x - &ExactDecimal::from(part.value))
}

/// `superior part − x`; zero exactly when `x` is a term.
pub fn fractional_superior<S: MonotoneSequence + ?Sized>(
    seq: &S,
    x: &ExactDecimal,
) -> Result<ExactDecimal, FpartError> {
    let part = superior_part(seq, x)?;
    Ok(&ExactDecimal::from(part.value) - x)
}

impl fmt::Display for StandardSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StandardSequence::Powers(m) => write!(f, "{m}-powers"),
            other => f.write_str(other.name()),
        }
    }
}
