//! Exact scaled decimals: `value = mantissa / 10^scale`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

/// A real number with a finite decimal expansion, held exactly.
///
/// Always canonical: either `scale == 0` or the mantissa is not a multiple
/// of ten. Canonical form makes structural equality coincide with numeric
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactDecimal {
    mantissa: BigInt,
    scale: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid decimal literal {0:?}")]
pub struct ParseDecimalError(pub String);

fn pow10(k: u32) -> BigInt {
    num_traits::pow(BigInt::from(10u32), k as usize)
}

impl ExactDecimal {
    pub fn new(mantissa: impl Into<BigInt>, scale: u32) -> Self {
        let mut mantissa = mantissa.into();
        let mut scale = scale;
        let ten = BigInt::from(10u32);
        if mantissa.is_zero() {
            scale = 0;
        }
        while scale > 0 {
            let (q, r) = mantissa.div_rem(&ten);
            if !r.is_zero() {
                break;
            }
            mantissa = q;
            scale -= 1;
        }
        ExactDecimal { mantissa, scale }
    }

    pub fn zero() -> Self {
        ExactDecimal::new(0, 0)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn is_integer(&self) -> bool {
        self.scale == 0
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    /// Mantissa rescaled to `10^-scale` units (`scale >= self.scale`).
    fn mantissa_at(&self, scale: u32) -> BigInt {
        &self.mantissa * pow10(scale - self.scale)
    }

    /// `⌊self⌋`.
    pub fn floor(&self) -> BigInt {
        self.mantissa.div_floor(&pow10(self.scale))
    }

    /// `self − ⌊self⌋`, in `[0, 1)`.
    pub fn fract(&self) -> ExactDecimal {
        ExactDecimal::new(self.mantissa.mod_floor(&pow10(self.scale)), self.scale)
    }

    pub fn to_u128(&self) -> Option<u128> {
        if self.scale == 0 {
            self.mantissa.to_u128()
        } else {
            None
        }
    }
}

impl From<u64> for ExactDecimal {
    fn from(v: u64) -> Self {
        ExactDecimal::new(v, 0)
    }
}

impl From<u128> for ExactDecimal {
    fn from(v: u128) -> Self {
        ExactDecimal::new(v, 0)
    }
}

impl From<i64> for ExactDecimal {
    fn from(v: i64) -> Self {
        ExactDecimal::new(v, 0)
    }
}

impl From<BigInt> for ExactDecimal {
    fn from(v: BigInt) -> Self {
        ExactDecimal::new(v, 0)
    }
}

impl Ord for ExactDecimal {
    fn cmp(&self, other: &Self) -> Ordering {
        let scale = self.scale.max(other.scale);
        self.mantissa_at(scale).cmp(&other.mantissa_at(scale))
    }
}

impl PartialOrd for ExactDecimal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &ExactDecimal {
    type Output = ExactDecimal;
    fn add(self, rhs: &ExactDecimal) -> ExactDecimal {
        let scale = self.scale.max(rhs.scale);
        ExactDecimal::new(self.mantissa_at(scale) + rhs.mantissa_at(scale), scale)
    }
}

impl Sub for &ExactDecimal {
    type Output = ExactDecimal;
    fn sub(self, rhs: &ExactDecimal) -> ExactDecimal {
        let scale = self.scale.max(rhs.scale);
        ExactDecimal::new(self.mantissa_at(scale) - rhs.mantissa_at(scale), scale)
    }
}

impl Add for ExactDecimal {
    type Output = ExactDecimal;
    fn add(self, rhs: ExactDecimal) -> ExactDecimal {
        &self + &rhs
    }
}

impl Sub for ExactDecimal {
    type Output = ExactDecimal;
    fn sub(self, rhs: ExactDecimal) -> ExactDecimal {
        &self - &rhs
    }
}

impl FromStr for ExactDecimal {
    type Err = ParseDecimalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseDecimalError(s.to_string());
        let (negative, body) = match s.as_bytes().first() {
            Some(b'-') => (true, &s[1..]),
            Some(b'+') => (false, &s[1..]),
            _ => (false, s),
        };
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(err());
        }
        let all_digits = |t: &str| t.bytes().all(|b| b.is_ascii_digit());
        if !all_digits(int_part) || !all_digits(frac_part) {
            return Err(err());
        }
        let digits = format!("{int_part}{frac_part}");
        let magnitude = BigInt::parse_bytes(digits.as_bytes(), 10).ok_or_else(err)?;
        let scale = u32::try_from(frac_part.len()).map_err(|_| err())?;
        let mantissa = if negative { -magnitude } else { magnitude };
        Ok(ExactDecimal::new(mantissa, scale))
    }
}

impl fmt::Display for ExactDecimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.scale == 0 {
            return write!(f, "{}", self.mantissa);
        }
        let digits = self.mantissa.magnitude().to_str_radix(10);
        let scale = self.scale as usize;
        let padded = if digits.len() <= scale {
            format!("{}{}", "0".repeat(scale + 1 - digits.len()), digits)
        } else {
            digits
        };
        let (int_part, frac_part) = padded.split_at(padded.len() - scale);
        let sign = if self.mantissa.sign() == Sign::Minus { "-" } else { "" };
        write!(f, "{sign}{int_part}.{frac_part}")
    }
}
