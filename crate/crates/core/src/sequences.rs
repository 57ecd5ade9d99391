//! Digital `m·n` subsequences and the families of sequences built from
//! sub-sequences, with closed-form access to any position.
//!
//! Positions are 1-based. For a family, `b(n)` is the `n`-th block and
//! `a(i)` the `i`-th term of the flattened sequence.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::numeric::isqrt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("multiplier must be at least 2, got {0}")]
    InvalidMultiplier(u64),
    #[error("term {0} does not fit in 64 bits")]
    Overflow(u64),
    #[error("positions are 1-based; 0 is not a position")]
    ZeroPosition,
    #[error("position {position} is outside 1..={size}")]
    OutOfRange { position: u64, size: u64 },
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
}

fn digits(v: u64) -> u32 {
    v.checked_ilog10().unwrap_or(0) + 1
}

fn concat(prefix: u64, suffix: u64) -> Option<u64> {
    prefix.checked_mul(10u64.checked_pow(digits(suffix))?)?.checked_add(suffix)
}

/// `concat(k, m·k)` for `k = 1..=count`.
pub fn digital_generate(m: u64, count: u64) -> Result<Vec<u64>, SequenceError> {
    (1..=count).map(|k| digital_term(m, k)).collect()
}

/// The `k`-th member: the decimal concatenation of `k` and `m·k`.
pub fn digital_term(m: u64, k: u64) -> Result<u64, SequenceError> {
    if m < 2 {
        return Err(SequenceError::InvalidMultiplier(m));
    }
    if k == 0 {
        return Err(SequenceError::ZeroPosition);
    }
    m.checked_mul(k)
        .and_then(|suffix| concat(k, suffix))
        .ok_or(SequenceError::Overflow(k))
}

/// A split of a decimal string into a prefix and a suffix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DigitalSplit {
    pub prefix: u64,
    pub suffix: u64,
    /// Number of digits in the prefix.
    pub position: u32,
}

impl fmt::Display for DigitalSplit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.prefix, self.suffix)
    }
}

/// Leftmost contiguous split of `x` whose suffix is `m` times its prefix.
/// Suffixes with a leading zero never qualify.
pub fn digital_check(m: u64, x: u64) -> Option<DigitalSplit> {
    let text = x.to_string();
    (1..text.len()).find_map(|cut| {
        let (head, tail) = text.split_at(cut);
        if tail.starts_with('0') {
            return None;
        }
        let prefix: u64 = head.parse().ok()?;
        let suffix: u64 = tail.parse().ok()?;
        (prefix.checked_mul(m) == Some(suffix)).then_some(DigitalSplit {
            prefix,
            suffix,
            position: cut as u32,
        })
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `1, 2, …, n`
    Crescendo,
    /// `n, n−1, …, 1`
    Decrescendo,
    /// `1, 2, …, n, …, 2, 1`
    CrescendoPyramidal,
    /// `n, …, 2, 1, 2, …, n`
    DecrescendoPyramidal,
    /// `1, …, n, n, …, 1`
    CrescendoSymmetric,
    /// `n, …, 1, 1, …, n`
    DecrescendoSymmetric,
    /// `1, 3, …, 2n−1, 2n, 2n−2, …, 2`
    Permutation,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Crescendo,
        Family::Decrescendo,
        Family::CrescendoPyramidal,
        Family::DecrescendoPyramidal,
        Family::CrescendoSymmetric,
        Family::DecrescendoSymmetric,
        Family::Permutation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Crescendo => "crescendo",
            Family::Decrescendo => "decrescendo",
            Family::CrescendoPyramidal => "crescendo-pyramidal",
            Family::DecrescendoPyramidal => "decrescendo-pyramidal",
            Family::CrescendoSymmetric => "crescendo-symmetric",
            Family::DecrescendoSymmetric => "decrescendo-symmetric",
            Family::Permutation => "permutation",
        }
    }

    /// `|b(n)|`: `n`, `2n − 1` or `2n`.
    pub fn block_len(self, n: u64) -> u64 {
        match self {
            Family::Crescendo | Family::Decrescendo => n,
            Family::CrescendoPyramidal | Family::DecrescendoPyramidal => 2 * n - 1,
            _ => 2 * n,
        }
    }

    /// Position of the last term of `b(n)`: `n(n+1)/2`, `n²` or `n(n+1)`.
    pub fn block_end(self, n: u64) -> u64 {
        match self {
            Family::Crescendo | Family::Decrescendo => n * (n + 1) / 2,
            Family::CrescendoPyramidal | Family::DecrescendoPyramidal => n * n,
            _ => n * (n + 1),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = SequenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| SequenceError::UnknownFamily(s.to_string()))
    }
}

/// The `n`-th block `b(n)`, built directly from its description.
pub fn family_subsequence(family: Family, n: u64) -> Vec<u64> {
    if n == 0 {
        return Vec::new();
    }
    let up = 1..=n;
    let down = (1..=n).rev();
    match family {
        Family::Crescendo => up.collect(),
        Family::Decrescendo => down.collect(),
        Family::CrescendoPyramidal => up.chain((1..n).rev()).collect(),
        Family::DecrescendoPyramidal => down.chain(2..=n).collect(),
        Family::CrescendoSymmetric => up.chain(down).collect(),
        Family::DecrescendoSymmetric => down.chain(up).collect(),
        Family::Permutation => (1..=n).map(|j| 2 * j - 1).chain((1..=n).rev().map(|j| 2 * j)).collect(),
    }
}

/// First `count` terms of `b(1) b(2) b(3) …`.
pub fn family_flat(family: Family, count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut n = 1;
    while out.len() < count {
        out.extend(family_subsequence(family, n));
        n += 1;
    }
    out.truncate(count);
    out
}

/// Smallest `n` with `n(n+1)/2 >= pos`.
fn triangular_block(pos: u64) -> u64 {
    let t = |n: u64| n as u128 * (n as u128 + 1) / 2;
    let mut n = isqrt(pos.saturating_mul(2));
    while n > 0 && t(n - 1) >= pos as u128 {
        n -= 1;
    }
    while t(n) < pos as u128 {
        n += 1;
    }
    n
}

/// Smallest `n` with `n² >= pos`.
fn square_block(pos: u64) -> u64 {
    let r = isqrt(pos);
    if r * r == pos {
        r
    } else {
        r + 1
    }
}

/// Smallest `n` with `n(n+1) >= pos`.
fn oblong_block(pos: u64) -> u64 {
    let o = |n: u64| n as u128 * (n as u128 + 1);
    let mut n = isqrt(pos);
    while n > 0 && o(n - 1) >= pos as u128 {
        n -= 1;
    }
    while o(n) < pos as u128 {
        n += 1;
    }
    n
}

/// `a(pos)` by closed form: locate the enclosing block by an integer root,
/// then read the value off the distance `i` to the block's last position.
pub fn family_term(family: Family, pos: u64) -> Result<u64, SequenceError> {
    if pos == 0 {
        return Err(SequenceError::ZeroPosition);
    }
    let value = match family {
        Family::Crescendo | Family::Decrescendo => {
            let n = triangular_block(pos);
            let i = (n as u128 * (n as u128 + 1) / 2) as u64 - pos;
            match family {
                // a(T(n) − i) = n − i
                Family::Crescendo => n - i,
                // a(T(n) − i) = 1 + i
                _ => 1 + i,
            }
        }
        Family::CrescendoPyramidal | Family::DecrescendoPyramidal => {
            let n = square_block(pos);
            let i = n * n - pos;
            let rising = family == Family::CrescendoPyramidal;
            if i < n {
                // a(n² − i) = 1 + i  |  n − i
                if rising { 1 + i } else { n - i }
            } else {
                // a(n² − n − i) = n − i − 1  |  2 + i
                let i = i - n;
                if rising { n - i - 1 } else { 2 + i }
            }
        }
        Family::CrescendoSymmetric | Family::DecrescendoSymmetric | Family::Permutation => {
            let n = oblong_block(pos);
            let i = (n as u128 * (n as u128 + 1)) as u64 - pos;
            if i < n {
                match family {
                    Family::CrescendoSymmetric => 1 + i,
                    Family::DecrescendoSymmetric => n - i,
                    _ => 2 + 2 * i,
                }
            } else {
                // a(n(n+1) − n − i)
                let i = i - n;
                match family {
                    Family::CrescendoSymmetric => n - i,
                    Family::DecrescendoSymmetric => 1 + i,
                    _ => 2 * n - 1 - 2 * i,
                }
            }
        }
    };
    Ok(value)
}

/// The `j`-th entry of the circular arrangement of `1..=size`: odd numbers
/// ascending, then even numbers descending.
pub fn phi_perm(size: u64, j: u64) -> Result<u64, SequenceError> {
    if j == 0 || j > size {
        return Err(SequenceError::OutOfRange { position: j, size });
    }
    let odds = size.div_ceil(2);
    if j <= odds {
        Ok(2 * j - 1)
    } else {
        Ok(2 * (size / 2 - (j - odds) + 1))
    }
}
