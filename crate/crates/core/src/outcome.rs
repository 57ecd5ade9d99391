//! Result type for bounded smallest-witness searches.

use std::fmt;

/// Why a search can prove that no witness exists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Obstruction {
    /// The searched residue becomes constant past a known index, and the
    /// finite window before it contains no witness.
    ResidueStabilization,
    /// `n ≡ 0 (mod 4)`, or `n` even with a repeated prime factor: no primorial
    /// and no odd neighbour of one can be a multiple of `n`.
    ParityObstruction,
    /// There is no prime at or below the argument.
    NoPrimeBelow,
}

impl Obstruction {
    /// Stable machine-readable code.
    pub fn code(self) -> &'static str {
        match self {
            Obstruction::ResidueStabilization => "residue-stabilization",
            Obstruction::ParityObstruction => "parity-obstruction",
            Obstruction::NoPrimeBelow => "no-prime-below",
        }
    }
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// Outcome of a smallest-witness search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SearchOutcome {
    Found(u64),
    NotExists(Obstruction),
    /// The search bound (carried here) was exhausted without a decision.
    Unknown(u64),
}

impl SearchOutcome {
    pub fn found(self) -> Option<u64> {
        match self {
            SearchOutcome::Found(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_found(self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }
}

impl fmt::Display for SearchOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchOutcome::Found(v) => write!(f, "{v}"),
            SearchOutcome::NotExists(reason) => write!(f, "not exists: {reason}"),
            SearchOutcome::Unknown(bound) => write!(f, "unknown: bound {bound} exhausted"),
        }
    }
}
