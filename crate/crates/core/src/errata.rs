//! Published values that contradict their own definitions.
//!
//! Each record carries the printed value and the value recomputed by an
//! oracle when the ledger is built, never a stored constant.

use std::fmt;

use crate::complementary::{InternalLaw, TargetImage};
use crate::golden::keys;
use crate::oracle::{
    oracle_complementary, oracle_kurepa, oracle_permutation_block, oracle_smallest_power_root, oracle_sntp,
    oracle_triangular,
};
use crate::outcome::{Obstruction, SearchOutcome};

/// Prime bound for the SNTP oracle; every table entry resolves far below it.
const SNTP_ORACLE_BOUND: u64 = 100;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Computed {
    Value(u64),
    Values(Vec<u64>),
    NotExists(Obstruction),
}

impl fmt::Display for Computed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Computed::Value(v) => write!(f, "{v}"),
            Computed::Values(vs) => {
                let parts: Vec<String> = vs.iter().map(u64::to_string).collect();
                f.write_str(&parts.join(" "))
            }
            Computed::NotExists(o) => write!(f, "not exists: {}", o.code()),
        }
    }
}

impl From<SearchOutcome> for Computed {
    fn from(o: SearchOutcome) -> Self {
        match o {
            SearchOutcome::Found(v) => Computed::Value(v),
            SearchOutcome::NotExists(ob) => Computed::NotExists(ob),
            SearchOutcome::Unknown(b) => panic!("oracle bound {b} too small for an erratum record"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErratumRecord {
    pub location: &'static str,
    pub printed: String,
    pub computed: Computed,
    pub justification: &'static str,
}

impl fmt::Display for ErratumRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: printed {}; computed {} ({})",
            self.location, self.printed, self.computed, self.justification
        )
    }
}

fn join(vs: &[u64]) -> String {
    vs.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

/// The full ledger, in a fixed order.
pub fn ledger() -> Vec<ErratumRecord> {
    let square = oracle_complementary(13, InternalLaw::Multiplication, TargetImage::Power(2))
        .expect("13 has a square complement");
    let ceil_2: Vec<u64> = (1..=16).map(|n| oracle_smallest_power_root(n, 2)).collect();
    let mut tail = oracle_permutation_block(5);
    tail.extend(oracle_permutation_block(6));
    // b(5) and b(6) cover positions 21..42.
    let tail = tail[10..20].to_vec();

    vec![
        ErratumRecord {
            location: keys::SK_3,
            printed: "4".into(),
            computed: oracle_kurepa(3).into(),
            justification: "!1 = 1, !2 = 2, and k! vanishes mod 3 for k >= 3, so !n leaves remainder 1 mod 3 for all n >= 3",
        },
        ErratumRecord {
            location: keys::Z_4,
            printed: "3".into(),
            computed: Computed::Value(oracle_triangular(4)),
            justification: "1 + 2 + 3 = 6 is not divisible by 4; 1 + ... + 7 = 28 is the first triangular number that is",
        },
        ErratumRecord {
            location: keys::SNTP_4,
            printed: "5".into(),
            computed: oracle_sntp(4, SNTP_ORACLE_BOUND).into(),
            justification: "p# is twice an odd number, so 4 divides none of p# - 1, p#, p# + 1",
        },
        ErratumRecord {
            location: keys::SNTP_8,
            printed: "5".into(),
            computed: oracle_sntp(8, SNTP_ORACLE_BOUND).into(),
            justification: "p# is twice an odd number, so 8 divides none of p# - 1, p#, p# + 1",
        },
        ErratumRecord {
            location: keys::SNTP_11,
            printed: "11".into(),
            computed: oracle_sntp(11, SNTP_ORACLE_BOUND).into(),
            justification: "7# - 1 = 209 = 11 * 19, and 11 divides none of the neighbours of 2#, 3#, 5#",
        },
        ErratumRecord {
            location: keys::SQUARE_MISSING_13,
            printed: "(absent: the listing runs 11, 3, 14, 15)".into(),
            computed: Computed::Value(square),
            justification: "13 is squarefree, so 13 * 13 is the first square multiple; one term was dropped",
        },
        ErratumRecord {
            location: keys::CEIL_2_TABLE,
            printed: "2 4 3 6 10 12 5 9 14 8 6 20 22 15 12 7".into(),
            computed: Computed::Values(ceil_2),
            justification: "S2(1) = 1 and S2(2) = 2 already contradict the row; the k = 2 listing printed later agrees with computation",
        },
        ErratumRecord {
            location: keys::CEIL_3_N8,
            printed: "8".into(),
            computed: Computed::Value(oracle_smallest_power_root(8, 3)),
            justification: "2^3 = 8 is divisible by 8, and 1^3 is not",
        },
        ErratumRecord {
            location: keys::PERMUTATION_TAIL,
            printed: join(&[1, 3, 5, 7, 9, 10, 8, 6, 4, 2]),
            computed: Computed::Values(tail),
            justification: "positions 31..42 form b(6) = 1 3 5 7 9 11 12 10 8 6 4 2; the printed tail repeats b(5)",
        },
    ]
}
