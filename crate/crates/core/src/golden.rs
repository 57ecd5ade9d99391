//! Published value listings and tables, kept verbatim, with the computed
//! sequences they are checked against.
//!
//! Where a published value disagrees with direct computation, the listing
//! names the erratum key under which the discrepancy is recorded and
//! `expected` holds the corrected values. Everything else must match the
//! printed text term for term.

use crate::complementary::{mpower_complementary_fast, prime_complementary};
use crate::factorial_sums::{kurepa_sk, sntp, wagstaff_sw, DEFAULT_SNTP_PRIME_BOUND};
use crate::fpart::{inferior_part, superior_part, StandardSequence};
use crate::numeric::ExactDecimal;
use crate::outcome::SearchOutcome;
use crate::sequences::{digital_generate, family_flat, Family};
use crate::smarandache::{ceil_sk, double_factorial_sdf, pseudo_z};

/// Erratum keys, shared with the ledger.
pub mod keys {
    pub const SK_3: &str = "SK table, p = 3";
    pub const Z_4: &str = "Z table, n = 4";
    pub const SNTP_4: &str = "SNTP table, n = 4";
    pub const SNTP_8: &str = "SNTP table, n = 8";
    pub const SNTP_11: &str = "SNTP table, n = 11";
    pub const SQUARE_MISSING_13: &str = "square complementary listing, x = 13";
    pub const CEIL_2_TABLE: &str = "ceil k = 2 inline table, n = 1..16";
    pub const CEIL_3_N8: &str = "ceil k = 3 listing, n = 8";
    pub const PERMUTATION_TAIL: &str = "permutation listing, positions 31..40";
}

pub struct GoldenListing {
    pub name: &'static str,
    /// Index of the first printed term.
    pub start: u64,
    pub printed: &'static [u64],
    pub expected: &'static [u64],
    pub erratum: Option<&'static str>,
    /// First `count` computed terms, from `start`.
    pub compute: fn(count: usize) -> Vec<u64>,
}

impl GoldenListing {
    pub fn computed(&self) -> Vec<u64> {
        (self.compute)(self.expected.len())
    }

    pub fn matches_printed(&self) -> bool {
        (self.compute)(self.printed.len()) == self.printed
    }

    pub fn matches_expected(&self) -> bool {
        self.computed() == self.expected
    }
}

pub struct GoldenTable {
    pub name: &'static str,
    /// `(argument, printed value)`; `None` where the table prints "?".
    pub entries: &'static [(u64, Option<u64>)],
    pub errata: &'static [(u64, &'static str)],
    pub compute: fn(u64) -> SearchOutcome,
}

impl GoldenTable {
    pub fn erratum_for(&self, n: u64) -> Option<&'static str> {
        self.errata.iter().find(|(m, _)| *m == n).map(|&(_, key)| key)
    }

    /// Entries with a printed value and no recorded erratum.
    pub fn confirmed(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.entries
            .iter()
            .filter(|(n, _)| self.erratum_for(*n).is_none())
            .filter_map(|&(n, v)| v.map(|v| (n, v)))
    }

    /// Entries whose computed outcome differs from the printed value.
    pub fn divergences(&self) -> Vec<(u64, Option<u64>, SearchOutcome)> {
        self.entries
            .iter()
            .filter_map(|&(n, printed)| {
                let computed = (self.compute)(n);
                let agrees = printed.is_none_or(|v| computed == SearchOutcome::Found(v));
                (!agrees).then_some((n, printed, computed))
            })
            .collect()
    }
}

fn over<F: Fn(u64) -> u64>(start: u64, count: usize, f: F) -> Vec<u64> {
    (start..).take(count).map(f).collect()
}

fn part(inferior: bool, x: u64) -> u64 {
    let x = ExactDecimal::from(x);
    let found = if inferior {
        inferior_part(&StandardSequence::Primes, &x)
    } else {
        superior_part(&StandardSequence::Primes, &x)
    };
    found.expect("prime part of a small integer").value as u64
}

fn family(f: Family, count: usize) -> Vec<u64> {
    family_flat(f, count)
}

pub const LISTINGS: &[GoldenListing] = &[
    GoldenListing {
        name: "inferior prime part",
        start: 2,
        printed: &[2, 3, 3, 5, 5, 7, 7, 7, 7, 11, 11, 13, 13, 13, 13, 17, 17, 19, 19, 19, 19, 23, 23],
        expected: &[2, 3, 3, 5, 5, 7, 7, 7, 7, 11, 11, 13, 13, 13, 13, 17, 17, 19, 19, 19, 19, 23, 23],
        erratum: None,
        compute: |c| over(2, c, |x| part(true, x)),
    },
    GoldenListing {
        name: "superior prime part",
        start: 0,
        printed: &[2, 2, 2, 3, 5, 5, 7, 7, 11, 11, 11, 11, 13, 13, 17, 17, 17, 17, 19, 19, 23, 23, 23],
        expected: &[2, 2, 2, 3, 5, 5, 7, 7, 11, 11, 11, 11, 13, 13, 17, 17, 17, 17, 19, 19, 23, 23, 23],
        erratum: None,
        compute: |c| over(0, c, |x| part(false, x)),
    },
    GoldenListing {
        name: "square complementary",
        start: 1,
        printed: &[1, 2, 3, 1, 5, 6, 7, 2, 1, 10, 11, 3, 14, 15, 1, 17, 2, 19, 5, 21, 22, 23, 6, 1, 26, 3, 7],
        expected: &[
            1, 2, 3, 1, 5, 6, 7, 2, 1, 10, 11, 3, 13, 14, 15, 1, 17, 2, 19, 5, 21, 22, 23, 6, 1, 26, 3, 7,
        ],
        erratum: Some(keys::SQUARE_MISSING_13),
        compute: |c| over(1, c, |x| mpower_complementary_fast(x, 2).expect("small input")),
    },
    GoldenListing {
        name: "cubic complementary",
        start: 1,
        printed: &[1, 4, 9, 2, 25, 36, 49, 1, 3, 100, 121, 18, 169, 196, 225, 4, 289, 12, 361, 50],
        expected: &[1, 4, 9, 2, 25, 36, 49, 1, 3, 100, 121, 18, 169, 196, 225, 4, 289, 12, 361, 50],
        erratum: None,
        compute: |c| over(1, c, |x| mpower_complementary_fast(x, 3).expect("small input")),
    },
    GoldenListing {
        name: "prime complementary",
        start: 1,
        printed: &[
            1, 0, 0, 1, 0, 1, 0, 3, 2, 1, 0, 1, 0, 3, 2, 1, 0, 1, 0, 3, 2, 1, 0, 5, 4, 3, 2, 1, 0, 1, 0, 5,
        ],
        expected: &[
            1, 0, 0, 1, 0, 1, 0, 3, 2, 1, 0, 1, 0, 3, 2, 1, 0, 1, 0, 3, 2, 1, 0, 5, 4, 3, 2, 1, 0, 1, 0, 5,
        ],
        erratum: None,
        compute: |c| over(1, c, |x| prime_complementary(x).expect("small input")),
    },
    GoldenListing {
        name: "ceil k = 2 inline table",
        start: 1,
        printed: &[2, 4, 3, 6, 10, 12, 5, 9, 14, 8, 6, 20, 22, 15, 12, 7],
        expected: &[1, 2, 3, 2, 5, 6, 7, 4, 3, 10, 11, 6, 13, 14, 15, 4],
        erratum: Some(keys::CEIL_2_TABLE),
        compute: |c| over(1, c, |n| ceil_sk(n, 2).expect("small input")),
    },
    GoldenListing {
        name: "ceil k = 2",
        start: 1,
        printed: &[
            1, 2, 3, 2, 5, 6, 7, 4, 3, 10, 11, 6, 13, 14, 15, 4, 17, 6, 19, 10, 21, 22, 23, 12, 5, 26, 9,
            14, 29, 30, 31, 8, 33,
        ],
        expected: &[
            1, 2, 3, 2, 5, 6, 7, 4, 3, 10, 11, 6, 13, 14, 15, 4, 17, 6, 19, 10, 21, 22, 23, 12, 5, 26, 9,
            14, 29, 30, 31, 8, 33,
        ],
        erratum: None,
        compute: |c| over(1, c, |n| ceil_sk(n, 2).expect("small input")),
    },
    GoldenListing {
        name: "ceil k = 3",
        start: 1,
        printed: &[
            1, 2, 3, 2, 5, 6, 7, 8, 3, 10, 11, 6, 13, 14, 15, 4, 17, 6, 19, 10, 21, 22, 23, 6, 5, 26, 3,
            14, 29, 30, 31, 4, 33,
        ],
        expected: &[
            1, 2, 3, 2, 5, 6, 7, 2, 3, 10, 11, 6, 13, 14, 15, 4, 17, 6, 19, 10, 21, 22, 23, 6, 5, 26, 3,
            14, 29, 30, 31, 4, 33,
        ],
        erratum: Some(keys::CEIL_3_N8),
        compute: |c| over(1, c, |n| ceil_sk(n, 3).expect("small input")),
    },
    GoldenListing {
        name: "3n-digital",
        start: 1,
        printed: &[13, 26, 39, 412, 515, 618, 721, 824, 927, 1030, 1133, 1236],
        expected: &[13, 26, 39, 412, 515, 618, 721, 824, 927, 1030, 1133, 1236],
        erratum: None,
        compute: |c| digital_generate(3, c as u64).expect("small count"),
    },
    GoldenListing {
        name: "4n-digital",
        start: 1,
        printed: &[14, 28, 312, 416, 520, 624, 728, 832, 936, 1040, 1144, 1248],
        expected: &[14, 28, 312, 416, 520, 624, 728, 832, 936, 1040, 1144, 1248],
        erratum: None,
        compute: |c| digital_generate(4, c as u64).expect("small count"),
    },
    GoldenListing {
        name: "5n-digital",
        start: 1,
        printed: &[15, 210, 315, 420, 525, 630, 735, 840, 945, 1050, 1155, 1260],
        expected: &[15, 210, 315, 420, 525, 630, 735, 840, 945, 1050, 1155, 1260],
        erratum: None,
        compute: |c| digital_generate(5, c as u64).expect("small count"),
    },
    GoldenListing {
        name: "crescendo",
        start: 1,
        printed: &[
            1, 1, 2, 1, 2, 3, 1, 2, 3, 4, 1, 2, 3, 4, 5, 1, 2, 3, 4, 5, 6, 1, 2, 3, 4, 5, 6, 7, 1, 2, 3, 4,
            5, 6, 7, 8,
        ],
        expected: &[
            1, 1, 2, 1, 2, 3, 1, 2, 3, 4, 1, 2, 3, 4, 5, 1, 2, 3, 4, 5, 6, 1, 2, 3, 4, 5, 6, 7, 1, 2, 3, 4,
            5, 6, 7, 8,
        ],
        erratum: None,
        compute: |c| family(Family::Crescendo, c),
    },
    GoldenListing {
        name: "decrescendo",
        start: 1,
        printed: &[
            1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 1, 7, 6, 5, 4, 3, 2, 1, 8, 7, 6, 5,
            4, 3, 2, 1,
        ],
        expected: &[
            1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 1, 7, 6, 5, 4, 3, 2, 1, 8, 7, 6, 5,
            4, 3, 2, 1,
        ],
        erratum: None,
        compute: |c| family(Family::Decrescendo, c),
    },
    GoldenListing {
        name: "crescendo pyramidal",
        start: 1,
        printed: &[
            1, 1, 2, 1, 1, 2, 3, 2, 1, 1, 2, 3, 4, 3, 2, 1, 1, 2, 3, 4, 5, 4, 3, 2, 1, 1, 2, 3, 4, 5, 6, 5,
            4, 3, 2, 1,
        ],
        expected: &[
            1, 1, 2, 1, 1, 2, 3, 2, 1, 1, 2, 3, 4, 3, 2, 1, 1, 2, 3, 4, 5, 4, 3, 2, 1, 1, 2, 3, 4, 5, 6, 5,
            4, 3, 2, 1,
        ],
        erratum: None,
        compute: |c| family(Family::CrescendoPyramidal, c),
    },
    GoldenListing {
        name: "decrescendo pyramidal",
        start: 1,
        printed: &[
            1, 2, 1, 2, 3, 2, 1, 2, 3, 4, 3, 2, 1, 2, 3, 4, 5, 4, 3, 2, 1, 2, 3, 4, 5, 6, 5, 4, 3, 2, 1, 2,
            3, 4, 5, 6,
        ],
        expected: &[
            1, 2, 1, 2, 3, 2, 1, 2, 3, 4, 3, 2, 1, 2, 3, 4, 5, 4, 3, 2, 1, 2, 3, 4, 5, 6, 5, 4, 3, 2, 1, 2,
            3, 4, 5, 6,
        ],
        erratum: None,
        compute: |c| family(Family::DecrescendoPyramidal, c),
    },
    GoldenListing {
        name: "crescendo symmetric",
        start: 1,
        printed: &[
            1, 1, 1, 2, 2, 1, 1, 2, 3, 3, 2, 1, 1, 2, 3, 4, 4, 3, 2, 1, 1, 2, 3, 4, 5, 5, 4, 3, 2, 1, 1, 2,
            3, 4, 5, 6, 6, 5, 4, 3, 2, 1,
        ],
        expected: &[
            1, 1, 1, 2, 2, 1, 1, 2, 3, 3, 2, 1, 1, 2, 3, 4, 4, 3, 2, 1, 1, 2, 3, 4, 5, 5, 4, 3, 2, 1, 1, 2,
            3, 4, 5, 6, 6, 5, 4, 3, 2, 1,
        ],
        erratum: None,
        compute: |c| family(Family::CrescendoSymmetric, c),
    },
    GoldenListing {
        name: "decrescendo symmetric",
        start: 1,
        printed: &[
            1, 1, 2, 1, 1, 2, 3, 2, 1, 1, 2, 3, 4, 3, 2, 1, 1, 2, 3, 4, 5, 4, 3, 2, 1, 1, 2, 3, 4, 5, 6, 5,
            4, 3, 2, 1, 1, 2, 3, 4, 5, 6,
        ],
        expected: &[
            1, 1, 2, 1, 1, 2, 3, 2, 1, 1, 2, 3, 4, 3, 2, 1, 1, 2, 3, 4, 5, 4, 3, 2, 1, 1, 2, 3, 4, 5, 6, 5,
            4, 3, 2, 1, 1, 2, 3, 4, 5, 6,
        ],
        erratum: None,
        compute: |c| family(Family::DecrescendoSymmetric, c),
    },
    GoldenListing {
        name: "permutation",
        start: 1,
        printed: &[
            1, 2, 1, 3, 4, 2, 1, 3, 5, 6, 4, 2, 1, 3, 5, 7, 8, 6, 4, 2, 1, 3, 5, 7, 9, 10, 8, 6, 4, 2, 1, 3,
            5, 7, 9, 10, 8, 6, 4, 2,
        ],
        expected: &[
            1, 2, 1, 3, 4, 2, 1, 3, 5, 6, 4, 2, 1, 3, 5, 7, 8, 6, 4, 2, 1, 3, 5, 7, 9, 10, 8, 6, 4, 2, 1, 3,
            5, 7, 9, 11, 12, 10, 8, 6,
        ],
        erratum: Some(keys::PERMUTATION_TAIL),
        compute: |c| family(Family::Permutation, c),
    },
];

fn found_or_panic(r: Result<SearchOutcome, crate::numeric::NumericError>) -> SearchOutcome {
    r.expect("table arguments are in the domain")
}

pub const TABLES: &[GoldenTable] = &[
    GoldenTable {
        name: "SK",
        entries: &[
            (2, Some(2)),
            (3, Some(4)),
            (7, Some(6)),
            (11, Some(6)),
            (17, Some(5)),
            (19, Some(7)),
            (23, Some(7)),
            (31, Some(12)),
            (37, Some(22)),
            (41, Some(16)),
            (61, Some(55)),
            (71, Some(54)),
            (73, Some(42)),
            (89, Some(24)),
        ],
        errata: &[(3, keys::SK_3)],
        compute: |p| found_or_panic(kurepa_sk(p)),
    },
    GoldenTable {
        name: "SW",
        entries: &[
            (3, Some(2)),
            (11, Some(4)),
            (17, Some(5)),
            (23, Some(12)),
            (29, Some(19)),
            (37, Some(24)),
            (41, Some(32)),
            (43, Some(19)),
            (53, Some(20)),
            (67, Some(20)),
            (73, Some(7)),
            (79, Some(57)),
            (97, Some(6)),
        ],
        errata: &[],
        compute: |p| found_or_panic(wagstaff_sw(p)),
    },
    GoldenTable {
        name: "Z",
        entries: &[(1, Some(1)), (2, Some(3)), (3, Some(2)), (4, Some(3)), (5, Some(4)), (6, Some(3)), (7, Some(6))],
        errata: &[(4, keys::Z_4)],
        compute: |n| SearchOutcome::Found(pseudo_z(n).expect("positive")),
    },
    GoldenTable {
        name: "SNTP",
        entries: &[
            (1, Some(2)),
            (2, Some(2)),
            (3, Some(2)),
            (4, Some(5)),
            (5, Some(3)),
            (6, Some(3)),
            (7, Some(3)),
            (8, Some(5)),
            (9, None),
            (10, Some(5)),
            (11, Some(11)),
            (59, Some(13)),
        ],
        errata: &[(4, keys::SNTP_4), (8, keys::SNTP_8), (11, keys::SNTP_11)],
        compute: |n| found_or_panic(sntp(n, DEFAULT_SNTP_PRIME_BOUND)),
    },
    GoldenTable {
        name: "SDF",
        entries: &[
            (1, Some(1)),
            (2, Some(2)),
            (3, Some(3)),
            (4, Some(4)),
            (5, Some(5)),
            (6, Some(6)),
            (7, Some(7)),
            (8, Some(4)),
            (9, Some(9)),
            (10, Some(10)),
            (11, Some(11)),
            (12, Some(6)),
            (13, Some(13)),
            (14, Some(14)),
            (15, Some(5)),
            (16, Some(6)),
        ],
        errata: &[],
        compute: |n| SearchOutcome::Found(double_factorial_sdf(n).expect("positive")),
    },
];

pub fn listing(name: &str) -> Option<&'static GoldenListing> {
    LISTINGS.iter().find(|l| l.name == name)
}

pub fn table(name: &str) -> Option<&'static GoldenTable> {
    TABLES.iter().find(|t| t.name == name)
}
