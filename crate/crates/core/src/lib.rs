pub mod numeric;
pub mod outcome;

pub use outcome::{Obstruction, SearchOutcome};
pub mod fpart;
pub mod complementary;
pub mod smarandache;
pub mod factorial_sums;
pub mod indicators;
pub mod sequences;
pub mod oracle;
pub mod golden;
pub mod errata;
pub mod selftest;
pub mod cli;
