//! OEIS b-file format: one `n a(n)` pair per line, no header.

use std::fmt::Write;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BfileError {
    #[error("b-file line {line}: expected `<n> <a(n)>`, got {text:?}")]
    Malformed { line: usize, text: String },
}

pub fn render(terms: &[(u64, u128)]) -> String {
    let mut out = String::with_capacity(terms.len() * 12);
    for (n, v) in terms {
        writeln!(out, "{n} {v}").expect("writing to a String");
    }
    out
}

/// Parses a b-file; `#` comment lines and blank lines are skipped.
pub fn parse(text: &str) -> Result<Vec<(u64, u128)>, BfileError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| {
            let malformed = || BfileError::Malformed { line: i + 1, text: l.to_string() };
            let mut parts = l.split_whitespace();
            let (Some(n), Some(v), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(malformed());
            };
            Ok((n.parse().map_err(|_| malformed())?, v.parse().map_err(|_| malformed())?))
        })
        .collect()
}
