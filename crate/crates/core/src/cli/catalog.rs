//! Registry of every evaluable function, keyed by name and alias.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use super::config::Config;
use crate::complementary::{
    complementary, mpower_complementary_fast, prime_complementary, ComplementaryError, InternalLaw, TargetImage,
};
use crate::factorial_sums::{kurepa_sk, left_factorial_mod, sntp, wagstaff_sw};
use crate::fpart::{
    fractional_inferior, fractional_superior, inferior_part, superior_part, FpartError, StandardSequence,
};
use crate::indicators::{coprime_indicator_k, prime_indicator, prime_indicator_k, CoprimeMode};
use crate::numeric::{
    double_factorial_mod, factorial_valuation, factorize, integer_nth_root, is_prime, isqrt, next_prime,
    prev_prime, primorial_mod, ExactDecimal, NumericError,
};
use crate::outcome::{Obstruction, SearchOutcome};
use crate::sequences::{digital_check, digital_term, family_subsequence, family_term, phi_perm, Family};
use crate::smarandache::{
    ceil_sk, double_factorial_sdf, first_kind, is_s_multiplicative, primitive_sp, pseudo_z, second_kind,
    smarandache_s, third_kind, FirstKindBase, SMultiplicative, SequencePair, ThirdKindError,
};

/// A printable value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Output {
    Int(u128),
    Decimal(ExactDecimal),
    Text(String),
}

impl Output {
    pub fn as_integer(&self) -> Option<u128> {
        match self {
            Output::Int(v) => Some(*v),
            Output::Decimal(d) if d.is_integer() => d.to_u128(),
            _ => None,
        }
    }
}

impl fmt::Display for Output {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Output::Int(v) => write!(f, "{v}"),
            Output::Decimal(d) => write!(f, "{d}"),
            Output::Text(t) => f.write_str(t),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evaluation {
    Value(Output),
    NotExists(Obstruction),
    /// The search bound was exhausted.
    Unknown(u64),
}

impl From<SearchOutcome> for Evaluation {
    fn from(o: SearchOutcome) -> Self {
        match o {
            SearchOutcome::Found(v) => Evaluation::Value(Output::Int(v.into())),
            SearchOutcome::NotExists(ob) => Evaluation::NotExists(ob),
            SearchOutcome::Unknown(b) => Evaluation::Unknown(b),
        }
    }
}

impl fmt::Display for Evaluation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Evaluation::Value(v) => write!(f, "{v}"),
            Evaluation::NotExists(ob) => write!(f, "not exists: {}", ob.code()),
            Evaluation::Unknown(b) => write!(f, "unknown: bound {b} exhausted"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("unknown function '{0}'; `smk list` shows the catalog")]
    UnknownFunction(String),
    #[error("{function} expects {expected} argument(s) ({usage}), got {got}")]
    Arity { function: String, expected: String, usage: String, got: usize },
    #[error("{function}: argument outside the domain: {message}")]
    Domain { function: String, message: String },
    #[error("{function}: {message}")]
    Failure { function: String, message: String },
}

/// Evaluator failure before the function name is attached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Problem {
    Domain(String),
    Failure(String),
}

impl From<NumericError> for Problem {
    fn from(e: NumericError) -> Self {
        match e {
            NumericError::Overflow(_) => Problem::Failure(e.to_string()),
            _ => Problem::Domain(e.to_string()),
        }
    }
}

impl From<FpartError> for Problem {
    fn from(e: FpartError) -> Self {
        match e {
            FpartError::Domain { .. } => Problem::Domain(e.to_string()),
            _ => Problem::Failure(e.to_string()),
        }
    }
}

impl From<ComplementaryError> for Problem {
    fn from(e: ComplementaryError) -> Self {
        match e {
            ComplementaryError::ZeroInput | ComplementaryError::InvalidPower(_) => Problem::Domain(e.to_string()),
            _ => Problem::Failure(e.to_string()),
        }
    }
}

impl From<crate::sequences::SequenceError> for Problem {
    fn from(e: crate::sequences::SequenceError) -> Self {
        use crate::sequences::SequenceError::*;
        match e {
            Overflow(_) => Problem::Failure(e.to_string()),
            _ => Problem::Domain(e.to_string()),
        }
    }
}

impl From<crate::indicators::IndicatorError> for Problem {
    fn from(e: crate::indicators::IndicatorError) -> Self {
        Problem::Domain(e.to_string())
    }
}

impl From<ThirdKindError> for Problem {
    fn from(e: ThirdKindError) -> Self {
        match e {
            ThirdKindError::Numeric(n) => n.into(),
            other => Problem::Domain(other.to_string()),
        }
    }
}

type EvalResult = Result<Evaluation, Problem>;
type Evaluator = Arc<dyn Fn(&[&str], &Config) -> EvalResult + Send + Sync>;

/// Where a unary function's sequence starts, for `seq` and `identify`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    From(u64),
    Primes,
}

impl Domain {
    pub fn start(self) -> u64 {
        match self {
            Domain::From(s) => s,
            Domain::Primes => 2,
        }
    }
}

pub struct CatalogEntry {
    pub name: String,
    pub aliases: Vec<String>,
    pub usage: String,
    pub min_args: usize,
    pub max_args: Option<usize>,
    /// Set for unary functions that read as an integer sequence.
    pub sequence: Option<Domain>,
    pub reference: &'static str,
    pub summary: &'static str,
    eval: Evaluator,
}

impl fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CatalogEntry").field("name", &self.name).field("usage", &self.usage).finish()
    }
}

impl CatalogEntry {
    fn new(
        name: impl Into<String>,
        usage: &str,
        summary: &'static str,
        eval: impl Fn(&[&str], &Config) -> EvalResult + Send + Sync + 'static,
    ) -> Self {
        let arity = usage.split_whitespace().count();
        CatalogEntry {
            name: name.into(),
            aliases: Vec::new(),
            usage: usage.to_string(),
            min_args: arity,
            max_args: Some(arity),
            sequence: None,
            reference: "",
            summary,
            eval: Arc::new(eval),
        }
    }

    fn alias(mut self, a: impl Into<String>) -> Self {
        self.aliases.push(a.into());
        self
    }

    fn variadic(mut self, min: usize) -> Self {
        self.min_args = min;
        self.max_args = None;
        self
    }

    fn sequence(mut self, d: Domain) -> Self {
        self.sequence = Some(d);
        self
    }

    fn reference(mut self, r: &'static str) -> Self {
        self.reference = r;
        self
    }

    pub fn matches(&self, name: &str) -> bool {
        self.name == name || self.aliases.iter().any(|a| a == name)
    }

    pub fn evaluate(&self, args: &[&str], config: &Config) -> Result<Evaluation, EvalError> {
        let arity_ok = args.len() >= self.min_args && self.max_args.is_none_or(|m| args.len() <= m);
        if !arity_ok {
            let expected = match self.max_args {
                Some(m) if m == self.min_args => m.to_string(),
                Some(m) => format!("{}..{m}", self.min_args),
                None => format!("at least {}", self.min_args),
            };
            return Err(EvalError::Arity {
                function: self.name.clone(),
                expected,
                usage: self.usage.clone(),
                got: args.len(),
            });
        }
        (self.eval)(args, config).map_err(|p| match p {
            Problem::Domain(message) => EvalError::Domain { function: self.name.clone(), message },
            Problem::Failure(message) => EvalError::Failure { function: self.name.clone(), message },
        })
    }
}

fn int(args: &[&str], i: usize) -> Result<u64, Problem> {
    args[i].parse().map_err(|_| {
        Problem::Domain(format!("argument {} must be a non-negative integer, got {:?}", i + 1, args[i]))
    })
}

fn small(args: &[&str], i: usize) -> Result<u32, Problem> {
    args[i]
        .parse()
        .map_err(|_| Problem::Domain(format!("argument {} must be a small non-negative integer, got {:?}", i + 1, args[i])))
}

fn dec(args: &[&str], i: usize) -> Result<ExactDecimal, Problem> {
    args[i]
        .parse()
        .map_err(|_| Problem::Domain(format!("argument {} must be a decimal number, got {:?}", i + 1, args[i])))
}

fn value(v: impl Into<u128>) -> EvalResult {
    Ok(Evaluation::Value(Output::Int(v.into())))
}

fn text(t: impl Into<String>) -> EvalResult {
    Ok(Evaluation::Value(Output::Text(t.into())))
}

fn decimal(d: ExactDecimal) -> EvalResult {
    Ok(Evaluation::Value(Output::Decimal(d)))
}

fn join(vs: &[u64]) -> String {
    vs.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

fn parse_sequence(word: &str) -> Result<StandardSequence, Problem> {
    match word {
        "primes" => Ok(StandardSequence::Primes),
        "squares" => Ok(StandardSequence::Squares),
        "cubes" => Ok(StandardSequence::Cubes),
        "factorials" => Ok(StandardSequence::Factorials),
        "naturals" => Ok(StandardSequence::Naturals),
        _ => word
            .strip_prefix("power-")
            .and_then(|m| m.parse().ok())
            .filter(|&m| m >= 1)
            .map(StandardSequence::Powers)
            .ok_or_else(|| {
                Problem::Domain(format!(
                    "unknown sequence {word:?}; expected primes, squares, cubes, factorials, naturals or power-M"
                ))
            }),
    }
}

fn parse_law(word: &str) -> Result<InternalLaw, Problem> {
    match word {
        "mul" | "multiplication" | "*" => Ok(InternalLaw::Multiplication),
        "add" | "addition" | "+" => Ok(InternalLaw::Addition),
        _ => Err(Problem::Domain(format!("unknown law {word:?}; expected mul or add"))),
    }
}

fn parse_image(word: &str) -> Result<TargetImage, Problem> {
    match word {
        "prime" | "primes" => Ok(TargetImage::Prime),
        "square" | "squares" => Ok(TargetImage::Power(2)),
        "cube" | "cubes" => Ok(TargetImage::Power(3)),
        _ => {
            let m = word
                .strip_prefix("power-")
                .and_then(|m| m.parse().ok())
                .ok_or_else(|| Problem::Domain(format!("unknown image {word:?}; expected prime, square, cube or power-M")))?;
            Ok(TargetImage::power(m)?)
        }
    }
}

fn parse_family(word: &str) -> Result<Family, Problem> {
    Ok(word.parse::<Family>()?)
}

/// Named sequences for the third-kind function.
fn named_sequence(word: &str) -> Result<fn(u64) -> u64, Problem> {
    match word {
        "one" => Ok(|_| 1),
        "identity" => Ok(|n| n),
        "double" => Ok(|n| 2 * n),
        "square" => Ok(|n| n * n),
        "cube" => Ok(|n| n * n * n),
        "triangular" => Ok(|n| n * (n + 1) / 2),
        _ => Err(Problem::Domain(format!(
            "unknown sequence {word:?}; expected one, identity, double, square, cube or triangular"
        ))),
    }
}

/// Unary functions accepted by `s-multiplicative`.
fn s_multiplicative_candidate(word: &str) -> Option<fn(u64) -> u64> {
    Some(match word {
        "S" => |n| smarandache_s(n).expect("positive"),
        "Z" => |n| pseudo_z(n).expect("positive"),
        "SDF" => |n| double_factorial_sdf(n).expect("positive"),
        "ceil-2" => |n| ceil_sk(n, 2).expect("positive"),
        "ceil-3" => |n| ceil_sk(n, 3).expect("positive"),
        "square-complementary" => |n| mpower_complementary_fast(n, 2).expect("positive"),
        "cubic-complementary" => |n| mpower_complementary_fast(n, 3).expect("positive"),
        "naturals" => |n| n,
        _ => return None,
    })
}

const S_MULTIPLICATIVE_MAX_LIMIT: u64 = 1000;

fn fpart_entries() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    let kinds = [
        ("prime", StandardSequence::Primes, 'p', 2),
        ("square", StandardSequence::Squares, 's', 0),
        ("cubic", StandardSequence::Cubes, 'c', 0),
        ("factorial", StandardSequence::Factorials, 'f', 1),
    ];
    for (word, seq, sym, first) in kinds {
        out.push(
            CatalogEntry::new(format!("inferior-{word}-part"), "x", "largest term <= x", move |a, _| {
                value(inferior_part(&seq, &dec(a, 0)?)?.value)
            })
            .alias(format!("IS{sym}"))
            .sequence(Domain::From(first))
            .reference("inferior f-part"),
        );
        out.push(
            CatalogEntry::new(format!("superior-{word}-part"), "x", "smallest term >= x", move |a, _| {
                value(superior_part(&seq, &dec(a, 0)?)?.value)
            })
            .alias(format!("SS{sym}"))
            .sequence(Domain::From(0))
            .reference("superior f-part"),
        );
        out.push(
            CatalogEntry::new(format!("fractional-{word}-part"), "x", "x minus the inferior part", move |a, _| {
                decimal(fractional_inferior(&seq, &dec(a, 0)?)?)
            })
            .alias(format!("FS{sym}"))
            .sequence(Domain::From(first))
            .reference("fractional f-part"),
        );
        out.push(
            CatalogEntry::new(
                format!("superior-fractional-{word}-part"),
                "x",
                "superior part minus x",
                move |a, _| decimal(fractional_superior(&seq, &dec(a, 0)?)?),
            )
            .alias(format!("SFS{sym}"))
            .sequence(Domain::From(0))
            .reference("superior fractional f-part"),
        );
    }
    out.push(
        CatalogEntry::new("inferior-part", "sequence x", "inferior part against a named sequence", |a, _| {
            value(inferior_part(&parse_sequence(a[0])?, &dec(a, 1)?)?.value)
        })
        .reference("inferior f-part"),
    );
    out.push(
        CatalogEntry::new("superior-part", "sequence x", "superior part against a named sequence", |a, _| {
            value(superior_part(&parse_sequence(a[0])?, &dec(a, 1)?)?.value)
        })
        .reference("superior f-part"),
    );
    out.push(
        CatalogEntry::new("fractional-part", "sequence x", "x minus the inferior part", |a, _| {
            decimal(fractional_inferior(&parse_sequence(a[0])?, &dec(a, 1)?)?)
        })
        .reference("fractional f-part"),
    );
    out.push(
        CatalogEntry::new("superior-fractional-part", "sequence x", "superior part minus x", |a, _| {
            decimal(fractional_superior(&parse_sequence(a[0])?, &dec(a, 1)?)?)
        })
        .reference("superior fractional f-part"),
    );
    out
}

fn complementary_entries() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry::new("square-complementary", "x", "smallest k with x*k a square", |a, _| {
            value(mpower_complementary_fast(int(a, 0)?, 2)?)
        })
        .sequence(Domain::From(1))
        .reference("complementary function"),
        CatalogEntry::new("cubic-complementary", "x", "smallest k with x*k a cube", |a, _| {
            value(mpower_complementary_fast(int(a, 0)?, 3)?)
        })
        .sequence(Domain::From(1))
        .reference("complementary function"),
        CatalogEntry::new("mpower-complementary", "m x", "smallest k with x*k an m-th power", |a, _| {
            value(mpower_complementary_fast(int(a, 1)?, small(a, 0)?)?)
        })
        .reference("complementary function"),
        CatalogEntry::new("prime-complementary", "x", "smallest k with x+k prime", |a, _| {
            value(prime_complementary(int(a, 0)?)?)
        })
        .sequence(Domain::From(1))
        .reference("complementary function"),
        CatalogEntry::new(
            "complementary",
            "law image x",
            "direct search for the smallest k with x~k in the image (law mul|add, image prime|square|cube|power-M)",
            |a, c| match complementary(int(a, 2)?, parse_law(a[0])?, parse_image(a[1])?, c.generic_search_bound) {
                Ok(k) => value(k),
                Err(ComplementaryError::BoundExhausted(b)) => Ok(Evaluation::Unknown(b)),
                Err(e) => Err(e.into()),
            },
        )
        .reference("complementary function"),
    ]
}

fn smarandache_entries() -> Vec<CatalogEntry> {
    let mut out = vec![
        CatalogEntry::new("S", "n", "smallest m with n | m!", |a, _| value(smarandache_s(int(a, 0)?)?))
            .alias("smarandache")
            .alias("kempner")
            .sequence(Domain::From(1))
            .reference("Smarandache function"),
        CatalogEntry::new("primitive-S", "p n", "smallest m with p^n | m!", |a, _| {
            value(primitive_sp(int(a, 0)?, int(a, 1)?)?)
        })
        .alias("Sp")
        .reference("primitive function"),
        CatalogEntry::new("first-kind", "n a", "smallest k with n^a | k!", |a, _| {
            value(first_kind(&FirstKindBase::of(int(a, 0)?)?, int(a, 1)?)?)
        })
        .reference("Smarandache function of the first kind"),
        CatalogEntry::new("second-kind", "k n", "first-kind function of base n at k", |a, _| {
            value(second_kind(int(a, 0)?, int(a, 1)?)?)
        })
        .reference("Smarandache function of the second kind"),
        CatalogEntry::new(
            "third-kind",
            "base-seq exponent-seq n",
            "first-kind function of base a_n at b_n (sequences one|identity|double|square|cube|triangular)",
            |a, _| {
                let pair = SequencePair::new(named_sequence(a[0])?, named_sequence(a[1])?)
                    .map_err(|d| Problem::from(ThirdKindError::DegenerateSequences(d)))?;
                value(third_kind(&pair, int(a, 2)?)?)
            },
        )
        .reference("Smarandache function of the third kind"),
        CatalogEntry::new("ceil", "k n", "smallest m with n | m^k", |a, _| value(ceil_sk(int(a, 1)?, small(a, 0)?)?))
            .reference("ceil function"),
    ];
    for k in 2..=4u32 {
        out.push(
            CatalogEntry::new(format!("ceil-{k}"), "n", "smallest m with n | m^k", move |a, _| {
                value(ceil_sk(int(a, 0)?, k)?)
            })
            .alias(format!("S{k}"))
            .sequence(Domain::From(1))
            .reference("ceil function"),
        );
    }
    out.push(
        CatalogEntry::new("Z", "n", "smallest m with n | 1 + 2 + ... + m", |a, _| value(pseudo_z(int(a, 0)?)?))
            .alias("pseudo-Z")
            .alias("pseudo-smarandache")
            .sequence(Domain::From(1))
            .reference("pseudo-Smarandache function"),
    );
    out.push(
        CatalogEntry::new("SDF", "n", "smallest m with n | m!!", |a, _| value(double_factorial_sdf(int(a, 0)?)?))
            .alias("double-factorial-function")
            .sequence(Domain::From(1))
            .reference("double-factorial function"),
    );
    out.push(
        CatalogEntry::new(
            "s-multiplicative",
            "function limit",
            "checks f(ab) = max(f(a), f(b)) on coprime a <= b <= limit",
            |a, _| {
                let f = s_multiplicative_candidate(a[0]).ok_or_else(|| {
                    Problem::Domain(format!(
                        "{:?} is not checkable; use S, Z, SDF, ceil-2, ceil-3, square-complementary, cubic-complementary or naturals",
                        a[0]
                    ))
                })?;
                let limit = int(a, 1)?;
                if limit == 0 || limit > S_MULTIPLICATIVE_MAX_LIMIT {
                    return Err(Problem::Domain(format!("limit must be in 1..={S_MULTIPLICATIVE_MAX_LIMIT}")));
                }
                match is_s_multiplicative(f, limit) {
                    SMultiplicative::Pass => text("pass"),
                    SMultiplicative::Counterexample { a, b } => text(format!("counterexample: a = {a}, b = {b}")),
                }
            },
        )
        .reference("S-multiplicative function"),
    );
    out
}

fn factorial_sum_entries() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry::new("SK", "p", "smallest n with p | !n", |a, _| Ok(kurepa_sk(int(a, 0)?)?.into()))
            .alias("kurepa")
            .sequence(Domain::Primes)
            .reference("Smarandache-Kurepa function"),
        CatalogEntry::new("SW", "p", "smallest n with p | 1! + ... + n!", |a, _| Ok(wagstaff_sw(int(a, 0)?)?.into()))
            .alias("wagstaff")
            .sequence(Domain::Primes)
            .reference("Smarandache-Wagstaff function"),
        CatalogEntry::new("SNTP", "n", "smallest prime p with n | p# - 1, p# or p# + 1", |a, c| {
            Ok(sntp(int(a, 0)?, c.sntp_prime_bound)?.into())
        })
        .alias("near-to-primorial")
        .sequence(Domain::From(1))
        .reference("near-to-primorial function"),
        CatalogEntry::new("left-factorial-mod", "n m", "!n mod m", |a, _| {
            let m = int(a, 1)?;
            if m == 0 {
                return Err(Problem::Domain("modulus must be positive".into()));
            }
            value(left_factorial_mod(int(a, 0)?, m))
        })
        .reference("left factorial"),
    ]
}

fn indicator_entries() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry::new("P", "n [n2 ...]", "0 if every argument is prime, else 1", |a, _| {
            let ns = (0..a.len()).map(|i| int(a, i)).collect::<Result<Vec<_>, _>>()?;
            let bit = match ns.as_slice() {
                [n] => prime_indicator(*n),
                _ => prime_indicator_k(&ns)?,
            };
            value(bit.bit())
        })
        .alias("prime-indicator")
        .variadic(1)
        .sequence(Domain::From(0))
        .reference("prime function"),
        CatalogEntry::new(
            "C",
            "[pairwise|setwise] n1 n2 [n3 ...]",
            "0 if the arguments are coprime, else 1; three or more arguments need a mode",
            |a, _| {
                let (mode, rest) = match a[0] {
                    "pairwise" => (Some(CoprimeMode::Pairwise), &a[1..]),
                    "setwise" => (Some(CoprimeMode::Setwise), &a[1..]),
                    _ => (None, a),
                };
                let ns = (0..rest.len()).map(|i| int(rest, i)).collect::<Result<Vec<_>, _>>()?;
                let mode = match (mode, ns.len()) {
                    (Some(m), _) => m,
                    (None, 2) => CoprimeMode::Pairwise,
                    (None, _) => {
                        return Err(Problem::Domain(
                            "with three or more arguments, pass pairwise or setwise first".into(),
                        ))
                    }
                };
                value(coprime_indicator_k(&ns, mode)?.bit())
            },
        )
        .alias("coprime-indicator")
        .variadic(2)
        .reference("coprime function"),
    ]
}

fn sequence_entries() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for m in 3..=5u64 {
        out.push(
            CatalogEntry::new(format!("digital-{m}"), "k", "k followed by the digits of m*k", move |a, _| {
                value(digital_term(m, int(a, 0)?)?)
            })
            .sequence(Domain::From(1))
            .reference("mn-digital subsequence"),
        );
    }
    out.push(
        CatalogEntry::new("digital", "m k", "k followed by the digits of m*k", |a, _| {
            value(digital_term(int(a, 0)?, int(a, 1)?)?)
        })
        .reference("mn-digital subsequence"),
    );
    out.push(
        CatalogEntry::new("digital-check", "m x", "split of x into k | m*k, or none", |a, _| {
            match digital_check(int(a, 0)?, int(a, 1)?) {
                Some(split) => text(split.to_string()),
                None => text("none"),
            }
        })
        .reference("mn-digital subsequence"),
    );
    for family in Family::ALL {
        out.push(
            CatalogEntry::new(format!("family-{}", family.name()), "position", "term of the flattened blocks", move |a, _| {
                value(family_term(family, int(a, 0)?)?)
            })
            .sequence(Domain::From(1))
            .reference("sequences of sub-sequences"),
        );
    }
    out.push(
        CatalogEntry::new("block", "family n", "the n-th block of a family", |a, _| {
            let n = int(a, 1)?;
            if n == 0 {
                return Err(Problem::Domain("blocks are numbered from 1".into()));
            }
            text(join(&family_subsequence(parse_family(a[0])?, n)))
        })
        .reference("sequences of sub-sequences"),
    );
    out.push(
        CatalogEntry::new("phi", "size j", "j-th term of the odd-up, even-down arrangement of 1..size", |a, _| {
            value(phi_perm(int(a, 0)?, int(a, 1)?)?)
        })
        .reference("permutation sub-sequences"),
    );
    out
}

fn numeric_entries() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry::new("is-prime", "n", "primality", |a, _| text(is_prime(int(a, 0)?).to_string())),
        CatalogEntry::new("next-prime", "n", "smallest prime >= n", |a, _| value(next_prime(int(a, 0)?)?)),
        CatalogEntry::new("prev-prime", "n", "largest prime <= n", |a, _| Ok(prev_prime(int(a, 0)?).into())),
        CatalogEntry::new("factorize", "n", "prime factorization", |a, _| text(factorize(int(a, 0)?)?.to_string())),
        CatalogEntry::new("factorial-valuation", "m p", "exponent of p in m!", |a, _| {
            value(factorial_valuation(int(a, 0)?, int(a, 1)?)?)
        }),
        CatalogEntry::new("primorial-mod", "p m", "p# mod m", |a, _| {
            let m = int(a, 1)?;
            if m == 0 {
                return Err(Problem::Domain("modulus must be positive".into()));
            }
            value(primorial_mod(int(a, 0)?, m))
        }),
        CatalogEntry::new("double-factorial-mod", "n m", "n!! mod m", |a, _| {
            let m = int(a, 1)?;
            if m == 0 {
                return Err(Problem::Domain("modulus must be positive".into()));
            }
            value(double_factorial_mod(int(a, 0)?, m))
        }),
        CatalogEntry::new("isqrt", "x", "floor of the square root", |a, _| value(isqrt(int(a, 0)?))),
        CatalogEntry::new("iroot", "x m", "floor of the m-th root", |a, _| {
            value(integer_nth_root(int(a, 0)?, small(a, 1)?)?)
        }),
    ]
}

pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn standard() -> Self {
        let mut entries = fpart_entries();
        entries.extend(complementary_entries());
        entries.extend(smarandache_entries());
        entries.extend(factorial_sum_entries());
        entries.extend(indicator_entries());
        entries.extend(sequence_entries());
        entries.extend(numeric_entries());
        Catalog { entries }
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn lookup(&self, name: &str) -> Result<&CatalogEntry, EvalError> {
        self.entries
            .iter()
            .find(|e| e.matches(name))
            .ok_or_else(|| EvalError::UnknownFunction(name.to_string()))
    }

    pub fn eval(&self, name: &str, args: &[&str], config: &Config) -> Result<Evaluation, EvalError> {
        self.lookup(name)?.evaluate(args, config)
    }
}
