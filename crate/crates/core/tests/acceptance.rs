//! Acceptance criteria, one PASS/FAIL line each. Printed values are copied
//! from the published tables and listings; computed values come from the
//! library and the `smk` binary.

use std::process::Command;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use smk_core::cli::bfile;
use smk_core::complementary::{mpower_complementary_fast, prime_complementary};
use smk_core::factorial_sums::{kurepa_sk, left_factorial_mod, sntp, wagstaff_sw, DEFAULT_SNTP_PRIME_BOUND};
use smk_core::fpart::{fractional_inferior, inferior_part, superior_part, MonotoneSequence, StandardSequence};
use smk_core::numeric::{factorial_valuation, is_prime, ExactDecimal, SieveCache};
use smk_core::oracle::run_crosscheck;
use smk_core::selftest::standard_pairs;
use smk_core::sequences::{digital_generate, family_flat, family_subsequence, family_term, Family};
use smk_core::smarandache::{
    ceil_sk, double_factorial_sdf, is_s_multiplicative, pseudo_z, smarandache_s, SMultiplicative,
};
use smk_core::SearchOutcome;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn smk(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_smk"))
        .args(args)
        .env_remove("SMK_SIEVE_LIMIT")
        .env_remove("SMK_SNTP_BOUND")
        .env_remove("SMK_SEARCH_BOUND")
        .output()
        .expect("smk runs")
}

fn within(start: Instant, budget: Duration, what: &str) -> Check {
    let elapsed = start.elapsed();
    if elapsed < budget {
        Ok(())
    } else {
        Err(format!("{what} took {elapsed:?}, budget {budget:?}"))
    }
}

fn compare(name: &str, computed: &[u64], printed: &[u64], errors: &mut Vec<String>) {
    if computed.len() != printed.len() {
        errors.push(format!("{name}: {} computed terms for {} printed", computed.len(), printed.len()));
    }
    for (i, (c, p)) in computed.iter().zip(printed).enumerate() {
        if c != p {
            errors.push(format!("{name} term {}: printed {p}, computed {c}", i + 1));
        }
    }
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let mut errors = Vec::new();
    let mut table = |name: &str, f: &dyn Fn(u64) -> SearchOutcome, rows: &[(u64, u64)]| {
        for &(n, v) in rows {
            let got = f(n);
            if got != SearchOutcome::Found(v) {
                errors.push(format!("{name}({n}): printed {v}, computed {got}"));
            }
        }
    };
    table("SK", &|p| kurepa_sk(p).unwrap(), &[(2, 2), (7, 6), (11, 6), (17, 5), (19, 7), (23, 7)]);
    table(
        "SW",
        &|p| wagstaff_sw(p).unwrap(),
        &[
            (3, 2),
            (11, 4),
            (17, 5),
            (23, 12),
            (29, 19),
            (37, 24),
            (41, 32),
            (43, 19),
            (53, 20),
            (67, 20),
            (73, 7),
            (79, 57),
            (97, 6),
        ],
    );
    let sdf = [1, 2, 3, 4, 5, 6, 7, 4, 9, 10, 11, 6, 13, 14, 5, 6];
    let sdf_rows: Vec<(u64, u64)> = (1..=16).zip(sdf).collect();
    table("SDF", &|n| SearchOutcome::Found(double_factorial_sdf(n).unwrap()), &sdf_rows);
    table(
        "Z",
        &|n| SearchOutcome::Found(pseudo_z(n).unwrap()),
        &[(1, 1), (2, 3), (3, 2), (5, 4), (6, 3), (7, 6)],
    );
    table(
        "SNTP",
        &|n| sntp(n, DEFAULT_SNTP_PRIME_BOUND).unwrap(),
        &[(1, 2), (2, 2), (3, 2), (5, 3), (6, 3), (7, 3), (10, 5)],
    );
    if !errors.is_empty() {
        return Err(errors.join("; "));
    }
    within(start, Duration::from_secs(1), "golden tables")
}

fn over(start: u64, count: usize, f: impl Fn(u64) -> u64) -> Vec<u64> {
    (start..).take(count).map(f).collect()
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let mut errors = Vec::new();
    let primes = StandardSequence::Primes;
    let dec = ExactDecimal::from;
    compare(
        "inferior prime part",
        &over(2, 23, |x| inferior_part(&primes, &dec(x)).unwrap().value as u64),
        &[2, 3, 3, 5, 5, 7, 7, 7, 7, 11, 11, 13, 13, 13, 13, 17, 17, 19, 19, 19, 19, 23, 23],
        &mut errors,
    );
    compare(
        "superior prime part",
        &over(0, 23, |x| superior_part(&primes, &dec(x)).unwrap().value as u64),
        &[2, 2, 2, 3, 5, 5, 7, 7, 11, 11, 11, 11, 13, 13, 17, 17, 17, 17, 19, 19, 23, 23, 23],
        &mut errors,
    );
    compare(
        "cubic complementary",
        &over(1, 20, |x| mpower_complementary_fast(x, 3).unwrap()),
        &[1, 4, 9, 2, 25, 36, 49, 1, 3, 100, 121, 18, 169, 196, 225, 4, 289, 12, 361, 50],
        &mut errors,
    );
    compare(
        "prime complementary",
        &over(1, 32, |x| prime_complementary(x).unwrap()),
        &[1, 0, 0, 1, 0, 1, 0, 3, 2, 1, 0, 1, 0, 3, 2, 1, 0, 1, 0, 3, 2, 1, 0, 5, 4, 3, 2, 1, 0, 1, 0, 5],
        &mut errors,
    );
    // The printed square listing omits the term for x = 13; re-inserted here.
    compare(
        "square complementary (single omission restored)",
        &over(1, 28, |x| mpower_complementary_fast(x, 2).unwrap()),
        &[1, 2, 3, 1, 5, 6, 7, 2, 1, 10, 11, 3, 13, 14, 15, 1, 17, 2, 19, 5, 21, 22, 23, 6, 1, 26, 3, 7],
        &mut errors,
    );
    compare(
        "ceil listing a)",
        &over(1, 33, |n| ceil_sk(n, 2).unwrap()),
        &[
            1, 2, 3, 2, 5, 6, 7, 4, 3, 10, 11, 6, 13, 14, 15, 4, 17, 6, 19, 10, 21, 22, 23, 12, 5, 26, 9, 14,
            29, 30, 31, 8, 33,
        ],
        &mut errors,
    );
    compare(
        "ceil listing b)",
        &over(1, 33, |n| ceil_sk(n, 3).unwrap()),
        &[
            1, 2, 3, 2, 5, 6, 7, 8, 3, 10, 11, 6, 13, 14, 15, 4, 17, 6, 19, 10, 21, 22, 23, 6, 5, 26, 3, 14, 29,
            30, 31, 4, 33,
        ],
        &mut errors,
    );
    let digital: [(u64, [u64; 12]); 3] = [
        (3, [13, 26, 39, 412, 515, 618, 721, 824, 927, 1030, 1133, 1236]),
        (4, [14, 28, 312, 416, 520, 624, 728, 832, 936, 1040, 1144, 1248]),
        (5, [15, 210, 315, 420, 525, 630, 735, 840, 945, 1050, 1155, 1260]),
    ];
    for (m, printed) in digital {
        compare(&format!("{m}n-digital"), &digital_generate(m, 12).unwrap(), &printed, &mut errors);
    }
    let families: [(Family, &[u64]); 7] = [
        (
            Family::Crescendo,
            &[
                1, 1, 2, 1, 2, 3, 1, 2, 3, 4, 1, 2, 3, 4, 5, 1, 2, 3, 4, 5, 6, 1, 2, 3, 4, 5, 6, 7, 1, 2, 3, 4, 5,
                6, 7, 8,
            ],
        ),
        (
            Family::Decrescendo,
            &[
                1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 1, 7, 6, 5, 4, 3, 2, 1, 8, 7, 6, 5, 4,
                3, 2, 1,
            ],
        ),
        (
            Family::CrescendoPyramidal,
            &[
                1, 1, 2, 1, 1, 2, 3, 2, 1, 1, 2, 3, 4, 3, 2, 1, 1, 2, 3, 4, 5, 4, 3, 2, 1, 1, 2, 3, 4, 5, 6, 5, 4,
                3, 2, 1,
            ],
        ),
        (
            Family::DecrescendoPyramidal,
            &[
                1, 2, 1, 2, 3, 2, 1, 2, 3, 4, 3, 2, 1, 2, 3, 4, 5, 4, 3, 2, 1, 2, 3, 4, 5, 6, 5, 4, 3, 2, 1, 2, 3,
                4, 5, 6,
            ],
        ),
        (
            Family::CrescendoSymmetric,
            &[
                1, 1, 1, 2, 2, 1, 1, 2, 3, 3, 2, 1, 1, 2, 3, 4, 4, 3, 2, 1, 1, 2, 3, 4, 5, 5, 4, 3, 2, 1, 1, 2, 3,
                4, 5, 6, 6, 5, 4, 3, 2, 1,
            ],
        ),
        (
            Family::DecrescendoSymmetric,
            &[
                1, 1, 2, 1, 1, 2, 3, 2, 1, 1, 2, 3, 4, 3, 2, 1, 1, 2, 3, 4, 5, 4, 3, 2, 1, 1, 2, 3, 4, 5, 6, 5, 4,
                3, 2, 1, 1, 2, 3, 4, 5, 6,
            ],
        ),
        (
            Family::Permutation,
            &[
                1, 2, 1, 3, 4, 2, 1, 3, 5, 6, 4, 2, 1, 3, 5, 7, 8, 6, 4, 2, 1, 3, 5, 7, 9, 10, 8, 6, 4, 2, 1, 3,
                5, 7, 9, 10, 8, 6, 4, 2,
            ],
        ),
    ];
    for (family, printed) in families {
        compare(&format!("{family}"), &family_flat(family, printed.len()), printed, &mut errors);
    }
    if !errors.is_empty() {
        return Err(errors.join("; "));
    }
    within(start, Duration::from_secs(1), "golden listings")
}

fn criterion_3() -> Check {
    let out = smk(&["selftest", "quick"]);
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    if out.status.code() != Some(0) {
        return Err(format!("selftest exited {:?}", out.status.code()));
    }
    let records: Vec<&str> = text
        .lines()
        .skip_while(|l| !l.starts_with("errata:"))
        .skip(1)
        .filter_map(|l| l.strip_prefix("  "))
        .collect();
    let mut problems = Vec::new();
    for r in &records {
        if !(r.contains("printed") && r.contains("computed") && r.ends_with(')')) {
            problems.push(format!("record without oracle justification: {r}"));
        }
    }
    let mut locations: Vec<&str> = records.iter().filter_map(|r| r.split(": printed").next()).collect();
    locations.sort_unstable();
    let mut wanted = vec![
        "SK table, p = 3",
        "Z table, n = 4",
        "SNTP table, n = 4",
        "SNTP table, n = 8",
        "SNTP table, n = 11",
        "square complementary listing, x = 13",
        "ceil k = 2 inline table, n = 1..16",
        "permutation listing, positions 31..40",
    ];
    wanted.sort_unstable();
    for w in &wanted {
        if !locations.contains(w) {
            problems.push(format!("missing erratum: {w}"));
        }
    }
    for l in &locations {
        if !wanted.contains(l) {
            problems.push(format!("additional erratum: {l}"));
        }
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(problems.join("; "))
    }
}

fn criterion_4() -> Check {
    let start = Instant::now();
    let wanted = |name: &str| {
        name == "S"
            || name.starts_with("S_")
            || name.starts_with("first-kind")
            || name.starts_with("ceil k = ")
            || name == "Z"
            || name == "SDF"
            || name.ends_with("-power complementary")
            || name == "prime complementary"
            || name.contains(" part of ")
    };
    let pairs: Vec<_> = standard_pairs().into_iter().filter(|p| wanted(&p.name)).collect();
    let reports = run_crosscheck(1..=2000, &pairs, false).map_err(|e| e.to_string())?;
    let bad: Vec<String> = reports
        .iter()
        .filter(|r| !r.agree)
        .take(5)
        .map(|r| format!("{} at {}: fast {:?}, oracle {:?}", r.function, r.input, r.fast, r.oracle))
        .collect();
    if !bad.is_empty() {
        return Err(bad.join("; "));
    }
    if reports.len() < pairs.len() * 2000 {
        return Err(format!("only {} comparisons", reports.len()));
    }
    within(start, Duration::from_secs(60), "oracle crosscheck")
}

fn criterion_5() -> Check {
    // Minimality of every Found value on the searched functions.
    for n in 1..=2000u64 {
        let s = smarandache_s(n).unwrap();
        let fact = |m: u64| (1..=m).fold(1 % n as u128, |a, k| a * k as u128 % n as u128);
        if fact(s) != 0 || (s > 1 && fact(s - 1) == 0) {
            return Err(format!("S({n}) = {s} is not the minimal witness"));
        }
        let z = pseudo_z(n).unwrap();
        let tri = |m: u64| (m as u128 * (m as u128 + 1) / 2) % n as u128;
        if tri(z) != 0 || (1..z).any(|m| tri(m) == 0) {
            return Err(format!("Z({n}) = {z} is not the minimal witness"));
        }
        for k in 1..=4u32 {
            let c = ceil_sk(n, k).unwrap();
            let pw = |m: u64| (0..k).fold(1 % n as u128, |a, _| a * m as u128 % n as u128);
            if pw(c) != 0 || (1..c).any(|m| pw(m) == 0) {
                return Err(format!("ceil({n}, {k}) = {c} is not the minimal witness"));
            }
        }
    }
    for p in (2..=1000u64).filter(|&p| is_prime(p)) {
        if let SearchOutcome::Found(v) = kurepa_sk(p).unwrap() {
            if left_factorial_mod(v, p) != 0 || (1..v).any(|n| left_factorial_mod(n, p) == 0) {
                return Err(format!("SK({p}) = {v} is not the minimal witness"));
            }
        }
        // Residue stabilization.
        let fixed = left_factorial_mod(p, p);
        if (p..=p + 50).any(|n| left_factorial_mod(n, p) != fixed) {
            return Err(format!("left factorials mod {p} do not stabilize"));
        }
    }
    // Legendre against multiplying m! in with explicit division by p.
    for p in [2u64, 3, 5, 7] {
        let mut exponent = 0;
        for m in 1..=10_000u64 {
            let mut k = m;
            while k % p == 0 {
                k /= p;
                exponent += 1;
            }
            if factorial_valuation(m, p).unwrap() != exponent {
                return Err(format!("valuation of {m}! at {p}"));
            }
        }
    }
    // Sandwich and exactness on 10^4 decimals.
    let mut rng = StdRng::seed_from_u64(7);
    let seqs = [StandardSequence::Primes, StandardSequence::Squares, StandardSequence::Cubes, StandardSequence::Factorials];
    for i in 0..10_000 {
        let seq = seqs[i % seqs.len()];
        // Prime queries stay inside the default sieve.
        let top = if seq == StandardSequence::Primes { 10_000_000 } else { 1_000_000_000 };
        let x = ExactDecimal::new(rng.gen_range(0i64..top), rng.gen_range(0u32..6));
        let sup = ExactDecimal::from(superior_part(&seq, &x).map_err(|e| e.to_string())?.value);
        if x > sup {
            return Err(format!("{seq}: {x} above its superior part"));
        }
        let first = ExactDecimal::from(seq.term(seq.first_index()).unwrap());
        match inferior_part(&seq, &x) {
            Ok(inf) => {
                let inf = ExactDecimal::from(inf.value);
                let frac = fractional_inferior(&seq, &x).unwrap();
                if inf > x || (inf == x) != (sup == x) || &frac + &inf != x {
                    return Err(format!("{seq}: sandwich fails at {x}"));
                }
            }
            Err(_) if x < first => {}
            Err(e) => return Err(format!("{seq} at {x}: {e}")),
        }
    }
    Ok(())
}

fn criterion_6() -> Check {
    let start = Instant::now();
    for family in Family::ALL {
        let flat = family_flat(family, 5000);
        for (i, &v) in flat.iter().enumerate() {
            let n = i as u64 + 1;
            if family_term(family, n) != Ok(v) {
                return Err(format!("{family} at {n}: closed form {:?}, construction {v}", family_term(family, n)));
            }
        }
    }
    for n in 1..=100u64 {
        let mut block = family_subsequence(Family::Permutation, n);
        block.sort_unstable();
        if block != (1..=2 * n).collect::<Vec<_>>() {
            return Err(format!("permutation block {n} is not a permutation of 1..{}", 2 * n));
        }
    }
    within(start, Duration::from_secs(5), "closed-form check")
}

fn criterion_7() -> Check {
    match is_s_multiplicative(|n| smarandache_s(n).unwrap(), 60) {
        SMultiplicative::Pass => Ok(()),
        SMultiplicative::Counterexample { a, b } => Err(format!("S({a}*{b}) != max(S({a}), S({b}))")),
    }
}

fn criterion_8() -> Check {
    SieveCache::global().covering(1 << 20);
    let _ = smarandache_s(1 << 39);
    let mut rng = StdRng::seed_from_u64(40);
    let mut slowest = Duration::ZERO;
    for _ in 0..200 {
        let n = rng.gen_range(1u64..1 << 40);
        let t = Instant::now();
        smarandache_s(n).map_err(|e| e.to_string())?;
        slowest = slowest.max(t.elapsed());
    }
    if slowest >= Duration::from_millis(10) {
        return Err(format!("slowest S(n) took {slowest:?}"));
    }
    let start = Instant::now();
    let out = smk(&["seq", "S", "1", "100000"]);
    if !out.status.success() || String::from_utf8_lossy(&out.stdout).split_whitespace().count() != 100_000 {
        return Err("seq S 1 100000 did not produce 100000 terms".into());
    }
    within(start, Duration::from_secs(5), "seq S 1 100000")
}

fn criterion_9() -> Check {
    let mut problems = Vec::new();
    for (args, wanted) in [(["eval", "S", "16"], 0), (["eval", "SK", "5"], 2), (["eval", "SNTP", "45"], 3)] {
        let out = smk(&args);
        let code = out.status.code();
        if code != Some(wanted) {
            problems.push(format!(
                "`{}` exited {code:?} printing {:?}, expected {wanted}",
                args.join(" "),
                String::from_utf8_lossy(&out.stdout).trim()
            ));
        }
    }
    for name in ["S", "Z", "SDF", "family-permutation"] {
        let out = smk(&["seq", name, "1", "1000", "bfile"]);
        let text = String::from_utf8_lossy(&out.stdout).to_string();
        match bfile::parse(&text) {
            Ok(pairs) if pairs.len() == 1000 && bfile::render(&pairs) == text => {}
            Ok(pairs) => problems.push(format!("{name}: b-file round trip gave {} pairs", pairs.len())),
            Err(e) => problems.push(format!("{name}: {e}")),
        }
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(problems.join("; "))
    }
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 golden tables", criterion_1),
        ("2 golden listings", criterion_2),
        ("3 erratum ledger", criterion_3),
        ("4 oracle equivalence", criterion_4),
        ("5 defining properties", criterion_5),
        ("6 closed forms", criterion_6),
        ("7 S-multiplicativity", criterion_7),
        ("8 performance floor", criterion_8),
        ("9 CLI contract", criterion_9),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        match check() {
            Ok(()) => println!("PASS criterion {name} ({:.2?})", start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name} ({:.2?}): {why}", start.elapsed());
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
