use std::io::Write;
use std::process::{Command, Output};

use smk_core::cli::bfile;
use smk_core::cli::commands::{cmd_identify, cmd_seq, SeqFormat};
use smk_core::cli::{Catalog, Config, Evaluation};

fn smk(args: &[&str]) -> Output {
    smk_env(args, &[])
}

fn smk_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_smk"));
    cmd.args(args).env_remove("SMK_SIEVE_LIMIT").env_remove("SMK_SNTP_BOUND").env_remove("SMK_SEARCH_BOUND");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn eval_values_and_exit_statuses() {
    let cases: [(&[&str], &str, i32); 6] = [
        (&["eval", "S", "16"], "6\n", 0),
        (&["eval", "SDF", "15"], "5\n", 0),
        (&["eval", "SK", "5"], "4\n", 0),
        (&["eval", "SK", "3"], "not exists: residue-stabilization\n", 2),
        (&["eval", "SNTP", "45"], "unknown: bound 104729 exhausted\n", 3),
        (&["eval", "SNTP", "4"], "not exists: parity-obstruction\n", 2),
    ];
    for (args, out, code) in cases {
        let o = smk(args);
        assert_eq!(stdout(&o), out, "{args:?}");
        assert_eq!(o.status.code(), Some(code), "{args:?}");
    }
}

#[test]
fn eval_errors_are_distinct() {
    let unknown = smk(&["eval", "T", "1"]);
    let arity = smk(&["eval", "S", "1", "2"]);
    let domain = smk(&["eval", "S", "0"]);
    let usage = smk(&["frobnicate"]);
    for o in [&unknown, &arity, &domain, &usage] {
        assert_eq!(o.status.code(), Some(1));
        assert!(stdout(o).is_empty());
    }
    let messages = [stderr(&unknown), stderr(&arity), stderr(&domain)];
    assert!(messages[0].contains("unknown function 'T'"));
    assert!(messages[1].contains("expects 1 argument"));
    assert!(messages[2].contains("outside the domain"));
}

#[test]
fn seq_formats() {
    assert_eq!(stdout(&smk(&["seq", "Z", "1", "7", "plain"])), "1 3 2 7 4 3 6\n");
    assert_eq!(stdout(&smk(&["seq", "inferior-prime-part", "2", "10", "plain"])), "2 3 3 5 5 7 7 7 7\n");
    assert_eq!(
        stdout(&smk(&["seq", "family-crescendo", "1", "6", "bfile"])),
        "1 1\n2 1\n3 2\n4 1\n5 2\n6 3\n"
    );
    assert_eq!(stdout(&smk(&["seq", "SDF", "7", "9", "csv"])), "n,value\n7,7\n8,4\n9,9\n");
}

#[test]
fn seq_domain_violations() {
    let plain = smk(&["seq", "SK", "2", "7"]);
    assert_eq!(plain.status.code(), Some(0));
    assert_eq!(stdout(&plain), "2 4 6\n");
    assert_eq!(stderr(&plain).lines().count(), 3);
    assert!(stderr(&plain).contains("skipping 4: 4 is not prime"));
    let b = smk(&["seq", "SK", "2", "7", "bfile"]);
    assert_eq!(b.status.code(), Some(1));
    assert!(stdout(&b).is_empty());
    assert!(stderr(&b).contains("index 3"));
}

#[test]
fn bfile_round_trip_on_thousand_terms() {
    let catalog = Catalog::standard();
    let config = Config::default();
    for name in ["S", "Z", "SDF", "family-permutation", "square-complementary", "superior-prime-part"] {
        let domain = catalog.lookup(name).unwrap().sequence.unwrap();
        let (from, to) = (domain.start(), domain.start() + 999);
        let text = stdout(&smk(&["seq", name, &from.to_string(), &to.to_string(), "bfile"]));
        let pairs = bfile::parse(&text).unwrap();
        assert_eq!(pairs.len(), 1000);
        assert_eq!(bfile::render(&pairs), text);
        for (n, v) in pairs {
            let e = catalog.eval(name, &[&n.to_string()], &config).unwrap();
            assert_eq!(e.to_string(), v.to_string(), "{name}({n})");
        }
    }
}

#[test]
fn seq_values_equal_eval_values() {
    let catalog = Catalog::standard();
    let config = Config::default();
    for entry in catalog.entries().iter().filter(|e| e.sequence.is_some()) {
        let start = entry.sequence.unwrap().start();
        let out = cmd_seq(&catalog, &entry.name, start, start + 40, SeqFormat::Csv, &config).unwrap();
        for line in out.text.lines().skip(1) {
            let (n, v) = line.split_once(',').unwrap();
            match catalog.eval(&entry.name, &[n], &config).unwrap() {
                Evaluation::Value(e) => assert_eq!(e.to_string(), v, "{}({n})", entry.name),
                other => panic!("{}({n}) printed {v} but evaluates to {other}", entry.name),
            }
        }
    }
}

#[test]
fn identify_finds_every_sequence_from_its_own_prefix() {
    let catalog = Catalog::standard();
    let config = Config::default();
    for entry in catalog.entries().iter().filter(|e| e.sequence.is_some()) {
        let start = entry.sequence.unwrap().start();
        let out = cmd_seq(&catalog, &entry.name, start, start + 60, SeqFormat::Plain, &config).unwrap();
        let terms: Vec<u128> = out.text.split_whitespace().take(12).map(|t| t.parse().unwrap()).collect();
        let hits = cmd_identify(&catalog, &terms, &config).unwrap();
        assert!(hits.contains(&entry.name), "{} not identified from {terms:?}: {hits:?}", entry.name);
    }
}

#[test]
fn identify_command() {
    let z = smk(&["identify", "1", "3", "2", "7", "4", "3", "6"]);
    assert!(stdout(&z).lines().any(|l| l == "Z"));
    let p = smk(&["identify", "2", "3", "3", "5", "5"]);
    assert!(stdout(&p).lines().any(|l| l == "inferior-prime-part"));
    let none = smk(&["identify", "99", "98", "97"]);
    assert_eq!(none.status.code(), Some(0));
    assert!(stdout(&none).is_empty());
    let short = smk(&["identify", "1", "2"]);
    assert_eq!(short.status.code(), Some(1));
    assert!(stderr(&short).contains("at least 3"));
    let capped = smk(&["--identify-max-terms", "3", "identify", "1", "3", "2", "7"]);
    assert_eq!(capped.status.code(), Some(1));
}

#[test]
fn configuration_precedence() {
    let mut file = tempfile_path("smk-config");
    writeln!(file.1, "# test\nsntp-prime-bound = 5").unwrap();
    let path = file.0.to_str().unwrap().to_string();

    let from_file = smk(&["--config", &path, "eval", "SNTP", "59"]);
    assert_eq!(stdout(&from_file), "unknown: bound 5 exhausted\n");
    assert_eq!(from_file.status.code(), Some(3));

    let env_over_file = smk_env(&["--config", &path, "eval", "SNTP", "59"], &[("SMK_SNTP_BOUND", "7")]);
    assert_eq!(stdout(&env_over_file), "unknown: bound 7 exhausted\n");

    let flag_over_env =
        smk_env(&["--config", &path, "eval", "SNTP", "59", "--sntp-prime-bound", "100"], &[("SMK_SNTP_BOUND", "7")]);
    assert_eq!(stdout(&flag_over_env), "13\n");

    let search = smk_env(&["eval", "complementary", "add", "square", "5"], &[("SMK_SEARCH_BOUND", "2")]);
    assert_eq!(stdout(&search), "unknown: bound 2 exhausted\n");

    let bad_env = smk_env(&["eval", "S", "4"], &[("SMK_SIEVE_LIMIT", "lots")]);
    assert_eq!(bad_env.status.code(), Some(1));
    assert!(stderr(&bad_env).contains("SMK_SIEVE_LIMIT"));
    let _ = std::fs::remove_file(&file.0);
}

fn tempfile_path(stem: &str) -> (std::path::PathBuf, std::fs::File) {
    let path = std::env::temp_dir().join(format!("{stem}-{}.conf", std::process::id()));
    let file = std::fs::File::create(&path).unwrap();
    (path, file)
}

#[test]
fn errata_and_list() {
    let errata = smk(&["errata"]);
    assert_eq!(errata.status.code(), Some(0));
    assert_eq!(stdout(&errata).lines().count(), 9);
    assert!(stdout(&errata).contains("Z table, n = 4: printed 3; computed 7"));
    let list = stdout(&smk(&["list"]));
    assert!(list.lines().any(|l| l.starts_with("S n (also smarandache, kempner)")));
    assert!(list.lines().any(|l| l.starts_with("SK p") && l.contains("[sequence over primes]")));
}

#[test]
fn selftest_exit_statuses() {
    let ok = smk(&["selftest", "quick"]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    assert!(stdout(&ok).contains("errata: 9"));
    let broken = smk(&["selftest", "quick", "--inject-fault"]);
    assert_eq!(broken.status.code(), Some(4));
    assert!(stdout(&broken).contains("DISAGREE S at 97"));
    assert_eq!(smk(&["selftest", "sideways"]).status.code(), Some(1));
}
