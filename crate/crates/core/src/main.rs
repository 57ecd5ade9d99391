use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use smk_core::cli::commands::{
    cmd_errata, cmd_eval, cmd_identify, cmd_list, cmd_seq, exit_status, SeqFormat, EXIT_OK, EXIT_SELFTEST_FAILED,
    EXIT_USAGE,
};
use smk_core::cli::{Catalog, Config, Overrides};
use smk_core::numeric::SieveCache;
use smk_core::selftest::{self, Scope};

/// Arithmetic functions, sequence families and their reference oracles.
#[derive(Parser)]
#[command(name = "smk", version)]
struct Cli {
    /// File of `key = value` lines.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Largest number the prime sieve may grow to.
    #[arg(long, global = true)]
    sieve_limit: Option<u64>,
    /// Largest prime tried by SNTP before reporting unknown.
    #[arg(long, global = true)]
    sntp_prime_bound: Option<u64>,
    /// Step budget of direct complementary searches.
    #[arg(long, global = true)]
    search_bound: Option<u64>,
    /// Most terms `identify` accepts.
    #[arg(long, global = true)]
    identify_max_terms: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a function. Exit 2 when no value exists, 3 when a bound ran out.
    Eval {
        name: String,
        #[arg(allow_negative_numbers = true)]
        args: Vec<String>,
    },
    /// Print a function over an index range.
    Seq {
        name: String,
        from: u64,
        to: u64,
        /// plain, csv or bfile.
        #[arg(default_value = "plain")]
        format: SeqFormat,
    },
    /// Find catalog sequences starting with the given terms.
    Identify {
        #[arg(required = true)]
        terms: Vec<u128>,
    },
    /// Check fast paths against oracles and published tables. Exit 4 on any disagreement.
    Selftest {
        /// quick (n <= 200) or full (n <= 2000).
        #[arg(default_value = "quick")]
        scope: Scope,
        /// Break one fast path on purpose, to check the harness.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Published values that contradict direct computation.
    Errata,
    /// Every function in the catalog.
    List,
}

fn config(cli: &Cli) -> Result<Config, String> {
    let file = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            Overrides::from_file_text(&text).map_err(|e| format!("{}: {e}", path.display()))?
        }
        None => Overrides::default(),
    };
    let env = Overrides::from_env(|var| std::env::var(var).ok()).map_err(|e| e.to_string())?;
    let flags = Overrides {
        sieve_limit: cli.sieve_limit,
        sntp_prime_bound: cli.sntp_prime_bound,
        generic_search_bound: cli.search_bound,
        identify_max_terms: cli.identify_max_terms,
    };
    Ok(Config::resolve(&file, &env, &flags))
}

fn run(cli: Cli) -> Result<i32, String> {
    let config = config(&cli)?;
    SieveCache::global().set_cap(config.sieve_limit);
    let catalog = Catalog::standard();
    match cli.command {
        Command::Eval { name, args } => {
            let args: Vec<&str> = args.iter().map(String::as_str).collect();
            let evaluation = cmd_eval(&catalog, &name, &args, &config).map_err(|e| e.to_string())?;
            println!("{evaluation}");
            Ok(exit_status(&evaluation))
        }
        Command::Seq { name, from, to, format } => {
            let out = cmd_seq(&catalog, &name, from, to, format, &config).map_err(|e| e.to_string())?;
            for w in &out.warnings {
                eprintln!("warning: {w}");
            }
            print!("{}", out.text);
            Ok(EXIT_OK)
        }
        Command::Identify { terms } => {
            let names = cmd_identify(&catalog, &terms, &config).map_err(|e| e.to_string())?;
            for n in names {
                println!("{n}");
            }
            Ok(EXIT_OK)
        }
        Command::Selftest { scope, inject_fault } => {
            let mut pairs = selftest::standard_pairs();
            if inject_fault {
                pairs = selftest::with_injected_fault(pairs);
            }
            let report = selftest::run_with(scope, &pairs);
            println!("{report}");
            Ok(if report.passed() { EXIT_OK } else { EXIT_SELFTEST_FAILED })
        }
        Command::Errata => {
            print!("{}", cmd_errata());
            Ok(EXIT_OK)
        }
        Command::List => {
            print!("{}", cmd_list(&catalog));
            Ok(EXIT_OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let code = run(cli).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        EXIT_USAGE
    });
    ExitCode::from(code as u8)
}
