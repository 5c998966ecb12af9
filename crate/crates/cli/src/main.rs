//! `fibcheck` — compute Fibonacci congruence data and verify the theorem
//! catalog over sweeps of primes.
//!
//! Exit codes are the machine contract: 0 for success (and for verify runs
//! with no anomaly), 1 when a verify run finds an anomaly, 2 for usage or
//! domain errors.

use std::collections::BTreeSet;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fibcheck_core::arith::primes_in_class;
use fibcheck_core::fib::{
    fib_binomial_exact, fib_binomial_mod, fib_double_mod, fib_exact, fib_iter_mod,
};
use fibcheck_core::legendre::{
    legendre_euler, legendre_gauss, legendre_reciprocity, LegendreValue,
};
use fibcheck_core::pisano::period_record;
use fibcheck_core::registry::{run_sweep, Report, SweepConfig};

mod render;

#[derive(Parser)]
#[command(name = "fibcheck", version, about = "Fibonacci congruences, Legendre symbols, Pisano periods, and a theorem-sweep verifier", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FibMethodArg {
    Iter,
    Double,
    Binomial,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum LegendreMethodArg {
    Euler,
    Gauss,
    Reciprocity,
    #[default]
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Compute F(n), exactly or modulo m
    Fib {
        /// Index of the Fibonacci number
        #[arg(long)]
        n: u64,
        /// Reduce modulo this value; omit for the exact integer
        #[arg(long = "mod")]
        modulus: Option<u64>,
        /// iter, double, binomial, or all (cross-checked)
        #[arg(long, value_enum)]
        method: Option<FibMethodArg>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Evaluate the Legendre symbol (a/p) for an odd prime p
    Legendre {
        a: i64,
        p: u64,
        /// euler, gauss, reciprocity, or all (three-way agreement)
        #[arg(long, value_enum, default_value_t)]
        method: LegendreMethodArg,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Minimal period, rank of apparition, and class period candidates
    Pisano {
        modulus: u64,
        /// Also list the closed-form candidates with verification status
        #[arg(long)]
        candidates: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// List primes p = 5k + r in one residue class
    Primes {
        /// Residue class r in 1..=4
        #[arg(long = "class")]
        class: u64,
        /// Upper bound (inclusive)
        #[arg(long = "max")]
        bound: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Sweep theorem checks over qualifying primes up to a bound
    Verify {
        /// Sweep bound (inclusive)
        #[arg(long = "max", default_value_t = 1_000)]
        bound: u64,
        /// Comma-separated check ids; omit to run everything
        #[arg(long)]
        checks: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Write the report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads for the sweep
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Fib {
            n,
            modulus,
            method,
            format,
        } => cmd_fib(n, modulus, method, format),
        Command::Legendre {
            a,
            p,
            method,
            format,
        } => cmd_legendre(a, p, method, format),
        Command::Pisano {
            modulus,
            candidates,
            format,
        } => cmd_pisano(modulus, candidates, format),
        Command::Primes {
            class,
            bound,
            format,
        } => cmd_primes(class, bound, format),
        Command::Verify {
            bound,
            checks,
            format,
            out,
            jobs,
        } => cmd_verify(bound, checks, format, out, jobs),
    }
}

fn err_str<T>(r: fibcheck_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn cmd_fib(
    n: u64,
    modulus: Option<u64>,
    method: Option<FibMethodArg>,
    format: Format,
) -> Result<ExitCode, String> {
    // (method label, value as decimal string)
    let mut values: Vec<(&str, String)> = Vec::new();
    match modulus {
        None => {
            let method = method.unwrap_or(FibMethodArg::Iter);
            if matches!(method, FibMethodArg::Iter | FibMethodArg::All) {
                values.push(("iter", err_str(fib_exact(n))?.value.to_string()));
            }
            if matches!(method, FibMethodArg::Binomial | FibMethodArg::All) {
                values.push(("binomial", err_str(fib_binomial_exact(n))?.value.to_string()));
            }
            if matches!(method, FibMethodArg::Double) {
                return Err("--method double needs --mod; use iter or binomial for exact values".into());
            }
        }
        Some(m) => {
            let method = method.unwrap_or(FibMethodArg::Double);
            if matches!(method, FibMethodArg::Iter | FibMethodArg::All) {
                values.push(("iter", err_str(fib_iter_mod(n, m))?.f_n.to_string()));
            }
            if matches!(method, FibMethodArg::Double | FibMethodArg::All) {
                values.push(("double", err_str(fib_double_mod(n, m))?.f_n.to_string()));
            }
            if matches!(method, FibMethodArg::Binomial)
                || (matches!(method, FibMethodArg::All) && m % 2 == 1)
            {
                values.push(("binomial", err_str(fib_binomial_mod(n, m))?.to_string()));
            }
        }
    }
    let agree = values.windows(2).all(|w| w[0].1 == w[1].1);
    if !agree {
        // A disagreement between routes is a computational anomaly.
        eprintln!("disagreement across methods: {values:?}");
        return Ok(ExitCode::from(1));
    }
    match format {
        Format::Text => {
            if values.len() == 1 {
                println!("{}", values[0].1);
            } else {
                for (name, v) in &values {
                    println!("{name}: {v}");
                }
                println!("agree: true");
            }
        }
        Format::Json => {
            let mut map = serde_json::Map::new();
            map.insert("n".into(), n.into());
            map.insert(
                "mod".into(),
                modulus.map(Into::into).unwrap_or(serde_json::Value::Null),
            );
            let mut vals = serde_json::Map::new();
            for (name, v) in &values {
                vals.insert((*name).into(), serde_json::Value::String(v.clone()));
            }
            map.insert("values".into(), vals.into());
            map.insert("agree".into(), true.into());
            println!("{}", serde_json::Value::Object(map));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_legendre(
    a: i64,
    p: u64,
    method: LegendreMethodArg,
    format: Format,
) -> Result<ExitCode, String> {
    let mut values: Vec<(&str, LegendreValue)> = Vec::new();
    if matches!(method, LegendreMethodArg::Euler | LegendreMethodArg::All) {
        values.push(("euler", err_str(legendre_euler(a, p))?));
    }
    if matches!(method, LegendreMethodArg::Gauss | LegendreMethodArg::All) {
        values.push(("gauss", err_str(legendre_gauss(a, p))?));
    }
    if matches!(
        method,
        LegendreMethodArg::Reciprocity | LegendreMethodArg::All
    ) {
        values.push(("reciprocity", err_str(legendre_reciprocity(a, p))?));
    }
    if values.windows(2).any(|w| w[0].1 != w[1].1) {
        eprintln!("disagreement across methods: {values:?}");
        return Ok(ExitCode::from(1));
    }
    let symbol = values[0].1;
    match format {
        Format::Text => println!("{symbol}"),
        Format::Json => {
            let mut map = serde_json::Map::new();
            map.insert("a".into(), a.into());
            map.insert("p".into(), p.into());
            map.insert("symbol".into(), symbol.value().into());
            map.insert(
                "methods".into(),
                values
                    .iter()
                    .map(|(name, _)| serde_json::Value::String((*name).into()))
                    .collect::<Vec<_>>()
                    .into(),
            );
            println!("{}", serde_json::Value::Object(map));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_pisano(modulus: u64, candidates: bool, format: Format) -> Result<ExitCode, String> {
    let record = err_str(period_record(modulus, candidates))?;
    match format {
        Format::Text => {
            println!("modulus: {}", record.modulus);
            println!("minimal period: {}", record.minimal_period);
            println!("rank of apparition: {}", record.rank_of_apparition);
            for c in &record.candidates {
                println!(
                    "candidate {} [{}]: {}",
                    c.value,
                    c.sources.join(" "),
                    if c.verified { "verified" } else { "unverified" }
                );
            }
        }
        Format::Json => {
            let mut map = serde_json::Map::new();
            map.insert("modulus".into(), record.modulus.into());
            map.insert("minimal_period".into(), record.minimal_period.into());
            map.insert(
                "rank_of_apparition".into(),
                record.rank_of_apparition.into(),
            );
            map.insert(
                "candidates".into(),
                record
                    .candidates
                    .iter()
                    .map(|c| {
                        let mut entry = serde_json::Map::new();
                        entry.insert("value".into(), c.value.into());
                        entry.insert(
                            "sources".into(),
                            c.sources
                                .iter()
                                .map(|s| serde_json::Value::String((*s).into()))
                                .collect::<Vec<_>>()
                                .into(),
                        );
                        entry.insert("verified".into(), c.verified.into());
                        serde_json::Value::Object(entry)
                    })
                    .collect::<Vec<_>>()
                    .into(),
            );
            println!("{}", serde_json::Value::Object(map));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_primes(class: u64, bound: u64, format: Format) -> Result<ExitCode, String> {
    let list = err_str(primes_in_class(class, bound))?;
    match format {
        Format::Text => {
            for pc in &list {
                println!("{} = 5*{} + {}", pc.p, pc.k, pc.r);
            }
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = list
                .iter()
                .map(|pc| {
                    let mut entry = serde_json::Map::new();
                    entry.insert("p".into(), pc.p.into());
                    entry.insert("k".into(), pc.k.into());
                    entry.insert("r".into(), pc.r.into());
                    serde_json::Value::Object(entry)
                })
                .collect();
            println!("{}", serde_json::Value::from(rows));
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Optional CI guard: a sweep bound above this environment cap is an error,
/// never a silent clamp.
const MAX_BOUND_ENV: &str = "FIBCHECK_MAX_BOUND";

fn cmd_verify(
    bound: u64,
    checks: Option<String>,
    format: Format,
    out: Option<PathBuf>,
    jobs: usize,
) -> Result<ExitCode, String> {
    if let Ok(cap) = std::env::var(MAX_BOUND_ENV) {
        let cap: u64 = cap
            .parse()
            .map_err(|_| format!("{MAX_BOUND_ENV} must be an integer, got '{cap}'"))?;
        if bound > cap {
            return Err(format!(
                "--max {bound} exceeds the {MAX_BOUND_ENV} cap {cap}"
            ));
        }
    }
    let mut config = SweepConfig::new(bound);
    config.jobs = jobs;
    if let Some(list) = checks {
        let ids: BTreeSet<String> = list
            .split(',')
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect();
        if ids.is_empty() {
            return Err("--checks was given but names no check id".into());
        }
        config.filter = Some(ids);
    }
    let report = err_str(run_sweep(&config))?;
    let rendered = match format {
        Format::Text => render::text_report(&report),
        Format::Json => report.to_json(),
    };
    match out {
        None => println!("{rendered}"),
        Some(path) => {
            let mut file = std::fs::File::create(&path)
                .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            writeln!(file, "{rendered}").map_err(|e| format!("cannot write {}: {e}", path.display()))?;
        }
    }
    Ok(exit_for(&report))
}

fn exit_for(report: &Report) -> ExitCode {
    if report.is_clean() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
