//! Command-line front end: single queries, batch files, verification sweeps
//! and benchmarks.
//!
//! Exit codes: 0 success, 2 invalid input, 3 resource or budget limit,
//! 4 internal integrality failure. Failures print one
//! `error[<class>]: <reason>` line on stderr.

mod bench;
mod query;
mod verify;

use std::ffi::OsString;
use std::io::{BufRead, Write};

use clap::{Args, Parser, Subcommand};

pub use bench::{rows_csv, rows_json, run_bench, BenchConfig, BenchFamily, BenchMethod, BenchRow};
pub use query::{
    error_json, result_json, result_text, run_query, CountResult, Method, MethodUsed, Quantities, Query,
    QueryOptions, QuerySpec,
};
pub use verify::{run_verify, Family, Mismatch, VerifyConfig, VerifyReport};

use crate::oracle::OracleBudget;
use crate::{Error, Int, Result};

#[derive(Debug, Parser)]
#[command(name = "denumerant", version, about = "Exact counts of non-negative solutions to ax+by(+cz)=n")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// formula | direct-sums | oracle | auto
    #[arg(long, global = true, default_value = "auto")]
    pub method: String,
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Also print the intermediate residues and N-quantity of the formula used.
    #[arg(long, global = true)]
    pub show_quantities: bool,
    /// Cap on brute-force iterations and DP table entries.
    #[arg(long, global = true)]
    pub oracle_budget: Option<u64>,
    /// Seed for randomized sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// N(a,b;n): count2 <a> <b> <n>
    Count2 {
        #[arg(allow_negative_numbers = true, num_args = 0..)]
        args: Vec<String>,
    },
    /// N(a,b,c;n): count3 <a> <b> <c> <n>
    Count3 {
        #[arg(allow_negative_numbers = true, num_args = 0..)]
        args: Vec<String>,
    },
    /// N(F_i,F_{i+1},F_{i+2};n): fib <i> <n>
    Fib {
        #[arg(allow_negative_numbers = true, num_args = 0..)]
        args: Vec<String>,
    },
    /// N(L_i,L_{i+1},L_{i+2};n): lucas <i> <n>
    Lucas {
        #[arg(allow_negative_numbers = true, num_args = 0..)]
        args: Vec<String>,
    },
    /// DP oracle for any positive coefficients: oracle <a> [b [c ...]] <n>
    Oracle {
        #[arg(allow_negative_numbers = true, num_args = 0..)]
        args: Vec<String>,
    },
    /// Compare closed form, general formula and oracle over a grid.
    Verify(VerifyArgs),
    /// Time the counting routes against each other.
    Bench(BenchArgs),
    /// Run one query per line from a file, or `-` for standard input.
    Batch { input: String },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// fib | lucas | generic
    #[arg(long, default_value = "fib")]
    pub family: String,
    #[arg(long)]
    pub i_min: Option<u64>,
    #[arg(long)]
    pub i_max: Option<u64>,
    #[arg(long, default_value_t = 0)]
    pub n_min: u64,
    #[arg(long)]
    pub n_max: Option<u64>,
    /// Largest coefficient for the generic family.
    #[arg(long, default_value_t = 12)]
    pub max_coeff: u64,
    /// Random n values per triple instead of the full range (uses --seed).
    #[arg(long)]
    pub samples: Option<usize>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// fib | lucas | count2 | count3
    #[arg(long, default_value = "fib")]
    pub family: String,
    /// Sequence index for fib/lucas.
    #[arg(long, default_value_t = 12)]
    pub index: u64,
    /// Comma-separated coefficients for count2/count3.
    #[arg(long)]
    pub coeffs: Option<String>,
    /// Comma-separated list of n values; `10^k` is accepted.
    #[arg(long, default_value = "425896")]
    pub n: String,
    /// Comma-separated: formula, binner, direct-sums, oracle, enumeration.
    #[arg(long, default_value = "formula,oracle")]
    pub methods: String,
    #[arg(long, default_value_t = 5)]
    pub reps: usize,
}

/// Parses an integer literal, also accepting `base^exp` (e.g. `10^18`).
pub fn parse_int(s: &str) -> Result<Int> {
    if let Some((base, exp)) = s.split_once('^') {
        let base = query::parse_int(base, "base")?;
        let exp: u32 = exp
            .parse()
            .map_err(|_| Error::invalid(format!("exponent must be a small non-negative integer, got '{exp}'")))?;
        return Ok(num_traits::Pow::pow(base, exp));
    }
    query::parse_int(s, "value")
}

fn normalize_powers(args: &[String]) -> Result<Vec<String>> {
    args.iter()
        .map(|a| if a.contains('^') { parse_int(a).map(|v| v.to_string()) } else { Ok(a.clone()) })
        .collect()
}

fn budget(global: &GlobalOpts) -> OracleBudget {
    match global.oracle_budget {
        Some(cap) => OracleBudget {
            iterations: cap,
            table_entries: cap,
        },
        None => OracleBudget::default(),
    }
}

fn report_error(err: &Error, json: bool, out: &mut dyn Write, errw: &mut dyn Write) -> i32 {
    if json {
        let _ = writeln!(out, "{}", error_json(err));
    }
    let _ = writeln!(errw, "error[{}]: {}", err.class(), err);
    err.exit_code()
}

/// Runs the command line `args` (program name first), writing to `out` and
/// `err`, and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let first = rendered.lines().next().unwrap_or("invalid arguments");
                let _ = writeln!(err, "error[validation]: {}", first.trim_start_matches("error: "));
            }
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(e) => report_error(&e, cli.global.json, out, err),
    }
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let g = &cli.global;
    let method: Method = g.method.parse()?;
    let opts = QueryOptions {
        show_quantities: g.show_quantities,
        budget: budget(g),
    };
    let io = |e: std::io::Error| Error::Resource(format!("i/o: {e}"));

    let single = |kind: &str, args: &[String]| -> Result<QuerySpec> {
        QuerySpec::from_args(kind, &normalize_powers(args)?, method)
    };
    let spec = match &cli.command {
        Command::Count2 { args } => single("count2", args)?,
        Command::Count3 { args } => single("count3", args)?,
        Command::Fib { args } => single("fib", args)?,
        Command::Lucas { args } => single("lucas", args)?,
        Command::Oracle { args } => single("oracle", args)?,
        Command::Verify(v) => return run_verify_cmd(v, g, out),
        Command::Bench(b) => return run_bench_cmd(b, g, out),
        Command::Batch { input } => return run_batch(input, method, &opts, g.json, out, err),
    };

    let result = run_query(&spec, &opts)?;
    if g.json {
        writeln!(out, "{}", result_json(&spec, &result)).map_err(io)?;
    } else {
        writeln!(out, "{}", result_text(&result)).map_err(io)?;
    }
    Ok(0)
}

fn run_verify_cmd(v: &VerifyArgs, g: &GlobalOpts, out: &mut dyn Write) -> Result<i32> {
    let family: Family = v.family.parse()?;
    let mut cfg = VerifyConfig::new(family);
    let (lo, hi) = (*cfg.indices.start(), *cfg.indices.end());
    cfg.indices = v.i_min.unwrap_or(lo)..=v.i_max.unwrap_or(hi);
    cfg.ns = v.n_min..=v.n_max.unwrap_or(*cfg.ns.end());
    cfg.max_coeff = v.max_coeff;
    cfg.samples = v.samples;
    cfg.seed = g.seed;
    cfg.budget = budget(g);

    let report = run_verify(&cfg)?;
    let io = |e: std::io::Error| Error::Resource(format!("i/o: {e}"));
    if g.json {
        writeln!(out, "{}", report.to_json()).map_err(io)?;
    } else {
        writeln!(out, "{report}").map_err(io)?;
    }
    Ok(if report.passed() { 0 } else { 1 })
}

fn run_bench_cmd(b: &BenchArgs, g: &GlobalOpts, out: &mut dyn Write) -> Result<i32> {
    let coeffs = || -> Result<Vec<Int>> {
        b.coeffs
            .as_deref()
            .ok_or_else(|| Error::invalid("--coeffs is required for count2/count3 benches"))?
            .split(',')
            .map(|s| parse_int(s.trim()))
            .collect()
    };
    let family = match b.family.as_str() {
        "fib" => BenchFamily::Fib(b.index),
        "lucas" => BenchFamily::Lucas(b.index),
        "count2" => match coeffs()?.as_slice() {
            [a, c] => BenchFamily::Count2(a.clone(), c.clone()),
            _ => return Err(Error::invalid("count2 bench needs two coefficients")),
        },
        "count3" => match coeffs()?.as_slice() {
            [a, bb, c] => BenchFamily::Count3(a.clone(), bb.clone(), c.clone()),
            _ => return Err(Error::invalid("count3 bench needs three coefficients")),
        },
        other => return Err(Error::invalid(format!("unknown bench family '{other}'"))),
    };
    let cfg = BenchConfig {
        family,
        ns: b.n.split(',').map(|s| parse_int(s.trim())).collect::<Result<_>>()?,
        methods: b.methods.split(',').map(|s| s.trim().parse()).collect::<Result<_>>()?,
        reps: b.reps,
        budget: budget(g),
    };
    let rows = run_bench(&cfg)?;
    let io = |e: std::io::Error| Error::Resource(format!("i/o: {e}"));
    if g.json {
        writeln!(out, "{}", rows_json(&rows)).map_err(io)?;
    } else {
        write!(out, "{}", rows_csv(&rows)).map_err(io)?;
    }
    Ok(0)
}

fn run_batch(
    input: &str,
    method: Method,
    opts: &QueryOptions,
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let io = |e: std::io::Error| Error::Resource(format!("i/o: {e}"));
    let lines: Vec<String> = if input == "-" {
        std::io::stdin().lock().lines().collect::<std::io::Result<_>>().map_err(io)?
    } else {
        let file = std::fs::File::open(input).map_err(|e| Error::invalid(format!("cannot open '{input}': {e}")))?;
        std::io::BufReader::new(file).lines().collect::<std::io::Result<_>>().map_err(io)?
    };
    Ok(run_batch_lines(&lines, method, opts, json, out, err))
}

/// Evaluates batch lines in order. Returns the highest exit code any line
/// produced.
pub fn run_batch_lines<S: AsRef<str>>(
    lines: &[S],
    method: Method,
    opts: &QueryOptions,
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let mut worst = 0;
    for (lineno, raw) in lines.iter().enumerate() {
        let raw = raw.as_ref();
        let outcome = QuerySpec::parse_line(raw, method).and_then(|spec| match spec {
            Some(spec) => run_query(&spec, opts).map(|r| Some((spec, r))),
            None => Ok(None),
        });
        match outcome {
            Ok(None) => {}
            Ok(Some((spec, r))) => {
                let line = if json {
                    result_json(&spec, &r).to_string()
                } else {
                    let mut s = format!("{} = {}", spec.to_line(), r.count);
                    if let Some(q) = &r.quantities {
                        s.push_str(&format!(" [{}", r.method_used));
                        for (k, v) in q.named() {
                            s.push_str(&format!(" {k}={v}"));
                        }
                        s.push(']');
                    }
                    s
                };
                let _ = writeln!(out, "{line}");
            }
            Err(e) => {
                if json {
                    let _ = writeln!(out, "{}", error_json(&e));
                } else {
                    let _ = writeln!(out, "{} ! {}: {}", raw.trim(), e.class(), e);
                }
                let _ = writeln!(err, "line {}: error[{}]: {}", lineno + 1, e.class(), e);
                worst = worst.max(e.exit_code());
            }
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("denumerant").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn single_queries() {
        assert_eq!(run_str(&["fib", "12", "425896"]), (0, "7178\n".into(), String::new()));
        assert_eq!(run_str(&["count2", "3", "5", "13"]).1, "1\n");
        assert_eq!(run_str(&["oracle", "2", "4", "6", "5"]).1, "0\n");
        let (code, out, _) = run_str(&["fib", "12", "425896", "--show-quantities"]);
        assert_eq!(code, 0);
        assert!(out.contains("B1: 88") && out.contains("N2: -342183561408"));
    }

    #[test]
    fn exit_codes() {
        let (code, _, err) = run_str(&["count2", "4", "6", "10", "--method", "formula"]);
        assert_eq!(code, 2);
        assert!(err.starts_with("error[validation]:") && err.lines().count() == 1);
        assert_eq!(run_str(&["fib", "-3", "10"]).0, 2);
        assert_eq!(run_str(&["fib", "3", "-10"]).0, 2);
        assert_eq!(run_str(&["frobnicate"]).0, 2);
        assert_eq!(run_str(&["fib", "40", "10^18", "--method", "oracle"]).0, 3);
        assert_eq!(run_str(&["oracle", "1", "1", "1000", "--oracle-budget", "10"]).0, 3);
    }

    #[test]
    fn power_notation() {
        assert_eq!(parse_int("10^3").unwrap(), Int::from(1000));
        assert!(parse_int("10^x").is_err());
        let (code, out, _) = run_str(&["fib", "40", "10^18", "--method", "formula"]);
        assert_eq!(code, 0);
        assert!(out.trim().parse::<Int>().is_ok());
    }

    #[test]
    fn batch_preserves_order_and_reports_errors() {
        let lines = ["# header", "count3 2 3 5 10", "", "fib 12 425896", "count2 4 6 10", "lucas 2 10"];
        let mut out = Vec::new();
        let mut err = Vec::new();
        let opts = QueryOptions::default();
        let code = run_batch_lines(&lines, Method::Formula, &opts, false, &mut out, &mut err);
        let out = String::from_utf8(out).unwrap();
        let got: Vec<&str> = out.lines().collect();
        assert_eq!(code, 2);
        assert_eq!(got[0], "count3 2 3 5 10 = 4");
        assert_eq!(got[1], "fib 12 425896 = 7178");
        assert!(got[2].starts_with("count2 4 6 10 ! validation"));
        assert_eq!(got[3], "lucas 2 10 = 2");
    }

    #[test]
    fn verify_and_bench_commands() {
        let (code, out, _) = run_str(&["verify", "--family", "lucas", "--i-max", "5", "--n-max", "100"]);
        assert_eq!(code, 0);
        assert!(out.contains("0 mismatches"));
        let (code, out, _) = run_str(&["bench", "--family", "count2", "--coeffs", "3,5", "--n", "100,1000", "--methods", "formula,enumeration", "--reps", "1"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 5);
        let (code, out, _) = run_str(&["bench", "--json", "--reps", "1"]);
        assert_eq!(code, 0);
        assert!(serde_json::from_str::<serde_json::Value>(&out).unwrap().is_array());
    }
}
