//! `monotri`: exact counting of monotone triangles from the command line.
//!
//! Plain-text output by default; `--json` emits a single machine-readable
//! record whose field order is fixed, so identical invocations are
//! byte-identical when `--no-timing` is also passed.
//!
//! Exit codes: 0 on success, 1 when a verification suite fails (or an
//! internal consistency error surfaces), 2 on usage errors.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use monotri::checks::run_suite;
use monotri::counting::{alpha_eval, alpha_poly, gamma_poly, AlphaMethod};
use monotri::enumerate::BottomRow;
use monotri::number::{expect_integer, largest_prime_factor};
use monotri::{Error, Result};

/// Hard ceiling on row length for direct enumeration, unless forced.
/// Overridable through the `MONOTRI_ENUM_LIMIT` environment variable.
const DEFAULT_ENUM_LIMIT: usize = 7;

/// Ceiling on the number of rows a sweep may visit, unless forced.
const SWEEP_ROW_LIMIT: usize = 5000;

#[derive(Parser)]
#[command(
    name = "monotri",
    version,
    about = "Exact counts of monotone triangles with prescribed bottom row"
)]
struct Cli {
    /// Emit one machine-readable JSON record instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    /// Omit the timing field from the JSON record, making identical
    /// invocations byte-identical.
    #[arg(long, global = true)]
    no_timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count triangles over a bottom row, or emit the counting polynomial.
    Alpha(AlphaArgs),
    /// Trapezoid-count polynomials: emit or evaluate.
    Gamma(GammaArgs),
    /// Run a named suite of exact cross-checks.
    Verify(VerifyArgs),
    /// Evaluate the count on every increasing row inside a window.
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    /// Row-by-row recursion with symbolic interval sums.
    Recursion,
    /// Operator product applied to the tableaux product (default).
    Direct,
    /// Inverted operator product, via terminating alternating series.
    Inverse,
    /// Shifted operator product applied to the shifted tableaux product.
    Variant,
    /// Direct enumeration of the triangles (needs an increasing row).
    Brute,
}

impl From<MethodArg> for AlphaMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Recursion => AlphaMethod::Recursion,
            MethodArg::Direct => AlphaMethod::OperatorDirect,
            MethodArg::Inverse => AlphaMethod::OperatorInverse,
            MethodArg::Variant => AlphaMethod::OperatorVariant,
            MethodArg::Brute => AlphaMethod::BruteForce,
        }
    }
}

impl MethodArg {
    fn name(self) -> &'static str {
        match self {
            MethodArg::Recursion => "recursion",
            MethodArg::Direct => "direct",
            MethodArg::Inverse => "inverse",
            MethodArg::Variant => "variant",
            MethodArg::Brute => "brute",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EmitArg {
    /// The exact count (requires --row).
    Count,
    /// The counting polynomial in canonical text form.
    Poly,
}

#[derive(Args)]
struct AlphaArgs {
    /// Bottom row as comma-separated integers, e.g. "1,2,3" or "-2,0,5".
    #[arg(long, allow_hyphen_values = true)]
    row: Option<String>,

    /// Number of rows; with --emit poly, names the polynomial size.
    #[arg(long, conflicts_with = "row")]
    n: Option<usize>,

    #[arg(long, value_enum, default_value_t = MethodArg::Direct)]
    method: MethodArg,

    /// Defaults to count when --row is given, poly when only --n is.
    #[arg(long, value_enum)]
    emit: Option<EmitArg>,

    /// Bypass the enumeration size guard.
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct GammaArgs {
    /// Number of trapezoid rows.
    #[arg(long)]
    r: usize,

    /// Order of the full triangle (bottom row is 1..=n).
    #[arg(long)]
    n: usize,

    /// Top row to evaluate at, comma-separated, length n-r+1.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "emit")]
    at: Option<String>,

    /// Output choice; the polynomial is the default.
    #[arg(long, value_enum)]
    emit: Option<EmitArg>,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: golden, oracle, operators, degrees, refined, merge.
    #[arg(long)]
    suite: String,

    /// Size cap for the suite; oversized caps are clamped per check.
    #[arg(long, default_value_t = 4)]
    max_n: usize,
}

#[derive(Args)]
struct SweepArgs {
    /// Row length.
    #[arg(long)]
    n: usize,

    /// Entry window "lo..hi" (inclusive), e.g. "0..4" or "-2..6".
    #[arg(long, allow_hyphen_values = true)]
    window: String,

    /// Also print each count's largest prime factor.
    #[arg(long)]
    factor: bool,

    #[arg(long, value_enum, default_value_t = MethodArg::Direct)]
    method: MethodArg,

    /// Bypass the sweep size guard.
    #[arg(long)]
    force: bool,
}

/// The single machine-readable record emitted under `--json`.
#[derive(Serialize)]
struct OutputRecord {
    command: &'static str,
    inputs: BTreeMap<&'static str, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    method: Option<&'static str>,
    result: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<u128>,
}

struct Outcome {
    record: OutputRecord,
    /// Plain-text rendering, one trailing newline added at print time.
    text: String,
    failed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    match run(&cli.command) {
        Ok(mut outcome) => {
            if cli.json {
                outcome.record.timing_ms = if cli.no_timing {
                    None
                } else {
                    Some(started.elapsed().as_millis())
                };
                let line = serde_json::to_string(&outcome.record)
                    .expect("record serializes");
                println!("{line}");
            } else {
                println!("{}", outcome.text);
            }
            if outcome.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_usage() { 2 } else { 1 })
        }
    }
}

fn run(command: &Command) -> Result<Outcome> {
    match command {
        Command::Alpha(args) => run_alpha(args),
        Command::Gamma(args) => run_gamma(args),
        Command::Verify(args) => run_verify(args),
        Command::Sweep(args) => run_sweep(args),
    }
}

fn enum_limit() -> usize {
    std::env::var("MONOTRI_ENUM_LIMIT")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_ENUM_LIMIT)
}

fn run_alpha(args: &AlphaArgs) -> Result<Outcome> {
    let mut inputs = BTreeMap::new();
    let emit = args.emit.unwrap_or(if args.row.is_some() {
        EmitArg::Count
    } else {
        EmitArg::Poly
    });
    let method: AlphaMethod = args.method.into();
    let result_text;
    match (&args.row, args.n) {
        (Some(row_text), None) => {
            let row: BottomRow = row_text.parse()?;
            inputs.insert("row", row.to_string());
            match emit {
                EmitArg::Count => {
                    let limit = enum_limit();
                    if method == AlphaMethod::BruteForce
                        && row.len() > limit
                        && !args.force
                    {
                        return Err(Error::usage(format!(
                            "row has {} entries and the enumeration guard is {limit}; \
                             pass --force or raise MONOTRI_ENUM_LIMIT",
                            row.len()
                        )));
                    }
                    result_text = alpha_eval(&row, method)?.to_string();
                }
                EmitArg::Poly => {
                    result_text = alpha_poly(row.len(), method)?.to_string();
                }
            }
        }
        (None, Some(n)) => {
            inputs.insert("n", n.to_string());
            if emit == EmitArg::Count {
                return Err(Error::usage(
                    "--emit count needs --row; --n alone names a polynomial",
                ));
            }
            result_text = alpha_poly(n, method)?.to_string();
        }
        (None, None) => {
            return Err(Error::usage("pass --row to count or --n for the polynomial"))
        }
        (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
    }
    Ok(Outcome {
        record: OutputRecord {
            command: "alpha",
            inputs,
            method: Some(args.method.name()),
            result: serde_json::Value::String(result_text.clone()),
            timing_ms: None,
        },
        text: result_text,
        failed: false,
    })
}

fn run_gamma(args: &GammaArgs) -> Result<Outcome> {
    let mut inputs = BTreeMap::new();
    inputs.insert("r", args.r.to_string());
    inputs.insert("n", args.n.to_string());
    let g = gamma_poly(args.r, args.n)?;
    let result_text = match &args.at {
        Some(at_text) => {
            let top: BottomRow = at_text.parse()?;
            inputs.insert("at", top.to_string());
            let expected = args.n - args.r + 1;
            if top.len() != expected {
                return Err(Error::usage(format!(
                    "--at needs {expected} entries for r={} n={}, got {}",
                    args.r,
                    args.n,
                    top.len()
                )));
            }
            let value = g.eval_i64(top.entries());
            expect_integer(&value, "trapezoid polynomial value")?.to_string()
        }
        None => g.to_string(),
    };
    Ok(Outcome {
        record: OutputRecord {
            command: "gamma",
            inputs,
            method: None,
            result: serde_json::Value::String(result_text.clone()),
            timing_ms: None,
        },
        text: result_text,
        failed: false,
    })
}

fn run_verify(args: &VerifyArgs) -> Result<Outcome> {
    let checks = run_suite(&args.suite, args.max_n)?;
    let mut inputs = BTreeMap::new();
    inputs.insert("suite", args.suite.clone());
    inputs.insert("max_n", args.max_n.to_string());

    let mut lines = Vec::new();
    for check in &checks {
        let status = if check.pass { "PASS" } else { "FAIL" };
        lines.push(format!("{status} {} ({})", check.name, check.detail));
    }
    let failed = checks.iter().filter(|c| !c.pass).count();
    lines.push(format!(
        "{} of {} checks passed",
        checks.len() - failed,
        checks.len()
    ));
    if let Some(first) = checks.iter().find(|c| !c.pass) {
        lines.push(format!("first failure: {}\n{}", first.name, first.detail));
    }

    let result = serde_json::Value::Array(
        checks
            .iter()
            .map(|c| {
                serde_json::json!({
                    "name": c.name,
                    "pass": c.pass,
                    "detail": c.detail,
                })
            })
            .collect(),
    );
    Ok(Outcome {
        record: OutputRecord {
            command: "verify",
            inputs,
            method: None,
            result,
            timing_ms: None,
        },
        text: lines.join("\n"),
        failed: failed > 0,
    })
}

fn parse_window(text: &str) -> Result<(i64, i64)> {
    let Some((lo, hi)) = text.split_once("..") else {
        return Err(Error::parse(text, "expected a window like \"lo..hi\""));
    };
    let lo: i64 = lo
        .trim()
        .parse()
        .map_err(|_| Error::parse(lo, "bad window start"))?;
    let hi: i64 = hi
        .trim()
        .parse()
        .map_err(|_| Error::parse(hi, "bad window end"))?;
    if lo > hi {
        return Err(Error::usage(format!("empty window {lo}..{hi}")));
    }
    Ok((lo, hi))
}

fn increasing_rows(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn recurse(
        len: usize,
        lo: i64,
        hi: i64,
        cur: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let start = cur.last().map_or(lo, |&v| v + 1);
        for v in start..=hi {
            cur.push(v);
            recurse(len, lo, hi, cur, out);
            cur.pop();
        }
    }
    recurse(len, lo, hi, &mut cur, &mut out);
    out
}

fn binomial_usize(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

fn run_sweep(args: &SweepArgs) -> Result<Outcome> {
    if args.n == 0 {
        return Err(Error::usage("row length must be at least 1"));
    }
    let (lo, hi) = parse_window(&args.window)?;
    let width = (hi - lo + 1) as usize;
    let row_count = binomial_usize(width, args.n);
    if row_count > SWEEP_ROW_LIMIT && !args.force {
        return Err(Error::usage(format!(
            "window {lo}..{hi} yields {row_count} rows of length {}, \
             over the sweep guard of {SWEEP_ROW_LIMIT}; narrow the window \
             or pass --force",
            args.n
        )));
    }
    let method: AlphaMethod = args.method.into();
    if method == AlphaMethod::BruteForce && args.n > enum_limit() && !args.force
    {
        return Err(Error::usage(format!(
            "brute-force sweep at n={} exceeds the enumeration guard; \
             pass --force or raise MONOTRI_ENUM_LIMIT",
            args.n
        )));
    }

    let mut inputs = BTreeMap::new();
    inputs.insert("n", args.n.to_string());
    inputs.insert("window", format!("{lo}..{hi}"));
    inputs.insert("factor", args.factor.to_string());

    let mut lines = Vec::new();
    let mut records = Vec::new();
    for entries in increasing_rows(args.n, lo, hi) {
        let row = BottomRow::new(entries);
        let value = alpha_eval(&row, method)?;
        let mut line = format!("{row}\t{value}");
        let mut record = serde_json::json!({
            "row": row.to_string(),
            "value": value.to_string(),
        });
        if args.factor {
            let factor = largest_prime_factor(&value)
                .map(|f| f.to_string())
                .unwrap_or_else(|| "-".to_string());
            line.push('\t');
            line.push_str(&factor);
            record["largest_prime_factor"] =
                serde_json::Value::String(factor);
        }
        lines.push(line);
        records.push(record);
    }
    Ok(Outcome {
        record: OutputRecord {
            command: "sweep",
            inputs,
            method: Some(args.method.name()),
            result: serde_json::Value::Array(records),
            timing_ms: None,
        },
        text: lines.join("\n"),
        failed: false,
    })
}
