//! `hecketrace`: exact trace polynomials, R-polynomials, and point-count
//! predictions for Iwahori-Hecke algebras of Weyl groups.
//!
//! Every subcommand is a one-shot computation over exact integer
//! arithmetic: no floats, no randomness outside the explicitly seeded
//! verification subsampler, and byte-identical stdout across repeated
//! invocations. Timing goes to stderr so pipelines can capture clean
//! output.
//!
//! Exit codes: `0` success, `1` a verified mathematical identity failed
//! (this indicates a bug, not bad input), `2` usage or input error,
//! `3` an enumeration or cache budget was exceeded.

use std::io::Write as _;
use std::time::Instant;

use clap::{ArgAction, Parser, Subcommand};
use num_bigint::BigInt;

use hecketrace_core::cartan::{parse_word, word_string, WeylGroup, DEFAULT_MAX_ORDER};
use hecketrace_core::chars::{char_table_json, char_value, hecke_character_table};
use hecketrace_core::counts::count_report;
use hecketrace_core::hecke::parse_hecke_expr;
use hecketrace_core::trace::{tau, RTable};
use hecketrace_core::verify::{run_suite, Suite, SuiteOptions, SuiteReport};
use hecketrace_core::Error;

/// Environment variable overriding the default group-order budget.
const MAX_ORDER_ENV: &str = "HECKETRACE_MAX_ORDER";

#[derive(Parser)]
#[command(
    name = "hecketrace",
    version,
    about = "Exact trace polynomials and point counts for Iwahori-Hecke algebras",
    arg_required_else_help = true
)]
struct Cli {
    /// Emit machine-readable JSON (sorted keys, no whitespace).
    #[arg(long, global = true, conflicts_with = "csv", action = ArgAction::SetTrue)]
    json: bool,

    /// Emit CSV (tabular subcommands only).
    #[arg(long, global = true, action = ArgAction::SetTrue)]
    csv: bool,

    /// Group-order budget; overrides the HECKETRACE_MAX_ORDER environment variable.
    #[arg(long, global = true, value_name = "N")]
    max_order: Option<u128>,

    /// Seed for verification subsampling (deterministic per suite and type).
    #[arg(long, global = true, default_value_t = 0, value_name = "SEED")]
    seed: u64,

    /// Suppress timing and warnings on stderr.
    #[arg(long, global = true, action = ArgAction::SetTrue)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Summarize a Weyl group: rank, order, degrees, Poincare polynomial.
    Group {
        /// Cartan type, e.g. A2, B3, G2, A1xA1.
        type_spec: String,
    },
    /// List conjugacy classes with minimal lengths and ellipticity.
    Classes {
        /// Cartan type.
        type_spec: String,
    },
    /// Trace polynomial tau(w, q) of a word in the generators.
    Trace {
        /// Cartan type.
        type_spec: String,
        /// Word in the generators ("121", "1,2,1"; "" or "e" is the identity).
        word: String,
        /// Print the normalized trace in v (tau-tilde) instead of tau(w, q).
        #[arg(long, conflicts_with = "delta")]
        tilde: bool,
        /// Print the coefficient vector of the trace in powers of delta = v - 1/v.
        #[arg(long)]
        delta: bool,
    },
    /// R-polynomial R_{z,w}(q).
    Rpoly {
        /// Cartan type.
        type_spec: String,
        /// Word for the lower element z.
        z: String,
        /// Word for the upper element w.
        w: String,
    },
    /// Evaluate a Hecke-algebra expression in the T basis.
    Eval {
        /// Cartan type.
        type_spec: String,
        /// Expression, e.g. "T[1]*T[2] - q*T[e]" (inverses have their own subcommand).
        expr: String,
    },
    /// Inverse of T_{s_1}...T_{s_k} in the T basis.
    Invert {
        /// Cartan type.
        type_spec: String,
        /// Word in the generators (need not be reduced).
        word: String,
    },
    /// Point-count predictions for a word, numeric or symbolic in q.
    Counts {
        /// Cartan type.
        type_spec: String,
        /// Word in the generators.
        word: String,
        /// Evaluate at this prime power (warns on stderr otherwise).
        #[arg(long, conflicts_with = "symbolic", value_name = "N")]
        q: Option<u64>,
        /// Leave q symbolic (the default when --q is absent).
        #[arg(long)]
        symbolic: bool,
    },
    /// Character table of the Hecke algebra (rank <= 2 types).
    Chars {
        /// Cartan type of rank at most 2.
        type_spec: String,
        /// Include character values on every group element, not just class representatives.
        #[arg(long)]
        full: bool,
    },
    /// Run named verification suites and report pass/fail/skip per check.
    Verify {
        /// Suite name or "all": positivity, symmetry, inversion, elliptic-monic,
        /// divisibility, identity-2-6a, chars, counts-consistency, oracle-tau.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Comma-separated Cartan types to sweep.
        #[arg(long, default_value = "A1,A2,B2", value_name = "TYPES")]
        types: String,
        /// Cap on exhaustive element-pair sweeps per type (deterministic subsample).
        #[arg(long, value_name = "N")]
        max_pairs: Option<usize>,
    },
}

/// Output format selected by the global flags.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Human,
    Json,
    Csv,
}

fn main() {
    let cli = Cli::parse();
    let started = Instant::now();
    let quiet = cli.quiet;
    let code = match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code_for(&err)
        }
    };
    if !quiet {
        eprintln!("wall time: {:.1?}", started.elapsed());
    }
    // Flush explicitly so a broken pipe surfaces as an error code, not a panic.
    let _ = std::io::stdout().flush();
    std::process::exit(code);
}

/// Map library errors onto the documented exit codes.
fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::BudgetExceeded { .. }
        | Error::OracleBudgetExceeded { .. }
        | Error::CacheLimitExceeded { .. } => 3,
        Error::TheoremViolation { .. } => 1,
        _ => 2,
    }
}

fn run(cli: Cli) -> Result<i32, Error> {
    let format = if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        Format::Human
    };
    let max_order = resolve_max_order(cli.max_order)?;

    match cli.command {
        Command::Group { type_spec } => cmd_group(&type_spec, max_order, format),
        Command::Classes { type_spec } => cmd_classes(&type_spec, max_order, format),
        Command::Trace {
            type_spec,
            word,
            tilde,
            delta,
        } => cmd_trace(&type_spec, &word, tilde, delta, max_order, format),
        Command::Rpoly { type_spec, z, w } => cmd_rpoly(&type_spec, &z, &w, max_order, format),
        Command::Eval { type_spec, expr } => cmd_eval(&type_spec, &expr, max_order, format),
        Command::Invert { type_spec, word } => cmd_invert(&type_spec, &word, max_order, format),
        Command::Counts {
            type_spec,
            word,
            q,
            symbolic: _,
        } => cmd_counts(&type_spec, &word, q, max_order, format, cli.quiet),
        Command::Chars { type_spec, full } => cmd_chars(&type_spec, full, max_order, format),
        Command::Verify {
            suite,
            types,
            max_pairs,
        } => cmd_verify(&suite, &types, max_pairs, max_order, cli.seed, format),
    }
}

/// Budget precedence: --max-order flag, then the environment variable, then the default.
fn resolve_max_order(flag: Option<u128>) -> Result<u128, Error> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match std::env::var(MAX_ORDER_ENV) {
        Ok(text) => text.trim().parse::<u128>().map_err(|_| Error::Usage {
            message: format!("{MAX_ORDER_ENV}={text:?} is not an unsigned integer"),
        }),
        Err(_) => Ok(DEFAULT_MAX_ORDER),
    }
}

/// Serialize with sorted keys at every level, compactly.
fn print_json<T: serde::Serialize>(value: &T) -> Result<(), Error> {
    let value = serde_json::to_value(value).expect("JSON serialization cannot fail");
    println!("{value}");
    Ok(())
}

fn csv_unsupported(subcommand: &str) -> Error {
    Error::Usage {
        message: format!("CSV output is not defined for `{subcommand}`; use --json"),
    }
}

fn cmd_group(type_spec: &str, max_order: u128, format: Format) -> Result<i32, Error> {
    let group = WeylGroup::new(type_spec, max_order)?;
    match format {
        Format::Json => {
            let value = serde_json::json!({
                "type": group.type_spec(),
                "rank": group.rank(),
                "order": group.order(),
                "nu": group.nu(),
                "degrees": group.degrees(),
                "poincare": group.poincare_polynomial(),
            });
            print_json(&value)?;
        }
        Format::Csv => return Err(csv_unsupported("group")),
        Format::Human => {
            println!("type {}", group.type_spec());
            println!("rank {}", group.rank());
            println!("order {}", group.order());
            println!("nu {}", group.nu());
            let degrees: Vec<String> = group.degrees().iter().map(|d| d.to_string()).collect();
            println!("degrees [{}]", degrees.join(", "));
            println!("W(q) = {}", group.poincare_polynomial());
        }
    }
    Ok(0)
}

fn cmd_classes(type_spec: &str, max_order: u128, format: Format) -> Result<i32, Error> {
    let group = WeylGroup::new(type_spec, max_order)?;
    let classes = group.conjugacy_classes();
    let rows: Vec<serde_json::Value> = classes
        .iter()
        .map(|class| {
            let minimal: Vec<String> = class
                .minimal
                .iter()
                .map(|&id| word_string(&group.reduced_word(id)))
                .collect();
            serde_json::json!({
                "representative": word_string(&group.reduced_word(class.representative)),
                "size": class.members.len(),
                "min_length": class.min_length,
                "is_elliptic": class.is_elliptic,
                "minimal": minimal,
            })
        })
        .collect();
    match format {
        Format::Json => print_json(&rows)?,
        Format::Csv => {
            println!("type,representative,size,min_length,is_elliptic,minimal_count");
            for (class, row) in classes.iter().zip(&rows) {
                println!(
                    "{},{},{},{},{},{}",
                    group.type_spec(),
                    row["representative"].as_str().unwrap(),
                    class.members.len(),
                    class.min_length,
                    class.is_elliptic,
                    class.minimal.len()
                );
            }
        }
        Format::Human => {
            println!(
                "{} conjugacy classes of {}:",
                classes.len(),
                group.type_spec()
            );
            for row in &rows {
                let minimal: Vec<&str> = row["minimal"]
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|v| v.as_str().unwrap())
                    .collect();
                println!(
                    "rep {}: size {}, min length {}, elliptic {}, minimal [{}]",
                    row["representative"].as_str().unwrap(),
                    row["size"],
                    row["min_length"],
                    row["is_elliptic"],
                    minimal.join(", ")
                );
            }
        }
    }
    Ok(0)
}

fn cmd_trace(
    type_spec: &str,
    word: &str,
    tilde: bool,
    delta: bool,
    max_order: u128,
    format: Format,
) -> Result<i32, Error> {
    let group = WeylGroup::new(type_spec, max_order)?;
    let generators = parse_word(word, group.rank())?;
    let w = group.word_id(&generators)?;
    let trace = tau(&group, w)?;
    match format {
        Format::Json => print_json(&trace)?,
        Format::Csv => return Err(csv_unsupported("trace")),
        Format::Human => {
            if tilde {
                println!("{}", trace.tau_tilde);
            } else if delta {
                let coeffs: Vec<String> =
                    trace.delta_coeffs.iter().map(|c| c.to_string()).collect();
                println!("[{}]", coeffs.join(", "));
            } else {
                println!("{}", trace.tau_q);
            }
        }
    }
    Ok(0)
}

fn cmd_rpoly(
    type_spec: &str,
    z: &str,
    w: &str,
    max_order: u128,
    format: Format,
) -> Result<i32, Error> {
    let group = WeylGroup::new(type_spec, max_order)?;
    let z_id = group.word_id(&parse_word(z, group.rank())?)?;
    let w_id = group.word_id(&parse_word(w, group.rank())?)?;
    let mut table = RTable::new(&group);
    let rpoly = table.r_poly(z_id, w_id)?;
    match format {
        Format::Json => print_json(&rpoly)?,
        Format::Csv => return Err(csv_unsupported("rpoly")),
        Format::Human => println!("{}", rpoly.r_q),
    }
    Ok(0)
}

fn cmd_eval(type_spec: &str, expr: &str, max_order: u128, format: Format) -> Result<i32, Error> {
    let group = WeylGroup::new(type_spec, max_order)?;
    let element = parse_hecke_expr(&group, expr)?;
    match format {
        Format::Json => print_json(&element)?,
        Format::Csv => return Err(csv_unsupported("eval")),
        Format::Human => println!("{element}"),
    }
    Ok(0)
}

fn cmd_invert(type_spec: &str, word: &str, max_order: u128, format: Format) -> Result<i32, Error> {
    let group = WeylGroup::new(type_spec, max_order)?;
    let generators = parse_word(word, group.rank())?;
    let element = hecketrace_core::hecke::HeckeElement::invert_word(&group, &generators)?;
    match format {
        Format::Json => print_json(&element)?,
        Format::Csv => return Err(csv_unsupported("invert")),
        Format::Human => println!("{element}"),
    }
    Ok(0)
}

fn cmd_counts(
    type_spec: &str,
    word: &str,
    q: Option<u64>,
    max_order: u128,
    format: Format,
    quiet: bool,
) -> Result<i32, Error> {
    let group = WeylGroup::new(type_spec, max_order)?;
    let generators = parse_word(word, group.rank())?;
    let w = group.word_id(&generators)?;
    let q_big = q.map(BigInt::from);
    if let Some(q) = q {
        if !quiet && !is_prime_power(q) {
            eprintln!(
                "warning: q = {q} is not a prime power; the report is a polynomial \
                 evaluation, not a count of rational points"
            );
        }
    }
    let mut table = RTable::new(&group);
    let report = count_report(&group, &mut table, w, q_big.as_ref())?;
    match format {
        Format::Json => print_json(&report)?,
        Format::Csv => print!("{}", report.to_csv()),
        Format::Human => {
            match &report.q {
                Some(q) => println!("counts for {} w={} at q={}", report.type_spec, word_string(&report.word), q),
                None => println!("counts for {} w={} (symbolic q)", report.type_spec, word_string(&report.word)),
            }
            for (id, entry) in &report.entries {
                let marker = if entry.conditional { " (conditional)" } else { "" };
                println!("{id} = {}  [{}]{marker}", entry.value, entry.anchor);
            }
            for (id, reason) in &report.omitted {
                println!("{id}: omitted ({reason})");
            }
        }
    }
    Ok(0)
}

/// True when n = p^k for a prime p and k >= 1.
fn is_prime_power(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut m = n;
            while m % p == 0 {
                m /= p;
            }
            return m == 1;
        }
        p += 1;
    }
    true // n itself is prime
}

fn cmd_chars(type_spec: &str, full: bool, max_order: u128, format: Format) -> Result<i32, Error> {
    let group = WeylGroup::new(type_spec, max_order)?;
    let table = hecke_character_table(&group)?;
    match format {
        Format::Json => {
            let value = char_table_json(&group, &table, full)?;
            print_json(&value)?;
        }
        Format::Csv => return Err(csv_unsupported("chars")),
        Format::Human => {
            println!("{} irreducible characters of the {} Hecke algebra:", table.len(), group.type_spec());
            let reps: Vec<u32> = if full {
                group.ids().collect()
            } else {
                group.conjugacy_classes().iter().map(|c| c.representative).collect()
            };
            for irrep in &table {
                let mut values = Vec::new();
                for &w in &reps {
                    let value = char_value(&group, irrep, w)?;
                    values.push(format!("{} -> {}", word_string(&group.reduced_word(w)), value));
                }
                println!("{} (dim {}): {}", irrep.label, irrep.dim, values.join(", "));
            }
        }
    }
    Ok(0)
}

fn cmd_verify(
    suite: &str,
    types: &str,
    max_pairs: Option<usize>,
    max_order: u128,
    seed: u64,
    format: Format,
) -> Result<i32, Error> {
    let suites = Suite::parse(suite)?;
    let type_list: Vec<String> = types
        .split(',')
        .map(|t| t.trim().to_string())
        .filter(|t| !t.is_empty())
        .collect();
    if type_list.is_empty() {
        return Err(Error::Usage {
            message: format!("--types {types:?}: expected a comma-separated list of Cartan types"),
        });
    }
    let options = SuiteOptions {
        types: type_list,
        max_order,
        max_pairs,
        seed,
        ..SuiteOptions::default()
    };
    let mut reports: Vec<SuiteReport> = Vec::new();
    for suite in suites {
        reports.push(run_suite(suite, &options)?);
    }
    let any_failed = reports.iter().any(|r| r.failed());
    match format {
        Format::Json => print_json(&reports)?,
        Format::Csv => {
            println!("suite,check,type,w,z,status,witness");
            for report in &reports {
                for record in &report.records {
                    println!(
                        "{},{},{},{},{},{},{}",
                        report.suite,
                        csv_field(&record.check),
                        record.type_spec,
                        csv_field(record.w.as_deref().unwrap_or("")),
                        csv_field(record.z.as_deref().unwrap_or("")),
                        record.status,
                        csv_field(&record.witness),
                    );
                }
            }
        }
        Format::Human => {
            let mut total = (0usize, 0usize, 0usize);
            for report in &reports {
                println!(
                    "suite {}: {} pass, {} fail, {} skip",
                    report.suite, report.summary.pass, report.summary.fail, report.summary.skip
                );
                for record in &report.records {
                    if record.status != hecketrace_core::verify::Status::Pass {
                        println!(
                            "  {} {} [{}] w={} z={}: {}",
                            record.status,
                            record.check,
                            record.type_spec,
                            record.w.as_deref().unwrap_or("-"),
                            record.z.as_deref().unwrap_or("-"),
                            record.witness
                        );
                    }
                }
                total.0 += report.summary.pass;
                total.1 += report.summary.fail;
                total.2 += report.summary.skip;
            }
            let verdict = if total.1 == 0 { "all pass" } else { "FAILURES" };
            println!(
                "total: {} checks, {} pass, {} fail, {} skip ({verdict})",
                total.0 + total.1 + total.2,
                total.0,
                total.1,
                total.2
            );
        }
    }
    Ok(if any_failed { 1 } else { 0 })
}

/// Quote a CSV field when it contains a comma, quote, or newline.
fn csv_field(text: &str) -> String {
    if text.contains(',') || text.contains('"') || text.contains('\n') {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_string()
    }
}
