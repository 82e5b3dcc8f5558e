//! The `cyclenum` command line.
//!
//! Exit status is 0 on success, 1 for bad input (message on stderr) and 2
//! when a self-check finds a disagreement.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::bijection::{forward_f, inverse_f};
use crate::classical::{entringer_triangle, euler_numbers};
use crate::count::{count_descent, count_p, count_q, count_r, count_r_alpha, plus_rows};
use crate::density::{densities, is_partition, report_for, DensityRow};
use crate::dump::{pretty_tetrahedron, pretty_triangle, ArrayDump};
use crate::engine::{evolve_q, evolve_r};
use crate::error::Error;
use crate::oracle::{self, classify_all_up_to};
use crate::order::CyclicOrder;
use crate::perm::Permutation;
use crate::sign::{Sign, SignWord};
use crate::verify::{check_bijection, check_entringer, verify_all, VerifyReport};

#[derive(Debug, Parser)]
#[command(
    name = "cyclenum",
    version,
    about = "Exact counts of total cyclic orders with prescribed triple orientations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Size of one class.
    Count(CountArgs),
    /// Sequences for the all-plus words and the classical triangle.
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// The triangle of refined counts of Q_w^eta.
    Triangle {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(allow_hyphen_values = true)]
        eta: String,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// The tetrahedron of refined counts of R_w^(alpha), sliced by the last exponent.
    Tetra {
        #[arg(allow_hyphen_values = true)]
        word: String,
        alpha: usize,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Exact densities of the six chain classes inside P_{+^n}.
    Densities {
        #[arg(long, default_value_t = 20)]
        max_n: usize,
        #[arg(long, default_value_t = 15)]
        digits: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Densities at one n against the conjectured limits.
    Conjecture {
        #[arg(long, default_value_t = 50)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// The bijection between cyclic orders on [n+1] and permutations of [n].
    Bijection {
        #[command(subcommand)]
        action: BijectionAction,
    },
    /// Brute-force class sizes for every word of length n-2.
    Oracle {
        #[arg(long)]
        n: usize,
        /// Raise the enumeration bound (at most 12).
        #[arg(long)]
        max_oracle_n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Cross-check every recurrence and the bijection against brute force.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_word_len: usize,
    },
}

#[derive(Debug, Args)]
struct CountArgs {
    #[arg(value_enum)]
    class: CountClass,
    #[arg(allow_hyphen_values = true)]
    word: String,
    /// eta for qw; eta1 eta2 for rw.
    #[arg(allow_hyphen_values = true)]
    signs: Vec<String>,
    /// Count a single chain class of R_w instead of a sign class.
    #[arg(long, conflicts_with = "signs")]
    alpha: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CountClass {
    Pw,
    Qw,
    Rw,
    Descent,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableKind {
    Euler,
    Entringer,
    Pw,
    Qplus,
    Rpp,
}

#[derive(Debug, Subcommand)]
enum BijectionAction {
    /// Cyclic order (cycle starting at 1, e.g. 1,5,3,4,2) to permutation.
    Map { order: String },
    /// Permutation in one-line form (e.g. 4312 or 4,3,1,2) to cyclic order.
    Unmap { perm: String },
    /// Exhaustive round trip and pattern transport for orders on up to max-n+1 elements.
    Verify {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
    },
}

enum Failure {
    User(String),
    Invariant(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::User(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::User(format!("write failed: {e}"))
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Runs one command line; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::User(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Invariant(msg)) => {
            let _ = writeln!(err, "invariant violated: {msg}");
            2
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Count(args) => count(args, out),
        Command::Table {
            kind,
            max_n,
            format,
        } => table(kind, max_n, format, out),
        Command::Triangle { word, eta, format } => triangle(&word, &eta, format, out),
        Command::Tetra {
            word,
            alpha,
            format,
        } => tetra(&word, alpha, format, out),
        Command::Densities {
            max_n,
            digits,
            format,
        } => density_table(max_n, digits, format, out),
        Command::Conjecture { n, format } => conjecture(n, format, out),
        Command::Bijection { action } => bijection(action, out),
        Command::Oracle {
            n,
            max_oracle_n,
            format,
        } => oracle_table(n, max_oracle_n, format, out),
        Command::Verify { max_word_len } => {
            let report = verify_all(max_word_len)?;
            finish_report(&report, out)
        }
    }
}

fn word(s: &str) -> std::result::Result<SignWord, Failure> {
    if s.is_empty() {
        return Err(Failure::User("empty word".into()));
    }
    Ok(s.parse()?)
}

fn sign(s: &str) -> std::result::Result<Sign, Failure> {
    let mut chars = s.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Ok(Sign::from_char(c)?),
        _ => Err(Failure::User(format!("expected a single sign, got {s:?}"))),
    }
}

fn expect_signs(signs: &[String], n: usize, what: &str) -> std::result::Result<Vec<Sign>, Failure> {
    if signs.len() != n {
        return Err(Failure::User(format!(
            "{what} takes {n} sign argument(s), got {}",
            signs.len()
        )));
    }
    signs.iter().map(|s| sign(s)).collect()
}

fn count(args: CountArgs, out: &mut dyn Write) -> Outcome {
    let w = word(&args.word)?;
    let value = match args.class {
        CountClass::Pw => {
            expect_signs(&args.signs, 0, "pw")?;
            count_p(&w)?
        }
        CountClass::Descent => {
            expect_signs(&args.signs, 0, "descent")?;
            count_descent(&w)
        }
        CountClass::Qw => {
            let s = expect_signs(&args.signs, 1, "qw")?;
            count_q(&w, s[0])?
        }
        CountClass::Rw => match args.alpha {
            Some(alpha) => count_r_alpha(&w, alpha)?,
            None => {
                let s = expect_signs(&args.signs, 2, "rw")?;
                count_r(&w, s[0], s[1])?
            }
        },
    };
    writeln!(out, "{value}")?;
    Ok(())
}

fn write_json(value: &Value, out: &mut dyn Write) -> Outcome {
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(value).expect("plain JSON values")
    )?;
    Ok(())
}

fn sequence(
    name: &str,
    values: &[(usize, BigUint)],
    format: Format,
    out: &mut dyn Write,
) -> Outcome {
    match format {
        Format::Json => write_json(
            &Value::Array(
                values
                    .iter()
                    .map(|(n, v)| json!({"n": n, name: v.to_string()}))
                    .collect(),
            ),
            out,
        ),
        Format::Csv | Format::Pretty => {
            let sep = if format == Format::Csv { "," } else { "\t" };
            writeln!(out, "n{sep}{name}")?;
            for (n, v) in values {
                writeln!(out, "{n}{sep}{v}")?;
            }
            Ok(())
        }
    }
}

fn table(kind: TableKind, max_n: usize, format: Format, out: &mut dyn Write) -> Outcome {
    if max_n == 0 {
        return Err(Failure::User("--max-n must be at least 1".into()));
    }
    match kind {
        TableKind::Euler => {
            let values: Vec<_> = euler_numbers(max_n)
                .into_iter()
                .enumerate()
                .map(|(t, v)| (t + 1, v))
                .collect();
            sequence("euler", &values, format, out)
        }
        TableKind::Entringer => {
            let rows = entringer_triangle(max_n);
            match format {
                Format::Json => write_json(
                    &Value::Array(
                        rows.iter()
                            .enumerate()
                            .map(|(t, r)| {
                                let vals: Vec<String> =
                                    r.values.iter().map(BigUint::to_string).collect();
                                json!({"n": t + 1, "values": vals})
                            })
                            .collect(),
                    ),
                    out,
                ),
                Format::Csv => {
                    writeln!(out, "n,i,entringer")?;
                    for (t, r) in rows.iter().enumerate() {
                        for (i, v) in r.values.iter().enumerate() {
                            writeln!(out, "{},{},{v}", t + 1, i + 1)?;
                        }
                    }
                    Ok(())
                }
                Format::Pretty => {
                    for r in &rows {
                        let line: Vec<String> = r.values.iter().map(BigUint::to_string).collect();
                        writeln!(out, "{}", line.join(" "))?;
                    }
                    Ok(())
                }
            }
        }
        TableKind::Pw | TableKind::Qplus | TableKind::Rpp => {
            let rows = plus_rows(max_n);
            let (name, pick): (&str, fn(&crate::count::PlusRow) -> BigUint) = match kind {
                TableKind::Pw => ("p", |r| r.p.clone()),
                TableKind::Qplus => ("q_plus", |r| r.q_plus.clone()),
                _ => ("r_plus_plus", |r| r.r_plus_plus.clone()),
            };
            let values: Vec<_> = rows.iter().map(|r| (r.n, pick(r))).collect();
            sequence(name, &values, format, out)
        }
    }
}

fn triangle(w: &str, eta: &str, format: Format, out: &mut dyn Write) -> Outcome {
    let w = word(w)?;
    let eta = sign(eta)?;
    let (plus, minus) = evolve_q(&w)?;
    let poly = if eta.is_plus() { plus } else { minus };
    match format {
        Format::Json => writeln!(out, "{}", ArrayDump::triangle(&w, eta, &poly).to_json())?,
        Format::Pretty => write!(out, "{}", pretty_triangle(&poly))?,
        Format::Csv => {
            return Err(Failure::User(
                "triangle supports --format pretty or json".into(),
            ))
        }
    }
    Ok(())
}

fn tetra(w: &str, alpha: usize, format: Format, out: &mut dyn Write) -> Outcome {
    let w = word(w)?;
    if !(1..=6).contains(&alpha) {
        return Err(Error::InvalidAlpha(alpha).into());
    }
    let poly = &evolve_r(&w)?[alpha - 1];
    match format {
        Format::Json => writeln!(out, "{}", ArrayDump::tetrahedron(&w, alpha, poly).to_json())?,
        Format::Pretty => write!(out, "{}", pretty_tetrahedron(poly))?,
        Format::Csv => {
            return Err(Failure::User(
                "tetra supports --format pretty or json".into(),
            ))
        }
    }
    Ok(())
}

fn rational(r: &num_rational::BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn density_json(row: &DensityRow) -> Value {
    let exact: Vec<String> = row.p.iter().map(rational).collect();
    json!({
        "n": row.n,
        "p": exact,
        "decimals": row.decimals.to_vec(),
        "q_plus": rational(&row.q_plus),
        "r_plus_plus": rational(&row.r_plus_plus),
    })
}

fn density_table(max_n: usize, digits: usize, format: Format, out: &mut dyn Write) -> Outcome {
    if max_n < 2 {
        return Err(Failure::User("--max-n must be at least 2".into()));
    }
    let rows = densities(max_n, digits);
    if let Some(bad) = rows.iter().find(|r| !is_partition(r)) {
        return Err(Failure::Invariant(format!(
            "densities at n = {} do not sum to 1",
            bad.n
        )));
    }
    match format {
        Format::Json => write_json(&Value::Array(rows.iter().map(density_json).collect()), out),
        Format::Csv | Format::Pretty => {
            let sep = if format == Format::Csv { "," } else { "  " };
            let header = [
                "n",
                "p1",
                "p2",
                "p3",
                "p4",
                "p5",
                "p6",
                "q_plus",
                "r_plus_plus",
            ];
            writeln!(out, "{}", header.join(sep))?;
            for r in &rows {
                let q = crate::density::to_decimal(&r.q_plus, digits);
                let rpp = crate::density::to_decimal(&r.r_plus_plus, digits);
                writeln!(
                    out,
                    "{}{sep}{}{sep}{q}{sep}{rpp}",
                    r.n,
                    r.decimals.join(sep)
                )?;
            }
            Ok(())
        }
    }
}

fn conjecture(n: usize, format: Format, out: &mut dyn Write) -> Outcome {
    if n < 2 {
        return Err(Failure::User("--n must be at least 2".into()));
    }
    let row = densities(n, 15).pop().expect("n >= 2 gives a row");
    let report = report_for(&row);
    match format {
        Format::Json => write_json(&serde_json::to_value(&report).expect("serializable"), out),
        Format::Pretty => {
            write!(out, "{report}")?;
            writeln!(out, "max deviation {:.3e}", report.max_deviation())?;
            Ok(())
        }
        Format::Csv => {
            writeln!(out, "label,value,limit_expr,limit,deviation")?;
            for e in &report.entries {
                writeln!(
                    out,
                    "{},{},{},{:.15},{:.6e}",
                    e.label, e.value, e.limit_expr, e.limit, e.deviation
                )?;
            }
            Ok(())
        }
    }
}

fn bijection(action: BijectionAction, out: &mut dyn Write) -> Outcome {
    match action {
        BijectionAction::Map { order } => {
            let z: CyclicOrder = order.parse()?;
            writeln!(out, "{}", forward_f(&z))?;
            Ok(())
        }
        BijectionAction::Unmap { perm } => {
            let sigma: Permutation = perm.parse()?;
            writeln!(out, "{}", inverse_f(&sigma)?)?;
            Ok(())
        }
        BijectionAction::Verify { max_n } => {
            if max_n + 1 > oracle::max_n() {
                return Err(Error::OracleRange {
                    n: max_n + 1,
                    max: oracle::max_n(),
                }
                .into());
            }
            let mut report = VerifyReport::default();
            check_bijection(&mut report, max_n)?;
            check_entringer(&mut report, max_n + 1)?;
            finish_report(&report, out)
        }
    }
}

fn finish_report(report: &VerifyReport, out: &mut dyn Write) -> Outcome {
    writeln!(out, "{report}")?;
    if report.passed() {
        Ok(())
    } else {
        let failed: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.as_str())
            .collect();
        Err(Failure::Invariant(failed.join(", ")))
    }
}

fn oracle_table(n: usize, bound: Option<usize>, format: Format, out: &mut dyn Write) -> Outcome {
    let counts = classify_all_up_to(n, bound.unwrap_or_else(oracle::max_n))?;
    let header = [
        "word", "p", "q_plus", "q_minus", "r1", "r2", "r3", "r4", "r5", "r6",
    ];
    let cells = |e: &oracle::ClassEntry| -> Vec<String> {
        let mut v = vec![e.p.to_string(), e.q_plus.to_string(), e.q_minus.to_string()];
        v.extend(e.r.iter().map(BigUint::to_string));
        v
    };
    match format {
        Format::Json => write_json(
            &json!({
                "n": n,
                "words": counts.words.iter().map(|(w, e)| {
                    let c = cells(e);
                    json!({
                        "word": w.to_string(),
                        "p": c[0], "q_plus": c[1], "q_minus": c[2],
                        "r": c[3..].to_vec(),
                    })
                }).collect::<Vec<_>>(),
            }),
            out,
        ),
        Format::Csv | Format::Pretty => {
            let sep = if format == Format::Csv { "," } else { "\t" };
            writeln!(out, "{}", header.join(sep))?;
            for (w, e) in &counts.words {
                writeln!(out, "{w}{sep}{}", cells(e).join(sep))?;
            }
            if format == Format::Pretty {
                writeln!(out, "total{sep}{}", counts.total())?;
            }
            Ok(())
        }
    }
}
