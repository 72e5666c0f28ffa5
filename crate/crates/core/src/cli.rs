//! The `diffalg` command-line front end.
//!
//! [`run`] takes the full argument vector and two writers, which keeps the
//! whole command testable in-process. Exit codes: 0 on success, 1 when a
//! verification fails, 2 on usage, parse or input errors.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::expansion::{
    check_cyclic, cyclic_factor, cyclic_word, expand_single, expand_word_grouped,
    expand_word_sequence,
};
use crate::expr::{self, Expression};
use crate::fdeg::{self, DegreeReport, SearchConfig};
use crate::function::IntegerFunction;
use crate::group_ring::GroupRingElement;
use crate::identities::{self, Verdict};
use crate::lattice::{DifferenceWord, LatticePoint};
use crate::polyfract::{Degree, Polyfract};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest number of points `apply --window` will evaluate.
const MAX_WINDOW_POINTS: u64 = 100_000;

#[derive(Parser, Debug)]
#[command(
    name = "diffalg",
    version,
    about = "Exact difference operators on integer lattices"
)]
struct Cli {
    /// Lattice dimension N
    #[arg(long, global = true, default_value_t = 1)]
    dim: usize,

    /// Emit a single JSON document instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Seed for randomized checks and sampled searches
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rewrite a difference word in the standard difference basis
    Expand {
        #[arg(value_enum, default_value_t = ExpandMode::Grouped)]
        mode: ExpandMode,
        /// Letters such as "(1,0);(2,1)"
        #[arg(long, allow_hyphen_values = true)]
        word: Option<String>,
        /// Positive multipliers for `cyclic`, such as "2,3"
        #[arg(long)]
        multipliers: Option<String>,
        /// Step s for `cyclic`, such as "(1,0)"
        #[arg(long, allow_hyphen_values = true)]
        step: Option<String>,
    },
    /// Functional degree of an expression, with a witness word
    Fdeg {
        expr: String,
        /// Direction box for the arbitrary-direction search
        #[arg(long = "box", default_value_t = 2)]
        direction_box: u32,
        /// Number of longer words to refute when exhaustive checking is too large
        #[arg(long, default_value_t = 500)]
        budget: u64,
    },
    /// Convert an expression to the binomial basis
    Reconstruct { expr: String },
    /// Apply a word operator to an expression
    Apply {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        expr: String,
        /// Evaluation point such as "(1,2)"
        #[arg(long, allow_hyphen_values = true, conflicts_with = "window")]
        at: Option<String>,
        /// Evaluate on the cube [lo, hi]^N, written lo:hi
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
    /// Run a verification suite
    Verify {
        id: String,
        #[arg(long, default_value_t = 100)]
        trials: u64,
    },
    /// List the verification suites
    ListIdentities,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ExpandMode {
    Single,
    Grouped,
    Sequence,
    Cyclic,
}

struct Output {
    body: String,
    code: i32,
}

impl Output {
    fn ok(body: String) -> Self {
        Output {
            body,
            code: EXIT_OK,
        }
    }
}

/// Runs one invocation. `args[0]` is the program name.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match dispatch(&cli) {
        Ok(output) => {
            let _ = writeln!(out, "{}", output.body.trim_end_matches('\n'));
            output.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Output> {
    if cli.dim == 0 {
        return Err(Error::ZeroDimension);
    }
    match &cli.command {
        Command::Expand {
            mode,
            word,
            multipliers,
            step,
        } => expand(
            cli,
            *mode,
            word.as_deref(),
            multipliers.as_deref(),
            step.as_deref(),
        ),
        Command::Fdeg {
            expr,
            direction_box,
            budget,
        } => fdeg_cmd(cli, expr, *direction_box, *budget),
        Command::Reconstruct { expr } => reconstruct(cli, expr),
        Command::Apply {
            word,
            expr,
            at,
            window,
        } => apply(cli, word, expr, at.as_deref(), window.as_deref()),
        Command::Verify { id, trials } => verify(cli, id, *trials),
        Command::ListIdentities => Ok(list_identities(cli)),
    }
}

fn to_json<T: Serialize + ?Sized>(v: &T) -> Value {
    serde_json::to_value(v).expect("output serializes")
}

fn render_json(v: &Value) -> String {
    serde_json::to_string(v).expect("output serializes")
}

fn parse_expr(src: &str, dim: usize) -> Result<Expression> {
    Ok(expr::parse(src, dim)?)
}

fn require<'a>(value: Option<&'a str>, flag: &str, mode: &str) -> Result<&'a str> {
    value.ok_or_else(|| Error::InvalidArgument(format!("`expand {mode}` needs --{flag}")))
}

fn expand(
    cli: &Cli,
    mode: ExpandMode,
    word: Option<&str>,
    multipliers: Option<&str>,
    step: Option<&str>,
) -> Result<Output> {
    let dim = cli.dim;
    match mode {
        ExpandMode::Single => {
            let w = DifferenceWord::parse_with_dim(require(word, "word", "single")?, dim)?;
            if w.len() != 1 {
                return Err(Error::InvalidArgument(format!(
                    "`expand single` takes one letter, got {}",
                    w.len()
                )));
            }
            let a = &w.letters()[0];
            let alphas = expand_single(a);
            if cli.json {
                let v = json!({"mode": "single", "dim": dim, "letter": to_json(a), "alphas": to_json(&alphas)});
                return Ok(Output::ok(render_json(&v)));
            }
            let mut s = format!("D_{a} =\n");
            for (i, alpha) in alphas.iter().enumerate() {
                s.push_str(&format!("  alpha_{} = {alpha}\n", i + 1));
            }
            Ok(Output::ok(s))
        }
        ExpandMode::Grouped => {
            let w = DifferenceWord::parse_with_dim(require(word, "word", "grouped")?, dim)?;
            let g = expand_word_grouped(&w);
            if cli.json {
                let v = json!({"mode": "grouped", "dim": dim, "word": to_json(&w), "terms": to_json(&g)});
                return Ok(Output::ok(render_json(&v)));
            }
            let mut s = format!("word {w}\n");
            for (q, coeff) in g.terms() {
                s.push_str(&format!("  D^{q}: {coeff}\n"));
            }
            Ok(Output::ok(s))
        }
        ExpandMode::Sequence => {
            let w = DifferenceWord::parse_with_dim(require(word, "word", "sequence")?, dim)?;
            let seq = expand_word_sequence(&w);
            if cli.json {
                let v = json!({"mode": "sequence", "dim": dim, "word": to_json(&w), "terms": to_json(&seq)});
                return Ok(Output::ok(render_json(&v)));
            }
            let mut s = format!("word {w}\n");
            for (k, coeff) in seq.terms() {
                let k: Vec<String> = k.iter().map(|m| (m + 1).to_string()).collect();
                s.push_str(&format!("  k=({}): {coeff}\n", k.join(",")));
            }
            Ok(Output::ok(s))
        }
        ExpandMode::Cyclic => {
            let r = parse_multipliers(require(multipliers, "multipliers", "cyclic")?)?;
            let s = LatticePoint::parse_with_dim(require(step, "step", "cyclic")?, dim)?;
            let t = cyclic_factor(&r, &s)?;
            let w = cyclic_word(&r, &s)?;
            let holds = check_cyclic(&t, &r, &s)?;
            let code = if holds { EXIT_OK } else { EXIT_FAILED };
            if cli.json {
                let v = json!({
                    "mode": "cyclic",
                    "dim": dim,
                    "multipliers": to_json(&r.iter().map(crate::bigint_serde::to_number).collect::<Vec<_>>()),
                    "step": to_json(&s),
                    "word": to_json(&w),
                    "power": r.len(),
                    "factor": to_json(&t),
                    "verified": holds,
                });
                return Ok(Output {
                    body: render_json(&v),
                    code,
                });
            }
            let body = format!(
                "word {w}\n  = T * D_{s}^{}\n  T = {t}\n  verified: {holds}\n",
                r.len()
            );
            Ok(Output { body, code })
        }
    }
}

fn parse_multipliers(src: &str) -> Result<Vec<BigInt>> {
    let r = src
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::InvalidArgument(format!("bad multiplier `{}`", t.trim())))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(r)
}

fn fdeg_cmd(cli: &Cli, src: &str, direction_box: u32, budget: u64) -> Result<Output> {
    let e = parse_expr(src, cli.dim)?;
    let p = e.lower()?;
    let report = if p.is_zero() {
        DegreeReport {
            fdeg_standard: Degree::NegInfinity,
            fdeg_general_lower: 0,
            witness: None,
            annihilation_checked_to: 0,
            exhaustive: true,
            words_checked: 0,
            counterexample: None,
        }
    } else {
        let cfg = SearchConfig {
            direction_box,
            budget,
            seed: cli.seed.unwrap_or(fdeg::DEFAULT_SEED),
        };
        fdeg::fdeg_general_with(&p, &cfg)?
    };
    let code = if report.counterexample.is_some() {
        EXIT_FAILED
    } else {
        EXIT_OK
    };
    if cli.json {
        return Ok(Output {
            body: render_json(&to_json(&report)),
            code,
        });
    }
    let mut s = format!("{}\n", report.fdeg_standard);
    match &report.witness {
        Some(w) => s.push_str(&format!("witness: {w}\n")),
        None if report.fdeg_standard == Degree::Finite(0) => s.push_str("witness: (empty word)\n"),
        None => {}
    }
    if report.annihilation_checked_to > 0 {
        s.push_str(&format!(
            "length {} words annihilate: {} checked ({})\n",
            report.annihilation_checked_to,
            report.words_checked,
            if report.exhaustive {
                "exhaustive"
            } else {
                "sampled"
            }
        ));
    }
    if let Some(c) = &report.counterexample {
        s.push_str(&format!("counterexample: {c}\n"));
    }
    Ok(Output { body: s, code })
}

fn reconstruct(cli: &Cli, src: &str) -> Result<Output> {
    let e = parse_expr(src, cli.dim)?;
    let p = e.lower()?;
    if cli.json {
        let v = json!({"dim": cli.dim, "expr": e.to_string(), "polyfract": to_json(&p), "count": to_json(&p.count())});
        return Ok(Output::ok(render_json(&v)));
    }
    Ok(Output::ok(format!("{p}\n")))
}

fn parse_window(src: &str) -> Result<(i64, i64)> {
    let bad = || Error::InvalidArgument(format!("window `{src}` is not of the form lo:hi"));
    let (lo, hi) = src.split_once(':').ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn apply(
    cli: &Cli,
    word: &str,
    src: &str,
    at: Option<&str>,
    window: Option<&str>,
) -> Result<Output> {
    let dim = cli.dim;
    let w = DifferenceWord::parse_with_dim(word, dim)?;
    let e = parse_expr(src, dim)?;
    let p = e.lower()?;
    let op = GroupRingElement::word_operator(&w);
    let result: Polyfract = p.apply_operator(&op)?;
    let f = IntegerFunction::Polyfract(p);

    let points: Vec<LatticePoint> = match (at, window) {
        (Some(x), _) => vec![LatticePoint::parse_with_dim(x, dim)?],
        (None, Some(win)) => {
            let (lo, hi) = parse_window(win)?;
            let side = (hi - lo + 1) as u64;
            if side
                .checked_pow(dim as u32)
                .is_none_or(|n| n > MAX_WINDOW_POINTS)
            {
                return Err(Error::InvalidArgument(format!(
                    "window has more than {MAX_WINDOW_POINTS} points"
                )));
            }
            cube_points(dim, lo, hi)
        }
        (None, None) => Vec::new(),
    };
    let values = points
        .iter()
        .map(|x| op.apply(&f, x).map(|v| (x, v)))
        .collect::<Result<Vec<_>>>()?;

    if cli.json {
        let vals: Vec<Value> = values
            .iter()
            .map(|(x, v)| json!({"x": to_json(*x), "value": crate::bigint_serde::to_number(v)}))
            .collect();
        let v = json!({
            "dim": dim,
            "word": to_json(&w),
            "operator": to_json(&op),
            "result": to_json(&result),
            "values": vals,
        });
        return Ok(Output::ok(render_json(&v)));
    }
    let mut s = format!("{result}\n");
    for (x, v) in values {
        s.push_str(&format!("{x} {v}\n"));
    }
    Ok(Output::ok(s))
}

fn cube_points(dim: usize, lo: i64, hi: i64) -> Vec<LatticePoint> {
    let mut out = Vec::new();
    let mut idx = vec![lo; dim];
    loop {
        out.push(LatticePoint::from_i64s(&idx));
        let mut k = dim;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if idx[k] < hi {
                idx[k] += 1;
                break;
            }
            idx[k] = lo;
        }
    }
}

fn verify(cli: &Cli, id: &str, trials: u64) -> Result<Output> {
    let seed = cli.seed.unwrap_or(0);
    let report = identities::verify_identity(id, trials, seed)?;
    let code = match report.verdict {
        Verdict::Pass => EXIT_OK,
        Verdict::Fail => EXIT_FAILED,
    };
    if cli.json {
        return Ok(Output {
            body: report.to_json(),
            code,
        });
    }
    let mut s = format!(
        "{}: {} ({} instances, {} failures)\n",
        report.id,
        if report.passed() { "pass" } else { "FAIL" },
        report.instances_checked,
        report.failures.len()
    );
    if !report.notes.is_empty() {
        s.push_str(&format!("  note: {}\n", report.notes));
    }
    for f in report.failures.iter().take(5) {
        s.push_str(&format!(
            "  {} != {} at {}\n",
            f.lhs,
            f.rhs,
            render_json(&f.inputs)
        ));
    }
    if report.failures.len() > 5 {
        s.push_str(&format!("  ... {} more\n", report.failures.len() - 5));
    }
    Ok(Output { body: s, code })
}

fn list_identities(cli: &Cli) -> Output {
    let suites = identities::suites();
    if cli.json {
        let v: Vec<Value> = suites
            .iter()
            .map(|s| json!({"id": s.id, "description": s.description}))
            .collect();
        return Output::ok(render_json(&Value::Array(v)));
    }
    let width = suites.iter().map(|s| s.id.len()).max().unwrap_or(0);
    let mut out = String::new();
    for s in suites {
        out.push_str(&format!("{:width$}  {}\n", s.id, s.description));
    }
    Output::ok(out)
}
