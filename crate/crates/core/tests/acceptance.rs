//! Acceptance criteria, one line of output per criterion.
//!
//! Runs without the libtest harness so the `[PASS]`/`[FAIL]` lines are always
//! visible; the process exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use diffalg::expansion::{check_cyclic, cyclic_factor, cyclic_factor_from_one};
use diffalg::fdeg::{self, apply_word, box_letters, SearchConfig};
use diffalg::identities::{alt_sum_multivariate, sample, verify_identity, Verdict};
use diffalg::{
    fdeg_standard_by_search, leading_term_check, Degree, ExponentTuple, GroupRingElement,
    IntegerFunction, LatticePoint, Polyfract,
};
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 20241015;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn suite_passes(id: &str, trials: u64, seed: u64) -> Result<u64, String> {
    let r = verify_identity(id, trials, seed).map_err(|e| e.to_string())?;
    ensure(r.verdict == Verdict::Pass && r.failures.is_empty(), || {
        format!(
            "{id}: {} failures, first {:?}",
            r.failures.len(),
            r.failures.first()
        )
    })?;
    Ok(r.instances_checked)
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:.2?}, limit {limit:?}"))
}

fn ac1() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    for id in [
        "ring_laws",
        "thm_3_1_a",
        "thm_3_1_b",
        "thm_3_1_c",
        "thm_3_1_f",
        "thm_3_2",
    ] {
        total += suite_passes(id, 500, SEED)?;
    }
    within(start, Duration::from_secs(5))?;
    Ok(format!(
        "ring laws and operator rules, {total} checks in {:.2?}",
        start.elapsed()
    ))
}

fn ac2() -> Outcome {
    let n = suite_passes("thm_3_4", 100, SEED)?;
    Ok(format!(
        "folded products equal tuple enumeration on {n} products"
    ))
}

fn ac3() -> Outcome {
    let start = Instant::now();
    let seq = suite_passes("thm_4_2", 200, SEED)?;
    let grouped = suite_passes("thm_4_1", 200, SEED)?;
    within(start, Duration::from_secs(30))?;
    Ok(format!(
        "sequence ({seq}) and grouped ({grouped}) checks in {:.2?}",
        start.elapsed()
    ))
}

fn ac4() -> Outcome {
    let n = suite_passes("thm_5_1", 1, SEED)?;

    // The bound starting at p = 1 must break on r = (2), f(x) = x.
    let r = [BigInt::from(2)];
    let s = LatticePoint::from_i64s(&[1]);
    let printed = cyclic_factor_from_one(&r, &s).map_err(|e| e.to_string())?;
    ensure(!check_cyclic(&printed, &r, &s).unwrap(), || {
        "printed bound factors r = (2)".into()
    })?;
    let f = IntegerFunction::Polyfract(Polyfract::binomial_monomial(&[1], BigInt::from(1)));
    let x = LatticePoint::from_i64s(&[0]);
    let lhs = GroupRingElement::delta(&LatticePoint::from_i64s(&[2]))
        .apply(&f, &x)
        .unwrap();
    let rhs = (&printed * &GroupRingElement::delta(&s))
        .apply(&f, &x)
        .unwrap();
    ensure(lhs == BigInt::from(2) && rhs == BigInt::from(1), || {
        format!("expected 2 != 1, got {lhs}, {rhs}")
    })?;
    let fixed = cyclic_factor(&r, &s).unwrap();
    ensure(
        (&fixed * &GroupRingElement::delta(&s))
            .apply(&f, &x)
            .unwrap()
            == lhs,
        || "corrected factor disagrees at f(x) = x".into(),
    )?;

    let report = verify_identity("thm_5_1_printed", 20, SEED).unwrap();
    ensure(report.verdict == Verdict::Fail, || {
        "printed-bound suite passed".into()
    })?;
    let first = &report.failures[0];
    ensure(
        first.inputs == serde_json::json!({"r": [2], "s": [1], "f": "x1", "x": [0]})
            && first.lhs == "2"
            && first.rhs == "1",
        || format!("unexpected first failure {first:?}"),
    )?;
    Ok(format!(
        "{n} multiplier tuples factor; printed bound fails (2 != 1) as required"
    ))
}

fn ac5() -> Outcome {
    let n = suite_passes("thm_6_4", 200, SEED)?;
    Ok(format!("{n} pointwise checks on [-6,6]^N"))
}

fn random_polyfracts(count: usize, seed: u64) -> Vec<Polyfract> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let dim = sample::dim(&mut rng, 3);
            sample::polyfract(&mut rng, dim, 5, 5, 9)
        })
        .collect()
}

fn ac6() -> Outcome {
    let ps = random_polyfracts(300, SEED);
    for p in &ps {
        let bound = p.count().finite().unwrap() as u32;
        let back = Polyfract::from_samples(&IntegerFunction::Polyfract(p.clone()), bound).unwrap();
        ensure(&back == p, || format!("round trip changed {p} into {back}"))?;
    }
    Ok(format!(
        "{} polyfracts reconstructed from samples",
        ps.len()
    ))
}

fn ac7() -> Outcome {
    let ps = random_polyfracts(300, SEED);
    for p in &ps {
        ensure(fdeg_standard_by_search(p) == p.count(), || {
            format!("search disagrees with count on {p}")
        })?;
        ensure(leading_term_check(p).unwrap(), || {
            format!("leading-term check failed on {p}")
        })?;
    }
    Ok(format!(
        "search degree = count and leading terms agree on {} polyfracts",
        ps.len()
    ))
}

fn ac8() -> Outcome {
    let start = Instant::now();
    let ps = random_polyfracts(100, SEED ^ 0x8);
    let mut sampled = 0;
    for (i, p) in ps.iter().enumerate() {
        let cfg = SearchConfig {
            direction_box: 2,
            budget: 500,
            seed: SEED + i as u64,
        };
        let report = fdeg::fdeg_general_with(p, &cfg).unwrap();
        let d = p.count().finite().unwrap();
        ensure(report.fdeg_standard == Degree::Finite(d), || {
            format!("degree of {p}")
        })?;
        match &report.witness {
            Some(w) => {
                ensure(w.len() as u64 == d, || {
                    format!("witness length {} for {p}", w.len())
                })?;
                ensure(!apply_word(p, w.letters()).unwrap().is_zero(), || {
                    format!("witness {w} kills {p}")
                })?;
            }
            None => ensure(d == 0, || format!("no witness for {p}"))?,
        }
        ensure(report.counterexample.is_none(), || {
            format!("{p} survives a longer word")
        })?;
        ensure(report.annihilation_checked_to == d + 1, || {
            "refuted length".into()
        })?;
        let letters = box_letters(p.dim(), 2).len() as u64;
        let all = letters.checked_pow(d as u32 + 1);
        if report.exhaustive {
            ensure(Some(report.words_checked) == all, || {
                "exhaustive count".into()
            })?;
        } else {
            ensure(report.words_checked >= 500, || {
                format!("only {} words sampled", report.words_checked)
            })?;
            sampled += 1;
        }
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!(
        "witnesses found; {sampled} sampled with 500 words, {} refuted exhaustively, {:.2?}",
        ps.len() - sampled,
        start.elapsed()
    ))
}

fn ac9() -> Outcome {
    let a = suite_passes("thm_7_1", 1, SEED)?;
    let b = suite_passes("thm_7_2", 100, SEED)?;
    ensure(a == 121, || format!("upper negation covered {a} pairs"))?;
    Ok(format!(
        "upper negation on {a} pairs, alternating sums on {b} checks"
    ))
}

fn ac10() -> Outcome {
    let n = suite_passes("thm_7_3", 1, SEED)?;
    let (lhs, rhs) = alt_sum_multivariate(
        &ExponentTuple::new(vec![3]),
        &ExponentTuple::new(vec![2]),
        &LatticePoint::from_i64s(&[2]),
        false,
    )
    .unwrap();
    ensure(lhs == BigInt::from(3) && rhs == BigInt::from(2), || {
        format!("uncorrected gave {lhs}, {rhs}")
    })?;
    let report = verify_identity("thm_7_3_uncorrected", 1, SEED).unwrap();
    ensure(report.verdict == Verdict::Fail, || {
        "uncorrected suite passed".into()
    })?;
    let hit = report.failures.iter().any(|f| {
        f.inputs == serde_json::json!({"m": [3], "n": [2], "x": [2]})
            && f.lhs == "3"
            && f.rhs == "2"
    });
    ensure(hit, || "counterexample m=3, n=2, x=2 not reported".into())?;
    Ok(format!(
        "corrected form on {n} checks; uncorrected fails with 3 != 2"
    ))
}

const GOLDEN_EXPAND: &str = r#"{"mode":"grouped","dim":2,"word":[[2,1]],"terms":[{"q":[0,1],"coeff":[{"coords":[2,0],"coeff":1}]},{"q":[1,0],"coeff":[{"coords":[0,0],"coeff":1},{"coords":[1,0],"coeff":1}]}]}
"#;
const GOLDEN_FDEG: &str = r#"{"fdeg":2,"witness":[[1,1],[1,1]],"refuted_length":3,"exhaustive":false,"words_checked":500,"counterexample":null}
"#;
const GOLDEN_VERIFY: &str = r#"{"id":"thm_7_3","trials":100,"instances":4957470,"failures":[],"verdict":"pass","notes":"corrected form with weights prod C(n_i,p_i); also checked against D^n h; trials is ignored (exhaustive)"}
"#;

fn cli(args: &[&str]) -> (i32, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = diffalg::cli::run(
        std::iter::once("diffalg").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (code, out)
}

fn ac11() -> Outcome {
    let cases: [(&[&str], &str); 3] = [
        (
            &["--json", "expand", "--dim", "2", "--word", "(2,1)"],
            GOLDEN_EXPAND,
        ),
        (&["--json", "fdeg", "--dim", "2", "x1*x2"], GOLDEN_FDEG),
        (
            &[
                "--json", "verify", "thm_7_3", "--trials", "100", "--seed", "42",
            ],
            GOLDEN_VERIFY,
        ),
    ];
    for (args, golden) in cases {
        let (c1, o1) = cli(args);
        let (c2, o2) = cli(args);
        ensure(c1 == 0 && c2 == 0, || format!("{args:?} exited {c1}/{c2}"))?;
        ensure(o1 == o2, || format!("{args:?} is not byte-stable"))?;
        ensure(o1 == golden.as_bytes(), || {
            format!("{args:?} printed {}", String::from_utf8_lossy(&o1))
        })?;
    }
    Ok("three --json goldens reproduced byte for byte".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("AC 1", ac1),
        ("AC 2", ac2),
        ("AC 3", ac3),
        ("AC 4", ac4),
        ("AC 5", ac5),
        ("AC 6", ac6),
        ("AC 7", ac7),
        ("AC 8", ac8),
        ("AC 9", ac9),
        ("AC 10", ac10),
        ("AC 11", ac11),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match std::panic::catch_unwind(check) {
            Ok(Ok(msg)) => println!("[PASS] {name}: {msg}"),
            Ok(Err(msg)) => {
                failed += 1;
                println!("[FAIL] {name}: {msg}");
            }
            Err(_) => {
                failed += 1;
                println!("[FAIL] {name}: panicked");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
