//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use gofk::braid::is_conjugate;
use gofk::census::census;
use gofk::classify::gof_count;
use gofk::cover::closure_determinant;
use gofk::verify::{
    orientation_exceptions, verify_burau_witnesses, verify_conjugacy_suite, verify_conway_identity,
    verify_inverse_identity, verify_orientation_uniqueness, Violation, DEFAULT_SEED,
};
use gofk::{BraidWord, Execution, Fraction};

const EXEC: Execution = Execution::Parallel;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn word(text: &str) -> BraidWord {
    text.parse().expect("valid braid word")
}

fn no_violations(label: &str, v: Vec<Violation>) -> Result<(), String> {
    match v.first() {
        None => Ok(()),
        Some(first) => Err(format!(
            "{label}: {} violation(s), first {}",
            v.len(),
            serde_json::to_string(first).unwrap()
        )),
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    if elapsed < limit {
        Ok(())
    } else {
        Err(format!("took {elapsed:.2?}, limit {limit:?}"))
    }
}

fn criterion_1() -> Check {
    let table = [
        ((0, 1), 1),
        ((5, 2), 1),
        ((19, 3), 1),
        ((19, 2), 0),
        ((19, 4), 0),
        ((19, 7), 0),
        ((1, 1), 2),
        ((2, 1), 2),
        ((3, 1), 2),
        ((5, 1), 2),
        ((19, 1), 2),
        ((4, 1), 3),
    ];
    let start = Instant::now();
    for ((a, b), want) in table {
        let got = gof_count(a, b).map_err(|e| e.to_string())?.count;
        if got != want {
            return Err(format!("L({a},{b}): expected {want}, got {got}"));
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!("12 values match in {elapsed:.2?}"))
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let rows = census(5000, EXEC);
    let elapsed = start.elapsed();
    let mut threes = Vec::new();
    for r in &rows {
        if r.count > 3 {
            return Err(format!("({},{}) has count {}", r.alpha, r.beta, r.count));
        }
        if r.count == 3 {
            threes.push((r.alpha, r.beta));
        }
        let torus = r.alpha >= 1 && r.alpha != 4 && r.beta == 1;
        if (r.count == 2) != torus {
            return Err(format!("({},{}) has count {}", r.alpha, r.beta, r.count));
        }
    }
    if threes != [(4, 1)] {
        return Err(format!("count 3 at {threes:?}"));
    }
    within(elapsed, Duration::from_secs(60))?;
    Ok(format!(
        "{} canonical fractions in {elapsed:.2?}",
        rows.len()
    ))
}

fn criterion_3() -> Check {
    let exceptions = orientation_exceptions(2000, EXEC);
    if exceptions != [Fraction::new(4, 1).unwrap()] {
        return Err(format!("exceptions {exceptions:?}"));
    }
    no_violations("orientation", verify_orientation_uniqueness(2000, EXEC))?;
    Ok("only (4,1); (8,3) and (10,3) coincidences hold".into())
}

fn criterion_4() -> Check {
    no_violations(
        "burau",
        verify_burau_witnesses(50, 2000, DEFAULT_SEED, EXEC),
    )?;
    Ok("family p,q <= 50, torus k <= 2000, 50 twist trials".into())
}

fn criterion_5() -> Check {
    let lhs = word("1 1 1 1 1 2").concat(&BraidWord::delta(-4));
    if !is_conjugate(&lhs, &word("-1 -1 -1 -1 -1 -2")) {
        return Err("(s1^5 s2) D^-4 not conjugate to s1^-5 s2^-1".into());
    }
    for k in 2..=10 {
        let pos = BraidWord::power(1, k).concat(&word("2"));
        let neg = BraidWord::power(1, k).concat(&word("-2"));
        if is_conjugate(&pos, &neg) {
            return Err(format!("s1^{k} s2 reported conjugate to s1^{k} s2^-1"));
        }
    }
    no_violations("conjugacy", verify_conjugacy_suite(DEFAULT_SEED, EXEC))?;
    Ok("surgery pair, k = 2..10, 200 random pairs, 1000 rewrites".into())
}

fn gofk(args: &[&str]) -> Result<(i32, serde_json::Value), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_gofk"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    let stdout = String::from_utf8_lossy(&out.stdout);
    let value = serde_json::from_str(stdout.trim())
        .map_err(|e| format!("gofk {args:?} printed {stdout:?}: {e}"))?;
    Ok((out.status.code().unwrap_or(-1), value))
}

fn criterion_6() -> Check {
    let (code, twisted) = gofk(&["braid", "twist", "1", "1", "1", "1", "1", "1", "2"])?;
    if code != 0 {
        return Err(format!("twist exited {code}"));
    }
    let letters: Vec<String> = twisted["word"]
        .as_array()
        .ok_or("twist output has no word")?
        .iter()
        .map(|l| l.to_string())
        .collect();
    let mut args = vec!["braid", "identify"];
    args.extend(letters.iter().map(String::as_str));
    let (code, id) = gofk(&args)?;
    if code != 0 || id["fraction"] != serde_json::json!([5, 1]) || id["mirrored"] != true {
        return Err(format!("identify exited {code} with {id}"));
    }
    Ok(format!("identified as {}", id))
}

fn criterion_7() -> Check {
    no_violations("inverse", verify_inverse_identity(100, EXEC))?;
    no_violations("conway", verify_conway_identity(50, EXEC))?;
    Ok("p,q <= 100 and p,q <= 50".into())
}

fn criterion_8() -> Check {
    let report = gof_count(17, 5).map_err(|e| e.to_string())?;
    let expected = word("1 1 2 2 1 1 1 -2");
    let words: Vec<_> = report.witnesses.iter().map(|w| &w.word).collect();
    if report.count != 1 || words != [&expected] {
        return Err(format!("count {} witnesses {words:?}", report.count));
    }
    let det = closure_determinant(&expected).map_err(|e| e.to_string())?;
    if det != 17 {
        return Err(format!("determinant {det}"));
    }
    if report.notes.is_empty() {
        return Err("notes field is empty".into());
    }
    Ok("count 1, witness 1 1 2 2 1 1 1 -2, determinant 17, note attached".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("value table", criterion_1),
        ("census alpha <= 5000", criterion_2),
        ("orientation uniqueness alpha <= 2000", criterion_3),
        ("Burau cross-validation", criterion_4),
        ("conjugacy engine", criterion_5),
        ("surgery pipeline via CLI", criterion_6),
        ("identity suites", criterion_7),
        ("L(17,5) divergence", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {}. {name}: {detail}", i + 1),
            Err(reason) => {
                failed += 1;
                println!("FAIL {}. {name}: {reason}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
