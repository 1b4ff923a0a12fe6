use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use gofk::braid::{is_conjugate, normal_form, Simple};
use gofk::census::census;
use gofk::classify::{gof_count, identify_closure};
use gofk::cover::{closure_determinant, dbc_homology};
use gofk::twobridge::{cf_to_fraction, components, equivalent, ConwayDigits};
use gofk::verify::{run_suite, Suite};
use gofk::{BraidWord, Execution, Fraction};

/// Genus-one fibered knots in lens spaces via closed 3-braids.
#[derive(Parser)]
#[command(name = "gofk", version)]
struct Cli {
    /// Run sweeps on one thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Pair {
    #[arg(allow_negative_numbers = true)]
    alpha: i64,
    #[arg(allow_negative_numbers = true)]
    beta: i64,
}

#[derive(Subcommand)]
enum Command {
    /// Count the GOF-knots of L(ALPHA, BETA).
    Gof(Pair),
    /// Full axis-class report for b(ALPHA, BETA).
    Classify(Pair),
    /// Compare two fractions.
    Equiv {
        #[arg(allow_negative_numbers = true)]
        a1: i64,
        #[arg(allow_negative_numbers = true)]
        b1: i64,
        #[arg(allow_negative_numbers = true)]
        a2: i64,
        #[arg(allow_negative_numbers = true)]
        b2: i64,
        #[arg(long)]
        oriented: bool,
        #[arg(long)]
        no_mirror: bool,
    },
    /// Canonical representative of b(ALPHA, BETA).
    Normalize(Pair),
    /// Evaluate a comma-separated Conway notation.
    Conway {
        #[arg(allow_hyphen_values = true)]
        digits: String,
    },
    /// Operations on 3-braid words.
    #[command(subcommand)]
    Braid(BraidCommand),
    /// Census of every canonical fraction up to a bound.
    Enumerate {
        #[arg(long)]
        max: i64,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Run the cross-validation suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long)]
        max: Option<i64>,
    },
}

#[derive(Args)]
struct Word {
    #[arg(allow_hyphen_values = true, num_args = 0..)]
    word: Vec<String>,
}

#[derive(Subcommand)]
enum BraidCommand {
    /// Left-weighted normal form.
    Nf(Word),
    /// Exponent sum.
    Exp(Word),
    /// Mirror image (every letter negated).
    Mirror(Word),
    /// Match the closure against the witness lists.
    Identify(Word),
    /// Determinant of the closure.
    Det(Word),
    /// First homology of the double branched cover.
    Homology(Word),
    /// Decide conjugacy: `braid conj WORD1 -- WORD2`.
    Conj {
        #[arg(allow_hyphen_values = true, num_args = 0..)]
        words: Vec<String>,
    },
    /// Append N negative full twists (surgery along the braid axis).
    Twist {
        #[arg(allow_negative_numbers = true)]
        n: i64,
        #[arg(allow_hyphen_values = true, num_args = 0..)]
        word: Vec<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

enum Failure {
    Invalid(String),
    Unrecognized(String),
    Violations(String),
}

impl From<gofk::Error> for Failure {
    fn from(e: gofk::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable output")
}

const MAX_EXPANDED_EXPONENT: u64 = 1_000_000;

/// Expands `s1^4`, `s2^-1` and `s1` into grammar tokens; other tokens pass
/// through untouched so the core parser reports them.
fn expand_token(token: &str) -> Result<String, Failure> {
    let Some(rest) = token.strip_prefix('s') else {
        return Ok(token.to_string());
    };
    let (generator, exponent) = match rest.split_once('^') {
        Some((g, e)) => (g, e),
        None => (rest, "1"),
    };
    let bad = || Failure::Invalid(format!("cannot read braid token `{token}`"));
    let generator: i8 = match generator {
        "1" => 1,
        "2" => 2,
        _ => return Err(bad()),
    };
    let exponent: i64 = exponent.parse().map_err(|_| bad())?;
    if exponent.unsigned_abs() > MAX_EXPANDED_EXPONENT {
        return Err(Failure::Invalid(format!(
            "exponent in `{token}` exceeds {MAX_EXPANDED_EXPONENT}"
        )));
    }
    let letter = if exponent < 0 { -generator } else { generator };
    let letters = vec![letter.to_string(); exponent.unsigned_abs() as usize];
    Ok(letters.join(" "))
}

fn parse_word(tokens: &[String]) -> Result<BraidWord, Failure> {
    let mut pieces = Vec::new();
    for token in tokens {
        let expanded = expand_token(token)?;
        if !expanded.is_empty() {
            pieces.push(expanded);
        }
    }
    Ok(pieces.join(" ").parse()?)
}

fn fraction(alpha: i64, beta: i64) -> Result<Fraction, Failure> {
    Ok(Fraction::new(alpha, beta)?)
}

#[derive(Serialize)]
struct GofOutput {
    alpha: i64,
    beta: i64,
    canonical: [i64; 2],
    gof_count: usize,
    witnesses: Vec<BraidWord>,
    labels: Vec<String>,
    notes: Vec<String>,
}

fn gof(alpha: i64, beta: i64) -> Outcome {
    let report = gof_count(alpha, beta)?;
    Ok(json(&GofOutput {
        alpha,
        beta,
        canonical: report.canonical.pair(),
        gof_count: report.count,
        witnesses: report.witnesses.iter().map(|w| w.word.clone()).collect(),
        labels: report
            .witnesses
            .iter()
            .map(|w| w.label.to_string())
            .collect(),
        notes: report.notes,
    }))
}

#[derive(Serialize)]
struct Canonical {
    canonical: [i64; 2],
    components: u8,
}

#[derive(Serialize)]
struct ConwayOutput {
    digits: Vec<i64>,
    raw: [i64; 2],
    canonical: [i64; 2],
}

fn conway(text: &str) -> Outcome {
    let digits = text
        .split(',')
        .map(|d| {
            d.trim()
                .parse::<i64>()
                .map_err(|_| Failure::Invalid(format!("cannot read Conway digit `{d}`")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let digits = ConwayDigits::new(digits)?;
    let value = cf_to_fraction(&digits)?;
    Ok(json(&ConwayOutput {
        digits: digits.digits().to_vec(),
        raw: value.raw.pair(),
        canonical: value.canonical.pair(),
    }))
}

#[derive(Serialize)]
struct NfOutput {
    delta_power: i64,
    factors: Vec<Simple>,
    word: BraidWord,
}

#[derive(Serialize)]
struct Unrecognized {
    recognized: bool,
    determinant: i128,
}

fn braid(command: BraidCommand) -> Outcome {
    use serde_json::json as j;
    Ok(match command {
        BraidCommand::Nf(Word { word }) => {
            let nf = normal_form(&parse_word(&word)?);
            json(&NfOutput {
                delta_power: nf.delta_power,
                word: nf.to_word(),
                factors: nf.factors,
            })
        }
        BraidCommand::Exp(Word { word }) => {
            json(&j!({ "exponent_sum": parse_word(&word)?.exponent_sum() }))
        }
        BraidCommand::Mirror(Word { word }) => json(&j!({ "word": parse_word(&word)?.mirror() })),
        BraidCommand::Identify(Word { word }) => {
            let w = parse_word(&word)?;
            match identify_closure(&w)? {
                Some(id) => json(&id),
                None => {
                    let out = Unrecognized {
                        recognized: false,
                        determinant: closure_determinant(&w)?,
                    };
                    return Err(Failure::Unrecognized(json(&out)));
                }
            }
        }
        BraidCommand::Det(Word { word }) => {
            json(&j!({ "determinant": closure_determinant(&parse_word(&word)?)? }))
        }
        BraidCommand::Homology(Word { word }) => {
            let h = dbc_homology(&parse_word(&word)?)?;
            json(&j!({
                "invariant_factors": h.invariant_factors,
                "order": h.order(),
                "betti_number": h.betti_number(),
            }))
        }
        BraidCommand::Conj { words } => {
            let split = words.iter().position(|t| t == "--").ok_or_else(|| {
                Failure::Invalid("expected `--` between the two braid words".into())
            })?;
            let a = parse_word(&words[..split])?;
            let b = parse_word(&words[split + 1..])?;
            json(&j!({ "conjugate": is_conjugate(&a, &b) }))
        }
        BraidCommand::Twist { n, word } => {
            json(&j!({ "word": parse_word(&word)?.surgery_twist(n) }))
        }
    })
}

fn enumerate(max: i64, format: Format, exec: Execution) -> Outcome {
    if max < 0 {
        return Err(Failure::Invalid(format!(
            "--max must be non-negative, got {max}"
        )));
    }
    let rows = census(max, exec);
    Ok(match format {
        Format::Json => json(&rows),
        Format::Tsv => {
            let mut out = String::new();
            for (i, row) in rows.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                write!(out, "{}", row.to_tsv()).expect("writing to a string");
            }
            out
        }
    })
}

fn verify(suite: Suite, max: Option<i64>, exec: Execution) -> Outcome {
    if let Some(m) = max.filter(|&m| m < 0) {
        return Err(Failure::Invalid(format!(
            "--max must be non-negative, got {m}"
        )));
    }
    let violations = run_suite(suite, max, exec);
    let out = json(&serde_json::json!({
        "passed": violations.is_empty(),
        "violations": violations,
    }));
    if violations.is_empty() {
        Ok(out)
    } else {
        Err(Failure::Violations(out))
    }
}

fn run(cli: Cli) -> Outcome {
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    match cli.command {
        Command::Gof(Pair { alpha, beta }) => gof(alpha, beta),
        Command::Classify(Pair { alpha, beta }) => Ok(json(&gof_count(alpha, beta)?)),
        Command::Equiv {
            a1,
            b1,
            a2,
            b2,
            oriented,
            no_mirror,
        } => {
            let same = equivalent(&fraction(a1, b1)?, &fraction(a2, b2)?, oriented, !no_mirror)?;
            Ok(json(&serde_json::json!({ "equivalent": same })))
        }
        Command::Normalize(Pair { alpha, beta }) => {
            let f = fraction(alpha, beta)?.canonical();
            Ok(json(&Canonical {
                canonical: f.pair(),
                components: components(&f),
            }))
        }
        Command::Conway { digits } => conway(&digits),
        Command::Braid(command) => braid(command),
        Command::Enumerate { max, format } => enumerate(max, format, exec),
        Command::Verify { suite, max } => verify(suite, max, exec),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Invalid(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(Failure::Unrecognized(out)) => {
            println!("{out}");
            eprintln!("closure not recognized as a witness class");
            ExitCode::from(2)
        }
        Err(Failure::Violations(out)) => {
            println!("{out}");
            ExitCode::from(1)
        }
    }
}
