//! bsdstern: count, enumerate and convert binary signed-digit words, and
//! query the Stern sequence machinery behind the counts.
//!
//! Exit status: 0 on success, 2 on parse or validation errors, 3 when a
//! request is refused by a safety guard (use --limit to raise the guard).

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use num_traits::Num;
use serde_json::Value;

use bsd_stern::{
    count_bsd, count_bsd_fast, count_hyper, count_hyper_bits, enumerate_bsd_with_limit, fib, stern,
    stern_ratio, BsdWord, HyperWord, DEFAULT_ENUMERATION_LIMIT,
};
use bsd_stern_oracle::{
    brute_count_bsd_with_limit, brute_histogram_with_limit, brute_maxima_with_limit, OracleError,
    DEFAULT_BSD_LIMIT,
};

mod output;
use output::{Format, Payload, Record};

#[derive(Parser)]
#[command(
    name = "bsdstern",
    version,
    about = "Binary signed-digit representation counts, words, and Stern sequence queries",
    after_help = "Integers accept decimal or 0x-prefixed hex, with an optional leading '-'.\n\
                  A bare '-' reads the integer from standard input."
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,

    /// Raise the safety guard used by oracle sweeps and word enumeration.
    #[arg(long, global = true)]
    limit: Option<u32>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountAlgo {
    Scan,
    Fast,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RowAlgo {
    Stern,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WordKind {
    Bsd,
    Hyper,
}

#[derive(Subcommand)]
enum Command {
    /// Number of width-`bits` signed-digit words with value n.
    Count {
        #[arg(allow_hyphen_values = true)]
        n: String,
        #[arg(long)]
        bits: u64,
        #[arg(long, value_enum, default_value = "fast")]
        algo: CountAlgo,
    },
    /// List every width-`bits` signed-digit word with value n, one per line.
    Enumerate {
        #[arg(allow_hyphen_values = true)]
        n: String,
        #[arg(long)]
        bits: u32,
    },
    /// Stern's diatomic sequence c(r).
    Stern { r: String },
    /// Fibonacci number F(k).
    Fib { k: u64 },
    /// Hyperbinary representation count of n, at one width with --bits.
    Hyper {
        n: String,
        #[arg(long)]
        bits: Option<u64>,
    },
    /// Translate a word between the +0- and 012 alphabets and show the
    /// value pair (n, 2^i - 1 - n) the translation connects.
    Convert {
        #[arg(allow_hyphen_values = true)]
        word: String,
        /// Required for words of only 0s and 1s, which fit both alphabets.
        #[arg(long, value_enum)]
        from: Option<WordKind>,
    },
    /// Calkin-Wilf fraction c(r)/c(r+1), in lowest terms.
    Ratio { r: String },
    /// Representation count of every value at one width.
    Row {
        bits: u32,
        /// Include negative values (the row is symmetric).
        #[arg(long)]
        full: bool,
        #[arg(long, value_enum, default_value = "stern")]
        algo: RowAlgo,
    },
    /// Largest count in a width's row and the values attaining it.
    Maxima { bits: u32 },
}

struct Failure {
    code: i32,
    message: String,
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

impl From<bsd_stern::Error> for Failure {
    fn from(err: bsd_stern::Error) -> Failure {
        let code = match err {
            bsd_stern::Error::EnumerationLimitExceeded { .. } => 3,
            _ => 2,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(err: OracleError) -> Failure {
        let code = match err {
            OracleError::LimitExceeded { .. } => 3,
            OracleError::BitsTooSmall { .. } => 2,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(record) => print!("{}", record.render(cli.format)),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            std::process::exit(failure.code);
        }
    }
}

fn run(cli: &Cli) -> Result<Record, Failure> {
    match &cli.command {
        Command::Count { n, bits, algo } => count_cmd(cli, n, *bits, *algo),
        Command::Enumerate { n, bits } => enumerate_cmd(cli, n, *bits),
        Command::Stern { r } => {
            let r = parse_biguint(r)?;
            Ok(Record {
                command: "stern",
                inputs: vec![("r", string_value(&r))],
                payload: Payload::Scalar(stern(&r).to_string()),
            })
        }
        Command::Fib { k } => Ok(Record {
            command: "fib",
            inputs: vec![("k", Value::String(k.to_string()))],
            payload: Payload::Scalar(fib(*k).to_string()),
        }),
        Command::Hyper { n, bits } => hyper_cmd(n, *bits),
        Command::Convert { word, from } => convert_cmd(word, *from),
        Command::Ratio { r } => {
            let r = parse_biguint(r)?;
            let fraction = stern_ratio(&r)?;
            Ok(Record {
                command: "ratio",
                inputs: vec![("r", string_value(&r))],
                payload: Payload::Scalar(fraction.to_string()),
            })
        }
        Command::Row { bits, full, algo } => row_cmd(cli, *bits, *full, *algo),
        Command::Maxima { bits } => {
            let limit = cli.limit.unwrap_or(DEFAULT_BSD_LIMIT);
            let maxima = brute_maxima_with_limit(*bits, limit)?;
            Ok(Record {
                command: "maxima",
                inputs: vec![
                    ("bits", Value::String(bits.to_string())),
                    ("limit", Value::String(limit.to_string())),
                ],
                payload: Payload::Maxima {
                    max: maxima.max.to_string(),
                    argmax: maxima.argmax.iter().map(|n| n.to_string()).collect(),
                },
            })
        }
    }
}

fn count_cmd(cli: &Cli, n_text: &str, bits: u64, algo: CountAlgo) -> Result<Record, Failure> {
    let n = parse_bigint(n_text)?;
    let count = match algo {
        CountAlgo::Scan => count_bsd(&n, bits),
        CountAlgo::Fast => count_bsd_fast(&n, bits),
        CountAlgo::Oracle => {
            let limit = cli.limit.unwrap_or(DEFAULT_BSD_LIMIT);
            let narrow = u32::try_from(bits).map_err(|_| OracleError::LimitExceeded {
                bits: u32::MAX,
                limit,
            })?;
            brute_count_bsd_with_limit(&n, narrow, limit)?
        }
    };
    let algo_name = match algo {
        CountAlgo::Scan => "scan",
        CountAlgo::Fast => "fast",
        CountAlgo::Oracle => "oracle",
    };
    Ok(Record {
        command: "count",
        inputs: vec![
            ("algo", Value::String(algo_name.to_string())),
            ("bits", Value::String(bits.to_string())),
            ("n", string_value(&n)),
        ],
        payload: Payload::Scalar(count.to_string()),
    })
}

fn enumerate_cmd(cli: &Cli, n_text: &str, bits: u32) -> Result<Record, Failure> {
    let n = parse_bigint(n_text)?;
    let limit = cli.limit.unwrap_or(DEFAULT_ENUMERATION_LIMIT);
    let words = enumerate_bsd_with_limit(&n, bits, limit)?;
    Ok(Record {
        command: "enumerate",
        inputs: vec![
            ("bits", Value::String(bits.to_string())),
            ("limit", Value::String(limit.to_string())),
            ("n", string_value(&n)),
        ],
        payload: Payload::WordList(words.iter().map(|w| w.to_string()).collect()),
    })
}

fn hyper_cmd(n_text: &str, bits: Option<u64>) -> Result<Record, Failure> {
    let n = parse_biguint(n_text)?;
    let mut inputs = Vec::new();
    let count = match bits {
        Some(bits) => {
            inputs.push(("bits", Value::String(bits.to_string())));
            count_hyper_bits(&n, bits)
        }
        None => count_hyper(&n),
    };
    inputs.push(("n", string_value(&n)));
    Ok(Record {
        command: "hyper",
        inputs,
        payload: Payload::Scalar(count.to_string()),
    })
}

fn convert_cmd(word: &str, from: Option<WordKind>) -> Result<Record, Failure> {
    let has_bsd_marks = word.contains(['+', '-']);
    let has_hyper_marks = word.contains('2');
    let kind = match from {
        Some(kind) => kind,
        None if has_bsd_marks && has_hyper_marks => {
            return Err(invalid(format!(
                "word {word:?} mixes the +0- and 012 alphabets"
            )));
        }
        None if has_bsd_marks => WordKind::Bsd,
        None if has_hyper_marks => WordKind::Hyper,
        None => {
            return Err(invalid(format!(
                "word {word:?} fits both alphabets; pass --from bsd or --from hyper"
            )));
        }
    };
    let (translated, bsd_value, hyper_value, from_name) = match kind {
        WordKind::Bsd => {
            // accept '1' for the +1 digit so plain 0/1 strings can be read
            // as signed-digit words under --from bsd
            let w: BsdWord = word.replace('1', "+").parse()?;
            let h = w.to_hyper();
            (
                h.to_string(),
                w.value().to_string(),
                h.value().to_string(),
                "bsd",
            )
        }
        WordKind::Hyper => {
            let h: HyperWord = word.parse()?;
            let w = h.to_bsd();
            (
                w.to_string(),
                w.value().to_string(),
                h.value().to_string(),
                "hyper",
            )
        }
    };
    Ok(Record {
        command: "convert",
        inputs: vec![
            ("from", Value::String(from_name.to_string())),
            ("word", Value::String(word.to_string())),
        ],
        payload: Payload::Translation {
            word: translated,
            bsd: bsd_value,
            hyper: hyper_value,
        },
    })
}

fn row_cmd(cli: &Cli, bits: u32, full: bool, algo: RowAlgo) -> Result<Record, Failure> {
    if bits > 62 {
        return Err(invalid(format!(
            "row at {bits} bits is too wide to tabulate"
        )));
    }
    let top: i64 = (1i64 << bits) - 1;
    let start = if full { -top } else { 0 };
    let rows: Vec<(String, String)> = match algo {
        RowAlgo::Stern => (start..=top)
            .map(|n| {
                (
                    n.to_string(),
                    count_bsd_fast(&BigInt::from(n), u64::from(bits)).to_string(),
                )
            })
            .collect(),
        RowAlgo::Oracle => {
            let limit = cli.limit.unwrap_or(DEFAULT_BSD_LIMIT);
            let histogram = brute_histogram_with_limit(bits, limit)?;
            (start..=top)
                .map(|n| (n.to_string(), histogram.count(n).to_string()))
                .collect()
        }
    };
    let algo_name = match algo {
        RowAlgo::Stern => "stern",
        RowAlgo::Oracle => "oracle",
    };
    Ok(Record {
        command: "row",
        inputs: vec![
            ("algo", Value::String(algo_name.to_string())),
            ("bits", Value::String(bits.to_string())),
            ("full", Value::Bool(full)),
            ("max", Value::String(top.to_string())),
            ("min", Value::String(start.to_string())),
        ],
        payload: Payload::RowTable(rows),
    })
}

fn string_value(n: &impl ToString) -> Value {
    Value::String(n.to_string())
}

/// A bare "-" stands for "read the integer from standard input"; argv
/// entries are capped at 128 KiB on Linux, stdin is not.
fn resolve_stdin(text: &str) -> Result<String, Failure> {
    if text != "-" {
        return Ok(text.to_string());
    }
    let mut buffer = String::new();
    std::io::Read::read_to_string(&mut std::io::stdin(), &mut buffer)
        .map_err(|err| invalid(format!("reading stdin: {err}")))?;
    Ok(buffer.trim().to_string())
}

/// Decimal or 0x-prefixed hex, with an optional sign.
fn parse_bigint(raw: &str) -> Result<BigInt, Failure> {
    let text = resolve_stdin(raw)?;
    let text = text.as_str();
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text.strip_prefix('+').unwrap_or(text)),
    };
    let magnitude = parse_magnitude(body, text)?;
    let mut n = BigInt::from(magnitude);
    if negative {
        n = -n;
    }
    Ok(n)
}

fn parse_biguint(raw: &str) -> Result<BigUint, Failure> {
    let text = resolve_stdin(raw)?;
    let text = text.as_str();
    if let Some(rest) = text.strip_prefix('-') {
        if !rest.is_empty() && parse_magnitude(rest, text).is_ok() {
            return Err(invalid(format!("{text:?} must be non-negative")));
        }
    }
    parse_magnitude(text.strip_prefix('+').unwrap_or(text), text)
}

fn parse_magnitude(body: &str, original: &str) -> Result<BigUint, Failure> {
    let (radix, digits) = match body.strip_prefix("0x").or_else(|| body.strip_prefix("0X")) {
        Some(hex) => (16, hex),
        None => (10, body),
    };
    BigUint::from_str_radix(digits, radix)
        .map_err(|_| invalid(format!("{original:?} is not an integer")))
}
