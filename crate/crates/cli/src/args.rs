//! Command-line grammar and parsing.
//!
//! The surface is deliberately small:
//!
//! * subcommands: `eval`, `oracle`, `formula`, `expand`, `verify`, `bench`
//! * `--seq F|L|both` — which sequence(s) to work on (default `F`)
//! * `--m INT|A..B`, `--j INT|A..B`, `--n INT|A..B` — spacing, exponent,
//!   upper bound; ranges are inclusive
//! * `--alt` / `--alt both` — alternating signs, or both parities
//! * `--form canonical|paper` — expansion flavour for `expand`
//! * `--format text|latex|json` — output rendering for `formula` / `expand`
//!
//! Grid subcommands (`eval`, `oracle`, `verify`) accept ranges everywhere
//! and iterate sequence, then spacing, then exponent, then parity, then
//! bound. Single-shot subcommands (`formula`, `expand`, `bench`) reject
//! ranged flags so their output stays a single document.

use std::fmt;

use fibsum_core::{ExpansionForm, Seq};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Eval,
    Oracle,
    Formula,
    Expand,
    Verify,
    Bench,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Text,
    Latex,
    Json,
}

/// A fully parsed and validated invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Request {
    pub command: Command,
    /// `[F]`, `[L]`, or `[F, L]` — iterated in this order.
    pub sequences: Vec<Seq>,
    /// `[false]`, `[true]`, or `[false, true]` — plain before alternating.
    pub parities: Vec<bool>,
    pub m: Option<(u64, u64)>,
    pub j: Option<(u64, u64)>,
    pub n: Option<(u64, u64)>,
    pub form: ExpansionForm,
    pub format: RenderFormat,
}

/// Outcome of parsing: either a help request or a runnable invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parsed {
    Help,
    Run(Request),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub const USAGE: &str = "\
fibsum — closed forms for sums of powers of spaced Fibonacci and Lucas numbers

Usage: fibsum <command> [flags]

Commands:
  eval      print sum values from the closed form, one per line
  oracle    print the same values by brute-force summation
  formula   print the closed form for one (sequence, m, j, parity)
  expand    print the power expansion for one (sequence, j)
  verify    compare closed forms against brute force over a grid
  bench     time closed-form evaluation against direct summation

Flags:
  --seq F|L|both            sequence(s) to use (default F)
  --m INT|A..B              index spacing, at least 1
  --j INT|A..B              power, at least 1
  --n INT|A..B              summation bound
  --alt [both]              alternate signs; `--alt both` runs both parities
  --form canonical|paper    expansion flavour for `expand` (default canonical)
  --format text|latex|json  rendering for `formula`/`expand` (default text)
  -h, --help                print this message

Ranges are inclusive. `eval`, `oracle`, and `verify` accept ranges and
iterate sequence, spacing, exponent, parity, bound in that order;
`formula`, `expand`, and `bench` require single values.

Exit codes: 0 success, 1 verification mismatch, 2 usage error.
";

fn err(message: impl Into<String>) -> UsageError {
    UsageError(message.into())
}

fn parse_bound(flag: &str, text: &str) -> Result<u64, UsageError> {
    text.parse::<u64>()
        .map_err(|_| err(format!("invalid value for --{flag}: '{text}'")))
}

/// Parses `INT` or `A..B` into an inclusive pair.
fn parse_range(flag: &str, text: &str) -> Result<(u64, u64), UsageError> {
    if let Some((lo, hi)) = text.split_once("..") {
        let lo = parse_bound(flag, lo)?;
        let hi = parse_bound(flag, hi)?;
        if lo > hi {
            return Err(err(format!("empty range for --{flag}: '{text}'")));
        }
        Ok((lo, hi))
    } else {
        let v = parse_bound(flag, text)?;
        Ok((v, v))
    }
}

fn take_value<'a, I>(it: &mut I, flag: &str) -> Result<&'a str, UsageError>
where
    I: Iterator<Item = &'a String>,
{
    it.next()
        .map(String::as_str)
        .ok_or_else(|| err(format!("--{flag} needs a value")))
}

pub fn parse(args: &[String]) -> Result<Parsed, UsageError> {
    let mut it = args.iter().peekable();

    let command = match it.next().map(String::as_str) {
        None => return Err(err("missing command")),
        Some("-h") | Some("--help") => return Ok(Parsed::Help),
        Some("eval") => Command::Eval,
        Some("oracle") => Command::Oracle,
        Some("formula") => Command::Formula,
        Some("expand") => Command::Expand,
        Some("verify") => Command::Verify,
        Some("bench") => Command::Bench,
        Some(other) => return Err(err(format!("unknown command '{other}'"))),
    };

    let mut request = Request {
        command,
        sequences: vec![Seq::F],
        parities: vec![false],
        m: None,
        j: None,
        n: None,
        form: ExpansionForm::Canonical,
        format: RenderFormat::Text,
    };

    while let Some(flag) = it.next() {
        match flag.as_str() {
            "-h" | "--help" => return Ok(Parsed::Help),
            "--seq" => {
                request.sequences = match take_value(&mut it, "seq")? {
                    "F" => vec![Seq::F],
                    "L" => vec![Seq::L],
                    "both" => vec![Seq::F, Seq::L],
                    other => return Err(err(format!("invalid value for --seq: '{other}'"))),
                };
            }
            "--m" => request.m = Some(parse_range("m", take_value(&mut it, "m")?)?),
            "--j" => request.j = Some(parse_range("j", take_value(&mut it, "j")?)?),
            "--n" => request.n = Some(parse_range("n", take_value(&mut it, "n")?)?),
            "--alt" => {
                // Bare `--alt` flips to alternating; `--alt both` keeps both
                // parities, plain first.
                if it.peek().map(|s| s.as_str()) == Some("both") {
                    it.next();
                    request.parities = vec![false, true];
                } else {
                    request.parities = vec![true];
                }
            }
            "--form" => {
                request.form = match take_value(&mut it, "form")? {
                    "canonical" => ExpansionForm::Canonical,
                    "paper" => ExpansionForm::Literal,
                    other => return Err(err(format!("invalid value for --form: '{other}'"))),
                };
            }
            "--format" => {
                request.format = match take_value(&mut it, "format")? {
                    "text" => RenderFormat::Text,
                    "latex" => RenderFormat::Latex,
                    "json" => RenderFormat::Json,
                    other => return Err(err(format!("invalid value for --format: '{other}'"))),
                };
            }
            other => return Err(err(format!("unexpected argument '{other}'"))),
        }
    }

    validate(&request)?;
    Ok(Parsed::Run(request))
}

fn require(flag: &str, range: Option<(u64, u64)>) -> Result<(u64, u64), UsageError> {
    range.ok_or_else(|| err(format!("--{flag} is required for this command")))
}

fn require_single(flag: &str, range: Option<(u64, u64)>) -> Result<u64, UsageError> {
    let (lo, hi) = require(flag, range)?;
    if lo != hi {
        return Err(err(format!("--{flag} must be a single value for this command")));
    }
    Ok(lo)
}

fn validate(request: &Request) -> Result<(), UsageError> {
    if let Some((lo, _)) = request.m {
        if lo < 1 {
            return Err(err("--m must be at least 1"));
        }
    }
    if let Some((lo, _)) = request.j {
        if lo < 1 {
            return Err(err("--j must be at least 1"));
        }
    }

    match request.command {
        Command::Eval | Command::Oracle | Command::Verify => {
            require("m", request.m)?;
            require("j", request.j)?;
            require("n", request.n)?;
        }
        Command::Formula => {
            require_single("m", request.m)?;
            require_single("j", request.j)?;
            single_target(request)?;
        }
        Command::Expand => {
            require_single("j", request.j)?;
            if request.sequences.len() != 1 {
                return Err(err("--seq must be F or L for this command"));
            }
        }
        Command::Bench => {
            require_single("m", request.m)?;
            require_single("j", request.j)?;
            require_single("n", request.n)?;
            single_target(request)?;
        }
    }
    Ok(())
}

fn single_target(request: &Request) -> Result<(), UsageError> {
    if request.sequences.len() != 1 {
        return Err(err("--seq must be F or L for this command"));
    }
    if request.parities.len() != 1 {
        return Err(err("--alt both is not valid for this command"));
    }
    Ok(())
}
