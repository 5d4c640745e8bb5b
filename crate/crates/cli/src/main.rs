//! `fibsum` — closed forms for sums of powers of spaced Fibonacci and
//! Lucas numbers.
//!
//! The binary exposes the library pipeline end to end:
//!
//! * `eval` evaluates sums through the closed forms,
//! * `oracle` recomputes them by brute force for cross-checking,
//! * `formula` and `expand` print the symbolic objects (text, latex, json),
//! * `verify` compares both routes across a whole parameter grid,
//! * `bench` times the two routes against each other at a large bound.
//!
//! All results go to standard output, diagnostics to standard error.
//! Exit codes: 0 on success, 1 on a verification mismatch, 2 on usage
//! errors.

mod args;
mod render;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;
use std::time::Instant;

use args::{Command, Parsed, Request, USAGE};
use fibsum_core::{
    check_grid, direct_power_sum, expand_power, power_sum_closed_form, power_sum_value,
    stepped_power_sum, SumQuery,
};

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    match args::parse(&argv) {
        Ok(Parsed::Help) => {
            print!("{USAGE}");
            ExitCode::SUCCESS
        }
        Ok(Parsed::Run(request)) => run(&request),
        Err(e) => {
            eprintln!("error: {e}");
            eprintln!("run 'fibsum --help' for usage");
            ExitCode::from(2)
        }
    }
}

fn run(request: &Request) -> ExitCode {
    match request.command {
        Command::Eval => eval(request, Route::ClosedForm),
        Command::Oracle => eval(request, Route::BruteForce),
        Command::Formula => formula(request),
        Command::Expand => expand(request),
        Command::Verify => verify(request),
        Command::Bench => bench(request),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Route {
    ClosedForm,
    BruteForce,
}

/// Prints one sum value per grid point, iterating sequence, spacing,
/// exponent, parity, bound — the same order for both routes, so `eval` and
/// `oracle` output can be compared byte for byte.
fn eval(request: &Request, route: Route) -> ExitCode {
    let (m_lo, m_hi) = request.m.expect("validated");
    let (j_lo, j_hi) = request.j.expect("validated");
    let (n_lo, n_hi) = request.n.expect("validated");

    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    for &sequence in &request.sequences {
        for m in m_lo..=m_hi {
            for j in j_lo..=j_hi {
                for &alternating in &request.parities {
                    for n in n_lo..=n_hi {
                        let value = match route {
                            Route::ClosedForm => {
                                power_sum_value(&SumQuery::new(sequence, m, j, alternating, Some(n)))
                                    .expect("validated query")
                            }
                            Route::BruteForce => direct_power_sum(sequence, m, j, alternating, n),
                        };
                        writeln!(out, "{value}").expect("write to stdout");
                    }
                }
            }
        }
    }
    out.flush().expect("flush stdout");
    ExitCode::SUCCESS
}

fn formula(request: &Request) -> ExitCode {
    let query = SumQuery::new(
        request.sequences[0],
        request.m.expect("validated").0,
        request.j.expect("validated").0,
        request.parities[0],
        None,
    );
    let cf = power_sum_closed_form(&query).expect("validated query");
    println!("{}", render::render_closed_form(&cf, request.format));
    ExitCode::SUCCESS
}

fn expand(request: &Request) -> ExitCode {
    let e = expand_power(request.sequences[0], request.j.expect("validated").0, request.form)
        .expect("validated exponent");
    println!("{}", render::render_expansion(&e, request.format));
    ExitCode::SUCCESS
}

fn verify(request: &Request) -> ExitCode {
    let (m_lo, m_hi) = request.m.expect("validated");
    let (j_lo, j_hi) = request.j.expect("validated");
    let (n_lo, n_hi) = request.n.expect("validated");

    let reports = check_grid(
        m_lo..=m_hi,
        j_lo..=j_hi,
        n_lo..=n_hi,
        &request.sequences,
        &request.parities,
    );
    let mismatches: Vec<_> = reports.iter().filter(|r| !r.matches).collect();
    if mismatches.is_empty() {
        println!("all {} cases match", reports.len());
        return ExitCode::SUCCESS;
    }
    for r in &mismatches {
        println!(
            "mismatch: seq={} m={} j={} alt={} n={} closed={} direct={}",
            r.query.sequence,
            r.query.m,
            r.query.j,
            r.query.alternating,
            r.query.n.expect("grid reports carry a bound"),
            r.actual,
            r.expected,
        );
    }
    println!("{} of {} cases mismatch", mismatches.len(), reports.len());
    ExitCode::from(1)
}

/// Times closed-form evaluation against the linear-recurrence summation at
/// one parameter point and prints both values (asserted equal) plus wall
/// times and the speedup.
fn bench(request: &Request) -> ExitCode {
    let sequence = request.sequences[0];
    let m = request.m.expect("validated").0;
    let j = request.j.expect("validated").0;
    let n = request.n.expect("validated").0;
    let alternating = request.parities[0];

    let start = Instant::now();
    let closed = power_sum_value(&SumQuery::new(sequence, m, j, alternating, Some(n)))
        .expect("validated query");
    let closed_seconds = start.elapsed().as_secs_f64();

    let start = Instant::now();
    let direct = stepped_power_sum(sequence, m, j, alternating, n);
    let direct_seconds = start.elapsed().as_secs_f64();

    println!("closed {closed}");
    println!("direct {direct}");
    println!("closed_seconds {closed_seconds:.6}");
    println!("direct_seconds {direct_seconds:.6}");
    println!("speedup {:.2}", direct_seconds / closed_seconds.max(1e-9));

    if closed == direct {
        ExitCode::SUCCESS
    } else {
        eprintln!("error: closed form and direct summation disagree");
        ExitCode::from(1)
    }
}
