//! Exact closed forms for sums of powers of equally spaced Fibonacci and
//! Lucas numbers.
//!
//! For any spacing `m >= 1` and exponent `j >= 1` this crate computes
//! symbolic closed forms and exact values of the four sum families
//!
//! ```text
//! Σ_{k=0}^n F_{mk}^j        Σ_{k=0}^n (-1)^k F_{mk}^j
//! Σ_{k=0}^n L_{mk}^j        Σ_{k=0}^n (-1)^k L_{mk}^j
//! ```
//!
//! entirely over arbitrary-precision integers and rationals — nothing is
//! ever rounded. The pipeline:
//!
//! 1. [`kernel`] — big-integer/rational scalars, fast-doubling Fibonacci and
//!    Lucas evaluation, exact binomials.
//! 2. [`expansion`] — rewrites `X_n^j` as a rational linear combination of
//!    single-index atoms `F_{tn}` / `L_{tn}` with `(-1)^n` factors; includes
//!    the Girard–Waring power forms ([`girard`]).
//! 3. [`sums`] — closed forms for the spacing-`M` building-block sums
//!    `Σ (-1)^{εk} F_{Mk}` and `Σ (-1)^{εk} L_{Mk}`.
//! 4. [`engine`] — composes 2 and 3 into the general closed form, with a
//!    parity dispatch on `(σ·m + alternating) mod 2` per atom.
//! 5. [`oracle`] — independent brute-force and recurrence-stepping checks
//!    that every emitted formula evaluates to the true sum.
//!
//! ```
//! use fibsum_core::{power_sum_value, Seq, SumQuery};
//!
//! // Σ_{k=0}^5 F_{2k}^3 = 0 + 1 + 27 + 512 + 9261 + 166375
//! let q = SumQuery::new(Seq::F, 2, 3, false, Some(5));
//! assert_eq!(power_sum_value(&q).unwrap().to_string(), "176176");
//! ```

pub mod engine;
pub mod error;
pub mod expansion;
pub mod girard;
pub mod kernel;
pub mod oracle;
pub mod sums;

pub use engine::{power_sum_closed_form, power_sum_value, SumQuery};
pub use error::{Error, Result};
pub use expansion::{
    canonicalize, evaluate_expansion, expand_power, ExpansionForm, ExpansionTerm, PowerExpansion,
    TermKind,
};
pub use girard::{girard_waring_power_form, GirardWaringForm};
pub use kernel::{binomial, fib, fib_pair, lucas, Integer, Rational, Seq};
pub use oracle::{
    check_grid, direct_power_sum, gf_coefficients, stepped_power_sum, OracleReport,
};
pub use sums::{
    constant_sum_closed_form, shifted_sum_closed_form, AtomKind, ClosedForm, ClosedFormAtom,
};
