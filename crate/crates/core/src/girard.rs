//! Girard–Waring power forms: a sequence value at a doubled-up index,
//! `F_{mn}` or `L_{mn}`, written as an integer polynomial in the single
//! value `F_m` or `L_m`.
//!
//! The underlying identity expands `x^n + y^n` in powers of `x + y` and `xy`:
//!
//! ```text
//! x^n + y^n = Σ_{0 <= k <= n/2} (-1)^k · n/(n-k) · C(n-k, k) · (x+y)^{n-2k} · (xy)^k
//! ```
//!
//! Specializing `x, y` to the Binet roots raised to the `m`-th power gives
//! `L_{mn}` in powers of `L_m` (any `m`), and — for odd `m`, where `xy = 1`
//! can be arranged — `F_{mn}` or `L_{mn}` in powers of `F_m`, depending on
//! the parity of `n`. The factor `n/(n-k) · C(n-k, k)` is always an integer:
//! it equals `C(n-k, k) + C(n-k-1, k-1)`.

use crate::error::{Error, Result};
use crate::kernel::{binomial, Integer, Seq};

/// `X_{m·n}` expressed as `Σ coeff · B_m^{power}` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GirardWaringForm {
    /// Base sequence `B` whose value at `m` is raised to the listed powers.
    pub sequence: Seq,
    /// Index `m` of the base value.
    pub spacing: u64,
    /// The outer exponent `n`; the left side sits at index `m·n`.
    pub exponent: u64,
    /// Which sequence the left side belongs to: `L` always for a Lucas base;
    /// for a Fibonacci base, `F` when `n` is odd and `L` when `n` is even.
    pub left: Seq,
    /// `(power, coeff)` pairs, powers strictly decreasing by 2. For a
    /// Fibonacci base the exact powers of 5 are folded into the coefficients.
    pub terms: Vec<(u64, Integer)>,
}

impl GirardWaringForm {
    /// Numeric value of the right side, `Σ coeff · B_m^{power}`.
    pub fn eval_right(&self) -> Integer {
        let base = self.sequence.value(self.spacing as i64);
        self.terms
            .iter()
            .map(|(power, coeff)| coeff * base.pow(*power as u32))
            .sum()
    }

    /// Numeric value of the left side, the sequence value at `m·n`.
    pub fn eval_left(&self) -> Integer {
        self.left.value((self.spacing * self.exponent) as i64)
    }
}

/// The integer factor `n/(n-k) · C(n-k, k)`.
fn waring_coeff(n: u64, k: u64) -> Integer {
    if k == 0 {
        return Integer::from(1);
    }
    binomial(n - k, k) + binomial(n - k - 1, k - 1)
}

/// Expresses `F_{mn}` / `L_{mn}` in powers of `F_m` / `L_m` (see the module
/// docs for which combinations exist).
///
/// * `sequence = L`: `L_{mn} = Σ_k (-1)^{k(m+1)} · n/(n-k) · C(n-k,k) · L_m^{n-2k}`,
///   any `m >= 1`.
/// * `sequence = F`, odd `m`: coefficients `(-1)^k · n/(n-k) · C(n-k,k)`
///   times `5^{(n-2k-1)/2}` (odd `n`, left side `F_{mn}`) or `5^{(n-2k)/2}`
///   (even `n`, left side `L_{mn}`).
///
/// Rejects `m < 1`, `n < 1`, and a Fibonacci base with even `m` (no such
/// identity exists: that case needs `xy = ±1` with the wrong sign).
pub fn girard_waring_power_form(sequence: Seq, m: u64, n: u64) -> Result<GirardWaringForm> {
    if m < 1 {
        return Err(Error::InvalidSpacing(m));
    }
    if n < 1 {
        return Err(Error::InvalidExponent(n));
    }
    if sequence == Seq::F && m % 2 == 0 {
        return Err(Error::EvenSpacingForFibPowers(m));
    }
    let mut terms = Vec::with_capacity((n / 2 + 1) as usize);
    for k in 0..=n / 2 {
        let mut coeff = waring_coeff(n, k);
        let negate = match sequence {
            // (-1)^k (xy)^k with xy = (-1)^m.
            Seq::L => (k * (m + 1)) % 2 == 1,
            // xy = 1 for odd m, so just (-1)^k; 5-powers folded in below.
            Seq::F => k % 2 == 1,
        };
        if negate {
            coeff = -coeff;
        }
        if sequence == Seq::F {
            // x + y = √5·F_m; the surviving integer part of (√5)^{n-2k}.
            coeff *= Integer::from(5u32).pow(((n - 2 * k) / 2) as u32);
        }
        terms.push((n - 2 * k, coeff));
    }
    let left = match sequence {
        Seq::L => Seq::L,
        Seq::F if n % 2 == 1 => Seq::F,
        Seq::F => Seq::L,
    };
    Ok(GirardWaringForm {
        sequence,
        spacing: m,
        exponent: n,
        left,
        terms,
    })
}
