//! Composition engine: closed forms and exact values for power sums
//! `Σ_{k=0}^n (-1)^{a·k} F_{mk}^j` and `Σ_{k=0}^n (-1)^{a·k} L_{mk}^j`.
//!
//! The algorithm is a two-step rewrite. First the power is expanded
//! canonically ([`crate::expansion::expand_power`]), turning `X_n^j` into
//! atoms `coeff · (-1)^{σn} · A_{tn}`. Substituting `n -> mk` and folding in
//! the outer `(-1)^{a·k}` leaves, per atom, a plain or alternating shifted
//! sum `Σ_k (-1)^{ε·k} A_{(tm)k}` with combined parity `ε = (σ·m + a) mod 2`,
//! which [`crate::sums`] knows in closed form. The final result is the
//! coefficient-weighted sum of those pieces.

use crate::error::{Error, Result};
use crate::expansion::{expand_power, ExpansionForm, TermKind};
use crate::kernel::{Integer, Seq};
use crate::sums::{constant_sum_closed_form, shifted_sum_closed_form, ClosedForm};

/// One power-sum request: `Σ_{k=0}^n (-1)^{a·k} X_{mk}^j`.
///
/// `n` is the inclusive upper bound; it is optional because a formula query
/// is bound-free, while a value query needs it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumQuery {
    pub sequence: Seq,
    /// Index spacing `m >= 1`.
    pub m: u64,
    /// Exponent `j >= 1`.
    pub j: u64,
    /// Whether the summand carries `(-1)^k`.
    pub alternating: bool,
    /// Inclusive upper summation bound.
    pub n: Option<u64>,
}

impl SumQuery {
    pub fn new(sequence: Seq, m: u64, j: u64, alternating: bool, n: Option<u64>) -> Self {
        SumQuery {
            sequence,
            m,
            j,
            alternating,
            n,
        }
    }
}

/// Symbolic closed form for the query's sum, valid for every `n >= 0`.
///
/// All atom moduli are multiples `t·m` of the spacing, one pair of Fibonacci
/// atoms per distinct stride `t` of the power expansion.
pub fn power_sum_closed_form(query: &SumQuery) -> Result<ClosedForm> {
    if query.m < 1 {
        return Err(Error::InvalidSpacing(query.m));
    }
    let expansion = expand_power(query.sequence, query.j, ExpansionForm::Canonical)?;
    let mut parts = Vec::with_capacity(expansion.terms.len());
    for term in &expansion.terms {
        // Parity of the per-k sign once n -> mk: σ·m, plus the outer flag.
        let sigma_eff = ((term.sigma as u64 * query.m) % 2) as u8;
        let part = match term.kind {
            TermKind::Const => {
                constant_sum_closed_form(term.coeff.clone(), sigma_eff, query.alternating)
            }
            kind => {
                let stride = term.stride.expect("sequence atom carries a stride");
                let seq = if kind == TermKind::F { Seq::F } else { Seq::L };
                let alternating_eff = (sigma_eff == 1) != query.alternating;
                shifted_sum_closed_form(seq, stride * query.m, alternating_eff)?
                    .scaled(&term.coeff)
            }
        };
        parts.push(part);
    }
    Ok(ClosedForm::sum(parts))
}

/// Exact value of the query's sum; requires the bound `n`.
///
/// Evaluates the closed form with fast-doubling Fibonacci values (indices up
/// to `j·m·(n+1)`), so the cost is logarithmic in `n` per atom. Panics if
/// the composed total is non-integral (an internal bug, never a user error).
pub fn power_sum_value(query: &SumQuery) -> Result<Integer> {
    let n = query.n.ok_or(Error::MissingBound)?;
    let closed = power_sum_closed_form(query)?;
    Ok(closed.eval_integer(n))
}
