//! Symbolic expansions of `F_n^j` and `L_n^j` into single-index atoms.
//!
//! A power of a Fibonacci or Lucas number is always an exact rational linear
//! combination of atoms `F_{tn}`, `L_{tn}` (and, in one representation,
//! `F_{t(n+1)}`) with optional `(-1)^n` factors and a constant. Two
//! representations are produced:
//!
//! * [`ExpansionForm::Literal`] — keeps `(n+1)`-offset Fibonacci atoms and a
//!   split constant block for even Fibonacci powers; this is the tabular
//!   shape used for display and cross-checking coefficient tables.
//! * [`ExpansionForm::Canonical`] — every atom index is a plain multiple of
//!   `n` and constants are merged; downstream summation needs no offset
//!   bookkeeping. For Lucas powers and odd Fibonacci powers the two forms
//!   coincide.
//!
//! The defining invariant, enforced by tests: evaluating an expansion at any
//! `n >= 0` reproduces `fib(n)^j` (resp. `lucas(n)^j`) exactly.

use crate::error::{Error, Result};
use crate::kernel::{binomial, fib, lucas, Integer, Rational, Seq};
use num_integer::Integer as _;
use num_traits::{One, Zero};
use std::cmp::Reverse;

/// Representation shape of a [`PowerExpansion`]; see the module docs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExpansionForm {
    Canonical,
    Literal,
}

/// Atom family of one expansion term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TermKind {
    /// Fibonacci atom `F_{t·n}` (or `F_{t·(n+1)}` with `offset_one`).
    F,
    /// Lucas atom `L_{t·n}`.
    L,
    /// The constant `1`.
    Const,
}

/// One term of a power expansion: `coeff * (-1)^{sigma·n} * atom`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionTerm {
    pub kind: TermKind,
    /// Index multiplier `t >= 1`; `None` for constants.
    pub stride: Option<u64>,
    /// When set, the atom index is `t·(n+1)` instead of `t·n` (literal
    /// Fibonacci form only).
    pub offset_one: bool,
    pub coeff: Rational,
    /// Parity bit: `1` attaches a factor `(-1)^n`.
    pub sigma: u8,
}

impl ExpansionTerm {
    /// Fibonacci atom `coeff * (-1)^{sigma·n} * F_{stride·(n [+1])}`.
    pub fn fib(stride: u64, offset_one: bool, coeff: Rational, sigma: u8) -> Self {
        assert!(stride >= 1, "sequence atom needs stride >= 1");
        ExpansionTerm {
            kind: TermKind::F,
            stride: Some(stride),
            offset_one,
            coeff,
            sigma: sigma % 2,
        }
    }

    /// Lucas atom `coeff * (-1)^{sigma·n} * L_{stride·(n [+1])}`.
    pub fn lucas(stride: u64, offset_one: bool, coeff: Rational, sigma: u8) -> Self {
        assert!(stride >= 1, "sequence atom needs stride >= 1");
        ExpansionTerm {
            kind: TermKind::L,
            stride: Some(stride),
            offset_one,
            coeff,
            sigma: sigma % 2,
        }
    }

    /// Constant term `coeff * (-1)^{sigma·n}`.
    pub fn constant(coeff: Rational, sigma: u8) -> Self {
        ExpansionTerm {
            kind: TermKind::Const,
            stride: None,
            offset_one: false,
            coeff,
            sigma: sigma % 2,
        }
    }

    /// The sequence value the term multiplies at index `n` (1 for
    /// constants), before coefficient and sign.
    fn base(&self, n: u64) -> Integer {
        match self.kind {
            TermKind::Const => Integer::one(),
            kind => {
                let t = self.stride.expect("sequence atom carries a stride");
                let shift = if self.offset_one { n + 1 } else { n };
                let idx = i64::try_from(t)
                    .ok()
                    .and_then(|t| i64::try_from(shift).ok().and_then(|s| t.checked_mul(s)))
                    .expect("atom index exceeds i64");
                match kind {
                    TermKind::F => fib(idx),
                    TermKind::L => lucas(idx),
                    TermKind::Const => unreachable!(),
                }
            }
        }
    }

    /// Exact value of the term at index `n`.
    ///
    /// The ratio is reduced via one remainder so the GCD runs on operands
    /// no larger than the (small) coefficient denominator, never on the
    /// full sequence value.
    pub fn eval(&self, n: u64) -> Rational {
        let mut base = self.base(n);
        if self.sigma == 1 && n % 2 == 1 {
            base = -base;
        }
        let denom = self.coeff.denom();
        let g = (&base % denom).gcd(denom);
        Rational::new_raw(self.coeff.numer() * (base / &g), denom / g)
    }
}

/// A power `X_n^j` written as a normalized sum of [`ExpansionTerm`]s.
///
/// Terms are sorted (Fibonacci atoms, then Lucas atoms, then constants;
/// larger strides first; `(n+1)`-offset before plain), merged on equal
/// `(kind, stride, offset, sigma)`, and zero coefficients dropped — so equal
/// expansions compare equal term-for-term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerExpansion {
    pub sequence: Seq,
    pub exponent: u64,
    pub form: ExpansionForm,
    pub terms: Vec<ExpansionTerm>,
}

impl PowerExpansion {
    fn new(sequence: Seq, exponent: u64, form: ExpansionForm, terms: Vec<ExpansionTerm>) -> Self {
        let mut e = PowerExpansion {
            sequence,
            exponent,
            form,
            terms,
        };
        e.normalize();
        e
    }

    fn normalize(&mut self) {
        self.terms.sort_by_key(sort_key);
        let mut merged: Vec<ExpansionTerm> = Vec::with_capacity(self.terms.len());
        for term in self.terms.drain(..) {
            match merged.last_mut() {
                Some(last)
                    if (last.kind, last.stride, last.offset_one, last.sigma)
                        == (term.kind, term.stride, term.offset_one, term.sigma) =>
                {
                    last.coeff = &last.coeff + &term.coeff;
                }
                _ => merged.push(term),
            }
        }
        merged.retain(|t| !t.coeff.is_zero());
        self.terms = merged;
    }
}

fn sort_key(t: &ExpansionTerm) -> (TermKind, Reverse<u64>, Reverse<bool>, u8) {
    (
        t.kind,
        Reverse(t.stride.unwrap_or(0)),
        Reverse(t.offset_one),
        t.sigma,
    )
}

/// `5^e` as an exact integer.
fn five_pow(e: u64) -> Integer {
    Integer::from(5u32).pow(u32::try_from(e).expect("5-power exponent fits u32"))
}

/// Expands `F_n^j` or `L_n^j` (`j >= 1`) into atoms, in the requested form.
///
/// The three families:
///
/// * `F`, odd `j`: `F_n^j = 5^{-(j-1)/2} Σ_{0<=s<j/2} (-1)^s C(j,s) (-1)^{sn} F_{(j-2s)n}`
/// * `F`, even `j`, literal: for `1 <= s <= j/2`, paired atoms
///   `(2/F_{2s})·F_{2s(n+1)}` and `-(L_{2s}/F_{2s})·F_{2sn}` with coefficient
///   `C(j, j/2+s)·5^{-j/2}` and sign `(-1)^{(n+1)(j/2+s)}`, plus the constant
///   block `C(j,j/2)·(1 - (-1)^n + (-1)^{j/2} + (-1)^{n+j/2}) / (2·5^{j/2})`
/// * `F`, even `j`, canonical: `5^{-j/2} [ Σ_{1<=s<=j/2} C(j,j/2+s)(-1)^{(j/2+s)(n+1)} L_{2sn}
///   + C(j,j/2)(-1)^{(n+1)j/2} ]`
/// * `L`: `L_n^j = Σ_{0<=s<j/2} C(j,s) (-1)^{sn} L_{(j-2s)n} + [j even]·C(j,j/2)·(-1)^{n·j/2}`
pub fn expand_power(sequence: Seq, j: u64, form: ExpansionForm) -> Result<PowerExpansion> {
    if j < 1 {
        return Err(Error::InvalidExponent(j));
    }
    let mut terms = Vec::new();
    match sequence {
        Seq::F if j % 2 == 1 => {
            // Identical in both forms.
            let denom = five_pow((j - 1) / 2);
            for s in 0..=(j - 1) / 2 {
                let mut num = binomial(j, s);
                if s % 2 == 1 {
                    num = -num;
                }
                terms.push(ExpansionTerm::fib(
                    j - 2 * s,
                    false,
                    Rational::new(num, denom.clone()),
                    (s % 2) as u8,
                ));
            }
        }
        Seq::F => {
            let h = j / 2;
            let denom = five_pow(h);
            for s in 1..=h {
                let sigma = ((h + s) % 2) as u8;
                let mut base = Rational::new(binomial(j, h + s), denom.clone());
                if sigma == 1 {
                    base = -base; // the constant part of (-1)^{(n+1)(h+s)}
                }
                match form {
                    ExpansionForm::Literal => {
                        let f_2s = Rational::from_integer(fib(2 * s as i64));
                        let l_2s = Rational::from_integer(lucas(2 * s as i64));
                        let two = Rational::from_integer(Integer::from(2));
                        terms.push(ExpansionTerm::fib(2 * s, true, &base * two / &f_2s, sigma));
                        terms.push(ExpansionTerm::fib(2 * s, false, -(&base * l_2s / f_2s), sigma));
                    }
                    ExpansionForm::Canonical => {
                        terms.push(ExpansionTerm::lucas(2 * s, false, base, sigma));
                    }
                }
            }
            // Constant block C(j,h)·(-1)^{(n+1)h}/5^h, identical in both forms:
            // sign-free +C/5^h when h is even, -(C/5^h)·(-1)^n when h is odd.
            let c = Rational::new(binomial(j, h), denom);
            if h % 2 == 0 {
                terms.push(ExpansionTerm::constant(c, 0));
            } else {
                terms.push(ExpansionTerm::constant(-c, 1));
            }
        }
        Seq::L => {
            // Identical in both forms.
            for s in 0..(j + 1) / 2 {
                terms.push(ExpansionTerm::lucas(
                    j - 2 * s,
                    false,
                    Rational::from_integer(binomial(j, s)),
                    (s % 2) as u8,
                ));
            }
            if j % 2 == 0 {
                terms.push(ExpansionTerm::constant(
                    Rational::from_integer(binomial(j, j / 2)),
                    ((j / 2) % 2) as u8,
                ));
            }
        }
    }
    Ok(PowerExpansion::new(sequence, j, form, terms))
}

/// Rewrites every `(n+1)`-offset atom in plain-`n` atoms and merges, using
///
/// ```text
/// F_{a(n+1)} = (L_a F_{an} + F_a L_{an}) / 2
/// L_{a(n+1)} = (L_a L_{an} + 5 F_a F_{an}) / 2
/// ```
///
/// Evaluation at every `n` is unchanged; the result carries
/// [`ExpansionForm::Canonical`].
pub fn canonicalize(e: &PowerExpansion) -> PowerExpansion {
    let half = Rational::new(Integer::one(), Integer::from(2));
    let mut terms = Vec::with_capacity(e.terms.len() * 2);
    for term in &e.terms {
        if !term.offset_one {
            terms.push(term.clone());
            continue;
        }
        let a = term.stride.expect("offset atom carries a stride");
        let f_a = Rational::from_integer(fib(a as i64));
        let l_a = Rational::from_integer(lucas(a as i64));
        match term.kind {
            TermKind::F => {
                terms.push(ExpansionTerm::fib(
                    a,
                    false,
                    &term.coeff * &l_a * &half,
                    term.sigma,
                ));
                terms.push(ExpansionTerm::lucas(
                    a,
                    false,
                    &term.coeff * &f_a * &half,
                    term.sigma,
                ));
            }
            TermKind::L => {
                terms.push(ExpansionTerm::lucas(
                    a,
                    false,
                    &term.coeff * &l_a * &half,
                    term.sigma,
                ));
                terms.push(ExpansionTerm::fib(
                    a,
                    false,
                    &term.coeff * f_a * Rational::from_integer(Integer::from(5)) * &half,
                    term.sigma,
                ));
            }
            TermKind::Const => unreachable!("constants never carry an offset"),
        }
    }
    PowerExpansion::new(e.sequence, e.exponent, ExpansionForm::Canonical, terms)
}

/// Exact value of the expansion at `n`; the total of a valid expansion is
/// always an integer (`fib(n)^j` or `lucas(n)^j`).
///
/// Panics if the rational total is non-integral — that signals a bug in the
/// expansion itself, never a user error.
pub fn evaluate_expansion(e: &PowerExpansion, n: u64) -> Integer {
    // Accumulate over the lcm of the coefficient denominators in plain
    // integers; one exact division at the end replaces per-term rational
    // reductions (whose GCDs are quadratic in the sequence values' size).
    let denom = e
        .terms
        .iter()
        .fold(Integer::one(), |acc, t| acc.lcm(t.coeff.denom()));
    let mut total = Integer::zero();
    for t in &e.terms {
        let scale = t.coeff.numer() * (&denom / t.coeff.denom());
        let base = t.base(n);
        if t.sigma == 1 && n % 2 == 1 {
            total -= scale * base;
        } else {
            total += scale * base;
        }
    }
    let (quotient, remainder) = total.div_rem(&denom);
    assert!(
        remainder.is_zero(),
        "expansion of {}^{} evaluated to non-integer at n={}",
        e.sequence,
        e.exponent,
        n
    );
    quotient
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{int, ratio};

    fn fib_terms(e: &PowerExpansion) -> Vec<(u64, bool, Rational, u8)> {
        e.terms
            .iter()
            .map(|t| (t.stride.unwrap_or(0), t.offset_one, t.coeff.clone(), t.sigma))
            .collect()
    }

    #[test]
    fn fib_cube_expansion() {
        let e = expand_power(Seq::F, 3, ExpansionForm::Canonical).unwrap();
        assert_eq!(
            e.terms,
            vec![
                ExpansionTerm::fib(3, false, ratio(1, 5), 0),
                ExpansionTerm::fib(1, false, ratio(-3, 5), 1),
            ]
        );
    }

    #[test]
    fn fib_identity_expansion() {
        let e = expand_power(Seq::F, 1, ExpansionForm::Canonical).unwrap();
        assert_eq!(e.terms, vec![ExpansionTerm::fib(1, false, ratio(1, 1), 0)]);
    }

    #[test]
    fn lucas_fourth_power_expansion() {
        let e = expand_power(Seq::L, 4, ExpansionForm::Canonical).unwrap();
        assert_eq!(
            e.terms,
            vec![
                ExpansionTerm::lucas(4, false, ratio(1, 1), 0),
                ExpansionTerm::lucas(2, false, ratio(4, 1), 1),
                ExpansionTerm::constant(ratio(6, 1), 0),
            ]
        );
    }

    #[test]
    fn fib_fourth_power_literal_expansion() {
        let e = expand_power(Seq::F, 4, ExpansionForm::Literal).unwrap();
        assert_eq!(
            fib_terms(&e),
            vec![
                (4, true, ratio(2, 75), 0),
                (4, false, ratio(-7, 75), 0),
                (2, true, ratio(-8, 25), 1),
                (2, false, ratio(12, 25), 1),
                (0, false, ratio(6, 25), 0),
            ]
        );
    }

    #[test]
    fn fib_square_canonical_expansion() {
        let e = expand_power(Seq::F, 2, ExpansionForm::Canonical).unwrap();
        assert_eq!(
            e.terms,
            vec![
                ExpansionTerm::lucas(2, false, ratio(1, 5), 0),
                ExpansionTerm::constant(ratio(-2, 5), 1),
            ]
        );
    }

    #[test]
    fn defining_invariant_both_forms() {
        for sequence in [Seq::F, Seq::L] {
            for j in 1..=10 {
                for form in [ExpansionForm::Canonical, ExpansionForm::Literal] {
                    let e = expand_power(sequence, j, form).unwrap();
                    for n in 0..=30u64 {
                        let expected = sequence.value(n as i64).pow(j as u32);
                        assert_eq!(
                            evaluate_expansion(&e, n),
                            expected,
                            "{sequence}^{j} {form:?} at n={n}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn literal_and_canonical_agree_for_even_fib_powers() {
        for j in (2..=10).step_by(2) {
            let lit = expand_power(Seq::F, j, ExpansionForm::Literal).unwrap();
            let can = expand_power(Seq::F, j, ExpansionForm::Canonical).unwrap();
            for n in 0..=30 {
                assert_eq!(evaluate_expansion(&lit, n), evaluate_expansion(&can, n));
            }
        }
    }

    #[test]
    fn canonicalize_matches_direct_canonical() {
        for sequence in [Seq::F, Seq::L] {
            for j in 1..=10 {
                let lit = expand_power(sequence, j, ExpansionForm::Literal).unwrap();
                let can = expand_power(sequence, j, ExpansionForm::Canonical).unwrap();
                let rewritten = canonicalize(&lit);
                assert_eq!(rewritten.terms, can.terms, "{sequence}^{j}");
                assert_eq!(rewritten.form, ExpansionForm::Canonical);
            }
        }
    }

    #[test]
    fn canonicalize_is_idempotent() {
        let e = expand_power(Seq::F, 6, ExpansionForm::Canonical).unwrap();
        let again = canonicalize(&e);
        assert_eq!(again.terms, e.terms);
    }

    #[test]
    fn canonicalized_sixth_power_at_two() {
        let lit = expand_power(Seq::F, 6, ExpansionForm::Literal).unwrap();
        assert_eq!(evaluate_expansion(&canonicalize(&lit), 2), int(1)); // F_2^6
    }

    #[test]
    fn evaluation_pins() {
        let f5 = expand_power(Seq::F, 5, ExpansionForm::Canonical).unwrap();
        assert_eq!(evaluate_expansion(&f5, 3), int(32)); // fib(3)^5

        let l2 = expand_power(Seq::L, 2, ExpansionForm::Canonical).unwrap();
        assert_eq!(evaluate_expansion(&l2, 0), int(4)); // L_0^2

        let f7 = expand_power(Seq::F, 7, ExpansionForm::Canonical).unwrap();
        assert_eq!(evaluate_expansion(&f7, 4), int(2187)); // fib(4)^7
    }

    #[test]
    fn lucas_constant_parity_follows_half_exponent() {
        for (j, coeff, sigma) in [(4u64, 6, 0u8), (6, 20, 1), (8, 70, 0)] {
            let e = expand_power(Seq::L, j, ExpansionForm::Canonical).unwrap();
            let c = e
                .terms
                .iter()
                .find(|t| t.kind == TermKind::Const)
                .expect("even Lucas power has a constant");
            assert_eq!((c.coeff.clone(), c.sigma), (ratio(coeff, 1), sigma), "L^{j}");
        }
    }

    #[test]
    fn rejects_zero_exponent() {
        assert_eq!(
            expand_power(Seq::F, 0, ExpansionForm::Canonical),
            Err(Error::InvalidExponent(0))
        );
    }
}
