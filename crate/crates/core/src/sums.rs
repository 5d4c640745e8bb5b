//! Closed forms for sums of equally spaced Fibonacci and Lucas numbers.
//!
//! The two families handled here are, for spacing `M >= 1`,
//!
//! ```text
//! Σ_{k=0}^n F_{Mk},  Σ_{k=0}^n (-1)^k F_{Mk},
//! Σ_{k=0}^n L_{Mk},  Σ_{k=0}^n (-1)^k L_{Mk},
//! ```
//!
//! each expressible as a fixed linear combination of four atom shapes:
//! `F_{M(n+1)}`, `F_{Mn}`, the constant `1`, and the linear term `n + 1` —
//! every atom optionally carrying a factor `(-1)^n`. Lucas sums are expressed
//! in Fibonacci atoms (dividing by `F_M`), so the whole pipeline shares one
//! atom vocabulary.
//!
//! With `q = (-1)^M` the two denominators are `D⁻ = 1 - L_M + q` and
//! `D⁺ = 1 + L_M + q`; `D⁻ <= -1` and `D⁺ >= 1` for every `M >= 1`, so the
//! coefficients below are always well defined.

use crate::error::{Error, Result};
use crate::kernel::{fib, lucas, Integer, Rational, Seq};
use num_integer::Integer as _;
use num_traits::{One, Zero};
use std::cmp::Reverse;

/// Shape of one closed-form atom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AtomKind {
    /// `F_{M(n+1)}`
    FibN1,
    /// `F_{Mn}`
    FibN,
    /// The constant `1`.
    Const,
    /// The linear term `n + 1`.
    Linear,
}

/// One term of a [`ClosedForm`]: `coeff * (-1)^{sigma*n} * atom`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormAtom {
    pub kind: AtomKind,
    /// Index multiplier `M` for the Fibonacci atoms; `None` for
    /// [`AtomKind::Const`] and [`AtomKind::Linear`].
    pub modulus: Option<u64>,
    pub coeff: Rational,
    /// Parity bit: `1` attaches a factor `(-1)^n`.
    pub sigma: u8,
}

impl ClosedFormAtom {
    /// Atom `coeff * (-1)^{sigma*n} * F_{M(n+1)}`.
    pub fn fib_n1(modulus: u64, coeff: Rational, sigma: u8) -> Self {
        assert!(modulus >= 1, "fib atom needs modulus >= 1");
        ClosedFormAtom {
            kind: AtomKind::FibN1,
            modulus: Some(modulus),
            coeff,
            sigma: sigma % 2,
        }
    }

    /// Atom `coeff * (-1)^{sigma*n} * F_{Mn}`.
    pub fn fib_n(modulus: u64, coeff: Rational, sigma: u8) -> Self {
        assert!(modulus >= 1, "fib atom needs modulus >= 1");
        ClosedFormAtom {
            kind: AtomKind::FibN,
            modulus: Some(modulus),
            coeff,
            sigma: sigma % 2,
        }
    }

    /// Atom `coeff * (-1)^{sigma*n}`.
    pub fn constant(coeff: Rational, sigma: u8) -> Self {
        ClosedFormAtom {
            kind: AtomKind::Const,
            modulus: None,
            coeff,
            sigma: sigma % 2,
        }
    }

    /// Atom `coeff * (n + 1)`; never carries a sign factor.
    pub fn linear(coeff: Rational) -> Self {
        ClosedFormAtom {
            kind: AtomKind::Linear,
            modulus: None,
            coeff,
            sigma: 0,
        }
    }

    /// The integer the atom's coefficient multiplies at bound `n`, before
    /// sign: `F_{M(n+1)}`, `F_{Mn}`, `1`, or `n + 1`.
    fn base(&self, n: u64) -> Integer {
        match self.kind {
            AtomKind::FibN1 => fib(index(self.modulus, n + 1)),
            AtomKind::FibN => fib(index(self.modulus, n)),
            AtomKind::Const => Integer::one(),
            AtomKind::Linear => Integer::from(n + 1),
        }
    }

    /// Exact value of the atom at bound `n`, including coefficient and sign.
    ///
    /// The ratio is reduced via one remainder so the GCD runs on operands
    /// no larger than the (small) coefficient denominator, never on the
    /// full Fibonacci value.
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

/// Signed atom index `M * n`, checked against `i64` overflow.
fn index(modulus: Option<u64>, n: u64) -> i64 {
    let m = modulus.expect("fib atom carries a modulus");
    i64::try_from(m)
        .ok()
        .and_then(|m| i64::try_from(n).ok().and_then(|n| m.checked_mul(n)))
        .expect("atom index exceeds i64")
}

/// A symbolic closed form: a normalized sum of [`ClosedFormAtom`]s.
///
/// Normalization sorts atoms (largest modulus first, `F_{M(n+1)}` before
/// `F_{Mn}`, then the linear term, then constants), merges atoms that agree
/// on `(kind, modulus, sigma)`, and drops zero coefficients. Two equal sums
/// therefore compare equal term-for-term.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ClosedForm {
    pub atoms: Vec<ClosedFormAtom>,
}

impl ClosedForm {
    /// The empty (zero) closed form.
    pub fn zero() -> Self {
        ClosedForm::default()
    }

    /// Builds a normalized closed form from arbitrary atoms.
    pub fn from_atoms(atoms: Vec<ClosedFormAtom>) -> Self {
        let mut cf = ClosedForm { atoms };
        cf.normalize();
        cf
    }

    /// Sums any number of closed forms into one normalized form.
    pub fn sum<I: IntoIterator<Item = ClosedForm>>(forms: I) -> Self {
        let atoms = forms.into_iter().flat_map(|f| f.atoms).collect();
        ClosedForm::from_atoms(atoms)
    }

    /// The closed form scaled by an exact rational factor.
    pub fn scaled(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return ClosedForm::zero();
        }
        let atoms = self
            .atoms
            .iter()
            .map(|a| ClosedFormAtom {
                coeff: &a.coeff * factor,
                ..a.clone()
            })
            .collect();
        ClosedForm::from_atoms(atoms)
    }

    fn normalize(&mut self) {
        self.atoms.sort_by_key(sort_key);
        let mut merged: Vec<ClosedFormAtom> = Vec::with_capacity(self.atoms.len());
        for atom in self.atoms.drain(..) {
            match merged.last_mut() {
                Some(last)
                    if (last.kind, last.modulus, last.sigma)
                        == (atom.kind, atom.modulus, atom.sigma) =>
                {
                    last.coeff = &last.coeff + &atom.coeff;
                }
                _ => merged.push(atom),
            }
        }
        merged.retain(|a| !a.coeff.is_zero());
        self.atoms = merged;
    }

    /// Exact value at bound `n` (may be rational for standalone constant
    /// sums; full sum compositions always land on integers).
    ///
    /// Accumulates over a common denominator in plain integers and reduces
    /// once at the end. Routing the (potentially multi-megabit) atom values
    /// through rational arithmetic instead would run a binary GCD against
    /// every huge numerator, which is quadratic in its bit length.
    pub fn eval(&self, n: u64) -> Rational {
        let (total, denom) = self.eval_over_common_denominator(n);
        // gcd(total, denom) == gcd(total mod denom, denom): one linear-time
        // remainder keeps the GCD itself on small operands.
        let g = (&total % &denom).gcd(&denom);
        Rational::new_raw(total / &g, denom / g)
    }

    /// Exact integer value at bound `n`.
    ///
    /// Panics if the total is non-integral — that signals a composition bug,
    /// never a user error.
    pub fn eval_integer(&self, n: u64) -> Integer {
        let (total, denom) = self.eval_over_common_denominator(n);
        let (quotient, remainder) = total.div_rem(&denom);
        assert!(
            remainder.is_zero(),
            "closed form evaluated to non-integer at n={n}"
        );
        quotient
    }

    /// Unreduced value at bound `n` as `(numerator, positive denominator)`,
    /// with the denominator the lcm of all coefficient denominators.
    fn eval_over_common_denominator(&self, n: u64) -> (Integer, Integer) {
        let denom = self
            .atoms
            .iter()
            .fold(Integer::one(), |acc, a| acc.lcm(a.coeff.denom()));
        let mut total = Integer::zero();
        for a in &self.atoms {
            let scale = a.coeff.numer() * (&denom / a.coeff.denom());
            let base = a.base(n);
            if a.sigma == 1 && n % 2 == 1 {
                total -= scale * base;
            } else {
                total += scale * base;
            }
        }
        (total, denom)
    }
}

/// Sort order: Fibonacci atoms (largest modulus first, `F_{M(n+1)}` before
/// `F_{Mn}`), then the linear term, then constants; sign-free before signed.
fn sort_key(a: &ClosedFormAtom) -> (u8, Reverse<u64>, u8, u8) {
    match a.kind {
        AtomKind::FibN1 => (0, Reverse(a.modulus.unwrap_or(0)), 0, a.sigma),
        AtomKind::FibN => (0, Reverse(a.modulus.unwrap_or(0)), 1, a.sigma),
        AtomKind::Linear => (1, Reverse(0), 0, a.sigma),
        AtomKind::Const => (2, Reverse(0), 0, a.sigma),
    }
}

/// Closed form of `Σ_{k=0}^n (-1)^{a·k} F_{Mk}` or `Σ_{k=0}^n (-1)^{a·k} L_{Mk}`
/// for spacing `M >= 1` (`a = 1` when `alternating`).
///
/// With `q = (-1)^M`, `D⁻ = 1 - L_M + q`, `D⁺ = 1 + L_M + q`:
///
/// * `(F, plain)`:        `[F_M - F_{M(n+1)} + q·F_{Mn}] / D⁻`
/// * `(F, alternating)`:  `[-F_M + (-1)^n F_{M(n+1)} + q·(-1)^n F_{Mn}] / D⁺`
/// * `(L, plain)`:        `A + (2-A)/F_M · F_{M(n+1)} + A·q/F_M · F_{Mn}`
///   with `A = (2 - L_M)/D⁻`
/// * `(L, alternating)`:  `A + (L_M + 2q)/(D⁺ F_M) · (-1)^n F_{M(n+1)}`
///   `- q(2 + L_M)/(D⁺ F_M) · (-1)^n F_{Mn}` with `A = (2 + L_M)/D⁺`
pub fn shifted_sum_closed_form(sequence: Seq, modulus: u64, alternating: bool) -> Result<ClosedForm> {
    if modulus < 1 {
        return Err(Error::InvalidSpacing(modulus));
    }
    let m = modulus;
    let f_m = fib(m as i64);
    let l_m = lucas(m as i64);
    let q: Integer = if m % 2 == 0 {
        Integer::one()
    } else {
        -Integer::one()
    };
    let d_minus: Integer = Integer::one() - &l_m + &q;
    let d_plus: Integer = Integer::one() + &l_m + &q;
    assert!(d_minus <= -Integer::one(), "D⁻ must stay <= -1 for M >= 1");
    assert!(d_plus >= Integer::one(), "D⁺ must stay >= 1 for M >= 1");

    let r = Rational::from_integer;
    let atoms = match (sequence, alternating) {
        (Seq::F, false) => vec![
            ClosedFormAtom::fib_n1(m, Rational::new(-Integer::one(), d_minus.clone()), 0),
            ClosedFormAtom::fib_n(m, Rational::new(q, d_minus.clone()), 0),
            ClosedFormAtom::constant(Rational::new(f_m, d_minus), 0),
        ],
        (Seq::F, true) => vec![
            ClosedFormAtom::fib_n1(m, Rational::new(Integer::one(), d_plus.clone()), 1),
            ClosedFormAtom::fib_n(m, Rational::new(q, d_plus.clone()), 1),
            ClosedFormAtom::constant(Rational::new(-f_m, d_plus), 0),
        ],
        (Seq::L, false) => {
            let a = Rational::new(Integer::from(2) - &l_m, d_minus);
            vec![
                ClosedFormAtom::fib_n1(m, (r(Integer::from(2)) - &a) / r(f_m.clone()), 0),
                ClosedFormAtom::fib_n(m, &a * Rational::new(q, f_m), 0),
                ClosedFormAtom::constant(a, 0),
            ]
        }
        (Seq::L, true) => {
            let a = Rational::new(Integer::from(2) + &l_m, d_plus.clone());
            let den = &d_plus * &f_m;
            vec![
                ClosedFormAtom::fib_n1(m, Rational::new(&l_m + Integer::from(2) * &q, den.clone()), 1),
                ClosedFormAtom::fib_n(m, Rational::new(-q * (Integer::from(2) + &l_m), den), 1),
                ClosedFormAtom::constant(a, 0),
            ]
        }
    };
    Ok(ClosedForm::from_atoms(atoms))
}

/// Closed form of the trivial sum `Σ_{k=0}^n coeff·(-1)^{(sigma + a)·k}`
/// (`a = 1` when `alternating`).
///
/// When the combined parity is even the sum telescopes to `coeff·(n+1)`;
/// when odd it is `coeff·(1 + (-1)^n)/2`.
pub fn constant_sum_closed_form(coeff: Rational, sigma: u8, alternating: bool) -> ClosedForm {
    let combined = (sigma as u64 + alternating as u64) % 2;
    if combined == 0 {
        ClosedForm::from_atoms(vec![ClosedFormAtom::linear(coeff)])
    } else {
        let half = &coeff / Rational::from_integer(Integer::from(2));
        ClosedForm::from_atoms(vec![
            ClosedFormAtom::constant(half.clone(), 0),
            ClosedFormAtom::constant(half, 1),
        ])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{int, ratio};

    /// Direct summation Σ_{k=0}^n (-1)^{a·k} X_{Mk} by naive iteration.
    fn direct(sequence: Seq, m: u64, alternating: bool, n: u64) -> Integer {
        let mut total = Integer::zero();
        for k in 0..=n {
            let term = sequence.value((m * k) as i64);
            if alternating && k % 2 == 1 {
                total -= term;
            } else {
                total += term;
            }
        }
        total
    }

    #[test]
    fn spec_point_values() {
        let f2 = shifted_sum_closed_form(Seq::F, 2, false).unwrap();
        assert_eq!(f2.eval_integer(4), int(33)); // 0+1+3+8+21

        let f1a = shifted_sum_closed_form(Seq::F, 1, true).unwrap();
        assert_eq!(f1a.eval_integer(3), int(-2)); // 0-1+1-2

        let l2 = shifted_sum_closed_form(Seq::L, 2, false).unwrap();
        assert_eq!(l2.eval_integer(3), int(30)); // 2+3+7+18

        let l1a = shifted_sum_closed_form(Seq::L, 1, true).unwrap();
        assert_eq!(l1a.eval_integer(2), int(4)); // 2-1+3

        let l3 = shifted_sum_closed_form(Seq::L, 3, false).unwrap();
        assert_eq!(l3.eval_integer(2), int(24)); // 2+4+18
    }

    #[test]
    fn plain_fib_sum_is_zero_at_n0() {
        for m in 1..=8 {
            let cf = shifted_sum_closed_form(Seq::F, m, false).unwrap();
            assert_eq!(cf.eval_integer(0), int(0));
        }
    }

    #[test]
    fn matches_direct_summation_on_grid() {
        for sequence in [Seq::F, Seq::L] {
            for m in 1..=10 {
                for alternating in [false, true] {
                    let cf = shifted_sum_closed_form(sequence, m, alternating).unwrap();
                    for n in 0..=60 {
                        assert_eq!(
                            cf.eval_integer(n),
                            direct(sequence, m, alternating, n),
                            "{sequence} m={m} alt={alternating} n={n}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn denominators_stay_away_from_zero() {
        for m in 1..=30i64 {
            let q = if m % 2 == 0 { int(1) } else { int(-1) };
            let d_minus = int(1) - lucas(m) + &q;
            let d_plus = int(1) + lucas(m) + &q;
            assert!(d_minus <= int(-1), "D⁻ at m={m}");
            assert!(d_plus >= int(1), "D⁺ at m={m}");
        }
    }

    #[test]
    fn shifted_fib_recurrence_consistency() {
        // Coefficient sequences x_k = F_{mk} (k >= 0, x vanishing below 0)
        // satisfy x_k - L_m x_{k-1} + (-1)^m x_{k-2} = [k=1]·F_m.
        let x = |m: i64, k: i64| if k < 0 { Integer::zero() } else { fib(m * k) };
        for m in 1..=8i64 {
            let l_m = lucas(m);
            let sign = if m % 2 == 0 { int(1) } else { int(-1) };
            for k in 0..=40i64 {
                let lhs = x(m, k) - &l_m * x(m, k - 1) + &sign * x(m, k - 2);
                let rhs = if k == 1 { fib(m) } else { Integer::zero() };
                assert_eq!(lhs, rhs, "m={m} k={k}");
            }
        }
    }

    #[test]
    fn classical_specializations() {
        // Σ F_k = F_{n+2} - 1 and Σ L_k = L_{n+2} - 1.
        let f = shifted_sum_closed_form(Seq::F, 1, false).unwrap();
        let l = shifted_sum_closed_form(Seq::L, 1, false).unwrap();
        for n in 0..=40u64 {
            assert_eq!(f.eval_integer(n), fib(n as i64 + 2) - 1);
            assert_eq!(l.eval_integer(n), lucas(n as i64 + 2) - 1);
        }
    }

    #[test]
    fn plain_fib_form_is_the_classical_one() {
        // At M = 1 the general form degenerates to F_{n+1} + F_n - 1.
        let cf = shifted_sum_closed_form(Seq::F, 1, false).unwrap();
        let expected = ClosedForm::from_atoms(vec![
            ClosedFormAtom::fib_n1(1, ratio(1, 1), 0),
            ClosedFormAtom::fib_n(1, ratio(1, 1), 0),
            ClosedFormAtom::constant(ratio(-1, 1), 0),
        ]);
        assert_eq!(cf, expected);
    }

    #[test]
    fn constant_sums() {
        let ones = constant_sum_closed_form(ratio(1, 1), 0, false);
        assert_eq!(ones.eval_integer(4), int(5)); // n + 1

        let signs = constant_sum_closed_form(ratio(1, 1), 1, false);
        assert_eq!(signs.eval_integer(3), int(0)); // pairs cancel
        assert_eq!(signs.eval_integer(4), int(1));

        // sigma and the alternating flag cancel each other.
        let both = constant_sum_closed_form(ratio(-2, 5), 1, true);
        assert_eq!(both.eval(7), ratio(-16, 5));

        // Standalone odd-parity sums may be genuinely rational.
        let half = constant_sum_closed_form(ratio(1, 3), 0, true);
        assert_eq!(half.eval(0), ratio(1, 3));
        assert_eq!(half.eval(1), ratio(0, 1));
        assert_eq!(half.eval(2), ratio(1, 3));
    }

    #[test]
    fn normalization_merges_and_sorts() {
        let cf = ClosedForm::from_atoms(vec![
            ClosedFormAtom::constant(ratio(1, 2), 0),
            ClosedFormAtom::fib_n(3, ratio(1, 4), 0),
            ClosedFormAtom::fib_n1(3, ratio(1, 4), 0),
            ClosedFormAtom::fib_n(3, ratio(3, 4), 0),
            ClosedFormAtom::fib_n1(6, ratio(-1, 1), 1),
            ClosedFormAtom::constant(ratio(-1, 2), 0),
        ]);
        // Zero constant dropped, fib atoms merged, modulus 6 sorted first.
        assert_eq!(
            cf.atoms,
            vec![
                ClosedFormAtom::fib_n1(6, ratio(-1, 1), 1),
                ClosedFormAtom::fib_n1(3, ratio(1, 4), 0),
                ClosedFormAtom::fib_n(3, ratio(1, 1), 0),
            ]
        );
    }

    #[test]
    fn scaling_and_summing() {
        let f1 = shifted_sum_closed_form(Seq::F, 2, false).unwrap();
        let doubled = f1.scaled(&ratio(2, 1));
        for n in 0..=10 {
            assert_eq!(doubled.eval(n), f1.eval(n) * ratio(2, 1));
        }
        let total = ClosedForm::sum([f1.clone(), f1.scaled(&ratio(-1, 1))]);
        assert_eq!(total, ClosedForm::zero());
        assert!(ClosedForm::zero().eval(5).is_zero());
    }

    #[test]
    fn rejects_zero_spacing() {
        assert_eq!(
            shifted_sum_closed_form(Seq::F, 0, false),
            Err(Error::InvalidSpacing(0))
        );
    }
}
