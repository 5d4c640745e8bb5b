//! Exact scalars and base sequence primitives.
//!
//! Everything downstream works over two scalar types:
//!
//! * [`Integer`] — arbitrary-precision signed integer;
//! * [`Rational`] — arbitrary-precision rational, always in lowest terms
//!   with a positive denominator.
//!
//! On top of those this module provides Fibonacci and Lucas numbers at any
//! integer index (negative indices via the reflection identities
//! `F_{-n} = (-1)^{n+1} F_n` and `L_{-n} = (-1)^n L_n`), the fast-doubling
//! kernel [`fib_pair`], and exact binomial coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision signed integer; closed under `+`, `-`, `*` at any size.
pub type Integer = BigInt;

/// Arbitrary-precision rational; the backing type normalizes on construction,
/// so a value is always in lowest terms with a strictly positive denominator.
pub type Rational = BigRational;

/// Shorthand for an `Integer` from a machine integer.
pub fn int(v: i64) -> Integer {
    Integer::from(v)
}

/// Shorthand for an exact `Rational` from a machine-integer fraction.
///
/// Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(Integer::from(num), Integer::from(den))
}

/// Which base sequence a value, atom, or query refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Seq {
    /// Fibonacci numbers: 0, 1, 1, 2, 3, 5, …
    F,
    /// Lucas numbers: 2, 1, 3, 4, 7, 11, …
    L,
}

impl Seq {
    /// Sequence value at index `i` ([`fib`] or [`lucas`]).
    pub fn value(self, i: i64) -> Integer {
        match self {
            Seq::F => fib(i),
            Seq::L => lucas(i),
        }
    }

    /// One-letter name, as used in rendered formulas.
    pub fn letter(self) -> char {
        match self {
            Seq::F => 'F',
            Seq::L => 'L',
        }
    }
}

impl std::fmt::Display for Seq {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// `F_i` for any integer index, with `F_0 = 0`, `F_1 = 1`.
///
/// Negative indices use `F_{-n} = (-1)^{n+1} F_n`.
///
/// ```
/// use fibsum_core::kernel::{fib, int};
/// assert_eq!(fib(10), int(55));
/// assert_eq!(fib(-5), int(5));
/// ```
pub fn fib(i: i64) -> Integer {
    let (f, _) = fib_pair(i.unsigned_abs());
    if i >= 0 || i % 2 != 0 {
        f
    } else {
        -f
    }
}

/// `L_i` for any integer index, with `L_0 = 2`, `L_1 = 1`.
///
/// Computed as `L_n = 2 F_{n+1} - F_n`; negative indices use
/// `L_{-n} = (-1)^n L_n`.
pub fn lucas(i: i64) -> Integer {
    let (f, f1) = fib_pair(i.unsigned_abs());
    let l = (f1 << 1u32) - f;
    if i >= 0 || i % 2 == 0 {
        l
    } else {
        -l
    }
}

/// Fast-doubling kernel: returns `(F_n, F_{n+1})` in `O(log n)` big-integer
/// multiplications, via
///
/// ```text
/// F_{2k}   = F_k (2 F_{k+1} - F_k)
/// F_{2k+1} = F_k^2 + F_{k+1}^2
/// ```
pub fn fib_pair(n: u64) -> (Integer, Integer) {
    let mut a = Integer::zero(); // F_k
    let mut b = Integer::one(); // F_{k+1}
    if n == 0 {
        return (a, b);
    }
    // Walk the bits of n from the most significant down, doubling k at each
    // step and advancing by one when the bit is set.
    let bits = 64 - n.leading_zeros() as u64;
    for i in (0..bits).rev() {
        let c: Integer = &a * ((&b << 1u32) - &a); // F_{2k}
        let d: Integer = &a * &a + &b * &b; // F_{2k+1}
        if (n >> i) & 1 == 1 {
            b = &c + &d;
            a = d;
        } else {
            a = c;
            b = d;
        }
    }
    (a, b)
}

/// Binomial coefficient `C(n, k)`, exactly; `0` when `k > n`.
///
/// Uses the multiplicative formula with stepwise exact division, so no
/// factorials are ever materialized.
///
/// ```
/// use fibsum_core::kernel::{binomial, int};
/// assert_eq!(binomial(7, 3), int(35));
/// assert_eq!(binomial(3, 5), int(0));
/// ```
pub fn binomial(n: u64, k: u64) -> Integer {
    if k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    // Each partial product C(n-k+i, i) is itself a binomial, so the division
    // below is always exact.
    for i in 1..=k {
        acc = acc * Integer::from(n - k + i) / Integer::from(i);
    }
    acc
}
