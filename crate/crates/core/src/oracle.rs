//! Independent brute-force checks for the closed-form pipeline.
//!
//! Three oracles, deliberately sharing as little machinery as possible with
//! the code they check:
//!
//! * [`direct_power_sum`] — computes every term by plain additive iteration
//!   of the defining recurrence and sums the powers. No fast doubling, no
//!   symbolic rewriting.
//! * [`gf_coefficients`] — steps the order-2 recurrence
//!   `x_k = L_m·x_{k-1} - (-1)^m·x_{k-2}` that the spaced subsequences
//!   satisfy, again seeded by naive iteration; validates the kernel and the
//!   shifted-sum layer from a second direction.
//! * [`stepped_power_sum`] — an exact direct summation that scales to large
//!   bounds: the terms `X_{mk}^j` themselves satisfy an order-`(j+1)` integer
//!   linear recurrence, so every term is materialized and added without any
//!   per-term powering. Used by the benchmark as the "slow but honest" side.
//!
//! [`check_grid`] sweeps a whole parameter grid comparing the engine against
//! [`direct_power_sum`] and reports each point; mismatches are data, not
//! errors.

use crate::engine::{power_sum_closed_form, SumQuery};
use crate::kernel::{lucas, Integer, Seq};
use num_traits::Zero;
use std::ops::RangeInclusive;

/// Comparison record for one grid point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub query: SumQuery,
    /// Direct-summation value.
    pub expected: Integer,
    /// Closed-form value.
    pub actual: Integer,
    /// `expected == actual`.
    pub matches: bool,
}

/// The values `X_{m·k}` for `k = 0..count`, by naive additive iteration of
/// the defining recurrence from the base cases — no other identities.
fn spaced_values(sequence: Seq, m: u64, count: u64) -> Vec<Integer> {
    let (mut a, mut b) = match sequence {
        Seq::F => (Integer::zero(), Integer::from(1)),
        Seq::L => (Integer::from(2), Integer::from(1)),
    };
    let mut values = Vec::with_capacity(count as usize);
    for i in 0..count.saturating_mul(m).max(1) {
        if i % m == 0 {
            values.push(a.clone());
            if values.len() as u64 == count {
                break;
            }
        }
        let next = &a + &b;
        a = b;
        b = next;
    }
    values
}

/// `Σ_{k=0}^n (-1)^{a·k} X_{mk}^j` by definition: iterate, raise, add.
pub fn direct_power_sum(sequence: Seq, m: u64, j: u64, alternating: bool, n: u64) -> Integer {
    assert!(m >= 1, "spacing must be >= 1");
    assert!(j >= 1, "exponent must be >= 1");
    let values = spaced_values(sequence, m, n + 1);
    let mut total = Integer::zero();
    for (k, value) in values.iter().enumerate() {
        let term = value.pow(j as u32);
        if alternating && k % 2 == 1 {
            total -= term;
        } else {
            total += term;
        }
    }
    total
}

/// First `count` coefficients of the generating function of the spaced
/// subsequence: `Σ_k F_{mk} z^k` (resp. `Σ_k L_{mk} z^k`).
///
/// Produced by stepping `x_k = L_m·x_{k-1} - (-1)^m·x_{k-2}` from the seed
/// pair `(0, F_m)` (resp. `(2, L_m)`); the seeds come from naive iteration,
/// so this path never touches the fast-doubling kernel.
pub fn gf_coefficients(sequence: Seq, m: u64, count: u64) -> Vec<Integer> {
    assert!(m >= 1, "spacing must be >= 1");
    assert!(count >= 1, "need at least one coefficient");
    let seeds = spaced_values(sequence, m, 2);
    // L_m by naive iteration, keeping this path independent of the kernel.
    let multiplier = spaced_values(Seq::L, m, 2)[1].clone();
    let sign = if m % 2 == 0 {
        Integer::from(1)
    } else {
        Integer::from(-1)
    };
    let mut coeffs = Vec::with_capacity(count as usize);
    coeffs.push(seeds[0].clone());
    if count >= 2 {
        coeffs.push(seeds[1].clone());
    }
    for k in 2..count as usize {
        let next = &multiplier * &coeffs[k - 1] - &sign * &coeffs[k - 2];
        coeffs.push(next);
    }
    coeffs
}

/// Sweeps the grid comparing `power_sum_value` against [`direct_power_sum`],
/// one report per point, ordered by `(sequence, m, j, alternating, n)` as
/// given.
pub fn check_grid(
    m_range: RangeInclusive<u64>,
    j_range: RangeInclusive<u64>,
    n_range: RangeInclusive<u64>,
    sequences: &[Seq],
    parities: &[bool],
) -> Vec<OracleReport> {
    let mut reports = Vec::new();
    let max_n = *n_range.end();
    for &sequence in sequences {
        for m in m_range.clone() {
            let values = spaced_values(sequence, m, max_n + 1);
            for j in j_range.clone() {
                let powers: Vec<Integer> = values.iter().map(|v| v.pow(j as u32)).collect();
                for &alternating in parities {
                    let query = SumQuery::new(sequence, m, j, alternating, None);
                    let closed = power_sum_closed_form(&query)
                        .expect("grid ranges must satisfy m >= 1, j >= 1");
                    let mut running = Integer::zero();
                    for (k, power) in powers.iter().enumerate() {
                        if alternating && k % 2 == 1 {
                            running -= power;
                        } else {
                            running += power;
                        }
                        let k = k as u64;
                        if n_range.contains(&k) {
                            let actual = closed.eval_integer(k);
                            let matches = running == actual;
                            reports.push(OracleReport {
                                query: SumQuery::new(sequence, m, j, alternating, Some(k)),
                                expected: running.clone(),
                                actual,
                                matches,
                            });
                        }
                    }
                }
            }
        }
    }
    reports
}

/// `Σ_{k=0}^n (-1)^{a·k} X_{mk}^j` by direct summation at scale.
///
/// The term sequence `y_k = X_{mk}^j` satisfies an order-`(j+1)` linear
/// recurrence with constant integer coefficients, read off its
/// characteristic polynomial
///
/// ```text
/// Π_{0<=s<⌈j/2⌉} (z² - (-1)^{sm} L_{(j-2s)m} z + (-1)^{jm})
///   · (z - (-1)^{m·j/2})   [last factor for even j only]
/// ```
///
/// (the roots are products of Binet roots raised to the `m(j-2s)`-th power,
/// negated when `s·m` is odd). Every term is materialized by one linear
/// combination of the previous `j+1` terms — no powering past the seeds —
/// which keeps large-`n` direct summation to `O(n)` big-integer operations.
pub fn stepped_power_sum(sequence: Seq, m: u64, j: u64, alternating: bool, n: u64) -> Integer {
    assert!(m >= 1, "spacing must be >= 1");
    assert!(j >= 1, "exponent must be >= 1");

    // Characteristic polynomial, ascending powers of z, built exactly.
    let mut poly = vec![Integer::from(1)];
    let product_sign = if (j * m) % 2 == 1 { -1i64 } else { 1 };
    for s in 0..(j + 1) / 2 {
        let t = j - 2 * s;
        let mid_sign = if (s * m) % 2 == 1 { 1i64 } else { -1 };
        let quad = [
            Integer::from(product_sign),
            mid_sign * lucas((t * m) as i64),
            Integer::from(1),
        ];
        poly = poly_mul(&poly, &quad);
    }
    if j % 2 == 0 {
        let root = if (m * j / 2) % 2 == 1 { -1i64 } else { 1 };
        poly = poly_mul(&poly, &[Integer::from(-root), Integer::from(1)]);
    }
    let order = poly.len() - 1; // always j + 1

    // y_k = Σ_{i=1..=order} rc[i-1] · y_{k-i}
    let rc: Vec<Integer> = (1..=order).map(|i| -poly[order - i].clone()).collect();

    // Seed terms by naive iteration and powering.
    let seed_count = (order as u64).min(n + 1);
    let mut history: Vec<Integer> = spaced_values(sequence, m, seed_count)
        .iter()
        .map(|v| v.pow(j as u32))
        .collect();
    let mut total = Integer::zero();
    for (k, y) in history.iter().enumerate() {
        if alternating && k % 2 == 1 {
            total -= y;
        } else {
            total += y;
        }
    }
    // Empty when the seeds already cover 0..=n.
    for k in seed_count..=n {
        let mut next = Integer::zero();
        for (i, c) in rc.iter().enumerate() {
            next += c * &history[order - 1 - i];
        }
        if alternating && k % 2 == 1 {
            total -= &next;
        } else {
            total += &next;
        }
        history.rotate_left(1);
        history[order - 1] = next;
    }
    total
}

/// Product of two integer polynomials in ascending-coefficient layout.
fn poly_mul(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
    let mut out = vec![Integer::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        for (k, bk) in b.iter().enumerate() {
            out[i + k] += ai * bk;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{fib, int};

    #[test]
    fn direct_sum_pins() {
        assert_eq!(direct_power_sum(Seq::F, 2, 3, false, 5), int(176176));
        assert_eq!(direct_power_sum(Seq::F, 5, 4, false, 0), int(0));
        assert_eq!(direct_power_sum(Seq::L, 1, 1, true, 2), int(4)); // 2 - 1 + 3
    }

    #[test]
    fn direct_sum_telescopes() {
        for (sequence, m, j, alternating) in
            [(Seq::F, 3, 4, false), (Seq::L, 2, 5, true), (Seq::F, 1, 1, true)]
        {
            for n in 1..=20u64 {
                let diff = direct_power_sum(sequence, m, j, alternating, n)
                    - direct_power_sum(sequence, m, j, alternating, n - 1);
                let mut term = sequence.value((m * n) as i64).pow(j as u32);
                if alternating && n % 2 == 1 {
                    term = -term;
                }
                assert_eq!(diff, term);
            }
        }
    }

    #[test]
    fn gf_coefficient_pins() {
        assert_eq!(
            gf_coefficients(Seq::F, 2, 5),
            vec![int(0), int(1), int(3), int(8), int(21)]
        );
        assert_eq!(
            gf_coefficients(Seq::L, 1, 4),
            vec![int(2), int(1), int(3), int(4)]
        );
        for m in 1..=8 {
            assert_eq!(gf_coefficients(Seq::F, m, 1), vec![int(0)]);
        }
    }

    #[test]
    fn gf_prefixes_match_kernel() {
        for sequence in [Seq::F, Seq::L] {
            for m in 1..=8u64 {
                let coeffs = gf_coefficients(sequence, m, 40);
                for (k, c) in coeffs.iter().enumerate() {
                    assert_eq!(*c, sequence.value((m * k as u64) as i64), "{sequence} m={m} k={k}");
                }
            }
        }
    }

    #[test]
    fn small_grid_all_match() {
        let reports = check_grid(1..=2, 1..=2, 0..=3, &[Seq::F], &[false]);
        assert_eq!(reports.len(), 16);
        assert!(reports.iter().all(|r| r.matches));
        // Lexicographic order: n varies fastest.
        assert_eq!(reports[0].query.n, Some(0));
        assert_eq!(reports[1].query.n, Some(1));
        assert_eq!(reports[0].query.m, 1);
        assert_eq!(reports[15].query.m, 2);
    }

    #[test]
    fn single_point_grid() {
        let reports = check_grid(1..=1, 1..=1, 0..=0, &[Seq::F], &[false]);
        assert_eq!(reports.len(), 1);
        assert_eq!(reports[0].expected, int(0));
        assert_eq!(reports[0].actual, int(0));
        assert!(reports[0].matches);
    }

    #[test]
    fn grid_with_offset_bound_range() {
        let reports = check_grid(2..=2, 2..=2, 5..=9, &[Seq::L], &[true]);
        assert_eq!(reports.len(), 5);
        for (i, r) in reports.iter().enumerate() {
            assert_eq!(r.query.n, Some(5 + i as u64));
            assert_eq!(r.expected, direct_power_sum(Seq::L, 2, 2, true, 5 + i as u64));
            assert!(r.matches);
        }
    }

    #[test]
    fn stepped_matches_direct() {
        for sequence in [Seq::F, Seq::L] {
            for m in 1..=3u64 {
                for j in 1..=5u64 {
                    for alternating in [false, true] {
                        for n in 0..=12u64 {
                            assert_eq!(
                                stepped_power_sum(sequence, m, j, alternating, n),
                                direct_power_sum(sequence, m, j, alternating, n),
                                "{sequence} m={m} j={j} a={alternating} n={n}"
                            );
                        }
                    }
                }
            }
        }
        // Larger spot checks, including the benchmark's parameters.
        assert_eq!(
            stepped_power_sum(Seq::F, 3, 5, false, 60),
            direct_power_sum(Seq::F, 3, 5, false, 60)
        );
        assert_eq!(
            stepped_power_sum(Seq::L, 2, 4, true, 45),
            direct_power_sum(Seq::L, 2, 4, true, 45)
        );
        assert_eq!(
            stepped_power_sum(Seq::F, 3, 5, true, 41),
            direct_power_sum(Seq::F, 3, 5, true, 41)
        );
    }

    #[test]
    fn stepped_handles_tiny_bounds() {
        // Bounds smaller than the recurrence order never step at all.
        for n in 0..=6u64 {
            assert_eq!(
                stepped_power_sum(Seq::L, 1, 6, false, n),
                direct_power_sum(Seq::L, 1, 6, false, n)
            );
        }
    }

    #[test]
    fn spaced_values_sample_every_mth() {
        assert_eq!(spaced_values(Seq::F, 3, 4), vec![int(0), int(2), fib(6), fib(9)]);
        assert_eq!(spaced_values(Seq::L, 2, 3), vec![int(2), int(3), int(7)]);
        assert_eq!(spaced_values(Seq::F, 5, 1), vec![int(0)]);
    }
}
