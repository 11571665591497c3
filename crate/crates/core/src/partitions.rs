//! Integer partitions with two multiplicative statistics — the *norm*
//! (product of parts) and the *supernorm* (product of the parts-indexed
//! primes) — plus the machinery to verify the identities the models lean
//! on.
//!
//! Writing a partition's part multiplicities as `m_1, m_2, ...`, the
//! supernorm is `2^{m_1} * 3^{m_2} * 5^{m_3} * ...`, which by unique
//! factorization sets up a bijection between *all* partitions and the
//! positive integers: the partition with a part `i` of multiplicity `a`
//! corresponds to the integer with prime factor `p_i^a`. Under that
//! bijection, counting integers in a prime gap `[p_n, p_{n+1})` is the
//! same as counting partitions by supernorm — the observation
//! [`verify_gap_equivalence`] checks head-on.
//!
//! Second identity: the partitions of norm `n` with no part equal to 1
//! and at most two parts come in divisor pairs, `(n)` together with
//! `(n/a, a)` for each divisor `2 <= a <= sqrt(n)`, so their count is
//! exactly `ceil(d(n)/2)` — the quantity whose prefix sum drives every
//! model in [`crate::models`].
//!
//! Last, the norm/supernorm sandwich: every partition with no unit part
//! and norm `N >= 5` satisfies `N < p_N <= supernorm <= N^(log 3 / log 2)`,
//! with equality on the right exactly for the all-twos partitions
//! (`N = 2^a`, supernorm `3^a`). The right-hand comparison pits an integer
//! against an irrational power, so [`check_norm_inequality`] decides it in
//! floating point only when the margin is comfortable (relative guard
//! 1e-9) and otherwise escalates to exact integer arithmetic: continued-
//! fraction convergents of `log_2 3` bracket the exponent between
//! rationals `num/den` whose comparisons `supernorm^den` vs `N^num` are
//! plain big-integer facts.

use crate::error::{Error, Result};
use crate::sieve::PrimeTable;
use num_bigint::BigUint;

/// A partition: finite multiset of positive integers, stored as a
/// nonincreasing list of parts. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// The empty partition (norm and supernorm both 1).
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Build from parts in any order; zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::invalid_argument(
                "partition parts must be positive".to_string(),
            ));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// Parts, nonincreasing.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts, `len(lambda)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of parts, `|lambda|`.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// `(part value, multiplicity)` pairs, ascending by value.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in self.parts.iter().rev() {
            match out.last_mut() {
                Some((value, mult)) if *value == p => *mult += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// True when no part equals 1.
    pub fn is_non_unitary(&self) -> bool {
        self.parts.last().is_none_or(|&smallest| smallest > 1)
    }

    /// Norm: product of parts, 1 for the empty partition.
    ///
    /// Panics on u64 overflow — the verification ranges in this crate stay
    /// below 2^40, so an overflow here is a caller bug, not a data case.
    pub fn norm(&self) -> u64 {
        self.parts.iter().fold(1u64, |acc, &p| {
            acc.checked_mul(u64::from(p))
                .expect("partition norm overflows u64")
        })
    }

    /// Supernorm: product of `p_(part)` over the parts, 1 for the empty
    /// partition. Errors if the table lacks the largest part's prime or
    /// the product leaves u64.
    pub fn supernorm(&self, table: &PrimeTable) -> Result<u64> {
        let mut acc = 1u64;
        for &part in &self.parts {
            let prime = table.nth_prime(part as usize)?;
            acc = acc.checked_mul(prime).ok_or_else(|| {
                Error::out_of_range("supernorm overflows u64".to_string())
            })?;
        }
        Ok(acc)
    }
}

/// Inverse of the supernorm map: the unique partition whose supernorm is
/// `m`, read off the prime factorization (`p_i^a` contributes part `i`
/// with multiplicity `a`).
///
/// Errors: `m = 0` is invalid; `m` whose largest prime factor exceeds the
/// table's range is out of range.
pub fn partition_from_integer(m: u64, table: &PrimeTable) -> Result<Partition> {
    if m == 0 {
        return Err(Error::invalid_argument(
            "0 is not the supernorm of any partition".to_string(),
        ));
    }
    let mut rest = m;
    let mut parts: Vec<u32> = Vec::new();
    for (idx, &p) in table.primes().iter().enumerate() {
        if p * p > rest {
            break;
        }
        while rest.is_multiple_of(p) {
            rest /= p;
            parts.push((idx + 1) as u32);
        }
    }
    if rest > 1 {
        // rest is prime: every factor below sqrt(rest) has been removed.
        if rest > table.limit() {
            return Err(Error::out_of_range(format!(
                "largest prime factor {rest} of {m} exceeds the sieve limit {}",
                table.limit()
            )));
        }
        parts.push(table.prime_pi(rest)? as u32);
    }
    parts.reverse();
    Ok(Partition { parts })
}

/// All partitions of norm `n` with no unit part and at most two parts:
/// `(n)` itself plus `(n/a, a)` for each divisor `2 <= a <= sqrt(n)`.
/// Their count equals `ceil(d(n)/2)` — asserted exhaustively in tests.
pub fn enumerate_short_nonunitary(n: u64) -> Result<Vec<Partition>> {
    if n < 2 {
        return Err(Error::invalid_argument(format!(
            "short non-unitary enumeration needs n >= 2, got {n}"
        )));
    }
    let mut out = vec![Partition {
        parts: vec![u32::try_from(n).map_err(|_| {
            Error::invalid_argument(format!("norm {n} exceeds the supported part range"))
        })?],
    }];
    for a in 2..=n.isqrt() {
        if n.is_multiple_of(a) {
            out.push(Partition {
                parts: vec![(n / a) as u32, a as u32],
            });
        }
    }
    Ok(out)
}

/// All partitions of norm `n` with no unit part, by recursive divisor
/// descent: the largest part is some divisor `a >= 2` of `n`, and the
/// rest is a non-unitary partition of `n/a` with parts at most `a`.
/// Exhaustive but desk-scale — intended for `n` up to 10^4.
pub fn enumerate_nonunitary(n: u64) -> Result<Vec<Partition>> {
    if n == 0 {
        return Err(Error::invalid_argument(
            "no partition has norm 0".to_string(),
        ));
    }
    fn descend(n: u64, max_part: u64, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 1 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for a in (2..=max_part.min(n)).rev() {
            if n.is_multiple_of(a) {
                prefix.push(a as u32);
                descend(n / a, a, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    descend(n, n, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Count the integers in the prime gap `[p_n, p_{n+1})` by pulling each
/// one back through the supernorm bijection, and confirm the partition
/// count equals the gap width. Returns `Ok(true)` when the bijection
/// accounts for every integer in the gap.
pub fn verify_gap_equivalence(n: usize, table: &PrimeTable) -> Result<bool> {
    if n == 0 {
        return Err(Error::invalid_argument(
            "gap equivalence is indexed from n = 1".to_string(),
        ));
    }
    let lo = table.nth_prime(n)?;
    let hi = table.nth_prime(n + 1)?;
    let mut partitions_seen = 0u64;
    for m in lo..hi {
        let lambda = partition_from_integer(m, table)?;
        if lambda.supernorm(table)? != m {
            return Ok(false);
        }
        partitions_seen += 1;
    }
    Ok(partitions_seen == hi - lo)
}

/// Continued-fraction convergents `num/den` of `log_2 3`, each tagged with
/// whether it sits below the true value. Consecutive convergents pinch the
/// exponent tightly enough to decide every integer comparison this crate
/// ever faces; the list runs far past need.
const LOG2_3_CONVERGENTS: &[(u32, u32, bool)] = &[
    (1, 1, true),
    (2, 1, false),
    (3, 2, true),
    (8, 5, false),
    (19, 12, true),
    (65, 41, false),
    (84, 53, true),
    (485, 306, false),
    (1054, 665, true),
    (24_727, 15_601, false),
    (50_508, 31_867, true),
    (125_743, 79_335, false),
    (176_251, 111_202, true),
    (301_994, 190_537, false),
];

/// Exact decision of `x <= n^(log_2 3)` for integers `x, n >= 2`, assuming
/// the caller has already handled the exact-equality case `n = 2^a`,
/// `x = 3^a`.
fn exponent_bound_holds_exact(x: u64, n: u64) -> bool {
    let big_x = BigUint::from(x);
    let big_n = BigUint::from(n);
    for &(num, den, below) in LOG2_3_CONVERGENTS {
        let lhs = big_x.pow(den);
        let rhs = big_n.pow(num);
        if below {
            // num/den < log_2 3: x^den <= n^num forces x < n^(log_2 3).
            if lhs <= rhs {
                return true;
            }
        } else {
            // num/den > log_2 3: x^den >= n^num forces x > n^(log_2 3).
            if lhs >= rhs {
                return false;
            }
        }
    }
    unreachable!("log_2 3 convergent list exhausted comparing {x} against {n}")
}

/// Check the norm/supernorm sandwich for a non-unitary partition of norm
/// at least 5:
///
/// ```text
/// N < p_N <= supernorm <= N^(log 3 / log 2)
/// ```
///
/// The two left comparisons are integer arithmetic. The right one runs in
/// floating point with a relative guard band of 1e-9; anything closer
/// (notably the all-twos partitions, where equality is exact) is settled
/// by the convergent machinery above.
pub fn check_norm_inequality(lambda: &Partition, table: &PrimeTable) -> Result<bool> {
    if !lambda.is_non_unitary() {
        return Err(Error::invalid_argument(
            "norm inequality requires a partition with no unit part".to_string(),
        ));
    }
    let n = lambda.norm();
    if n < 5 {
        return Err(Error::invalid_argument(format!(
            "norm inequality is stated for norm >= 5, got {n}"
        )));
    }
    let p_n = table.nth_prime(n as usize)?;
    let supernorm = lambda.supernorm(table)?;
    if !(n < p_n && p_n <= supernorm) {
        return Ok(false);
    }

    // supernorm <= N^(log_2 3), i.e. ln(supernorm)*ln(2) <= ln(N)*ln(3).
    let lhs = (supernorm as f64).ln() * std::f64::consts::LN_2;
    let rhs = (n as f64).ln() * 3f64.ln();
    if (lhs - rhs).abs() > 1e-9 * rhs.abs() {
        return Ok(lhs < rhs);
    }

    // Near-tie. Exact equality happens only for the all-twos shape
    // (N = 2^a against supernorm 3^a); everything else is settled by the
    // convergents.
    let all_twos = lambda.parts.iter().all(|&p| p == 2);
    if all_twos {
        return Ok(true);
    }
    Ok(exponent_bound_holds_exact(supernorm, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divisor::divisor_count;

    fn table() -> PrimeTable {
        PrimeTable::build(10_000).unwrap()
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn construction_and_views() {
        assert!(Partition::new(vec![3, 0, 2]).is_err(), "zero parts are not parts");
        let lambda = p(&[2, 3, 2]);
        assert_eq!(lambda.parts(), &[3, 2, 2], "parts must be stored nonincreasing");
        assert_eq!(lambda.size(), 7);
        assert_eq!(lambda.len(), 3);
        assert_eq!(lambda.multiplicities(), vec![(2, 2), (3, 1)]);
        assert!(lambda.is_non_unitary());
        assert!(!p(&[4, 1]).is_non_unitary());
        assert!(Partition::empty().is_non_unitary());
    }

    #[test]
    fn norm_examples() {
        assert_eq!(Partition::empty().norm(), 1);
        assert_eq!(p(&[3, 2, 2]).norm(), 12);
        assert_eq!(p(&[5]).norm(), 5);
    }

    #[test]
    fn supernorm_examples() {
        let t = table();
        assert_eq!(Partition::empty().supernorm(&t).unwrap(), 1);
        assert_eq!(p(&[1]).supernorm(&t).unwrap(), 2);
        assert_eq!(p(&[3, 2, 2]).supernorm(&t).unwrap(), 45, "p3*p2*p2 = 5*3*3");
        assert_eq!(p(&[2, 1, 1]).supernorm(&t).unwrap(), 12, "p2*p1*p1 = 3*2*2");
        let too_big = p(&[2_000]);
        assert!(
            too_big.supernorm(&PrimeTable::build(100).unwrap()).is_err(),
            "supernorm beyond the table must error, not wrap"
        );
    }

    #[test]
    fn from_integer_examples() {
        let t = table();
        assert!(partition_from_integer(0, &t).is_err());
        assert_eq!(partition_from_integer(1, &t).unwrap(), Partition::empty());
        assert_eq!(partition_from_integer(45, &t).unwrap(), p(&[3, 2, 2]));
        assert_eq!(partition_from_integer(12, &t).unwrap(), p(&[2, 1, 1]));
        assert_eq!(partition_from_integer(9973, &t).unwrap(), p(&[1229]), "9973 is the 1229th prime");
        let small = PrimeTable::build(10).unwrap();
        assert!(
            partition_from_integer(26, &small).is_err(),
            "13 is outside a sieve built to 10"
        );
    }

    #[test]
    fn bijection_roundtrip_to_one_hundred_thousand() {
        let t = PrimeTable::build(100_000).unwrap();
        for m in 1..=100_000u64 {
            let lambda = partition_from_integer(m, &t).unwrap();
            assert_eq!(
                lambda.supernorm(&t).unwrap(),
                m,
                "supernorm(partition_from_integer({m})) failed to round-trip"
            );
        }
    }

    #[test]
    fn short_enumeration_examples() {
        assert!(enumerate_short_nonunitary(1).is_err());
        let twelve = enumerate_short_nonunitary(12).unwrap();
        assert_eq!(twelve, vec![p(&[12]), p(&[6, 2]), p(&[4, 3])]);
        let nine = enumerate_short_nonunitary(9).unwrap();
        assert_eq!(nine, vec![p(&[9]), p(&[3, 3])]);
        assert_eq!(enumerate_short_nonunitary(2).unwrap(), vec![p(&[2])]);
    }

    #[test]
    fn short_enumeration_counts_match_half_divisors() {
        for n in 2..=10_000u64 {
            let count = enumerate_short_nonunitary(n).unwrap().len() as u64;
            let expected = divisor_count(n).unwrap().div_ceil(2);
            assert_eq!(
                count, expected,
                "short non-unitary partitions of norm {n} must number ceil(d/2)"
            );
        }
    }

    #[test]
    fn full_enumeration_is_consistent() {
        // Spot-check the divisor-descent enumeration: norms, no unit
        // parts, no duplicates, and it contains everything the short
        // enumeration finds.
        for n in 2..=400u64 {
            let all = enumerate_nonunitary(n).unwrap();
            for lambda in &all {
                assert_eq!(lambda.norm(), n);
                assert!(lambda.is_non_unitary());
            }
            let mut dedup = all.clone();
            dedup.sort_by_key(|l| l.parts().to_vec());
            dedup.dedup();
            assert_eq!(dedup.len(), all.len(), "duplicate partition of norm {n}");
            let short = enumerate_short_nonunitary(n).unwrap();
            for s in &short {
                assert!(all.contains(s), "missing {:?} at norm {n}", s.parts());
            }
        }
        // 12 = 12, 6*2, 4*3, 3*2*2 — exactly one partition longer than 2.
        assert_eq!(enumerate_nonunitary(12).unwrap().len(), 4);
        assert_eq!(enumerate_nonunitary(1).unwrap(), vec![Partition::empty()]);
    }

    #[test]
    fn gap_equivalence_holds_for_small_indices() {
        let t = table();
        assert!(verify_gap_equivalence(1, &t).unwrap(), "interval [2,3)");
        assert!(verify_gap_equivalence(4, &t).unwrap(), "interval [7,11)");
        assert!(verify_gap_equivalence(25, &t).unwrap());
        for n in 1..=100 {
            assert!(
                verify_gap_equivalence(n, &t).unwrap(),
                "gap equivalence failed at n = {n}"
            );
        }
        assert!(verify_gap_equivalence(0, &t).is_err());
    }

    #[test]
    fn norm_inequality_examples() {
        let t = table();
        assert!(check_norm_inequality(&p(&[5]), &t).unwrap(), "N=5: 5 < 11 <= 11 <= 12.8");
        assert!(check_norm_inequality(&p(&[3, 2]), &t).unwrap(), "N=6: 6 < 13 <= 15 <= 17.0");
        assert!(
            check_norm_inequality(&p(&[2, 2]), &t).is_err(),
            "norm 4 is below the stated range"
        );
        assert!(
            check_norm_inequality(&p(&[4, 1]), &t).is_err(),
            "unit parts are outside the statement"
        );
    }

    #[test]
    fn norm_inequality_equality_case_is_exact() {
        let t = table();
        // All-twos partitions hit the right bound exactly: N = 2^a,
        // supernorm = 3^a = N^(log_2 3). The check must accept them.
        for a in [3u32, 4, 5, 6, 10] {
            let lambda = Partition::new(vec![2; a as usize]).unwrap();
            assert!(
                check_norm_inequality(&lambda, &t).unwrap(),
                "all-twos partition with {a} parts sits exactly on the bound"
            );
        }
    }

    #[test]
    fn norm_inequality_exhaustive_to_three_hundred() {
        // The sandwich is *almost* universal in this range. Exhaustive
        // enumeration finds exactly two exceptions, both to the middle
        // comparison: (4,3) has supernorm 35 below p_12 = 37, and (4,4)
        // has supernorm 49 below p_16 = 53. Everything else — 1523
        // partitions — passes. This test pins that census so any change
        // in the checker that silently blesses or widens the exceptions
        // shows up immediately.
        let t = table();
        let mut checked = 0u64;
        let mut failures: Vec<Vec<u32>> = Vec::new();
        for n in 5..=300u64 {
            for lambda in enumerate_nonunitary(n).unwrap() {
                if !check_norm_inequality(&lambda, &t).unwrap() {
                    failures.push(lambda.parts().to_vec());
                }
                checked += 1;
            }
        }
        assert_eq!(checked, 1_525, "enumeration census changed");
        assert_eq!(
            failures,
            vec![vec![4, 3], vec![4, 4]],
            "the exceptions to the sandwich must be exactly (4,3) and (4,4)"
        );
    }

    #[test]
    fn exact_exponent_comparison_lands_on_the_right_side_of_each_threshold() {
        // floor(n^(log_2 3)) computed at 40 decimal digits for a handful
        // of n; the convergent decision must accept the floor and reject
        // the next integer in every case.
        for (n, threshold) in [
            (6u64, 17u64),
            (10, 38),
            (100, 1_478),
            (300, 8_436),
            (12_345, 3_053_936),
        ] {
            assert!(
                exponent_bound_holds_exact(threshold, n),
                "{threshold} <= {n}^(log_2 3) must be accepted"
            );
            assert!(
                !exponent_bound_holds_exact(threshold + 1, n),
                "{} > {n}^(log_2 3) must be rejected",
                threshold + 1
            );
        }
    }
}
