//! The acceptance gate: one test per published claim, each asserting the
//! full strength of the claim.
//!
//! Three tests in this file are EXPECTED to fail, and their failure is
//! the correct outcome — the library refuses to bend its arithmetic to
//! match reference data that honest recomputation contradicts:
//!
//! * `criterion_01_table_one_golden` — the calibrated model's count at
//!   one million is 78576, the reference prints 78575 (one cell of 36).
//! * `criterion_03_table_three_golden` — the r=20 count at 100 is 21
//!   (the 21st value is exactly 100, and checkpoint values count); the
//!   reference prints 20.
//! * `criterion_06_partition_suites` — the norm/supernorm chain has two
//!   genuine counterexamples, parts [4,3] (norm 12: 37 > 35) and [4,4]
//!   (norm 16: 53 > 49), among the 1525 non-unitary partitions with norm
//!   in [5, 300].
//!
//! Every other criterion passes. The README walks through all three
//! divergences; the rest of the suite pins them as *expected* behavior
//! so a regression in either direction is caught.

use std::sync::LazyLock;
use std::time::{Duration, Instant};

use partition_primes::almost_prime::SemiprimeCounter;
use partition_primes::calibrate::{reproduce_table, ReferenceTable, TABLE_CHECKPOINTS};
use partition_primes::divisor::{ceil_half_divisor_prefix, DivisorTable};
use partition_primes::models::{
    model_sequence_up_to, FloorVariant, Model2Source, ModelContext, ModelParams, ModelVariant,
};
use partition_primes::partitions::{
    check_norm_inequality, enumerate_nonunitary, enumerate_short_nonunitary,
    verify_gap_equivalence,
};
use partition_primes::sieve::PrimeTable;

/// Shared fixtures, sized for the 10^6 checkpoints plus Model 2's prime
/// lookups just beyond them. Built once; the criterion that gets there
/// first pays the build inside its (generous) time budget.
static PRIMES: LazyLock<PrimeTable> =
    LazyLock::new(|| PrimeTable::build(1_200_000).expect("sieve to 1.2e6"));
static SEMIPRIMES: LazyLock<SemiprimeCounter> =
    LazyLock::new(|| SemiprimeCounter::build(1_200_000).expect("semiprime prefix to 1.2e6"));

fn full_ctx() -> ModelContext<'static> {
    ModelContext::new(&PRIMES, &SEMIPRIMES)
}

fn assert_within(elapsed: Duration, budget_secs: u64, what: &str) {
    assert!(
        elapsed <= Duration::from_secs(budget_secs),
        "{what} took {elapsed:?}, budget is {budget_secs}s"
    );
}

fn calibrated() -> ModelParams {
    ModelParams::new(ModelVariant::Model3)
        .with_r(6)
        .with_t(0.11)
        .expect("calibrated t lies in [0, 1]")
}

#[test]
fn criterion_01_table_one_golden() {
    let start = Instant::now();
    let cmp = reproduce_table(ReferenceTable::One, &full_ctx()).expect("table 1 reproduction");
    let elapsed = start.elapsed();
    let cells = cmp.expected_rows.len() * (cmp.headers.len() - 1);
    assert_eq!(cells, 36, "six rows by six value columns");
    assert!(
        cmp.is_match(),
        "table 1 deviates from the reference in {} of {cells} cells: {:?}",
        cmp.mismatches.len(),
        cmp.mismatches
    );
    assert_within(elapsed, 60, "table 1 reproduction");
}

#[test]
fn criterion_02_table_two_golden() {
    let start = Instant::now();
    let ctx = ModelContext {
        primes: Some(&PRIMES),
        semiprimes: None,
    };
    let cmp = reproduce_table(ReferenceTable::Two, &ctx).expect("table 2 reproduction");
    let elapsed = start.elapsed();
    assert!(
        cmp.is_match(),
        "table 2 deviates from the reference: {:?}",
        cmp.mismatches
    );
    assert_within(elapsed, 20, "table 2 reproduction");
}

#[test]
fn criterion_03_table_three_golden() {
    let start = Instant::now();
    let ctx = ModelContext {
        primes: Some(&PRIMES),
        semiprimes: None,
    };
    let cmp = reproduce_table(ReferenceTable::Three, &ctx).expect("table 3 reproduction");
    let elapsed = start.elapsed();
    assert!(
        cmp.is_match(),
        "table 3 deviates from the reference in {} cells: {:?}",
        cmp.mismatches.len(),
        cmp.mismatches
    );
    assert_within(elapsed, 20, "table 3 reproduction");
}

#[test]
fn criterion_04_initial_sequences() {
    let classic: &[u64] = &[2, 3, 5, 7, 11, 13, 17, 19, 23, 27];
    let ctx = full_ctx();
    for params in [
        ModelParams::new(ModelVariant::Model1),
        ModelParams::new(ModelVariant::Model2),
        ModelParams::new(ModelVariant::Model2Star),
        ModelParams::new(ModelVariant::Model3), // r = 0, t = 0
    ] {
        let seq = model_sequence_up_to(27, &params, &ctx).expect("short generation");
        assert_eq!(
            seq.values,
            classic,
            "{} must open 2,3,5,7,11,13,17,19,23,27",
            params.variant.as_str()
        );
    }
    let seq = model_sequence_up_to(23, &calibrated(), &ctx).expect("short generation");
    assert_eq!(
        seq.values,
        [2, 3, 8, 10, 14, 16, 21, 23],
        "the calibrated model's opening values"
    );
}

#[test]
fn criterion_05_divisor_identity() {
    let start = Instant::now();
    let table = DivisorTable::build(100_000).expect("divisor sieve to 1e5");
    let mut mismatches = 0u64;
    for n in 2..=100_000u64 {
        let prefix = table.ceil_half_prefix(n).expect("in range");
        let closed = ceil_half_divisor_prefix(n).expect("valid n");
        if prefix != closed {
            mismatches += 1;
            if mismatches == 1 {
                eprintln!("first divisor-identity mismatch at n = {n}: {prefix} vs {closed}");
            }
        }
    }
    let elapsed = start.elapsed();
    assert_eq!(
        mismatches, 0,
        "prefix-sum and hyperbola routes must agree for every 2 <= n <= 1e5"
    );
    assert_within(elapsed, 5, "divisor identity sweep");
}

#[test]
fn criterion_06_partition_suites() {
    let start = Instant::now();

    // Short-partition count identity for 2 <= n <= 1e4.
    for n in 2..=10_000u64 {
        let count = enumerate_short_nonunitary(n).expect("valid n").len() as u64;
        let expected = partition_primes::divisor::divisor_count(n)
            .expect("valid n")
            .div_ceil(2);
        assert_eq!(
            count, expected,
            "partitions of {n} into at most two non-unit parts must number ceil(d/2)"
        );
    }

    // Gap bijection recount for 1 <= n <= 100.
    let primes = PrimeTable::with_prime_count(102).expect("first 102 primes");
    for n in 1..=100 {
        assert!(
            verify_gap_equivalence(n, &primes).expect("gap recount"),
            "gap {n} must pull back bijectively onto its partitions"
        );
    }

    // Norm/supernorm chain for every non-unitary partition with norm in
    // [5, 300].
    let primes = PrimeTable::with_prime_count(301).expect("first 301 primes");
    let mut checked = 0u64;
    let mut failures = Vec::new();
    for n in 5..=300u64 {
        for partition in enumerate_nonunitary(n).expect("valid n") {
            if !partition.is_non_unitary() {
                continue;
            }
            checked += 1;
            if !check_norm_inequality(&partition, &primes).expect("chain evaluation") {
                failures.push(format!(
                    "parts {:?}: norm {}, prime {}, supernorm {}",
                    partition.parts(),
                    partition.norm(),
                    primes
                        .nth_prime(partition.norm() as usize)
                        .expect("prime available"),
                    partition.supernorm(&primes).expect("supernorm available"),
                ));
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(
        failures.is_empty(),
        "norm chain must hold for all {checked} partitions, but {} violate it: {failures:?}",
        failures.len()
    );
    assert_within(elapsed, 30, "partition suites");
}

#[test]
fn criterion_07_semiprime_oracle() {
    let counter = SemiprimeCounter::build(100_000).expect("semiprime prefix to 1e5");
    assert_eq!(
        counter.verify_against_bruteforce(100_000),
        None,
        "prefix semiprime counts must match brute-force factorization for every x <= 1e5"
    );
}

#[test]
fn criterion_08_floor_star_invariance() {
    let ctx = ModelContext::empty();
    for params in [ModelParams::new(ModelVariant::Model2Star), calibrated()] {
        let starred = params.with_floor(FloorVariant::EvenStar);
        let plain_seq =
            model_sequence_up_to(1_000_000, &params, &ctx).expect("modified-floor run");
        let star_seq =
            model_sequence_up_to(1_000_000, &starred, &ctx).expect("even-star run");
        for &x in &TABLE_CHECKPOINTS {
            assert_eq!(
                plain_seq.count_up_to(x),
                star_seq.count_up_to(x),
                "{} count at {x} must not depend on the floor variant",
                params.variant.as_str()
            );
        }
        assert_eq!(star_seq.values[0], 2);
        for (i, &v) in star_seq.values.iter().enumerate().skip(1) {
            assert!(
                v % 2 == 1,
                "{} even-star value {v} at index {} must be odd",
                params.variant.as_str(),
                i + 1
            );
        }
    }
}

#[test]
fn criterion_09_reduction_identities() {
    let ctx = ModelContext::empty();
    let base = model_sequence_up_to(
        1_000_000,
        &ModelParams::new(ModelVariant::Model2Star),
        &ctx,
    )
    .expect("m2star to 1e6");
    let via_m3 = model_sequence_up_to(1_000_000, &ModelParams::new(ModelVariant::Model3), &ctx)
        .expect("m3(0,0) to 1e6");
    assert_eq!(
        via_m3.values, base.values,
        "m3 at r=0, t=0 must equal m2star value-for-value to 1e6"
    );
    for r in [0u32, 1, 6, 10, 20] {
        let lhs = model_sequence_up_to(
            1_000_000,
            &ModelParams::new(ModelVariant::Model3).with_r(r),
            &ctx,
        )
        .expect("m3(r,0) to 1e6");
        let rhs = model_sequence_up_to(
            1_000_000,
            &ModelParams::new(ModelVariant::Model2StarR).with_r(r),
            &ctx,
        )
        .expect("m2star-r to 1e6");
        assert_eq!(
            lhs.values, rhs.values,
            "m3 at (r={r}, t=0) must equal m2star-r({r}) value-for-value to 1e6"
        );
    }
}

#[test]
fn criterion_10_model_two_source_resolution() {
    // The reference's Model-2 column, from the shipped data file.
    let reference_column: [u64; 6] = [4, 26, 168, 1212, 9435, 77322];
    let ctx = full_ctx();
    let mut matching = Vec::new();
    for source in [Model2Source::TruePrimes, Model2Source::SelfReferential] {
        let params = ModelParams::new(ModelVariant::Model2).with_model2_source(source);
        let seq = model_sequence_up_to(1_000_000, &params, &ctx).expect("model 2 to 1e6");
        let column: Vec<u64> = TABLE_CHECKPOINTS.iter().map(|&x| seq.count_up_to(x)).collect();
        if column == reference_column {
            matching.push(source);
        } else {
            eprintln!("{source:?} produces {column:?}, reference column is {reference_column:?}");
        }
    }
    assert_eq!(
        matching,
        [Model2Source::TruePrimes],
        "exactly one prime source must reproduce the reference's Model-2 column"
    );
    assert_eq!(
        Model2Source::default(),
        Model2Source::TruePrimes,
        "the reproducing source must be the frozen default"
    );
}

/// Not a pass/fail criterion: the systematic over/under-estimation
/// pattern of the Model-2 family, reported for the record (visible with
/// --nocapture) and never asserted.
#[test]
fn sign_report_for_model_two_family() {
    let ctx = full_ctx();
    for params in [
        ModelParams::new(ModelVariant::Model2),
        ModelParams::new(ModelVariant::Model2Star),
    ] {
        let seq = model_sequence_up_to(1_000_000, &params, &ctx).expect("run to 1e6");
        let signs: Vec<String> = TABLE_CHECKPOINTS
            .iter()
            .map(|&x| {
                let model = seq.count_up_to(x) as i64;
                let truth = PRIMES.prime_pi(x).expect("within sieve") as i64;
                let sign = match (model - truth).signum() {
                    1 => "+",
                    -1 => "-",
                    _ => "0",
                };
                format!("{x}:{sign}{}", (model - truth).abs())
            })
            .collect();
        println!(
            "sign(model - true) for {}: {}",
            params.variant.as_str(),
            signs.join(" ")
        );
    }
}
