//! Deterministic models of the prime sequence built from divisor sums and
//! partition statistics.
//!
//! The starting point is an exact telescoping identity: if `d(k)` is the
//! number of divisors of `k`, the quantity
//!
//! ```text
//! S(n) = 2 * sum_{j=1}^{n-1} ceil(d(j)/2)
//! ```
//!
//! grows, step by step, like the prime sequence, and `1 + S(n)` (Model 1)
//! is already a surprisingly good deterministic stand-in for the n-th prime.
//! Adding a correction term for the density of semiprimes — either the exact
//! count `pi_2` (Model 2) or its smooth `n log log n` surrogate (Model 2*)
//! and a two-parameter calibrated refinement (Model 3) — produces sequences
//! whose counting functions track `pi(x)` to within a few parts in ten
//! thousand at `x = 10^6`.
//!
//! The crate provides:
//!
//! * [`sieve`] — a plain Eratosthenes [`sieve::PrimeTable`] with dense
//!   prefix counts, the exact-arithmetic backbone of everything else;
//! * [`divisor`] — divisor-count tables, the Dirichlet-hyperbola divisor
//!   summatory function, and the `S(n)` prefix above, computed two
//!   independent ways;
//! * [`almost_prime`] — exact semiprime counting `pi_2(x)` and small-scale
//!   k-almost-prime counts via a smallest-prime-factor sieve;
//! * [`partitions`] — integer partitions with the *norm* (product of
//!   parts) and *supernorm* (product of indexed primes) statistics, the
//!   supernorm bijection between partitions and positive integers, and
//!   exhaustive verification of the norm/supernorm inequalities;
//! * [`models`] — the model sequences themselves, with both floor
//!   conventions and both Model-2 prime sources;
//! * [`calibrate`] — checkpoint evaluation, grid sweeps over the Model-3
//!   parameters `(r, t)`, and reproduction of the three reference tables;
//! * [`dd`] — double-double (~31 significant digit) arithmetic used to
//!   re-evaluate floor arguments that land suspiciously close to an
//!   integer, so no model value ever depends on the last ulp of an `f64`.
//!
//! All counting is exact integer arithmetic; floating point only ever
//! enters through the `log log` terms of Models 2*/3, and those are guarded
//! as described in [`models`].

pub mod almost_prime;
pub mod calibrate;
pub mod dd;
pub mod divisor;
pub mod error;
pub mod models;
pub mod partitions;
pub mod sieve;

pub use error::{Error, Result};
