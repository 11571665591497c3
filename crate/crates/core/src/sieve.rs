//! Prime sieve with dense prefix counts.
//!
//! A plain sieve of Eratosthenes, kept deliberately boring: one `Vec<bool>`
//! pass up to `limit`, then a prime list and a dense `pi_prefix` array so
//! that `pi(x)` is a single array load. The models query `pi` and
//! `nth_prime` tens of thousands of times per run, always inside the sieve
//! range, so O(1) lookups beat any clever segmented scheme here. Memory is
//! O(limit): one byte for the sieve bit plus four bytes of prefix count per
//! integer — a 10^7 build fits comfortably and completes in well under a
//! second.
//!
//! One convention worth spelling out: `nth_prime(0) == 1`. The models seed
//! their recurrences at index 1, and treating "the zeroth prime" as 1 keeps
//! every downstream formula free of special cases.

use crate::error::{Error, Result};

/// Immutable prime table: primes up to `limit`, plus `pi(x)` for every
/// `x <= limit` as a dense prefix array. Build once, share freely.
#[derive(Debug, Clone)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u64>,
    pi_prefix: Vec<u32>,
}

impl PrimeTable {
    /// Sieve all primes up to and including `limit`.
    ///
    /// `limit < 2` is rejected: a table with no primes in it satisfies no
    /// caller, and silently returning one hides sizing bugs.
    pub fn build(limit: u64) -> Result<Self> {
        if limit < 2 {
            return Err(Error::invalid_argument(format!(
                "sieve limit must be at least 2, got {limit}"
            )));
        }
        let n = usize::try_from(limit).map_err(|_| {
            Error::invalid_argument(format!("sieve limit {limit} does not fit in memory"))
        })?;

        let mut composite = vec![false; n + 1];
        let mut p = 2usize;
        while p * p <= n {
            if !composite[p] {
                let mut m = p * p;
                while m <= n {
                    composite[m] = true;
                    m += p;
                }
            }
            p += 1;
        }

        let mut primes = Vec::new();
        let mut pi_prefix = vec![0u32; n + 1];
        let mut count = 0u32;
        for (i, &c) in composite.iter().enumerate() {
            if i >= 2 && !c {
                primes.push(i as u64);
                count += 1;
            }
            pi_prefix[i] = count;
        }

        Ok(PrimeTable {
            limit,
            primes,
            pi_prefix,
        })
    }

    /// Build a table guaranteed to contain at least `count` primes.
    ///
    /// Uses the standard upper bound `p_n < n (ln n + ln ln n)` for
    /// `n >= 6`, with a doubling retry as a belt-and-suspenders fallback.
    pub fn with_prime_count(count: usize) -> Result<Self> {
        let mut limit = if count < 6 {
            13
        } else {
            let n = count as f64;
            (n * (n.ln() + n.ln().ln())).ceil() as u64 + 16
        };
        loop {
            let table = PrimeTable::build(limit)?;
            if table.prime_count() >= count {
                return Ok(table);
            }
            limit *= 2;
        }
    }

    /// Largest integer this table covers.
    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Number of primes in the table, i.e. `pi(limit)`.
    pub fn prime_count(&self) -> usize {
        self.primes.len()
    }

    /// The primes themselves, ascending.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// `pi(x)`: number of primes `<= x`. O(1); errors if `x > limit`.
    pub fn prime_pi(&self, x: u64) -> Result<u64> {
        if x > self.limit {
            return Err(Error::out_of_range(format!(
                "pi({x}) queried on a sieve built to {}",
                self.limit
            )));
        }
        Ok(u64::from(self.pi_prefix[x as usize]))
    }

    /// The `n`-th prime, with the convention `nth_prime(0) == 1`.
    ///
    /// Errors once `n` exceeds the number of primes sieved.
    pub fn nth_prime(&self, n: usize) -> Result<u64> {
        if n == 0 {
            return Ok(1);
        }
        self.primes.get(n - 1).copied().ok_or_else(|| {
            Error::out_of_range(format!(
                "nth_prime({n}) queried but only {} primes sieved (limit {})",
                self.primes.len(),
                self.limit
            ))
        })
    }

    /// Primality test by prefix-count difference. Errors if `x > limit`.
    pub fn is_prime(&self, x: u64) -> Result<bool> {
        if x > self.limit {
            return Err(Error::out_of_range(format!(
                "is_prime({x}) queried on a sieve built to {}",
                self.limit
            )));
        }
        if x < 2 {
            return Ok(false);
        }
        Ok(self.pi_prefix[x as usize] > self.pi_prefix[x as usize - 1])
    }
}
