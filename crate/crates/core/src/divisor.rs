//! Divisor counts, the divisor summatory function, and the telescoped
//! prefix sum that drives every model in this crate.
//!
//! The central quantity is
//!
//! ```text
//! S(n) = 2 * sum_{j=1}^{n-1} ceil(d(j)/2)          (n >= 2)
//! ```
//!
//! where `d(j)` counts divisors. Model 1 is literally `1 + S(n)`, and the
//! refined models add correction terms on top, so `S` must be cheap and —
//! more importantly — *provably right*. It is therefore computed along two
//! independent routes:
//!
//! 1. a sieved table of `d(j)` with a running prefix sum
//!    ([`DivisorTable::ceil_half_prefix`]), O(limit log limit) to build and
//!    O(1) to query, extensible in place as a generator outgrows it; and
//! 2. a closed form with no table at all
//!    ([`ceil_half_divisor_prefix`]): since `ceil(d(j)/2)` exceeds
//!    `d(j)/2` by exactly 1/2 precisely when `j` is a square,
//!    `S(n) = D(n-1) + floor(sqrt(n-1))`, with `D` the divisor summatory
//!    function evaluated by Dirichlet's hyperbola method in O(sqrt n).
//!
//! The two routes agreeing on every `n` is one of the acceptance checks.
//! All accumulators are 64-bit; the debug build traps on overflow, and the
//! ranges used here (`n <= 10^7`) sit far below any 64-bit boundary.

use crate::error::{Error, Result};

/// Number of divisors of `k` by trial division in O(sqrt k).
///
/// `k = 0` is rejected — every positive integer divides 0, so the count is
/// not defined.
pub fn divisor_count(k: u64) -> Result<u64> {
    if k == 0 {
        return Err(Error::invalid_argument(
            "divisor_count(0) is undefined".to_string(),
        ));
    }
    let mut count = 0;
    let root = k.isqrt();
    for a in 1..=root {
        if k.is_multiple_of(a) {
            count += 2;
        }
    }
    if root * root == k {
        count -= 1;
    }
    Ok(count)
}

/// Divisor summatory function `D(x) = sum_{k<=x} d(k)` via the Dirichlet
/// hyperbola identity
///
/// ```text
/// D(x) = 2 * sum_{k<=sqrt(x)} floor(x/k) - floor(sqrt(x))^2
/// ```
///
/// in O(sqrt x). `D(0) = 0` by the empty sum.
pub fn divisor_summatory(x: u64) -> u64 {
    if x == 0 {
        return 0;
    }
    let root = x.isqrt();
    let mut sum = 0u64;
    for k in 1..=root {
        sum += x / k;
    }
    2 * sum - root * root
}

/// `S(n) = 2 * sum_{j<n} ceil(d(j)/2)` without any table, via
/// `D(n-1) + floor(sqrt(n-1))`.
///
/// The square-root correction is exact: `2*ceil(d(j)/2) - d(j)` is 1 when
/// `j` is a perfect square (odd divisor count) and 0 otherwise, and the
/// number of squares below `n` is `floor(sqrt(n-1))`.
pub fn ceil_half_divisor_prefix(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::invalid_argument(format!(
            "ceil_half_divisor_prefix needs n >= 2, got {n}"
        )));
    }
    Ok(divisor_summatory(n - 1) + (n - 1).isqrt())
}

/// Sieved divisor-count table with the `ceil(d/2)` prefix sum attached.
///
/// `d[k]` is stored for `1 <= k <= limit`; `ceil_half_prefix(n)` answers
/// `S(n)` for `2 <= n <= limit + 1`. The table can be grown in place with
/// [`extend_to`](DivisorTable::extend_to) — the model generators start
/// small and double as the sequence index climbs.
///
/// Immutable after build as far as readers are concerned; extension takes
/// `&mut self`, so exclusive ownership is the synchronization story.
#[derive(Debug, Clone)]
pub struct DivisorTable {
    limit: u64,
    /// d[k] at index k; index 0 unused.
    d: Vec<u32>,
    /// prefix[j] = sum_{i<=j} ceil(d(i)/2); index 0 is 0.
    prefix: Vec<u64>,
}

/// Build a [`DivisorTable`] up to `limit` by the classic O(limit log limit)
/// multiple-marking sweep.
pub fn build_divisor_table(limit: u64) -> Result<DivisorTable> {
    DivisorTable::build(limit)
}

impl DivisorTable {
    pub fn build(limit: u64) -> Result<Self> {
        if limit < 2 {
            return Err(Error::invalid_argument(format!(
                "divisor table limit must be at least 2, got {limit}"
            )));
        }
        let mut table = DivisorTable {
            limit: 1,
            d: vec![0, 1],
            prefix: vec![0, 1],
        };
        table.extend_to(limit)?;
        Ok(table)
    }

    /// Grow the table so it covers `new_limit`; no-op if it already does.
    ///
    /// Only the new block `(old, new_limit]` is swept: every `i` marks just
    /// its multiples inside the block, then the prefix sum is continued.
    /// Amortized over doubling growth this costs the same as building at
    /// the final size directly.
    pub fn extend_to(&mut self, new_limit: u64) -> Result<()> {
        if new_limit <= self.limit {
            return Ok(());
        }
        let old = usize::try_from(self.limit).expect("existing limit fits usize");
        let new = usize::try_from(new_limit).map_err(|_| {
            Error::invalid_argument(format!("divisor table limit {new_limit} does not fit in memory"))
        })?;

        self.d.resize(new + 1, 0);
        for i in 1..=new {
            // first multiple of i strictly above the old limit
            let mut m = (old / i + 1) * i;
            while m <= new {
                self.d[m] += 1;
                m += i;
            }
        }

        self.prefix.reserve(new - old);
        for j in old + 1..=new {
            let dj = u64::from(self.d[j]);
            let last = self.prefix[j - 1];
            self.prefix.push(last + dj.div_ceil(2));
        }
        self.limit = new_limit;
        Ok(())
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// `d(k)` from the table; errors outside `1..=limit`.
    pub fn divisor_count_at(&self, k: u64) -> Result<u64> {
        if k == 0 {
            return Err(Error::invalid_argument(
                "divisor_count_at(0) is undefined".to_string(),
            ));
        }
        if k > self.limit {
            return Err(Error::out_of_range(format!(
                "d({k}) queried on a table built to {}",
                self.limit
            )));
        }
        Ok(u64::from(self.d[k as usize]))
    }

    /// `S(n)` from the stored prefix; requires `2 <= n <= limit + 1`.
    pub fn ceil_half_prefix(&self, n: u64) -> Result<u64> {
        if n < 2 {
            return Err(Error::invalid_argument(format!(
                "ceil_half_prefix needs n >= 2, got {n}"
            )));
        }
        if n - 1 > self.limit {
            return Err(Error::out_of_range(format!(
                "S({n}) needs divisor counts up to {} but the table stops at {}",
                n - 1,
                self.limit
            )));
        }
        Ok(2 * self.prefix[(n - 1) as usize])
    }
}
