//! Exhaustive reference evaluation of the estimate.
//!
//! Enumerates every subset of the expanded factor copies as a bitmask. It
//! shares nothing with the knapsack in [`crate::estimate`] and exists to
//! cross-check it.

use crate::error::{Error, Result};
use crate::weights::WeightedSequence;

/// Largest copy count the enumeration accepts (2^24 subsets).
pub const MAX_ORACLE_COPIES: usize = 24;

/// `dmax(k)` for `k = 1..=W` over `(weight, dimension)` items.
pub fn brute_force_dmax(items: &[(u32, u32)]) -> Result<Vec<i64>> {
    if items.len() > MAX_ORACLE_COPIES {
        return Err(Error::OracleTooLarge(items.len(), MAX_ORACLE_COPIES));
    }
    let total: u64 = items.iter().map(|&(w, _)| u64::from(w)).sum();
    // best[w] = largest dimension of a nonempty subset of weight exactly w
    let mut best = vec![-1i64; total as usize + 1];
    for mask in 1u32..(1u32 << items.len()) {
        let (mut w, mut d) = (0usize, 0i64);
        for (i, &(wi, di)) in items.iter().enumerate() {
            if mask >> i & 1 == 1 {
                w += wi as usize;
                d += i64::from(di);
            }
        }
        best[w] = best[w].max(d);
    }
    let mut running = -1i64;
    Ok((1..=total as usize)
        .map(|k| {
            running = running.max(best[k]);
            running
        })
        .collect())
}

/// Base value computed from [`brute_force_dmax`].
pub fn brute_force_wct(s: &WeightedSequence) -> Result<i64> {
    let table = brute_force_dmax(&s.items())?;
    Ok(1 + s.weight() as i64 + table.iter().sum::<i64>())
}
