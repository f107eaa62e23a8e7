//! Batch evaluation over ranges of orders and lists of inputs.
//!
//! With the `parallel` feature (on by default) the top-level functions run
//! on the rayon thread pool; without it they fall back to the sequential
//! implementations. Both variants are always reachable through
//! [`sequential`] and, when enabled, [`parallel`], and return identical
//! results in identical order.

use std::ops::RangeInclusive;

use crate::counting::{brute_force_count, c_of_n, order_range_for_count, GraphOrder};
use crate::Result;

#[cfg(feature = "parallel")]
pub use parallel::{c_values, map_ordered, oracle_mismatches, range_membership};
#[cfg(not(feature = "parallel"))]
pub use sequential::{c_values, map_ordered, oracle_mismatches, range_membership};

/// A disagreement between `c_of_n` and the brute-force count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mismatch {
    pub n: u64,
    pub closed_form: u64,
    pub brute_force: u64,
}

/// Result of scanning every order in the range for one alpha.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RangeScan {
    pub alpha: u64,
    /// Orders in the range whose c(n) equals alpha.
    pub matching: u64,
    /// Orders in the range whose c(n) differs from alpha.
    pub mismatching: u64,
}

fn c_u64(n: u64) -> u64 {
    c_of_n(&GraphOrder::from_u64(n).expect("sweeps start at n = 2"))
}

fn compare(n: u64) -> Option<Mismatch> {
    let closed_form = c_u64(n);
    let brute_force = brute_force_count(n);
    (closed_form != brute_force).then_some(Mismatch {
        n,
        closed_form,
        brute_force,
    })
}

fn range_bounds(alpha: u64) -> Result<(u64, u64)> {
    let r = order_range_for_count(alpha)?;
    let to_u64 = |v: &num_bigint::BigUint| {
        u64::try_from(v)
            .map_err(|_| crate::Error::Internal(format!("range for alpha {alpha} exceeds u64")))
    };
    Ok((to_u64(&r.min_n)?, to_u64(&r.max_n)?))
}

pub mod sequential {
    use super::*;

    pub fn map_ordered<T, U, F>(items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Sync + Send,
    {
        items.iter().map(f).collect()
    }

    /// `c(n)` for every `n` in the range. The range must start at 2 or later.
    pub fn c_values(range: RangeInclusive<u64>) -> Vec<u64> {
        range.map(c_u64).collect()
    }

    /// Every `n` in the range where the closed form and the brute-force
    /// count disagree.
    pub fn oracle_mismatches(range: RangeInclusive<u64>) -> Vec<Mismatch> {
        range.filter_map(compare).collect()
    }

    pub fn range_membership(alpha: u64) -> Result<RangeScan> {
        let (lo, hi) = range_bounds(alpha)?;
        let matching = (lo..=hi).filter(|&n| c_u64(n) == alpha).count() as u64;
        Ok(RangeScan {
            alpha,
            matching,
            mismatching: hi - lo + 1 - matching,
        })
    }
}

#[cfg(feature = "parallel")]
pub mod parallel {
    use super::*;
    use rayon::prelude::*;

    pub fn map_ordered<T, U, F>(items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Sync + Send,
    {
        items.par_iter().map(f).collect()
    }

    pub fn c_values(range: RangeInclusive<u64>) -> Vec<u64> {
        range.into_par_iter().map(c_u64).collect()
    }

    pub fn oracle_mismatches(range: RangeInclusive<u64>) -> Vec<Mismatch> {
        range.into_par_iter().filter_map(compare).collect()
    }

    pub fn range_membership(alpha: u64) -> Result<RangeScan> {
        let (lo, hi) = range_bounds(alpha)?;
        let matching = (lo..=hi)
            .into_par_iter()
            .filter(|&n| c_u64(n) == alpha)
            .count() as u64;
        Ok(RangeScan {
            alpha,
            matching,
            mismatching: hi - lo + 1 - matching,
        })
    }
}
