//! Counting component-size pairs of disconnected graphs of a given order.
//!
//! A graph of order `n` splits into two components in `floor(n/2)` ways.
//! Only the splits `(k, n - k)` with `n - k >= 2^k - 1` survive Pálfy's
//! inequality, and since `2^k + k - 1` is strictly increasing in `k` the
//! survivors are exactly `k = 1..=c(n)` where
//!
//! ```text
//! c(n) = max { alpha >= 1 : n >= 2^alpha + alpha - 1 }
//! ```
//!
//! Consequently `c(n) = alpha` holds on the interval
//! `[2^alpha + alpha - 1, 2^(alpha+1) + alpha - 1]`, which has
//! `2^alpha + 1` members.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::palfy::{pair_satisfies_inequality_u64, pow2, ComponentPair};
use crate::{Error, Result};

/// Number of vertices of a graph that may split into two components; at
/// least 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphOrder(BigUint);

impl GraphOrder {
    pub fn new(n: BigUint) -> Result<Self> {
        if n < BigUint::from(2u32) {
            return Err(Error::OrderTooSmall(n.to_string()));
        }
        Ok(Self(n))
    }

    pub fn from_u64(n: u64) -> Result<Self> {
        Self::new(BigUint::from(n))
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }
}

/// Parses an unbounded decimal string. `_` and `,` digit separators are
/// stripped first.
impl FromStr for GraphOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let n = parse_decimal(s)?;
        Self::new(n)
    }
}

impl fmt::Display for GraphOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Parses a non-negative decimal integer of any length, ignoring `_` and
/// `,` separators.
pub fn parse_decimal(s: &str) -> Result<BigUint> {
    let trimmed = s.trim();
    let digits: String = trimmed.chars().filter(|&c| c != '_' && c != ',').collect();
    let digits = digits.strip_prefix('+').unwrap_or(&digits);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::InvalidToken(trimmed.to_string()));
    }
    BigUint::parse_bytes(digits.as_bytes(), 10)
        .ok_or_else(|| Error::InvalidToken(trimmed.to_string()))
}

/// `floor(n / 2)`: the number of unordered splits of `n` into two positive
/// parts, with no further constraint.
pub fn raw_pair_count(n: &GraphOrder) -> BigUint {
    n.value() >> 1u32
}

/// The number of component-size pairs of an order-`n` graph that satisfy
/// Pálfy's inequality.
pub fn c_of_n(n: &GraphOrder) -> u64 {
    let n = n.value();
    // threshold(alpha) = 2^alpha + alpha - 1; threshold(1) = 2 <= n.
    let mut alpha = 1u64;
    let mut power = BigUint::from(2u32);
    loop {
        power <<= 1u32;
        let next = &power + alpha; // 2^(alpha+1) + (alpha+1) - 1
        if *n < next {
            return alpha;
        }
        alpha += 1;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteForceConfig {
    /// Largest `n` the linear scan will accept.
    pub max_n: u64,
}

impl Default for BruteForceConfig {
    fn default() -> Self {
        Self { max_n: 1_000_000 }
    }
}

/// Counts the surviving splits of `n` one at a time, testing every
/// `k in 1..=floor(n/2)` against the inequality. Linear in `n`, so the
/// order is capped by `config.max_n`.
pub fn brute_force_c(n: &GraphOrder, config: &BruteForceConfig) -> Result<u64> {
    let out_of_bound = || Error::OutsideBruteForceBound {
        n: n.to_string(),
        bound: config.max_n,
    };
    let n = n.value().to_u64().ok_or_else(out_of_bound)?;
    if n > config.max_n {
        return Err(out_of_bound());
    }
    Ok(brute_force_count(n))
}

pub(crate) fn brute_force_count(n: u64) -> u64 {
    (1..=n / 2)
        .filter(|&k| pair_satisfies_inequality_u64(k, n - k).expect("both parts are positive"))
        .count() as u64
}

/// The surviving pairs `(1, n-1), (2, n-2), ..., (c(n), n-c(n))`, smaller
/// size first.
pub fn valid_pairs(n: &GraphOrder) -> Vec<ComponentPair> {
    let c = c_of_n(n);
    (1..=c)
        .map(|k| {
            ComponentPair::new(BigUint::from(k), n.value() - k)
                .expect("c(n) < n, so both parts are positive")
        })
        .collect()
}

/// The inclusive interval of graph orders `n` with `c(n) = alpha`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderRange {
    pub alpha: u64,
    pub min_n: BigUint,
    pub max_n: BigUint,
}

impl OrderRange {
    /// `max_n - min_n + 1`, which always equals `2^alpha + 1`.
    pub fn cardinality(&self) -> BigUint {
        &self.max_n - &self.min_n + 1u32
    }

    pub fn contains(&self, n: &BigUint) -> bool {
        &self.min_n <= n && n <= &self.max_n
    }
}

/// Largest alpha whose range endpoints are materialized; `2^MAX_ALPHA`
/// already takes 8 MiB.
pub const MAX_ALPHA: u64 = 1 << 26;

pub fn order_range_for_count(alpha: u64) -> Result<OrderRange> {
    if alpha < 1 {
        return Err(Error::AlphaTooSmall(alpha));
    }
    if alpha > MAX_ALPHA {
        return Err(Error::AlphaTooLarge(alpha.to_string()));
    }
    let min_n = pow2(alpha) + alpha - 1u32;
    let max_n = pow2(alpha + 1) + alpha - 1u32;
    Ok(OrderRange {
        alpha,
        min_n,
        max_n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::pow;

    fn order(n: u64) -> GraphOrder {
        GraphOrder::from_u64(n).unwrap()
    }

    fn pow10(e: usize) -> GraphOrder {
        GraphOrder::new(pow(BigUint::from(10u32), e)).unwrap()
    }

    fn pairs(n: u64) -> Vec<(u64, u64)> {
        valid_pairs(&order(n))
            .iter()
            .map(|p| (p.smaller().to_u64().unwrap(), p.larger().to_u64().unwrap()))
            .collect()
    }

    #[test]
    fn order_domain() {
        assert!(matches!(
            GraphOrder::from_u64(0),
            Err(Error::OrderTooSmall(_))
        ));
        assert!(matches!(
            GraphOrder::from_u64(1),
            Err(Error::OrderTooSmall(_))
        ));
        assert!(GraphOrder::from_u64(2).is_ok());
    }

    #[test]
    fn order_parsing() {
        assert_eq!("1_000_000".parse::<GraphOrder>().unwrap(), order(1_000_000));
        assert_eq!("1,033".parse::<GraphOrder>().unwrap(), order(1033));
        assert_eq!(
            "1000000000000000000000000000000"
                .parse::<GraphOrder>()
                .unwrap(),
            pow10(30)
        );
        assert!(matches!(
            "1".parse::<GraphOrder>(),
            Err(Error::OrderTooSmall(_))
        ));
        assert!(matches!(
            "-5".parse::<GraphOrder>(),
            Err(Error::InvalidToken(_))
        ));
        assert!(matches!(
            "1e6".parse::<GraphOrder>(),
            Err(Error::InvalidToken(_))
        ));
        assert!(matches!(
            "".parse::<GraphOrder>(),
            Err(Error::InvalidToken(_))
        ));
    }

    #[test]
    fn raw_pair_count_examples() {
        assert_eq!(raw_pair_count(&order(2)), BigUint::from(1u32));
        assert_eq!(raw_pair_count(&order(7)), BigUint::from(3u32));
        assert_eq!(raw_pair_count(&order(100)), BigUint::from(50u32));
    }

    #[test]
    fn c_of_n_examples() {
        assert_eq!(c_of_n(&order(10)), 3);
        assert_eq!(c_of_n(&order(1_000_000)), 19);
        assert_eq!(c_of_n(&pow10(30)), 99);
    }

    #[test]
    fn c_of_n_small_orders() {
        // thresholds 2, 5, 10, 19, 36
        let expected = [
            (2, 1),
            (4, 1),
            (5, 2),
            (9, 2),
            (10, 3),
            (18, 3),
            (19, 4),
            (35, 4),
            (36, 5),
        ];
        for (n, c) in expected {
            assert_eq!(c_of_n(&order(n)), c, "n = {n}");
        }
    }

    #[test]
    fn brute_force_examples() {
        let cfg = BruteForceConfig::default();
        assert_eq!(brute_force_c(&order(4), &cfg).unwrap(), 1);
        assert_eq!(brute_force_c(&order(10), &cfg).unwrap(), 3);
        assert_eq!(brute_force_c(&order(2), &cfg).unwrap(), 1);
    }

    #[test]
    fn brute_force_bound() {
        let cfg = BruteForceConfig { max_n: 100 };
        assert!(brute_force_c(&order(100), &cfg).is_ok());
        assert!(matches!(
            brute_force_c(&order(101), &cfg),
            Err(Error::OutsideBruteForceBound { bound: 100, .. })
        ));
        assert!(brute_force_c(&pow10(30), &BruteForceConfig::default()).is_err());
    }

    #[test]
    fn valid_pairs_examples() {
        assert_eq!(pairs(10), vec![(1, 9), (2, 8), (3, 7)]);
        assert_eq!(pairs(4), vec![(1, 3)]);
        assert_eq!(pairs(2), vec![(1, 1)]);
    }

    #[test]
    fn order_range_examples() {
        let r = order_range_for_count(1).unwrap();
        assert_eq!(
            (r.min_n, r.max_n),
            (BigUint::from(2u32), BigUint::from(4u32))
        );
        let r = order_range_for_count(3).unwrap();
        assert_eq!(
            (r.min_n, r.max_n),
            (BigUint::from(10u32), BigUint::from(18u32))
        );
        let r = order_range_for_count(10).unwrap();
        assert_eq!(
            (r.min_n.clone(), r.max_n.clone()),
            (BigUint::from(1033u32), BigUint::from(2057u32))
        );
        assert_eq!(r.cardinality(), BigUint::from(1025u32));
        assert!(r.contains(&BigUint::from(1500u32)));
        assert_eq!(order_range_for_count(0), Err(Error::AlphaTooSmall(0)));
        assert!(matches!(
            order_range_for_count(MAX_ALPHA + 1),
            Err(Error::AlphaTooLarge(_))
        ));
    }

    #[test]
    fn c_of_n_matches_brute_force_small() {
        for n in 2..5_000u64 {
            assert_eq!(c_of_n(&order(n)), brute_force_count(n), "n = {n}");
        }
    }

    #[test]
    fn c_is_monotone_with_unit_steps() {
        let mut prev = c_of_n(&order(2));
        for n in 3..20_000u64 {
            let c = c_of_n(&order(n));
            assert!(c == prev || c == prev + 1, "n = {n}");
            prev = c;
        }
    }

    #[test]
    fn threshold_boundaries_up_to_60() {
        for alpha in 2..=60u64 {
            let threshold = pow2(alpha) + alpha - 1u32;
            assert_eq!(c_of_n(&GraphOrder::new(threshold.clone()).unwrap()), alpha);
            assert_eq!(
                c_of_n(&GraphOrder::new(threshold - 1u32).unwrap()),
                alpha - 1
            );
        }
    }

    #[test]
    fn ranges_tile_the_orders() {
        assert_eq!(order_range_for_count(1).unwrap().min_n, BigUint::from(2u32));
        for alpha in 1..=60u64 {
            let r = order_range_for_count(alpha).unwrap();
            let next = order_range_for_count(alpha + 1).unwrap();
            assert_eq!(&r.max_n + 1u32, next.min_n);
            assert_eq!(r.cardinality(), pow2(alpha) + 1u32);
        }
    }

    #[test]
    fn valid_pairs_are_valid_and_maximal() {
        for n in 2..3_000u64 {
            let ps = pairs(n);
            let c = c_of_n(&order(n));
            assert_eq!(ps.len() as u64, c);
            for &(a, b) in &ps {
                assert_eq!(a + b, n);
                assert!(a <= b);
                assert!(b + 1 >= 1 << a);
            }
            if c < n / 2 {
                let a = c + 1;
                assert!(!pair_satisfies_inequality_u64(a, n - a).unwrap(), "n = {n}");
            }
        }
    }
}
