//! Trial-division factorization for 64-bit values.
//!
//! Character degrees are small in practice, so a 2-3-wheel up to the
//! integer square root is all that is needed.

/// Distinct prime factors of `n` in increasing order. `0` and `1` have none.
pub fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut primes = Vec::new();
    if n < 2 {
        return primes;
    }
    for p in [2u64, 3] {
        if n.is_multiple_of(p) {
            primes.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
    }
    let mut d = 5u64;
    // d <= n / d avoids overflowing d * d near u64::MAX.
    while d <= n / d {
        for p in [d, d + 2] {
            if n.is_multiple_of(p) {
                primes.push(p);
                while n.is_multiple_of(p) {
                    n /= p;
                }
            }
        }
        d += 6;
    }
    if n > 1 {
        primes.push(n);
    }
    primes
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) || n.is_multiple_of(3) {
        return false;
    }
    let mut d = 5u64;
    while d <= n / d {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}
