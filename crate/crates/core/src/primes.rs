//! A shared, lazily extended prime table.
//!
//! The codec and the metafunctions both index primes heavily (the i-th prime
//! carries the i-th sign of a sequence; variables are coded as powers of the
//! primes above 13). The table lives behind a mutex so property tests can run
//! in parallel.

use std::sync::{Mutex, OnceLock};

fn table() -> &'static Mutex<Vec<u64>> {
    static TABLE: OnceLock<Mutex<Vec<u64>>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]))
}

/// The i-th prime, 1-based: `nth(1) == 2`, `nth(6) == 13`.
pub fn nth(i: usize) -> u64 {
    assert!(i >= 1, "prime index is 1-based");
    let mut t = table().lock().unwrap();
    extend_to_len(&mut t, i);
    t[i - 1]
}

/// The k-th prime greater than 13, 1-based: 17, 19, 23, 29, ...
pub fn nth_after_13(k: usize) -> u64 {
    nth(k + 6)
}

/// The first `count` primes, in order.
pub fn take(count: usize) -> Vec<u64> {
    let mut t = table().lock().unwrap();
    extend_to_len(&mut t, count);
    t[..count].to_vec()
}

/// If `p` is a prime greater than 13, its 1-based position among those
/// primes (17 is 1, 19 is 2, ...).
pub fn index_after_13(p: u64) -> Option<usize> {
    if p <= 13 || !is_prime_u64(p) {
        return None;
    }
    let mut t = table().lock().unwrap();
    while *t.last().unwrap() < p {
        let next = next_prime_after(&t);
        t.push(next);
    }
    t.binary_search(&p).ok().map(|pos| pos + 1 - 6)
}

fn extend_to_len(t: &mut Vec<u64>, len: usize) {
    while t.len() < len {
        let next = next_prime_after(t);
        t.push(next);
    }
}

fn next_prime_after(t: &[u64]) -> u64 {
    let mut candidate = t.last().unwrap() + 2;
    loop {
        if divides_none(t, candidate) {
            return candidate;
        }
        candidate += 2;
    }
}

fn divides_none(t: &[u64], candidate: u64) -> bool {
    for &p in t {
        if p * p > candidate {
            return true;
        }
        if candidate % p == 0 {
            return false;
        }
    }
    // Table covers sqrt(candidate) by construction while extending one by one.
    true
}

/// Deterministic Miller-Rabin, exact over the full u64 range.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_primes() {
        assert_eq!(nth(1), 2);
        assert_eq!(nth(4), 7);
        assert_eq!(nth(25), 97);
        assert_eq!(nth(100), 541);
    }

    #[test]
    fn primes_above_13() {
        assert_eq!(nth_after_13(1), 17);
        assert_eq!(nth_after_13(2), 19);
        assert_eq!(nth_after_13(3), 23);
        assert_eq!(nth_after_13(4), 29);
        assert_eq!(index_after_13(23), Some(3));
        assert_eq!(index_after_13(15), None);
        assert_eq!(index_after_13(13), None);
    }

    #[test]
    fn miller_rabin_agrees_with_trial_division() {
        for n in 0..2000u64 {
            let by_trial = n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
            assert_eq!(is_prime_u64(n), by_trial, "disagree at {n}");
        }
        assert!(is_prime_u64(2_147_483_647)); // 2^31 - 1
        assert!(!is_prime_u64(2_147_483_649));
    }
}
