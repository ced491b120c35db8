//! Small integer number theory: primality, factorization, orders.

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Returns `Ok(p)` if `p` is an odd prime.
pub fn require_odd_prime(p: u64) -> Result<u64> {
    if p % 2 == 1 && is_prime(p) {
        Ok(p)
    } else {
        Err(Error::NotOddPrime(p))
    }
}

/// Prime factorization by trial division, as `(prime, exponent)` pairs in
/// increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let m128 = m as u128;
    let mut b = (base % m) as u128;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// Euler's totient via factorization.
pub fn totient(n: u64) -> u64 {
    factorize(n).iter().fold(n, |acc, &(q, _)| acc / q * (q - 1))
}

/// Multiplicative order of `a` modulo `n`, or `None` if `gcd(a, n) != 1`.
pub fn multiplicative_order_mod(a: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(1);
    }
    if gcd(a % n, n) != 1 {
        return None;
    }
    let mut ord = totient(n);
    for (q, _) in factorize(ord) {
        while ord % q == 0 && pow_mod(a, ord / q, n) == 1 {
            ord /= q;
        }
    }
    Some(ord)
}

/// Odd primes in the inclusive range `[from, to]`.
pub fn odd_primes_in(from: u64, to: u64) -> Vec<u64> {
    (from.max(3)..=to).filter(|&n| n % 2 == 1 && is_prime(n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(require_odd_prime(2).is_err());
        assert!(require_odd_prime(9).is_err());
        assert_eq!(require_odd_prime(499), Ok(499));
    }

    #[test]
    fn factorization() {
        assert_eq!(factorize(1), []);
        assert_eq!(factorize(360), [(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(4095), [(3, 2), (5, 1), (7, 1), (13, 1)]);
        assert_eq!(factorize(997), [(997, 1)]);
    }

    #[test]
    fn orders_by_brute_force() {
        for n in 2..60u64 {
            for a in 1..n {
                let brute =
                    if gcd(a, n) != 1 { None } else { (1..=n).find(|&k| pow_mod(a, k, n) == 1) };
                assert_eq!(multiplicative_order_mod(a, n), brute, "a={a} n={n}");
            }
        }
    }

    #[test]
    fn primes_in_range() {
        assert_eq!(odd_primes_in(3, 50).len(), 14);
        assert_eq!(odd_primes_in(1, 10), [3, 5, 7]);
        assert!(odd_primes_in(10, 3).is_empty());
    }
}
