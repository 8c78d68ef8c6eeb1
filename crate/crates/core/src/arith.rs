//! Small-integer arithmetic: gcd, primality, divisors, τ, multiplicative order.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{r} is not a unit modulo {m}")]
pub struct NotAUnit {
    pub r: u64,
    pub m: u64,
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as `(p, exponent)` pairs in increasing `p`.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Number of positive divisors.
pub fn tau(n: u64) -> u64 {
    assert!(n >= 1, "tau is defined for positive integers");
    factorize(n).iter().map(|&(_, e)| e as u64 + 1).product()
}

/// `base^exp mod m`
pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let m = m as u128;
    let mut b = base as u128 % m;
    let mut acc: u128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Least `k >= 1` with `r^k ≡ 1 (mod m)`; `1` when `m = 1`.
pub fn multiplicative_order(r: u64, m: u64) -> Result<u64, NotAUnit> {
    if m == 1 {
        return Ok(1);
    }
    if m == 0 || gcd(r % m, m) != 1 {
        return Err(NotAUnit { r, m });
    }
    let r = r % m;
    let mut x = r;
    let mut k = 1;
    while x != 1 {
        x = x * r % m;
        k += 1;
    }
    Ok(k)
}

/// `true` if `n = p*q` for distinct primes `p`, `q`.
pub fn is_product_of_two_distinct_primes(n: u64) -> bool {
    let f = factorize(n);
    f.len() == 2 && f.iter().all(|&(_, e)| e == 1)
}

/// `Some(p)` if `n = p^a` with `a >= 1`.
pub fn prime_power_base(n: u64) -> Option<(u64, u32)> {
    match factorize(n).as_slice() {
        [(p, a)] => Some((*p, *a)),
        _ => None,
    }
}
