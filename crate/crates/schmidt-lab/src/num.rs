//! Small integer helpers shared across modules.

/// Trial-division primality test. Inputs here are desk-scale primes.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization as (prime, exponent) pairs, primes ascending.
pub fn prime_factorization(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Multiplicative order of `a` modulo `m`. Requires gcd(a, m) = 1 and m > 1.
pub fn multiplicative_order(a: u64, m: u64) -> u64 {
    assert!(m > 1, "modulus must exceed 1");
    let a = a % m;
    assert!(gcd(a, m) == 1, "order undefined: {a} not a unit mod {m}");
    let mut acc = a;
    let mut k = 1;
    while acc != 1 {
        acc = acc * a % m;
        k += 1;
    }
    k
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g = gcd(a, b).
pub fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    (old_r, old_s, old_t)
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (g, s, _) = egcd((a % m) as i128, m as i128);
    if g != 1 {
        return None;
    }
    Some((s.rem_euclid(m as i128)) as u64)
}
