//! Small integer number theory shared across modules: primality, factoring,
//! divisor enumeration, totient, multiplicative orders.
//!
//! Everything here is exact and sized for desk-scale inputs (factoring via
//! trial division plus Pollard rho on `u128`).

/// Greatest common divisor.
pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    gcd(a.unsigned_abs(), b.unsigned_abs()) as i64
}

/// `base^exp mod m` without overflow (works for m up to 2^64 via u128 widening).
pub fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    assert!(m > 0);
    let mut base = base as u128 % m as u128;
    let mut acc: u128 = 1 % m as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m as u128;
        }
        base = base * base % m as u128;
        exp >>= 1;
    }
    acc as u64
}

fn mod_pow_u128(base: u128, mut exp: u128, m: u128) -> u128 {
    let mut base = base % m;
    let mut acc: u128 = 1 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u128(acc, base, m);
        }
        base = mul_mod_u128(base, base, m);
        exp >>= 1;
    }
    acc
}

fn mul_mod_u128(a: u128, b: u128, m: u128) -> u128 {
    // Schoolbook double-and-add; m stays well below 2^127 in practice.
    if let (Ok(a64), Ok(b64), Ok(m64)) = (
        u64::try_from(a),
        u64::try_from(b),
        u64::try_from(m),
    ) {
        return (a64 as u128 * b64 as u128 % m64 as u128) as u128;
    }
    let mut acc: u128 = 0;
    let mut a = a % m;
    let mut b = b;
    while b > 0 {
        if b & 1 == 1 {
            acc = (acc + a) % m;
        }
        a = (a << 1) % m;
        b >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, valid for all inputs below 2^64 and
/// probabilistically strong above.
pub fn is_prime_u128(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    'witness: for a in [2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow_u128(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod_u128(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn is_prime(n: u64) -> bool {
    is_prime_u128(n as u128)
}

fn pollard_rho(n: u128) -> u128 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c: u128 = 1;
    loop {
        let mut x: u128 = 2;
        let mut y: u128 = 2;
        let mut d: u128 = 1;
        while d == 1 {
            x = (mul_mod_u128(x, x, n) + c) % n;
            y = (mul_mod_u128(y, y, n) + c) % n;
            y = (mul_mod_u128(y, y, n) + c) % n;
            let diff = if x > y { x - y } else { y - x };
            d = gcd_u128(diff, n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

fn gcd_u128(a: u128, b: u128) -> u128 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Full factorization of `n` as sorted (prime, exponent) pairs.
pub fn factor_u128(n: u128) -> Vec<(u128, u32)> {
    assert!(n > 0, "factor_u128: n must be positive");
    let mut n = n;
    let mut out: Vec<(u128, u32)> = Vec::new();
    for p in [2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime_u128(m) {
            match out.iter_mut().find(|(p, _)| *p == m) {
                Some((_, e)) => *e += 1,
                None => out.push((m, 1)),
            }
            continue;
        }
        let d = pollard_rho(m);
        stack.push(d);
        stack.push(m / d);
    }
    out.sort_unstable();
    out
}

pub fn factor(n: u64) -> Vec<(u64, u32)> {
    factor_u128(n as u128)
        .into_iter()
        .map(|(p, e)| (p as u64, e))
        .collect()
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, e) in factor(n) {
        let prev = out.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            out.extend(prev.iter().map(|d| d * pk));
        }
    }
    out.sort_unstable();
    out
}

/// Number of divisors tau(n).
pub fn tau(n: u64) -> u64 {
    factor(n).into_iter().map(|(_, e)| e as u64 + 1).product()
}

/// Euler totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut out = n;
    for (p, _) in factor(n) {
        out = out / p * (p - 1);
    }
    out
}

/// Multiplicative order of `a` modulo `m`; None if gcd(a, m) != 1.
pub fn mult_order(a: u64, m: u64) -> Option<u64> {
    if m == 0 || gcd(a % m, m) != 1 {
        return None;
    }
    if m == 1 {
        return Some(1);
    }
    let group = carmichael_exponent(m);
    let mut ord = group;
    for (p, _) in factor(group) {
        while ord % p == 0 && mod_pow(a, ord / p, m) == 1 {
            ord /= p;
        }
    }
    debug_assert_eq!(mod_pow(a, ord, m), 1);
    Some(ord)
}

fn carmichael_exponent(m: u64) -> u64 {
    let mut lambda = 1u64;
    for (p, e) in factor(m) {
        let pe = p.pow(e);
        let l = if p == 2 && e >= 3 {
            pe / 4
        } else {
            pe / p * (p - 1)
        };
        lambda = lambda / gcd(lambda, l) * l;
    }
    lambda
}

/// Primes up to and including `n`, by sieve.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut p = 2usize;
    while p * p <= n {
        if sieve[p] {
            let mut q = p * p;
            while q <= n {
                sieve[q] = false;
                q += p;
            }
        }
        p += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(i, &b)| b.then_some(i as u64))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
    }

    #[test]
    fn factoring_round_trips() {
        for n in [1u64, 2, 12, 360, 1024, 9973, 2 * 3 * 5 * 7 * 11 * 13, 600851475143] {
            let f = factor(n);
            let back: u64 = f.iter().map(|(p, e)| p.pow(*e)).product();
            assert_eq!(back, n);
            for (p, _) in f {
                assert!(is_prime(p));
            }
        }
    }

    #[test]
    fn divisor_and_totient_values() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(tau(12), 6);
        assert_eq!(tau(2), 2);
        assert_eq!(euler_phi(4), 2);
        assert_eq!(euler_phi(6), 2);
        assert_eq!(euler_phi(1), 1);
    }

    #[test]
    fn orders() {
        assert_eq!(mult_order(3, 4), Some(2)); // complex conjugation on Q(i)
        assert_eq!(mult_order(2, 5), Some(4));
        assert_eq!(mult_order(4, 5), Some(2));
        assert_eq!(mult_order(2, 4), None);
        assert_eq!(mult_order(7, 5), Some(4)); // ord_5(7) = ord_5(2)
        assert_eq!(mult_order(11, 9), Some(6));
    }

    #[test]
    fn prime_sieve_matches_miller_rabin() {
        let sieved = primes_up_to(200);
        let checked: Vec<u64> = (0..=200).filter(|&n| is_prime(n)).collect();
        assert_eq!(sieved, checked);
    }
}
