//! Machine-word and big-integer number theory helpers: modular arithmetic,
//! primality, integer factorization.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    let (s, overflow) = a.overflowing_add(b);
    if overflow || s >= m {
        s.wrapping_sub(m)
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        m - (b - a)
    }
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
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

/// Inverse of `a` modulo `m`, if it exists.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (g, x, _) = ext_gcd_i128(a as i128 % m as i128, m as i128);
    if g != 1 {
        return None;
    }
    Some(x.rem_euclid(m as i128) as u64)
}

fn ext_gcd_i128(a: i128, b: i128) -> (i128, i128, i128) {
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

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Least common multiple, `None` on overflow.
pub fn checked_lcm(a: u64, b: u64) -> Option<u64> {
    if a == 0 || b == 0 {
        return Some(0);
    }
    (a / gcd(a, b)).checked_mul(b)
}

/// Deterministic Miller-Rabin for the full 64-bit range.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &SMALL {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &SMALL {
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

/// Smallest prime strictly greater than `n`.
pub fn next_prime(n: u64) -> u64 {
    let mut c = n + 1;
    while !is_prime_u64(c) {
        c += 1;
    }
    c
}

/// Prime factorization of a machine word, ascending.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    for p in [2u64, 3, 5] {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    }
    let mut d = 7u64;
    while d <= 10_000 && d * d <= n {
        let mut e = 0;
        while n % d == 0 {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += 2;
    }
    if n > 1 {
        let mut big = BTreeMap::new();
        split_u64(n, &mut big);
        for (p, e) in big {
            out.push((p, e));
        }
    }
    out.sort_unstable();
    out
}

fn split_u64(n: u64, acc: &mut BTreeMap<u64, u32>) {
    if n == 1 {
        return;
    }
    if is_prime_u64(n) {
        *acc.entry(n).or_insert(0) += 1;
        return;
    }
    let d = pollard_brent_u64(n);
    split_u64(d, acc);
    split_u64(n / d, acc);
}

fn pollard_brent_u64(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| add_mod(mul_mod(x, x, n), c, n);
        let (mut x, mut y, mut g) = (2u64, 2u64, 1u64);
        let mut q = 1u64;
        let mut r = 1u64;
        let mut ys = 2u64;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..(128.min(r - k)) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += 128;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
        c += 1;
    }
}

fn is_probable_prime_big(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        let a = BigUint::from(a);
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_brent_big(n: &BigUint) -> BigUint {
    let two = BigUint::from(2u32);
    if n.is_even() {
        return two;
    }
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut x = two.clone();
        let mut y = two.clone();
        let mut g = BigUint::one();
        let mut power = 1u64;
        let mut lam = 1u64;
        while g.is_one() {
            if power == lam {
                x = y.clone();
                power *= 2;
                lam = 0;
            }
            y = f(&y);
            lam += 1;
            let diff = if x > y { &x - &y } else { &y - &x };
            g = diff.gcd(n);
        }
        if &g != n {
            return g;
        }
        c += 1u32;
    }
}

/// Prime factorization of |n| (empty for 0 and ±1).
pub fn factor_bigint(n: &BigInt) -> Vec<(BigUint, u32)> {
    let mut m = n.magnitude().clone();
    let mut acc: BTreeMap<BigUint, u32> = BTreeMap::new();
    if m.is_zero() {
        return Vec::new();
    }
    let mut d = 2u32;
    while d < 10_000 {
        let dd = BigUint::from(d);
        if &dd * &dd > m {
            break;
        }
        while (&m % &dd).is_zero() {
            m /= &dd;
            *acc.entry(dd.clone()).or_insert(0) += 1;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let mut stack = vec![m];
    while let Some(x) = stack.pop() {
        if x.is_one() {
            continue;
        }
        if let Some(small) = x.to_u64() {
            for (p, e) in factor_u64(small) {
                *acc.entry(BigUint::from(p)).or_insert(0) += e;
            }
            continue;
        }
        if is_probable_prime_big(&x) {
            *acc.entry(x).or_insert(0) += 1;
            continue;
        }
        let f = pollard_brent_big(&x);
        let q = &x / &f;
        stack.push(f);
        stack.push(q);
    }
    acc.into_iter().collect()
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in factor_u64(n) {
        let len = divs.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

/// Distinct prime factors of `n`, ascending.
pub fn prime_factors(n: u64) -> Vec<u64> {
    factor_u64(n).into_iter().map(|(p, _)| p).collect()
}

/// Euler's totient; `euler_phi(0)` is 0.
pub fn euler_phi(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    factor_u64(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// p-adic valuation of a nonzero big integer.
pub fn valuation(n: &BigInt, p: u64) -> u32 {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut m = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        m = q;
        v += 1;
    }
}

/// Integer ceiling of the square root.
pub fn ceil_sqrt(n: &BigUint) -> BigUint {
    let r = n.sqrt();
    if &(&r * &r) == n {
        r
    } else {
        r + 1u32
    }
}

/// Residue of a big integer in [0, p).
pub fn bigint_mod_u64(n: &BigInt, p: u64) -> u64 {
    let r = n.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primality() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(is_prime_u64(18_446_744_073_709_551_557));
        assert!(!is_prime_u64(3_215_031_751));
    }

    #[test]
    fn factor_words() {
        assert_eq!(factor_u64(360), vec![(2, 3), (3, 2), (5, 1)]);
        let n = 1_000_000_007u64 * 998_244_353;
        assert_eq!(factor_u64(n), vec![(998_244_353, 1), (1_000_000_007, 1)]);
    }

    #[test]
    fn factor_big() {
        let n: BigInt = BigInt::from(1_000_000_007u64) * BigInt::from(1_000_000_009u64)
            * BigInt::from(1_000_000_021u64)
            * -4;
        let f = factor_bigint(&n);
        let expect: Vec<(BigUint, u32)> = vec![
            (2u32.into(), 2),
            (1_000_000_007u64.into(), 1),
            (1_000_000_009u64.into(), 1),
            (1_000_000_021u64.into(), 1),
        ];
        assert_eq!(f, expect);
        assert!(factor_bigint(&BigInt::from(-1)).is_empty());
    }

    #[test]
    fn inverses_and_divisors() {
        assert_eq!(inv_mod(3, 7), Some(5));
        assert_eq!(inv_mod(2, 4), None);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(97), 96);
        assert_eq!(valuation(&BigInt::from(-48), 2), 4);
        assert_eq!(ceil_sqrt(&BigUint::from(10u32)), BigUint::from(4u32));
        assert_eq!(ceil_sqrt(&BigUint::from(9u32)), BigUint::from(3u32));
    }
}
