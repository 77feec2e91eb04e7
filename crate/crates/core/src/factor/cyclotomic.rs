use std::collections::HashMap;

use num_bigint::BigInt;

use crate::arith::{divisors, euler_phi, is_prime_u64};
use crate::poly::IntPolynomial;

/// The n-th cyclotomic polynomial, by dividing `T^n - 1` by `Φ_d` for the
/// proper divisors `d` of `n`.
pub fn cyclotomic_poly(n: u64) -> IntPolynomial {
    assert!(n >= 1, "cyclotomic index must be positive");
    let mut memo: HashMap<u64, IntPolynomial> = HashMap::new();
    for d in divisors(n) {
        let mut num = IntPolynomial::monomial(BigInt::from(1), d as usize) - IntPolynomial::one();
        for e in divisors(d) {
            if e < d {
                num = num.div_rem_monic(&memo[&e]).0;
            }
        }
        memo.insert(d, num);
    }
    memo.remove(&n).unwrap()
}

/// All `n` with `φ(n) = d`, ascending.
pub fn inverse_totient(d: u64) -> Vec<u64> {
    assert!(d >= 1, "totient values are positive");
    if d == 1 {
        return vec![1, 2];
    }
    if d % 2 == 1 {
        return Vec::new();
    }
    // n / φ(n) = ∏ p/(p-1) over primes p | n, and each such p has p - 1 | d.
    let (mut num, mut den) = (d as u128, 1u128);
    for q in divisors(d) {
        if is_prime_u64(q + 1) {
            num *= (q + 1) as u128;
            den *= q as u128;
            let g = gcd_u128(num, den);
            num /= g;
            den /= g;
        }
    }
    let bound = (num / den) as u64;
    (1..=bound).filter(|&n| euler_phi(n) == d).collect()
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_poly(1), IntPolynomial::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic_poly(6), IntPolynomial::from_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), IntPolynomial::from_i64(&[1, 0, -1, 0, 1]));
        // Φ105 is the first with a coefficient of absolute value 2
        let f = cyclotomic_poly(105);
        assert_eq!(f.degree(), Some(48));
        assert!(f.coeffs().iter().any(|c| *c == BigInt::from(-2)));
    }

    #[test]
    fn inverse_totient_examples() {
        assert_eq!(inverse_totient(1), vec![1, 2]);
        assert_eq!(inverse_totient(2), vec![3, 4, 6]);
        assert!(inverse_totient(3).is_empty());
        assert_eq!(inverse_totient(4), vec![5, 8, 10, 12]);
        assert!(inverse_totient(14).is_empty());
        for d in 1..200u64 {
            let brute: Vec<u64> = (1..=(d * d + d).max(2)).filter(|&n| euler_phi(n) == d).collect();
            assert_eq!(inverse_totient(d), brute, "d = {d}");
        }
    }
}
