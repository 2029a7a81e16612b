//! Exact factorials and binomial coefficients.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rational;

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `1/n!` with the convention that it vanishes for negative `n`.
pub fn inv_factorial(n: i64) -> Rational {
    if n < 0 {
        Rational::zero()
    } else {
        Rational::new(BigInt::one(), factorial(n as u64))
    }
}

/// `n!` as a rational; panics on negative arguments.
pub fn factorial_q(n: i64) -> Rational {
    assert!(n >= 0, "factorial of negative integer {n}");
    Rational::from_integer(factorial(n as u64))
}

/// Binomial coefficient with `C(a, b) = 0` whenever `a < b` or `b < 0`.
///
/// This makes `C(-1, 0) = 0`, the convention used for the xi-identities.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || a < b {
        return BigInt::zero();
    }
    // here a >= b >= 0
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for k in 0..b {
        acc = acc * BigInt::from(a - k) / BigInt::from(k + 1);
    }
    acc
}

pub fn binomial_q(a: i64, b: i64) -> Rational {
    Rational::from_integer(binomial(a, b))
}

/// Generalized binomial `a(a-1)...(a-b+1)/b!`, defined for every integer `a`
/// and zero for `b < 0`. Agrees with [`binomial`] when `a >= 0`.
pub fn binomial_general(a: i64, b: i64) -> BigInt {
    if b < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    for k in 0..b {
        num *= BigInt::from(a - k);
    }
    num / factorial(b as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_conventions() {
        assert_eq!(binomial(-1, 0), BigInt::zero());
        assert_eq!(binomial(4, -1), BigInt::zero());
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(2, 3), BigInt::zero());
        assert_eq!(binomial(10, 7), BigInt::from(120));
    }

    #[test]
    fn general_binomial_negative_upper() {
        assert_eq!(binomial_general(-1, 0), BigInt::one());
        assert_eq!(binomial_general(-1, 3), BigInt::from(-1));
        assert_eq!(binomial_general(-2, 2), BigInt::from(3));
        assert_eq!(binomial_general(-1, 2), BigInt::from(1));
        for a in 0..8 {
            for b in 0..8 {
                assert_eq!(binomial_general(a, b), binomial(a, b));
            }
        }
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(6), BigInt::from(720));
        assert_eq!(inv_factorial(-2), Rational::zero());
        assert_eq!(inv_factorial(3), Rational::new(1.into(), 6.into()));
    }
}
