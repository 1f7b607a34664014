//! Elementary multiplicative number theory.
//!
//! Every function here takes plain `u64` indices and treats `0` as a
//! precondition violation (it panics), except where `q = 0` is explicitly
//! allowed. [`Natural`] is the validated form used at API boundaries.

mod factor;
mod ramanujan;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::cyclo::CycloError;

pub use factor::{factorize, is_prime, Factorization};
pub use ramanujan::{
    ramanujan_sum, ramanujan_sum_definition_raw, ramanujan_sum_hoelder, ramanujan_sum_kluyver,
    MethodChoice, DEFINITION_TOLERANCE,
};

#[derive(Debug, Error)]
pub enum ArithError {
    #[error("{value} is not a natural index in 1..=2^63-1")]
    OutOfRange { value: u128 },
    #[error("could not parse {0:?} as a natural number")]
    Parse(String),
    #[error("floating-point sum for c_{n}({q}) is {residual:e} away from an integer")]
    DefinitionResidualTooLarge { n: u64, q: u64, residual: f64 },
    #[error("c_{n}({q}) does not fit in 64 bits")]
    Overflow { n: u64, q: u64 },
    #[error(transparent)]
    Cyclotomic(#[from] CycloError),
}

/// A positive integer index, bounded by `2^63 - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Natural(u64);

impl Natural {
    pub const MAX: u64 = i64::MAX as u64;
    pub const ONE: Natural = Natural(1);

    pub fn new(value: u64) -> Result<Self, ArithError> {
        if value == 0 || value > Self::MAX {
            return Err(ArithError::OutOfRange {
                value: value.into(),
            });
        }
        Ok(Natural(value))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }
}

impl TryFrom<u64> for Natural {
    type Error = ArithError;

    fn try_from(value: u64) -> Result<Self, Self::Error> {
        Natural::new(value)
    }
}

impl From<Natural> for u64 {
    fn from(n: Natural) -> u64 {
        n.0
    }
}

impl FromStr for Natural {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let value: u128 = s
            .trim()
            .parse()
            .map_err(|_| ArithError::Parse(s.to_string()))?;
        match u64::try_from(value) {
            Ok(v) => Natural::new(v),
            Err(_) => Err(ArithError::OutOfRange { value }),
        }
    }
}

impl fmt::Display for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[inline]
pub(crate) fn assert_index(n: u64) {
    assert!(n >= 1, "index must be a positive integer");
}

/// Greatest common divisor, with the convention `gcd(a, 0) = a`.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn is_coprime(a: u64, b: u64) -> bool {
    gcd(a, b) == 1
}

/// All positive divisors of `n`, strictly increasing.
pub fn divisors(n: u64) -> Vec<u64> {
    assert_index(n);
    factorize(n).divisors()
}

/// The Möbius function.
pub fn mobius(n: u64) -> i8 {
    assert_index(n);
    factorize(n).mobius()
}

/// Euler's totient, via the product formula over the factorization.
pub fn totient(n: u64) -> u64 {
    assert_index(n);
    factorize(n).totient()
}

/// Product of the distinct primes dividing `n`.
pub fn radical(n: u64) -> u64 {
    assert_index(n);
    factorize(n).radical()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_totient(n: u64) -> u64 {
        (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
    }

    fn brute_divisors(n: u64) -> Vec<u64> {
        (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
    }

    #[test]
    fn natural_bounds() {
        assert!(Natural::new(0).is_err());
        assert!(Natural::new(1).is_ok());
        assert!(Natural::new(Natural::MAX).is_ok());
        assert!(Natural::new(Natural::MAX + 1).is_err());
        assert!("18446744073709551616".parse::<Natural>().is_err());
        assert!("-3".parse::<Natural>().is_err());
        assert_eq!("12".parse::<Natural>().unwrap().get(), 12);
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(8), vec![1, 2, 4, 8]);
        for n in 1..=300 {
            assert_eq!(divisors(n), brute_divisors(n), "n = {n}");
        }
    }

    #[test]
    fn mobius_examples() {
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(6), 1);
        assert_eq!(mobius(12), 0);
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(7), -1);
    }

    #[test]
    fn totient_examples() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(7), 6);
        assert_eq!(totient(12), brute_totient(12));
        assert_eq!(totient(12), 4);
        for n in 1..=500 {
            assert_eq!(totient(n), brute_totient(n), "n = {n}");
        }
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(12, 8), 4);
        assert!(is_coprime(4, 9));
        assert!(!is_coprime(2, 4));
        assert_eq!(gcd(12, 0), 12);
    }

    #[test]
    fn radical_examples() {
        assert_eq!(radical(1), 1);
        assert_eq!(radical(12), 6);
        assert_eq!(radical(8), 2);
        assert_eq!(radical(105), 105);
    }

    #[test]
    fn mobius_divisor_sum_vanishes() {
        for n in 1..=100_000u64 {
            let s: i64 = divisors(n).into_iter().map(|d| mobius(d) as i64).sum();
            assert_eq!(s, i64::from(n == 1), "n = {n}");
        }
    }

    #[test]
    fn totient_divisor_sum() {
        for n in 1..=100_000u64 {
            let s: u64 = divisors(n).into_iter().map(totient).sum();
            assert_eq!(s, n, "n = {n}");
        }
    }

    #[test]
    fn totient_multiplicative_on_coprime_pairs() {
        for m in 1..=10_000u64 {
            for n in 1..=10_000 / m {
                if is_coprime(m, n) {
                    assert_eq!(totient(m * n), totient(m) * totient(n), "m={m} n={n}");
                }
            }
        }
    }

    #[test]
    #[should_panic]
    fn zero_index_panics() {
        totient(0);
    }
}
