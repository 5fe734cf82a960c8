//! Exact elementary number theory: factorization, p-adic order, Euler's
//! totient, the Mycielski function and exact rationals.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use crate::error::{capacity, domain, Result};

/// Exact rational number in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Largest integer accepted by [`factorize`]. Trial division runs up to its square root.
pub const FACTOR_LIMIT: u64 = 1_000_000_000_000;

/// Builds the rational `num / den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rational_from_int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Prime factorization `n = ∏ p^α` with primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// The set of prime divisors, increasing.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Exponent of `p` in `n` (zero when `p` does not divide `n`).
    pub fn exponent(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// `Some((p, e))` when `n = p^e` with `e ≥ 1`.
    pub fn as_prime_power(&self) -> Option<(u64, u32)> {
        match self.factors.as_slice() {
            [single] => Some(*single),
            _ => None,
        }
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Factorizes `1 ≤ n ≤ FACTOR_LIMIT` by trial division over a 2·3·5 wheel.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return domain("cannot factorize 0");
    }
    if n > FACTOR_LIMIT {
        return capacity(format!("{n} exceeds the trial-division limit {FACTOR_LIMIT}"));
    }
    let mut rest = n;
    let mut factors = Vec::new();
    let mut take = |p: u64, rest: &mut u64| {
        let mut e = 0;
        while (*rest).is_multiple_of(p) {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    for p in [2, 3, 5] {
        take(p, &mut rest);
    }
    const WHEEL: [u64; 8] = [4, 2, 4, 2, 4, 6, 2, 6];
    let mut p = 7;
    let mut i = 0;
    while p * p <= rest {
        take(p, &mut rest);
        p += WHEEL[i];
        i = (i + 1) % WHEEL.len();
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { n, factors })
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && matches!(factorize(n), Ok(f) if f.factors == [(n, 1)])
}

/// Largest `α` with `p^α | n`.
pub fn ord_p(n: u64, p: u64) -> Result<u32> {
    if n == 0 {
        return domain("ord_p(0) is infinite");
    }
    if !is_prime(p) {
        return domain(format!("{p} is not prime"));
    }
    let mut rest = n;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    Ok(e)
}

/// The Mycielski function `f(n) = Σ_{p | n} ord_p(n)·(p − 1)`.
pub fn mycielski_f(n: u64) -> Result<u64> {
    let fac = factorize(n)?;
    Ok(mycielski_of(&fac))
}

pub fn mycielski_of(fac: &Factorization) -> u64 {
    fac.factors.iter().map(|&(p, e)| u64::from(e) * (p - 1)).sum()
}

pub fn euler_phi(n: u64) -> Result<u64> {
    let fac = factorize(n)?;
    Ok(phi_of(&fac))
}

pub fn phi_of(fac: &Factorization) -> u64 {
    fac.factors
        .iter()
        .map(|&(p, e)| p.pow(e - 1) * (p - 1))
        .product()
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Least common multiple of a list; the empty list gives 1.
pub fn lcm_all(values: &[u64]) -> Result<u64> {
    let mut acc: u64 = 1;
    for &v in values {
        if v == 0 {
            return domain("lcm of a list containing 0");
        }
        let g = acc.gcd(&v);
        acc = (acc / g)
            .checked_mul(v)
            .ok_or_else(|| crate::Error::Capacity(format!("lcm of {values:?} overflows u64")))?;
    }
    Ok(acc)
}

/// `2^e` as a `u128`, or `None` if it does not fit.
pub fn pow2(e: u64) -> Option<u128> {
    if e < 128 {
        Some(1u128 << e)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorize_examples() {
        assert!(factorize(1).unwrap().factors().is_empty());
        assert_eq!(factorize(12).unwrap().factors(), &[(2, 2), (3, 1)]);
        assert_eq!(factorize(97).unwrap().factors(), &[(97, 1)]);
        assert_eq!(
            factorize(2 * 2 * 7 * 7 * 49 * 1_000_003).unwrap().factors(),
            &[(2, 2), (7, 4), (1_000_003, 1)]
        );
        assert!(matches!(factorize(0), Err(crate::Error::Domain(_))));
        assert!(matches!(factorize(FACTOR_LIMIT + 1), Err(crate::Error::Capacity(_))));
    }

    #[test]
    fn factorization_reconstructs_n() {
        for n in 1..5000u64 {
            let fac = factorize(n).unwrap();
            let prod: u64 = fac.factors().iter().map(|&(p, e)| p.pow(e)).product();
            assert_eq!(prod, n);
            assert!(fac.factors().windows(2).all(|w| w[0].0 < w[1].0));
            assert!(fac.factors().iter().all(|&(p, e)| e >= 1 && is_prime(p)));
        }
    }

    #[test]
    fn ord_p_examples() {
        assert_eq!(ord_p(12, 2).unwrap(), 2);
        assert_eq!(ord_p(12, 5).unwrap(), 0);
        assert_eq!(ord_p(8, 2).unwrap(), 3);
        assert!(matches!(ord_p(12, 4), Err(crate::Error::Domain(_))));
    }

    #[test]
    fn mycielski_examples() {
        assert_eq!(mycielski_f(1).unwrap(), 0);
        assert_eq!(mycielski_f(12).unwrap(), 4);
        for p in [2u64, 3, 5, 7, 11] {
            assert_eq!(mycielski_f(p).unwrap(), p - 1);
            assert_eq!(mycielski_f(p * p).unwrap(), 2 * p - 2);
        }
    }

    #[test]
    fn phi_matches_gcd_count() {
        assert_eq!(euler_phi(1).unwrap(), 1);
        assert_eq!(euler_phi(4).unwrap(), 2);
        assert_eq!(euler_phi(9).unwrap(), 6);
        for n in 1..400u64 {
            let brute = (1..=n).filter(|&a| gcd(a, n) == 1).count() as u64;
            assert_eq!(euler_phi(n).unwrap(), brute, "n = {n}");
        }
    }

    #[test]
    fn lcm_examples() {
        assert_eq!(lcm_all(&[2, 4]).unwrap(), 4);
        assert_eq!(lcm_all(&[]).unwrap(), 1);
        assert_eq!(lcm_all(&[6, 10]).unwrap(), 30);
        assert!(lcm_all(&[3, 0]).is_err());
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(factorize(27).unwrap().as_prime_power(), Some((3, 3)));
        assert_eq!(factorize(12).unwrap().as_prime_power(), None);
        assert_eq!(factorize(1).unwrap().as_prime_power(), None);
    }
}
