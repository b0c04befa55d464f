use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt;

use super::Rational;
use crate::{Error, Result};

/// A validated prime number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime_u64(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p.to_string()))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn to_biguint(self) -> BigUint {
        BigUint::from(self.0)
    }

    pub fn to_bigint(self) -> BigInt {
        BigInt::from(self.0)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

// These witnesses make Miller-Rabin deterministic below 3.3 * 10^24.
const WITNESSES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &WITNESSES {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES[..12] {
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

fn is_prime_big(n: &BigUint) -> Option<bool> {
    if let Some(small) = n.to_u64() {
        return Some(is_prime_u64(small));
    }
    // beyond the deterministic range we refuse to guess
    let bound: BigUint = "3317044064679887385961981".parse().unwrap();
    if *n >= bound {
        return None;
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for &a in &WITNESSES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return Some(false);
    }
    Some(true)
}

const TRIAL_LIMIT: u64 = 1_000_000;

/// Factors a positive integer into `(prime, exponent)` pairs.
///
/// Trial division runs up to 10⁶; the remaining cofactor must then be prime
/// (certified by deterministic Miller-Rabin) and fit in 64 bits, otherwise
/// [`Error::Unfactored`] is returned.
pub fn factor_integer(n: &BigUint) -> Result<Vec<(Prime, u32)>> {
    if n.is_zero() {
        return Err(Error::InvalidArgument("cannot factor zero".into()));
    }
    let mut rest = n.clone();
    let mut out = Vec::new();
    let mut q = 2u64;
    while q <= TRIAL_LIMIT {
        let qb = BigUint::from(q);
        if &qb * &qb > rest {
            break;
        }
        let mut e = 0;
        while (&rest % &qb).is_zero() {
            rest /= &qb;
            e += 1;
        }
        if e > 0 {
            out.push((Prime(q), e));
        }
        q += if q == 2 { 1 } else { 2 };
    }
    if !rest.is_one() {
        match is_prime_big(&rest) {
            Some(true) => match rest.to_u64() {
                Some(p) => out.push((Prime(p), 1)),
                None => return Err(Error::Unfactored(rest.to_string())),
            },
            _ => return Err(Error::Unfactored(rest.to_string())),
        }
    }
    Ok(out)
}

/// `v_p(n)` for a nonzero integer, `None` for zero.
pub fn valuation_int(n: &BigInt, p: Prime) -> Option<u64> {
    if n.is_zero() {
        return None;
    }
    if p.get() == 2 {
        return n.trailing_zeros();
    }
    // strip p^(2^i) for growing i, then walk back down the ladder
    let mut ladder = vec![p.to_bigint()];
    let mut m = n.clone();
    let mut v = 0;
    loop {
        let top = ladder.last().expect("nonempty");
        let (q, r) = m.div_rem(top);
        if !r.is_zero() {
            break;
        }
        m = q;
        v += 1u64 << (ladder.len() - 1);
        let next = top * top;
        ladder.push(next);
    }
    ladder.pop();
    while let Some(step) = ladder.pop() {
        let (q, r) = m.div_rem(&step);
        if r.is_zero() {
            m = q;
            v += 1u64 << ladder.len();
        }
    }
    Some(v)
}

/// The p-adic valuation of a rational: `|x|_p = p^(-v)`, `None` meaning `+∞`.
pub fn p_valuation(x: &Rational, p: Prime) -> Option<i64> {
    let num = valuation_int(x.numer(), p)?;
    let den = valuation_int(x.denom(), p).unwrap_or(0);
    Some(num as i64 - den as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..60).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(small, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(is_prime_u64(18446744073709551557));
        assert!(!is_prime_u64(3215031751)); // strong pseudoprime to 2, 3, 5, 7
        assert!(Prime::new(4).is_err());
        assert!(Prime::new(1).is_err());
    }

    #[test]
    fn valuations() {
        let p3 = Prime::new(3).unwrap();
        let p5 = Prime::new(5).unwrap();
        assert_eq!(p_valuation(&q(9, 1), p3), Some(2));
        assert_eq!(p_valuation(&q(1, 3), p3), Some(-1));
        assert_eq!(p_valuation(&q(10, 7), p5), Some(1));
        assert_eq!(p_valuation(&q(0, 1), p5), None);
        for (p, e) in [(2u64, 0u32), (2, 1), (2, 100), (3, 37), (5, 64), (7, 255)] {
            let n = -BigInt::from(p).pow(e) * 11;
            assert_eq!(valuation_int(&n, Prime::new(p).unwrap()), Some(e as u64), "{p}^{e}");
        }
    }

    #[test]
    fn factoring() {
        let f = factor_integer(&BigUint::from(360u32)).unwrap();
        let f: Vec<(u64, u32)> = f.into_iter().map(|(p, e)| (p.get(), e)).collect();
        assert_eq!(f, [(2, 3), (3, 2), (5, 1)]);
        // a 61-bit prime cofactor after trial division
        let big = BigUint::from(12u32) * BigUint::from(2305843009213693951u64);
        let f = factor_integer(&big).unwrap();
        assert_eq!(f.last().unwrap().0.get(), 2305843009213693951);
        // product of two primes above the trial-division limit
        let semi = BigUint::from(1_000_003u64) * BigUint::from(1_000_033u64);
        assert!(matches!(factor_integer(&semi), Err(Error::Unfactored(_))));
    }
}
