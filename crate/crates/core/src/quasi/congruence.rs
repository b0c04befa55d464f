use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Pow, ToPrimitive};

use crate::exact::IntMatrix;
use crate::{Error, Result};

/// First repetition `Bᵏ ≡ Bˡ (mod m)` with `k > l ≥ 0` in the sequence
/// `I, B, B², …`.
///
/// Uses Brent's cycle finding, so memory stays constant however long the
/// preperiod and period are; the pair returned is `(μ + λ, μ)`, the same one
/// a table of all earlier powers would find.
pub fn power_congruence(b: &IntMatrix, m: &BigInt) -> Result<(u64, u64)> {
    if !b.is_square() {
        return Err(Error::Dimension("power congruence needs a square matrix".into()));
    }
    if *m < BigInt::from(2) {
        return Err(Error::InvalidArgument(format!("modulus must be at least 2, got {m}")));
    }
    let r = b.rows();
    // at most m^(r²) distinct residues; Brent's hare moves at most about
    // three times the index of the first repetition
    let states: BigUint = Pow::pow(m.magnitude(), (r * r) as u32) + 1u32;
    let cap = (states * 4u32).to_u64().unwrap_or(u64::MAX);
    let (mu, lambda) = match m.to_u64() {
        Some(m) => {
            let base: Vec<u64> = b.entries().iter().map(|x| x.mod_floor(&m.into()).to_u64().unwrap()).collect();
            let step = |x: &Vec<u64>| mul_small(x, &base, r, m);
            brent(identity_small(r, m), step, cap)
        }
        None => {
            let base = b.reduce_mod(m);
            let step = |x: &IntMatrix| (x * &base).reduce_mod(m);
            brent(IntMatrix::identity(r).reduce_mod(m), step, cap)
        }
    }
    .ok_or_else(|| Error::Invariant("no repetition among finitely many residues".into()))?;
    Ok((mu + lambda, mu))
}

fn identity_small(r: usize, m: u64) -> Vec<u64> {
    let mut x = vec![0; r * r];
    for i in 0..r {
        x[i * r + i] = 1 % m;
    }
    x
}

fn mul_small(x: &[u64], y: &[u64], r: usize, m: u64) -> Vec<u64> {
    let mut out = vec![0; r * r];
    for i in 0..r {
        for j in 0..r {
            let mut acc: u128 = 0;
            for k in 0..r {
                acc += x[i * r + k] as u128 * y[k * r + j] as u128;
                if m > u32::MAX as u64 {
                    acc %= m as u128;
                }
            }
            out[i * r + j] = (acc % m as u128) as u64;
        }
    }
    out
}

/// `(μ, λ)` for the sequence `x₀, f(x₀), …`: preperiod and period.
fn brent<T: Clone + Eq>(x0: T, f: impl Fn(&T) -> T, cap: u64) -> Option<(u64, u64)> {
    let mut power = 1u64;
    let mut lambda = 1u64;
    let mut tortoise = x0.clone();
    let mut hare = f(&x0);
    let mut steps = 1u64;
    while tortoise != hare {
        if power == lambda {
            tortoise = hare.clone();
            power = power.checked_mul(2)?;
            lambda = 0;
        }
        hare = f(&hare);
        lambda += 1;
        steps += 1;
        if steps > cap {
            return None;
        }
    }
    let mut tortoise = x0.clone();
    let mut hare = x0;
    for _ in 0..lambda {
        hare = f(&hare);
    }
    let mut mu = 0u64;
    while tortoise != hare {
        tortoise = f(&tortoise);
        hare = f(&hare);
        mu += 1;
    }
    Some((mu, lambda))
}

/// `Bᵏ − Bˡ ≡ 0 (mod m)`, checked by modular exponentiation.
pub(crate) fn congruence_holds(b: &IntMatrix, m: &BigInt, k: u64, l: u64) -> bool {
    let diff = &b.pow_mod(k, m) - &b.pow_mod(l, m);
    diff.divisible_by(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn small_examples() {
        assert_eq!(power_congruence(&IntMatrix::identity(3), &m(7)).unwrap(), (1, 0));
        assert_eq!(power_congruence(&IntMatrix::from_i64_rows(&[[1, 1], [0, 1]]), &m(2)).unwrap(), (2, 0));
        assert_eq!(power_congruence(&IntMatrix::from_i64_rows(&[[2]]), &m(3)).unwrap(), (2, 0));
        // 2ⁿ mod 12: 1, 2, 4, 8, 4
        assert_eq!(power_congruence(&IntMatrix::from_i64_rows(&[[2]]), &m(12)).unwrap(), (4, 2));
        assert_eq!(power_congruence(&IntMatrix::from_i64_rows(&[[0]]), &m(5)).unwrap(), (2, 1));
        assert!(power_congruence(&IntMatrix::identity(2), &m(1)).is_err());
    }

    #[test]
    fn big_modulus_path_agrees() {
        let b = IntMatrix::from_i64_rows(&[[2, 1], [1, 1]]);
        let small = power_congruence(&b, &m(1009)).unwrap();
        let big = BigInt::from(u64::MAX) * 2 + 1;
        let (k, l) = power_congruence(&IntMatrix::from_i64_rows(&[[3]]), &BigInt::from(7)).unwrap();
        assert_eq!((k, l), (6, 0));
        assert!(congruence_holds(&b, &m(1009), small.0, small.1));
        // huge modulus: the first repetition of a nilpotent matrix is immediate
        let nil = IntMatrix::from_i64_rows(&[[0, 1], [0, 0]]);
        assert_eq!(power_congruence(&nil, &big).unwrap(), (3, 2));
    }
}
