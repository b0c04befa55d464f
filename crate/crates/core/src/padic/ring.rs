use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::Zero;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::exact::{Prime, Rational};
use crate::{Error, Result};

#[derive(Debug)]
struct RingData {
    p: Prime,
    prec: u32,
    p_big: BigUint,
    modulus: BigUint,
}

/// The residue ring `Z/pᴺ`, standing in for `Z_p` at absolute precision `N`.
#[derive(Clone, Debug)]
pub struct PadicRing(Arc<RingData>);

impl PartialEq for PadicRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.p == other.0.p && self.0.prec == other.0.prec)
    }
}

impl Eq for PadicRing {}

impl PadicRing {
    pub fn new(p: Prime, prec: u32) -> Result<Self> {
        if prec == 0 {
            return Err(Error::InvalidArgument("p-adic precision must be at least 1".into()));
        }
        let p_big = p.to_biguint();
        let modulus = p_big.pow(prec);
        Ok(PadicRing(Arc::new(RingData { p, prec, p_big, modulus })))
    }

    pub fn prime(&self) -> Prime {
        self.0.p
    }

    pub fn precision(&self) -> u32 {
        self.0.prec
    }

    /// `pᴺ`.
    pub fn modulus(&self) -> &BigUint {
        &self.0.modulus
    }

    /// The same prime at another precision.
    pub fn with_precision(&self, prec: u32) -> Result<PadicRing> {
        if prec == self.precision() {
            return Ok(self.clone());
        }
        PadicRing::new(self.prime(), prec)
    }

    /// `pᵉ` reduced mod `pᴺ` (zero once `e ≥ N`).
    pub fn p_pow(&self, e: u32) -> BigUint {
        if e >= self.precision() {
            BigUint::zero()
        } else {
            self.0.p_big.pow(e)
        }
    }

    pub fn reduce(&self, x: &BigUint) -> BigUint {
        x % self.modulus()
    }

    pub fn reduce_int(&self, x: &BigInt) -> BigUint {
        let m = BigInt::from_biguint(Sign::Plus, self.modulus().clone());
        x.mod_floor(&m).to_biguint().expect("non-negative after mod_floor")
    }

    pub fn reduce_rational(&self, x: &Rational) -> Result<BigUint> {
        let den = self.reduce_int(x.denom());
        let inv = self.inverse(&den).ok_or_else(|| Error::NotPadicInteger {
            value: format!("{}/{}", x.numer(), x.denom()),
            p: self.prime().get(),
        })?;
        Ok(self.mul(&self.reduce_int(x.numer()), &inv))
    }

    pub fn add(&self, a: &BigUint, b: &BigUint) -> BigUint {
        let s = a + b;
        if &s >= self.modulus() {
            s - self.modulus()
        } else {
            s
        }
    }

    pub fn sub(&self, a: &BigUint, b: &BigUint) -> BigUint {
        if a >= b {
            a - b
        } else {
            self.modulus() - (b - a)
        }
    }

    pub fn neg(&self, a: &BigUint) -> BigUint {
        if a.is_zero() {
            BigUint::zero()
        } else {
            self.modulus() - a
        }
    }

    pub fn mul(&self, a: &BigUint, b: &BigUint) -> BigUint {
        (a * b) % self.modulus()
    }

    /// Multiplicative inverse; exists exactly for units.
    pub fn inverse(&self, a: &BigUint) -> Option<BigUint> {
        if !self.is_unit(a) {
            return None;
        }
        let m = BigInt::from_biguint(Sign::Plus, self.modulus().clone());
        let eg = BigInt::from_biguint(Sign::Plus, a.clone()).extended_gcd(&m);
        eg.x.mod_floor(&m).to_biguint()
    }

    pub fn is_unit(&self, a: &BigUint) -> bool {
        !(a % &self.0.p_big).is_zero()
    }

    /// `v_p(a)` capped at `N`.
    pub fn valuation(&self, a: &BigUint) -> u32 {
        if a.is_zero() {
            return self.precision();
        }
        let mut v = 0;
        let mut x = a.clone();
        loop {
            let (q, r) = x.div_rem(&self.0.p_big);
            if !r.is_zero() {
                return v;
            }
            x = q;
            v += 1;
        }
    }

    /// Writes a nonzero residue as `pᵉ · u` with `u` a unit; returns `(e, u)`.
    /// The unit part is only determined modulo `p^(N-e)`.
    pub fn split(&self, a: &BigUint) -> Option<(u32, BigUint)> {
        if a.is_zero() {
            return None;
        }
        let e = self.valuation(a);
        Some((e, a / self.0.p_big.pow(e)))
    }

    pub fn scalar(&self, residue: BigUint) -> PadicScalar {
        PadicScalar { residue: self.reduce(&residue), ring: self.clone() }
    }

    pub fn from_int(&self, x: &BigInt) -> PadicScalar {
        PadicScalar { residue: self.reduce_int(x), ring: self.clone() }
    }

    pub fn from_rational(&self, x: &Rational) -> Result<PadicScalar> {
        Ok(PadicScalar { residue: self.reduce_rational(x)?, ring: self.clone() })
    }
}

/// Residue of a p-integral rational mod `pᴺ`.
pub fn padic_reduce(x: &Rational, p: Prime, prec: u32) -> Result<PadicScalar> {
    PadicRing::new(p, prec)?.from_rational(x)
}

/// A valuation read off a truncated residue.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PadicValuation {
    Exact(u32),
    /// The residue vanishes mod `pᴺ`; the true valuation is at least `N`.
    AtLeast(u32),
}

/// An element of `Z_p` known modulo `pᴺ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicScalar {
    ring: PadicRing,
    residue: BigUint,
}

impl PadicScalar {
    pub fn ring(&self) -> &PadicRing {
        &self.ring
    }

    pub fn residue(&self) -> &BigUint {
        &self.residue
    }

    pub fn into_residue(self) -> BigUint {
        self.residue
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.ring.is_unit(&self.residue)
    }

    pub fn valuation(&self) -> PadicValuation {
        if self.residue.is_zero() {
            PadicValuation::AtLeast(self.ring.precision())
        } else {
            PadicValuation::Exact(self.ring.valuation(&self.residue))
        }
    }

    pub fn inverse(&self) -> Option<PadicScalar> {
        let inv = self.ring.inverse(&self.residue)?;
        Some(PadicScalar { ring: self.ring.clone(), residue: inv })
    }

    pub fn norm(&self) -> PadicNorm {
        match self.valuation() {
            PadicValuation::Exact(v) => PadicNorm::exact(self.ring.prime(), v as i64),
            PadicValuation::AtLeast(n) => PadicNorm::at_most(self.ring.prime(), n as i64),
        }
    }
}

macro_rules! scalar_op {
    ($tr:ident, $f:ident) => {
        impl<'a> $tr<&'a PadicScalar> for &'a PadicScalar {
            type Output = PadicScalar;

            fn $f(self, rhs: &'a PadicScalar) -> PadicScalar {
                assert_eq!(self.ring, rhs.ring, "p-adic scalars over different rings");
                PadicScalar { residue: self.ring.$f(&self.residue, &rhs.residue), ring: self.ring.clone() }
            }
        }
    };
}

scalar_op!(Add, add);
scalar_op!(Sub, sub);
scalar_op!(Mul, mul);

impl Neg for &PadicScalar {
    type Output = PadicScalar;

    fn neg(self) -> PadicScalar {
        PadicScalar { residue: self.ring.neg(&self.residue), ring: self.ring.clone() }
    }
}

/// A p-adic absolute value `p^(-exponent)`, or an upper bound `≤ p^(-exponent)`
/// when precision ran out.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PadicNorm {
    p: u64,
    exponent: i64,
    bounded: bool,
}

impl PadicNorm {
    pub fn exact(p: Prime, exponent: i64) -> Self {
        PadicNorm { p: p.get(), exponent, bounded: false }
    }

    pub fn at_most(p: Prime, exponent: i64) -> Self {
        PadicNorm { p: p.get(), exponent, bounded: true }
    }

    /// `j` in `p^(-j)`.
    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    /// True when only the upper bound `p^(-exponent)` is known.
    pub fn is_bound(&self) -> bool {
        self.bounded
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    /// Caps at precision `n`: anything at or below `p^(-n)` becomes `≤ p^(-n)`.
    pub fn capped(self, n: u32) -> Self {
        if self.exponent >= n as i64 {
            PadicNorm { exponent: n as i64, bounded: true, ..self }
        } else {
            self
        }
    }

    /// Compares the upper bounds `p^(-exponent)`.
    pub fn cmp_bound(&self, other: &Self) -> Ordering {
        other.exponent.cmp(&self.exponent)
    }

    pub fn max_bound(self, other: Self) -> Self {
        if self.cmp_bound(&other) == Ordering::Less {
            other
        } else {
            self
        }
    }
}

impl fmt::Display for PadicNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bounded {
            write!(f, "<={}^-{}", self.p, self.exponent)
        } else {
            write!(f, "{}^{}", self.p, -self.exponent)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn reduction_examples() {
        assert_eq!(padic_reduce(&q(-2, 1), p(3), 2).unwrap().residue(), &BigUint::from(7u32));
        assert_eq!(padic_reduce(&q(1, 2), p(3), 2).unwrap().residue(), &BigUint::from(5u32));
        for n in [1, 5, 40] {
            assert!(matches!(
                padic_reduce(&q(1, 3), p(3), n),
                Err(Error::NotPadicInteger { p: 3, .. })
            ));
        }
        assert!(PadicRing::new(p(3), 0).is_err());
    }

    #[test]
    fn valuations_are_capped() {
        let ring = PadicRing::new(p(3), 4).unwrap();
        assert_eq!(ring.from_int(&BigInt::from(18)).valuation(), PadicValuation::Exact(2));
        assert_eq!(ring.from_int(&BigInt::from(81)).valuation(), PadicValuation::AtLeast(4));
        let zero_norm = ring.from_int(&BigInt::from(0)).norm();
        assert_eq!(zero_norm.to_string(), "<=3^-4");
        assert_eq!(ring.from_int(&BigInt::from(9)).norm().to_string(), "3^-2");
    }

    #[test]
    fn arithmetic_and_inverses() {
        let ring = PadicRing::new(p(5), 3).unwrap();
        let a = ring.from_int(&BigInt::from(7));
        let inv = a.inverse().unwrap();
        assert_eq!((&a * &inv).residue(), &BigUint::one());
        assert!(ring.from_int(&BigInt::from(10)).inverse().is_none());
        let b = ring.from_int(&BigInt::from(-3));
        assert_eq!((&a + &b).residue(), &BigUint::from(4u32));
        assert_eq!((&b - &a).residue(), &BigUint::from(115u32));
        assert_eq!((-&a).residue(), &BigUint::from(118u32));
        assert_eq!(ring.split(&BigUint::from(50u32)), Some((2, BigUint::from(2u32))));
    }
}
