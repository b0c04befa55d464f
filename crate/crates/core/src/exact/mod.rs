//! Exact integer and rational linear algebra.
//!
//! Everything here is arbitrary precision and never rounds. Matrices act on
//! column vectors from the left; lattices are spanned by rows.

mod charpoly;
mod hnf;
mod matrix;
mod primes;
mod rational;

pub use charpoly::{charpoly, det_exact};
pub use hnf::{hnf_int, lattice_member};
pub use matrix::IntMatrix;
pub use primes::{factor_integer, is_prime_u64, p_valuation, valuation_int, Prime};
pub use rational::{RatMatrix, RatVector};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Parses `"a"` or `"a/b"` into a normalized rational.
pub fn parse_rational(s: &str) -> crate::Result<Rational> {
    use num_bigint::BigInt;
    use num_traits::Zero;

    let bad = || crate::Error::InvalidArgument(format!("not an exact rational: {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().map(Rational::from_integer).map_err(|_| bad()),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(crate::Error::InvalidArgument(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Formats a rational as `"a"` when integral and `"a/b"` otherwise.
pub fn format_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_normalized() {
        let x = parse_rational("6/-4").unwrap();
        assert_eq!(format_rational(&x), "-3/2");
        assert_eq!(format_rational(&parse_rational("10/5").unwrap()), "2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
