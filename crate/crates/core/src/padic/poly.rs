use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::{PadicMatrix, PadicRing};
use crate::{Error, Result};

/// Polynomial over `Z/pᴺ`, coefficients in ascending degree order with no
/// trailing zero residues.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicPoly {
    ring: PadicRing,
    coeffs: Vec<BigUint>,
}

impl PadicPoly {
    pub fn new(ring: &PadicRing, coeffs: Vec<BigUint>) -> Self {
        let coeffs = coeffs.iter().map(|c| ring.reduce(c)).collect();
        let mut p = PadicPoly { ring: ring.clone(), coeffs };
        p.trim();
        p
    }

    /// From integer coefficients listed from the leading term down, as in
    /// `(1, α₁, …, α_r)`.
    pub fn from_descending(ring: &PadicRing, coeffs: &[BigInt]) -> Self {
        let asc = coeffs.iter().rev().map(|c| ring.reduce_int(c)).collect();
        Self::new(ring, asc)
    }

    pub fn zero(ring: &PadicRing) -> Self {
        PadicPoly { ring: ring.clone(), coeffs: Vec::new() }
    }

    pub fn one(ring: &PadicRing) -> Self {
        Self::new(ring, vec![BigUint::one()])
    }

    /// `xᵏ`.
    pub fn monomial(ring: &PadicRing, k: usize) -> Self {
        let mut coeffs = vec![BigUint::zero(); k + 1];
        coeffs[k] = BigUint::one();
        Self::new(ring, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn ring(&self) -> &PadicRing {
        &self.ring
    }

    /// Ascending coefficients.
    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigUint {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Residues from the leading coefficient down.
    pub fn descending(&self) -> Vec<BigUint> {
        let mut c = self.coeffs.clone();
        if c.is_empty() {
            c.push(BigUint::zero());
        }
        c.reverse();
        c
    }

    /// `None` for the zero polynomial (mod pᴺ).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// The same integer representatives read in another precision.
    pub fn change_ring(&self, ring: &PadicRing) -> PadicPoly {
        Self::new(ring, self.coeffs.clone())
    }

    /// Reduction mod p, used to inspect residue-field behaviour.
    pub fn reduce_mod_p(&self) -> PadicPoly {
        self.change_ring(&self.ring.with_precision(1).expect("precision 1"))
    }

    pub fn add(&self, rhs: &PadicPoly) -> PadicPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.ring.add(&self.coeff(i), &rhs.coeff(i))).collect();
        Self::new(&self.ring, coeffs)
    }

    pub fn sub(&self, rhs: &PadicPoly) -> PadicPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.ring.sub(&self.coeff(i), &rhs.coeff(i))).collect();
        Self::new(&self.ring, coeffs)
    }

    pub fn mul(&self, rhs: &PadicPoly) -> PadicPoly {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(&self.ring);
        }
        let mut out = vec![BigUint::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(&self.ring, out)
    }

    pub fn scale(&self, c: &BigUint) -> PadicPoly {
        Self::new(&self.ring, self.coeffs.iter().map(|x| self.ring.mul(x, c)).collect())
    }

    /// Division with remainder by a polynomial whose leading coefficient is
    /// a unit.
    pub fn div_rem(&self, divisor: &PadicPoly) -> Result<(PadicPoly, PadicPoly)> {
        let ring = &self.ring;
        let d = divisor.degree().ok_or_else(|| Error::InvalidArgument("division by zero polynomial".into()))?;
        let lead_inv = ring
            .inverse(&divisor.coeffs[d])
            .ok_or_else(|| Error::InvalidArgument("divisor has a non-unit leading coefficient".into()))?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((Self::zero(ring), self.clone()));
        }
        let mut quot = vec![BigUint::zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let c = ring.mul(&rem[k + d], &lead_inv);
            if c.is_zero() {
                continue;
            }
            for (i, b) in divisor.coeffs.iter().enumerate() {
                let t = ring.mul(&c, b);
                rem[k + i] = ring.sub(&rem[k + i], &t);
            }
            quot[k] = c;
        }
        rem.truncate(d);
        Ok((Self::new(ring, quot), Self::new(ring, rem)))
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, a: &PadicMatrix) -> Result<PadicMatrix> {
        matrix_poly_eval(self, a)
    }
}

/// `f(A)` mod `pᴺ` by Horner's rule.
pub fn matrix_poly_eval(f: &PadicPoly, a: &PadicMatrix) -> Result<PadicMatrix> {
    if !a.is_square() || a.ring() != f.ring() {
        return Err(Error::Dimension("polynomial evaluation needs a square matrix over the same ring".into()));
    }
    let n = a.rows();
    let ring = f.ring();
    let mut acc = PadicMatrix::zeros(ring, n, n);
    for c in f.coeffs().iter().rev() {
        acc = &acc * a;
        for i in 0..n {
            let x = ring.add(acc.get(i, i), c);
            acc.set(i, i, x);
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{IntMatrix, Prime};

    fn ring(p: u64, n: u32) -> PadicRing {
        PadicRing::new(Prime::new(p).unwrap(), n).unwrap()
    }

    fn poly(r: &PadicRing, desc: &[i64]) -> PadicPoly {
        let c: Vec<BigInt> = desc.iter().map(|&x| x.into()).collect();
        PadicPoly::from_descending(r, &c)
    }

    #[test]
    fn horner_examples() {
        let r = ring(7, 5);
        let id = PadicMatrix::identity(&r, 2);
        assert!(matrix_poly_eval(&poly(&r, &[1, -1]), &id).unwrap().is_zero());
        let rot = PadicMatrix::from_int(&r, &IntMatrix::from_i64_rows(&[[0, -1], [1, 0]]));
        assert!(matrix_poly_eval(&poly(&r, &[1, 0, 1]), &rot).unwrap().is_zero());
        let nil = PadicMatrix::from_int(&r, &IntMatrix::from_i64_rows(&[[0, 0], [1, 0]]));
        assert!(matrix_poly_eval(&poly(&r, &[1, 0, 0]), &nil).unwrap().is_zero());
        let x = poly(&r, &[1, 0]);
        assert_eq!(matrix_poly_eval(&x, &rot).unwrap(), rot);
        assert!(matrix_poly_eval(&x, &PadicMatrix::zeros(&r, 2, 3)).is_err());
    }

    #[test]
    fn division() {
        let r = ring(3, 4);
        let f = poly(&r, &[1, 0, -2, 0, 9]);
        let g = poly(&r, &[1, 0, 1]);
        let (q, rem) = f.div_rem(&g).unwrap();
        assert_eq!(q.mul(&g).add(&rem), f);
        assert!(rem.degree().is_none_or(|d| d < 2));
        let bad = poly(&r, &[3, 1]);
        assert!(f.div_rem(&bad).is_err());
        assert_eq!(poly(&r, &[81, 1]).degree(), Some(0));
    }
}
