use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use std::ops::{Add, Mul, Sub};

use super::{PadicNorm, PadicRing, PadicScalar};
use crate::exact::{IntMatrix, RatVector};
use crate::{Error, Result};

/// A row vector in `(Z_pʳ)*`, truncated mod `pᴺ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicRowVec {
    ring: PadicRing,
    entries: Vec<BigUint>,
}

impl PadicRowVec {
    /// Entries are reduced into `[0, pᴺ)`.
    pub fn new(ring: &PadicRing, entries: Vec<BigUint>) -> Self {
        let entries = entries.iter().map(|x| ring.reduce(x)).collect();
        PadicRowVec { ring: ring.clone(), entries }
    }

    pub fn from_ints(ring: &PadicRing, entries: &[BigInt]) -> Self {
        PadicRowVec { ring: ring.clone(), entries: entries.iter().map(|x| ring.reduce_int(x)).collect() }
    }

    pub fn from_i64(ring: &PadicRing, entries: &[i64]) -> Self {
        let ints: Vec<BigInt> = entries.iter().map(|&x| x.into()).collect();
        Self::from_ints(ring, &ints)
    }

    /// Reduction of a p-integral rational vector.
    pub fn from_rational(ring: &PadicRing, v: &RatVector) -> Result<Self> {
        let entries = v.entries().iter().map(|x| ring.reduce_rational(x)).collect::<Result<_>>()?;
        Ok(PadicRowVec { ring: ring.clone(), entries })
    }

    pub fn zeros(ring: &PadicRing, dim: usize) -> Self {
        PadicRowVec { ring: ring.clone(), entries: vec![BigUint::zero(); dim] }
    }

    pub fn ring(&self) -> &PadicRing {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<BigUint> {
        self.entries
    }

    pub fn get(&self, i: usize) -> PadicScalar {
        self.ring.scalar(self.entries[i].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Smallest entry valuation, capped at `N`.
    pub fn valuation(&self) -> u32 {
        self.entries.iter().map(|x| self.ring.valuation(x)).min().unwrap_or(self.ring.precision())
    }

    /// `‖v‖_p = max |v_i|_p`; reported as `≤ p^(-N)` when every entry vanishes
    /// mod `pᴺ`.
    pub fn norm(&self) -> PadicNorm {
        let v = self.valuation();
        let p = self.ring.prime();
        if v >= self.ring.precision() {
            PadicNorm::at_most(p, v as i64)
        } else {
            PadicNorm::exact(p, v as i64)
        }
    }

    pub fn scale(&self, c: &BigUint) -> Self {
        let entries = self.entries.iter().map(|x| self.ring.mul(x, c)).collect();
        PadicRowVec { ring: self.ring.clone(), entries }
    }

    /// Pairing with a column vector of residues.
    pub fn dot(&self, column: &[BigUint]) -> BigUint {
        assert_eq!(self.dim(), column.len(), "dimension mismatch in pairing");
        let s: BigUint = self.entries.iter().zip(column).map(|(a, b)| a * b).sum();
        self.ring.reduce(&s)
    }

    /// Row vector times matrix: the right action `w ↦ wM`.
    pub fn mul_matrix(&self, m: &PadicMatrix) -> Result<PadicRowVec> {
        if m.ring() != &self.ring || m.rows() != self.dim() {
            return Err(Error::Dimension(format!(
                "row of length {} times {}x{} matrix",
                self.dim(),
                m.rows(),
                m.cols()
            )));
        }
        let entries = (0..m.cols())
            .map(|j| {
                let s: BigUint = self.entries.iter().enumerate().map(|(i, a)| a * m.get(i, j)).sum();
                self.ring.reduce(&s)
            })
            .collect();
        Ok(PadicRowVec { ring: self.ring.clone(), entries })
    }
}

impl Add for &PadicRowVec {
    type Output = PadicRowVec;

    fn add(self, rhs: &PadicRowVec) -> PadicRowVec {
        assert!(self.ring == rhs.ring && self.dim() == rhs.dim(), "incompatible row vectors");
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| self.ring.add(a, b)).collect();
        PadicRowVec { ring: self.ring.clone(), entries }
    }
}

impl Sub for &PadicRowVec {
    type Output = PadicRowVec;

    fn sub(self, rhs: &PadicRowVec) -> PadicRowVec {
        assert!(self.ring == rhs.ring && self.dim() == rhs.dim(), "incompatible row vectors");
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| self.ring.sub(a, b)).collect();
        PadicRowVec { ring: self.ring.clone(), entries }
    }
}

/// Matrix over `Z/pᴺ`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicMatrix {
    ring: PadicRing,
    rows: usize,
    cols: usize,
    data: Vec<BigUint>,
}

impl PadicMatrix {
    pub fn new(ring: &PadicRing, rows: usize, cols: usize, data: Vec<BigUint>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        let data = data.iter().map(|x| ring.reduce(x)).collect();
        Ok(PadicMatrix { ring: ring.clone(), rows, cols, data })
    }

    pub fn from_int(ring: &PadicRing, m: &IntMatrix) -> Self {
        let data = m.entries().iter().map(|x| ring.reduce_int(x)).collect();
        PadicMatrix { ring: ring.clone(), rows: m.rows(), cols: m.cols(), data }
    }

    pub fn zeros(ring: &PadicRing, rows: usize, cols: usize) -> Self {
        PadicMatrix { ring: ring.clone(), rows, cols, data: vec![BigUint::zero(); rows * cols] }
    }

    pub fn identity(ring: &PadicRing, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.data[i * n + i] = ring.reduce(&BigUint::from(1u32));
        }
        m
    }

    pub fn ring(&self) -> &PadicRing {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigUint {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigUint) {
        self.data[i * self.cols + j] = self.ring.reduce(&x);
    }

    pub fn row(&self, i: usize) -> PadicRowVec {
        PadicRowVec { ring: self.ring.clone(), entries: self.data[i * self.cols..(i + 1) * self.cols].to_vec() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &BigUint) -> Self {
        let data = self.data.iter().map(|x| self.ring.mul(x, c)).collect();
        PadicMatrix { ring: self.ring.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn checked_mul(&self, rhs: &PadicMatrix) -> Result<PadicMatrix> {
        if self.ring != rhs.ring || self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let s: BigUint = (0..self.cols).map(|k| self.get(i, k) * rhs.get(k, j)).sum();
                data.push(self.ring.reduce(&s));
            }
        }
        Ok(PadicMatrix { ring: self.ring.clone(), rows: self.rows, cols: rhs.cols, data })
    }

    pub fn checked_add(&self, rhs: &PadicMatrix) -> Result<PadicMatrix> {
        if self.ring != rhs.ring || (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::Dimension("adding matrices of different shapes".into()));
        }
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| self.ring.add(a, b)).collect();
        Ok(PadicMatrix { ring: self.ring.clone(), rows: self.rows, cols: self.cols, data })
    }

    /// Matrix times column vector of residues.
    pub fn apply(&self, column: &[BigUint]) -> Vec<BigUint> {
        assert_eq!(self.cols, column.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| {
                let s: BigUint = (0..self.cols).map(|k| self.get(i, k) * &column[k]).sum();
                self.ring.reduce(&s)
            })
            .collect()
    }

    /// Solves `self · x = rhs` for a matrix that is invertible mod p.
    ///
    /// Elimination always finds a unit pivot in that case, so no precision is
    /// lost. [`Error::Singular`] if the reduction mod p is singular.
    pub fn solve(&self, rhs: &[BigUint]) -> Result<Vec<BigUint>> {
        if !self.is_square() || rhs.len() != self.rows {
            return Err(Error::Dimension("solve needs a square system".into()));
        }
        let n = self.rows;
        let ring = &self.ring;
        let mut a: Vec<Vec<BigUint>> = (0..n).map(|i| self.row(i).into_entries()).collect();
        let mut b = rhs.to_vec();
        for col in 0..n {
            let pivot = (col..n).find(|&i| ring.is_unit(&a[i][col])).ok_or(Error::Singular)?;
            a.swap(col, pivot);
            b.swap(col, pivot);
            let inv = ring.inverse(&a[col][col]).expect("unit pivot");
            a[col] = a[col].iter().map(|x| ring.mul(x, &inv)).collect();
            b[col] = ring.mul(&b[col], &inv);
            for i in 0..n {
                if i == col || a[i][col].is_zero() {
                    continue;
                }
                let f = a[i][col].clone();
                for j in col..n {
                    let t = ring.mul(&f, &a[col][j]);
                    a[i][j] = ring.sub(&a[i][j], &t);
                }
                let t = ring.mul(&f, &b[col]);
                b[i] = ring.sub(&b[i], &t);
            }
        }
        Ok(b)
    }

    /// Integer matrix of residues in `[0, pᴺ)`.
    pub fn to_int(&self) -> IntMatrix {
        let data = self.data.iter().map(|x| BigInt::from(x.clone())).collect();
        IntMatrix::new(self.rows, self.cols, data).expect("shape preserved")
    }
}

impl<'a> Mul<&'a PadicMatrix> for &'a PadicMatrix {
    type Output = PadicMatrix;

    fn mul(self, rhs: &'a PadicMatrix) -> PadicMatrix {
        self.checked_mul(rhs).expect("matrix dimensions")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Prime;

    fn ring(p: u64, n: u32) -> PadicRing {
        PadicRing::new(Prime::new(p).unwrap(), n).unwrap()
    }

    #[test]
    fn norms() {
        let r = ring(3, 4);
        assert_eq!(PadicRowVec::from_i64(&r, &[9, 3, 27]).norm(), PadicNorm::exact(r.prime(), 1));
        assert_eq!(PadicRowVec::from_i64(&r, &[81, 0]).norm(), PadicNorm::at_most(r.prime(), 4));
        assert_eq!(PadicRowVec::from_i64(&r, &[2, 3]).norm().to_string(), "3^0");
    }

    #[test]
    fn right_action_and_solve() {
        let r = ring(5, 3);
        let a = PadicMatrix::from_int(&r, &IntMatrix::from_i64_rows(&[[2, 1], [1, 4]]));
        let w = PadicRowVec::from_i64(&r, &[1, -1]);
        assert_eq!(w.mul_matrix(&a).unwrap(), PadicRowVec::from_i64(&r, &[1, -3]));
        let rhs = vec![BigUint::from(3u32), BigUint::from(4u32)];
        let x = a.solve(&rhs).unwrap();
        assert_eq!(a.apply(&x), rhs);
        let sing = PadicMatrix::from_int(&r, &IntMatrix::from_i64_rows(&[[5, 0], [0, 1]]));
        assert_eq!(sing.solve(&rhs), Err(Error::Singular));
    }
}
