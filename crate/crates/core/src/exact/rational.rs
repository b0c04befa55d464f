use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::ops::{Add, Mul, Sub};

use super::{format_rational, IntMatrix, Rational};
use crate::{Error, Result};

/// A column vector in `Qʳ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatVector(Vec<Rational>);

impl RatVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        RatVector(entries)
    }

    pub fn from_ints(entries: &[BigInt]) -> Self {
        RatVector(entries.iter().cloned().map(Rational::from_integer).collect())
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        RatVector(entries.iter().map(|&x| Rational::from_integer(x.into())).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        RatVector(vec![Rational::zero(); dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[i] = Rational::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|x| x.is_integer())
    }

    /// Least common multiple of the entry denominators.
    pub fn denominator(&self) -> BigInt {
        self.0.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
    }

    /// Integer entries, if the vector is integral.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.0.iter().map(|x| x.is_integer().then(|| x.to_integer())).collect()
    }

    pub fn scale(&self, c: &Rational) -> RatVector {
        RatVector(self.0.iter().map(|x| x * c).collect())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(format_rational).collect()
    }
}

impl Add for &RatVector {
    type Output = RatVector;

    fn add(self, rhs: &RatVector) -> RatVector {
        assert_eq!(self.dim(), rhs.dim(), "vector dimensions");
        RatVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RatVector {
    type Output = RatVector;

    fn sub(self, rhs: &RatVector) -> RatVector {
        assert_eq!(self.dim(), rhs.dim(), "vector dimensions");
        RatVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

/// Dense rational matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(RatMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Result<Self> {
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rational matrix".into()));
        }
        let n = rows.len();
        Ok(RatMatrix { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[RatVector]) -> Result<Self> {
        let dim = cols.first().map_or(0, RatVector::dim);
        if cols.iter().any(|c| c.dim() != dim) {
            return Err(Error::Dimension("columns of different lengths".into()));
        }
        let mut m = Self::zeros(dim, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, x) in c.entries().iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
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

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Rational) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> RatVector {
        RatVector::new((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn row_vectors(&self) -> Vec<RatVector> {
        (0..self.rows).map(|i| RatVector::new(self.row(i).to_vec())).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RatMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    pub fn to_integer(&self) -> Option<IntMatrix> {
        if !self.is_integral() {
            return None;
        }
        let data = self.data.iter().map(|x| x.to_integer()).collect();
        IntMatrix::new(self.rows, self.cols, data).ok()
    }

    /// Least common multiple of all entry denominators.
    pub fn denominator(&self) -> BigInt {
        self.data.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
    }

    pub fn checked_mul(&self, rhs: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a * rhs.get(k, j);
                    out.data[i * rhs.cols + j] += prod;
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &RatVector) -> RatVector {
        assert_eq!(self.cols, v.dim(), "dimension mismatch in matrix-vector product");
        RatVector::new(
            (0..self.rows)
                .map(|i| {
                    self.row(i)
                        .iter()
                        .zip(v.entries())
                        .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
                })
                .collect(),
        )
    }

    /// Gauss-Jordan inverse; [`Error::Singular`] if the determinant vanishes.
    pub fn inverse(&self) -> Result<RatMatrix> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&i| !a.get(i, col).is_zero()).ok_or(Error::Singular)?;
            if pivot != col {
                for j in 0..n {
                    a.data.swap(pivot * n + j, col * n + j);
                    inv.data.swap(pivot * n + j, col * n + j);
                }
            }
            let scale = a.get(col, col).recip();
            for j in 0..n {
                a.data[col * n + j] *= &scale;
                inv.data[col * n + j] *= &scale;
            }
            for i in 0..n {
                if i == col || a.get(i, col).is_zero() {
                    continue;
                }
                let f = a.get(i, col).clone();
                for j in 0..n {
                    let da = &f * a.get(col, j);
                    let di = &f * inv.get(col, j);
                    a.data[i * n + j] -= da;
                    inv.data[i * n + j] -= di;
                }
            }
        }
        Ok(inv)
    }

    /// `self^e` for any integer `e`; negative powers need an invertible matrix.
    pub fn pow(&self, e: i64) -> Result<RatMatrix> {
        if !self.is_square() {
            return Err(Error::Dimension("power of a non-square matrix".into()));
        }
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        // (M/d)^k = M^k / d^k, normalized once
        let (m, d) = base.clear_denominators();
        let k = e.unsigned_abs();
        Ok(Self::from_scaled(&m.pow(k), &num_traits::pow(d, k as usize)))
    }

    /// `(M, d)` with `self = M/d` and `d` the least common denominator.
    pub(crate) fn clear_denominators(&self) -> (IntMatrix, BigInt) {
        let d = self.denominator();
        let ints = self.data.iter().map(|x| x.numer() * (&d / x.denom())).collect();
        (IntMatrix::new(self.rows, self.cols, ints).expect("same shape"), d)
    }

    /// `m/d` in lowest terms.
    pub(crate) fn from_scaled(m: &IntMatrix, d: &BigInt) -> Self {
        let data = m.entries().iter().map(|x| Rational::new(x.clone(), d.clone())).collect();
        RatMatrix { rows: m.rows(), cols: m.cols(), data }
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row(i).iter().map(format_rational).collect()).collect()
    }
}

impl<'a> Mul<&'a RatMatrix> for &'a RatMatrix {
    type Output = RatMatrix;

    fn mul(self, rhs: &'a RatMatrix) -> RatMatrix {
        self.checked_mul(rhs).expect("matrix dimensions")
    }
}

impl From<&IntMatrix> for RatMatrix {
    fn from(m: &IntMatrix) -> Self {
        m.to_rational()
    }
}
