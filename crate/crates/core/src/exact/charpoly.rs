//! Division-free characteristic polynomial and fraction-free determinant.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntMatrix;
use crate::{Error, Result};

/// Coefficients `(1, α₁, …, α_r)` of `det(xI − A) = xʳ + α₁xʳ⁻¹ + ⋯ + α_r`.
///
/// Berkowitz's algorithm: peel off the leading row and column, and multiply
/// the characteristic vector of the trailing principal submatrix by a
/// lower-triangular Toeplitz matrix built from `a₁₁`, `R·Sʲ·C`. Only ring
/// operations are used, so every intermediate value is an integer.
pub fn charpoly(a: &IntMatrix) -> Result<Vec<BigInt>> {
    if !a.is_square() {
        return Err(Error::Dimension(format!(
            "characteristic polynomial of a {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let mut poly = vec![BigInt::one()];
    for i in (0..n).rev() {
        let s = n - i - 1;
        // Toeplitz column: 1, -a_ii, -R C, -R S C, ..., -R S^(s-1) C
        let mut t = Vec::with_capacity(s + 2);
        t.push(BigInt::one());
        t.push(-a.get(i, i));
        let mut col: Vec<BigInt> = (i + 1..n).map(|k| a.get(k, i).clone()).collect();
        for step in 0..s {
            let rc: BigInt = (i + 1..n).zip(&col).map(|(k, c)| a.get(i, k) * c).sum();
            t.push(-rc);
            if step + 1 < s {
                col = (i + 1..n)
                    .map(|r| (i + 1..n).zip(&col).map(|(k, c)| a.get(r, k) * c).sum())
                    .collect();
            }
        }
        let next = (0..s + 2)
            .map(|row| {
                (0..=row.min(s))
                    .map(|c| &t[row - c] * &poly[c])
                    .fold(BigInt::zero(), |acc, x| acc + x)
            })
            .collect();
        poly = next;
    }
    Ok(poly)
}

/// Exact determinant by Bareiss fraction-free elimination.
pub fn det_exact(a: &IntMatrix) -> Result<BigInt> {
    if !a.is_square() {
        return Err(Error::Dimension(format!(
            "determinant of a {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let mut m = a.row_vecs();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    Ok(if n == 0 { BigInt::one() } else { sign * &m[n - 1][n - 1] })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn dugas() -> IntMatrix {
        IntMatrix::from_i64_rows(&[[0, 0, 0, -9], [1, 0, 0, 0], [0, 1, 0, 2], [0, 0, 1, 0]])
    }

    #[test]
    fn companion_matrix() {
        assert_eq!(charpoly(&dugas()).unwrap(), ints(&[1, 0, -2, 0, 9]));
        assert_eq!(det_exact(&dugas()).unwrap(), BigInt::from(9));
    }

    #[test]
    fn small_cases() {
        assert_eq!(charpoly(&IntMatrix::identity(2)).unwrap(), ints(&[1, -2, 1]));
        assert_eq!(det_exact(&IntMatrix::identity(5)).unwrap(), BigInt::one());
        let d = IntMatrix::diagonal(&ints(&[2, 3]));
        assert_eq!(det_exact(&d).unwrap(), BigInt::from(6));
        let a = IntMatrix::from_i64_rows(&[[1, 2], [3, 4]]);
        assert_eq!(charpoly(&a).unwrap(), ints(&[1, -5, -2]));
        assert_eq!(det_exact(&a).unwrap(), BigInt::from(-2));
    }

    #[test]
    fn pivoting_and_singular() {
        let a = IntMatrix::from_i64_rows(&[[0, 1], [1, 0]]);
        assert_eq!(det_exact(&a).unwrap(), BigInt::from(-1));
        let s = IntMatrix::from_i64_rows(&[[1, 2, 3], [2, 4, 6], [0, 1, 1]]);
        assert_eq!(det_exact(&s).unwrap(), BigInt::zero());
        assert!(charpoly(&IntMatrix::zeros(2, 3)).is_err());
        assert!(det_exact(&IntMatrix::zeros(3, 2)).is_err());
    }
}
