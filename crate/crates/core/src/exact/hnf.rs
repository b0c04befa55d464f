use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{IntMatrix, RatVector};
use crate::{Error, Result};

fn combine(a: &[BigInt], b: &[BigInt], x: &BigInt, y: &BigInt) -> Vec<BigInt> {
    a.iter().zip(b).map(|(p, q)| x * p + y * q).collect()
}

/// Row-style Hermite normal form of the lattice spanned by `rows`.
///
/// The result has one row per basis vector (so its row count is the rank),
/// positive pivots, zeros below each pivot and entries above a pivot reduced
/// into `[0, pivot)`.
pub fn hnf_int(rows: &[Vec<BigInt>]) -> Result<IntMatrix> {
    let dim = match rows.first() {
        Some(r) => r.len(),
        None => return Err(Error::InvalidArgument("HNF of an empty generator list".into())),
    };
    if rows.iter().any(|r| r.len() != dim) {
        return Err(Error::Dimension("generators of different lengths".into()));
    }
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let mut rank = 0;
    for col in 0..dim {
        let Some(first) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, first);
        for i in rank + 1..m.len() {
            if m[i][col].is_zero() {
                continue;
            }
            let a = m[rank][col].clone();
            let b = m[i][col].clone();
            let eg = a.extended_gcd(&b);
            let top = combine(&m[rank], &m[i], &eg.x, &eg.y);
            let bottom = combine(&m[rank], &m[i], &-(&b / &eg.gcd), &(&a / &eg.gcd));
            m[rank] = top;
            m[i] = bottom;
        }
        if m[rank][col].is_negative() {
            for x in m[rank].iter_mut() {
                *x = -&*x;
            }
        }
        let pivot = m[rank][col].clone();
        for i in 0..rank {
            let q = m[i][col].div_floor(&pivot);
            if !q.is_zero() {
                let row = m[rank].clone();
                for (x, p) in m[i].iter_mut().zip(&row) {
                    *x -= &q * p;
                }
            }
        }
        rank += 1;
    }
    m.truncate(rank);
    IntMatrix::from_rows(m, dim)
}

/// Integer coordinates of `v` in the lattice with HNF basis `basis`, or
/// `None` when `v` is not in the lattice.
pub fn lattice_member(basis: &IntMatrix, v: &RatVector) -> Result<Option<Vec<BigInt>>> {
    if basis.cols() != v.dim() {
        return Err(Error::Dimension(format!(
            "vector of length {} against a lattice in dimension {}",
            v.dim(),
            basis.cols()
        )));
    }
    let Some(mut rest) = v.to_integers() else {
        return Ok(None);
    };
    let mut coords = Vec::with_capacity(basis.rows());
    for i in 0..basis.rows() {
        let row = basis.row(i);
        let Some(col) = row.iter().position(|x| !x.is_zero()) else {
            coords.push(BigInt::zero());
            continue;
        };
        if rest[..col].iter().any(|x| !x.is_zero()) {
            return Ok(None);
        }
        let (q, r) = rest[col].div_rem(&row[col]);
        if !r.is_zero() {
            return Ok(None);
        }
        for (x, b) in rest.iter_mut().zip(row) {
            *x -= &q * b;
        }
        coords.push(q);
    }
    Ok(rest.iter().all(Zero::is_zero).then_some(coords))
}
