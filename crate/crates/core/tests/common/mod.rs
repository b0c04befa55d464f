//! Oracles for the integration tests. None of them calls the algorithm it
//! checks: characteristic polynomials come from Faddeev–LeVerrier over Q,
//! divisibility and membership from plain iteration, and power congruences
//! from a table of every power seen.
#![allow(dead_code)]

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use padic_functionals::{IntMatrix, RatMatrix, RatVector};

pub const DUGAS: [[i64; 4]; 4] = [[0, 0, 0, -9], [1, 0, 0, 0], [0, 1, 0, 2], [0, 0, 1, 0]];

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

pub fn int_matrix(rows: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| big(x)).collect()).collect(), rows[0].len()).unwrap()
}

/// Plain `Vec<Vec<BigInt>>` copy for oracle arithmetic.
pub fn rows_of(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

pub fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = b[0].len();
    a.iter()
        .map(|row| (0..n).map(|j| row.iter().zip(b).map(|(x, brow)| x * &brow[j]).sum()).collect())
        .collect()
}

pub fn mat_vec(a: &[Vec<BigInt>], v: &[BigInt]) -> Vec<BigInt> {
    a.iter().map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum()).collect()
}

/// `det(xI − A)` by Faddeev–LeVerrier, leading coefficient first.
pub fn charpoly_oracle(a: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = a.len();
    let q = |x: &BigInt| BigRational::from_integer(x.clone());
    let a: Vec<Vec<BigRational>> = a.iter().map(|r| r.iter().map(q).collect()).collect();
    let mut coeffs = vec![BigRational::one()];
    let mut m = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A·M_{k−1} + c_{k−1}·I, c_k = −tr(A·M_k)/k
        let prev = coeffs[k - 1].clone();
        let mut next = vec![vec![BigRational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = BigRational::zero();
                for t in 0..n {
                    s += &a[i][t] * &m[t][j];
                }
                if i == j {
                    s += &prev;
                }
                next[i][j] = s;
            }
        }
        m = next;
        let mut tr = BigRational::zero();
        for i in 0..n {
            for t in 0..n {
                tr += &a[i][t] * &m[t][i];
            }
        }
        coeffs.push(-tr / BigRational::from_integer(big(k as i64)));
    }
    coeffs.into_iter().map(|c| {
        assert!(c.is_integer());
        c.to_integer()
    }).collect()
}

pub fn random_nonsingular(rng: &mut ChaCha8Rng, r: usize, lo: i64, hi: i64) -> IntMatrix {
    loop {
        let rows: Vec<Vec<i64>> = (0..r).map(|_| (0..r).map(|_| rng.gen_range(lo..=hi)).collect()).collect();
        let m = int_matrix(&rows);
        let cp = charpoly_oracle(&rows_of(&m));
        if !cp[r].is_zero() {
            return m;
        }
    }
}

pub fn random_vector(rng: &mut ChaCha8Rng, r: usize, lo: i64, hi: i64) -> Vec<BigInt> {
    (0..r).map(|_| big(rng.gen_range(lo..=hi))).collect()
}

/// `A⁻ⁿx`.
pub fn member_from(a: &IntMatrix, n: u32, x: &[BigInt]) -> RatVector {
    let inv = RatMatrix::from(a).inverse().unwrap();
    let mut v = RatVector::from_ints(x);
    for _ in 0..n {
        v = inv.apply(&v);
    }
    v
}

/// Least `n ≤ bound` with `Aⁿv` integral, by exact rational iteration.
pub fn iterate_to_integral(a: &[Vec<BigInt>], v: &RatVector, bound: u64) -> Option<u64> {
    let den = v.entries().iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut x: Vec<BigInt> = v.entries().iter().map(|c| c.numer() * (&den / c.denom())).collect();
    for n in 0..=bound {
        if x.iter().all(|c| c.is_multiple_of(&den)) {
            return Some(n);
        }
        x = mat_vec(a, &x);
    }
    None
}

pub fn scale(v: &RatVector, num: i64, den: &BigInt) -> RatVector {
    RatVector::new(v.entries().iter().map(|x| x * BigRational::new(big(num), den.clone())).collect())
}

/// Largest `j ≤ n_max` with `g/pʲ ∈ G`, searching powers `Aⁿ` up to
/// `cert + r·(j + r) + r`.
pub fn divisibility_depth(a: &[Vec<BigInt>], g: &RatVector, cert: u64, p: u64, n_max: u32) -> u32 {
    let r = a.len() as u64;
    let mut best = 0;
    for j in 1..=n_max {
        let pj = big(p as i64).pow(j);
        let v = scale(g, 1, &pj);
        if iterate_to_integral(a, &v, cert + r * (j as u64 + r) + r).is_none() {
            break;
        }
        best = j;
    }
    best
}

/// First repetition in `I, B, B², …` mod `m`, found with a table.
pub fn first_repeat(b: &[Vec<BigInt>], m: &BigInt) -> (u64, u64) {
    let n = b.len();
    let reduce = |x: Vec<Vec<BigInt>>| -> Vec<Vec<BigInt>> {
        x.into_iter().map(|r| r.into_iter().map(|c| c.mod_floor(m)).collect()).collect()
    };
    let mut seen: HashMap<Vec<Vec<BigInt>>, u64> = HashMap::new();
    let mut cur: Vec<Vec<BigInt>> =
        reduce((0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect());
    let mut k = 0u64;
    loop {
        if let Some(&l) = seen.get(&cur) {
            return (k, l);
        }
        seen.insert(cur.clone(), k);
        cur = reduce(mat_mul(&cur, b));
        k += 1;
    }
}

/// Largest `i` with `p ∤ αᵢ` (α₀ = 1).
pub fn unit_roots_oracle(chi: &[BigInt], p: u64) -> usize {
    let p = big(p as i64);
    (0..chi.len()).rev().find(|&i| !chi[i].is_multiple_of(&p)).unwrap()
}

/// Product of two coefficient lists (leading first) reduced mod `m`.
pub fn poly_mul_mod(f: &[BigInt], g: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        for (j, b) in g.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    strip(out.into_iter().map(|c| c.mod_floor(m)).collect())
}

/// Drops leading zeros, keeping at least one coefficient.
pub fn strip(mut f: Vec<BigInt>) -> Vec<BigInt> {
    while f.len() > 1 && f[0].is_zero() {
        f.remove(0);
    }
    f
}

pub fn reduce_all(f: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    strip(f.iter().map(|c| c.mod_floor(m)).collect())
}

/// `v_p(x)` for nonzero `x`.
pub fn val(x: &BigInt, p: u64) -> u32 {
    let p = big(p as i64);
    let mut x = x.abs();
    let mut e = 0;
    while x.is_multiple_of(&p) {
        x /= &p;
        e += 1;
    }
    e
}
