//! Howell normal form for row modules over `Z/pᴺ`.
//!
//! `Z/pᴺ` is a chain ring: every nonzero residue is `pᵉ·u` with `u` a unit,
//! and the ideals are totally ordered. That makes echelon reduction simple
//! (always pivot on the entry of least valuation) and lets us normalize every
//! pivot to exactly `pᵉ`. The Howell property is obtained by feeding the row
//! `p^(N-e)·pivot_row`, whose pivot entry vanishes, back into the remaining
//! rows before moving to the next column.

use num_bigint::BigUint;
use num_traits::Zero;

use super::{PadicMatrix, PadicRing, PadicRowVec};
use crate::{Error, Result};

/// A submodule of `(Z/pᴺ)ʳ` held by its Howell basis.
///
/// Basis rows are sorted by pivot column, each pivot is exactly `pᵉ` with
/// `e < N`, entries above a pivot lie in `[0, pᵉ)`, and every element of the
/// module supported on columns `≥ c` is a combination of the basis rows with
/// pivot column `≥ c`. Equal modules have identical bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowModule {
    ring: PadicRing,
    dim: usize,
    rows: Vec<Vec<BigUint>>,
    pivots: Vec<(usize, u32)>,
}

impl RowModule {
    pub fn span(ring: &PadicRing, dim: usize, generators: Vec<Vec<BigUint>>) -> Result<RowModule> {
        if let Some(g) = generators.iter().find(|g| g.len() != dim) {
            return Err(Error::Dimension(format!("generator of length {} in dimension {dim}", g.len())));
        }
        Ok(howell(ring, dim, generators))
    }

    pub fn zero(ring: &PadicRing, dim: usize) -> RowModule {
        RowModule { ring: ring.clone(), dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ring: &PadicRing, dim: usize) -> RowModule {
        let rows = (0..dim)
            .map(|i| {
                let mut r = vec![BigUint::zero(); dim];
                r[i] = BigUint::from(1u32);
                r
            })
            .collect();
        howell(ring, dim, rows)
    }

    pub fn ring(&self) -> &PadicRing {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Basis rows as residue lists.
    pub fn rows(&self) -> &[Vec<BigUint>] {
        &self.rows
    }

    pub fn basis(&self) -> Vec<PadicRowVec> {
        self.rows.iter().map(|r| PadicRowVec::new(&self.ring, r.clone())).collect()
    }

    /// `(pivot column, pivot valuation)` for each basis row.
    pub fn pivots(&self) -> &[(usize, u32)] {
        &self.pivots
    }

    pub fn pivot_valuations(&self) -> Vec<u32> {
        self.pivots.iter().map(|&(_, e)| e).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// `log_p` of the number of elements.
    pub fn log_cardinality(&self) -> u64 {
        let n = self.ring.precision();
        self.pivots.iter().map(|&(_, e)| (n - e) as u64).sum()
    }

    /// Valuations of the elementary divisors, one per cyclic summand
    /// `Z/p^(N-e)` of the module.
    pub fn elementary_divisors(&self) -> Vec<u32> {
        smith_valuations(&self.ring, self.rows.clone())
    }

    /// Minimal number of generators.
    pub fn rank(&self) -> usize {
        self.elementary_divisors().len()
    }

    /// Number of free summands `Z/pᴺ`.
    pub fn free_rank(&self) -> usize {
        self.elementary_divisors().iter().filter(|&&e| e == 0).count()
    }

    pub fn contains(&self, w: &PadicRowVec) -> bool {
        if w.ring() != &self.ring || w.dim() != self.dim {
            return false;
        }
        let ring = &self.ring;
        let mut rest = w.entries().to_vec();
        for (row, &(col, e)) in self.rows.iter().zip(&self.pivots) {
            if rest[..col].iter().any(|x| !x.is_zero()) {
                return false;
            }
            if rest[col].is_zero() {
                continue;
            }
            if ring.valuation(&rest[col]) < e {
                return false;
            }
            let q = &rest[col] / ring.p_pow(e);
            for (x, b) in rest.iter_mut().zip(row) {
                let t = ring.mul(&q, b);
                *x = ring.sub(x, &t);
            }
        }
        rest.iter().all(Zero::is_zero)
    }

    /// True when every basis row of `self` lies in `other`.
    pub fn is_submodule_of(&self, other: &RowModule) -> bool {
        self.ring == other.ring
            && self.dim == other.dim
            && self.basis().iter().all(|w| other.contains(w))
    }
}

/// Canonical Howell basis of the module spanned by `rows`.
pub fn howell_form(ring: &PadicRing, dim: usize, rows: &[PadicRowVec]) -> Result<RowModule> {
    if rows.iter().any(|r| r.ring() != ring) {
        return Err(Error::Dimension("row vectors over different rings".into()));
    }
    RowModule::span(ring, dim, rows.iter().map(|r| r.entries().to_vec()).collect())
}

/// `true` iff `w` reduces to zero against the Howell basis of `m`.
pub fn row_module_contains(m: &RowModule, w: &PadicRowVec) -> bool {
    m.contains(w)
}

/// `{ w : wM ≡ 0 mod pᴺ }`.
///
/// Takes the Howell form of the augmented rows `[M | I]`; by the Howell
/// property the rows whose pivots fall in the identity block span exactly
/// the pairs `(0, w)` with `wM = 0`.
pub fn left_kernel(m: &PadicMatrix) -> RowModule {
    let ring = m.ring();
    let (r, c) = (m.rows(), m.cols());
    let augmented: Vec<Vec<BigUint>> = (0..r)
        .map(|i| {
            let mut row = m.row(i).into_entries();
            row.extend((0..r).map(|j| BigUint::from((i == j) as u32)));
            row
        })
        .collect();
    let h = howell(ring, c + r, augmented);
    let kernel_rows = h
        .rows
        .iter()
        .zip(&h.pivots)
        .filter(|(_, &(col, _))| col >= c)
        .map(|(row, _)| row[c..].to_vec())
        .collect();
    howell(ring, r, kernel_rows)
}

fn howell(ring: &PadicRing, dim: usize, generators: Vec<Vec<BigUint>>) -> RowModule {
    let n = ring.precision();
    let mut work: Vec<Vec<BigUint>> = generators
        .into_iter()
        .map(|g| g.iter().map(|x| ring.reduce(x)).collect::<Vec<_>>())
        .filter(|g| g.iter().any(|x| !x.is_zero()))
        .collect();
    let mut rows: Vec<Vec<BigUint>> = Vec::new();
    let mut pivots = Vec::new();

    for col in 0..dim {
        let best = work
            .iter()
            .enumerate()
            .filter(|(_, r)| !r[col].is_zero())
            .min_by_key(|(_, r)| ring.valuation(&r[col]))
            .map(|(i, _)| i);
        let Some(best) = best else { continue };
        let mut pivot = work.swap_remove(best);
        let (e, unit) = ring.split(&pivot[col]).expect("nonzero pivot");
        let inv = ring.inverse(&unit).expect("unit part is invertible");
        pivot = pivot.iter().map(|x| ring.mul(x, &inv)).collect();
        let pe = ring.p_pow(e);
        debug_assert_eq!(pivot[col], pe);

        for r in work.iter_mut() {
            if r[col].is_zero() {
                continue;
            }
            let q = &r[col] / &pe;
            for (x, b) in r.iter_mut().zip(&pivot) {
                let t = ring.mul(&q, b);
                *x = ring.sub(x, &t);
            }
            debug_assert!(r[col].is_zero());
        }
        let annihilated: Vec<BigUint> = pivot.iter().map(|x| ring.mul(x, &ring.p_pow(n - e))).collect();
        // p^(N-e) is zero when e = 0; only a nonzero row adds information
        if e > 0 && annihilated.iter().any(|x| !x.is_zero()) {
            work.push(annihilated);
        }
        work.retain(|r| r.iter().any(|x| !x.is_zero()));
        rows.push(pivot);
        pivots.push((col, e));
    }

    // entries above each pivot into [0, p^e); later rows never touch
    // earlier pivot columns, so one forward sweep suffices
    for i in 0..rows.len() {
        let (col, e) = pivots[i];
        let pe = ring.p_pow(e);
        for j in 0..i {
            let q = &rows[j][col] / &pe;
            if q.is_zero() {
                continue;
            }
            let below = rows[i].clone();
            for (x, b) in rows[j].iter_mut().zip(&below) {
                let t = ring.mul(&q, b);
                *x = ring.sub(x, &t);
            }
        }
    }
    RowModule { ring: ring.clone(), dim, rows, pivots }
}

fn smith_valuations(ring: &PadicRing, mut m: Vec<Vec<BigUint>>) -> Vec<u32> {
    let mut out = Vec::new();
    loop {
        let best = m
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().enumerate().map(move |(j, x)| (i, j, x)))
            .filter(|(_, _, x)| !x.is_zero())
            .min_by_key(|(_, _, x)| ring.valuation(x))
            .map(|(i, j, _)| (i, j));
        let Some((pi, pj)) = best else { break };
        let (e, unit) = ring.split(&m[pi][pj]).expect("nonzero");
        let inv = ring.inverse(&unit).expect("unit");
        let pivot_row: Vec<BigUint> = m[pi].iter().map(|x| ring.mul(x, &inv)).collect();
        let pe = ring.p_pow(e);
        let mut next = Vec::with_capacity(m.len().saturating_sub(1));
        for (i, r) in m.iter().enumerate() {
            if i == pi {
                continue;
            }
            let q = &r[pj] / &pe;
            let reduced: Vec<BigUint> = r
                .iter()
                .zip(&pivot_row)
                .map(|(x, b)| ring.sub(x, &ring.mul(&q, b)))
                .collect();
            // column operations clear the rest of the pivot row, which only
            // alters entries by multiples of the already-eliminated column
            let mut reduced = reduced;
            reduced.remove(pj);
            next.push(reduced);
        }
        out.push(e);
        m = next;
    }
    out.sort_unstable();
    out
}
