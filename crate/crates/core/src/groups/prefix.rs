use crate::exact::{IntMatrix, Prime};
use crate::padic::{PadicMatrix, PadicRing, RowModule};
use crate::{Error, Result};

/// A finite prefix `A₁, …, A_n` of an inductive system `Zʳ → Zʳ → ⋯`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InductivePrefix {
    rank: usize,
    mats: Vec<IntMatrix>,
}

impl InductivePrefix {
    pub fn new(rank: usize, mats: Vec<IntMatrix>) -> Result<Self> {
        for (i, m) in mats.iter().enumerate() {
            if m.rows() != rank || m.cols() != rank {
                return Err(Error::Dimension(format!("matrix {} is not {rank}x{rank}", i + 1)));
            }
            if crate::exact::det_exact(m)?.sign() == num_bigint::Sign::NoSign {
                return Err(Error::Singular);
            }
        }
        Ok(InductivePrefix { rank, mats })
    }

    /// `A` repeated `n` times.
    pub fn stationary(a: &IntMatrix, n: usize) -> Result<Self> {
        Self::new(a.rows(), vec![a.clone(); n])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.mats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mats.is_empty()
    }

    pub fn matrices(&self) -> &[IntMatrix] {
        &self.mats
    }

    /// Howell basis of `(Z/pᴺ)ʳ·A_n⋯A₁`, the stage-`n` approximation of
    /// `G^{*p}` from above. Stages decrease and `G^{*p}` is their
    /// intersection.
    pub fn limit_prefix_functionals(&self, p: Prime, precision: u32, stage: usize) -> Result<RowModule> {
        if stage > self.mats.len() {
            return Err(Error::InvalidArgument(format!("stage {stage} beyond a prefix of length {}", self.len())));
        }
        let ring = PadicRing::new(p, precision)?;
        let mut product = PadicMatrix::identity(&ring, self.rank);
        for a in &self.mats[..stage] {
            product = &PadicMatrix::from_int(&ring, a) * &product;
        }
        RowModule::span(&ring, self.rank, (0..self.rank).map(|i| product.row(i).into_entries()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::PadicRowVec;

    fn prime(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn stages() {
        let id = InductivePrefix::stationary(&IntMatrix::identity(2), 3).unwrap();
        let m = id.limit_prefix_functionals(prime(3), 4, 3).unwrap();
        assert_eq!(m, RowModule::full(m.ring(), 2));

        let three = InductivePrefix::stationary(&IntMatrix::from_i64_rows(&[[3]]), 2).unwrap();
        let m = three.limit_prefix_functionals(prime(3), 4, 2).unwrap();
        assert_eq!(m.rows().len(), 1);
        assert_eq!(m.rows()[0], [9u32.into()]);
        assert!(three.limit_prefix_functionals(prime(3), 4, 3).is_err());
    }

    #[test]
    fn stages_nest() {
        let a = IntMatrix::from_i64_rows(&[[0, 0, 0, -9], [1, 0, 0, 0], [0, 1, 0, 2], [0, 0, 1, 0]]);
        let prefix = InductivePrefix::stationary(&a, 6).unwrap();
        let stages: Vec<_> = (0..=6).map(|n| prefix.limit_prefix_functionals(prime(3), 6, n).unwrap()).collect();
        for w in stages.windows(2) {
            assert!(w[1].is_submodule_of(&w[0]));
        }
        let ring = stages[0].ring().clone();
        let alpha = 5389 % 729;
        let w = PadicRowVec::from_i64(&ring, &[0, 1, 0, -alpha]);
        assert!(stages.iter().all(|m| m.contains(&w)));
    }

    #[test]
    fn rejects_bad_matrices() {
        let sing = IntMatrix::from_i64_rows(&[[1, 1], [1, 1]]);
        assert_eq!(InductivePrefix::new(2, vec![sing]), Err(Error::Singular));
        assert!(InductivePrefix::new(3, vec![IntMatrix::identity(2)]).is_err());
    }
}
