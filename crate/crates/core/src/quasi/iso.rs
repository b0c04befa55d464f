use num_bigint::BigInt;
use num_traits::Signed;

use super::{adjoin_element, IncreasingPresentation};
use crate::exact::{RatMatrix, RatVector, Rational};
use crate::groups::StationaryPresentation;
use crate::{Error, Result};

/// Maps `α: G → H` and `β: H → G` with `α∘β = n` and `β∘α = n`, written as
/// matrices on the ambient coordinates of each group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiIsoData {
    n: BigInt,
    alpha: RatMatrix,
    beta: RatMatrix,
}

impl QuasiIsoData {
    pub fn new(n: BigInt, alpha: RatMatrix, beta: RatMatrix) -> Result<Self> {
        if !n.is_positive() {
            return Err(Error::InvalidArgument(format!("n must be positive, got {n}")));
        }
        if !alpha.is_square() || !beta.is_square() || alpha.rows() != beta.rows() {
            return Err(Error::Dimension("quasi-isomorphism maps must be square of equal size".into()));
        }
        let scalar = RatMatrix::identity(alpha.rows()).scale(&Rational::from_integer(n.clone()));
        if alpha.checked_mul(&beta)? != scalar || beta.checked_mul(&alpha)? != scalar {
            return Err(Error::InvalidArgument(format!("alpha and beta do not compose to {n}")));
        }
        Ok(QuasiIsoData { n, alpha, beta })
    }

    pub fn n(&self) -> &BigInt {
        &self.n
    }

    /// `α: G → H`.
    pub fn alpha(&self) -> &RatMatrix {
        &self.alpha
    }

    /// `β: H → G`.
    pub fn beta(&self) -> &RatMatrix {
        &self.beta
    }
}

/// Stationary presentation of `G`, given `H`, a quasi-isomorphism and coset
/// representatives of `β(H)` in `G`.
///
/// Starts from `β(H) = ⋃ βA⁻ⁿ(Zʳ)` and adjoins the representatives one by
/// one. Each must satisfy `α(z) ∈ H`, which is the same as `n·z ∈ β(H)`.
pub fn quasi_to_stationary(
    h: &StationaryPresentation,
    q: &QuasiIsoData,
    reps: &[RatVector],
    precision: u32,
) -> Result<(IncreasingPresentation, StationaryPresentation)> {
    if q.alpha.rows() != h.rank() {
        return Err(Error::Dimension("quasi-isomorphism size differs from the rank".into()));
    }
    let a_inv = RatMatrix::from(h.matrix()).inverse()?;
    let beta_inv = q.beta.inverse()?;
    let alpha_g = q.beta.checked_mul(&a_inv)?.checked_mul(&beta_inv)?;
    let mut current = IncreasingPresentation::new(q.beta.transpose(), alpha_g)?;
    for (i, z) in reps.iter().enumerate() {
        if z.dim() != h.rank() {
            return Err(Error::Dimension(format!("representative {} has the wrong dimension", i + 1)));
        }
        if h.member(&q.alpha.apply(z), precision)?.is_none() {
            return Err(Error::InvalidArgument(format!(
                "representative {} is not mapped into H, so n times it is not in beta(H)",
                i + 1
            )));
        }
        current = adjoin_element(&current, z)?.presentation;
    }
    let stationary = current.increasing_to_limit()?;
    Ok((current, stationary))
}
