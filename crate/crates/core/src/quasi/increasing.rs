use std::sync::OnceLock;

use crate::exact::{IntMatrix, RatMatrix, RatVector};
use crate::groups::StationaryPresentation;
use crate::{Error, Result};

/// `G = ⋃ αⁿ(F)` for a free subgroup `F ⊆ Qʳ` of full rank and an
/// automorphism `α` of `Qʳ` with `F ⊆ α(F)`.
///
/// Both live in fixed ambient coordinates: `basis` holds the generators of
/// `F` as rows, `alpha` acts on column vectors.
///
/// `α` is determined by the basis and the transition matrix and is only
/// materialized on request, since for adjoined presentations its entries
/// can be enormous.
#[derive(Clone, Debug)]
pub struct IncreasingPresentation {
    basis: RatMatrix,
    alpha: OnceLock<RatMatrix>,
    transition: RatMatrix,
}

impl PartialEq for IncreasingPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis && self.transition == other.transition
    }
}

impl Eq for IncreasingPresentation {}

impl IncreasingPresentation {
    pub fn new(basis: RatMatrix, alpha: RatMatrix) -> Result<Self> {
        let r = basis.rows();
        if r == 0 || !basis.is_square() || alpha.rows() != r || !alpha.is_square() {
            return Err(Error::Dimension("basis and automorphism must be square of the same size".into()));
        }
        let columns = basis.transpose();
        let inv = columns.inverse()?;
        let transition = inv.checked_mul(&alpha.inverse()?)?.checked_mul(&columns)?;
        if !transition.is_integral() {
            return Err(Error::Invariant("F is not contained in alpha(F)".into()));
        }
        Ok(IncreasingPresentation { basis, alpha: OnceLock::from(alpha), transition })
    }

    /// Assembles a presentation whose transition the caller has already
    /// computed as an integer matrix.
    pub(crate) fn from_parts(basis: RatMatrix, transition: &IntMatrix) -> Self {
        IncreasingPresentation { basis, alpha: OnceLock::new(), transition: RatMatrix::from(transition) }
    }

    /// `⋃ A⁻ⁿ(Zʳ)` as `F = Zʳ`, `α = A⁻¹`.
    pub fn from_stationary(p: &StationaryPresentation) -> Result<Self> {
        Ok(Self::from_parts(RatMatrix::identity(p.rank()), p.matrix()))
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    /// Generators of `F`, one per row.
    pub fn basis(&self) -> &RatMatrix {
        &self.basis
    }

    /// `α = F·B⁻¹·F⁻¹` with `F` the basis columns.
    pub fn alpha(&self) -> &RatMatrix {
        self.alpha.get_or_init(|| {
            let columns = self.basis.transpose();
            let (f, f_den) = columns.clear_denominators();
            let (f_inv, f_inv_den) = columns.inverse().expect("bases are nonsingular").clear_denominators();
            let (b_inv, b_den) = self.transition.inverse().expect("transitions are nonsingular").clear_denominators();
            RatMatrix::from_scaled(&(&(&f * &b_inv) * &f_inv), &(f_den * f_inv_den * b_den))
        })
    }

    /// The integer matrix `B` with `gᵢ = Σⱼ B_ji·α(gⱼ)`. In the coordinates
    /// of the basis `α` acts as `B⁻¹`, so `G ≅ ⋃ B⁻ⁿ(Zʳ)`.
    pub fn transition(&self) -> &RatMatrix {
        &self.transition
    }

    pub fn increasing_to_limit(&self) -> Result<StationaryPresentation> {
        StationaryPresentation::new(self.transition.to_integer().expect("checked at construction"))
    }

    /// Coordinates of an ambient vector in the basis of `F`.
    pub fn coordinates(&self, z: &RatVector) -> Result<RatVector> {
        if z.dim() != self.rank() {
            return Err(Error::Dimension("vector dimension differs from the rank".into()));
        }
        Ok(self.basis.transpose().inverse()?.apply(z))
    }

    /// Ambient vector with the given coordinates in the basis of `F`.
    pub fn ambient(&self, coords: &RatVector) -> RatVector {
        self.basis.transpose().apply(coords)
    }

    /// Least `n` with `z ∈ αⁿ(F)`, or `None` when `z ∉ G`.
    pub fn contains(&self, z: &RatVector, precision: u32) -> Result<Option<u64>> {
        let limit = self.increasing_to_limit()?;
        Ok(limit.member(&self.coordinates(z)?, precision)?.and_then(|g| g.certificate()))
    }
}
