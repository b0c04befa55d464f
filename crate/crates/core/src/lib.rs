//! p-adic functionals on finite-rank torsion-free abelian groups.
//!
//! A rank-`r` torsion-free abelian group presented by a nonsingular integer
//! matrix `A` is the union `G = ⋃ A⁻ⁿ(Zʳ) ⊆ Qʳ`. This crate computes, in exact
//! arithmetic:
//!
//! * the group `Hom(G, Z_p)` of p-adic functionals, as the left kernel of the
//!   unit-root factor of the characteristic polynomial evaluated at `A`
//!   ([`groups::StationaryPresentation::functionals_basis`]);
//! * p-divisibility, the divisibility pseudometric `d_p`, membership in `G`
//!   and the pro-p corank;
//! * finite-stage approximations of the functional module for arbitrary
//!   inductive sequences ([`groups::InductivePrefix`]);
//! * stationary presentations rebuilt after adjoining rational elements or
//!   passing through a quasi-isomorphism ([`quasi`]).
//!
//! The layers build on each other: [`exact`] (integers, rationals, integer
//! matrices, lattices), [`padic`] (truncated `Z/pᴺ` arithmetic and Howell
//! forms), [`factor`] (unit/ideal root splitting by Hensel lifting),
//! [`groups`], [`quasi`], and the JSON command line front end in [`cli`].

pub mod cli;
pub mod error;
pub mod exact;
pub mod factor;
pub mod groups;
pub mod padic;
pub mod quasi;

pub use error::{Error, Result};
pub use exact::{IntMatrix, Prime, RatMatrix, RatVector, Rational};
pub use factor::{bezout_cofactors, hensel_split, unit_root_count, UnitIdealSplit};
pub use groups::{
    FunctionalBasis, GroupElement, InductivePrefix, StationaryPresentation, UnitProjection,
};
pub use padic::{PadicMatrix, PadicNorm, PadicPoly, PadicRing, PadicRowVec, PadicScalar, RowModule};
pub use quasi::{Adjunction, IncreasingPresentation, QuasiIsoData};

/// Absolute p-adic precision used when the caller does not choose one.
pub const DEFAULT_PRECISION: u32 = 64;
