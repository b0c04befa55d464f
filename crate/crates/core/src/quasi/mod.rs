//! Stationary presentations rebuilt from other descriptions of a group:
//! increasing unions `⋃ αⁿ(F)`, adjunction of a rational element, and
//! passage through a quasi-isomorphism.

mod adjoin;
mod congruence;
mod increasing;
mod iso;

pub use adjoin::{adjoin_element, Adjunction};
pub use congruence::power_congruence;
pub use increasing::IncreasingPresentation;
pub use iso::{quasi_to_stationary, QuasiIsoData};
