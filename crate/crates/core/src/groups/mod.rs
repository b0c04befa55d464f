//! Stationary groups `G = ⋃ A⁻ⁿ(Zʳ)` and their p-adic invariants.
//!
//! Elements of `G` are column vectors in `Qʳ`; functionals are row vectors
//! acting by `w·g`. For a prime `p` the characteristic polynomial of `A`
//! splits over `Z_p` as `χ¹·χ⁰` (unit roots, ideal roots), and
//! `G^{*p} = Hom(G, Z_p)` is the left kernel of `χ¹(A)`.

mod element;
mod functionals;
mod prefix;
mod presentation;

pub use element::GroupElement;
pub use functionals::{FunctionalBasis, UnitProjection};
pub use prefix::InductivePrefix;
pub use presentation::{DivisibilityWitness, StationaryPresentation};
