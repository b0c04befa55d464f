//! Truncated p-adic arithmetic: `Z/pᴺ` with a single absolute precision per
//! computation.
//!
//! A [`PadicRing`] fixes `(p, N)` and is shared (cheaply cloned) by every
//! scalar, vector, matrix and polynomial built over it. Residues are stored
//! as integers in `[0, pᴺ)`. Valuations that reach `N` are reported as "at
//! least `N`", never as infinite.

mod howell;
mod linalg;
mod poly;
mod ring;

pub use howell::{howell_form, left_kernel, row_module_contains, RowModule};
pub use linalg::{PadicMatrix, PadicRowVec};
pub use poly::{matrix_poly_eval, PadicPoly};
pub use ring::{padic_reduce, PadicNorm, PadicRing, PadicScalar, PadicValuation};
