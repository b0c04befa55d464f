use num_bigint::BigInt;
use num_traits::One;

use super::congruence::{congruence_holds, power_congruence};
use super::IncreasingPresentation;
use crate::exact::{hnf_int, RatMatrix, RatVector, Rational};
use crate::groups::StationaryPresentation;
use crate::{Error, Result};

/// `⟨G, z⟩` presented as `⋃ (αᵏ)ⁿ(F′)`, with the data of its construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Adjunction {
    pub presentation: IncreasingPresentation,
    pub stationary: StationaryPresentation,
    /// Order of `z` modulo `F`.
    pub m: BigInt,
    /// `B^l1 ≡ B^l2 (mod m)` for the transition matrix `B` of the input.
    pub l1: u64,
    pub l2: u64,
    /// Power of `α` used by the output, `l1 − l2`.
    pub k: u64,
}

/// Presents the subgroup of `Qʳ` generated by `G` and `z`.
///
/// With `m` the order of `z` modulo `F` and `Bˡ¹ ≡ Bˡ² (mod m)`, the new
/// free subgroup is `F′ = ⟨α^l2(F), z⟩` and the new automorphism is
/// `α^(l1−l2)`: the congruence puts `α^(l2−l1)(z) − z` into `α^l2(F)`, which
/// gives `F′ ⊆ α^(l1−l2)(F′)`.
pub fn adjoin_element(p: &IncreasingPresentation, z: &RatVector) -> Result<Adjunction> {
    let coords = p.coordinates(z)?;
    let m = coords.denominator();
    let b = p.transition().to_integer().expect("integral transition");
    if m.is_one() {
        return Ok(Adjunction {
            presentation: p.clone(),
            stationary: p.increasing_to_limit()?,
            m,
            l1: 1,
            l2: 0,
            k: 1,
        });
    }
    let (l1, l2) = power_congruence(&b, &m)?;
    let k = l1 - l2;
    if !congruence_holds(&b, &m, l1, l2) {
        return Err(Error::Invariant(format!("B^{l1} and B^{l2} differ mod {m}")));
    }

    let r = p.rank();
    let shrink = RatMatrix::from(&b).pow(-(l2 as i64))?;
    let mut generators: Vec<Vec<Rational>> =
        shrink.transpose().row_vectors().into_iter().map(|v| v.entries().to_vec()).collect();
    generators.push(coords.entries().to_vec());
    // columns of h are F′-generators in F-coordinates
    let h = rational_hnf(&generators, r)?.transpose();
    let new_basis = p.basis().transpose().checked_mul(&h)?.transpose();

    // Bᵏ is huge; keep both products integral and divide once
    // B′ = H⁻¹·Bᵏ·H
    let (h_int, h_den) = h.clear_denominators();
    let (h_inv, h_inv_den) = h.inverse()?.clear_denominators();
    let numer = &(&h_inv * &b.pow(k)) * &h_int;
    let den = h_den * h_inv_den;
    if !numer.divisible_by(&den) {
        return Err(Error::Invariant("adjoined subgroup is not increasing".into()));
    }
    let transition = numer.exact_div(&den);
    let presentation = IncreasingPresentation::from_parts(new_basis, &transition);
    let stationary = presentation.increasing_to_limit()?;
    Ok(Adjunction { presentation, stationary, m, l1, l2, k })
}

/// Hermite basis of the lattice spanned by rational rows.
fn rational_hnf(rows: &[Vec<Rational>], dim: usize) -> Result<RatMatrix> {
    let den = rows
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, x| num_integer::Integer::lcm(&acc, x.denom()));
    let scaled: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x.numer() * (&den / x.denom())).collect())
        .collect();
    let h = hnf_int(&scaled)?;
    if h.rows() != dim {
        return Err(Error::Invariant("adjoined lattice lost rank".into()));
    }
    let inv = Rational::new(BigInt::one(), den);
    Ok(RatMatrix::from(&h).scale(&inv))
}

impl StationaryPresentation {
    /// [`adjoin_element`] applied to `⋃ A⁻ⁿ(Zʳ)`.
    pub fn adjoin(&self, z: &RatVector) -> Result<Adjunction> {
        adjoin_element(&IncreasingPresentation::from_stationary(self)?, z)
    }
}
