//! Splitting an integer monic polynomial over `Z_p` into its unit-root and
//! ideal-root factors.
//!
//! Over a splitting field the roots of a monic `χ ∈ Z[x]` are integral, and
//! each one either has absolute value 1 (a unit root) or is divisible by the
//! uniformizer (an ideal root). Grouping them gives `χ = χ¹·χ⁰` with both
//! factors in `Z_p[x]`. Neither the field nor its roots are needed: the
//! factorization mod p is `χ ≡ x^(r-k)·ḡ` where `k` is read off the
//! coefficients, and Hensel lifting recovers it to any precision.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exact::Prime;
use crate::padic::{PadicMatrix, PadicPoly, PadicRing};
use crate::{Error, Result};

/// `χ ≡ χ¹·χ⁰ mod pᴺ` together with `u·χ¹ + v·χ⁰ ≡ 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitIdealSplit {
    ring: PadicRing,
    k: usize,
    chi1: PadicPoly,
    chi0: PadicPoly,
    u: PadicPoly,
    v: PadicPoly,
}

impl UnitIdealSplit {
    pub fn prime(&self) -> Prime {
        self.ring.prime()
    }

    pub fn precision(&self) -> u32 {
        self.ring.precision()
    }

    pub fn ring(&self) -> &PadicRing {
        &self.ring
    }

    /// Number of unit roots, which is `deg χ¹`.
    pub fn unit_root_count(&self) -> usize {
        self.k
    }

    /// Unit-root factor `χ¹`.
    pub fn chi1(&self) -> &PadicPoly {
        &self.chi1
    }

    /// Ideal-root factor `χ⁰`.
    pub fn chi0(&self) -> &PadicPoly {
        &self.chi0
    }

    /// Cofactor of `χ¹`.
    pub fn u(&self) -> &PadicPoly {
        &self.u
    }

    /// Cofactor of `χ⁰`.
    pub fn v(&self) -> &PadicPoly {
        &self.v
    }

    /// The idempotent `v(A)·χ⁰(A)` projecting onto the kernel of `χ¹(A)`
    /// along the kernel of `χ⁰(A)`.
    pub fn unit_projector(&self, a: &PadicMatrix) -> Result<PadicMatrix> {
        self.v.mul(&self.chi0).eval_matrix(a)
    }
}

fn check_monic(chi: &[BigInt]) -> Result<()> {
    match chi.first() {
        Some(c) if c.is_one() => Ok(()),
        _ => Err(Error::NotMonic),
    }
}

/// Number of roots of absolute value 1: the largest `i` with `p ∤ αᵢ`, where
/// `chi = (1, α₁, …, α_r)` lists the coefficients from the leading one down.
pub fn unit_root_count(chi: &[BigInt], p: Prime) -> Result<usize> {
    check_monic(chi)?;
    Ok((0..chi.len())
        .rev()
        .find(|&i| !chi[i].is_multiple_of(&p.to_bigint()))
        .unwrap_or(0))
}

/// Factors `chi` (descending coefficients, leading 1) mod `pᴺ`.
///
/// The mod-p seed `x^(r-k)·ḡ` is lifted quadratically, each step carried
/// out in the ring of the precision it reaches.
pub fn hensel_split(chi: &[BigInt], p: Prime, precision: u32) -> Result<UnitIdealSplit> {
    let k = unit_root_count(chi, p)?;
    let ring = PadicRing::new(p, precision)?;
    let r = chi.len() - 1;
    let f = PadicPoly::from_descending(&ring, chi);
    let (one, zero) = (PadicPoly::one(&ring), PadicPoly::zero(&ring));
    if k == 0 {
        return Ok(UnitIdealSplit { ring, k, chi1: one.clone(), chi0: f, u: one, v: zero });
    }
    if k == r {
        return Ok(UnitIdealSplit { ring, k, chi1: f, chi0: one.clone(), u: zero, v: one });
    }

    let mut cur = ring.with_precision(1)?;
    let mut g = PadicPoly::from_descending(&cur, &chi[..=k]);
    let mut h = PadicPoly::monomial(&cur, r - k);
    let (mut s, mut t) = bezout_cofactors(&g, &h)?;
    while cur.precision() < precision {
        let next = cur.with_precision((cur.precision() * 2).min(precision))?;
        let lift = |x: &PadicPoly| x.change_ring(&next);
        let (g0, h0, s0, t0) = (lift(&g), lift(&h), lift(&s), lift(&t));
        let e = f.change_ring(&next).sub(&g0.mul(&h0));
        let (q, rem) = s0.mul(&e).div_rem(&h0)?;
        let g1 = g0.add(&t0.mul(&e)).add(&q.mul(&g0));
        let h1 = h0.add(&rem);
        let b = s0.mul(&g1).add(&t0.mul(&h1)).sub(&PadicPoly::one(&next));
        let (c, d) = s0.mul(&b).div_rem(&h1)?;
        s = s0.sub(&d);
        t = t0.sub(&t0.mul(&b)).sub(&c.mul(&g1));
        g = g1;
        h = h1;
        cur = next;
    }

    let split = UnitIdealSplit { ring, k, chi1: g, chi0: h, u: s, v: t };
    if split.chi1.mul(&split.chi0) != f
        || split.u.mul(&split.chi1).add(&split.v.mul(&split.chi0)) != PadicPoly::one(&split.ring)
        || split.chi1.degree() != Some(k)
        || !split.chi1.is_monic()
        || !split.chi0.is_monic()
    {
        return Err(Error::Invariant("Hensel lifting lost the factorization".into()));
    }
    Ok(split)
}

/// Cofactors `(u, v)` with `u·chi1 + v·chi0 ≡ 1`, `deg u < deg chi0` and
/// `deg v < deg chi1`.
///
/// Solves the Sylvester system directly. Its determinant is the resultant,
/// a unit whenever the factors are coprime mod p, so elimination never meets
/// a non-unit pivot.
pub fn bezout_cofactors(chi1: &PadicPoly, chi0: &PadicPoly) -> Result<(PadicPoly, PadicPoly)> {
    let ring = chi1.ring();
    if chi0.ring() != ring {
        return Err(Error::Dimension("cofactors of polynomials over different rings".into()));
    }
    if !chi1.is_monic() || !chi0.is_monic() {
        return Err(Error::NotMonic);
    }
    let (d1, d0) = (chi1.degree().unwrap_or(0), chi0.degree().unwrap_or(0));
    if d1 == 0 {
        return Ok((PadicPoly::one(ring), PadicPoly::zero(ring)));
    }
    if d0 == 0 {
        return Ok((PadicPoly::zero(ring), PadicPoly::one(ring)));
    }
    // unknowns: u₀..u_{d0-1}, v₀..v_{d1-1}; equations: coefficients of x⁰..x^{n-1}
    let n = d0 + d1;
    let mut sylvester = PadicMatrix::zeros(ring, n, n);
    for j in 0..d0 {
        for (i, c) in chi1.coeffs().iter().enumerate() {
            sylvester.set(i + j, j, c.clone());
        }
    }
    for j in 0..d1 {
        for (i, c) in chi0.coeffs().iter().enumerate() {
            sylvester.set(i + j, d0 + j, c.clone());
        }
    }
    let mut rhs = vec![BigUint::zero(); n];
    rhs[0] = BigUint::one();
    let x = sylvester
        .solve(&rhs)
        .map_err(|_| Error::Invariant("factors are not coprime mod p".into()))?;
    Ok((PadicPoly::new(ring, x[..d0].to_vec()), PadicPoly::new(ring, x[d0..].to_vec())))
}
