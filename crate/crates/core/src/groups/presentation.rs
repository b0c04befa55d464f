use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{FunctionalBasis, GroupElement, UnitProjection};
use crate::exact::{charpoly, det_exact, factor_integer, valuation_int, IntMatrix, Prime, RatVector};
use crate::factor::{hensel_split, unit_root_count, UnitIdealSplit};
use crate::padic::{left_kernel, PadicMatrix, PadicNorm, PadicRowVec};
use crate::{Error, Result};

/// `G = ⋃ A⁻ⁿ(Zʳ)` for a nonsingular integer matrix `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StationaryPresentation {
    matrix: IntMatrix,
    det: BigInt,
    charpoly: Vec<BigInt>,
}

/// Outcome of the p-divisibility test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DivisibilityWitness {
    pub divisible: bool,
    /// Least `n ≥ 1` with `Aⁿ ≡ 0 mod p`, present exactly when divisible.
    pub witness_power: Option<u64>,
}

impl StationaryPresentation {
    pub fn new(matrix: IntMatrix) -> Result<Self> {
        if !matrix.is_square() || matrix.rows() == 0 {
            return Err(Error::Dimension(format!(
                "a presentation needs a nonempty square matrix, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        let det = det_exact(&matrix)?;
        if det.is_zero() {
            return Err(Error::Singular);
        }
        let charpoly = charpoly(&matrix)?;
        Ok(StationaryPresentation { matrix, det, charpoly })
    }

    pub fn from_i64_rows<const C: usize>(rows: &[[i64; C]]) -> Result<Self> {
        Self::new(IntMatrix::from_i64_rows(rows))
    }

    pub fn rank(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn det(&self) -> &BigInt {
        &self.det
    }

    /// `(1, α₁, …, α_r)`, leading coefficient first.
    pub fn charpoly(&self) -> &[BigInt] {
        &self.charpoly
    }

    pub fn split(&self, p: Prime, precision: u32) -> Result<UnitIdealSplit> {
        hensel_split(&self.charpoly, p, precision)
    }

    /// `G` is p-divisible iff `p` divides every non-leading coefficient of
    /// `χ_A`, iff some power of `A` vanishes mod p.
    pub fn is_p_divisible(&self, p: Prime) -> DivisibilityWitness {
        let divisible = self.pro_p_corank(p) == 0;
        if !divisible {
            return DivisibilityWitness { divisible, witness_power: None };
        }
        let m = p.to_bigint();
        let base = self.matrix.reduce_mod(&m);
        let mut power = base.clone();
        // A mod p is nilpotent, so Cayley–Hamilton bounds the search by r
        for n in 1..=self.rank() as u64 {
            if power.is_zero() {
                return DivisibilityWitness { divisible, witness_power: Some(n) };
            }
            power = (&power * &base).reduce_mod(&m);
        }
        unreachable!("a nilpotent matrix mod p has vanishing r-th power")
    }

    /// `Z_p`-rank of the completion, equal to the number of unit roots.
    pub fn pro_p_corank(&self, p: Prime) -> usize {
        unit_root_count(&self.charpoly, p).expect("characteristic polynomials are monic")
    }

    /// Howell basis of `G^{*p}` mod `pᴺ`: the left kernel of `χ¹(A)`.
    pub fn functionals_basis(&self, p: Prime, precision: u32) -> Result<FunctionalBasis> {
        let split = self.split(p, precision)?;
        let a = PadicMatrix::from_int(split.ring(), &self.matrix);
        let module = left_kernel(&split.chi1().eval_matrix(&a)?);
        Ok(FunctionalBasis::new(module, split))
    }

    /// The component `g¹ = v(A)·χ⁰(A)·g` of `g` in the unit subspace, with
    /// its norm, which is `d_p(g, 0)` for members.
    pub fn unit_projection(&self, p: Prime, precision: u32, g: &GroupElement<'_>) -> Result<UnitProjection> {
        self.check_owner(g)?;
        let v = g.vector();
        let den = v.denominator();
        let e = valuation_int(&den, p).expect("denominators are nonzero") as u32;
        let r = self.rank() as u32;
        let headroom = r * r * valuation_int(&self.det, p).expect("nonsingular") as u32;
        let work = precision + e + headroom;
        let split = self.split(p, work)?;
        let ring = split.ring();
        let projector = split.unit_projector(&PadicMatrix::from_int(ring, &self.matrix))?;
        let scaled = v.scale(&BigInt::from(p.get()).pow(e).into());
        let column = PadicRowVec::from_rational(ring, &scaled)?;
        let y = projector.apply(column.entries());
        let y_val = y.iter().map(|x| ring.valuation(x)).min().unwrap_or(work);
        let j = y_val as i64 - e as i64;
        let out_ring = ring.with_precision(precision)?;
        let norm = if j >= precision as i64 {
            PadicNorm::at_most(p, precision as i64)
        } else {
            PadicNorm::exact(p, j)
        };
        let component = (j >= 0).then(|| {
            let pe = ring.p_pow(e);
            y.iter().map(|x| out_ring.reduce(&(x / &pe))).collect()
        });
        Ok(UnitProjection::new(out_ring, component, norm, e))
    }

    /// `d_p(g, h) = ‖(g − h)¹‖_p`, reported as `p^-j` for `j < N` and as the
    /// bound `≤ p^-N` otherwise.
    pub fn dp_distance(
        &self,
        p: Prime,
        precision: u32,
        g: &GroupElement<'_>,
        h: &GroupElement<'_>,
    ) -> Result<PadicNorm> {
        for x in [g, h] {
            self.check_owner(x)?;
            if x.certificate().is_none() && self.member(x.vector(), precision)?.is_none() {
                return Err(Error::NotMember);
            }
        }
        let diff = GroupElement::unchecked(self, g.vector() - h.vector());
        Ok(self.unit_projection(p, precision, &diff)?.norm())
    }

    /// Decides `v ∈ G`.
    ///
    /// A vector lies in `G` iff every prime of its denominator divides
    /// `det A` and every q-adic functional takes q-adic integer values on it.
    /// Members come back with the least `n` making `Aⁿv` integral; failing
    /// to find one within the iteration bound is reported rather than
    /// trusted.
    pub fn member(&self, v: &RatVector, precision: u32) -> Result<Option<GroupElement<'_>>> {
        if v.dim() != self.rank() {
            return Err(Error::Dimension(format!("vector of dimension {} in rank {}", v.dim(), self.rank())));
        }
        if precision == 0 {
            return Err(Error::InvalidArgument("precision must be at least 1".into()));
        }
        if v.is_integral() {
            return Ok(Some(GroupElement::certified(self, v.clone(), 0)));
        }
        let den = v.denominator();
        let mut rest = den.clone();
        loop {
            let g = rest.gcd(&self.det);
            if g.is_one() {
                break;
            }
            rest /= g;
        }
        if !rest.is_one() {
            return Ok(None);
        }
        let factors = factor_integer(den.magnitude())?;
        for &(q, _) in &factors {
            let e = valuation_int(&den, q).expect("nonzero") as u32;
            let basis = self.functionals_basis(q, e + precision)?;
            if !basis.integral_on(v)? {
                return Ok(None);
            }
        }
        let bound = self.iteration_bound(v)?;
        match self.certificate_search(v, bound) {
            Some(n) => Ok(Some(GroupElement::certified(self, v.clone(), n))),
            None => Err(Error::RaisePrecision(format!(
                "functionals accept the vector but no power up to {bound} clears its denominator"
            ))),
        }
    }

    /// Checked construction of an element.
    pub fn element(&self, v: RatVector) -> Result<GroupElement<'_>> {
        self.member(&v, crate::DEFAULT_PRECISION)?.ok_or(Error::NotMember)
    }

    /// `r·(e_max + r) + r` where `e_max` is the largest prime-power exponent
    /// in the denominator of `v`.
    pub fn iteration_bound(&self, v: &RatVector) -> Result<u64> {
        let den = v.denominator();
        let e_max = if den.is_one() {
            0
        } else {
            factor_integer(den.magnitude())?.iter().map(|&(_, e)| e as u64).max().unwrap_or(0)
        };
        let r = self.rank() as u64;
        Ok(r * (e_max + r) + r)
    }

    /// Least `n ≤ bound` with `Aⁿv ∈ Zʳ`.
    pub fn certificate_search(&self, v: &RatVector, bound: u64) -> Option<u64> {
        let den = v.denominator();
        // Aⁿv = Aⁿx / den, and integrality only depends on Aⁿx mod den
        let mut x: Vec<BigInt> = v
            .entries()
            .iter()
            .map(|c| (c.numer() * (&den / c.denom())).mod_floor(&den))
            .collect();
        for n in 0..=bound {
            if x.iter().all(Zero::is_zero) {
                return Some(n);
            }
            x = self.matrix.apply(&x).into_iter().map(|c| c.mod_floor(&den)).collect();
        }
        None
    }

    /// `Aⁿ` for `n ≥ 0`.
    pub fn power(&self, n: u64) -> IntMatrix {
        self.matrix.pow(n)
    }

    fn check_owner(&self, g: &GroupElement<'_>) -> Result<()> {
        if g.presentation() != self {
            return Err(Error::InvalidArgument("element belongs to a different presentation".into()));
        }
        if g.vector().dim() != self.rank() {
            return Err(Error::Dimension("element dimension differs from the rank".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::RatMatrix;
    use num_bigint::BigUint;

    fn prime(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    fn dugas() -> StationaryPresentation {
        StationaryPresentation::from_i64_rows(&[[0, 0, 0, -9], [1, 0, 0, 0], [0, 1, 0, 2], [0, 0, 1, 0]]).unwrap()
    }

    #[test]
    fn construction() {
        assert_eq!(StationaryPresentation::from_i64_rows(&[[1, 2], [2, 4]]), Err(Error::Singular));
        let d = dugas();
        assert_eq!(d.det(), &BigInt::from(9));
        assert_eq!(d.charpoly(), &[1, 0, -2, 0, 9].map(BigInt::from));
    }

    #[test]
    fn divisibility() {
        let a = StationaryPresentation::from_i64_rows(&[[3, 0], [0, 3]]).unwrap();
        assert_eq!(a.is_p_divisible(prime(3)), DivisibilityWitness { divisible: true, witness_power: Some(1) });
        assert!(!dugas().is_p_divisible(prime(3)).divisible);
        let b = StationaryPresentation::from_i64_rows(&[[0, -4], [1, 0]]).unwrap();
        assert_eq!(b.is_p_divisible(prime(2)).witness_power, Some(2));
    }

    #[test]
    fn coranks() {
        assert_eq!(dugas().pro_p_corank(prime(3)), 2);
        let three = StationaryPresentation::new(IntMatrix::identity(3).scale(&BigInt::from(5))).unwrap();
        assert_eq!(three.pro_p_corank(prime(5)), 0);
        assert_eq!(three.pro_p_corank(prime(2)), 3);
    }

    #[test]
    fn membership_examples() {
        let two = StationaryPresentation::from_i64_rows(&[[2]]).unwrap();
        let half = two.member(&RatVector::new(vec!["1/2".parse().unwrap()]), 8).unwrap().unwrap();
        assert_eq!(half.certificate(), Some(1));
        assert!(two.member(&RatVector::new(vec!["1/3".parse().unwrap()]), 8).unwrap().is_none());

        let d = dugas();
        let inv = RatMatrix::from(d.matrix()).inverse().unwrap();
        let v = inv.apply(&inv.apply(&RatVector::unit(4, 0)));
        assert!(!v.is_integral());
        assert_eq!(d.member(&v, 4).unwrap().unwrap().certificate(), Some(2));
        // 1/3 e₁ has a denominator dividing det but is not in G
        let w = RatVector::new(["1/3", "0", "0", "0"].map(|x| x.parse().unwrap()).to_vec());
        assert_eq!(d.certificate_search(&w, 50), None);
        assert!(d.member(&w, 4).unwrap().is_none());
    }

    #[test]
    fn projections() {
        let p3 = StationaryPresentation::new(IntMatrix::identity(2).scale(&BigInt::from(3))).unwrap();
        let e1 = p3.element(RatVector::unit(2, 0)).unwrap();
        let proj = p3.unit_projection(prime(3), 6, &e1).unwrap();
        assert_eq!(proj.norm(), PadicNorm::at_most(prime(3), 6));

        let two = StationaryPresentation::from_i64_rows(&[[2]]).unwrap();
        let five = two.element(RatVector::from_i64(&[5])).unwrap();
        let proj = two.unit_projection(prime(3), 4, &five).unwrap();
        assert_eq!(proj.norm(), PadicNorm::exact(prime(3), 0));
        assert_eq!(proj.component().unwrap(), &[BigUint::from(5u32)]);

        let d = dugas();
        let e2 = d.element(RatVector::unit(4, 1)).unwrap();
        assert_eq!(d.unit_projection(prime(3), 10, &e2).unwrap().norm(), PadicNorm::exact(prime(3), 0));
    }

    #[test]
    fn distances() {
        let two = StationaryPresentation::from_i64_rows(&[[2]]).unwrap();
        let one = two.element(RatVector::from_i64(&[1])).unwrap();
        let zero = two.element(RatVector::from_i64(&[0])).unwrap();
        assert_eq!(two.dp_distance(prime(3), 8, &one, &one).unwrap(), PadicNorm::at_most(prime(3), 8));
        assert_eq!(two.dp_distance(prime(3), 8, &one, &zero).unwrap(), PadicNorm::exact(prime(3), 0));
        let nine = two.element(RatVector::from_i64(&[9])).unwrap();
        assert_eq!(two.dp_distance(prime(3), 8, &nine, &zero).unwrap(), PadicNorm::exact(prime(3), 2));

        // 1 ∈ 3ʲ·Z[1/6] for every j
        let six = StationaryPresentation::from_i64_rows(&[[6]]).unwrap();
        let one = six.element(RatVector::from_i64(&[1])).unwrap();
        let zero = six.element(RatVector::from_i64(&[0])).unwrap();
        assert_eq!(six.dp_distance(prime(3), 8, &one, &zero).unwrap(), PadicNorm::at_most(prime(3), 8));

        let outsider = GroupElement::unchecked(&two, RatVector::new(vec!["1/3".parse().unwrap()]));
        assert_eq!(two.dp_distance(prime(3), 8, &outsider, &zero), Err(Error::NotMember));
    }
}
