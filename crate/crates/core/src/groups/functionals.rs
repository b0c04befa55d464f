use num_bigint::{BigInt, BigUint};

use crate::exact::{valuation_int, Prime, RatVector};
use crate::factor::UnitIdealSplit;
use crate::padic::{PadicNorm, PadicRing, PadicRowVec, RowModule};
use crate::{Error, Result};

/// Howell basis of `G^{*p}` mod `pᴺ` and the splitting it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionalBasis {
    module: RowModule,
    split: UnitIdealSplit,
}

impl FunctionalBasis {
    pub(crate) fn new(module: RowModule, split: UnitIdealSplit) -> Self {
        FunctionalBasis { module, split }
    }

    pub fn prime(&self) -> Prime {
        self.split.prime()
    }

    pub fn precision(&self) -> u32 {
        self.split.precision()
    }

    pub fn ring(&self) -> &PadicRing {
        self.split.ring()
    }

    pub fn module(&self) -> &RowModule {
        &self.module
    }

    pub fn split(&self) -> &UnitIdealSplit {
        &self.split
    }

    pub fn rows(&self) -> Vec<PadicRowVec> {
        self.module.basis()
    }

    /// Number of free generators, which equals the unit-root count.
    pub fn rank(&self) -> usize {
        self.module.rank()
    }

    /// `w·v` for each basis functional, or `None` where the value is not a
    /// p-adic integer. Values are known mod `p^(N-e)` where `pᵉ` is the
    /// p-part of the denominator of `v`.
    pub fn evaluate(&self, v: &RatVector) -> Result<Vec<Option<BigUint>>> {
        let (e, values) = self.scaled_values(v)?;
        let ring = self.ring();
        let pe = ring.p_pow(e);
        let out = ring.with_precision(ring.precision() - e)?;
        Ok(values
            .into_iter()
            .map(|x| (ring.valuation(&x) >= e).then(|| out.reduce(&(x / &pe))))
            .collect())
    }

    /// True iff every basis functional is a p-adic integer on `v`.
    pub fn integral_on(&self, v: &RatVector) -> Result<bool> {
        let (e, values) = self.scaled_values(v)?;
        Ok(values.iter().all(|x| self.ring().valuation(x) >= e))
    }

    fn scaled_values(&self, v: &RatVector) -> Result<(u32, Vec<BigUint>)> {
        if v.dim() != self.module.dim() {
            return Err(Error::Dimension("functional and vector dimensions differ".into()));
        }
        let p = self.prime();
        let e = valuation_int(&v.denominator(), p).expect("nonzero denominator") as u32;
        if e >= self.precision() {
            return Err(Error::RaisePrecision(format!(
                "denominator carries {p}^{e}, precision {} is too low",
                self.precision()
            )));
        }
        let scaled = v.scale(&BigInt::from(p.get()).pow(e).into());
        let column = PadicRowVec::from_rational(self.ring(), &scaled)?;
        Ok((e, self.rows().iter().map(|w| w.dot(column.entries())).collect()))
    }
}

/// The unit-subspace component `g¹` of an element and its norm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitProjection {
    ring: PadicRing,
    component: Option<Vec<BigUint>>,
    norm: PadicNorm,
    denominator_valuation: u32,
}

impl UnitProjection {
    pub(crate) fn new(
        ring: PadicRing,
        component: Option<Vec<BigUint>>,
        norm: PadicNorm,
        denominator_valuation: u32,
    ) -> Self {
        UnitProjection { ring, component, norm, denominator_valuation }
    }

    pub fn ring(&self) -> &PadicRing {
        &self.ring
    }

    /// `g¹` mod `pᴺ` as a column of residues; `None` when it is not a p-adic
    /// integer vector, which never happens for members.
    pub fn component(&self) -> Option<&[BigUint]> {
        self.component.as_deref()
    }

    /// `‖g¹‖_p`.
    pub fn norm(&self) -> PadicNorm {
        self.norm
    }

    /// `v_p` of the denominator of the projected vector; nonzero values flag
    /// inputs that needed extra working precision.
    pub fn denominator_valuation(&self) -> u32 {
        self.denominator_valuation
    }
}
