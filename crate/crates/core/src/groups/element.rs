use super::StationaryPresentation;
use crate::exact::RatVector;

/// A vector of `Qʳ` tied to the presentation it is claimed to belong to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement<'a> {
    presentation: &'a StationaryPresentation,
    vector: RatVector,
    certificate: Option<u64>,
}

impl<'a> GroupElement<'a> {
    pub(crate) fn certified(presentation: &'a StationaryPresentation, vector: RatVector, n: u64) -> Self {
        GroupElement { presentation, vector, certificate: Some(n) }
    }

    /// Wraps `vector` without checking membership. Operations that need a
    /// member check it themselves when no certificate is present.
    pub fn unchecked(presentation: &'a StationaryPresentation, vector: RatVector) -> Self {
        GroupElement { presentation, vector, certificate: None }
    }

    pub fn presentation(&self) -> &'a StationaryPresentation {
        self.presentation
    }

    pub fn vector(&self) -> &RatVector {
        &self.vector
    }

    /// Least `n` with `Aⁿv ∈ Zʳ`, when membership has been verified.
    pub fn certificate(&self) -> Option<u64> {
        self.certificate
    }

    pub fn into_vector(self) -> RatVector {
        self.vector
    }
}
