//! Deterministic LOCC convertibility of bipartite pure states.
//!
//! `|ψ⟩ → |φ⟩` with certainty under local operations and classical
//! communication exactly when `λψ ≺ λφ`. Only existence is decided here; no
//! measurement protocol is constructed.

use crate::{
    compare, entropy, is_majorized_by, ComparabilityClass, Scalar, SchmidtSpectrum, Tolerance,
};

/// Whether `source` can be converted into `target` with probability one.
pub fn can_transform<T: Scalar>(
    source: &SchmidtSpectrum<T>,
    target: &SchmidtSpectrum<T>,
    tol: Tolerance<T>,
) -> bool {
    is_majorized_by(source, target, tol)
}

/// Comparability of two states together with their entanglement entropies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformVerdict<T> {
    pub class: ComparabilityClass,
    pub source_entropy: T,
    pub target_entropy: T,
}

impl<T: Scalar> TransformVerdict<T> {
    pub fn forward(&self) -> bool {
        matches!(
            self.class,
            ComparabilityClass::LeftMajorized | ComparabilityClass::Equal
        )
    }

    pub fn backward(&self) -> bool {
        matches!(
            self.class,
            ComparabilityClass::RightMajorized | ComparabilityClass::Equal
        )
    }
}

pub fn transform_verdict<T: Scalar>(
    source: &SchmidtSpectrum<T>,
    target: &SchmidtSpectrum<T>,
    tol: Tolerance<T>,
) -> TransformVerdict<T> {
    TransformVerdict {
        class: compare(source, target, tol),
        source_entropy: entropy(source),
        target_entropy: entropy(target),
    }
}
