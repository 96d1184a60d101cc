//! The majorization preorder on probability vectors.
//!
//! `x ≺ y` when every partial sum of the decreasingly sorted `x` is bounded by
//! the matching partial sum of `y`. Equal totals are guaranteed by
//! normalization of [`SchmidtSpectrum`], so only the first `n − 1` partial
//! sums are checked. Vectors of different length are compared after padding
//! the shorter one with zeros, which changes neither partial sums nor entropy.

use crate::{Scalar, SchmidtSpectrum, Tolerance};

/// Outcome of comparing two spectra in both directions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComparabilityClass {
    /// `x ≺ y` and the spectra differ.
    LeftMajorized,
    /// `y ≺ x` and the spectra differ.
    RightMajorized,
    /// Same multiset of values (within tolerance).
    Equal,
    /// Neither `x ≺ y` nor `y ≺ x`.
    Incomparable,
}

impl ComparabilityClass {
    /// The class seen from the other argument order.
    pub fn flip(self) -> Self {
        match self {
            Self::LeftMajorized => Self::RightMajorized,
            Self::RightMajorized => Self::LeftMajorized,
            other => other,
        }
    }

    /// Deterministic LOCC verdict from the left state to the right one.
    pub fn verdict(self) -> &'static str {
        match self {
            Self::LeftMajorized => "forward",
            Self::RightMajorized => "backward",
            Self::Equal => "equal",
            Self::Incomparable => "incomparable",
        }
    }
}

/// `x ≺ y`: every partial sum of `x` is at most that of `y`, within `eps`.
pub fn is_majorized_by<T: Scalar>(
    x: &SchmidtSpectrum<T>,
    y: &SchmidtSpectrum<T>,
    tol: Tolerance<T>,
) -> bool {
    let n = x.len().max(y.len());
    let at = |s: &SchmidtSpectrum<T>, k: usize| s.get(k).copied().unwrap_or_else(T::zero);
    let mut sx = T::zero();
    let mut sy = T::zero();
    for k in 0..n.saturating_sub(1) {
        sx = sx + at(x, k);
        sy = sy + at(y, k);
        if !tol.le(sx, sy) {
            return false;
        }
    }
    true
}

fn same_multiset<T: Scalar>(
    x: &SchmidtSpectrum<T>,
    y: &SchmidtSpectrum<T>,
    tol: Tolerance<T>,
) -> bool {
    let n = x.len().max(y.len());
    (0..n).all(|k| {
        let u = x.get(k).copied().unwrap_or_else(T::zero);
        let v = y.get(k).copied().unwrap_or_else(T::zero);
        tol.eq(u, v)
    })
}

/// Classifies the pair by checking majorization in both directions.
///
/// `Equal` wins whenever the sorted vectors agree entrywise or both
/// directions hold, so exactly one class is returned at any boundary.
pub fn compare<T: Scalar>(
    x: &SchmidtSpectrum<T>,
    y: &SchmidtSpectrum<T>,
    tol: Tolerance<T>,
) -> ComparabilityClass {
    if same_multiset(x, y, tol) {
        return ComparabilityClass::Equal;
    }
    match (is_majorized_by(x, y, tol), is_majorized_by(y, x, tol)) {
        (true, true) => ComparabilityClass::Equal,
        (true, false) => ComparabilityClass::LeftMajorized,
        (false, true) => ComparabilityClass::RightMajorized,
        (false, false) => ComparabilityClass::Incomparable,
    }
}
