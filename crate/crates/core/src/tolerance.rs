use crate::{Error, Result, Scalar};

/// Absolute tolerance through which every comparison in the crate is routed.
///
/// Non-strict relations accept a slack of `eps`; strict relations require a
/// gap larger than `eps`. Keeping both in one place makes boundary behaviour
/// uniform across the closed-form region and the majorization oracle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance<T> {
    eps: T,
}

impl<T: Scalar> Tolerance<T> {
    pub fn new(eps: T) -> Result<Self> {
        if eps > T::zero() && eps < T::lit(1e-3) {
            Ok(Self { eps })
        } else {
            Err(Error::InvalidTolerance { eps: eps.as_f64() })
        }
    }

    #[inline]
    pub fn eps(&self) -> T {
        self.eps
    }

    /// `x ≤ y` within tolerance.
    #[inline]
    pub fn le(&self, x: T, y: T) -> bool {
        x <= y + self.eps
    }

    /// `x ≥ y` within tolerance.
    #[inline]
    pub fn ge(&self, x: T, y: T) -> bool {
        self.le(y, x)
    }

    /// `x < y` by more than the tolerance.
    #[inline]
    pub fn lt(&self, x: T, y: T) -> bool {
        x < y - self.eps
    }

    /// `x > y` by more than the tolerance.
    #[inline]
    pub fn gt(&self, x: T, y: T) -> bool {
        self.lt(y, x)
    }

    #[inline]
    pub fn eq(&self, x: T, y: T) -> bool {
        (x - y).abs() <= self.eps
    }

    /// Checks `lo ≤ x ≤ hi` within tolerance and clamps into the interval.
    pub(crate) fn clamp_into(&self, name: &'static str, x: T, lo: T, hi: T) -> Result<T> {
        if !x.is_finite() || !self.ge(x, lo) || !self.le(x, hi) {
            return Err(Error::OutOfRange {
                name,
                value: x.as_f64(),
                lo: lo.as_f64(),
                hi: hi.as_f64(),
            });
        }
        Ok(x.max(lo).min(hi))
    }
}

impl<T: Scalar> Default for Tolerance<T> {
    fn default() -> Self {
        Self {
            eps: T::default_eps(),
        }
    }
}
