use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating point scalar the spectra are stored in: `f32` or `f64`.
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Absolute comparison tolerance used when none is given.
    fn default_eps() -> Self;

    /// Converts an `f64` literal. Every literal used in this crate is
    /// representable (possibly rounded) in both supported types.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in scalar type")
    }

    #[inline]
    fn half() -> Self {
        Self::lit(0.5)
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    #[inline]
    fn default_eps() -> Self {
        1e-12
    }
}

impl Scalar for f32 {
    // f32 carries ~7 decimal digits; 1e-12 would be below one ulp of 1.0.
    #[inline]
    fn default_eps() -> Self {
        1e-6
    }
}
