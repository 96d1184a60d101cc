//! Deterministic LOCC convertibility of bipartite pure states, decided on
//! Schmidt spectra through majorization, and the closed-form region in which
//! an auxiliary two-qubit pair can recover part of the entanglement lost when
//! converting one two-qubit state into another.
//!
//! The numerics are generic over the scalar type (`f32` or `f64`, see
//! [`Scalar`]); the aliases at the crate root fix the scalar to `f64` for the
//! common case.
//!
//! ```
//! use entanglement_recovery::{RecoveryProblemF64, RegionClass, ToleranceF64};
//!
//! let problem = RecoveryProblemF64::new(0.7, 0.8, ToleranceF64::default()).unwrap();
//! assert!(problem.is_feasible(0.6, 0.55).unwrap());
//! assert_eq!(problem.classify(0.6, 0.55).unwrap(), RegionClass::TrueRecovery);
//! ```

#![forbid(unsafe_code)]

mod error;
pub mod majorization;
pub mod nielsen;
pub mod recovery;
mod scalar;
pub mod spectra;
mod tolerance;

pub use error::{Error, Result};
pub use majorization::{compare, is_majorized_by, ComparabilityClass};
pub use nielsen::{can_transform, transform_verdict, TransformVerdict};
pub use recovery::{
    bell_bound, can_concentrate_bell, ClassCounts, RecoveryProblem, RegionClass, RegionGrid,
    MAX_GRID_RESOLUTION,
};
pub use scalar::Scalar;
pub use spectra::{entropy, make_spectrum, tensor, two_qubit, SchmidtSpectrum, TwoQubitPair};
pub use tolerance::Tolerance;

pub type SpectrumF64 = SchmidtSpectrum<f64>;
pub type SpectrumF32 = SchmidtSpectrum<f32>;
pub type TwoQubitPairF64 = TwoQubitPair<f64>;
pub type TwoQubitPairF32 = TwoQubitPair<f32>;
pub type ToleranceF64 = Tolerance<f64>;
pub type ToleranceF32 = Tolerance<f32>;
pub type RecoveryProblemF64 = RecoveryProblem<f64>;
pub type RecoveryProblemF32 = RecoveryProblem<f32>;
pub type RegionGridF64 = RegionGrid<f64>;
pub type TransformVerdictF64 = TransformVerdict<f64>;
