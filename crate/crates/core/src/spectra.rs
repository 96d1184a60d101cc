//! Schmidt spectra of bipartite pure states and their arithmetic.
//!
//! A spectrum is the vector of squared Schmidt coefficients of
//! `|ψ⟩ = Σ √λᵢ |i⟩_A |i⟩_B`, i.e. the eigenvalues of either reduced state.
//! Everything the convertibility question depends on lives in this vector,
//! so no amplitudes or density matrices are carried around.

use std::cmp::Ordering;
use std::ops::Deref;

use crate::{Error, Result, Scalar, Tolerance};

/// Probability vector kept in non-increasing order.
///
/// Entries are non-negative and sum to one (within the tolerance used at
/// construction). Zero entries are allowed, so a product state is `(1, 0)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SchmidtSpectrum<T> {
    values: Vec<T>,
}

fn sort_descending<T: Scalar>(values: &mut [T]) {
    values.sort_by(|x, y| y.partial_cmp(x).unwrap_or(Ordering::Equal));
}

impl<T: Scalar> SchmidtSpectrum<T> {
    /// Validates and canonicalizes raw squared coefficients.
    ///
    /// Entries in `[-eps, 0)` are clamped to zero and entries above one to
    /// one. The input order is irrelevant.
    pub fn new(raw: &[T], tol: Tolerance<T>) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut sum = T::zero();
        for (index, &x) in raw.iter().enumerate() {
            if !x.is_finite() {
                return Err(Error::NonFinite { index });
            }
            if x < -tol.eps() {
                return Err(Error::NegativeWeight {
                    index,
                    value: x.as_f64(),
                });
            }
            sum = sum + x;
        }
        if !tol.eq(sum, T::one()) {
            return Err(Error::NotNormalized { sum: sum.as_f64() });
        }
        let mut values: Vec<T> = raw
            .iter()
            .map(|&x| x.max(T::zero()).min(T::one()))
            .collect();
        sort_descending(&mut values);
        Ok(Self { values })
    }

    /// The spectrum `(1)` of a product state with Schmidt rank one.
    pub fn product() -> Self {
        Self {
            values: vec![T::one()],
        }
    }

    /// The uniform spectrum of a maximally entangled state of Schmidt rank `n`.
    pub fn uniform(n: usize) -> Self {
        assert!(n > 0, "uniform spectrum needs at least one entry");
        let w = T::one() / T::from_usize(n).expect("dimension fits scalar");
        Self { values: vec![w; n] }
    }

    /// `(1/2, 1/2)`, the Bell pair `(|00⟩ + |11⟩)/√2`.
    pub fn bell() -> Self {
        Self::uniform(2)
    }

    /// Caller guarantees finite entries in `[0, 1]`; only the order is fixed here.
    pub(crate) fn from_unsorted(mut values: Vec<T>) -> Self {
        debug_assert!(!values.is_empty());
        sort_descending(&mut values);
        Self { values }
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    /// Schmidt rank including zero entries.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Number of strictly positive entries.
    pub fn rank(&self) -> usize {
        self.values.iter().filter(|&&x| x > T::zero()).count()
    }

    /// Running sums `λ₁, λ₁+λ₂, …` over the first `len` entries, treating
    /// entries past the end as zero.
    pub fn prefix_sums(&self, len: usize) -> Vec<T> {
        let mut acc = T::zero();
        (0..len)
            .map(|k| {
                acc = acc + self.values.get(k).copied().unwrap_or_else(T::zero);
                acc
            })
            .collect()
    }

    pub fn tensor(&self, other: &Self) -> Self {
        tensor(self, other)
    }

    pub fn entropy(&self) -> T {
        entropy(self)
    }
}

impl<T> Deref for SchmidtSpectrum<T> {
    type Target = [T];

    fn deref(&self) -> &[T] {
        &self.values
    }
}

/// Two-qubit pure state `√a |00⟩ + √(1−a) |11⟩`, stored by its larger
/// squared Schmidt coefficient `a ∈ [1/2, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoQubitPair<T> {
    a: T,
}

impl<T: Scalar> TwoQubitPair<T> {
    /// Accepts either Schmidt coefficient and keeps `max(a, 1 − a)`.
    pub fn new(a_raw: T, tol: Tolerance<T>) -> Result<Self> {
        let a = tol.clamp_into("a", a_raw, T::zero(), T::one())?;
        Ok(Self {
            a: a.max(T::one() - a),
        })
    }

    pub fn bell() -> Self {
        Self { a: T::half() }
    }

    pub fn a(&self) -> T {
        self.a
    }

    pub fn spectrum(&self) -> SchmidtSpectrum<T> {
        SchmidtSpectrum {
            values: vec![self.a, T::one() - self.a],
        }
    }

    pub fn entropy(&self) -> T {
        entropy(&self.spectrum())
    }
}

/// Validates raw squared Schmidt coefficients into a canonical spectrum.
pub fn make_spectrum<T: Scalar>(raw: &[T], tol: Tolerance<T>) -> Result<SchmidtSpectrum<T>> {
    SchmidtSpectrum::new(raw, tol)
}

pub fn two_qubit<T: Scalar>(a_raw: T, tol: Tolerance<T>) -> Result<TwoQubitPair<T>> {
    TwoQubitPair::new(a_raw, tol)
}

/// Spectrum of `|ψ⟩ ⊗ |ω⟩`: all pairwise products, re-sorted.
pub fn tensor<T: Scalar>(s: &SchmidtSpectrum<T>, t: &SchmidtSpectrum<T>) -> SchmidtSpectrum<T> {
    let values = s
        .values
        .iter()
        .flat_map(|&x| t.values.iter().map(move |&y| x * y))
        .collect();
    SchmidtSpectrum::from_unsorted(values)
}

/// Entanglement entropy `−Σ λᵢ log₂ λᵢ` in ebits, with `0 log 0 = 0`.
pub fn entropy<T: Scalar>(s: &SchmidtSpectrum<T>) -> T {
    s.values
        .iter()
        .filter(|&&x| x > T::zero())
        .fold(T::zero(), |acc, &x| acc - x * x.log2())
}
