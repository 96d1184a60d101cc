//! Entanglement recovery with an auxiliary two-qubit pair.
//!
//! A source pair `|ψ⟩ = (a, 1−a)` is converted into a less entangled target
//! `|φ⟩ = (b, 1−b)`, `1/2 ≤ a < b < 1`. Running the conversion collectively on
//! `|ψ⟩ ⊗ |ω⟩ → |φ⟩ ⊗ |χ⟩` with `|ω⟩ = (p, 1−p)` and `|χ⟩ = (q, 1−q)` lets the
//! auxiliary pair gain entanglement (`q < p`) when
//!
//! ```text
//! 1/2 ≤ q < p ≤ 1
//! q ≥ (a/b)·p
//! 1 − q ≤ ((1−a)/(1−b))·(1 − p)
//! p ≤ b,  q < b
//! ```
//!
//! [`RecoveryProblem::is_feasible`] evaluates these inequalities directly.
//! [`RecoveryProblem::classify`] ignores them and instead compares the two
//! four-entry product spectra by majorization, so the two routes check each
//! other.

use rayon::prelude::*;

use crate::{
    compare, entropy, is_majorized_by, ComparabilityClass, Error, Result, Scalar, SchmidtSpectrum,
    Tolerance, TwoQubitPair,
};

/// Upper bound on the per-axis resolution accepted by [`RecoveryProblem::region_grid`].
pub const MAX_GRID_RESOLUTION: usize = 10_000;

/// Where a point `(p, q)` of the auxiliary-pair plane falls.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RegionClass {
    /// `(p, q) = (b, a)`: the two pairs simply swap roles.
    CompleteRecovery,
    /// Recovery with `q < a`; impossible by converting each pair separately.
    TrueRecovery,
    /// Recovery with `q ≥ a`; reachable pair by pair after swapping.
    TrivialRecovery,
    /// Neither product state converts into the other.
    Incomparable,
    /// The product target majorizes strictly less than the source: total
    /// entanglement would have to grow.
    EntanglementIncreasing,
    /// Everything else: no entanglement gain in the auxiliary pair, or equal spectra.
    InfeasibleOther,
}

impl RegionClass {
    pub const ALL: [RegionClass; 6] = [
        RegionClass::CompleteRecovery,
        RegionClass::TrueRecovery,
        RegionClass::TrivialRecovery,
        RegionClass::Incomparable,
        RegionClass::EntanglementIncreasing,
        RegionClass::InfeasibleOther,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Self::CompleteRecovery => "complete-recovery",
            Self::TrueRecovery => "true-recovery",
            Self::TrivialRecovery => "trivial-recovery",
            Self::Incomparable => "incomparable",
            Self::EntanglementIncreasing => "entanglement-increasing",
            Self::InfeasibleOther => "infeasible",
        }
    }

    /// Short name used in the `class` column of region CSV files.
    pub fn tag(self) -> &'static str {
        match self {
            Self::CompleteRecovery => "complete",
            Self::TrueRecovery => "true",
            Self::TrivialRecovery => "trivial",
            Self::Incomparable => "incomparable",
            Self::EntanglementIncreasing => "increasing",
            Self::InfeasibleOther => "infeasible",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.tag() == tag)
    }

    /// Complete, true or trivial recovery.
    pub fn is_recovery(self) -> bool {
        matches!(
            self,
            Self::CompleteRecovery | Self::TrueRecovery | Self::TrivialRecovery
        )
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// Source parameter `a` and target parameter `b` of a recovery scenario.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecoveryProblem<T> {
    a: T,
    b: T,
    tol: Tolerance<T>,
}

impl<T: Scalar> RecoveryProblem<T> {
    /// Requires `1/2 ≤ a < b < 1`, strict inequalities beyond `eps`.
    ///
    /// `b = 1` is rejected since the third partial-sum condition divides by
    /// `1 − b`; use [`can_concentrate_bell`] for a product-state target.
    pub fn new(a: T, b: T, tol: Tolerance<T>) -> Result<Self> {
        let a = tol.clamp_into("a", a, T::half(), T::one())?;
        let b = tol.clamp_into("b", b, T::half(), T::one())?;
        if !tol.lt(b, T::one()) {
            return Err(Error::ProductTarget);
        }
        if !tol.lt(a, b) {
            return Err(Error::NotOrdered {
                a: a.as_f64(),
                b: b.as_f64(),
            });
        }
        Ok(Self { a, b, tol })
    }

    pub fn a(&self) -> T {
        self.a
    }

    pub fn b(&self) -> T {
        self.b
    }

    pub fn tolerance(&self) -> Tolerance<T> {
        self.tol
    }

    /// `|ψ⟩`, the pair being converted.
    pub fn source(&self) -> TwoQubitPair<T> {
        TwoQubitPair::new(self.a, self.tol).expect("validated parameter")
    }

    /// `|φ⟩`, the conversion target.
    pub fn target(&self) -> TwoQubitPair<T> {
        TwoQubitPair::new(self.b, self.tol).expect("validated parameter")
    }

    fn check_point(&self, p: T, q: T) -> Result<(T, T)> {
        let p = self.tol.clamp_into("p", p, T::half(), T::one())?;
        let q = self.tol.clamp_into("q", q, T::half(), T::one())?;
        Ok((p, q))
    }

    /// `(λψ ⊗ λω, λφ ⊗ λχ)`, each sorted non-increasingly.
    pub fn product_spectra(&self, p: T, q: T) -> Result<(SchmidtSpectrum<T>, SchmidtSpectrum<T>)> {
        let (p, q) = self.check_point(p, q)?;
        Ok(self.product_spectra_unchecked(p, q))
    }

    fn product_spectra_unchecked(&self, p: T, q: T) -> (SchmidtSpectrum<T>, SchmidtSpectrum<T>) {
        let one = T::one();
        let (a, b) = (self.a, self.b);
        let source = SchmidtSpectrum::from_unsorted(vec![
            a * p,
            a * (one - p),
            (one - a) * p,
            (one - a) * (one - p),
        ]);
        let target = SchmidtSpectrum::from_unsorted(vec![
            b * q,
            b * (one - q),
            (one - b) * q,
            (one - b) * (one - q),
        ]);
        (source, target)
    }

    /// Closed-form recovery condition.
    pub fn is_feasible(&self, p: T, q: T) -> Result<bool> {
        let (p, q) = self.check_point(p, q)?;
        Ok(self.is_feasible_unchecked(p, q))
    }

    fn is_feasible_unchecked(&self, p: T, q: T) -> bool {
        let tol = self.tol;
        let one = T::one();
        let (a, b) = (self.a, self.b);
        // auxiliary pair strictly gains entanglement
        tol.ge(q, T::half())
            && tol.lt(q, p)
            && tol.le(p, one)
            // largest entries: ap ≤ bq
            && tol.ge(q, a / b * p)
            // smallest entries: (1−b)(1−q) ≥ (1−a)(1−p)
            && tol.le(one - q, (one - a) / (one - b) * (one - p))
            // two largest entries
            && tol.le(p, b)
            && tol.lt(q, b)
    }

    /// Classifies `(p, q)` from the product spectra alone.
    ///
    /// Precedence is complete > true/trivial > increasing > incomparable >
    /// infeasible, so every point receives exactly one class.
    pub fn classify(&self, p: T, q: T) -> Result<RegionClass> {
        let (p, q) = self.check_point(p, q)?;
        Ok(self.classify_unchecked(p, q))
    }

    fn classify_unchecked(&self, p: T, q: T) -> RegionClass {
        let tol = self.tol;
        let (source, target) = self.product_spectra_unchecked(p, q);
        let forward = is_majorized_by(&source, &target, tol);
        if forward && tol.eq(p, self.b) && tol.eq(q, self.a) {
            return RegionClass::CompleteRecovery;
        }
        if forward && tol.lt(q, p) {
            let one = T::one();
            let gain_before = entropy(&SchmidtSpectrum::from_unsorted(vec![p, one - p]));
            let gain_after = entropy(&SchmidtSpectrum::from_unsorted(vec![q, one - q]));
            if tol.lt(gain_before, gain_after) {
                return if tol.lt(q, self.a) {
                    RegionClass::TrueRecovery
                } else {
                    RegionClass::TrivialRecovery
                };
            }
        }
        match compare(&source, &target, tol) {
            ComparabilityClass::RightMajorized => RegionClass::EntanglementIncreasing,
            ComparabilityClass::Incomparable => RegionClass::Incomparable,
            _ => RegionClass::InfeasibleOther,
        }
    }

    /// `b/(2a)`: the largest `p` for which `|χ⟩` can be a Bell pair.
    pub fn bell_bound(&self) -> T {
        self.b / (T::lit(2.0) * self.a)
    }

    /// Whether `(p, 1/2)` is feasible, i.e. a Bell pair ends up in the auxiliary slot.
    pub fn bell_feasible(&self, p: T) -> Result<bool> {
        self.is_feasible(p, T::half())
    }

    /// Rasterizes the `(p, q)` square `[1/2, 1]²` at `n + 1` points per axis.
    pub fn region_grid(&self, n: usize) -> Result<RegionGrid<T>> {
        if n == 0 || n > MAX_GRID_RESOLUTION {
            return Err(Error::ResolutionTooLarge {
                n,
                max: MAX_GRID_RESOLUTION,
            });
        }
        let rows: Vec<Vec<RegionClass>> = (0..=n)
            .into_par_iter()
            .map(|i| {
                let p = grid_coordinate(n, i);
                (0..=n)
                    .map(|j| self.classify_unchecked(p, grid_coordinate(n, j)))
                    .collect()
            })
            .collect();
        Ok(RegionGrid {
            problem: *self,
            n,
            cells: rows.concat(),
        })
    }
}

/// `1/2 + i/(2n)`, computed as the single rounded quotient `(n + i)/(2n)`.
fn grid_coordinate<T: Scalar>(n: usize, i: usize) -> T {
    let num = T::from_usize(n + i).expect("grid index fits scalar");
    let den = T::from_usize(2 * n).expect("grid index fits scalar");
    num / den
}

/// Classified `(n+1) × (n+1)` raster of the auxiliary-pair plane, stored
/// row-major with `p` as the outer index.
#[derive(Debug, Clone, PartialEq)]
pub struct RegionGrid<T> {
    problem: RecoveryProblem<T>,
    n: usize,
    cells: Vec<RegionClass>,
}

impl<T: Scalar> RegionGrid<T> {
    pub fn problem(&self) -> &RecoveryProblem<T> {
        &self.problem
    }

    pub fn resolution(&self) -> usize {
        self.n
    }

    /// Points per axis, `n + 1`.
    pub fn side(&self) -> usize {
        self.n + 1
    }

    pub fn p_at(&self, i: usize) -> T {
        grid_coordinate(self.n, i)
    }

    pub fn q_at(&self, j: usize) -> T {
        grid_coordinate(self.n, j)
    }

    pub fn get(&self, i: usize, j: usize) -> RegionClass {
        self.cells[i * self.side() + j]
    }

    pub fn cells(&self) -> &[RegionClass] {
        &self.cells
    }

    /// `(p, q, class)` in storage order.
    pub fn iter(&self) -> impl Iterator<Item = (T, T, RegionClass)> + '_ {
        let side = self.side();
        self.cells
            .iter()
            .enumerate()
            .map(move |(k, &c)| (self.p_at(k / side), self.q_at(k % side), c))
    }

    pub fn counts(&self) -> ClassCounts {
        let mut counts = ClassCounts::default();
        for &c in &self.cells {
            counts.0[c.index()] += 1;
        }
        counts
    }
}

/// Number of grid cells per [`RegionClass`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ClassCounts([usize; 6]);

impl ClassCounts {
    pub fn get(&self, class: RegionClass) -> usize {
        self.0[class.index()]
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (RegionClass, usize)> + '_ {
        RegionClass::ALL.into_iter().map(|c| (c, self.get(c)))
    }
}

/// `b/(2a)` for `1/2 ≤ a ≤ b ≤ 1`. Unlike [`RecoveryProblem`], `b = 1` and
/// `a = b` are accepted.
pub fn bell_bound<T: Scalar>(a: T, b: T, tol: Tolerance<T>) -> Result<T> {
    let a = tol.clamp_into("a", a, T::half(), T::one())?;
    let b = tol.clamp_into("b", b, T::half(), T::one())?;
    if !tol.le(a, b) {
        return Err(Error::NotOrdered {
            a: a.as_f64(),
            b: b.as_f64(),
        });
    }
    Ok(b / (T::lit(2.0) * a))
}

/// Whether `(a, 1−a) ⊗ (p, 1−p)` yields a Bell pair plus a discarded product
/// state with certainty: `a·p < 1/2` strictly beyond `eps`.
pub fn can_concentrate_bell<T: Scalar>(a: T, p: T, tol: Tolerance<T>) -> Result<bool> {
    let a = tol.clamp_into("a", a, T::half(), T::one())?;
    let p = tol.clamp_into("p", p, T::half(), T::one())?;
    Ok(tol.lt(a * p, T::half()))
}

#[cfg(test)]
mod tests {
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    use super::*;
    use crate::{can_transform, make_spectrum};

    fn tol() -> Tolerance<f64> {
        Tolerance::default()
    }

    fn problem(a: f64, b: f64) -> RecoveryProblem<f64> {
        RecoveryProblem::new(a, b, tol()).unwrap()
    }

    fn assert_spectrum(s: &SchmidtSpectrum<f64>, expected: &[f64]) {
        assert_eq!(s.len(), expected.len());
        for (x, y) in s.iter().zip(expected) {
            assert_abs_diff_eq!(*x, *y, epsilon = 1e-12);
        }
    }

    #[test]
    fn problem_validation() {
        assert!(matches!(
            RecoveryProblem::new(0.8, 0.7, tol()),
            Err(Error::NotOrdered { .. })
        ));
        assert!(matches!(
            RecoveryProblem::new(0.7, 0.7, tol()),
            Err(Error::NotOrdered { .. })
        ));
        assert_eq!(
            RecoveryProblem::new(0.7, 1.0, tol()),
            Err(Error::ProductTarget)
        );
        assert!(matches!(
            RecoveryProblem::new(0.4, 0.8, tol()),
            Err(Error::OutOfRange { name: "a", .. })
        ));
        assert!(RecoveryProblem::new(0.5, 0.6, tol()).is_ok());
        let prob = problem(0.7, 0.8);
        assert!(matches!(
            prob.classify(0.45, 0.5),
            Err(Error::OutOfRange { name: "p", .. })
        ));
        assert!(prob.is_feasible(0.6, 1.2).is_err());
        assert!(prob.product_spectra(0.6, -0.1).is_err());
    }

    #[test]
    fn product_spectra_examples() {
        let (s, t) = problem(0.7, 0.8).product_spectra(0.6, 0.55).unwrap();
        assert_spectrum(&s, &[0.42, 0.28, 0.18, 0.12]);
        assert_spectrum(&t, &[0.44, 0.36, 0.11, 0.09]);

        let (s, t) = problem(0.6, 0.9).product_spectra(0.7, 0.5).unwrap();
        assert_spectrum(&s, &[0.42, 0.28, 0.18, 0.12]);
        assert_spectrum(&t, &[0.45, 0.45, 0.05, 0.05]);

        let (s, t) = problem(0.7, 0.8).product_spectra(1.0, 1.0).unwrap();
        assert_spectrum(&s, &[0.7, 0.3, 0.0, 0.0]);
        assert_spectrum(&t, &[0.8, 0.2, 0.0, 0.0]);
    }

    #[test]
    fn closed_form_examples() {
        let prob = problem(0.7, 0.8);
        assert!(prob.is_feasible(0.6, 0.55).unwrap());
        assert!(prob.is_feasible(0.8, 0.7).unwrap());
        assert!(!prob.is_feasible(0.85, 0.7).unwrap());
        // no gain in the auxiliary pair
        assert!(!prob.is_feasible(0.6, 0.6).unwrap());
    }

    #[test]
    fn classify_examples() {
        let prob = problem(0.7, 0.8);
        assert_eq!(prob.classify(0.6, 0.55).unwrap(), RegionClass::TrueRecovery);
        assert_eq!(
            prob.classify(0.8, 0.7).unwrap(),
            RegionClass::CompleteRecovery
        );
        assert_eq!(prob.classify(0.9, 0.8).unwrap(), RegionClass::Incomparable);
        assert_eq!(
            prob.classify(0.9, 0.55).unwrap(),
            RegionClass::EntanglementIncreasing
        );
        assert_eq!(
            prob.classify(0.75, 0.72).unwrap(),
            RegionClass::TrivialRecovery
        );
        assert_eq!(
            prob.classify(0.6, 0.6).unwrap(),
            RegionClass::InfeasibleOther
        );
        assert_eq!(
            prob.classify(0.6, 0.9).unwrap(),
            RegionClass::InfeasibleOther
        );
    }

    #[test]
    fn bell_bound_examples() {
        assert_abs_diff_eq!(
            problem(0.7, 0.8).bell_bound(),
            0.571_428_571_428_571_4,
            epsilon = 1e-15
        );
        assert_eq!(bell_bound(0.5, 1.0, tol()).unwrap(), 1.0);
        assert_abs_diff_eq!(bell_bound(0.6, 0.9, tol()).unwrap(), 0.75, epsilon = 1e-15);
        assert!(bell_bound(0.9, 0.6, tol()).is_err());
        let prob = problem(0.6, 0.9);
        assert!(prob.bell_feasible(0.7).unwrap());
        assert!(prob.bell_feasible(0.75).unwrap());
        assert!(!prob.bell_feasible(0.76).unwrap());
    }

    #[test]
    fn concentration_examples() {
        assert!(can_concentrate_bell(0.6, 0.7, tol()).unwrap());
        assert!(!can_concentrate_bell(0.7, 0.8, tol()).unwrap());
        assert!(can_concentrate_bell(0.5, 0.5, tol()).unwrap());
        // a·p = 1/2 is excluded even though majorization still holds there
        assert!(!can_concentrate_bell(1.0, 0.5, tol()).unwrap());
        assert!(can_concentrate_bell(0.2, 0.7, tol()).is_err());
    }

    #[test]
    fn grid_corners() {
        let grid = problem(0.7, 0.8).region_grid(1).unwrap();
        assert_eq!(grid.cells().len(), 4);
        assert_eq!((grid.p_at(1), grid.q_at(1)), (1.0, 1.0));
        assert_eq!(grid.get(1, 1), RegionClass::InfeasibleOther);
        assert_eq!(grid.get(0, 0), RegionClass::InfeasibleOther);
        assert_eq!(grid.get(0, 1), RegionClass::InfeasibleOther);
        assert!(!grid.get(1, 0).is_recovery());
        assert_eq!(grid.get(1, 0), RegionClass::EntanglementIncreasing);
    }

    #[test]
    fn grid_resolution_limits() {
        let prob = problem(0.7, 0.8);
        assert!(matches!(
            prob.region_grid(0),
            Err(Error::ResolutionTooLarge { .. })
        ));
        assert!(matches!(
            prob.region_grid(MAX_GRID_RESOLUTION + 1),
            Err(Error::ResolutionTooLarge { .. })
        ));
    }

    #[test]
    fn grid_coordinates_are_exact() {
        let grid = problem(0.7, 0.8).region_grid(200).unwrap();
        assert_eq!(grid.p_at(0), 0.5);
        assert_eq!(grid.p_at(100), 0.75);
        assert_eq!(grid.p_at(200), 1.0);
        assert_eq!(grid.q_at(40), 0.6);
    }

    #[test]
    fn grid_matches_closed_form() {
        let prob = problem(0.7, 0.8);
        let grid = prob.region_grid(200).unwrap();
        for (p, q, class) in grid.iter() {
            assert_eq!(
                class.is_recovery(),
                prob.is_feasible(p, q).unwrap(),
                "at ({p}, {q})"
            );
        }
        let counts = grid.counts();
        assert_eq!(counts.total(), 201 * 201);
        assert!(counts.get(RegionClass::TrueRecovery) > 0);
        assert!(counts.get(RegionClass::TrivialRecovery) > 0);
        assert_eq!(counts.get(RegionClass::CompleteRecovery), 1);
        assert_eq!(grid.get(120, 80), RegionClass::CompleteRecovery);
    }

    #[test]
    fn grid_is_thread_count_independent() {
        let prob = problem(0.62, 0.83);
        let parallel = prob.region_grid(64).unwrap();
        let single = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap()
            .install(|| prob.region_grid(64).unwrap());
        assert_eq!(parallel, single);
    }

    #[test]
    fn tags_round_trip() {
        for c in RegionClass::ALL {
            assert_eq!(RegionClass::from_tag(c.tag()), Some(c));
        }
        assert_eq!(RegionClass::from_tag("shaded"), None);
    }

    #[test]
    fn single_precision_problem() {
        let prob = RecoveryProblem::new(0.7f32, 0.8, Tolerance::default()).unwrap();
        assert!(prob.is_feasible(0.6, 0.55).unwrap());
        assert_eq!(prob.classify(0.6, 0.55).unwrap(), RegionClass::TrueRecovery);
        assert_eq!(
            prob.classify(0.8, 0.7).unwrap(),
            RegionClass::CompleteRecovery
        );
    }

    /// `(a, b)` with `1/2 ≤ a < b < 1` kept away from degeneracy.
    fn arb_problem() -> impl Strategy<Value = RecoveryProblem<f64>> {
        (0.501f64..0.98)
            .prop_flat_map(|a| (Just(a), (a + 1e-3)..0.999))
            .prop_map(|(a, b)| problem(a, b))
    }

    /// Problem plus a point drawn from its closed-form region, 1e-9 inside
    /// the strict edges.
    fn arb_feasible() -> impl Strategy<Value = (RecoveryProblem<f64>, f64, f64)> {
        (arb_problem(), 0.0f64..=1.0, 0.0f64..=1.0).prop_filter_map(
            "empty slice",
            |(prob, s, t)| {
                let (a, b) = (prob.a(), prob.b());
                let p = 0.5 + s * (b - 0.5);
                let floor = (a / b * p)
                    .max(1.0 - (1.0 - a) / (1.0 - b) * (1.0 - p))
                    .max(0.5);
                let q = floor + t * (p - 1e-9 - floor);
                (q < p - 1e-9 && q >= floor).then_some((prob, p, q))
            },
        )
    }

    fn pair(x: f64) -> SchmidtSpectrum<f64> {
        make_spectrum(&[x, 1.0 - x], tol()).unwrap()
    }

    proptest! {
        #[test]
        fn feasible_points_account_for_entropy((prob, p, q) in arb_feasible()) {
            prop_assert!(prob.is_feasible(p, q).unwrap());
            let (ea, eb, ep, eq) = (pair(prob.a()).entropy(), pair(prob.b()).entropy(), pair(p).entropy(), pair(q).entropy());
            prop_assert!(eq > ep);
            prop_assert!(ea >= eb);
            prop_assert!(ea + ep >= eb + eq - 1e-9);
        }

        #[test]
        fn trivial_region_decomposes((prob, p, q) in arb_feasible()) {
            prop_assert!(prob.is_feasible(p, q).unwrap());
            prop_assume!(q >= prob.a() + 1e-12);
            prop_assert!(can_transform(&pair(prob.a()), &pair(q), tol()));
            prop_assert!(can_transform(&pair(p), &pair(prob.b()), tol()));
            // a point with the same p and a smaller q lies in the true region;
            // on the edge p = b the true region is empty
            if p <= prob.b() - 1e-6 {
                let (a, b) = (prob.a(), prob.b());
                let floor = (a / b * p).max(1.0 - (1.0 - a) / (1.0 - b) * (1.0 - p)).max(0.5);
                let q2 = 0.5 * (floor + a);
                prop_assert!(q2 < a - 1e-12);
                prop_assert!(prob.is_feasible(p, q2).unwrap());
            }
        }

        #[test]
        fn true_region_needs_collective_operation((prob, p, q) in arb_feasible()) {
            prop_assert!(prob.is_feasible(p, q).unwrap());
            prop_assume!(q < prob.a() - 1e-12);
            prop_assert!(!can_transform(&pair(prob.a()), &pair(q), tol()));
            prop_assert!(!can_transform(&pair(p), &pair(q), tol()));
        }

        #[test]
        fn beyond_b_is_incomparable_or_increasing(prob in arb_problem(), s in 0.0f64..1.0, t in 0.0f64..1.0) {
            let (a, b) = (prob.a(), prob.b());
            let p = b + 1e-6 + s * (1.0 - b - 1e-6);
            let q = 0.5 + t * (p - 0.5);
            let split = a / b * p;
            let class = prob.classify(p, q).unwrap();
            if q >= split + 1e-6 && q <= p - 1e-6 {
                prop_assert_eq!(class, RegionClass::Incomparable);
            } else if q <= split - 1e-6 {
                prop_assert_eq!(class, RegionClass::EntanglementIncreasing);
            }
        }

        #[test]
        fn concentration_agrees_with_majorization(a in 0.5f64..=1.0, p in 0.5f64..=1.0) {
            let source = pair(a).tensor(&pair(p));
            let target = make_spectrum(&[0.5, 0.5, 0.0, 0.0], tol()).unwrap();
            if can_concentrate_bell(a, p, tol()).unwrap() {
                prop_assert!(is_majorized_by(&source, &target, tol()));
            }
        }

        #[test]
        fn complete_point_conserves_entropy(prob in arb_problem()) {
            let (a, b) = (prob.a(), prob.b());
            prop_assert_eq!(prob.classify(b, a).unwrap(), RegionClass::CompleteRecovery);
            let before = pair(a).entropy() + pair(b).entropy();
            let (s, t) = prob.product_spectra(b, a).unwrap();
            prop_assert!((s.entropy() - t.entropy()).abs() < 1e-9);
            prop_assert!((before - t.entropy()).abs() < 1e-9);
        }
    }
}
