//! Probability spectra, the majorization preorder, and trace distance.
//!
//! A [`Spectrum`] is the descending-sorted eigenvalue list of a quantum state
//! (equivalently, a point on the probability simplex). Everything downstream
//! — entropies, the minimizer map, the continuity bounds — is a function of
//! the spectrum alone, so this module is the only place that touches raw
//! probability vectors.

use thiserror::Error;

use crate::{CLAMP_TOL, EQ_TOL, MULT_TOL, NORM_TOL};

/// Errors from spectrum construction and pairwise operations.
#[derive(Debug, Error, PartialEq)]
pub enum SpectrumError {
    #[error("empty spectrum")]
    Empty,

    #[error("not normalized: sum = {sum}, |sum - 1| exceeds {NORM_TOL:e}")]
    NotNormalized { sum: f64 },

    #[error("negative entry at index {idx}: {value}")]
    NegativeEntry { idx: usize, value: f64 },

    #[error("non-finite entry at index {idx}")]
    NonFinite { idx: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },
}

/// A descending-sorted probability spectrum of dimension `d >= 1`.
///
/// Invariants (enforced at construction):
/// - entries sorted non-increasing,
/// - every entry in `[0, 1]` after clamping negatives above `-CLAMP_TOL`,
/// - entries sum to 1 within [`NORM_TOL`].
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    /// Validate, clamp, and sort a probability vector into a `Spectrum`.
    pub fn new(values: &[f64]) -> Result<Self, SpectrumError> {
        if values.is_empty() {
            return Err(SpectrumError::Empty);
        }
        for (idx, &v) in values.iter().enumerate() {
            if !v.is_finite() {
                return Err(SpectrumError::NonFinite { idx });
            }
            if v < -CLAMP_TOL {
                return Err(SpectrumError::NegativeEntry { idx, value: v });
            }
        }
        let sum: f64 = values.iter().sum();
        if (sum - 1.0).abs() > NORM_TOL {
            return Err(SpectrumError::NotNormalized { sum });
        }
        let mut values: Vec<f64> = values.iter().map(|&v| v.clamp(0.0, 1.0)).collect();
        values.sort_unstable_by(|a, b| b.total_cmp(a));
        Ok(Self { values })
    }

    /// The completely mixed state τ = (1/d, …, 1/d).
    #[must_use]
    pub fn uniform(dim: usize) -> Self {
        assert!(dim >= 1, "dimension must be positive");
        Self {
            values: vec![1.0 / dim as f64; dim],
        }
    }

    /// A pure state (1, 0, …, 0).
    #[must_use]
    pub fn pure(dim: usize) -> Self {
        assert!(dim >= 1, "dimension must be positive");
        let mut values = vec![0.0; dim];
        values[0] = 1.0;
        Self { values }
    }

    #[must_use]
    pub fn dim(&self) -> usize {
        self.values.len()
    }

    /// The sorted entries, largest first.
    #[must_use]
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Prefix sums `(Σ_{i<=k} λ_i)` for `k = 1..=d`.
    #[must_use]
    pub fn prefix_sums(&self) -> Vec<f64> {
        self.values
            .iter()
            .scan(0.0, |acc, &v| {
                *acc += v;
                Some(*acc)
            })
            .collect()
    }

    /// True when every entry matches `other` within [`EQ_TOL`].
    #[must_use]
    pub fn approx_eq(&self, other: &Self) -> bool {
        self.dim() == other.dim()
            && self
                .values
                .iter()
                .zip(&other.values)
                .all(|(a, b)| (a - b).abs() <= EQ_TOL)
    }

    /// True when this is a pure state within [`EQ_TOL`].
    #[must_use]
    pub fn is_pure(&self) -> bool {
        (self.values[0] - 1.0).abs() <= EQ_TOL
    }

    /// Largest/smallest eigenvalue and their multiplicities, grouped at
    /// [`MULT_TOL`].
    #[must_use]
    pub fn multiplicity_extremes(&self) -> MultiplicityExtremes {
        let lambda_plus = self.values[0];
        let lambda_minus = self.values[self.dim() - 1];
        let k_plus = self
            .values
            .iter()
            .take_while(|&&v| (lambda_plus - v).abs() <= MULT_TOL)
            .count();
        let k_minus = self
            .values
            .iter()
            .rev()
            .take_while(|&&v| (v - lambda_minus).abs() <= MULT_TOL)
            .count();
        MultiplicityExtremes {
            k_plus,
            k_minus,
            lambda_plus,
            lambda_minus,
        }
    }

    /// Distinct eigenvalues μ_1 > μ_2 > … > μ_ℓ with multiplicities,
    /// grouped at [`MULT_TOL`]. Each group is represented by its first
    /// (largest) member.
    #[must_use]
    pub fn distinct_groups(&self) -> Vec<(f64, usize)> {
        let mut groups: Vec<(f64, usize)> = Vec::new();
        for &v in &self.values {
            match groups.last_mut() {
                Some((rep, count)) if (*rep - v).abs() <= MULT_TOL => *count += 1,
                _ => groups.push((v, 1)),
            }
        }
        groups
    }
}

/// Extreme eigenvalues with multiplicities: (k₊, k₋, λ₊, λ₋).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MultiplicityExtremes {
    pub k_plus: usize,
    pub k_minus: usize,
    pub lambda_plus: f64,
    pub lambda_minus: f64,
}

/// How two spectra sit in the majorization preorder.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MajorizationRelation {
    /// The left argument majorizes the right (left ≻ right).
    LeftMajorized,
    /// The right argument majorizes the left (left ≺ right).
    RightMajorized,
    /// Both directions hold: the spectra coincide within tolerance.
    Equal,
    /// Neither direction holds.
    Incomparable,
}

/// Outcome of a majorization comparison, with the prefix sums that decided it.
#[derive(Debug, Clone, PartialEq)]
pub struct MajorizationVerdict {
    pub relation: MajorizationRelation,
    pub partial_sums_left: Vec<f64>,
    pub partial_sums_right: Vec<f64>,
}

impl MajorizationVerdict {
    /// True when left ≻ right (strictly or as equals).
    #[must_use]
    pub fn left_majorizes(&self) -> bool {
        matches!(
            self.relation,
            MajorizationRelation::LeftMajorized | MajorizationRelation::Equal
        )
    }

    /// True when left ≺ right (strictly or as equals).
    #[must_use]
    pub fn right_majorizes(&self) -> bool {
        matches!(
            self.relation,
            MajorizationRelation::RightMajorized | MajorizationRelation::Equal
        )
    }
}

/// Compare two spectra in the majorization preorder.
///
/// `x` majorizes `y` when every prefix sum of `x` dominates the corresponding
/// prefix sum of `y` (within [`EQ_TOL`]) and the totals agree. Totals are
/// guaranteed equal here by the `Spectrum` normalization invariant, so only
/// the first `d - 1` prefix sums decide the relation.
pub fn majorizes(x: &Spectrum, y: &Spectrum) -> Result<MajorizationVerdict, SpectrumError> {
    if x.dim() != y.dim() {
        return Err(SpectrumError::DimMismatch {
            left: x.dim(),
            right: y.dim(),
        });
    }
    let px = x.prefix_sums();
    let py = y.prefix_sums();
    let d = x.dim();
    let mut left_ok = true;
    let mut right_ok = true;
    for k in 0..d.saturating_sub(1) {
        if px[k] < py[k] - EQ_TOL {
            left_ok = false;
        }
        if py[k] < px[k] - EQ_TOL {
            right_ok = false;
        }
    }
    let relation = match (left_ok, right_ok) {
        (true, true) => MajorizationRelation::Equal,
        (true, false) => MajorizationRelation::LeftMajorized,
        (false, true) => MajorizationRelation::RightMajorized,
        (false, false) => MajorizationRelation::Incomparable,
    };
    Ok(MajorizationVerdict {
        relation,
        partial_sums_left: px,
        partial_sums_right: py,
    })
}

/// Trace distance ½·Σ|x_i − y_i| between two spectra, both taken in the
/// canonical descending order. This is the exact trace distance for
/// commuting states, which covers every pair the crate compares: σ and
/// `M_ε(σ)` share an eigenbasis by construction.
pub fn trace_distance(x: &Spectrum, y: &Spectrum) -> Result<f64, SpectrumError> {
    if x.dim() != y.dim() {
        return Err(SpectrumError::DimMismatch {
            left: x.dim(),
            right: y.dim(),
        });
    }
    let sum: f64 = x
        .values()
        .iter()
        .zip(y.values())
        .map(|(a, b)| (a - b).abs())
        .sum();
    Ok(0.5 * sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn spec(values: &[f64]) -> Spectrum {
        Spectrum::new(values).unwrap()
    }

    #[test]
    fn new_sorts_descending() {
        let s = spec(&[0.2, 0.5, 0.3]);
        assert_eq!(s.values(), &[0.5, 0.3, 0.2]);
    }

    #[test]
    fn new_accepts_single_entry() {
        let s = spec(&[1.0]);
        assert_eq!(s.values(), &[1.0]);
        assert_eq!(s.dim(), 1);
    }

    #[test]
    fn new_rejects_unnormalized() {
        assert!(matches!(
            Spectrum::new(&[0.5, 0.6]),
            Err(SpectrumError::NotNormalized { .. })
        ));
    }

    #[test]
    fn new_rejects_negative_beyond_clamp() {
        assert!(matches!(
            Spectrum::new(&[1.0001, -1e-4]),
            Err(SpectrumError::NegativeEntry { .. })
        ));
    }

    #[test]
    fn new_clamps_negative_dust() {
        let s = spec(&[1.0, -1e-13, 1e-13]);
        assert!(s.values().iter().all(|&v| v >= 0.0));
    }

    #[test]
    fn new_rejects_empty() {
        assert_eq!(Spectrum::new(&[]), Err(SpectrumError::Empty));
    }

    #[test]
    fn pure_majorizes_everything() {
        let x = Spectrum::pure(3);
        let y = spec(&[0.5, 0.3, 0.2]);
        let v = majorizes(&x, &y).unwrap();
        assert_eq!(v.relation, MajorizationRelation::LeftMajorized);
    }

    #[test]
    fn identical_spectra_are_equal() {
        let x = Spectrum::uniform(3);
        let v = majorizes(&x, &x.clone()).unwrap();
        assert_eq!(v.relation, MajorizationRelation::Equal);
    }

    #[test]
    fn prefix_sum_example_by_definition() {
        // Hand-evaluated: prefix sums 0.5 >= 0.4, 0.8 >= 0.8, totals equal.
        let x = spec(&[0.5, 0.3, 0.2]);
        let y = spec(&[0.4, 0.4, 0.2]);
        let v = majorizes(&x, &y).unwrap();
        assert_eq!(v.relation, MajorizationRelation::LeftMajorized);
        assert_eq!(v.partial_sums_left.len(), 3);
    }

    #[test]
    fn incomparable_pair_detected() {
        // Prefix sums cross: 0.6 > 0.5 but 0.8 < 0.95.
        let x = spec(&[0.6, 0.2, 0.2]);
        let y = spec(&[0.5, 0.45, 0.05]);
        let v = majorizes(&x, &y).unwrap();
        assert_eq!(v.relation, MajorizationRelation::Incomparable);
    }

    #[test]
    fn majorizes_dim_mismatch() {
        let x = Spectrum::uniform(2);
        let y = Spectrum::uniform(3);
        assert!(matches!(
            majorizes(&x, &y),
            Err(SpectrumError::DimMismatch { .. })
        ));
    }

    #[test]
    fn trace_distance_direct_sum() {
        let x = spec(&[1.0, 0.0]);
        let y = spec(&[0.5, 0.5]);
        assert!((trace_distance(&x, &y).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn trace_distance_identity() {
        let x = spec(&[0.7, 0.3]);
        assert_eq!(trace_distance(&x, &x.clone()).unwrap(), 0.0);
    }

    #[test]
    fn trace_distance_figure_state_to_uniform() {
        // Every eigenvalue reaches 1/d = 0.2 at T(σ, τ) = 0.18.
        let x = spec(&[0.32, 0.26, 0.19, 0.13, 0.10]);
        let tau = Spectrum::uniform(5);
        assert!((trace_distance(&x, &tau).unwrap() - 0.18).abs() < 1e-15);
    }

    #[test]
    fn multiplicities_direct_count() {
        let s = spec(&[0.5, 0.5, 0.0]);
        let m = s.multiplicity_extremes();
        assert_eq!((m.k_plus, m.k_minus), (2, 1));
        assert_eq!((m.lambda_plus, m.lambda_minus), (0.5, 0.0));
    }

    #[test]
    fn multiplicities_counterexample_state() {
        let s = spec(&[0.1, 0.2, 0.2, 0.5]);
        let m = s.multiplicity_extremes();
        assert_eq!((m.k_plus, m.k_minus), (1, 1));
        assert_eq!((m.lambda_plus, m.lambda_minus), (0.5, 0.1));
    }

    #[test]
    fn multiplicities_completely_mixed() {
        for d in 1..=8 {
            let m = Spectrum::uniform(d).multiplicity_extremes();
            assert_eq!((m.k_plus, m.k_minus), (d, d));
        }
    }

    #[test]
    fn distinct_groups_of_figure_state() {
        let s = spec(&[0.32, 0.26, 0.19, 0.13, 0.10]);
        let groups = s.distinct_groups();
        assert_eq!(groups.len(), 5);
        assert!(groups.iter().all(|&(_, k)| k == 1));
        let s2 = spec(&[0.5, 0.2, 0.2, 0.1]);
        assert_eq!(s2.distinct_groups(), vec![(0.5, 1), (0.2, 2), (0.1, 1)]);
    }

    proptest! {
        #[test]
        fn uniform_is_minimal_pure_is_maximal(raw in prop::collection::vec(1e-6..1.0f64, 1..9)) {
            let sum: f64 = raw.iter().sum();
            let normalized: Vec<f64> = raw.iter().map(|v| v / sum).collect();
            let x = Spectrum::new(&normalized).unwrap();
            let d = x.dim();
            let tau = Spectrum::uniform(d);
            let pure = Spectrum::pure(d);
            prop_assert!(majorizes(&tau, &x).unwrap().right_majorizes());
            prop_assert!(majorizes(&pure, &x).unwrap().left_majorizes());
        }

        #[test]
        fn majorizes_is_reflexive(raw in prop::collection::vec(1e-6..1.0f64, 1..9)) {
            let sum: f64 = raw.iter().sum();
            let normalized: Vec<f64> = raw.iter().map(|v| v / sum).collect();
            let x = Spectrum::new(&normalized).unwrap();
            prop_assert_eq!(majorizes(&x, &x.clone()).unwrap().relation, MajorizationRelation::Equal);
        }

        #[test]
        fn trace_distance_is_a_metric(
            a in prop::collection::vec(1e-6..1.0f64, 4),
            b in prop::collection::vec(1e-6..1.0f64, 4),
            c in prop::collection::vec(1e-6..1.0f64, 4),
        ) {
            let norm = |v: &[f64]| {
                let s: f64 = v.iter().sum();
                Spectrum::new(&v.iter().map(|x| x / s).collect::<Vec<_>>()).unwrap()
            };
            let (x, y, z) = (norm(&a), norm(&b), norm(&c));
            let dxy = trace_distance(&x, &y).unwrap();
            let dyx = trace_distance(&y, &x).unwrap();
            let dyz = trace_distance(&y, &z).unwrap();
            let dxz = trace_distance(&x, &z).unwrap();
            prop_assert_eq!(dxy, dyx);
            prop_assert!((0.0..=1.0 + 1e-12).contains(&dxy));
            prop_assert!(dxz <= dxy + dyz + 1e-12);
            prop_assert!(trace_distance(&x, &x.clone()).unwrap() <= EQ_TOL);
        }

        #[test]
        fn extreme_multiplicities_bounded(raw in prop::collection::vec(1e-6..1.0f64, 2..9)) {
            let sum: f64 = raw.iter().sum();
            let normalized: Vec<f64> = raw.iter().map(|v| v / sum).collect();
            let x = Spectrum::new(&normalized).unwrap();
            let m = x.multiplicity_extremes();
            let distinct = x.distinct_groups().len();
            if distinct >= 2 {
                prop_assert!(m.k_plus + m.k_minus <= x.dim());
                if m.k_plus + m.k_minus == x.dim() {
                    prop_assert_eq!(distinct, 2);
                }
            } else {
                // One distinct value: top and bottom groups coincide.
                prop_assert_eq!(m.k_plus + m.k_minus, 2 * x.dim());
            }
        }
    }
}
