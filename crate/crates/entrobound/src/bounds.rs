//! The entropy gap Δ_ε, the tight uniform continuity bound with equality
//! detection, and the Audenaert–Fannes specialization.
//!
//! For a family with `h` concave and `φ` strictly concave, two states at
//! trace distance at most ε satisfy
//!
//! ```text
//! |H(ρ) − H(σ)| <= h(φ(1−ε) + (d−1)·φ(ε/(d−1)))    if ε < 1 − 1/d,
//! |H(ρ) − H(σ)| <= h(d·φ(1/d))                     otherwise,
//! ```
//!
//! with equality exactly when one state is pure and the other is the witness
//! spectrum `(1−ε, ε/(d−1), …, ε/(d−1))` (respectively the completely mixed
//! state on the saturated branch). The chain behind the bound is
//! `|H(ρ) − H(σ)| <= max{Δ_ε(ρ), Δ_ε(σ)} <= Δ_ε(pure)`, where the local gap
//! Δ_ε(ω) = H(M_ε(ω)) − H(ω) is Schur convex in ω.

use thiserror::Error;

use crate::entropy::{EntropyError, EntropyFamily};
use crate::minimizer::{mmm, MinimizerError};
use crate::spectrum::{trace_distance, Spectrum, SpectrumError};
use crate::EQ_TOL;

#[derive(Debug, Error)]
pub enum BoundsError {
    #[error("family not eligible for the tight bound: {0}")]
    IneligibleFamily(String),

    #[error("dimension must be at least 2, got {0}")]
    BadDimension(usize),

    #[error("epsilon must lie in (0, 1], got {0}")]
    BadEpsilon(f64),

    #[error("states at trace distance {distance} exceed the ball radius {eps}")]
    BallViolation { distance: f64, eps: f64 },

    #[error("slope endpoints coincide: |{0} - {1}| below tolerance")]
    DegenerateInterval(f64, f64),

    #[error(transparent)]
    Entropy(#[from] EntropyError),

    #[error(transparent)]
    Minimizer(#[from] MinimizerError),

    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
}

/// Which branch of the bound formula applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundBranch {
    /// ε < 1 − 1/d: the witness is (1−ε, ε/(d−1), …).
    SubCritical,
    /// ε >= 1 − 1/d: the bound saturates at the maximum entropy h(d·φ(1/d)).
    Saturated,
}

/// A uniform continuity bound evaluation.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub bound: f64,
    pub branch: BoundBranch,
    pub family: String,
    pub eps: f64,
    pub dim: usize,
    /// The non-pure extremal state achieving equality.
    pub tight_witness: Option<Spectrum>,
}

/// The local entropy gap Δ_ε at a state.
#[derive(Debug, Clone)]
pub struct DeltaValue {
    pub value: f64,
    pub at: Spectrum,
    pub eps: f64,
}

/// Result of comparing an entropy difference against the uniform bound.
#[derive(Debug, Clone, Copy)]
pub struct BoundGap {
    pub lhs: f64,
    pub rhs: f64,
    pub tight: bool,
}

fn check_epsilon(eps: f64) -> Result<(), BoundsError> {
    if !(eps.is_finite() && 0.0 < eps && eps <= 1.0) {
        return Err(BoundsError::BadEpsilon(eps));
    }
    Ok(())
}

/// Binary entropy −ε log₂ ε − (1−ε) log₂(1−ε), with h(0) = h(1) = 0.
#[must_use]
pub fn binary_entropy(eps: f64) -> f64 {
    let mut h = 0.0;
    if eps > 0.0 {
        h -= eps * eps.log2();
    }
    if eps < 1.0 {
        h -= (1.0 - eps) * (1.0 - eps).log2();
    }
    h
}

/// The extremal spectrum achieving equality in the bound.
fn witness_spectrum(dim: usize, eps: f64, branch: BoundBranch) -> Spectrum {
    match branch {
        BoundBranch::Saturated => Spectrum::uniform(dim),
        BoundBranch::SubCritical => {
            let mut values = vec![eps / (dim - 1) as f64; dim];
            values[0] = 1.0 - eps;
            Spectrum::new(&values).expect("witness spectrum is valid")
        }
    }
}

/// Δ_ε(x) = H(M_ε(x)) − H(x). Non-negative for every admissible family by
/// Schur concavity; values inside −[`EQ_TOL`] are clamped to zero.
pub fn delta_eps(
    family: &EntropyFamily,
    x: &Spectrum,
    eps: f64,
) -> Result<DeltaValue, BoundsError> {
    check_epsilon(eps)?;
    let moved = mmm(x, eps)?.output;
    let raw = family.evaluate(&moved)? - family.evaluate(x)?;
    // Real violations are macroscopic; parameters near the ALPHA_GUARD edge
    // amplify rounding in h by up to 1e6, hence the loose threshold.
    debug_assert!(raw >= -1e-9, "Schur concavity violated: {raw}");
    Ok(DeltaValue {
        value: raw.max(0.0),
        at: x.clone(),
        eps,
    })
}

/// The tight uniform continuity bound for an eligible family.
pub fn uniform_bound(
    family: &EntropyFamily,
    dim: usize,
    eps: f64,
) -> Result<BoundReport, BoundsError> {
    let eligibility = family.eligibility();
    if !eligibility.eligible {
        return Err(BoundsError::IneligibleFamily(eligibility.reason));
    }
    if dim < 2 {
        return Err(BoundsError::BadDimension(dim));
    }
    check_epsilon(eps)?;
    let d = dim as f64;
    let (branch, bound) = if eps < 1.0 - 1.0 / d {
        let inner = family.phi(1.0 - eps) + (d - 1.0) * family.phi(eps / (d - 1.0));
        (BoundBranch::SubCritical, family.h(inner))
    } else {
        (BoundBranch::Saturated, family.h(d * family.phi(1.0 / d)))
    };
    Ok(BoundReport {
        bound,
        branch,
        family: family.label(),
        eps,
        dim,
        tight_witness: Some(witness_spectrum(dim, eps, branch)),
    })
}

/// The closed-form right-hand side of the Rényi bound,
/// `(1/(1−α))·log₂((1−ε)^α + (d−1)^{1−α}·ε^α)`, saturating at log₂ d.
///
/// For α ∈ (0, 1) this equals `uniform_bound(renyi(α), …)`; for α > 1 it is
/// the same expression continued past the concavity hypothesis (where it is
/// no longer a tight bound), exposed so the two-sided α → 1 limit against
/// the Audenaert–Fannes bound can be checked numerically.
pub fn renyi_uniform_bound_formula(alpha: f64, dim: usize, eps: f64) -> Result<f64, BoundsError> {
    if dim < 2 {
        return Err(BoundsError::BadDimension(dim));
    }
    check_epsilon(eps)?;
    let d = dim as f64;
    if eps < 1.0 - 1.0 / d {
        let inner = (1.0 - eps).powf(alpha) + (d - 1.0).powf(1.0 - alpha) * eps.powf(alpha);
        Ok(inner.log2() / (1.0 - alpha))
    } else {
        Ok(d.log2())
    }
}

/// The Audenaert–Fannes bound ε·log₂(d−1) + h₂(ε) for the von Neumann
/// entropy, saturating at log₂ d. Coincides with
/// `uniform_bound(von_neumann, …)` within [`EQ_TOL`].
pub fn audenaert_fannes(dim: usize, eps: f64) -> Result<f64, BoundsError> {
    if dim < 2 {
        return Err(BoundsError::BadDimension(dim));
    }
    check_epsilon(eps)?;
    let d = dim as f64;
    if eps < 1.0 - 1.0 / d {
        Ok(eps * (d - 1.0).log2() + binary_entropy(eps))
    } else {
        Ok(d.log2())
    }
}

/// Compare `|H(x) − H(y)|` against the uniform bound, with the spectral
/// equality-condition test: `tight` exactly when one spectrum is pure and
/// the other matches the extremal witness within [`EQ_TOL`]. The witness
/// comparison (rather than a comparison of bound values) avoids false
/// positives from flat regions of `h`.
pub fn bound_gap(
    family: &EntropyFamily,
    x: &Spectrum,
    y: &Spectrum,
    eps: f64,
) -> Result<BoundGap, BoundsError> {
    let distance = trace_distance(x, y)?;
    if distance > eps + EQ_TOL {
        return Err(BoundsError::BallViolation { distance, eps });
    }
    let report = uniform_bound(family, x.dim(), eps)?;
    let lhs = (family.evaluate(x)? - family.evaluate(y)?).abs();
    let witness = report
        .tight_witness
        .as_ref()
        .expect("uniform_bound always attaches a witness");
    let tight = (x.is_pure() && y.approx_eq(witness)) || (y.is_pure() && x.approx_eq(witness));
    Ok(BoundGap {
        lhs,
        rhs: report.bound,
        tight,
    })
}

/// The local continuity bound at `x`: the largest upward entropy deviation
/// over the ε-ball, which is exactly Δ_ε(x). Defined for every admissible
/// family; for eligible families it never exceeds the uniform bound.
pub fn local_bound(family: &EntropyFamily, x: &Spectrum, eps: f64) -> Result<f64, BoundsError> {
    Ok(delta_eps(family, x, eps)?.value)
}

/// Both sides of the decomposition Δ_{ε₁+ε₂}(x) = Δ_{ε₁}(M_{ε₂}(x)) + Δ_{ε₂}(x),
/// an identity that holds for every admissible family with residual at most
/// [`crate::DECOMP_TOL`].
pub fn delta_decomposition(
    family: &EntropyFamily,
    x: &Spectrum,
    eps1: f64,
    eps2: f64,
) -> Result<(f64, f64), BoundsError> {
    check_epsilon(eps1)?;
    check_epsilon(eps2)?;
    if eps1 + eps2 > 1.0 {
        return Err(BoundsError::BadEpsilon(eps1 + eps2));
    }
    let lhs = delta_eps(family, x, eps1 + eps2)?.value;
    let moved = mmm(x, eps2)?.output;
    let rhs = delta_eps(family, &moved, eps1)?.value + delta_eps(family, x, eps2)?.value;
    debug_assert!(
        (lhs - rhs).abs() <= crate::DECOMP_TOL,
        "decomposition residual {}",
        lhs - rhs
    );
    Ok((lhs, rhs))
}

/// The slope function s(x₁, x₂) = (φ(x₂) − φ(x₁))/(x₂ − x₁), symmetric in
/// its arguments. For concave φ it is monotone decreasing in each argument.
pub fn slope(phi: impl Fn(f64) -> f64, x1: f64, x2: f64) -> Result<f64, BoundsError> {
    if (x1 - x2).abs() < EQ_TOL {
        return Err(BoundsError::DegenerateInterval(x1, x2));
    }
    Ok((phi(x2) - phi(x1)) / (x2 - x1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn spec(values: &[f64]) -> Spectrum {
        Spectrum::new(values).unwrap()
    }

    #[test]
    fn delta_eps_vanishes_at_uniform() {
        for family in [
            EntropyFamily::von_neumann(),
            EntropyFamily::renyi(0.5).unwrap(),
            EntropyFamily::tsallis(2.0).unwrap(),
        ] {
            for eps in [0.05, 0.4, 1.0] {
                let v = delta_eps(&family, &Spectrum::uniform(4), eps).unwrap();
                assert_eq!(v.value, 0.0);
            }
        }
    }

    #[test]
    fn counterexample_pair_equal_for_von_neumann() {
        // rho ≺ sigma, not equivalent, yet the gaps coincide for eps <= 0.05
        // because h is affine and only the extreme eigenvalues move.
        let rho = spec(&[0.5, 0.2, 0.2, 0.1]);
        let sigma = spec(&[0.5, 0.25, 0.15, 0.1]);
        let vn = EntropyFamily::von_neumann();
        for eps in [0.01, 0.03, 0.05] {
            let dr = delta_eps(&vn, &rho, eps).unwrap().value;
            let ds = delta_eps(&vn, &sigma, eps).unwrap().value;
            assert!((dr - ds).abs() <= 1e-12, "eps {eps}: {dr} vs {ds}");
        }
    }

    #[test]
    fn counterexample_pair_strict_for_renyi_two() {
        let rho = spec(&[0.5, 0.2, 0.2, 0.1]);
        let sigma = spec(&[0.5, 0.25, 0.15, 0.1]);
        let renyi2 = EntropyFamily::renyi(2.0).unwrap();
        let dr = delta_eps(&renyi2, &rho, 0.05).unwrap().value;
        let ds = delta_eps(&renyi2, &sigma, 0.05).unwrap().value;
        assert!(dr - ds >= 1e-6, "expected a visible gap, got {}", dr - ds);
    }

    #[test]
    fn renyi_bound_frozen_value() {
        // Independent route: (1/(1−α))·log₂((1−ε)^α + (d−1)^{1−α}·ε^α)
        // evaluated by hand for α = 1/2, d = 5, ε = 0.1 gives
        // 2·log₂(√0.9 + 2·√0.1) = 1.3219280948873623.
        let family = EntropyFamily::renyi(0.5).unwrap();
        let report = uniform_bound(&family, 5, 0.1).unwrap();
        assert_eq!(report.branch, BoundBranch::SubCritical);
        assert!((report.bound - 1.321_928_094_887_362_3).abs() < 1e-12);

        let alpha = 0.5;
        let independent = (1.0 / (1.0 - alpha))
            * (0.9f64.powf(alpha) + 4f64.powf(1.0 - alpha) * 0.1f64.powf(alpha)).log2();
        assert!((report.bound - independent).abs() < 1e-12);
    }

    #[test]
    fn renyi_bound_saturates_at_log_d() {
        let family = EntropyFamily::renyi(0.5).unwrap();
        let report = uniform_bound(&family, 5, 0.9).unwrap();
        assert_eq!(report.branch, BoundBranch::Saturated);
        assert!((report.bound - 5f64.log2()).abs() < 1e-12);
        assert!(report
            .tight_witness
            .unwrap()
            .approx_eq(&Spectrum::uniform(5)));
    }

    #[test]
    fn tsallis_bound_frozen_value() {
        // ((1−ε)^q + (d−1)^{1−q}·ε^q − 1)/(1−q) at q = 2, d = 3, ε = 0.1:
        // (0.81 + 0.5·0.01 − 1)/(−1) = 0.185.
        let family = EntropyFamily::tsallis(2.0).unwrap();
        let report = uniform_bound(&family, 3, 0.1).unwrap();
        assert!((report.bound - 0.185).abs() < 1e-12, "{}", report.bound);
    }

    #[test]
    fn tsallis_saturated_matches_closed_form() {
        for q in [0.5, 2.0, 3.0] {
            let family = EntropyFamily::tsallis(q).unwrap();
            for d in [2usize, 5] {
                let report = uniform_bound(&family, d, 0.95).unwrap();
                let expected = ((d as f64).powf(1.0 - q) - 1.0) / (1.0 - q);
                assert!((report.bound - expected).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn uniform_bound_rejects_ineligible() {
        let renyi2 = EntropyFamily::renyi(2.0).unwrap();
        assert!(matches!(
            uniform_bound(&renyi2, 4, 0.1),
            Err(BoundsError::IneligibleFamily(_))
        ));
    }

    #[test]
    fn uniform_bound_rejects_bad_inputs() {
        let vn = EntropyFamily::von_neumann();
        assert!(matches!(
            uniform_bound(&vn, 1, 0.1),
            Err(BoundsError::BadDimension(1))
        ));
        assert!(matches!(
            uniform_bound(&vn, 4, 0.0),
            Err(BoundsError::BadEpsilon(_))
        ));
    }

    #[test]
    fn audenaert_fannes_boundary_and_saturation() {
        // d = 2, eps = 0.5 = 1 − 1/d: both branches meet at log₂ 2 = 1.
        assert!((audenaert_fannes(2, 0.5).unwrap() - 1.0).abs() < 1e-15);
        assert!((binary_entropy(0.5) - 1.0).abs() < 1e-15);
        // Saturated branch.
        for eps in [0.8, 0.9, 1.0] {
            assert!((audenaert_fannes(5, eps).unwrap() - 5f64.log2()).abs() < 1e-15);
        }
        // Sub-critical: direct formula.
        let expected = 0.1 * 4f64.log2() + binary_entropy(0.1);
        assert!((audenaert_fannes(5, 0.1).unwrap() - expected).abs() < 1e-15);
    }

    #[test]
    fn renyi_formula_matches_gated_bound_below_one() {
        for alpha in [0.3, 0.5, 0.9] {
            let family = EntropyFamily::renyi(alpha).unwrap();
            for d in [2usize, 5, 8] {
                for eps in [0.05, 0.3, 0.95] {
                    let gated = uniform_bound(&family, d, eps).unwrap().bound;
                    let formula = renyi_uniform_bound_formula(alpha, d, eps).unwrap();
                    assert!((gated - formula).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn renyi_formula_two_sided_limit_to_audenaert_fannes() {
        for alpha in [1.0 - 1e-4, 1.0 + 1e-4] {
            for d in [2usize, 5, 8] {
                for eps in [0.05, 0.3, 0.95] {
                    let near = renyi_uniform_bound_formula(alpha, d, eps).unwrap();
                    let af = audenaert_fannes(d, eps).unwrap();
                    assert!((near - af).abs() <= 1e-3, "alpha {alpha} d {d} eps {eps}");
                }
            }
        }
    }

    #[test]
    fn audenaert_fannes_matches_von_neumann_bound() {
        let vn = EntropyFamily::von_neumann();
        for d in 2..=8usize {
            for eps in [0.05, 0.3, 1.0 - 1.0 / d as f64, 0.95] {
                let af = audenaert_fannes(d, eps).unwrap();
                let ub = uniform_bound(&vn, d, eps).unwrap().bound;
                assert!((af - ub).abs() <= EQ_TOL, "d {d} eps {eps}: {af} vs {ub}");
            }
        }
    }

    #[test]
    fn binary_entropy_boundary_convention() {
        assert_eq!(binary_entropy(0.0), 0.0);
        assert_eq!(binary_entropy(1.0), 0.0);
    }

    #[test]
    fn bound_gap_tight_on_witness_pair() {
        let family = EntropyFamily::von_neumann();
        let d = 4;
        let eps = 0.3;
        let pure = Spectrum::pure(d);
        let witness = spec(&[0.7, 0.1, 0.1, 0.1]);
        let gap = bound_gap(&family, &pure, &witness, eps).unwrap();
        assert!(gap.tight);
        assert!((gap.lhs - gap.rhs).abs() < 1e-10);
    }

    #[test]
    fn bound_gap_tight_on_saturated_pair() {
        let family = EntropyFamily::von_neumann();
        let gap = bound_gap(&family, &Spectrum::pure(4), &Spectrum::uniform(4), 0.9).unwrap();
        assert!(gap.tight);
        assert!((gap.lhs - gap.rhs).abs() < 1e-10);
    }

    #[test]
    fn bound_gap_not_tight_without_pure_state() {
        let family = EntropyFamily::von_neumann();
        let u = Spectrum::uniform(4);
        let gap = bound_gap(&family, &u, &u.clone(), 0.3).unwrap();
        assert!(!gap.tight);
        assert_eq!(gap.lhs, 0.0);
        assert!(gap.lhs < gap.rhs);
    }

    #[test]
    fn bound_gap_rejects_ball_violation() {
        let family = EntropyFamily::von_neumann();
        let result = bound_gap(&family, &Spectrum::pure(3), &Spectrum::uniform(3), 0.1);
        assert!(matches!(result, Err(BoundsError::BallViolation { .. })));
    }

    #[test]
    fn local_bound_at_pure_equals_uniform_bound() {
        for family in [
            EntropyFamily::von_neumann(),
            EntropyFamily::renyi(0.3).unwrap(),
            EntropyFamily::tsallis(3.0).unwrap(),
        ] {
            for d in [2usize, 5] {
                for eps in [0.1, 0.5, 0.95] {
                    let lb = local_bound(&family, &Spectrum::pure(d), eps).unwrap();
                    let ub = uniform_bound(&family, d, eps).unwrap().bound;
                    assert!(
                        (lb - ub).abs() <= 1e-11,
                        "{} d {d} eps {eps}",
                        family.label()
                    );
                }
            }
        }
    }

    #[test]
    fn local_bound_evaluates_for_ineligible_family() {
        // Renyi alpha > 1 has no tight uniform bound, but the local gap is a
        // well-defined number; this split powers the counterexample suite.
        let renyi2 = EntropyFamily::renyi(2.0).unwrap();
        let x = spec(&[0.5, 0.3, 0.2]);
        let v = local_bound(&renyi2, &x, 0.1).unwrap();
        assert!(v > 0.0);
    }

    #[test]
    fn decomposition_identity_on_figure_state() {
        let x = spec(&[0.32, 0.26, 0.19, 0.13, 0.10]);
        let vn = EntropyFamily::von_neumann();
        let (lhs, rhs) = delta_decomposition(&vn, &x, 0.03, 0.04).unwrap();
        assert!((lhs - rhs).abs() <= 1e-12, "residual {}", lhs - rhs);
        let u = Spectrum::uniform(5);
        let (l0, r0) = delta_decomposition(&vn, &u, 0.2, 0.3).unwrap();
        assert_eq!((l0, r0), (0.0, 0.0));
    }

    #[test]
    fn slope_basics() {
        let sq = |x: f64| x * x;
        assert!((slope(sq, 0.0, 1.0).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(slope(sq, 0.2, 0.7).unwrap(), slope(sq, 0.7, 0.2).unwrap());
        assert!(matches!(
            slope(sq, 0.5, 0.5),
            Err(BoundsError::DegenerateInterval(_, _))
        ));
    }

    proptest! {
        #[test]
        fn sandwich_between_local_and_uniform(
            a in prop::collection::vec(1e-4..1.0f64, 5),
            b in prop::collection::vec(1e-4..1.0f64, 5),
            eps in 0.01..1.0f64,
        ) {
            let norm = |v: &[f64]| {
                let s: f64 = v.iter().sum();
                Spectrum::new(&v.iter().map(|x| x / s).collect::<Vec<_>>()).unwrap()
            };
            let x = norm(&a);
            let y = norm(&b);
            prop_assume!(trace_distance(&x, &y).unwrap() <= eps);
            let family = EntropyFamily::renyi(0.5).unwrap();
            let gap = bound_gap(&family, &x, &y, eps).unwrap();
            let dx = delta_eps(&family, &x, eps).unwrap().value;
            let dy = delta_eps(&family, &y, eps).unwrap().value;
            prop_assert!(gap.lhs <= dx.max(dy) + 1e-11);
            prop_assert!(dx.max(dy) <= gap.rhs + 1e-11);
        }

        #[test]
        fn slope_monotone_for_concave_phi(
            x1 in 0.01..0.99f64,
            dx in 1e-4..0.5f64,
            y1 in 0.01..0.99f64,
            dy in 1e-4..0.5f64,
        ) {
            // Prop: x1 <= y1 and x2 <= y2 implies s(x1,x2) >= s(y1,y2).
            let (x1, y1) = if x1 <= y1 { (x1, y1) } else { (y1, x1) };
            let x2 = (x1 + dx).min(0.999);
            let y2 = (y1 + dy).min(0.999);
            prop_assume!(x2 <= y2 && (x2 - x1).abs() > 1e-6 && (y2 - y1).abs() > 1e-6);
            let family = EntropyFamily::von_neumann();
            let s_x = slope(|v| family.phi(v), x1, x2).unwrap();
            let s_y = slope(|v| family.phi(v), y1, y2).unwrap();
            prop_assert!(s_x >= s_y - 1e-12);
        }
    }
}
