//! The (h, φ)-entropy family and its three built-in members.
//!
//! An (h, φ)-entropy is `H(ρ) = h(Σ_i φ(λ_i(ρ)))` for a pair of scalar
//! functions with `φ(0) = 0` and `h(φ(1)) = 0`, where either `h` is strictly
//! increasing and `φ` strictly concave, or `h` strictly decreasing and `φ`
//! strictly convex. The entropy of a state equals the classical entropy of
//! its eigenvalues, so everything here acts on [`Spectrum`] values.
//!
//! Curvature and monotonicity are *declared* metadata, not inferred: the
//! tight continuity bound applies exactly when `h` is concave and `φ`
//! strictly concave, and that eligibility test must not depend on fragile
//! numerical differentiation. Debug builds spot-check the declarations on a
//! coarse grid at construction.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::spectrum::Spectrum;
use crate::{ALPHA_GUARD, EQ_TOL};

/// Scalar function used for `h` and `φ`.
type ScalarFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Declared monotonicity of `h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Monotonicity {
    StrictlyIncreasing,
    StrictlyDecreasing,
}

/// Declared curvature of `h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HCurvature {
    StrictlyConcave,
    Concave,
    Affine,
    Convex,
    Other,
}

/// Declared curvature of `φ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhiCurvature {
    StrictlyConcave,
    StrictlyConvex,
}

#[derive(Debug, Error, PartialEq)]
pub enum EntropyError {
    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("inadmissible (h, phi) pairing: {0}")]
    Inadmissible(String),

    #[error("numerical overflow evaluating the entropy (value {0})")]
    NumericalOverflow(f64),
}

/// An (h, φ)-entropy with declared analytic traits.
#[derive(Clone)]
pub struct EntropyFamily {
    name: String,
    param: Option<f64>,
    h: ScalarFn,
    phi: ScalarFn,
    h_monotonicity: Monotonicity,
    h_curvature: HCurvature,
    phi_curvature: PhiCurvature,
}

impl fmt::Debug for EntropyFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EntropyFamily")
            .field("name", &self.name)
            .field("param", &self.param)
            .field("h_monotonicity", &self.h_monotonicity)
            .field("h_curvature", &self.h_curvature)
            .field("phi_curvature", &self.phi_curvature)
            .finish()
    }
}

/// Whether a family qualifies for the tight uniform continuity bound
/// (`h` concave, `φ` strictly concave).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundEligibility {
    pub eligible: bool,
    pub reason: String,
}

fn log2(x: f64) -> f64 {
    x.log2()
}

/// φ for the von Neumann entropy: −x·log₂ x, with φ(0) = 0.
fn phi_von_neumann(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        -x * log2(x)
    }
}

/// x^p with the 0^p := 0 convention.
fn pow0(x: f64, p: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        x.powf(p)
    }
}

impl EntropyFamily {
    /// The von Neumann entropy S(ρ) = −Σ λ_i log₂ λ_i (h = id, φ = −x log₂ x).
    #[must_use]
    pub fn von_neumann() -> Self {
        Self {
            name: "von_neumann".into(),
            param: None,
            h: Arc::new(|x| x),
            phi: Arc::new(phi_von_neumann),
            h_monotonicity: Monotonicity::StrictlyIncreasing,
            h_curvature: HCurvature::Affine,
            phi_curvature: PhiCurvature::StrictlyConcave,
        }
    }

    /// The α-Rényi entropy S_α(ρ) = log₂(Σ λ_i^α)/(1−α) for α ∈ (0,1)∪(1,∞).
    pub fn renyi(alpha: f64) -> Result<Self, EntropyError> {
        check_family_param("renyi", alpha)?;
        let (h_mono, h_curv, phi_curv) = if alpha < 1.0 {
            (
                Monotonicity::StrictlyIncreasing,
                HCurvature::StrictlyConcave,
                PhiCurvature::StrictlyConcave,
            )
        } else {
            (
                Monotonicity::StrictlyDecreasing,
                HCurvature::Convex,
                PhiCurvature::StrictlyConvex,
            )
        };
        let family = Self {
            name: "renyi".into(),
            param: Some(alpha),
            h: Arc::new(move |x| log2(x) / (1.0 - alpha)),
            phi: Arc::new(move |x| pow0(x, alpha)),
            h_monotonicity: h_mono,
            h_curvature: h_curv,
            phi_curvature: phi_curv,
        };
        family.debug_check_traits();
        Ok(family)
    }

    /// The q-Tsallis entropy T_q(ρ) = (Σ λ_i^q − 1)/(1−q) for q ∈ (0,1)∪(1,∞),
    /// as the pair h(x) = x − 1/(1−q), φ(x) = x^q/(1−q). φ is strictly concave
    /// for every admissible q, so the whole Tsallis family is bound-eligible.
    pub fn tsallis(q: f64) -> Result<Self, EntropyError> {
        check_family_param("tsallis", q)?;
        let family = Self {
            name: "tsallis".into(),
            param: Some(q),
            h: Arc::new(move |x| x - 1.0 / (1.0 - q)),
            phi: Arc::new(move |x| pow0(x, q) / (1.0 - q)),
            h_monotonicity: Monotonicity::StrictlyIncreasing,
            h_curvature: HCurvature::Affine,
            phi_curvature: PhiCurvature::StrictlyConcave,
        };
        family.debug_check_traits();
        Ok(family)
    }

    /// Look up a built-in family by name, with its parameter where required.
    pub fn builtin(name: &str, param: Option<f64>) -> Result<Self, EntropyError> {
        match (name, param) {
            ("von_neumann", None) => Ok(Self::von_neumann()),
            ("von_neumann", Some(_)) => Err(EntropyError::BadParameter(
                "von_neumann takes no parameter".into(),
            )),
            ("renyi", Some(alpha)) => Self::renyi(alpha),
            ("tsallis", Some(q)) => Self::tsallis(q),
            ("renyi" | "tsallis", None) => Err(EntropyError::BadParameter(format!(
                "{name} requires a parameter"
            ))),
            _ => Err(EntropyError::BadParameter(format!(
                "unknown family '{name}' (expected von_neumann, renyi, or tsallis)"
            ))),
        }
    }

    /// A user-supplied pair. Validates φ(0) = 0 and h(φ(1)) = 0 numerically
    /// and that the declared traits form an admissible pairing.
    pub fn custom(
        name: impl Into<String>,
        h: impl Fn(f64) -> f64 + Send + Sync + 'static,
        phi: impl Fn(f64) -> f64 + Send + Sync + 'static,
        h_monotonicity: Monotonicity,
        h_curvature: HCurvature,
        phi_curvature: PhiCurvature,
    ) -> Result<Self, EntropyError> {
        let family = Self {
            name: name.into(),
            param: None,
            h: Arc::new(h),
            phi: Arc::new(phi),
            h_monotonicity,
            h_curvature,
            phi_curvature,
        };
        let admissible = matches!(
            (family.h_monotonicity, family.phi_curvature),
            (
                Monotonicity::StrictlyIncreasing,
                PhiCurvature::StrictlyConcave
            ) | (
                Monotonicity::StrictlyDecreasing,
                PhiCurvature::StrictlyConvex
            )
        );
        if !admissible {
            return Err(EntropyError::Inadmissible(
                "need h strictly increasing with phi strictly concave, \
                 or h strictly decreasing with phi strictly convex"
                    .into(),
            ));
        }
        if family.phi(0.0).abs() > EQ_TOL {
            return Err(EntropyError::Inadmissible("phi(0) must be 0".into()));
        }
        if family.h(family.phi(1.0)).abs() > EQ_TOL {
            return Err(EntropyError::Inadmissible("h(phi(1)) must be 0".into()));
        }
        family.debug_check_traits();
        Ok(family)
    }

    #[must_use]
    pub fn name(&self) -> &str {
        &self.name
    }

    #[must_use]
    pub fn param(&self) -> Option<f64> {
        self.param
    }

    /// Display label, e.g. `renyi(0.5)`.
    #[must_use]
    pub fn label(&self) -> String {
        match self.param {
            Some(p) => format!("{}({})", self.name, p),
            None => self.name.clone(),
        }
    }

    #[must_use]
    pub fn h(&self, x: f64) -> f64 {
        (self.h)(x)
    }

    #[must_use]
    pub fn phi(&self, x: f64) -> f64 {
        (self.phi)(x)
    }

    #[must_use]
    pub fn h_monotonicity(&self) -> Monotonicity {
        self.h_monotonicity
    }

    #[must_use]
    pub fn h_curvature(&self) -> HCurvature {
        self.h_curvature
    }

    #[must_use]
    pub fn phi_curvature(&self) -> PhiCurvature {
        self.phi_curvature
    }

    /// True when `h` is strictly concave, the hypothesis under which the
    /// entropy gap Δ_ε is *strictly* Schur convex.
    #[must_use]
    pub fn h_strictly_concave(&self) -> bool {
        self.h_curvature == HCurvature::StrictlyConcave
    }

    /// Evaluate H(x) = h(Σ_i φ(x_i)).
    pub fn evaluate(&self, x: &Spectrum) -> Result<f64, EntropyError> {
        let total: f64 = x.values().iter().map(|&v| self.phi(v)).sum();
        let value = self.h(total);
        if value.is_finite() {
            Ok(value)
        } else {
            Err(EntropyError::NumericalOverflow(value))
        }
    }

    /// Eligibility for the tight uniform continuity bound: `h` concave
    /// (including affine) and `φ` strictly concave.
    #[must_use]
    pub fn eligibility(&self) -> BoundEligibility {
        let h_ok = matches!(
            self.h_curvature,
            HCurvature::Concave | HCurvature::StrictlyConcave | HCurvature::Affine
        );
        let phi_ok = self.phi_curvature == PhiCurvature::StrictlyConcave;
        match (h_ok, phi_ok) {
            (true, true) => BoundEligibility {
                eligible: true,
                reason: format!("{}: h concave and phi strictly concave", self.label()),
            },
            (false, _) => BoundEligibility {
                eligible: false,
                reason: format!(
                    "{}: h has curvature {:?}, but the bound requires h concave",
                    self.label(),
                    self.h_curvature
                ),
            },
            (true, false) => BoundEligibility {
                eligible: false,
                reason: format!(
                    "{}: phi is strictly convex, but the bound requires phi strictly concave",
                    self.label()
                ),
            },
        }
    }

    /// Debug-build spot check of the declared curvature/monotonicity on a
    /// 100-point grid. Declarations are trusted in release builds.
    fn debug_check_traits(&self) {
        if !cfg!(debug_assertions) {
            return;
        }
        let n = 100;
        // phi on (0, 1): midpoint concavity test on interior triples.
        for i in 1..n - 1 {
            let x0 = i as f64 / n as f64;
            let x1 = (i + 1) as f64 / n as f64;
            let mid = 0.5 * (self.phi(x0) + self.phi(x1)) - self.phi(0.5 * (x0 + x1));
            match self.phi_curvature {
                PhiCurvature::StrictlyConcave => debug_assert!(
                    mid <= 1e-12,
                    "{}: phi declared strictly concave but midpoint test failed at {x0}",
                    self.label()
                ),
                PhiCurvature::StrictlyConvex => debug_assert!(
                    mid >= -1e-12,
                    "{}: phi declared strictly convex but midpoint test failed at {x0}",
                    self.label()
                ),
            }
        }
        // h on a generic positive interval covering realistic trace values.
        for i in 1..n - 1 {
            let x0 = 0.05 + 2.0 * i as f64 / n as f64;
            let x1 = 0.05 + 2.0 * (i + 1) as f64 / n as f64;
            let rising = self.h(x1) - self.h(x0);
            match self.h_monotonicity {
                Monotonicity::StrictlyIncreasing => debug_assert!(
                    rising > 0.0,
                    "{}: h declared strictly increasing but decreases at {x0}",
                    self.label()
                ),
                Monotonicity::StrictlyDecreasing => debug_assert!(
                    rising < 0.0,
                    "{}: h declared strictly decreasing but increases at {x0}",
                    self.label()
                ),
            }
            let mid = 0.5 * (self.h(x0) + self.h(x1)) - self.h(0.5 * (x0 + x1));
            match self.h_curvature {
                HCurvature::Concave | HCurvature::StrictlyConcave => debug_assert!(
                    mid <= 1e-12,
                    "{}: h declared concave but midpoint test failed at {x0}",
                    self.label()
                ),
                HCurvature::Convex => debug_assert!(
                    mid >= -1e-12,
                    "{}: h declared convex but midpoint test failed at {x0}",
                    self.label()
                ),
                HCurvature::Affine => debug_assert!(
                    mid.abs() <= 1e-12,
                    "{}: h declared affine but midpoint test failed at {x0}",
                    self.label()
                ),
                HCurvature::Other => {}
            }
        }
    }
}

fn check_family_param(name: &str, param: f64) -> Result<(), EntropyError> {
    if !param.is_finite() || param <= 0.0 {
        return Err(EntropyError::BadParameter(format!(
            "{name} parameter must be positive and finite, got {param}"
        )));
    }
    if (param - 1.0).abs() < ALPHA_GUARD {
        return Err(EntropyError::BadParameter(format!(
            "{name} parameter {param} is within {ALPHA_GUARD:e} of 1; \
             use von_neumann for the limit"
        )));
    }
    Ok(())
}
