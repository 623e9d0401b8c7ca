//! `entrobound`: majorization-extremal states in trace-distance balls and
//! tight uniform continuity bounds for (h, φ)-entropies.
//!
//! Given a `d`-dimensional quantum state σ (represented by its spectrum) and a
//! radius ε, there is a unique state σ*_ε in the trace-distance ε-ball around σ
//! that is majorized by every other member of the ball. For any Schur-concave
//! entropy — von Neumann, α-Rényi, q-Tsallis, and the whole (h, φ) family —
//! σ*_ε is therefore the entropy maximizer over the ball, and the entropy gap
//! Δ_ε(σ) = H(σ*_ε) − H(σ) is the best local continuity bound at σ.
//!
//! This crate provides:
//!
//! - [`spectrum`] — sorted probability spectra, the majorization preorder,
//!   and trace distance between commuting states.
//! - [`entropy`] — the (h, φ)-entropy family with the three built-in members
//!   (von Neumann, Rényi, Tsallis) and their declared analytic traits.
//! - [`minimizer`] — the majorization-minimizer map `M_ε` that constructs
//!   σ*_ε, the step size δ(ρ), and its semigroup / order-preserving checks.
//! - [`bounds`] — Δ_ε, the tight uniform continuity bound with equality
//!   detection, and the Audenaert–Fannes specialization.
//! - [`oracle`] — seeded samplers and brute-force randomized verification
//!   suites for every theorem-level property the crate relies on.
//! - [`eigen`], [`statefile`] — Hermitian matrix ingestion for the CLI.
//! - [`cli`] — the `entrobound` command-line front end (one thin binary).
//!
//! ## Quick example
//!
//! ```rust
//! use entrobound::{EntropyFamily, Spectrum};
//! use entrobound::minimizer::mmm;
//! use entrobound::bounds::{delta_eps, uniform_bound};
//!
//! let sigma = Spectrum::new(&[0.32, 0.26, 0.19, 0.13, 0.10]).unwrap();
//! let eps = 0.02;
//!
//! // The minimal state in the ball moves only the extremes for small eps.
//! let min = mmm(&sigma, eps).unwrap();
//! assert_eq!(min.m_plus, 1);
//! assert_eq!(min.m_minus, 1);
//!
//! // The local entropy gap never exceeds the uniform bound.
//! let family = EntropyFamily::von_neumann();
//! let local = delta_eps(&family, &sigma, eps).unwrap();
//! let bound = uniform_bound(&family, sigma.dim(), eps).unwrap();
//! assert!(local.value <= bound.bound + 1e-12);
//! ```
//!
//! Runnable walkthroughs for each capability live in `examples/`; see the
//! README for the list.

#![forbid(unsafe_code)]

pub mod bounds;
pub mod cli;
pub mod eigen;
pub mod entropy;
pub mod minimizer;
pub mod oracle;
pub mod spectrum;
pub mod statefile;

pub use bounds::{BoundReport, DeltaValue};
pub use entropy::{BoundEligibility, EntropyFamily};
pub use minimizer::{DeltaStep, MinimizerResult};
pub use oracle::{RngSeed, TrialReport};
pub use spectrum::{MajorizationVerdict, Spectrum};

/// Tolerance on `|sum - 1|` for accepting an input spectrum as normalized.
pub const NORM_TOL: f64 = 1e-9;

/// Entries in `[-CLAMP_TOL, 0)` are clamped to zero; anything more negative
/// is rejected.
pub const CLAMP_TOL: f64 = 1e-12;

/// Comparison tolerance for prefix sums, componentwise spectrum equality,
/// and bound cross-checks.
pub const EQ_TOL: f64 = 1e-12;

/// Grouping tolerance when counting eigenvalue multiplicities.
pub const MULT_TOL: f64 = 1e-10;

/// Rényi/Tsallis parameters closer than this to 1 are rejected; the limit is
/// the von Neumann family.
pub const ALPHA_GUARD: f64 = 1e-6;

/// Residual tolerance for the Δ-decomposition identity (two minimizer
/// applications accumulate rounding).
pub const DECOMP_TOL: f64 = 1e-11;

/// Componentwise tolerance for accepting an ingested matrix as Hermitian.
pub const HERM_TOL: f64 = 1e-9;

/// Tolerance for the α→1 limit checks against the von Neumann family,
/// evaluated at α = 1 ± 1e-4.
pub const LIMIT_TOL: f64 = 1e-3;
