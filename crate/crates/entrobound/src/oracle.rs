//! Brute-force and randomized verification of the theorem-level properties.
//!
//! Everything here is an *independent check* on the analytic machinery:
//! majorized pairs are generated constructively (T-transform mixing), ball
//! members are sampled and re-verified against the distance constraint, and
//! each suite compares a claimed identity or inequality against direct
//! evaluation, reporting the worst violation seen.
//!
//! Reproducibility contract: a suite is a pure function of its
//! [`SuiteConfig`]. Every trial derives its own sub-seed deterministically
//! from the master seed and a trial counter, so reports are identical across
//! runs and across any future parallel execution of trials.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use thiserror::Error;

use crate::bounds::{
    audenaert_fannes, bound_gap, delta_decomposition, delta_eps, renyi_uniform_bound_formula,
    slope, uniform_bound, BoundsError,
};
use crate::entropy::{EntropyError, EntropyFamily};
use crate::minimizer::{delta_step, mmm, MinimizerError};
use crate::spectrum::{majorizes, trace_distance, Spectrum, SpectrumError};
use crate::{EQ_TOL, LIMIT_TOL, MULT_TOL};

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),

    #[error(transparent)]
    Entropy(#[from] EntropyError),

    #[error(transparent)]
    Minimizer(#[from] MinimizerError),

    #[error(transparent)]
    Bounds(#[from] BoundsError),

    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
}

/// A 64-bit master seed. Identical seeds replay identical sample streams.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RngSeed(pub u64);

impl RngSeed {
    /// Fresh deterministic generator for this seed.
    #[must_use]
    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }

    /// Sub-seed for an indexed trial, decorrelated by SplitMix64 so that
    /// neighbouring trials share no stream structure.
    #[must_use]
    pub fn trial(self, index: u64) -> RngSeed {
        RngSeed(splitmix64(
            self.0 ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15),
        ))
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Uniform (flat Dirichlet) sample on the simplex, sorted descending.
/// Normalized i.i.d. exponentials are exactly Dirichlet(1, …, 1).
pub fn sample_spectrum(dim: usize, rng: &mut impl Rng) -> Spectrum {
    assert!(dim >= 1);
    if dim == 1 {
        return Spectrum::pure(1);
    }
    loop {
        let mut values: Vec<f64> = (0..dim)
            .map(|_| {
                let u: f64 = rng.gen();
                -(1.0 - u).ln()
            })
            .collect();
        let sum: f64 = values.iter().sum();
        if sum <= 0.0 {
            continue;
        }
        for v in &mut values {
            *v /= sum;
        }
        if let Ok(s) = Spectrum::new(&values) {
            return s;
        }
    }
}

/// Convenience wrapper sampling from a fresh seed.
#[must_use]
pub fn sample_spectrum_seeded(dim: usize, seed: RngSeed) -> Spectrum {
    sample_spectrum(dim, &mut seed.rng())
}

/// Sample a comparable pair x ≺ y: y is a flat-Dirichlet draw and x follows
/// from `steps` random pairwise-averaging moves (T-transforms), each of
/// which stays below its input in the majorization order. The verdict is
/// re-checked against the definition before returning.
pub fn sample_majorized_pair(dim: usize, steps: usize, rng: &mut impl Rng) -> (Spectrum, Spectrum) {
    assert!(dim >= 2);
    let y = sample_spectrum(dim, rng);
    let mut values = y.values().to_vec();
    for _ in 0..steps {
        let i = rng.gen_range(0..dim);
        let mut j = rng.gen_range(0..dim - 1);
        if j >= i {
            j += 1;
        }
        let fraction: f64 = rng.gen();
        let shift = 0.5 * fraction * (values[i] - values[j]);
        values[i] -= shift;
        values[j] += shift;
    }
    let x = Spectrum::new(&values).expect("T-transforms preserve the simplex");
    let verdict = majorizes(&y, &x).expect("equal dimensions");
    assert!(
        verdict.left_majorizes(),
        "pair generator produced a non-majorized pair"
    );
    (x, y)
}

/// Sample a spectrum inside the trace-distance ε-ball around `x`.
///
/// Draws a centered Gaussian direction, scales it to a half-ℓ1 radius of at
/// most ε, adds it to `x`, clamps to the simplex, and re-verifies the
/// distance, rejecting violations. Two stratifications keep the sampler
/// informative: half the draws sit on the sphere `T = ε`, and half are
/// rearranged so the negative mass lands on the largest eigenvalues, the
/// region where high-entropy ball members concentrate. After a bounded run
/// of rejections the perturbation is shrunk.
pub fn sample_ball(x: &Spectrum, eps: f64, rng: &mut impl Rng) -> Spectrum {
    assert!(eps > 0.0 && eps <= 1.0);
    let d = x.dim();
    if d == 1 {
        return x.clone();
    }
    let mut shrink = 1.0;
    let mut attempt = 0usize;
    loop {
        attempt += 1;
        if attempt > 1000 && attempt.is_multiple_of(100) {
            shrink *= 0.5;
        }
        let mut z: Vec<f64> = (0..d).map(|_| StandardNormal.sample(rng)).collect();
        let mean = z.iter().sum::<f64>() / d as f64;
        for v in &mut z {
            *v -= mean;
        }
        let half_l1 = 0.5 * z.iter().map(|v| v.abs()).sum::<f64>();
        if half_l1 < 1e-12 {
            continue;
        }
        let t: f64 = if rng.gen::<bool>() {
            1.0 - 1e-12
        } else {
            let u: f64 = rng.gen();
            u.powf(1.0 / (d as f64 - 1.0))
        };
        if rng.gen::<bool>() {
            // Anti-align against the descending spectrum.
            z.sort_unstable_by(|a, b| a.total_cmp(b));
        }
        let scale = eps * t * shrink / half_l1;
        let mut w: Vec<f64> = x
            .values()
            .iter()
            .zip(&z)
            .map(|(xv, zv)| xv + scale * zv)
            .collect();
        for v in &mut w {
            if *v < 0.0 {
                *v = 0.0;
            }
        }
        let sum: f64 = w.iter().sum();
        if sum <= 0.0 {
            continue;
        }
        for v in &mut w {
            *v /= sum;
        }
        if let Ok(candidate) = Spectrum::new(&w) {
            if trace_distance(x, &candidate).expect("same dimension") <= eps {
                return candidate;
            }
        }
    }
}

/// Monte-Carlo maximum of the entropy over the ε-ball. The center belongs
/// to its own ball and seeds the maximum, so the result never falls below
/// `H(x)`; it never exceeds `H(M_ε(x))` and converges to it as `samples`
/// grows.
pub fn brute_force_max_entropy(
    family: &EntropyFamily,
    x: &Spectrum,
    eps: f64,
    samples: usize,
    seed: RngSeed,
) -> Result<f64, OracleError> {
    let mut rng = seed.rng();
    let mut best = family.evaluate(x)?;
    for _ in 1..samples {
        let omega = sample_ball(x, eps, &mut rng);
        best = best.max(family.evaluate(&omega)?);
    }
    Ok(best)
}

/// One step record of the δ-exhaustion iteration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExhaustionStep {
    pub k_plus: usize,
    pub k_minus: usize,
}

/// Trace of iterating x ← M_{δ(x)}(x) until the completely mixed state.
#[derive(Debug, Clone)]
pub struct ExhaustionTrace {
    /// Extreme multiplicities after each step (the input's are not listed).
    pub path: Vec<ExhaustionStep>,
    pub reached_uniform: bool,
}

impl ExhaustionTrace {
    #[must_use]
    pub fn steps(&self) -> usize {
        self.path.len()
    }
}

/// Iterate ε-exhaustion by δ-steps. Each step must strictly grow one of the
/// extreme multiplicities, so the walk reaches uniform in at most 4d steps;
/// the hard cap exists only to turn an implementation bug into an error.
pub fn exhaustion_trace(x: &Spectrum) -> Result<ExhaustionTrace, OracleError> {
    let d = x.dim();
    let mut current = x.clone();
    let mut path = Vec::new();
    for _ in 0..8 * d {
        if current.distinct_groups().len() < 2 {
            return Ok(ExhaustionTrace {
                path,
                reached_uniform: true,
            });
        }
        let delta = delta_step(&current)?.value.min(1.0);
        let result = mmm(&current, delta)?;
        let m = result.output.multiplicity_extremes();
        path.push(ExhaustionStep {
            k_plus: m.k_plus,
            k_minus: m.k_minus,
        });
        current = result.output;
    }
    Ok(ExhaustionTrace {
        path,
        reached_uniform: false,
    })
}

/// A single recorded violation: the inputs that produced it, the observed
/// quantity, and what was expected of it.
#[derive(Debug, Clone)]
pub struct Failure {
    pub inputs: String,
    pub observed: f64,
    pub expected: f64,
}

/// Outcome of one verification suite.
#[derive(Debug, Clone)]
pub struct TrialReport {
    pub suite: String,
    pub trials: usize,
    pub failures: Vec<Failure>,
    /// Worst value of the suite's violation measure; at or below the
    /// configured tolerance whenever `failures` is empty.
    pub max_violation: f64,
}

impl TrialReport {
    #[must_use]
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn new(suite: &str) -> Self {
        Self {
            suite: suite.to_string(),
            trials: 0,
            failures: Vec::new(),
            max_violation: f64::NEG_INFINITY,
        }
    }

    fn record(&mut self, measure: f64, tol: f64, inputs: impl Fn() -> String, expected: f64) {
        self.trials += 1;
        self.max_violation = self.max_violation.max(measure);
        if measure > tol {
            self.failures.push(Failure {
                inputs: inputs(),
                observed: measure,
                expected,
            });
        }
    }
}

/// The named verification suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    SchurConvexity,
    Semigroup,
    Decomposition,
    Counterexample,
    Tightness,
    Slope,
    LimitAlpha,
}

impl std::str::FromStr for Suite {
    type Err = OracleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "schur_convexity" => Ok(Self::SchurConvexity),
            "semigroup" => Ok(Self::Semigroup),
            "decomposition" => Ok(Self::Decomposition),
            "counterexample" => Ok(Self::Counterexample),
            "tightness" => Ok(Self::Tightness),
            "slope" => Ok(Self::Slope),
            "limit_alpha" => Ok(Self::LimitAlpha),
            other => Err(OracleError::UnknownSuite(other.to_string())),
        }
    }
}

impl Suite {
    #[must_use]
    pub fn name(self) -> &'static str {
        match self {
            Self::SchurConvexity => "schur_convexity",
            Self::Semigroup => "semigroup",
            Self::Decomposition => "decomposition",
            Self::Counterexample => "counterexample",
            Self::Tightness => "tightness",
            Self::Slope => "slope",
            Self::LimitAlpha => "limit_alpha",
        }
    }
}

/// Configuration for [`run_suite`]. Unset fields fall back to per-suite
/// defaults chosen to match the crate's acceptance grid.
#[derive(Debug, Clone, Default)]
pub struct SuiteConfig {
    pub trials: Option<usize>,
    pub dims: Option<Vec<usize>>,
    pub eps_values: Option<Vec<f64>>,
    pub families: Option<Vec<EntropyFamily>>,
    pub tol: Option<f64>,
    pub seed: Option<RngSeed>,
}

impl SuiteConfig {
    fn trials(&self, default: usize) -> usize {
        self.trials.unwrap_or(default)
    }

    fn dims(&self, default: &[usize]) -> Vec<usize> {
        self.dims.clone().unwrap_or_else(|| default.to_vec())
    }

    fn eps_values(&self, default: &[f64]) -> Vec<f64> {
        self.eps_values.clone().unwrap_or_else(|| default.to_vec())
    }

    fn tol(&self, default: f64) -> f64 {
        self.tol.unwrap_or(default)
    }

    fn seed(&self) -> RngSeed {
        self.seed.unwrap_or(RngSeed(42))
    }

    fn families(&self, default: impl Fn() -> Vec<EntropyFamily>) -> Vec<EntropyFamily> {
        self.families.clone().unwrap_or_else(default)
    }
}

fn eligible_builtins() -> Vec<EntropyFamily> {
    vec![
        EntropyFamily::von_neumann(),
        EntropyFamily::renyi(0.3).expect("valid"),
        EntropyFamily::renyi(0.5).expect("valid"),
        EntropyFamily::renyi(0.9).expect("valid"),
        EntropyFamily::tsallis(0.5).expect("valid"),
        EntropyFamily::tsallis(2.0).expect("valid"),
        EntropyFamily::tsallis(3.0).expect("valid"),
    ]
}

/// Run one verification suite.
pub fn run_suite(suite: Suite, config: &SuiteConfig) -> Result<TrialReport, OracleError> {
    match suite {
        Suite::SchurConvexity => run_schur_convexity(config),
        Suite::Semigroup => run_semigroup(config),
        Suite::Decomposition => run_decomposition(config),
        Suite::Counterexample => run_counterexample(config),
        Suite::Tightness => run_tightness(config),
        Suite::Slope => run_slope(config),
        Suite::LimitAlpha => run_limit_alpha(config),
    }
}

/// Pairs whose prefix sums differ visibly somewhere; strict inequalities
/// are only decidable on such pairs.
fn well_separated(x: &Spectrum, y: &Spectrum) -> bool {
    x.prefix_sums()
        .iter()
        .zip(y.prefix_sums())
        .any(|(a, b)| (a - b).abs() >= 1e-6)
}

fn run_schur_convexity(config: &SuiteConfig) -> Result<TrialReport, OracleError> {
    let mut report = TrialReport::new(Suite::SchurConvexity.name());
    let trials = config.trials(1000);
    let dims = config.dims(&[3, 4, 5, 6]);
    let eps_values = config.eps_values(&[0.05, 0.2, 0.6]);
    let tol = config.tol(1e-11);
    let seed = config.seed();
    let families = config.families(|| {
        vec![
            EntropyFamily::von_neumann(),
            EntropyFamily::renyi(0.5).expect("valid"),
            EntropyFamily::tsallis(0.5).expect("valid"),
            EntropyFamily::tsallis(2.0).expect("valid"),
        ]
    });

    let mut counter = 0u64;
    for &dim in &dims {
        for &eps in &eps_values {
            for trial in 0..trials {
                counter += 1;
                let mut rng = seed.trial(counter).rng();
                let steps = rng.gen_range(1..=2 * dim);
                let (x, y) = sample_majorized_pair(dim, steps, &mut rng);
                for family in &families {
                    let dx = delta_eps(family, &x, eps)?.value;
                    let dy = delta_eps(family, &y, eps)?.value;
                    // Schur convexity: x ≺ y forces Δ(x) <= Δ(y).
                    report.record(
                        dx - dy,
                        tol,
                        || {
                            format!(
                                "schur d={dim} eps={eps} family={} trial={trial} x={:?} y={:?}",
                                family.label(),
                                x.values(),
                                y.values()
                            )
                        },
                        0.0,
                    );
                    // Equality transfers the top eigenvalue.
                    if (dx - dy).abs() <= EQ_TOL {
                        let gap = (x.values()[0] - y.values()[0]).abs();
                        report.record(
                            gap - MULT_TOL,
                            0.0,
                            || {
                                format!(
                                    "schur-equality d={dim} eps={eps} family={} trial={trial}",
                                    family.label()
                                )
                            },
                            0.0,
                        );
                    }
                    // Strict Schur convexity for strictly concave h.
                    if family.h_strictly_concave() && well_separated(&x, &y) {
                        report.record(
                            EQ_TOL - (dy - dx),
                            0.0,
                            || {
                                format!(
                                    "strict-schur d={dim} eps={eps} family={} trial={trial} \
                                     x={:?} y={:?}",
                                    family.label(),
                                    x.values(),
                                    y.values()
                                )
                            },
                            0.0,
                        );
                    }
                }
            }
        }
    }
    Ok(report)
}

fn run_semigroup(config: &SuiteConfig) -> Result<TrialReport, OracleError> {
    let mut report = TrialReport::new(Suite::Semigroup.name());
    let trials = config.trials(1000);
    let dims = config.dims(&[2, 3, 4, 5, 6, 7, 8]);
    let tol = config.tol(1e-11);
    let seed = config.seed();

    let mut counter = 0u64;
    for &dim in &dims {
        for trial in 0..trials {
            counter += 1;
            let mut rng = seed.trial(counter).rng();
            let x = sample_spectrum(dim, &mut rng);
            let total: f64 = rng.gen_range(1e-3..=1.0);
            let split: f64 = rng.gen_range(1e-3..=1.0 - 1e-3);
            let eps1 = (total * split).max(1e-6);
            let eps2 = (total * (1.0 - split)).max(1e-6);

            let joint = mmm(&x, eps1 + eps2)?;
            let staged = mmm(&mmm(&x, eps2)?.output, eps1)?;
            let max_gap = joint
                .output
                .values()
                .iter()
                .zip(staged.output.values())
                .map(|(a, b)| (a - b).abs())
                .fold(0.0f64, f64::max);
            report.record(
                max_gap,
                tol,
                || {
                    format!(
                        "semigroup d={dim} trial={trial} eps1={eps1} eps2={eps2} x={:?}",
                        x.values()
                    )
                },
                0.0,
            );

            // Below delta(x) the minimizer moves exactly the extreme
            // multiplicity blocks.
            if x.distinct_groups().len() >= 2 {
                let delta = delta_step(&x)?.value;
                let eps = eps1.min(delta);
                let r = mmm(&x, eps)?;
                if !r.reached_tau {
                    let m = x.multiplicity_extremes();
                    let mismatch = (r.m_plus != m.k_plus || r.m_minus != m.k_minus) as u8;
                    report.record(
                        f64::from(mismatch),
                        0.5,
                        || {
                            format!(
                                "delta-regime d={dim} trial={trial} eps={eps} x={:?} \
                                 m=({}, {}) k=({}, {})",
                                x.values(),
                                r.m_plus,
                                r.m_minus,
                                m.k_plus,
                                m.k_minus
                            )
                        },
                        0.0,
                    );
                }
            }
        }
    }
    Ok(report)
}

fn run_decomposition(config: &SuiteConfig) -> Result<TrialReport, OracleError> {
    let mut report = TrialReport::new(Suite::Decomposition.name());
    let trials = config.trials(1000);
    let dims = config.dims(&[2, 3, 4, 5, 6, 7, 8]);
    let tol = config.tol(crate::DECOMP_TOL);
    let seed = config.seed();
    let families = config.families(|| {
        vec![
            EntropyFamily::von_neumann(),
            EntropyFamily::renyi(0.5).expect("valid"),
            EntropyFamily::renyi(2.0).expect("valid"),
            EntropyFamily::tsallis(0.5).expect("valid"),
            EntropyFamily::tsallis(2.0).expect("valid"),
        ]
    });

    let mut counter = 0u64;
    for &dim in &dims {
        for trial in 0..trials {
            counter += 1;
            let mut rng = seed.trial(counter).rng();
            let x = sample_spectrum(dim, &mut rng);
            let total: f64 = rng.gen_range(1e-3..=1.0);
            let split: f64 = rng.gen_range(1e-3..=1.0 - 1e-3);
            let eps1 = (total * split).max(1e-6);
            let eps2 = (total * (1.0 - split)).max(1e-6);
            for family in &families {
                let (lhs, rhs) = delta_decomposition(family, &x, eps1, eps2)?;
                report.record(
                    (lhs - rhs).abs(),
                    tol,
                    || {
                        format!(
                            "decomposition d={dim} family={} trial={trial} eps1={eps1} \
                             eps2={eps2} x={:?}",
                            family.label(),
                            x.values()
                        )
                    },
                    0.0,
                );
            }
        }
    }
    Ok(report)
}

fn run_counterexample(config: &SuiteConfig) -> Result<TrialReport, OracleError> {
    let mut report = TrialReport::new(Suite::Counterexample.name());
    let eps = 0.05;
    let rho = Spectrum::new(&[0.1, 0.2, 0.2, 0.5])?;
    let sigma = Spectrum::new(&[0.1, 0.15, 0.25, 0.5])?;
    let tol = config.tol(1e-12);

    // The pair is comparable and not a relabelling.
    let ordered = majorizes(&sigma, &rho)?.left_majorizes() && !rho.approx_eq(&sigma);
    report.record(
        if ordered { 0.0 } else { 1.0 },
        0.5,
        || "counterexample ordering rho ≺ sigma".to_string(),
        0.0,
    );

    // Von Neumann: the gaps coincide although the states do not.
    let vn = EntropyFamily::von_neumann();
    let d_rho = delta_eps(&vn, &rho, eps)?.value;
    let d_sigma = delta_eps(&vn, &sigma, eps)?.value;
    report.record(
        (d_rho - d_sigma).abs(),
        tol,
        || format!("counterexample von_neumann eps={eps}"),
        0.0,
    );

    // Renyi alpha = 2: the same pair splits, so Δ_ε is not Schur convex.
    let renyi2 = EntropyFamily::renyi(2.0)?;
    let g_rho = delta_eps(&renyi2, &rho, eps)?.value;
    let g_sigma = delta_eps(&renyi2, &sigma, eps)?.value;
    report.record(
        1e-6 - (g_rho - g_sigma),
        0.0,
        || format!("counterexample renyi(2) eps={eps}: gap {}", g_rho - g_sigma),
        0.0,
    );
    Ok(report)
}

fn run_tightness(config: &SuiteConfig) -> Result<TrialReport, OracleError> {
    let mut report = TrialReport::new(Suite::Tightness.name());
    let dims = config.dims(&[2, 3, 4, 5, 6, 7, 8]);
    let tol = config.tol(1e-10);
    let families = config.families(eligible_builtins);

    for &dim in &dims {
        let eps_values = [0.05, 0.3, 1.0 - 1.0 / dim as f64, 0.95];
        for &eps in &eps_values {
            for family in &families {
                let pure = Spectrum::pure(dim);
                let report_bound = uniform_bound(family, dim, eps)?;
                let witness = report_bound
                    .tight_witness
                    .clone()
                    .expect("bound always carries a witness");

                let gap = bound_gap(family, &pure, &witness, eps)?;
                let label = family.label();
                report.record(
                    (gap.lhs - gap.rhs).abs(),
                    tol,
                    || format!("tightness d={dim} eps={eps} family={label}: lhs != rhs"),
                    0.0,
                );
                report.record(
                    if gap.tight { 0.0 } else { 1.0 },
                    0.5,
                    || format!("tightness d={dim} eps={eps} family={label}: not flagged tight"),
                    0.0,
                );

                // Move 1e-3 of mass from the second entry to the first: the
                // perturbed state stays in the ball, equality must break.
                let mut perturbed = witness.values().to_vec();
                perturbed[0] += 1e-3;
                perturbed[1] -= 1e-3;
                let perturbed = Spectrum::new(&perturbed)?;
                let off = bound_gap(family, &pure, &perturbed, eps)?;
                report.record(
                    if off.tight { 1.0 } else { 0.0 },
                    0.5,
                    || format!("tightness d={dim} eps={eps} family={label}: perturbed still tight"),
                    0.0,
                );
                report.record(
                    off.lhs - off.rhs,
                    -f64::EPSILON,
                    || {
                        format!(
                            "tightness d={dim} eps={eps} family={label}: perturbed lhs {} \
                             not below rhs {}",
                            off.lhs, off.rhs
                        )
                    },
                    0.0,
                );
            }
        }
    }
    Ok(report)
}

fn run_slope(config: &SuiteConfig) -> Result<TrialReport, OracleError> {
    let mut report = TrialReport::new(Suite::Slope.name());
    let trials = config.trials(10_000);
    let tol = config.tol(1e-12);
    let seed = config.seed();
    let families = config.families(eligible_builtins);

    let mut counter = 0u64;
    for family in &families {
        for trial in 0..trials {
            counter += 1;
            let mut rng = seed.trial(counter).rng();
            let mut draw = || rng.gen_range(1e-3..1.0 - 1e-3f64);
            let (a, b): (f64, f64) = (draw(), draw());
            let (c, e): (f64, f64) = (draw(), draw());
            let (x1, y1) = (a.min(b), a.max(b));
            let (x2, y2) = (c.min(e), c.max(e));
            if (x1 - x2).abs() < 1e-9 || (y1 - y2).abs() < 1e-9 {
                continue;
            }
            let s_x = slope(|v| family.phi(v), x1, x2)?;
            let s_y = slope(|v| family.phi(v), y1, y2)?;
            report.record(
                s_y - s_x,
                tol,
                || {
                    format!(
                        "slope family={} trial={trial} x=({x1}, {x2}) y=({y1}, {y2})",
                        family.label()
                    )
                },
                0.0,
            );
        }
    }
    Ok(report)
}

fn run_limit_alpha(config: &SuiteConfig) -> Result<TrialReport, OracleError> {
    let mut report = TrialReport::new(Suite::LimitAlpha.name());
    let trials = config.trials(200);
    let dims = config.dims(&[2, 3, 4, 5, 6, 7, 8]);
    let eps_values = config.eps_values(&[0.05, 0.3, 0.95]);
    let tol = config.tol(LIMIT_TOL);
    let seed = config.seed();

    let vn = EntropyFamily::von_neumann();
    let near: Vec<EntropyFamily> = [1.0 - 1e-4, 1.0 + 1e-4]
        .iter()
        .map(|&alpha| EntropyFamily::renyi(alpha).expect("valid"))
        .collect();

    let mut counter = 0u64;
    for &dim in &dims {
        for trial in 0..trials {
            counter += 1;
            let mut rng = seed.trial(counter).rng();
            let x = sample_spectrum(dim, &mut rng);
            for family in &near {
                let gap = (family.evaluate(&x)? - vn.evaluate(&x)?).abs();
                report.record(
                    gap,
                    tol,
                    || {
                        format!(
                            "limit-alpha d={dim} alpha={} trial={trial} x={:?}",
                            family.param().expect("renyi has a parameter"),
                            x.values()
                        )
                    },
                    0.0,
                );
            }
        }
        for &eps in &eps_values {
            for &alpha in &[1.0 - 1e-4, 1.0 + 1e-4] {
                // The closed-form Renyi bound expression admits a two-sided
                // limit; the eligibility-gated bound covers alpha < 1.
                let near_bound = renyi_uniform_bound_formula(alpha, dim, eps)?;
                let af = audenaert_fannes(dim, eps)?;
                report.record(
                    (near_bound - af).abs(),
                    tol,
                    || format!("limit-alpha-bound d={dim} eps={eps} alpha={alpha}"),
                    0.0,
                );
                if alpha < 1.0 {
                    // h = log2(x)/(1-alpha) amplifies rounding by 1e4 here,
                    // so the route comparison gets a matching tolerance.
                    let gated = uniform_bound(&EntropyFamily::renyi(alpha)?, dim, eps)?.bound;
                    report.record(
                        (gated - near_bound).abs(),
                        1e-9,
                        || format!("limit-alpha-gate d={dim} eps={eps} alpha={alpha}"),
                        0.0,
                    );
                }
            }
        }
    }
    Ok(report)
}
