//! Command-line front end.
//!
//! One binary, subcommand per capability: `entropy`, `minimize`, `bound`,
//! `sweep`, `flow`, `delta`, `verify`. States come in as JSON files (see
//! [`crate::statefile`]), CSV goes out with UNIX newlines and dot decimals,
//! and every printed real uses a fixed 15-significant-digit format so output
//! is reproducible byte for byte.
//!
//! Exit codes: 0 success (or suite pass), 1 usage error, 2 validation
//! error, 3 suite failure (violations found).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::bounds::{bound_gap, delta_eps, uniform_bound, BoundBranch, BoundReport, BoundsError};
use crate::entropy::{EntropyError, EntropyFamily};
use crate::minimizer::{delta_pair, delta_step, mmm, MinimizerError, MinimizerResult};
use crate::oracle::{
    run_suite, sample_spectrum, OracleError, RngSeed, Suite, SuiteConfig, TrialReport,
};
use crate::spectrum::{Spectrum, SpectrumError};
use crate::statefile::{ingest, StateFileError};

/// Errors carrying their process exit code.
#[derive(Debug)]
pub enum CliError {
    /// Malformed invocation (missing or inconsistent flags): exit 1.
    Usage(String),
    /// Well-formed invocation over invalid data: exit 2.
    Validation(String),
}

impl CliError {
    #[must_use]
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Validation(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Validation(m) => m,
        }
    }
}

macro_rules! validation_from {
    ($($ty:ty),*) => {
        $(impl From<$ty> for CliError {
            fn from(err: $ty) -> Self {
                CliError::Validation(err.to_string())
            }
        })*
    };
}

validation_from!(
    SpectrumError,
    EntropyError,
    MinimizerError,
    BoundsError,
    StateFileError,
    std::io::Error
);

impl From<OracleError> for CliError {
    fn from(err: OracleError) -> Self {
        match err {
            OracleError::UnknownSuite(_) => CliError::Usage(err.to_string()),
            other => CliError::Validation(other.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "entrobound",
    version,
    about = "Entropies of quantum states, majorization-minimal states in \
             trace-distance balls, and tight continuity bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// State file (JSON with "spectrum" or "matrix").
    #[arg(long, global = true, value_name = "FILE")]
    state: Option<PathBuf>,

    /// Second state file for pairwise commands.
    #[arg(long, global = true, value_name = "FILE")]
    state2: Option<PathBuf>,

    /// Entropy family: von_neumann, renyi, or tsallis.
    #[arg(long, global = true, value_name = "NAME")]
    family: Option<String>,

    /// Family parameter (alpha for renyi, q for tsallis).
    #[arg(long, global = true, value_name = "P")]
    param: Option<f64>,

    /// Hilbert-space dimension for stateless commands.
    #[arg(long, global = true, value_name = "D")]
    dim: Option<usize>,

    /// Ball radius epsilon in (0, 1].
    #[arg(long, global = true, value_name = "E")]
    eps: Option<f64>,

    /// Epsilon grid as start:stop:step.
    #[arg(long = "eps-grid", global = true, value_name = "S:E:T")]
    eps_grid: Option<String>,

    /// Master seed for randomized commands.
    #[arg(long, global = true, value_name = "N")]
    seed: Option<u64>,

    /// Write CSV output to a file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate an (h, phi)-entropy on a state.
    Entropy,
    /// Construct the majorization-minimal state in the eps-ball.
    Minimize,
    /// Evaluate the tight uniform continuity bound (and local/pairwise data).
    Bound,
    /// Emit a CSV sweep of the bound (and sampled local gaps) over eps.
    Sweep {
        /// Number of random states contributing local-gap rows.
        #[arg(long = "random-states", default_value_t = 0, value_name = "N")]
        random_states: usize,
    },
    /// Emit a CSV of the minimizer spectrum as a function of eps.
    Flow,
    /// Print the delta step of a state (or of a pair).
    Delta,
    /// Run a randomized verification suite.
    Verify {
        /// One of: schur_convexity, semigroup, decomposition,
        /// counterexample, tightness, slope, limit_alpha.
        suite: String,
        /// Trials per parameter combination.
        #[arg(long, value_name = "N")]
        trials: Option<usize>,
        /// Violation tolerance override.
        #[arg(long, value_name = "T")]
        tol: Option<f64>,
    },
}

/// Entry point for the binary: parse `std::env::args`, run, return the code.
#[must_use]
pub fn run_from_env() -> i32 {
    run(std::env::args_os())
}

/// Parse and execute an argument vector, printing to stdout/stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            // Clap renders its own help/usage text.
            let _ = err.print();
            return code;
        }
    };
    let mut stdout = std::io::stdout();
    match execute(&cli, &mut stdout) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {}", err.message());
            err.exit_code()
        }
    }
}

fn execute(cli: &Cli, out: &mut impl Write) -> Result<i32, CliError> {
    let text = match &cli.command {
        Command::Entropy => cmd_entropy(cli)?,
        Command::Minimize => cmd_minimize(cli)?,
        Command::Bound => cmd_bound(cli)?,
        Command::Sweep { random_states } => cmd_sweep(cli, *random_states)?,
        Command::Flow => cmd_flow(cli)?,
        Command::Delta => cmd_delta(cli)?,
        Command::Verify { suite, trials, tol } => {
            let (text, code) = cmd_verify(cli, suite, *trials, *tol)?;
            write_output(cli, out, &text)?;
            return Ok(code);
        }
    };
    write_output(cli, out, &text)?;
    Ok(0)
}

fn write_output(cli: &Cli, out: &mut impl Write, text: &str) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => fs::write(path, text).map_err(CliError::from),
        None => out.write_all(text.as_bytes()).map_err(CliError::from),
    }
}

fn require<T>(value: Option<T>, flag: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("missing required flag --{flag}")))
}

fn load_state(cli: &Cli) -> Result<Spectrum, CliError> {
    let path = require(cli.state.as_ref(), "state")?;
    Ok(ingest(path)?)
}

fn load_family(cli: &Cli) -> Result<EntropyFamily, CliError> {
    let name = require(cli.family.as_ref(), "family")?;
    Ok(EntropyFamily::builtin(name, cli.param)?)
}

fn cmd_entropy(cli: &Cli) -> Result<String, CliError> {
    let state = load_state(cli)?;
    let family = load_family(cli)?;
    let value = family.evaluate(&state)?;
    Ok(format!("{}\n", fmt_sig15(value)))
}

fn cmd_minimize(cli: &Cli) -> Result<String, CliError> {
    let state = load_state(cli)?;
    let eps = require(cli.eps, "eps")?;
    let result = mmm(&state, eps)?;
    Ok(render_minimizer(&result))
}

fn render_minimizer(result: &MinimizerResult) -> String {
    let mut text = String::new();
    let _ = writeln!(text, "dim = {}", result.output.dim());
    let _ = writeln!(text, "reached_tau = {}", result.reached_tau);
    let _ = writeln!(text, "m_plus = {}", result.m_plus);
    let _ = writeln!(text, "m_minus = {}", result.m_minus);
    let _ = writeln!(text, "gamma_plus = {}", fmt_sig15(result.gamma_plus));
    let _ = writeln!(text, "gamma_minus = {}", fmt_sig15(result.gamma_minus));
    let _ = writeln!(text, "spectrum = {}", join_values(result.output.values()));
    text
}

fn cmd_bound(cli: &Cli) -> Result<String, CliError> {
    let family = load_family(cli)?;
    let eps = require(cli.eps, "eps")?;
    let state = match &cli.state {
        Some(path) => Some(ingest(path)?),
        None => None,
    };
    let dim = match (&state, cli.dim) {
        (Some(s), _) => s.dim(),
        (None, Some(d)) => d,
        (None, None) => {
            return Err(CliError::Usage(
                "bound needs --dim or --state to fix the dimension".into(),
            ))
        }
    };
    let report = uniform_bound(&family, dim, eps)?;
    let mut text = render_bound(&report);
    if let Some(state) = &state {
        let local = delta_eps(&family, state, eps)?.value;
        let _ = writeln!(text, "local = {}", fmt_sig15(local));
        if let Some(path2) = &cli.state2 {
            let state2 = ingest(path2)?;
            let gap = bound_gap(&family, state, &state2, eps)?;
            let _ = writeln!(text, "lhs = {}", fmt_sig15(gap.lhs));
            let _ = writeln!(text, "rhs = {}", fmt_sig15(gap.rhs));
            let _ = writeln!(text, "tight = {}", gap.tight);
        }
    }
    Ok(text)
}

fn render_bound(report: &BoundReport) -> String {
    let mut text = String::new();
    let _ = writeln!(text, "family = {}", report.family);
    let _ = writeln!(text, "dim = {}", report.dim);
    let _ = writeln!(text, "eps = {}", fmt_sig15(report.eps));
    let branch = match report.branch {
        BoundBranch::SubCritical => "sub_critical",
        BoundBranch::Saturated => "saturated",
    };
    let _ = writeln!(text, "branch = {branch}");
    let _ = writeln!(text, "bound = {}", fmt_sig15(report.bound));
    if let Some(witness) = &report.tight_witness {
        let _ = writeln!(text, "witness = {}", join_values(witness.values()));
    }
    text
}

fn cmd_sweep(cli: &Cli, random_states: usize) -> Result<String, CliError> {
    let family = load_family(cli)?;
    let dim = require(cli.dim, "dim")?;
    let grid = parse_grid(require(cli.eps_grid.as_ref(), "eps-grid")?)?;
    let seed = RngSeed(cli.seed.unwrap_or(42));

    let mut text = String::from("eps,bound,local,family\n");
    let label = family.label();
    let mut previous = f64::NEG_INFINITY;
    let mut bounds = Vec::with_capacity(grid.len());
    for &eps in &grid {
        let bound = uniform_bound(&family, dim, eps)?.bound;
        // Theorem-level property surfaced as an output invariant.
        if bound < previous - 1e-12 {
            return Err(CliError::Validation(format!(
                "bound column not monotone at eps = {eps}"
            )));
        }
        previous = bound;
        bounds.push(bound);
        let _ = writeln!(text, "{},{},,{label}", fmt_sig15(eps), fmt_sig15(bound));
    }
    let mut rng = seed.rng();
    for k in 0..random_states {
        let state = sample_spectrum(dim, &mut rng);
        let slot = k % grid.len();
        let eps = grid[slot];
        let local = delta_eps(&family, &state, eps)?.value;
        let _ = writeln!(
            text,
            "{},{},{},{label}",
            fmt_sig15(eps),
            fmt_sig15(bounds[slot]),
            fmt_sig15(local)
        );
    }
    Ok(text)
}

fn cmd_flow(cli: &Cli) -> Result<String, CliError> {
    let state = load_state(cli)?;
    let grid = parse_grid(require(cli.eps_grid.as_ref(), "eps-grid")?)?;
    let mut text = String::from("eps");
    for i in 1..=state.dim() {
        let _ = write!(text, ",lambda_{i}");
    }
    text.push('\n');
    for &eps in &grid {
        let result = mmm(&state, eps)?;
        let _ = write!(text, "{}", fmt_sig15(eps));
        for v in result.output.values() {
            let _ = write!(text, ",{}", fmt_sig15(*v));
        }
        text.push('\n');
    }
    Ok(text)
}

fn cmd_delta(cli: &Cli) -> Result<String, CliError> {
    let state = load_state(cli)?;
    match &cli.state2 {
        None => {
            let d = delta_step(&state)?;
            Ok(format!("delta = {}\n", fmt_sig15(d.value)))
        }
        Some(path2) => {
            let state2 = ingest(path2)?;
            let left = delta_step(&state)?.value;
            let right = delta_step(&state2)?.value;
            let pair = delta_pair(&state, &state2)?.value;
            Ok(format!(
                "delta_state = {}\ndelta_state2 = {}\ndelta_pair = {}\n",
                fmt_sig15(left),
                fmt_sig15(right),
                fmt_sig15(pair)
            ))
        }
    }
}

fn cmd_verify(
    cli: &Cli,
    suite: &str,
    trials: Option<usize>,
    tol: Option<f64>,
) -> Result<(String, i32), CliError> {
    let suite: Suite = suite.parse()?;
    let families = match &cli.family {
        Some(name) => Some(vec![EntropyFamily::builtin(name, cli.param)?]),
        None => None,
    };
    let config = SuiteConfig {
        trials,
        dims: cli.dim.map(|d| vec![d]),
        eps_values: cli.eps.map(|e| vec![e]),
        families,
        tol,
        seed: cli.seed.map(RngSeed),
    };
    let report = run_suite(suite, &config)?;
    let text = render_report(&report);
    let code = if report.passed() { 0 } else { 3 };
    Ok((text, code))
}

fn render_report(report: &TrialReport) -> String {
    let mut text = String::new();
    let _ = writeln!(text, "suite = {}", report.suite);
    let _ = writeln!(text, "trials = {}", report.trials);
    let _ = writeln!(text, "failures = {}", report.failures.len());
    let _ = writeln!(text, "max_violation = {}", fmt_sig15(report.max_violation));
    for failure in report.failures.iter().take(8) {
        let _ = writeln!(
            text,
            "failure: {} (observed = {}, expected <= {})",
            failure.inputs,
            fmt_sig15(failure.observed),
            fmt_sig15(failure.expected)
        );
    }
    if report.failures.len() > 8 {
        let _ = writeln!(text, "... {} more failures", report.failures.len() - 8);
    }
    let _ = writeln!(text, "{}", if report.passed() { "PASS" } else { "FAIL" });
    text
}

fn join_values(values: &[f64]) -> String {
    values
        .iter()
        .map(|&v| fmt_sig15(v))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parse an epsilon grid `start:stop:step` with 0 < start <= stop <= 1.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>, CliError> {
    let bad = |why: &str| CliError::Usage(format!("bad eps grid '{spec}': {why}"));
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(bad("expected start:stop:step"));
    }
    let parse = |s: &str| s.parse::<f64>().map_err(|_| bad("not a number"));
    let (start, stop, step) = (parse(parts[0])?, parse(parts[1])?, parse(parts[2])?);
    if !(start.is_finite() && stop.is_finite() && step.is_finite()) {
        return Err(bad("not finite"));
    }
    if !(0.0 < start && start <= stop && stop <= 1.0) {
        return Err(bad("need 0 < start <= stop <= 1"));
    }
    if step <= 0.0 {
        return Err(bad("step must be positive"));
    }
    let mut grid = Vec::new();
    let mut k = 0u32;
    loop {
        let eps = start + f64::from(k) * step;
        if eps > stop + 1e-9 * step {
            break;
        }
        grid.push(eps.min(1.0));
        k += 1;
    }
    Ok(grid)
}

/// Fixed 15-significant-digit rendering for reproducible output. Plain
/// decimal inside a wide magnitude window, scientific outside it, trailing
/// zeros trimmed in both.
#[must_use]
pub fn fmt_sig15(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..15).contains(&exp) {
        let decimals = (14 - exp).max(0) as usize;
        trim_decimal(format!("{x:.decimals$}"))
    } else {
        let formatted = format!("{x:.14e}");
        match formatted.split_once('e') {
            Some((mantissa, exponent)) => {
                format!("{}e{exponent}", trim_decimal(mantissa.to_string()))
            }
            None => formatted,
        }
    }
}

fn trim_decimal(mut s: String) -> String {
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    s
}
