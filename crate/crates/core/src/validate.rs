//! Cross-validation battery and golden fixtures.
//!
//! Every closed-form path is checked against an independent oracle route:
//! Kraus completeness, analytic channel formulas against generic Kraus
//! application, the twisting reduction against the exact state-vector
//! simulation, the discord and geometric-discord closed forms against
//! brute-force minimization, and a fixtures file that freezes golden values
//! with 12 significant digits.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::path::Path;

use crate::channels::{
    apply_two_qubit, evolved_at, evolved_state_analytic, kraus_set, ChannelKind, NoiseStrength,
    COMPLETENESS_TOLERANCE,
};
use crate::error::Result;
use crate::oracle::{
    discord_bruteforce, exact_channel_reduced, exact_expectations, exact_reduced_state,
    full_register_channel_reduced, gmqd_bruteforce, GridSpec,
};
use crate::sampling::{random_x_state, SplitMix64};
use crate::sweep::format_float;
use crate::twisting::{expectations, reduced_state, twisted_state, TwistingParams};
use crate::xstate::TwoQubitXState;

/// Outcome of one validation check.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckReport {
    fn new(name: &'static str, passed: bool, detail: String) -> Self {
        Self {
            name,
            passed,
            detail,
        }
    }
}

/// The (N, θ) pairs used by the channel-equivalence check.
fn channel_check_pairs() -> Vec<(u32, f64)> {
    let ns = [2u32, 3, 4, 6, 8, 10, 12, 16, 20, 40];
    let thetas = [0.1 * PI, 0.7 * PI];
    let mut pairs = Vec::with_capacity(20);
    for &n in &ns {
        for &theta in &thetas {
            pairs.push((n, theta));
        }
    }
    pairs
}

fn golden_params() -> TwistingParams {
    TwistingParams::new(12, 0.1 * PI).unwrap()
}

/// Kraus completeness over all channels and a 101-point strength grid.
pub fn check_kraus_completeness() -> CheckReport {
    let mut worst = 0.0f64;
    for kind in ChannelKind::ALL {
        for i in 0..=100 {
            let p = NoiseStrength::new(i as f64 / 100.0).unwrap();
            worst = worst.max(kraus_set(kind, p).completeness_defect());
        }
    }
    CheckReport::new(
        "kraus-completeness",
        worst < COMPLETENESS_TOLERANCE,
        format!("worst defect {worst:.3e} (bound 1e-12)"),
    )
}

/// Analytic evolved-state formulas against generic Kraus application on a
/// 4-channel × 11-strength × 20-(N, θ) grid, entrywise within 1e-11.
pub fn check_analytic_generic_equivalence() -> Result<CheckReport> {
    let mut worst = 0.0f64;
    for kind in ChannelKind::ALL {
        for i in 0..=10 {
            let p = NoiseStrength::new(i as f64 / 10.0).unwrap();
            for &(n, theta) in &channel_check_pairs() {
                let params = TwistingParams::new(n, theta)?;
                let exp = expectations(params);
                let state = twisted_state(params)?;
                let analytic = evolved_state_analytic(kind, &exp, p)?;
                let generic = apply_two_qubit(&kraus_set(kind, p), &state)?;
                let diff = (analytic.to_matrix() - generic.to_matrix())
                    .iter()
                    .map(|z| z.norm())
                    .fold(0.0, f64::max);
                worst = worst.max(diff);
                let trace = generic.d1() + generic.d2() + generic.d3() + generic.d4();
                worst = worst.max((trace - 1.0).abs());
            }
        }
    }
    Ok(CheckReport::new(
        "analytic-generic-equivalence",
        worst < 1e-11,
        format!("worst entrywise difference {worst:.3e} (bound 1e-11)"),
    ))
}

/// Exact state-vector reduction against the closed-form reduced state for
/// N ∈ 2..=12 on a 33-point θ grid, entrywise within 1e-10.
pub fn check_twisting_oracle_equivalence() -> Result<CheckReport> {
    let mut worst = 0.0f64;
    for n in 2..=12 {
        for i in 0..33 {
            let theta = 2.0 * PI * i as f64 / 32.0;
            let params = TwistingParams::new(n, theta)?;
            let exact = exact_reduced_state(params)?;
            let closed = reduced_state(&expectations(params))?;
            let diff = (exact.to_matrix() - closed.to_matrix())
                .iter()
                .map(|z| z.norm())
                .fold(0.0, f64::max);
            worst = worst.max(diff);
        }
    }
    Ok(CheckReport::new(
        "twisting-oracle-equivalence",
        worst < 1e-10,
        format!("worst entrywise difference {worst:.3e} (bound 1e-10)"),
    ))
}

/// Measured expectation values of the exact simulation against the four
/// closed-form components, within 1e-10.
pub fn check_expectation_oracle() -> Result<CheckReport> {
    let mut worst = 0.0f64;
    for n in 2..=12 {
        for i in 0..33 {
            let theta = 2.0 * PI * i as f64 / 32.0;
            let params = TwistingParams::new(n, theta)?;
            let exact = exact_expectations(params)?;
            let closed = expectations(params);
            worst = worst
                .max((exact.sz - closed.sz).abs())
                .max((exact.szz - closed.szz).abs())
                .max((exact.spm - closed.spm).abs())
                .max((exact.smm - closed.smm).norm());
        }
    }
    Ok(CheckReport::new(
        "expectation-oracle",
        worst < 1e-10,
        format!("worst component difference {worst:.3e} (bound 1e-10)"),
    ))
}

/// Evolving the whole register and then tracing against tracing first and
/// evolving the pair, for small registers, within 1e-10.
pub fn check_channel_two_path_consistency() -> Result<CheckReport> {
    let mut worst = 0.0f64;
    for kind in ChannelKind::ALL {
        for &(n, theta, p) in &[(4u32, 0.9, 0.35), (5, 2.1, 0.6), (6, 0.3 * PI, 0.5)] {
            let params = TwistingParams::new(n, theta)?;
            let strength = NoiseStrength::new(p)?;
            let pair_path = exact_channel_reduced(params, kind, strength)?.to_matrix();
            let register_path = full_register_channel_reduced(params, kind, strength)?;
            let diff = (pair_path - register_path)
                .iter()
                .map(|z| z.norm())
                .fold(0.0, f64::max);
            worst = worst.max(diff);
        }
    }
    Ok(CheckReport::new(
        "channel-two-path-consistency",
        worst < 1e-10,
        format!("worst entrywise difference {worst:.3e} (bound 1e-10)"),
    ))
}

/// The population every brute-force band check runs over: the twisting
/// family grid plus 10³ random X states.
fn bruteforce_population() -> Result<Vec<TwoQubitXState>> {
    let mut states = Vec::new();
    for n in 2..=12 {
        for i in 0..33 {
            let theta = 2.0 * PI * i as f64 / 32.0;
            states.push(twisted_state(TwistingParams::new(n, theta)?)?);
        }
    }
    let mut rng = SplitMix64::new(0x9d1ce);
    for _ in 0..1000 {
        states.push(random_x_state(&mut rng));
    }
    Ok(states)
}

/// Closed-form discord against the projective brute force on the standard
/// population: the brute force may exceed the closed form by at most 1e-6
/// (grid slack) and undershoot it by at most 3e-3 (the known closed-form
/// gap).
pub fn check_discord_band(grid: &GridSpec) -> Result<CheckReport> {
    use rayon::prelude::*;
    let states = bruteforce_population()?;
    let (mut worst_over, mut worst_under) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    let diffs: Vec<(f64, f64)> = states
        .par_iter()
        .map(|state| {
            let closed = state.quantum_discord().qd;
            let brute = discord_bruteforce(state, grid);
            (brute - closed, closed - brute)
        })
        .collect();
    for (over, under) in diffs {
        worst_over = worst_over.max(over);
        worst_under = worst_under.max(under);
    }
    Ok(CheckReport::new(
        "discord-bruteforce-band",
        worst_over <= 1e-6 && worst_under <= 3e-3,
        format!(
            "max(brute−closed) {worst_over:.3e} (bound 1e-6), \
             max(closed−brute) {worst_under:.3e} (bound 3e-3), {} states",
            states.len()
        ),
    ))
}

/// Closed-form geometric discord against the Hilbert-Schmidt brute force on
/// the standard population, within 1e-6.
pub fn check_gmqd_agreement(grid: &GridSpec) -> Result<CheckReport> {
    use rayon::prelude::*;
    let states = bruteforce_population()?;
    let worst = states
        .par_iter()
        .map(|state| (gmqd_bruteforce(state, grid) - state.gmqd(false)).abs())
        .reduce(|| 0.0, f64::max);
    Ok(CheckReport::new(
        "gmqd-bruteforce-agreement",
        worst < 1e-6,
        format!("worst |brute − closed| {worst:.3e} (bound 1e-6), {} states", states.len()),
    ))
}

/// Compute the golden fixture records, in file order.
pub fn compute_fixtures(grid: &GridSpec) -> Result<Vec<(String, String)>> {
    let params = golden_params();
    let tag = "n=12,theta=0.1pi";
    let mut fx: Vec<(String, String)> = Vec::new();
    let mut push = |key: String, value: f64| {
        fx.push((key, format_float(value)));
    };

    let exp = exact_expectations(params)?;
    push(format!("twisting.expectations.{tag}.sz"), exp.sz);
    push(format!("twisting.expectations.{tag}.szz"), exp.szz);
    push(format!("twisting.expectations.{tag}.spm"), exp.spm);
    push(format!("twisting.expectations.{tag}.smm_re"), exp.smm.re);
    push(format!("twisting.expectations.{tag}.smm_im"), exp.smm.im);

    let golden = exact_reduced_state(params)?;
    push(format!("oracle.exact_reduced_state.{tag}.d1"), golden.d1());
    push(format!("oracle.exact_reduced_state.{tag}.d2"), golden.d2());
    push(format!("oracle.exact_reduced_state.{tag}.d3"), golden.d3());
    push(format!("oracle.exact_reduced_state.{tag}.d4"), golden.d4());
    push(format!("oracle.exact_reduced_state.{tag}.a_re"), golden.a().re);
    push(format!("oracle.exact_reduced_state.{tag}.a_im"), golden.a().im);
    push(format!("oracle.exact_reduced_state.{tag}.b_re"), golden.b().re);
    push(format!("oracle.exact_reduced_state.{tag}.b_im"), golden.b().im);

    let report = twisted_state(params)?.quantum_discord();
    push(format!("xstate.quantum_discord.{tag}.qd"), report.qd);
    push(format!("xstate.quantum_discord.{tag}.q1"), report.q1);
    push(format!("xstate.quantum_discord.{tag}.q2"), report.q2);
    push(format!("xstate.quantum_discord.{tag}.classical"), report.classical);
    push(
        format!("xstate.quantum_discord.{tag}.mutual_info"),
        report.mutual_info,
    );
    push(
        format!("xstate.gmqd.{tag}.normalized"),
        report.gmqd_normalized,
    );

    let state = twisted_state(params)?;
    push(
        format!("oracle.discord_bruteforce.{tag}"),
        discord_bruteforce(&state, grid),
    );
    push(
        format!("oracle.gmqd_bruteforce.{tag}"),
        gmqd_bruteforce(&state, grid),
    );

    // Measured Figure-1 trends at gamma_t = 0 (noiseless N dependence).
    let qd_at = |n: u32| -> Result<f64> {
        Ok(twisted_state(TwistingParams::new(n, 0.1 * PI)?)?
            .quantum_discord()
            .qd)
    };
    let qd30 = qd_at(30)?;
    let qd40 = qd_at(40)?;
    push("trend.qd_vs_n.theta=0.1pi.n30".into(), qd30);
    push("trend.qd_vs_n.theta=0.1pi.n40".into(), qd40);
    push("trend.qd_vs_n.theta=0.1pi.gap_n30_n40".into(), qd40 - qd30);

    // Measured phase-flip revival shortfall at the end of the default grid.
    let exp12 = expectations(params);
    let qd0 = twisted_state(params)?.quantum_discord().qd;
    let qd5 = evolved_at(ChannelKind::PhaseFlip, &exp12, 5.0)?
        .quantum_discord()
        .qd;
    push(
        format!("trend.phase_flip_revival.{tag}.gap_at_gamma_t_5"),
        (qd0 - qd5).abs(),
    );

    // Minimum of qd − gmqd_normalized for the depolarizing channel on the
    // Figure-3 grid; negative when the ordering inverts.
    let mut min_gap = f64::INFINITY;
    let mut min_gap_at = 0.0;
    for i in 0..100 {
        let gamma_t = 5.0 * i as f64 / 99.0;
        let r = evolved_at(ChannelKind::Depolarizing, &exp12, gamma_t)?.quantum_discord();
        let gap = r.qd - r.gmqd_normalized;
        if gap < min_gap {
            min_gap = gap;
            min_gap_at = gamma_t;
        }
    }
    push(
        format!("trend.figure3.depolarizing.{tag}.min_ordering_gap"),
        min_gap,
    );
    push(
        format!("trend.figure3.depolarizing.{tag}.min_gap_gamma_t"),
        min_gap_at,
    );

    Ok(fx)
}

/// Serialize fixtures as `key value` lines.
pub fn render_fixtures(fixtures: &[(String, String)]) -> String {
    let mut out = String::new();
    for (key, value) in fixtures {
        let _ = writeln!(out, "{key} {value}");
    }
    out
}

/// Write the fixtures file.
pub fn write_fixtures(path: &Path, grid: &GridSpec) -> Result<std::io::Result<()>> {
    let fixtures = compute_fixtures(grid)?;
    Ok(std::fs::write(path, render_fixtures(&fixtures)))
}

/// Recompute all fixtures and compare them byte-for-byte against the file.
pub fn check_fixtures(path: &Path, grid: &GridSpec) -> Result<CheckReport> {
    let expected = compute_fixtures(grid)?;
    let text = match std::fs::read_to_string(path) {
        Ok(text) => text,
        Err(err) => {
            return Ok(CheckReport::new(
                "fixtures-match",
                false,
                format!("cannot read {}: {err}", path.display()),
            ))
        }
    };
    let mut stored = std::collections::BTreeMap::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some((key, value)) = line.split_once(' ') {
            stored.insert(key.to_string(), value.trim().to_string());
        }
    }

    let mut failures = Vec::new();
    for (key, value) in &expected {
        match stored.remove(key) {
            None => failures.push(format!("missing key {key}")),
            Some(found) if &found != value => {
                failures.push(format!("{key}: file has {found}, recomputed {value}"))
            }
            Some(_) => {}
        }
    }
    for key in stored.keys() {
        failures.push(format!("unexpected key {key}"));
    }

    Ok(if failures.is_empty() {
        CheckReport::new(
            "fixtures-match",
            true,
            format!("{} records verified", expected.len()),
        )
    } else {
        CheckReport::new("fixtures-match", false, failures.join("; "))
    })
}

/// Run the whole battery. The fixtures check is included when a path is
/// given.
pub fn run_all(fixtures: Option<&Path>, grid: &GridSpec) -> Result<Vec<CheckReport>> {
    let mut reports = vec![
        check_kraus_completeness(),
        check_analytic_generic_equivalence()?,
        check_twisting_oracle_equivalence()?,
        check_expectation_oracle()?,
        check_channel_two_path_consistency()?,
        check_discord_band(grid)?,
        check_gmqd_agreement(grid)?,
    ];
    if let Some(path) = fixtures {
        reports.push(check_fixtures(path, grid)?);
    }
    Ok(reports)
}
