//! Acceptance suite: one test per criterion, each printing one PASS/FAIL
//! line per check (run with `--nocapture` to see them on success).
//!
//! Criteria 5, 6 and 7 contain trend sub-checks whose tolerances this model
//! family does not actually meet (a dip of the N-trend at N = 3, a slow
//! large-N approach, an incomplete phase-flip revival at the end of the
//! default grid, and a genuine theta-asymmetry of amplitude damping). They
//! are asserted at their stated bounds and fail with the measured values
//! rather than being loosened; the measured profiles are also frozen in the
//! fixtures file.

use std::f64::consts::PI;
use std::process::Command;
use std::time::Instant;

use qdiscord::channels::{
    apply_two_qubit, evolved_at, evolved_state_analytic, kraus_set, strength_at, ChannelKind,
    NoiseStrength,
};
use qdiscord::oracle::{discord_bruteforce, exact_reduced_state, gmqd_bruteforce, GridSpec};
use qdiscord::sampling::{random_x_state, SplitMix64};
use qdiscord::sweep::{run_sweep, write_csv, SweepSpec};
use qdiscord::twisting::{expectations, reduced_state, twisted_state, TwistingParams};
use qdiscord::TwoQubitXState;

struct Outcome {
    failures: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Self {
            failures: Vec::new(),
        }
    }

    fn check(&mut self, label: &str, passed: bool, detail: String) {
        let verdict = if passed { "PASS" } else { "FAIL" };
        println!("{verdict} {label} — {detail}");
        if !passed {
            self.failures.push(format!("{label}: {detail}"));
        }
    }

    fn finish(self, criterion: &str) {
        assert!(
            self.failures.is_empty(),
            "{criterion} failed:\n  {}",
            self.failures.join("\n  ")
        );
    }
}

fn params(n: u32, theta: f64) -> TwistingParams {
    TwistingParams::new(n, theta).unwrap()
}

fn entry_diff(a: &TwoQubitXState, b: &TwoQubitXState) -> f64 {
    (a.to_matrix() - b.to_matrix())
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max)
}

fn bruteforce_population() -> Vec<TwoQubitXState> {
    let mut states = Vec::new();
    for n in 2..=12 {
        for i in 0..33 {
            let theta = 2.0 * PI * i as f64 / 32.0;
            states.push(twisted_state(params(n, theta)).unwrap());
        }
    }
    let mut rng = SplitMix64::new(0x9d1ce);
    for _ in 0..1000 {
        states.push(random_x_state(&mut rng));
    }
    states
}

/// Criterion 1: analytic evolved states equal generic Kraus application,
/// entrywise within 1e-11, over 4 channels x 11 strengths x 20 (N, theta)
/// pairs, in under 5 s.
#[test]
fn criterion_01_analytic_generic_channel_equivalence() {
    let start = Instant::now();
    let mut worst = 0.0f64;
    let ns = [2u32, 3, 4, 6, 8, 10, 12, 16, 20, 40];
    let thetas = [0.1 * PI, 0.7 * PI];
    for kind in ChannelKind::ALL {
        for i in 0..=10 {
            let p = NoiseStrength::new(i as f64 / 10.0).unwrap();
            for &n in &ns {
                for &theta in &thetas {
                    let exp = expectations(params(n, theta));
                    let state = twisted_state(params(n, theta)).unwrap();
                    let analytic = evolved_state_analytic(kind, &exp, p).unwrap();
                    let generic = apply_two_qubit(&kraus_set(kind, p), &state).unwrap();
                    worst = worst.max(entry_diff(&analytic, &generic));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let mut outcome = Outcome::new();
    outcome.check(
        "criterion 1 (analytic vs generic channels)",
        worst < 1e-11,
        format!("worst entrywise difference {worst:.3e}, bound 1e-11"),
    );
    outcome.check(
        "criterion 1 runtime",
        elapsed.as_secs_f64() < 5.0,
        format!("{elapsed:.2?} (budget 5 s)"),
    );
    outcome.finish("criterion 1");
}

/// Criterion 2: exact state-vector reduction equals the closed-form reduced
/// state within 1e-10 for N in 2..=12 on a 33-point theta grid, under 30 s.
#[test]
fn criterion_02_twisting_oracle_equivalence() {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for n in 2..=12 {
        for i in 0..33 {
            let theta = 2.0 * PI * i as f64 / 32.0;
            let exact = exact_reduced_state(params(n, theta)).unwrap();
            let closed = reduced_state(&expectations(params(n, theta))).unwrap();
            worst = worst.max(entry_diff(&exact, &closed));
        }
    }
    let elapsed = start.elapsed();
    let mut outcome = Outcome::new();
    outcome.check(
        "criterion 2 (exact vs closed-form reduction)",
        worst < 1e-10,
        format!("worst entrywise difference {worst:.3e}, bound 1e-10"),
    );
    outcome.check(
        "criterion 2 runtime",
        elapsed.as_secs_f64() < 30.0,
        format!("{elapsed:.2?} (budget 30 s)"),
    );
    outcome.finish("criterion 2");
}

/// Criterion 3: discord brute force within [-3e-3, +1e-6] of the closed form
/// on the twisting grid plus 10^3 random X states, under 2 min.
#[test]
fn criterion_03_discord_closed_form_vs_bruteforce() {
    use rayon::prelude::*;
    let start = Instant::now();
    let grid = GridSpec::default();
    let states = bruteforce_population();
    let diffs: Vec<(f64, f64)> = states
        .par_iter()
        .map(|state| {
            let closed = state.quantum_discord().qd;
            let brute = discord_bruteforce(state, &grid);
            (brute - closed, closed - brute)
        })
        .collect();
    let worst_over = diffs.iter().map(|d| d.0).fold(f64::NEG_INFINITY, f64::max);
    let worst_under = diffs.iter().map(|d| d.1).fold(f64::NEG_INFINITY, f64::max);
    let elapsed = start.elapsed();

    let mut outcome = Outcome::new();
    outcome.check(
        "criterion 3 (brute force never exceeds closed form)",
        worst_over <= 1e-6,
        format!(
            "max(brute − closed) {worst_over:.3e}, bound 1e-6, {} states",
            states.len()
        ),
    );
    outcome.check(
        "criterion 3 (closed form within the known gap)",
        worst_under <= 3e-3,
        format!("max(closed − brute) {worst_under:.3e}, bound 3e-3"),
    );
    outcome.check(
        "criterion 3 runtime",
        elapsed.as_secs_f64() < 120.0,
        format!("{elapsed:.2?} (budget 2 min)"),
    );
    outcome.finish("criterion 3");
}

/// Criterion 4: geometric-discord brute force agrees with the closed form
/// within 1e-6 on the same populations, under 1 min.
#[test]
fn criterion_04_gmqd_closed_form_vs_bruteforce() {
    use rayon::prelude::*;
    let start = Instant::now();
    let grid = GridSpec::default();
    let states = bruteforce_population();
    let worst = states
        .par_iter()
        .map(|state| (gmqd_bruteforce(state, &grid) - state.gmqd(false)).abs())
        .reduce(|| 0.0, f64::max);
    let elapsed = start.elapsed();

    let mut outcome = Outcome::new();
    outcome.check(
        "criterion 4 (gmqd brute force vs closed form)",
        worst < 1e-6,
        format!("worst |difference| {worst:.3e}, bound 1e-6, {} states", states.len()),
    );
    outcome.check(
        "criterion 4 runtime",
        elapsed.as_secs_f64() < 60.0,
        format!("{elapsed:.2?} (budget 1 min)"),
    );
    outcome.finish("criterion 4");
}

/// Criterion 5: phase-flip discord dies at gamma_t = ln 2 and revives to
/// within 1e-3 of its initial value by gamma_t = 5; the other channels decay
/// monotonically (1e-9 slack per step).
#[test]
fn criterion_05_figure1_decay_and_revival_trends() {
    let p = params(12, 0.1 * PI);
    let exp = expectations(p);
    let qd_at = |kind: ChannelKind, gamma_t: f64| -> f64 {
        evolved_at(kind, &exp, gamma_t).unwrap().quantum_discord().qd
    };

    let mut outcome = Outcome::new();

    let qd_ln2 = qd_at(ChannelKind::PhaseFlip, std::f64::consts::LN_2);
    outcome.check(
        "criterion 5 (phase-flip zero crossing at ln 2)",
        qd_ln2 < 1e-6,
        format!("qd(ln 2) = {qd_ln2:.3e}, bound 1e-6"),
    );

    let qd0 = twisted_state(p).unwrap().quantum_discord().qd;
    let qd5 = qd_at(ChannelKind::PhaseFlip, 5.0);
    let revival_gap = (qd0 - qd5).abs();
    outcome.check(
        "criterion 5 (phase-flip revival by gamma_t = 5)",
        revival_gap <= 1e-3,
        format!(
            "|qd(5) − qd(0)| = {revival_gap:.4e}, bound 1e-3 \
             (qd(0) = {qd0:.6}, qd(5) = {qd5:.6}; the coherence scale at \
             gamma_t = 5 is (1−2e⁻⁵)² ≈ 0.9732, which leaves qd 8.5e-3 short — \
             the bound is first met near gamma_t ≈ 7.5)"
        ),
    );

    for kind in [
        ChannelKind::AmplitudeDamping,
        ChannelKind::PhaseDamping,
        ChannelKind::Depolarizing,
    ] {
        let values: Vec<f64> = (0..100)
            .map(|i| qd_at(kind, 5.0 * i as f64 / 99.0))
            .collect();
        let worst_rise = values
            .windows(2)
            .map(|w| w[1] - w[0])
            .fold(f64::NEG_INFINITY, f64::max);
        outcome.check(
            &format!("criterion 5 ({kind} decays monotonically)"),
            worst_rise <= 1e-9,
            format!("largest per-step rise {worst_rise:.3e}, slack 1e-9"),
        );
    }

    outcome.finish("criterion 5");
}

/// Criterion 6: at theta = 0.1 pi and gamma_t = 0, qd(N) is non-decreasing
/// from N = 2 up to its plateau and changes by < 1e-3 between N = 30 and
/// N = 40.
#[test]
fn criterion_06_figure1_particle_number_trend() {
    let qd_at = |n: u32| -> f64 {
        twisted_state(params(n, 0.1 * PI))
            .unwrap()
            .quantum_discord()
            .qd
    };
    let profile: Vec<(u32, f64)> = (2..=40).map(|n| (n, qd_at(n))).collect();

    let mut dips = Vec::new();
    for w in profile.windows(2) {
        if w[1].1 < w[0].1 - 1e-12 {
            dips.push(format!(
                "qd({}) = {:.6} > qd({}) = {:.6}",
                w[0].0, w[0].1, w[1].0, w[1].1
            ));
        }
    }
    let qd30 = qd_at(30);
    let qd40 = qd_at(40);
    let plateau_gap = (qd40 - qd30).abs();

    let mut outcome = Outcome::new();
    outcome.check(
        "criterion 6 (qd non-decreasing in N from 2)",
        dips.is_empty(),
        if dips.is_empty() {
            "no dips over N = 2..=40".to_string()
        } else {
            format!("monotonicity breaks: {}", dips.join("; "))
        },
    );
    outcome.check(
        "criterion 6 (plateau between N = 30 and N = 40)",
        plateau_gap < 1e-3,
        format!(
            "|qd(40) − qd(30)| = {plateau_gap:.4e}, bound 1e-3 \
             (qd(30) = {qd30:.6}, qd(40) = {qd40:.6}; the approach rate \
             cos(theta/2)^N ≈ e^(−0.0124 N) puts a 1e-3 plateau near N ≈ 450)"
        ),
    );
    outcome.finish("criterion 6");
}

/// Criterion 7: for N = 12, all channels and all gamma_t grid points,
/// qd(theta) = qd(2 pi − theta) and qd(theta) = qd(theta + 2 pi) within 1e-9.
#[test]
fn criterion_07_figure2_theta_symmetry() {
    let exp_at = |theta: f64| expectations(params(12, theta));
    let mut outcome = Outcome::new();
    for kind in ChannelKind::ALL {
        let mut worst = 0.0f64;
        for g in 0..41 {
            let gamma_t = 5.0 * g as f64 / 40.0;
            for i in 0..100 {
                let theta = 2.0 * PI * i as f64 / 99.0;
                let qd = |t: f64| -> f64 {
                    evolved_at(kind, &exp_at(t), gamma_t)
                        .unwrap()
                        .quantum_discord()
                        .qd
                };
                let base = qd(theta);
                worst = worst
                    .max((base - qd(2.0 * PI - theta)).abs())
                    .max((base - qd(theta + 2.0 * PI)).abs());
            }
        }
        outcome.check(
            &format!("criterion 7 ({kind} theta symmetry)"),
            worst < 1e-9,
            format!("worst |qd(theta) − qd(mirror)| = {worst:.3e}, bound 1e-9"),
        );
    }
    outcome.finish("criterion 7");
}

/// Criterion 8: for theta = 0.1 pi, N = 12, qd dominates the normalized
/// geometric discord for phase flip, amplitude damping and phase damping at
/// every grid point, while depolarizing shows at least one ordering
/// violation or a gap below 0.01.
#[test]
fn criterion_08_figure3_qd_vs_gmqd_ordering() {
    let exp = expectations(params(12, 0.1 * PI));
    let gaps = |kind: ChannelKind| -> Vec<f64> {
        (0..100)
            .map(|i| {
                let report = evolved_at(kind, &exp, 5.0 * i as f64 / 99.0)
                    .unwrap()
                    .quantum_discord();
                report.qd - report.gmqd_normalized
            })
            .collect()
    };

    let mut outcome = Outcome::new();
    for kind in [
        ChannelKind::PhaseFlip,
        ChannelKind::AmplitudeDamping,
        ChannelKind::PhaseDamping,
    ] {
        let min_gap = gaps(kind).into_iter().fold(f64::INFINITY, f64::min);
        outcome.check(
            &format!("criterion 8 (qd ≥ gmqd for {kind})"),
            min_gap >= -1e-9,
            format!("min(qd − gmqd_normalized) = {min_gap:.3e}, slack 1e-9"),
        );
    }
    let dep_gaps = gaps(ChannelKind::Depolarizing);
    let min_gap = dep_gaps.iter().copied().fold(f64::INFINITY, f64::min);
    let exception = dep_gaps.iter().any(|&g| g < -1e-9 || g < 0.01);
    outcome.check(
        "criterion 8 (depolarizing exception manifests)",
        exception,
        format!("min(qd − gmqd_normalized) = {min_gap:.3e} (ordering inverts below 0)"),
    );
    outcome.finish("criterion 8");
}

/// Criterion 9: Kraus completeness within 1e-12 for all channels and 101
/// strengths, in under 1 s.
#[test]
fn criterion_09_kraus_completeness() {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for kind in ChannelKind::ALL {
        for i in 0..=100 {
            let p = NoiseStrength::new(i as f64 / 100.0).unwrap();
            worst = worst.max(kraus_set(kind, p).completeness_defect());
        }
    }
    let elapsed = start.elapsed();
    let mut outcome = Outcome::new();
    outcome.check(
        "criterion 9 (Kraus completeness)",
        worst < 1e-12,
        format!("worst defect {worst:.3e}, bound 1e-12"),
    );
    outcome.check(
        "criterion 9 runtime",
        elapsed.as_secs_f64() < 1.0,
        format!("{elapsed:.2?} (budget 1 s)"),
    );
    outcome.finish("criterion 9");
}

/// Criterion 10: the Figure-1 sweep is byte-deterministic through the CLI,
/// fixture regeneration is idempotent, and the three figure sweeps complete
/// inside the wall-clock budget.
#[test]
fn criterion_10_determinism() {
    let mut outcome = Outcome::new();
    let dir = std::env::temp_dir().join(format!("qdiscord-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();

    let csv_a = dir.join("fig1_a.csv");
    let csv_b = dir.join("fig1_b.csv");
    for out in [&csv_a, &csv_b] {
        let status = Command::new(env!("CARGO_BIN_EXE_qdiscord"))
            .args(["sweep", "--out"])
            .arg(out)
            .status()
            .expect("run qdiscord sweep");
        assert!(status.success(), "sweep exited with {status}");
    }
    let bytes_a = std::fs::read(&csv_a).unwrap();
    let bytes_b = std::fs::read(&csv_b).unwrap();
    outcome.check(
        "criterion 10 (figure-1 sweep is byte-identical)",
        bytes_a == bytes_b,
        format!("{} bytes per run", bytes_a.len()),
    );

    let fixtures_a = dir.join("golden_a.txt");
    let fixtures_b = dir.join("golden_b.txt");
    for path in [&fixtures_a, &fixtures_b] {
        let status = Command::new(env!("CARGO_BIN_EXE_qdiscord"))
            .args(["validate", "--regenerate", "--fixtures"])
            .arg(path)
            .status()
            .expect("run qdiscord validate --regenerate");
        assert!(status.success(), "validate --regenerate exited with {status}");
    }
    let fx_a = std::fs::read(&fixtures_a).unwrap();
    let fx_b = std::fs::read(&fixtures_b).unwrap();
    outcome.check(
        "criterion 10 (fixture regeneration is idempotent)",
        fx_a == fx_b,
        format!("{} bytes per regeneration", fx_a.len()),
    );
    let committed = std::fs::read(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/golden.txt"))
        .expect("committed fixtures present");
    outcome.check(
        "criterion 10 (committed fixtures are current)",
        fx_a == committed,
        "regenerated bytes equal crates/core/fixtures/golden.txt".to_string(),
    );

    let start = Instant::now();
    for spec in [SweepSpec::figure1(), SweepSpec::figure2(), SweepSpec::figure3()] {
        let rows = run_sweep(&spec).unwrap();
        let mut sink = Vec::new();
        write_csv(&mut sink, &rows).unwrap();
        assert!(!sink.is_empty());
    }
    let elapsed = start.elapsed();
    outcome.check(
        "criterion 10 (three figure sweeps inside budget)",
        elapsed.as_secs_f64() < 60.0,
        format!("{elapsed:.2?} (budget 60 s)"),
    );

    std::fs::remove_dir_all(&dir).ok();
    outcome.finish("criterion 10");
}

/// Cross-check of the evolved-channel path against the heavier exact
/// machinery at one representative amplitude-damping point, plus the
/// noiselessness of every channel at gamma_t = 0.
#[test]
fn exact_channel_point_check() {
    let p = NoiseStrength::new(0.7).unwrap();
    let exact = qdiscord::oracle::exact_channel_reduced(
        params(12, 0.1 * PI),
        ChannelKind::AmplitudeDamping,
        p,
    )
    .unwrap();
    let analytic = evolved_state_analytic(
        ChannelKind::AmplitudeDamping,
        &expectations(params(12, 0.1 * PI)),
        p,
    )
    .unwrap();
    assert!(entry_diff(&exact, &analytic) < 1e-10);
    // strength_at maps gamma_t = 0 to the identity for every channel.
    for kind in ChannelKind::ALL {
        let s = strength_at(kind, 0.0).unwrap();
        let evolved = evolved_state_analytic(kind, &expectations(params(12, 0.1 * PI)), s).unwrap();
        let base = twisted_state(params(12, 0.1 * PI)).unwrap();
        assert!(entry_diff(&evolved, &base) < 1e-14, "{kind}");
    }
}
