//! Parameter sweeps over (channel, N, θ, γt) and their CSV serialization.

use rayon::prelude::*;
use std::io::Write;

use crate::channels::{evolved_at, p_of_t, ChannelKind};
use crate::error::{Error, Result};
use crate::twisting::{expectations, TwistingParams, MAX_PARTICLES};

/// Fixed CSV header; column order matches [`SweepRow`].
pub const CSV_HEADER: &str = "channel,n,theta,gamma_t,p,qd,gmqd_normalized,classical,mutual_info";

/// A correlation measure selectable for plotting.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Measure {
    Qd,
    GmqdNormalized,
    Classical,
    MutualInfo,
}

impl Measure {
    pub const ALL: [Measure; 4] = [
        Measure::Qd,
        Measure::GmqdNormalized,
        Measure::Classical,
        Measure::MutualInfo,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Measure::Qd => "qd",
            Measure::GmqdNormalized => "gmqd_normalized",
            Measure::Classical => "classical",
            Measure::MutualInfo => "mutual_info",
        }
    }

    pub fn of_row(self, row: &SweepRow) -> f64 {
        match self {
            Measure::Qd => row.qd,
            Measure::GmqdNormalized => row.gmqd_normalized,
            Measure::Classical => row.classical,
            Measure::MutualInfo => row.mutual_info,
        }
    }
}

impl std::str::FromStr for Measure {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "qd" => Ok(Measure::Qd),
            "gmqd" | "gmqd_normalized" => Ok(Measure::GmqdNormalized),
            "classical" => Ok(Measure::Classical),
            "mutual_info" | "mi" => Ok(Measure::MutualInfo),
            other => Err(format!(
                "unknown measure '{other}' (expected qd, gmqd, classical or mutual_info)"
            )),
        }
    }
}

/// Inclusive linear grid over γt.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GammaGrid {
    pub start: f64,
    pub stop: f64,
    pub points: usize,
}

impl GammaGrid {
    pub fn values(&self) -> Vec<f64> {
        let span = self.stop - self.start;
        (0..self.points)
            .map(|i| self.start + span * i as f64 / (self.points - 1) as f64)
            .collect()
    }
}

/// Declarative sweep grid.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepSpec {
    pub channels: Vec<ChannelKind>,
    pub n_values: Vec<u32>,
    pub theta_values: Vec<f64>,
    pub gamma_t: GammaGrid,
    /// Measures rendered into plots; the CSV always carries all four.
    pub measures: Vec<Measure>,
}

impl SweepSpec {
    /// All channels, N ∈ {2, 4, …, 20}, θ = 0.1π, γt ∈ [0, 5] on 100 points.
    pub fn figure1() -> Self {
        Self {
            channels: ChannelKind::ALL.to_vec(),
            n_values: (1..=10).map(|k| 2 * k).collect(),
            theta_values: vec![0.1 * std::f64::consts::PI],
            gamma_t: GammaGrid {
                start: 0.0,
                stop: 5.0,
                points: 100,
            },
            measures: Measure::ALL.to_vec(),
        }
    }

    /// All channels, N = 12, θ on a 100-point grid over [0, 2π], γt ∈ [0, 5]
    /// on 41 points.
    pub fn figure2() -> Self {
        let points = 100;
        Self {
            channels: ChannelKind::ALL.to_vec(),
            n_values: vec![12],
            theta_values: (0..points)
                .map(|i| std::f64::consts::TAU * i as f64 / (points - 1) as f64)
                .collect(),
            gamma_t: GammaGrid {
                start: 0.0,
                stop: 5.0,
                points: 41,
            },
            measures: Measure::ALL.to_vec(),
        }
    }

    /// All channels, N = 12, θ = 0.1π, γt ∈ [0, 5] on 100 points.
    pub fn figure3() -> Self {
        Self {
            n_values: vec![12],
            ..Self::figure1()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.channels.is_empty() || self.n_values.is_empty() || self.theta_values.is_empty() {
            return Err(Error::SweepSpec(
                "channels, n and theta lists must be non-empty".into(),
            ));
        }
        if self.measures.is_empty() {
            return Err(Error::SweepSpec("measure list must be non-empty".into()));
        }
        if !(self.gamma_t.start.is_finite() && self.gamma_t.stop.is_finite()) {
            return Err(Error::SweepSpec("gamma_t bounds must be finite".into()));
        }
        if self.gamma_t.start < 0.0 {
            return Err(Error::SweepSpec(format!(
                "gamma_t.start must be nonnegative, got {}",
                self.gamma_t.start
            )));
        }
        if self.gamma_t.stop < self.gamma_t.start {
            return Err(Error::SweepSpec("gamma_t.stop precedes start".into()));
        }
        if self.gamma_t.points < 2 {
            return Err(Error::SweepSpec(format!(
                "gamma_t.points must be at least 2, got {}",
                self.gamma_t.points
            )));
        }
        for &n in &self.n_values {
            if !(2..=MAX_PARTICLES).contains(&n) {
                return Err(Error::SweepSpec(format!("n = {n} outside 2..={MAX_PARTICLES}")));
            }
        }
        for &theta in &self.theta_values {
            if !theta.is_finite() {
                return Err(Error::SweepSpec(format!("theta = {theta} is not finite")));
            }
        }
        Ok(())
    }

    /// Axes normalized into canonical order: channels by declaration order,
    /// n and θ ascending, duplicates removed.
    fn normalized_axes(&self) -> (Vec<ChannelKind>, Vec<u32>, Vec<f64>) {
        let mut channels = self.channels.clone();
        channels.sort();
        channels.dedup();
        let mut n_values = self.n_values.clone();
        n_values.sort_unstable();
        n_values.dedup();
        let mut thetas = self.theta_values.clone();
        thetas.sort_by(f64::total_cmp);
        thetas.dedup();
        (channels, n_values, thetas)
    }
}

/// One CSV record.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRow {
    pub channel: ChannelKind,
    pub n: u32,
    pub theta: f64,
    pub gamma_t: f64,
    pub p: f64,
    pub qd: f64,
    pub gmqd_normalized: f64,
    pub classical: f64,
    pub mutual_info: f64,
}

/// Evaluate one grid point through the library path.
pub fn evaluate_point(channel: ChannelKind, n: u32, theta: f64, gamma_t: f64) -> Result<SweepRow> {
    let params = TwistingParams::new(n, theta)?;
    let state = evolved_at(channel, &expectations(params), gamma_t)?;
    let report = state.quantum_discord();
    Ok(SweepRow {
        channel,
        n,
        theta,
        gamma_t,
        p: p_of_t(gamma_t)?,
        qd: report.qd,
        gmqd_normalized: report.gmqd_normalized,
        classical: report.classical,
        mutual_info: report.mutual_info,
    })
}

/// Run the full sweep. Grid points are evaluated on the rayon pool; rows
/// come back in deterministic (channel, n, theta, gamma_t) order regardless
/// of scheduling.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    spec.validate()?;
    let (channels, n_values, thetas) = spec.normalized_axes();
    let gamma_values = spec.gamma_t.values();

    let mut points = Vec::with_capacity(
        channels.len() * n_values.len() * thetas.len() * gamma_values.len(),
    );
    for &channel in &channels {
        for &n in &n_values {
            for &theta in &thetas {
                for &gamma_t in &gamma_values {
                    points.push((channel, n, theta, gamma_t));
                }
            }
        }
    }

    points
        .par_iter()
        .map(|&(channel, n, theta, gamma_t)| evaluate_point(channel, n, theta, gamma_t))
        .collect()
}

/// Format with 12 significant digits and a lowercase exponent; the pinned
/// serialization for CSV and fixtures.
pub fn format_float(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.11e}")
}

/// Write rows as CSV (UTF-8, LF line endings).
pub fn write_csv<W: Write>(mut out: W, rows: &[SweepRow]) -> std::io::Result<()> {
    out.write_all(CSV_HEADER.as_bytes())?;
    out.write_all(b"\n")?;
    for row in rows {
        let line = format!(
            "{},{},{},{},{},{},{},{},{}\n",
            row.channel,
            row.n,
            format_float(row.theta),
            format_float(row.gamma_t),
            format_float(row.p),
            format_float(row.qd),
            format_float(row.gmqd_normalized),
            format_float(row.classical),
            format_float(row.mutual_info),
        );
        out.write_all(line.as_bytes())?;
    }
    Ok(())
}
