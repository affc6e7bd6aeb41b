//! Command-line and config-file parsing for sweep specifications.
//!
//! Angles accept multiples of π with a `pi` suffix (`0.1pi`, `2pi`) or plain
//! radians. Lists are comma separated; `start:stop:points` expands to an
//! inclusive linear grid. A config file holds `key = value` lines with `#`
//! comments; flags override the file, which overrides the built-in Figure-1
//! defaults.

use std::path::Path;

use crate::channels::ChannelKind;
use crate::sweep::{GammaGrid, Measure, SweepSpec};

/// Parse one angle token: plain radians or a multiple of π.
pub fn parse_angle(token: &str) -> Result<f64, String> {
    let t = token.trim();
    let (body, scale) = match t.strip_suffix("pi") {
        Some(body) => (body.trim(), std::f64::consts::PI),
        None => (t, 1.0),
    };
    if body.is_empty() {
        return Ok(scale); // bare "pi"
    }
    body.parse::<f64>()
        .map(|v| v * scale)
        .map_err(|_| format!("cannot parse angle '{token}'"))
}

/// Parse an angle list: comma-separated tokens or `start:stop:points`.
pub fn parse_angle_list(text: &str) -> Result<Vec<f64>, String> {
    let t = text.trim();
    if t.contains(':') {
        let parts: Vec<&str> = t.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("range '{t}' must be start:stop:points"));
        }
        let start = parse_angle(parts[0])?;
        let stop = parse_angle(parts[1])?;
        let points: usize = parts[2]
            .trim()
            .parse()
            .map_err(|_| format!("cannot parse point count '{}'", parts[2]))?;
        if points < 2 {
            return Err("a range needs at least 2 points".into());
        }
        Ok((0..points)
            .map(|i| start + (stop - start) * i as f64 / (points - 1) as f64)
            .collect())
    } else {
        t.split(',').map(parse_angle).collect()
    }
}

/// Parse a particle-count list: comma-separated integers or
/// `start:stop:points` (the grid must land on integers).
pub fn parse_n_list(text: &str) -> Result<Vec<u32>, String> {
    let t = text.trim();
    if t.contains(':') {
        let parts: Vec<&str> = t.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("range '{t}' must be start:stop:points"));
        }
        let start: i64 = parts[0]
            .trim()
            .parse()
            .map_err(|_| format!("cannot parse '{}'", parts[0]))?;
        let stop: i64 = parts[1]
            .trim()
            .parse()
            .map_err(|_| format!("cannot parse '{}'", parts[1]))?;
        let points: i64 = parts[2]
            .trim()
            .parse()
            .map_err(|_| format!("cannot parse '{}'", parts[2]))?;
        if points < 2 {
            return Err("a range needs at least 2 points".into());
        }
        let span = stop - start;
        if span % (points - 1) != 0 {
            return Err(format!("range '{t}' does not land on integers"));
        }
        let step = span / (points - 1);
        Ok((0..points)
            .map(|i| (start + i * step) as u32)
            .collect())
    } else {
        t.split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|_| format!("cannot parse particle count '{tok}'"))
            })
            .collect()
    }
}

/// Parse `start:stop:points` into a γt grid (plain numbers, no π suffix).
pub fn parse_gamma_grid(text: &str) -> Result<GammaGrid, String> {
    let parts: Vec<&str> = text.trim().split(':').collect();
    if parts.len() != 3 {
        return Err(format!("gamma_t grid '{text}' must be start:stop:points"));
    }
    let start: f64 = parts[0]
        .trim()
        .parse()
        .map_err(|_| format!("cannot parse '{}'", parts[0]))?;
    let stop: f64 = parts[1]
        .trim()
        .parse()
        .map_err(|_| format!("cannot parse '{}'", parts[1]))?;
    let points: usize = parts[2]
        .trim()
        .parse()
        .map_err(|_| format!("cannot parse '{}'", parts[2]))?;
    Ok(GammaGrid {
        start,
        stop,
        points,
    })
}

pub fn parse_channel_list(text: &str) -> Result<Vec<ChannelKind>, String> {
    if text.trim().eq_ignore_ascii_case("all") {
        return Ok(ChannelKind::ALL.to_vec());
    }
    text.split(',').map(|tok| tok.parse()).collect()
}

pub fn parse_measure_list(text: &str) -> Result<Vec<Measure>, String> {
    if text.trim().eq_ignore_ascii_case("all") {
        return Ok(Measure::ALL.to_vec());
    }
    text.split(',').map(|tok| tok.parse()).collect()
}

/// Overrides collected from a config file or command-line flags.
#[derive(Clone, Debug, Default)]
pub struct SweepOverrides {
    pub channels: Option<Vec<ChannelKind>>,
    pub n_values: Option<Vec<u32>>,
    pub theta_values: Option<Vec<f64>>,
    pub gamma_t: Option<GammaGrid>,
    pub measures: Option<Vec<Measure>>,
}

impl SweepOverrides {
    pub fn apply(&self, spec: &mut SweepSpec) {
        if let Some(v) = &self.channels {
            spec.channels = v.clone();
        }
        if let Some(v) = &self.n_values {
            spec.n_values = v.clone();
        }
        if let Some(v) = &self.theta_values {
            spec.theta_values = v.clone();
        }
        if let Some(v) = self.gamma_t {
            spec.gamma_t = v;
        }
        if let Some(v) = &self.measures {
            spec.measures = v.clone();
        }
    }
}

/// Parse a `key = value` config file.
pub fn load_config_file(path: &Path) -> Result<SweepOverrides, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|err| format!("cannot read config {}: {err}", path.display()))?;
    parse_config(&text).map_err(|err| format!("{}: {err}", path.display()))
}

fn parse_config(text: &str) -> Result<SweepOverrides, String> {
    let mut overrides = SweepOverrides::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("line {}: expected key = value", lineno + 1))?;
        let value = value.trim();
        match key.trim() {
            "channels" | "channel" => overrides.channels = Some(parse_channel_list(value)?),
            "n" => overrides.n_values = Some(parse_n_list(value)?),
            "theta" => overrides.theta_values = Some(parse_angle_list(value)?),
            "gamma_t" => overrides.gamma_t = Some(parse_gamma_grid(value)?),
            "measures" => overrides.measures = Some(parse_measure_list(value)?),
            other => return Err(format!("line {}: unknown key '{other}'", lineno + 1)),
        }
    }
    Ok(overrides)
}
