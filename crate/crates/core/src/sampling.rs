//! Deterministic sampling of random valid X states.
//!
//! The generator is a self-contained SplitMix64 so that fixture values and
//! validation populations are bit-stable across platforms and dependency
//! versions.

use num_complex::Complex64 as C64;
use std::f64::consts::TAU;

use crate::xstate::TwoQubitXState;

/// SplitMix64 pseudo-random generator.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform draw from [0, 1).
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }
}

/// Draw a random valid X state.
///
/// Populations are a normalized uniform 4-vector; each coherence is drawn
/// inside its positivity disk (|a|² ≤ d1·d4, |b|² ≤ d2·d3), which makes the
/// full matrix positive semidefinite by construction.
pub fn random_x_state(rng: &mut SplitMix64) -> TwoQubitXState {
    loop {
        let raw = [
            rng.next_f64() + 1e-6,
            rng.next_f64() + 1e-6,
            rng.next_f64() + 1e-6,
            rng.next_f64() + 1e-6,
        ];
        let total: f64 = raw.iter().sum();
        let [d1, d2, d3, _] = raw.map(|x| x / total);
        // Remove normalization rounding so the trace is exactly 1.
        let d4 = 1.0 - d1 - d2 - d3;
        if d4 <= 0.0 {
            continue;
        }
        let ra = rng.next_f64() * 0.999 * (d1 * d4).sqrt();
        let pa = rng.next_f64() * TAU;
        let rb = rng.next_f64() * 0.999 * (d2 * d3).sqrt();
        let pb = rng.next_f64() * TAU;
        let a = C64::from_polar(ra, pa);
        let b = C64::from_polar(rb, pb);
        if let Ok(state) = TwoQubitXState::new(d1, d2, d3, d4, a, b) {
            return state;
        }
    }
}
