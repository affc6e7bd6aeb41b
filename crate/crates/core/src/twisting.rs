//! Two-qubit reduced states of the N-qubit one-axis-twisting collective
//! state, from closed-form expectation values.
//!
//! The register starts in the product state with every qubit in the
//! σz = −1 eigenstate and evolves under the collective Sx² twisting
//! nonlinearity. Exchange symmetry and parity make the two-qubit reduced
//! density matrix an X state whose entries are fixed by four local
//! expectation values.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::xstate::TwoQubitXState;

/// Largest accepted particle count. Powers of cosines underflow to zero
/// gracefully long before this limit.
pub const MAX_PARTICLES: u32 = 1_000_000;

/// Particle count and twisting angle θ (radians) of a one-axis-twisting
/// collective state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwistingParams {
    n: u32,
    theta: f64,
}

impl TwistingParams {
    pub fn new(n: u32, theta: f64) -> Result<Self> {
        if !(2..=MAX_PARTICLES).contains(&n) {
            return Err(Error::ParticleCount(n, 2, MAX_PARTICLES));
        }
        if !theta.is_finite() {
            return Err(Error::Angle(theta));
        }
        Ok(Self { n, theta })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Raw angle as given; trigonometric evaluation never wraps it.
    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Angle reduced into [0, 4π), the fundamental period of the family;
    /// intended for display only.
    pub fn theta_canonical(&self) -> f64 {
        self.theta.rem_euclid(4.0 * std::f64::consts::PI)
    }
}

impl std::fmt::Display for TwistingParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "N = {}, theta = {:.12e} rad ({:.6} pi mod 4pi)",
            self.n,
            self.theta,
            self.theta_canonical() / std::f64::consts::PI
        )
    }
}

/// The four local expectation values that determine the two-qubit reduced
/// state of a symmetric register: ⟨σ1z⟩, ⟨σ1z σ2z⟩, ⟨σ1+ σ2−⟩ and ⟨σ1− σ2−⟩.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CollectiveExpectations {
    pub sz: f64,
    pub szz: f64,
    pub spm: f64,
    pub smm: C64,
}

/// Integer power of a cosine by repeated squaring (`powi`), keeping the sign
/// exact for negative bases and underflowing to zero for large exponents.
#[inline]
fn cos_pow(c: f64, k: u32) -> f64 {
    c.powi(k as i32)
}

/// Closed-form expectation values of the twisting state:
///
/// ```text
/// ⟨σ1z⟩    = −cos^(N−1)(θ/2)
/// ⟨σ1zσ2z⟩ = (1 + cos^(N−2) θ) / 2
/// ⟨σ1+σ2−⟩ = (1 − cos^(N−2) θ) / 8
/// ⟨σ1−σ2−⟩ = −(1 − cos^(N−2) θ) / 8 − (i/2) sin(θ/2) cos^(N−2)(θ/2)
/// ```
pub fn expectations(params: TwistingParams) -> CollectiveExpectations {
    let n = params.n();
    let half = 0.5 * params.theta();
    let c_half = half.cos();
    let c_full = params.theta().cos();

    let transverse = cos_pow(c_full, n - 2);
    CollectiveExpectations {
        sz: -cos_pow(c_half, n - 1),
        szz: 0.5 * (1.0 + transverse),
        spm: 0.125 * (1.0 - transverse),
        smm: C64::new(
            -0.125 * (1.0 - transverse),
            -0.5 * half.sin() * cos_pow(c_half, n - 2),
        ),
    }
}

/// Assemble the two-qubit reduced X state from collective expectation
/// values:
///
/// ```text
/// ρ11 = (1 + 2⟨σ1z⟩ + ⟨σ1zσ2z⟩)/4     ρ22 = ρ33 = (1 − ⟨σ1zσ2z⟩)/4
/// ρ44 = (1 − 2⟨σ1z⟩ + ⟨σ1zσ2z⟩)/4     ρ23 = ⟨σ1+σ2−⟩    ρ14 = ⟨σ1−σ2−⟩
/// ```
///
/// Fails with an invalid-state error when the expectations are mutually
/// inconsistent (the matrix would lose positivity).
pub fn reduced_state(exp: &CollectiveExpectations) -> Result<TwoQubitXState> {
    let d1 = 0.25 * (1.0 + 2.0 * exp.sz + exp.szz);
    let d2 = 0.25 * (1.0 - exp.szz);
    let d4 = 0.25 * (1.0 - 2.0 * exp.sz + exp.szz);
    TwoQubitXState::new(d1, d2, d2, d4, exp.smm, C64::new(exp.spm, 0.0))
}

/// The reduced twisting state at the given parameters; shorthand for
/// `reduced_state(&expectations(params))`.
pub fn twisted_state(params: TwistingParams) -> Result<TwoQubitXState> {
    reduced_state(&expectations(params))
}
