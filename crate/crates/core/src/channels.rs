//! Local noise channels: Kraus sets, generic two-qubit application, and the
//! analytic evolved-state formulas they induce on the twisting family.
//!
//! Each channel acts independently on both qubits. The noise strength p of a
//! Kraus set is related to the dimensionless time γt by p = exp(−γt) for the
//! phase-flip, amplitude-damping and phase-damping channels. The
//! depolarizing mixing weight instead grows as 1 − exp(−γt), so that γt = 0
//! is noiseless for every channel and all four decay toward their fixed
//! points as γt increases (see [`strength_at`]).

use nalgebra::{Matrix2, Matrix4};
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::twisting::CollectiveExpectations;
use crate::xstate::TwoQubitXState;

/// Completeness tolerance for Kraus sets, Σ E†E = I.
pub const COMPLETENESS_TOLERANCE: f64 = 1e-12;
/// Off-pattern magnitude beyond which a channel output is rejected as
/// non-X-preserving.
pub const X_FORM_TOLERANCE: f64 = 1e-9;
/// Positivity tolerance for channel outputs.
pub const EVOLVED_STATE_TOLERANCE: f64 = 1e-9;

/// The four single-qubit noise channels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChannelKind {
    PhaseFlip,
    AmplitudeDamping,
    PhaseDamping,
    Depolarizing,
}

impl ChannelKind {
    pub const ALL: [ChannelKind; 4] = [
        ChannelKind::PhaseFlip,
        ChannelKind::AmplitudeDamping,
        ChannelKind::PhaseDamping,
        ChannelKind::Depolarizing,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ChannelKind::PhaseFlip => "phase-flip",
            ChannelKind::AmplitudeDamping => "amplitude-damping",
            ChannelKind::PhaseDamping => "phase-damping",
            ChannelKind::Depolarizing => "depolarizing",
        }
    }
}

impl std::fmt::Display for ChannelKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for ChannelKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "phase-flip" | "phaseflip" | "pf" => Ok(ChannelKind::PhaseFlip),
            "amplitude-damping" | "amplitudedamping" | "ad" => Ok(ChannelKind::AmplitudeDamping),
            "phase-damping" | "phasedamping" | "pd" => Ok(ChannelKind::PhaseDamping),
            "depolarizing" | "dep" => Ok(ChannelKind::Depolarizing),
            other => Err(format!(
                "unknown channel '{other}' (expected phase-flip, amplitude-damping, \
                 phase-damping or depolarizing)"
            )),
        }
    }
}

/// A noise strength p ∈ [0, 1].
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct NoiseStrength(f64);

impl NoiseStrength {
    pub fn new(p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::NoiseStrength(p));
        }
        Ok(Self(p))
    }

    /// p = exp(−γt); p(0) = 1 and p → 0 as γt → ∞.
    pub fn from_gamma_t(gamma_t: f64) -> Result<Self> {
        Ok(Self(p_of_t(gamma_t)?))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// The decay parameter p = exp(−γt).
pub fn p_of_t(gamma_t: f64) -> Result<f64> {
    if !gamma_t.is_finite() || gamma_t < 0.0 {
        return Err(Error::GammaT(gamma_t));
    }
    Ok((-gamma_t).exp())
}

/// Noise strength driving `kind` at dimensionless time γt.
///
/// The phase-flip, amplitude-damping and phase-damping Kraus sets take
/// p = exp(−γt) directly. The depolarizing mixing weight is 1 − exp(−γt):
/// its Kraus parameter measures how much of the state is replaced by I/2,
/// so the weight must start at 0 and grow with time.
pub fn strength_at(kind: ChannelKind, gamma_t: f64) -> Result<NoiseStrength> {
    let p = p_of_t(gamma_t)?;
    match kind {
        ChannelKind::Depolarizing => NoiseStrength::new(1.0 - p),
        _ => NoiseStrength::new(p),
    }
}

/// A set of single-qubit Kraus operators satisfying Σ E†E = I.
#[derive(Clone, Debug, PartialEq)]
pub struct KrausSet {
    ops: Vec<Matrix2<C64>>,
}

impl KrausSet {
    /// Build a Kraus set from raw operators, verifying completeness.
    pub fn from_ops(ops: Vec<Matrix2<C64>>) -> Result<Self> {
        let set = Self { ops };
        let defect = set.completeness_defect();
        if defect > COMPLETENESS_TOLERANCE {
            return Err(Error::KrausCompleteness(defect));
        }
        Ok(set)
    }

    pub fn ops(&self) -> &[Matrix2<C64>] {
        &self.ops
    }

    /// Largest entry of |Σ E†E − I|.
    pub fn completeness_defect(&self) -> f64 {
        let mut sum = Matrix2::zeros();
        for e in &self.ops {
            sum += e.adjoint() * e;
        }
        let identity = Matrix2::<C64>::identity();
        (sum - identity)
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }
}

/// The Kraus operators of `kind` at strength `p`.
pub fn kraus_set(kind: ChannelKind, p: NoiseStrength) -> KrausSet {
    let p = p.value();
    let z = C64::new(0.0, 0.0);
    let re = |x: f64| C64::new(x, 0.0);
    let ops = match kind {
        ChannelKind::PhaseFlip => vec![
            Matrix2::new(re((1.0 - p).sqrt()), z, z, re((1.0 - p).sqrt())),
            Matrix2::new(re(p.sqrt()), z, z, re(-p.sqrt())),
        ],
        ChannelKind::AmplitudeDamping => vec![
            Matrix2::new(re(p.sqrt()), z, z, re(1.0)),
            Matrix2::new(z, z, re((1.0 - p).sqrt()), z),
        ],
        ChannelKind::PhaseDamping => vec![
            Matrix2::new(re(p.sqrt()), z, z, re(p.sqrt())),
            Matrix2::new(re((1.0 - p).sqrt()), z, z, z),
            Matrix2::new(z, z, z, re((1.0 - p).sqrt())),
        ],
        ChannelKind::Depolarizing => {
            let w0 = (1.0 - 0.75 * p).sqrt();
            let w = (0.25 * p).sqrt();
            vec![
                Matrix2::new(re(w0), z, z, re(w0)),
                Matrix2::new(z, re(w), re(w), z),
                Matrix2::new(z, C64::new(0.0, -w), C64::new(0.0, w), z),
                Matrix2::new(re(w), z, z, re(-w)),
            ]
        }
    };
    // The four built-in sets are complete by construction.
    KrausSet { ops }
}

/// Apply a single-qubit Kraus set to both qubits of an X state:
/// ρ → Σᵢⱼ (Eᵢ⊗Eⱼ) ρ (Eᵢ⊗Eⱼ)†.
///
/// The full 4x4 result is computed and only then re-expressed as an X
/// state; if the set does not preserve the X pattern the off-pattern
/// magnitude is reported as an error instead of being discarded.
pub fn apply_two_qubit(kraus: &KrausSet, state: &TwoQubitXState) -> Result<TwoQubitXState> {
    let rho = state.to_matrix();
    let mut out = Matrix4::zeros();
    for ei in kraus.ops() {
        for ej in kraus.ops() {
            let k = ei.kronecker(ej);
            out += k * rho * k.adjoint();
        }
    }
    TwoQubitXState::from_matrix(&out, X_FORM_TOLERANCE, EVOLVED_STATE_TOLERANCE)
}

/// Evolved X state of the twisting family under `kind` at strength `p`,
/// from the analytic matrix-element formulas.
///
/// The evolved state is assembled through the same expectation-value
/// pattern as the unperturbed reduced state, with per-channel Heisenberg
/// transforms of ⟨σz⟩ and ⟨σzσz⟩ and a scalar factor on both coherences:
///
/// * phase flip: populations unchanged, coherences × (1−2p)²;
/// * amplitude damping: ⟨σz⟩ → p⟨σz⟩ + p − 1,
///   ⟨σzσz⟩ → p²⟨σzσz⟩ − 2(1−p)p⟨σz⟩ + (1−p)², coherences × p;
/// * phase damping: populations unchanged, coherences × p²;
/// * depolarizing at mixing weight p: ⟨σz⟩ → (1−p)⟨σz⟩,
///   ⟨σzσz⟩ → (1−p)²⟨σzσz⟩, coherences × (1−p)².
pub fn evolved_state_analytic(
    kind: ChannelKind,
    exp: &CollectiveExpectations,
    p: NoiseStrength,
) -> Result<TwoQubitXState> {
    let p = p.value();
    let (sz, szz, coherence_scale) = match kind {
        ChannelKind::PhaseFlip => (exp.sz, exp.szz, (1.0 - 2.0 * p).powi(2)),
        ChannelKind::AmplitudeDamping => (
            p * exp.sz + p - 1.0,
            p * p * exp.szz - 2.0 * (1.0 - p) * p * exp.sz + (1.0 - p) * (1.0 - p),
            p,
        ),
        ChannelKind::PhaseDamping => (exp.sz, exp.szz, p * p),
        ChannelKind::Depolarizing => (
            (1.0 - p) * exp.sz,
            (1.0 - p) * (1.0 - p) * exp.szz,
            (1.0 - p) * (1.0 - p),
        ),
    };

    let d1 = 0.25 * (1.0 + 2.0 * sz + szz);
    let d2 = 0.25 * (1.0 - szz);
    let d4 = 0.25 * (1.0 - 2.0 * sz + szz);
    TwoQubitXState::with_tolerance(
        d1,
        d2,
        d2,
        d4,
        exp.smm * coherence_scale,
        C64::new(exp.spm * coherence_scale, 0.0),
        EVOLVED_STATE_TOLERANCE,
    )
}

/// Evolved twisting state at dimensionless time γt; shorthand for
/// `evolved_state_analytic(kind, exp, strength_at(kind, gamma_t))`.
pub fn evolved_at(
    kind: ChannelKind,
    exp: &CollectiveExpectations,
    gamma_t: f64,
) -> Result<TwoQubitXState> {
    evolved_state_analytic(kind, exp, strength_at(kind, gamma_t)?)
}
