//! Pairwise quantum discord for symmetric multi-qubit registers under local
//! noise.
//!
//! The crate models two-qubit X states extracted from N-qubit one-axis-
//! twisting collective spin states, computes their quantum discord and
//! geometric quantum discord in closed form, evolves them under four local
//! noise channels (phase flip, amplitude damping, phase damping,
//! depolarizing), and verifies every closed-form path against independent
//! brute-force oracles: projective-measurement minimization for the discord,
//! Hilbert-Schmidt minimization for the geometric measure, and an exact
//! state-vector simulation with partial trace for the twisting reduction.
//!
//! Modules:
//! - [`xstate`]: the X-state data model and all correlation measures;
//! - [`twisting`]: closed-form reduced states of the twisting family;
//! - [`channels`]: Kraus sets, generic application, analytic evolution;
//! - [`oracle`]: the brute-force verifiers;
//! - [`sweep`]: (channel, N, θ, γt) grids and CSV serialization;
//! - [`validate`]: the cross-validation battery and golden fixtures;
//! - [`svg`]: static line plots for sweep slices.

pub mod channels;
pub mod config;
pub mod error;
pub mod oracle;
pub mod sampling;
pub mod svg;
pub mod sweep;
pub mod twisting;
pub mod validate;
pub mod xstate;

pub use channels::{ChannelKind, KrausSet, NoiseStrength};
pub use error::{Error, Result};
pub use twisting::{CollectiveExpectations, TwistingParams};
pub use xstate::{BlochDecomposition, CorrelationReport, SpectralData, TwoQubitXState};
