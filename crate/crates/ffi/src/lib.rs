//! C ABI for the qdiscord library.
//!
//! States are opaque handles created and destroyed through this interface;
//! every fallible call returns a [`QdStatus`] and writes its result through
//! an out-pointer. All functions are thread-safe: handles are immutable
//! once created.

use std::os::raw::c_char;

use num_complex::Complex64 as C64;
use qdiscord::channels::{
    apply_two_qubit, evolved_at, kraus_set, ChannelKind, NoiseStrength,
};
use qdiscord::oracle::{discord_bruteforce, gmqd_bruteforce, GridSpec};
use qdiscord::twisting::{expectations, twisted_state, TwistingParams};
use qdiscord::{Error, TwoQubitXState};

/// Status code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QdStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// An argument was outside its domain.
    InvalidArgument = 2,
    /// The inputs do not describe a valid density matrix.
    InvalidState = 3,
    /// A channel output left the X pattern.
    NotXForm = 4,
    /// The request exceeds a built-in size limit.
    Unsupported = 5,
}

/// Noise channel selector.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QdChannel {
    PhaseFlip = 0,
    AmplitudeDamping = 1,
    PhaseDamping = 2,
    Depolarizing = 3,
}

impl From<QdChannel> for ChannelKind {
    fn from(channel: QdChannel) -> Self {
        match channel {
            QdChannel::PhaseFlip => ChannelKind::PhaseFlip,
            QdChannel::AmplitudeDamping => ChannelKind::AmplitudeDamping,
            QdChannel::PhaseDamping => ChannelKind::PhaseDamping,
            QdChannel::Depolarizing => ChannelKind::Depolarizing,
        }
    }
}

/// Correlation measures of one state, entropic quantities in bits.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default)]
pub struct QdReport {
    pub qd: f64,
    pub gmqd_normalized: f64,
    pub classical: f64,
    pub mutual_info: f64,
    pub q1: f64,
    pub q2: f64,
}

/// Opaque two-qubit X-state handle.
pub struct QdState {
    inner: TwoQubitXState,
}

fn status_of(err: &Error) -> QdStatus {
    match err {
        Error::UnitTrace(_)
        | Error::Positivity(_)
        | Error::CoherenceBound { .. }
        | Error::NotHermitian(_) => QdStatus::InvalidState,
        Error::NotXForm(_) => QdStatus::NotXForm,
        Error::EntropyDomain(_)
        | Error::NoiseStrength(_)
        | Error::GammaT(_)
        | Error::ParticleCount(..)
        | Error::Angle(_)
        | Error::GridSpec(_)
        | Error::SweepSpec(_)
        | Error::KrausCompleteness(_) => QdStatus::InvalidArgument,
        Error::RegisterTooLarge { .. } => QdStatus::Unsupported,
    }
}

fn emit(out: *mut *mut QdState, state: TwoQubitXState) -> QdStatus {
    // Caller-checked: out is non-null when this is reached.
    unsafe {
        *out = Box::into_raw(Box::new(QdState { inner: state }));
    }
    QdStatus::Ok
}

const VERSION: &str = concat!("qdiscord-ffi ", env!("CARGO_PKG_VERSION"), "\0");

/// Version string of this library; static storage, do not free.
#[no_mangle]
pub extern "C" fn qd_version() -> *const c_char {
    VERSION.as_ptr() as *const c_char
}

/// Build an X state from its seven parameters (the four populations, the
/// complex anti-diagonal coherence a = rho14 and the complex inner coherence
/// b = rho23). Writes a new handle to `out` on success.
///
/// # Safety
/// `out` must be a writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn qd_state_new(
    d1: f64,
    d2: f64,
    d3: f64,
    d4: f64,
    a_re: f64,
    a_im: f64,
    b_re: f64,
    b_im: f64,
    out: *mut *mut QdState,
) -> QdStatus {
    if out.is_null() {
        return QdStatus::NullPointer;
    }
    match TwoQubitXState::new(d1, d2, d3, d4, C64::new(a_re, a_im), C64::new(b_re, b_im)) {
        Ok(state) => emit(out, state),
        Err(err) => status_of(&err),
    }
}

/// Release a handle returned by this library. Null is ignored.
///
/// # Safety
/// `state` must be a pointer previously returned through one of the
/// `out` parameters of this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qd_state_free(state: *mut QdState) {
    if !state.is_null() {
        drop(unsafe { Box::from_raw(state) });
    }
}

/// Two-qubit reduced state of the N-qubit one-axis-twisting collective state
/// at twisting angle theta (radians).
///
/// # Safety
/// `out` must be a writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn qd_twisted_state(n: u32, theta: f64, out: *mut *mut QdState) -> QdStatus {
    if out.is_null() {
        return QdStatus::NullPointer;
    }
    let state = TwistingParams::new(n, theta).and_then(twisted_state);
    match state {
        Ok(state) => emit(out, state),
        Err(err) => status_of(&err),
    }
}

/// Apply a noise channel at Kraus strength `p` to both qubits of `state`
/// through the generic Kraus route. Writes a new handle; the input handle is
/// left untouched.
///
/// # Safety
/// `state` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn qd_state_apply_channel(
    state: *const QdState,
    channel: QdChannel,
    p: f64,
    out: *mut *mut QdState,
) -> QdStatus {
    if state.is_null() || out.is_null() {
        return QdStatus::NullPointer;
    }
    let state = unsafe { &(*state).inner };
    let strength = match NoiseStrength::new(p) {
        Ok(strength) => strength,
        Err(err) => return status_of(&err),
    };
    match apply_two_qubit(&kraus_set(channel.into(), strength), state) {
        Ok(evolved) => emit(out, evolved),
        Err(err) => status_of(&err),
    }
}

/// Twisting state evolved under a channel at dimensionless time gamma_t,
/// through the analytic matrix-element formulas. gamma_t = 0 is noiseless
/// for every channel.
///
/// # Safety
/// `out` must be a writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn qd_twisted_evolved(
    n: u32,
    theta: f64,
    channel: QdChannel,
    gamma_t: f64,
    out: *mut *mut QdState,
) -> QdStatus {
    if out.is_null() {
        return QdStatus::NullPointer;
    }
    let state = TwistingParams::new(n, theta)
        .map(expectations)
        .and_then(|exp| evolved_at(channel.into(), &exp, gamma_t));
    match state {
        Ok(state) => emit(out, state),
        Err(err) => status_of(&err),
    }
}

/// Copy the eight real parameters (d1, d2, d3, d4, a_re, a_im, b_re, b_im)
/// into `entries`.
///
/// # Safety
/// `state` must be a live handle; `entries` must point to at least eight
/// writable f64 slots.
#[no_mangle]
pub unsafe extern "C" fn qd_state_entries(state: *const QdState, entries: *mut f64) -> QdStatus {
    if state.is_null() || entries.is_null() {
        return QdStatus::NullPointer;
    }
    let s = unsafe { &(*state).inner };
    let values = [
        s.d1(),
        s.d2(),
        s.d3(),
        s.d4(),
        s.a().re,
        s.a().im,
        s.b().re,
        s.b().im,
    ];
    unsafe { std::ptr::copy_nonoverlapping(values.as_ptr(), entries, values.len()) };
    QdStatus::Ok
}

/// Compute all correlation measures of `state`.
///
/// # Safety
/// `state` must be a live handle; `report` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qd_state_report(
    state: *const QdState,
    report: *mut QdReport,
) -> QdStatus {
    if state.is_null() || report.is_null() {
        return QdStatus::NullPointer;
    }
    let r = unsafe { &(*state).inner }.quantum_discord();
    unsafe {
        *report = QdReport {
            qd: r.qd,
            gmqd_normalized: r.gmqd_normalized,
            classical: r.classical,
            mutual_info: r.mutual_info,
            q1: r.q1,
            q2: r.q2,
        };
    }
    QdStatus::Ok
}

/// Shannon binary entropy in bits.
///
/// # Safety
/// `out` must be a writable f64 slot.
#[no_mangle]
pub unsafe extern "C" fn qd_binary_entropy(x: f64, out: *mut f64) -> QdStatus {
    if out.is_null() {
        return QdStatus::NullPointer;
    }
    match qdiscord::xstate::binary_entropy(x) {
        Ok(h) => {
            unsafe { *out = h };
            QdStatus::Ok
        }
        Err(err) => status_of(&err),
    }
}

/// The decay parameter p = exp(-gamma_t).
///
/// # Safety
/// `out` must be a writable f64 slot.
#[no_mangle]
pub unsafe extern "C" fn qd_p_of_gamma_t(gamma_t: f64, out: *mut f64) -> QdStatus {
    if out.is_null() {
        return QdStatus::NullPointer;
    }
    match qdiscord::channels::p_of_t(gamma_t) {
        Ok(p) => {
            unsafe { *out = p };
            QdStatus::Ok
        }
        Err(err) => status_of(&err),
    }
}

fn grid_of(coarse_points: u32, refine_rounds: u32, refine_shrink: f64) -> Result<GridSpec, Error> {
    let grid = GridSpec {
        coarse_points: coarse_points as usize,
        refine_rounds: refine_rounds as usize,
        refine_shrink,
    };
    grid.validate()?;
    Ok(grid)
}

/// Brute-force quantum discord by projective-measurement minimization on the
/// second qubit; an upper bound converging from above as the grid refines.
/// Pass (64, 3, 0.2) for the default grid.
///
/// # Safety
/// `state` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qd_discord_bruteforce(
    state: *const QdState,
    coarse_points: u32,
    refine_rounds: u32,
    refine_shrink: f64,
    out: *mut f64,
) -> QdStatus {
    if state.is_null() || out.is_null() {
        return QdStatus::NullPointer;
    }
    match grid_of(coarse_points, refine_rounds, refine_shrink) {
        Ok(grid) => {
            let value = discord_bruteforce(unsafe { &(*state).inner }, &grid);
            unsafe { *out = value };
            QdStatus::Ok
        }
        Err(err) => status_of(&err),
    }
}

/// Brute-force (unnormalized) geometric discord by Hilbert-Schmidt
/// minimization over projective dephasings of the first qubit.
///
/// # Safety
/// `state` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qd_gmqd_bruteforce(
    state: *const QdState,
    coarse_points: u32,
    refine_rounds: u32,
    refine_shrink: f64,
    out: *mut f64,
) -> QdStatus {
    if state.is_null() || out.is_null() {
        return QdStatus::NullPointer;
    }
    match grid_of(coarse_points, refine_rounds, refine_shrink) {
        Ok(grid) => {
            let value = gmqd_bruteforce(unsafe { &(*state).inner }, &grid);
            unsafe { *out = value };
            QdStatus::Ok
        }
        Err(err) => status_of(&err),
    }
}
