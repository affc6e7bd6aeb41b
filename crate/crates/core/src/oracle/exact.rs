//! Exact construction of the twisting state and its two-qubit reduction.
//!
//! The primary path works in the symmetric (Dicke) subspace, where the
//! collective Sx operator is tridiagonal in the excitation-number basis and
//! the (N+1)-dimensional propagator comes from a dense symmetric
//! eigendecomposition. The two-qubit reduction follows from the binomial
//! split of a Dicke state over the first pair and the rest of the register.
//!
//! A brute-force full-register path (state vector of size 2^N) is kept for
//! small N as an independent cross-check of the subspace construction, and
//! to verify that evolving the whole register under a local channel and then
//! tracing agrees with tracing first and evolving the pair.

use nalgebra::linalg::SymmetricEigen;
use nalgebra::{DMatrix, DVector, Matrix2, Matrix4};
use num_complex::Complex64 as C64;

use crate::channels::{apply_two_qubit, kraus_set, ChannelKind, NoiseStrength};
use crate::error::{Error, Result};
use crate::twisting::{CollectiveExpectations, TwistingParams};
use crate::xstate::TwoQubitXState;

/// Largest register for the Dicke-subspace oracle.
pub const MAX_EXACT_QUBITS: u32 = 20;
/// Largest register for the full 2^N cross-check paths.
pub const MAX_FULL_REGISTER_QUBITS: u32 = 10;

/// Binomial coefficients C(n, 0..=n) as exact f64 values (n ≤ 20 keeps them
/// well inside the integer range of f64).
fn binomial_row(n: usize) -> Vec<f64> {
    let mut row = vec![1.0; n + 1];
    for k in 1..=n {
        row[k] = row[k - 1] * (n - k + 1) as f64 / k as f64;
    }
    row
}

/// Dicke-basis amplitudes of the twisted state, indexed by the number of
/// σz = +1 qubits (the register starts with zero of them).
///
/// The propagator is exp(−i(θ/2)Sx²); this generator normalization is the
/// one whose reduced states reproduce the closed-form expectation values of
/// [`crate::twisting::expectations`], which the equality tests pin down
/// end-to-end.
fn dicke_amplitudes(params: TwistingParams) -> DVector<C64> {
    let n = params.n() as usize;
    let j = n as f64 / 2.0;
    let dim = n + 1;

    let mut sx = DMatrix::<f64>::zeros(dim, dim);
    for k in 0..n {
        let m = k as f64 - j;
        let coupling = 0.5 * (j * (j + 1.0) - m * (m + 1.0)).sqrt();
        sx[(k + 1, k)] = coupling;
        sx[(k, k + 1)] = coupling;
    }

    let eigen = SymmetricEigen::new(sx);
    let mu = 0.5 * params.theta();
    let mut amplitudes = DVector::from_element(dim, C64::new(0.0, 0.0));
    for l in 0..dim {
        let lambda = eigen.eigenvalues[l];
        let phase = C64::from_polar(1.0, -mu * lambda * lambda);
        // ⟨k| V e^{−iμλ²} Vᵀ |k=0⟩
        let overlap0 = eigen.eigenvectors[(0, l)];
        for k in 0..dim {
            amplitudes[k] += eigen.eigenvectors[(k, l)] * phase * overlap0;
        }
    }
    amplitudes
}

/// Number of σz = +1 qubits inside each pair basis state
/// |↑↑⟩, |↑↓⟩, |↓↑⟩, |↓↓⟩.
const PAIR_EXCITATIONS: [usize; 4] = [2, 1, 1, 0];

/// Two-qubit reduction of a symmetric state given by Dicke amplitudes.
///
/// Splitting a Dicke state with k excitations over (pair ⊗ rest) gives
/// amplitude √(C(N−2, k−e) / C(N, k)) on each pair state with e excitations;
/// tracing the rest contracts equal rest-excitation sectors.
#[allow(clippy::needless_range_loop)]
fn reduce_dicke(amplitudes: &DVector<C64>, n: usize) -> Matrix4<C64> {
    let small = binomial_row(n - 2);
    let big = binomial_row(n);
    let mut rho = Matrix4::zeros();
    for p in 0..4 {
        for q in 0..4 {
            let (ep, eq) = (PAIR_EXCITATIONS[p], PAIR_EXCITATIONS[q]);
            let mut acc = C64::new(0.0, 0.0);
            for rest in 0..=(n - 2) {
                let (kp, kq) = (rest + ep, rest + eq);
                let weight = small[rest] / (big[kp] * big[kq]).sqrt();
                acc += amplitudes[kp] * amplitudes[kq].conj() * weight;
            }
            rho[(p, q)] = acc;
        }
    }
    rho
}

/// Exact two-qubit reduced state of the N-qubit twisting register.
///
/// Errors for N > 20 and if the reduced matrix were to fall outside the X
/// pattern beyond 1e-10.
pub fn exact_reduced_state(params: TwistingParams) -> Result<TwoQubitXState> {
    if params.n() > MAX_EXACT_QUBITS {
        return Err(Error::RegisterTooLarge {
            n: params.n(),
            max: MAX_EXACT_QUBITS,
        });
    }
    let amplitudes = dicke_amplitudes(params);
    let rho = reduce_dicke(&amplitudes, params.n() as usize);
    TwoQubitXState::from_matrix(&rho, 1e-10, 1e-10)
}

/// Expectation values measured on the exact reduced state:
/// ⟨σ1z⟩ and ⟨σ1zσ2z⟩ from Pauli traces, ⟨σ1+σ2−⟩ = ρ32, ⟨σ1−σ2−⟩ = ρ14.
pub fn exact_expectations(params: TwistingParams) -> Result<CollectiveExpectations> {
    let state = exact_reduced_state(params)?;
    Ok(CollectiveExpectations {
        sz: state.d1() + state.d2() - state.d3() - state.d4(),
        szz: state.d1() - state.d2() - state.d3() + state.d4(),
        spm: state.b().conj().re,
        smm: state.a(),
    })
}

/// Exact reduced state evolved under a local channel: trace-preserving
/// channels acting on the traced-out qubits commute with the partial trace,
/// so only the two remaining qubits need evolving.
pub fn exact_channel_reduced(
    params: TwistingParams,
    kind: ChannelKind,
    p: NoiseStrength,
) -> Result<TwoQubitXState> {
    apply_two_qubit(&kraus_set(kind, p), &exact_reduced_state(params)?)
}

/// Full 2^N state vector of the twisted register, reduced to the first two
/// qubits by explicit partial trace. Brute-force cross-check of
/// [`exact_reduced_state`]; qubit 0 occupies the most significant bit.
pub fn full_register_reduced(params: TwistingParams) -> Result<Matrix4<C64>> {
    let psi = full_register_state(params)?;
    let rest_dim = psi.len() / 4;
    let mut rho = Matrix4::zeros();
    for p in 0..4 {
        for q in 0..4 {
            let mut acc = C64::new(0.0, 0.0);
            for rest in 0..rest_dim {
                acc += psi[p * rest_dim + rest] * psi[q * rest_dim + rest].conj();
            }
            rho[(p, q)] = acc;
        }
    }
    Ok(rho)
}

/// Full-register channel evolution: every qubit passes through the channel,
/// then all but the first two are traced out. Together with
/// [`exact_channel_reduced`] this validates the trace-channel commutation
/// argument.
pub fn full_register_channel_reduced(
    params: TwistingParams,
    kind: ChannelKind,
    p: NoiseStrength,
) -> Result<Matrix4<C64>> {
    let psi = full_register_state(params)?;
    let n = params.n() as usize;
    let dim = psi.len();

    let mut rho = DMatrix::<C64>::zeros(dim, dim);
    for r in 0..dim {
        for c in 0..dim {
            rho[(r, c)] = psi[r] * psi[c].conj();
        }
    }

    let kraus = kraus_set(kind, p);
    for qubit in 0..n {
        let mut next = DMatrix::<C64>::zeros(dim, dim);
        for op in kraus.ops() {
            let embedded = embed_single_qubit_op(n, qubit, op);
            next += &embedded * &rho * embedded.adjoint();
        }
        rho = next;
    }

    let rest_dim = dim / 4;
    let mut reduced = Matrix4::zeros();
    for pq in 0..4 {
        for q in 0..4 {
            let mut acc = C64::new(0.0, 0.0);
            for rest in 0..rest_dim {
                acc += rho[(pq * rest_dim + rest, q * rest_dim + rest)];
            }
            reduced[(pq, q)] = acc;
        }
    }
    Ok(reduced)
}

/// State vector exp(−i(θ/2)Sx²)|↓…↓⟩ in the full 2^N space, built with a
/// dense symmetric eigendecomposition of the collective Sx.
fn full_register_state(params: TwistingParams) -> Result<DVector<C64>> {
    if params.n() > MAX_FULL_REGISTER_QUBITS {
        return Err(Error::RegisterTooLarge {
            n: params.n(),
            max: MAX_FULL_REGISTER_QUBITS,
        });
    }
    let n = params.n() as usize;
    let dim = 1usize << n;

    let mut sx = DMatrix::<f64>::zeros(dim, dim);
    for s in 0..dim {
        for qubit in 0..n {
            let t = s ^ (1 << (n - 1 - qubit));
            sx[(t, s)] += 0.5;
        }
    }

    let eigen = SymmetricEigen::new(sx);
    let mu = 0.5 * params.theta();
    // Initial state: every qubit ↓, i.e. the all-ones index.
    let start = dim - 1;
    let mut psi = DVector::from_element(dim, C64::new(0.0, 0.0));
    for l in 0..dim {
        let lambda = eigen.eigenvalues[l];
        let phase = C64::from_polar(1.0, -mu * lambda * lambda);
        let overlap = eigen.eigenvectors[(start, l)];
        for s in 0..dim {
            psi[s] += eigen.eigenvectors[(s, l)] * phase * overlap;
        }
    }
    Ok(psi)
}

/// I ⊗ … ⊗ op ⊗ … ⊗ I with `op` acting on the given qubit.
fn embed_single_qubit_op(n: usize, qubit: usize, op: &Matrix2<C64>) -> DMatrix<C64> {
    let left = DMatrix::<C64>::identity(1 << qubit, 1 << qubit);
    let right = DMatrix::<C64>::identity(1 << (n - 1 - qubit), 1 << (n - 1 - qubit));
    let op_dyn = DMatrix::from_fn(2, 2, |i, j| op[(i, j)]);
    left.kronecker(&op_dyn).kronecker(&right)
}
