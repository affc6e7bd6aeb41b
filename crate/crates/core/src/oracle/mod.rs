//! Independent brute-force verifiers.
//!
//! Nothing in this module reuses the closed-form measures: discord is
//! minimized over sampled projective measurements, the geometric measure
//! over sampled projective dephasings, and entropies come from dense
//! eigensolvers. The twisting states are rebuilt from an exact state-vector
//! simulation in [`exact`]. These routines fix golden values and gate the
//! closed-form implementations.

mod exact;

pub use exact::{
    exact_channel_reduced, exact_expectations, exact_reduced_state, full_register_channel_reduced,
    full_register_reduced, MAX_EXACT_QUBITS, MAX_FULL_REGISTER_QUBITS,
};

use nalgebra::linalg::SymmetricEigen;
use nalgebra::{Matrix2, Matrix4};
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::xstate::{binary_entropy_clamped, TwoQubitXState};

/// Bloch-sphere angles of a rank-1 projective measurement basis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeasurementDirection {
    /// Polar angle in [0, π].
    pub polar: f64,
    /// Azimuthal angle in [0, 2π).
    pub azimuth: f64,
}

/// Grid-search parameters: a coarse scan of the direction sphere followed by
/// shrinking local re-grids around the incumbent best.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridSpec {
    /// Per-axis sample count of the coarse scan (at least 8).
    pub coarse_points: usize,
    /// Number of local-refinement iterations.
    pub refine_rounds: usize,
    /// Window shrink factor per refinement round, in (0, 1).
    pub refine_shrink: f64,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            coarse_points: 64,
            refine_rounds: 3,
            refine_shrink: 0.2,
        }
    }
}

impl GridSpec {
    pub fn validate(&self) -> Result<()> {
        if self.coarse_points < 8 {
            return Err(Error::GridSpec(format!(
                "coarse_points must be at least 8, got {}",
                self.coarse_points
            )));
        }
        if !(self.refine_shrink > 0.0 && self.refine_shrink < 1.0) {
            return Err(Error::GridSpec(format!(
                "refine_shrink must lie in (0, 1), got {}",
                self.refine_shrink
            )));
        }
        Ok(())
    }
}

/// Upper bound on the number of refined candidate basins.
const MAX_CANDIDATES: usize = 4;
/// Shrink factor and round count of the axis polish sweeps.
const POLISH_SHRINK: f64 = 0.35;
const POLISH_ROUNDS: usize = 8;

/// Deterministic 2-angle minimization: a coarse scan of the sphere,
/// `refine_rounds` shrinking re-grids around each surviving candidate basin,
/// and alternating single-axis polish sweeps.
///
/// Two structural traits of the measurement objectives shape this routine.
/// First, competing basins (a polar and an equatorial branch) can sit within
/// the coarse sampling error of each other, so a single incumbent may lock
/// onto the wrong one; the scan keeps up to [`MAX_CANDIDATES`] well-separated
/// near-best points — identifying antipodes, which parametrize the same
/// measurement — and refines all of them. Second, a basin can be an extremely
/// anisotropic valley whose flat direction runs along a coordinate axis
/// (the z axis stays an eigendirection of the relevant quadratic forms for
/// X states), which defeats isotropically shrinking windows; full-range
/// single-axis sweeps converge there. Ties keep the first point in (polar,
/// azimuth)-ascending scan order, so the result does not depend on
/// evaluation order.
fn minimize_over_directions<F>(grid: &GridSpec, objective: F) -> (MeasurementDirection, f64)
where
    F: Fn(f64, f64) -> f64,
{
    let c = grid.coarse_points;

    // Coarse scan: polar inclusive of both poles, azimuth half-open. Doubling
    // coarse_points yields a superset of the sample set.
    let mut samples = Vec::with_capacity((c + 1) * c);
    for i in 0..=c {
        let polar = std::f64::consts::PI * i as f64 / c as f64;
        for k in 0..c {
            let azimuth = std::f64::consts::TAU * k as f64 / c as f64;
            samples.push((objective(polar, azimuth), polar, azimuth));
        }
    }
    samples.sort_by(|a, b| {
        a.0.total_cmp(&b.0)
            .then(a.1.total_cmp(&b.1))
            .then(a.2.total_cmp(&b.2))
    });

    let unit = |polar: f64, azimuth: f64| -> [f64; 3] {
        [
            polar.sin() * azimuth.cos(),
            polar.sin() * azimuth.sin(),
            polar.cos(),
        ]
    };
    // Chordal separation of four coarse cells keeps neighbors of one minimum
    // from crowding out genuinely distinct basins.
    let separation = 4.0 * std::f64::consts::PI / c as f64;

    // A basin whose best sample trails the leader by more than the possible
    // sampling deficit cannot contain the true minimum; 2% of the observed
    // spread is an order of magnitude above that deficit.
    let spread = samples.last().map(|s| s.0 - samples[0].0).unwrap_or(0.0);
    let band = 0.02 * spread + 1e-9;

    let best_sample = samples[0].0;
    let mut candidates: Vec<(f64, f64)> = Vec::new();
    for &(value, polar, azimuth) in &samples {
        if value > best_sample + band || candidates.len() >= MAX_CANDIDATES {
            break;
        }
        let n = unit(polar, azimuth);
        let far_enough = candidates.iter().all(|&(cp, ca)| {
            let m = unit(cp, ca);
            let direct: f64 = (0..3).map(|i| (n[i] - m[i]).powi(2)).sum();
            let mirrored: f64 = (0..3).map(|i| (n[i] + m[i]).powi(2)).sum();
            direct.sqrt().min(mirrored.sqrt()) >= separation
        });
        if far_enough {
            candidates.push((polar, azimuth));
        }
    }

    let mut best = MeasurementDirection {
        polar: samples[0].1,
        azimuth: samples[0].2,
    };
    let mut best_value = best_sample;
    for (start_polar, start_azimuth) in candidates {
        let mut local = MeasurementDirection {
            polar: start_polar,
            azimuth: start_azimuth,
        };
        let mut local_value = objective(start_polar, start_azimuth);

        let mut polar_window = std::f64::consts::PI;
        let mut azimuth_window = std::f64::consts::TAU;
        for _ in 0..grid.refine_rounds {
            polar_window *= grid.refine_shrink;
            azimuth_window *= grid.refine_shrink;
            let center = local;
            // With an even sample count the window midpoint (the incumbent)
            // is re-sampled, so a round can only improve the value.
            for i in 0..=c {
                let polar = (center.polar - 0.5 * polar_window
                    + polar_window * i as f64 / c as f64)
                    .clamp(0.0, std::f64::consts::PI);
                for k in 0..=c {
                    let azimuth = center.azimuth - 0.5 * azimuth_window
                        + azimuth_window * k as f64 / c as f64;
                    let value = objective(polar, azimuth);
                    if value < local_value {
                        local_value = value;
                        local = MeasurementDirection { polar, azimuth };
                    }
                }
            }
        }

        // Axis polish: full-range 1-D shrinking re-grids, azimuth (the steep
        // coordinate at an equatorial optimum) first, run twice over.
        for _ in 0..2 {
            for axis in [1, 0] {
                let mut window = if axis == 0 {
                    std::f64::consts::PI
                } else {
                    std::f64::consts::TAU
                };
                for _ in 0..POLISH_ROUNDS {
                    let center = local;
                    for i in 0..=c {
                        let offset = -0.5 * window + window * i as f64 / c as f64;
                        let (polar, azimuth) = if axis == 0 {
                            (
                                (center.polar + offset).clamp(0.0, std::f64::consts::PI),
                                center.azimuth,
                            )
                        } else {
                            (center.polar, center.azimuth + offset)
                        };
                        let value = objective(polar, azimuth);
                        if value < local_value {
                            local_value = value;
                            local = MeasurementDirection { polar, azimuth };
                        }
                    }
                    window *= POLISH_SHRINK;
                }
            }
        }

        if local_value < best_value {
            best_value = local_value;
            best = local;
        }
    }

    (best, best_value)
}

/// Rank-1 projector onto the Bloch direction (polar, azimuth).
fn projector(polar: f64, azimuth: f64) -> Matrix2<C64> {
    let (nx, ny, nz) = (
        polar.sin() * azimuth.cos(),
        polar.sin() * azimuth.sin(),
        polar.cos(),
    );
    Matrix2::new(
        C64::new(0.5 * (1.0 + nz), 0.0),
        C64::new(0.5 * nx, -0.5 * ny),
        C64::new(0.5 * nx, 0.5 * ny),
        C64::new(0.5 * (1.0 - nz), 0.0),
    )
}

/// Reduced matrix of the first qubit, Tr_B ρ.
fn trace_out_second(rho: &Matrix4<C64>) -> Matrix2<C64> {
    Matrix2::new(
        rho[(0, 0)] + rho[(1, 1)],
        rho[(0, 2)] + rho[(1, 3)],
        rho[(2, 0)] + rho[(3, 1)],
        rho[(2, 2)] + rho[(3, 3)],
    )
}

/// Reduced matrix of the second qubit, Tr_A ρ.
fn trace_out_first(rho: &Matrix4<C64>) -> Matrix2<C64> {
    Matrix2::new(
        rho[(0, 0)] + rho[(2, 2)],
        rho[(0, 1)] + rho[(2, 3)],
        rho[(1, 0)] + rho[(3, 2)],
        rho[(1, 1)] + rho[(3, 3)],
    )
}

/// Von Neumann entropy of a qubit density matrix, in bits.
fn entropy_qubit(rho: &Matrix2<C64>) -> f64 {
    let trace = (rho[(0, 0)] + rho[(1, 1)]).re;
    let delta = (rho[(0, 0)] - rho[(1, 1)]).re;
    let radius = (delta * delta + 4.0 * rho[(0, 1)].norm_sqr()).sqrt();
    binary_entropy_clamped(0.5 * (trace + radius))
}

/// Von Neumann entropy of a two-qubit density matrix from a dense Hermitian
/// eigensolver, in bits.
fn entropy_dense(rho: &Matrix4<C64>) -> f64 {
    SymmetricEigen::new(*rho)
        .eigenvalues
        .iter()
        .map(|&e| {
            if e > 0.0 {
                -e * e.log2()
            } else {
                0.0
            }
        })
        .sum()
}

/// Upper-bound estimate of the quantum discord by explicit minimization over
/// rank-1 projective measurements on the second qubit.
///
/// For each sampled direction the conditional entropy Σₖ pₖ S(ρ_{A|k}) is
/// evaluated from dense partial traces; the returned value
/// I(ρ) − S(ρ_A) + min converges to the discord from above as the grid
/// refines.
pub fn discord_bruteforce(state: &TwoQubitXState, grid: &GridSpec) -> f64 {
    let rho = state.to_matrix();
    let s_a = entropy_qubit(&trace_out_second(&rho));
    let s_b = entropy_qubit(&trace_out_first(&rho));
    let s_ab = entropy_dense(&rho);
    let mutual_info = s_a + s_b - s_ab;

    let view = rho; // captured by the closure below
    let conditional = |polar: f64, azimuth: f64| -> f64 {
        let proj = projector(polar, azimuth);
        let mut total = 0.0;
        for flip in [false, true] {
            let pk = if flip {
                Matrix2::identity() - proj
            } else {
                proj
            };
            // M_{a a'} = Σ_{b b'} ρ_{(a b),(a' b')} Π_{b' b}
            let mut m = Matrix2::zeros();
            for a in 0..2 {
                for ap in 0..2 {
                    let mut acc = C64::new(0.0, 0.0);
                    for b in 0..2 {
                        for bp in 0..2 {
                            acc += view[(2 * a + b, 2 * ap + bp)] * pk[(bp, b)];
                        }
                    }
                    m[(a, ap)] = acc;
                }
            }
            let weight = (m[(0, 0)] + m[(1, 1)]).re;
            if weight > 1e-14 {
                let delta = (m[(0, 0)] - m[(1, 1)]).re;
                let radius = (delta * delta + 4.0 * m[(0, 1)].norm_sqr()).sqrt();
                total += weight * binary_entropy_clamped(0.5 * (1.0 + radius / weight));
            }
        }
        total
    };

    let (_, min_conditional) = minimize_over_directions(grid, conditional);
    mutual_info - s_a + min_conditional
}

/// Upper-bound estimate of the (unnormalized) geometric discord by explicit
/// minimization of the squared Hilbert-Schmidt distance to the projective
/// dephasings of the state on the first qubit.
pub fn gmqd_bruteforce(state: &TwoQubitXState, grid: &GridSpec) -> f64 {
    let rho = state.to_matrix();
    let identity = Matrix2::<C64>::identity();

    let objective = |polar: f64, azimuth: f64| -> f64 {
        let proj = projector(polar, azimuth);
        let k_plus = proj.kronecker(&identity);
        let k_minus = (identity - proj).kronecker(&identity);
        let dephased = k_plus * rho * k_plus + k_minus * rho * k_minus;
        (rho - dephased).iter().map(|z| z.norm_sqr()).sum()
    };

    let (_, min_distance) = minimize_over_directions(grid, objective);
    min_distance
}
