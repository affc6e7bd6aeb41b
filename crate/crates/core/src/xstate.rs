//! Two-qubit X states and their correlation measures.
//!
//! An X state has nonzero entries only on the main diagonal and the
//! anti-diagonal of its 4x4 density matrix, in the product basis
//! |↑↑⟩, |↑↓⟩, |↓↑⟩, |↓↓⟩ (↑ is the σz = +1 eigenstate):
//!
//! ```text
//!         ⎛ d1  0   0   a  ⎞
//!   ρ  =  ⎜ 0   d2  b   0  ⎟
//!         ⎜ 0   b*  d3  0  ⎟
//!         ⎝ a*  0   0   d4 ⎠
//! ```
//!
//! All spectral and correlation quantities of such states are available in
//! closed form; entropies are in bits (log base 2) throughout.

use nalgebra::Matrix4;
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Default tolerance for positivity checks at construction.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;
/// Tolerance for the unit-trace check at construction.
pub const TRACE_TOLERANCE: f64 = 1e-12;

/// x·log2(x) with the convention 0·log2(0) = 0.
#[inline]
fn plog2(x: f64) -> f64 {
    if x > 0.0 {
        x * x.log2()
    } else {
        0.0
    }
}

/// Shannon binary entropy H(x) = −x log2 x − (1−x) log2 (1−x), in bits.
///
/// Inputs within 1e-12 outside [0, 1] are clamped; anything further out is a
/// domain error.
pub fn binary_entropy(x: f64) -> Result<f64> {
    if !(-1e-12..=1.0 + 1e-12).contains(&x) {
        return Err(Error::EntropyDomain(x));
    }
    Ok(binary_entropy_clamped(x))
}

/// Binary entropy with silent clamping to [0, 1]; used internally where the
/// argument is a probability by construction.
#[inline]
pub(crate) fn binary_entropy_clamped(x: f64) -> f64 {
    let x = x.clamp(0.0, 1.0);
    -plog2(x) - plog2(1.0 - x)
}

/// The four closed-form eigenvalues of an X state.
///
/// `eps1` ≥ `eps2` come from the outer (d1, d4, a) block, `eps3` ≥ `eps4`
/// from the inner (d2, d3, b) block.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralData {
    pub eps1: f64,
    pub eps2: f64,
    pub eps3: f64,
    pub eps4: f64,
}

impl SpectralData {
    pub fn as_array(&self) -> [f64; 4] {
        [self.eps1, self.eps2, self.eps3, self.eps4]
    }
}

/// Bloch decomposition ρ = ¼(σ0⊗σ0 + Σ xᵢ σᵢ⊗σ0 + Σ yᵢ σ0⊗σᵢ + Σ Rᵢⱼ σᵢ⊗σⱼ).
///
/// `x` and `y` are the local Bloch vectors of the first and second qubit,
/// `r[i][j]` = Tr(ρ σᵢ₊₁⊗σⱼ₊₁) the correlation tensor. For an X state the
/// only nonzero entries are x3, y3, R11, R12, R21, R22 and R33.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlochDecomposition {
    pub x: [f64; 3],
    pub y: [f64; 3],
    pub r: [[f64; 3]; 3],
}

/// Correlation measures of one state, all entropic quantities in bits.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CorrelationReport {
    /// Quantum discord, min(q1, q2).
    pub qd: f64,
    /// Geometric discord normalized to [0, 1] (twice the Hilbert-Schmidt value).
    pub gmqd_normalized: f64,
    /// Classical correlation, mutual_info − qd.
    pub classical: f64,
    /// Quantum mutual information.
    pub mutual_info: f64,
    /// Discord branch reached by the optimal equatorial measurement.
    pub q1: f64,
    /// Discord branch reached by the σz measurement.
    pub q2: f64,
}

/// A validated two-qubit X-state density matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwoQubitXState {
    d1: f64,
    d2: f64,
    d3: f64,
    d4: f64,
    a: C64,
    b: C64,
}

impl TwoQubitXState {
    /// Build a state from its seven parameters, validating unit trace,
    /// positive semidefiniteness and the 2x2 block coherence bounds at the
    /// default tolerance.
    pub fn new(d1: f64, d2: f64, d3: f64, d4: f64, a: C64, b: C64) -> Result<Self> {
        Self::with_tolerance(d1, d2, d3, d4, a, b, DEFAULT_TOLERANCE)
    }

    /// Like [`TwoQubitXState::new`] with a caller-chosen positivity
    /// tolerance. Channel-evolved analytic states accrue rounding error, so
    /// their construction uses a looser bound than the default.
    pub fn with_tolerance(
        d1: f64,
        d2: f64,
        d3: f64,
        d4: f64,
        a: C64,
        b: C64,
        tol: f64,
    ) -> Result<Self> {
        let trace = d1 + d2 + d3 + d4;
        if (trace - 1.0).abs() > TRACE_TOLERANCE {
            return Err(Error::UnitTrace(trace));
        }
        let state = Self {
            d1,
            d2,
            d3,
            d4,
            a,
            b,
        };
        let spectrum = state.eigenvalues();
        let min_eig = spectrum
            .as_array()
            .into_iter()
            .fold(f64::INFINITY, f64::min);
        if min_eig < -tol {
            return Err(Error::Positivity(min_eig));
        }
        if a.norm_sqr() > d1 * d4 + tol {
            return Err(Error::CoherenceBound {
                coherence: "a",
                value: a.norm_sqr(),
                bound: d1 * d4,
            });
        }
        if b.norm_sqr() > d2 * d3 + tol {
            return Err(Error::CoherenceBound {
                coherence: "b",
                value: b.norm_sqr(),
                bound: d2 * d3,
            });
        }
        Ok(state)
    }

    /// Reconstruct an X state from a dense 4x4 matrix.
    ///
    /// Fails if the matrix is not Hermitian or carries entries outside the X
    /// pattern larger than `x_tol`; the state itself is then validated at
    /// tolerance `tol`.
    pub fn from_matrix(m: &Matrix4<C64>, x_tol: f64, tol: f64) -> Result<Self> {
        let asym = (0..4)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .map(|(i, j)| (m[(i, j)] - m[(j, i)].conj()).norm())
            .fold(0.0, f64::max);
        if asym > x_tol {
            return Err(Error::NotHermitian(asym));
        }
        let off_x = [
            (0, 1),
            (0, 2),
            (1, 3),
            (2, 3),
            (1, 0),
            (2, 0),
            (3, 1),
            (3, 2),
        ]
        .into_iter()
        .map(|(i, j)| m[(i, j)].norm())
        .fold(0.0, f64::max);
        if off_x > x_tol {
            return Err(Error::NotXForm(off_x));
        }
        // Hermiticity already checked, so symmetrizing just removes rounding noise.
        let a = (m[(0, 3)] + m[(3, 0)].conj()) * 0.5;
        let b = (m[(1, 2)] + m[(2, 1)].conj()) * 0.5;
        Self::with_tolerance(
            m[(0, 0)].re,
            m[(1, 1)].re,
            m[(2, 2)].re,
            m[(3, 3)].re,
            a,
            b,
            tol,
        )
    }

    pub fn d1(&self) -> f64 {
        self.d1
    }
    pub fn d2(&self) -> f64 {
        self.d2
    }
    pub fn d3(&self) -> f64 {
        self.d3
    }
    pub fn d4(&self) -> f64 {
        self.d4
    }
    /// Anti-diagonal coherence ρ14.
    pub fn a(&self) -> C64 {
        self.a
    }
    /// Inner coherence ρ23.
    pub fn b(&self) -> C64 {
        self.b
    }

    /// The dense 4x4 density matrix.
    pub fn to_matrix(&self) -> Matrix4<C64> {
        let z = C64::new(0.0, 0.0);
        let c = |x: f64| C64::new(x, 0.0);
        Matrix4::new(
            c(self.d1),
            z,
            z,
            self.a,
            z,
            c(self.d2),
            self.b,
            z,
            z,
            self.b.conj(),
            c(self.d3),
            z,
            self.a.conj(),
            z,
            z,
            c(self.d4),
        )
    }

    /// Closed-form eigenvalues; the outer block pair comes first.
    pub fn eigenvalues(&self) -> SpectralData {
        let outer = ((self.d1 - self.d4).powi(2) + 4.0 * self.a.norm_sqr()).sqrt();
        let inner = ((self.d2 - self.d3).powi(2) + 4.0 * self.b.norm_sqr()).sqrt();
        SpectralData {
            eps1: 0.5 * (self.d1 + self.d4 + outer),
            eps2: 0.5 * (self.d1 + self.d4 - outer),
            eps3: 0.5 * (self.d2 + self.d3 + inner),
            eps4: 0.5 * (self.d2 + self.d3 - inner),
        }
    }

    /// Von Neumann entropies (S(ρA), S(ρB)) of the one-qubit marginals.
    ///
    /// Both marginals of an X state are diagonal: ρA = diag(d1+d2, d3+d4)
    /// and ρB = diag(d1+d3, d2+d4).
    pub fn marginal_entropies(&self) -> (f64, f64) {
        (
            binary_entropy_clamped(self.d1 + self.d2),
            binary_entropy_clamped(self.d1 + self.d3),
        )
    }

    /// Σᵢ εᵢ log2 εᵢ over the four eigenvalues, with values in [−1e-10, 0)
    /// clamped to zero first.
    fn eigenvalue_log_sum(&self) -> f64 {
        self.eigenvalues()
            .as_array()
            .into_iter()
            .map(|e| plog2(e.max(0.0)))
            .sum()
    }

    /// Quantum mutual information I(ρ) = S(ρA) + S(ρB) + Σᵢ εᵢ log2 εᵢ.
    pub fn mutual_information(&self) -> f64 {
        let (sa, sb) = self.marginal_entropies();
        sa + sb + self.eigenvalue_log_sum()
    }

    /// Quantum discord of the state, together with both branch values, the
    /// classical correlation and the mutual information. The geometric
    /// measure is filled in as well since it is cheap to evaluate.
    ///
    /// The two branches correspond to the two candidate optimal projective
    /// measurements on the second qubit: q1 is reached by the best
    /// equatorial direction, q2 by the σz measurement. Ties resolve to q1.
    pub fn quantum_discord(&self) -> CorrelationReport {
        let eig_sum = self.eigenvalue_log_sum();
        let s_b = binary_entropy_clamped(self.d1 + self.d3);
        let mutual_info = binary_entropy_clamped(self.d1 + self.d2) + s_b + eig_sum;

        let radial = ((1.0 - 2.0 * (self.d3 + self.d4)).powi(2)
            + 4.0 * (self.a.norm() + self.b.norm()).powi(2))
        .sqrt();
        let dd1 = binary_entropy_clamped(0.5 * (1.0 + radial));
        let dd2 = -[self.d1, self.d2, self.d3, self.d4]
            .into_iter()
            .map(plog2)
            .sum::<f64>()
            - s_b;

        let q1 = s_b + eig_sum + dd1;
        let q2 = s_b + eig_sum + dd2;
        let qd = if q2 < q1 { q2 } else { q1 };

        CorrelationReport {
            qd,
            gmqd_normalized: self.gmqd(true),
            classical: mutual_info - qd,
            mutual_info,
            q1,
            q2,
        }
    }

    /// Bloch vectors and correlation tensor of the state.
    ///
    /// Nonzero entries for an X state, derived from Tr(ρ σᵢ⊗σⱼ) with the
    /// standard Pauli matrices:
    ///   x3 = d1+d2−d3−d4, y3 = d1−d2+d3−d4,
    ///   R11 = 2 Re(a+b), R22 = 2 Re(b−a),
    ///   R12 = 2 Im(b−a), R21 = −2 Im(a+b),
    ///   R33 = d1−d2−d3+d4.
    pub fn bloch_decomposition(&self) -> BlochDecomposition {
        let mut r = [[0.0; 3]; 3];
        r[0][0] = 2.0 * (self.a.re + self.b.re);
        r[1][1] = 2.0 * (self.b.re - self.a.re);
        r[0][1] = 2.0 * (self.b.im - self.a.im);
        r[1][0] = -2.0 * (self.a.im + self.b.im);
        r[2][2] = self.d1 - self.d2 - self.d3 + self.d4;
        BlochDecomposition {
            x: [0.0, 0.0, self.d1 + self.d2 - self.d3 - self.d4],
            y: [0.0, 0.0, self.d1 - self.d2 + self.d3 - self.d4],
            r,
        }
    }

    /// Geometric measure of quantum discord, ¼(‖x‖² + ‖R‖² − k_max) with
    /// k_max the largest eigenvalue of K = x xᵀ + R Rᵀ. With `normalized`
    /// the value is doubled so the maximum (reached by Bell states) is 1.
    ///
    /// For an X state K is block diagonal: a 2x2 block from the upper-left
    /// corner of R and a scalar x3² + R33², so k_max is available in closed
    /// form.
    pub fn gmqd(&self, normalized: bool) -> f64 {
        let bloch = self.bloch_decomposition();
        let x3 = bloch.x[2];
        let [r11, r12] = [bloch.r[0][0], bloch.r[0][1]];
        let [r21, r22] = [bloch.r[1][0], bloch.r[1][1]];
        let r33 = bloch.r[2][2];

        let norm_x2 = x3 * x3;
        let norm_r2 = r11 * r11 + r12 * r12 + r21 * r21 + r22 * r22 + r33 * r33;

        let k11 = r11 * r11 + r12 * r12;
        let k22 = r21 * r21 + r22 * r22;
        let k12 = r11 * r21 + r12 * r22;
        let block_max = 0.5 * (k11 + k22) + 0.5 * ((k11 - k22).powi(2) + 4.0 * k12 * k12).sqrt();
        let k_max = block_max.max(norm_x2 + r33 * r33);

        let gmqd = 0.25 * (norm_x2 + norm_r2 - k_max);
        if normalized {
            2.0 * gmqd
        } else {
            gmqd
        }
    }
}

impl std::fmt::Display for TwoQubitXState {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "d1 = {:.12e}", self.d1)?;
        writeln!(f, "d2 = {:.12e}", self.d2)?;
        writeln!(f, "d3 = {:.12e}", self.d3)?;
        writeln!(f, "d4 = {:.12e}", self.d4)?;
        writeln!(f, "a  = {:.12e} {:+.12e}i", self.a.re, self.a.im)?;
        write!(f, "b  = {:.12e} {:+.12e}i", self.b.re, self.b.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::{random_x_state, SplitMix64};
    use nalgebra::linalg::SymmetricEigen;

    fn bell() -> TwoQubitXState {
        TwoQubitXState::new(0.5, 0.0, 0.0, 0.5, C64::new(0.5, 0.0), C64::new(0.0, 0.0)).unwrap()
    }

    fn maximally_mixed() -> TwoQubitXState {
        TwoQubitXState::new(
            0.25,
            0.25,
            0.25,
            0.25,
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
        )
        .unwrap()
    }

    #[test]
    fn binary_entropy_examples() {
        assert_eq!(binary_entropy(0.5).unwrap(), 1.0);
        assert_eq!(binary_entropy(0.0).unwrap(), 0.0);
        assert_eq!(binary_entropy(1.0).unwrap(), 0.0);
        // Direct evaluation of −x log2 x − (1−x) log2(1−x) at x = 1/4.
        assert!((binary_entropy(0.25).unwrap() - 0.811278124459133).abs() < 1e-14);
    }

    #[test]
    fn binary_entropy_domain() {
        assert!(binary_entropy(-1e-13).unwrap() == 0.0);
        assert!(binary_entropy(1.0 + 1e-13).unwrap() == 0.0);
        assert!(matches!(
            binary_entropy(-1e-6),
            Err(Error::EntropyDomain(_))
        ));
        assert!(matches!(
            binary_entropy(1.0 + 1e-6),
            Err(Error::EntropyDomain(_))
        ));
    }

    #[test]
    fn construction_rejects_bad_trace() {
        let z = C64::new(0.0, 0.0);
        assert!(matches!(
            TwoQubitXState::new(0.5, 0.0, 0.0, 0.6, z, z),
            Err(Error::UnitTrace(_))
        ));
    }

    #[test]
    fn construction_rejects_oversized_coherence() {
        let r = TwoQubitXState::new(
            0.4,
            0.1,
            0.1,
            0.4,
            C64::new(0.5, 0.0),
            C64::new(0.0, 0.0),
        );
        assert!(matches!(r, Err(Error::Positivity(_))));
    }

    #[test]
    fn construction_rejects_negative_population() {
        let z = C64::new(0.0, 0.0);
        let r = TwoQubitXState::new(-0.1, 0.4, 0.4, 0.3, z, z);
        assert!(matches!(r, Err(Error::Positivity(_))));
    }

    #[test]
    fn eigenvalues_bell_and_mixed() {
        let e = bell().eigenvalues().as_array();
        assert!((e[0] - 1.0).abs() < 1e-15);
        assert!(e[1].abs() < 1e-15 && e[2].abs() < 1e-15 && e[3].abs() < 1e-15);

        let e = maximally_mixed().eigenvalues().as_array();
        for v in e {
            assert!((v - 0.25).abs() < 1e-15);
        }
    }

    #[test]
    fn eigenvalues_match_dense_solver() {
        let mut rng = SplitMix64::new(0x5eed);
        for _ in 0..200 {
            let state = random_x_state(&mut rng);
            let mut closed = state.eigenvalues().as_array();
            closed.sort_by(|x, y| x.total_cmp(y));
            let dense = SymmetricEigen::new(state.to_matrix()).eigenvalues;
            let mut dense: Vec<f64> = dense.iter().copied().collect();
            dense.sort_by(|x, y| x.total_cmp(y));
            for (c, d) in closed.iter().zip(&dense) {
                assert!((c - d).abs() < 1e-12, "closed {c} vs dense {d}");
            }
        }
    }

    #[test]
    fn marginal_entropies_examples() {
        assert_eq!(bell().marginal_entropies(), (1.0, 1.0));
        let z = C64::new(0.0, 0.0);
        let pure_up = TwoQubitXState::new(1.0, 0.0, 0.0, 0.0, z, z).unwrap();
        assert_eq!(pure_up.marginal_entropies(), (0.0, 0.0));
    }

    #[test]
    fn mutual_information_examples() {
        assert!((bell().mutual_information() - 2.0).abs() < 1e-12);
        // Product diagonal state diag(p,1−p)⊗diag(q,1−q) carries no correlation.
        let (p, q) = (0.3, 0.85);
        let z = C64::new(0.0, 0.0);
        let product = TwoQubitXState::new(
            p * q,
            p * (1.0 - q),
            (1.0 - p) * q,
            (1.0 - p) * (1.0 - q),
            z,
            z,
        )
        .unwrap();
        assert!(product.mutual_information().abs() < 1e-12);
    }

    #[test]
    fn discord_bell_is_one() {
        let report = bell().quantum_discord();
        assert!((report.qd - 1.0).abs() < 1e-12);
        assert!((report.mutual_info - 2.0).abs() < 1e-12);
        assert!((report.classical - 1.0).abs() < 1e-12);
    }

    #[test]
    fn discord_classical_states_is_zero() {
        let z = C64::new(0.0, 0.0);
        let pure = TwoQubitXState::new(1.0, 0.0, 0.0, 0.0, z, z).unwrap();
        assert!(pure.quantum_discord().qd.abs() < 1e-12);
        let correlated = TwoQubitXState::new(0.5, 0.0, 0.0, 0.5, z, z).unwrap();
        assert!(correlated.quantum_discord().qd.abs() < 1e-12);
    }

    #[test]
    fn discord_is_min_of_branches_with_tie_to_q1() {
        // The maximally mixed state has Q1 = Q2 = 0; the tie must resolve to q1.
        let report = maximally_mixed().quantum_discord();
        assert_eq!(report.qd, report.q1);
        let mut rng = SplitMix64::new(42);
        for _ in 0..500 {
            let report = random_x_state(&mut rng).quantum_discord();
            assert_eq!(report.qd, report.q1.min(report.q2));
        }
    }

    #[test]
    fn bloch_decomposition_examples() {
        let d = maximally_mixed().bloch_decomposition();
        assert_eq!(d.x, [0.0; 3]);
        assert_eq!(d.y, [0.0; 3]);
        assert_eq!(d.r, [[0.0; 3]; 3]);

        let d = bell().bloch_decomposition();
        assert_eq!(d.x, [0.0; 3]);
        assert_eq!(d.y, [0.0; 3]);
        assert!((d.r[0][0] - 1.0).abs() < 1e-15);
        assert!((d.r[1][1] + 1.0).abs() < 1e-15);
        assert!((d.r[2][2] - 1.0).abs() < 1e-15);
        assert_eq!(d.r[0][1], 0.0);
        assert_eq!(d.r[1][0], 0.0);
    }

    #[test]
    fn bloch_matches_dense_pauli_traces() {
        let pauli = |k: usize| -> nalgebra::Matrix2<C64> {
            let z = C64::new(0.0, 0.0);
            match k {
                0 => nalgebra::Matrix2::new(
                    C64::new(1.0, 0.0),
                    z,
                    z,
                    C64::new(1.0, 0.0),
                ),
                1 => nalgebra::Matrix2::new(z, C64::new(1.0, 0.0), C64::new(1.0, 0.0), z),
                2 => nalgebra::Matrix2::new(z, C64::new(0.0, -1.0), C64::new(0.0, 1.0), z),
                _ => nalgebra::Matrix2::new(
                    C64::new(1.0, 0.0),
                    z,
                    z,
                    C64::new(-1.0, 0.0),
                ),
            }
        };
        let mut rng = SplitMix64::new(0xb10c);
        for _ in 0..100 {
            let state = random_x_state(&mut rng);
            let rho = state.to_matrix();
            let d = state.bloch_decomposition();
            for i in 1..=3 {
                let xi = (rho * pauli(i).kronecker(&pauli(0))).trace();
                let yi = (rho * pauli(0).kronecker(&pauli(i))).trace();
                assert!((xi.re - d.x[i - 1]).abs() < 1e-12);
                assert!((yi.re - d.y[i - 1]).abs() < 1e-12);
                assert!(xi.im.abs() < 1e-12 && yi.im.abs() < 1e-12);
                for j in 1..=3 {
                    let rij = (rho * pauli(i).kronecker(&pauli(j))).trace();
                    assert!(
                        (rij.re - d.r[i - 1][j - 1]).abs() < 1e-12,
                        "R{i}{j}: dense {} vs closed {}",
                        rij.re,
                        d.r[i - 1][j - 1]
                    );
                    assert!(rij.im.abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn gmqd_examples() {
        assert!((bell().gmqd(true) - 1.0).abs() < 1e-14);
        assert!((bell().gmqd(false) - 0.5).abs() < 1e-14);
        assert_eq!(maximally_mixed().gmqd(true), 0.0);
    }

    #[test]
    fn measures_depend_on_coherences_only_through_magnitudes() {
        let mut rng = SplitMix64::new(0xabcd);
        for _ in 0..500 {
            let state = random_x_state(&mut rng);
            let stripped = TwoQubitXState::new(
                state.d1(),
                state.d2(),
                state.d3(),
                state.d4(),
                C64::new(state.a().norm(), 0.0),
                C64::new(state.b().norm(), 0.0),
            )
            .unwrap();
            assert!((state.quantum_discord().qd - stripped.quantum_discord().qd).abs() < 1e-12);
            assert!((state.gmqd(true) - stripped.gmqd(true)).abs() < 1e-12);
        }
    }

    #[test]
    fn swap_symmetry_when_inner_populations_match() {
        let mut rng = SplitMix64::new(0x57a7e);
        for _ in 0..500 {
            let s = random_x_state(&mut rng);
            // Force d2 = d3 while keeping the trace; b stays within its bound
            // because the geometric mean can only grow.
            let mid = 0.5 * (s.d2() + s.d3());
            let b = if s.b().norm_sqr() <= mid * mid {
                s.b()
            } else {
                C64::new(mid, 0.0)
            };
            let sym = TwoQubitXState::new(s.d1(), mid, mid, s.d4(), s.a(), b).unwrap();
            let swapped = TwoQubitXState::new(s.d4(), mid, mid, s.d1(), s.a(), b).unwrap();
            assert!((sym.quantum_discord().qd - swapped.quantum_discord().qd).abs() < 1e-10);
            assert!((sym.gmqd(true) - swapped.gmqd(true)).abs() < 1e-10);
        }
    }

    #[test]
    fn report_identities_hold_on_random_states() {
        let mut rng = SplitMix64::new(0x1de57);
        for _ in 0..10_000 {
            let state = random_x_state(&mut rng);
            let r = state.quantum_discord();
            assert!(r.qd >= -1e-10, "qd = {}", r.qd);
            assert!(r.classical >= -1e-10, "classical = {}", r.classical);
            assert!((r.qd + r.classical - r.mutual_info).abs() < 1e-10);
            assert!(r.gmqd_normalized >= -1e-10 && r.gmqd_normalized <= 1.0 + 1e-10);
        }
    }

    #[test]
    fn from_matrix_round_trip_and_rejection() {
        let state = bell();
        let rebuilt = TwoQubitXState::from_matrix(&state.to_matrix(), 1e-12, 1e-10).unwrap();
        assert_eq!(state, rebuilt);

        let mut m = state.to_matrix();
        m[(0, 1)] = C64::new(1e-3, 0.0);
        m[(1, 0)] = C64::new(1e-3, 0.0);
        assert!(matches!(
            TwoQubitXState::from_matrix(&m, 1e-9, 1e-10),
            Err(Error::NotXForm(_))
        ));
    }
}
