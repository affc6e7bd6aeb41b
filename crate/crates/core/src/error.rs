use thiserror::Error;

/// Errors produced by state construction, channel application, and the
/// exact oracles.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("density-matrix trace {0} differs from 1 beyond tolerance")]
    UnitTrace(f64),

    #[error("density matrix has negative eigenvalue {0}")]
    Positivity(f64),

    #[error("coherence |{coherence}|^2 = {value} exceeds its block bound {bound}")]
    CoherenceBound {
        coherence: &'static str,
        value: f64,
        bound: f64,
    },

    #[error("matrix is not Hermitian: asymmetry of magnitude {0}")]
    NotHermitian(f64),

    #[error("matrix is not X-form: off-pattern entry of magnitude {0}")]
    NotXForm(f64),

    #[error("binary entropy argument {0} lies outside [0, 1]")]
    EntropyDomain(f64),

    #[error("noise strength {0} lies outside [0, 1]")]
    NoiseStrength(f64),

    #[error("gamma_t must be nonnegative and finite, got {0}")]
    GammaT(f64),

    #[error("particle count {0} is outside the supported range {1}..={2}")]
    ParticleCount(u32, u32, u32),

    #[error("twisting angle must be finite, got {0}")]
    Angle(f64),

    #[error("exact oracle supports at most {max} qubits, got {n}")]
    RegisterTooLarge { n: u32, max: u32 },

    #[error("Kraus set violates completeness: defect {0}")]
    KrausCompleteness(f64),

    #[error("invalid grid specification: {0}")]
    GridSpec(String),

    #[error("invalid sweep specification: {0}")]
    SweepSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
