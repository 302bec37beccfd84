use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix dimension must be positive")]
    EmptyMatrix,
    #[error("expected {} entries for a {dim}x{dim} matrix, got {len}", dim * dim)]
    EntryCount { dim: usize, len: usize },
    #[error("row {row} has {len} entries, expected {dim}")]
    RaggedRow { row: usize, len: usize, dim: usize },
    #[error("matrix entries must be finite")]
    NonFinite,
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("matrix is not Hermitian (residual {residual:.3e})")]
    NotHermitian { residual: f64 },
    #[error(
        "eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_diagonal:.3e})"
    )]
    NoConvergence { sweeps: usize, off_diagonal: f64 },

    #[error("density matrix is not Hermitian (residual {residual:.3e})")]
    DensityNotHermitian { residual: f64 },
    #[error("density matrix violates unit trace: trace = {trace}")]
    DensityTrace { trace: f64 },
    #[error("density matrix has negative eigenvalue {eigenvalue:.6e}")]
    DensityNegative { eigenvalue: f64 },
    #[error("observable `{label}` is not Hermitian (residual {residual:.3e})")]
    ObservableNotHermitian { label: String, residual: f64 },
    #[error("expectation value has imaginary part {imag:.3e}")]
    ComplexExpectation { imag: f64 },

    #[error("at least 2 observables are required, got {0}")]
    TooFewObservables(usize),
    #[error("coefficient vector has {got} entries, expected {expected}")]
    CoefficientCount { expected: usize, got: usize },
    #[error("coefficients violate the unit-norm constraint: sum |a_i|^2 = {norm_sqr}")]
    CoefficientNorm { norm_sqr: f64 },
    #[error("invariant `{name}` violated: residual {residual:.3e} exceeds {tolerance:.1e}")]
    Invariant {
        name: &'static str,
        residual: f64,
        tolerance: f64,
    },

    #[error("polarization vector has norm {norm} > 1")]
    Polarization { norm: f64 },
    #[error("axis pair must name two distinct axes")]
    IdenticalAxes,
    #[error("unknown axis `{0}`")]
    UnknownAxis(String),
}
