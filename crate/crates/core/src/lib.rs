//! Principal component analysis on the quantum correlation matrix
//! `S_ij = tr(ρ O_i O_j)` of a set of observables under a density matrix.
//!
//! The maximum-variance combination `P = Σ aᵢ Oᵢ` with `Σ|aᵢ|² = 1` is the
//! leading eigenvector of `S`. The [`qubit`] module works the Pauli example,
//! where the principal axes come out as the circular polarization basis.

pub mod correlation;
pub mod error;
pub mod linalg;
pub mod pca;
pub mod quantum_state;
pub mod qubit;

#[cfg(feature = "cli")]
pub mod cli;

pub use correlation::{
    correlate, correlation_matrix, symmetrize, variance, CorrelationMatrix, SymmetrizedCorrelation,
};
pub use error::{Error, Result};
pub use linalg::{eig_hermitian, Complex, ComplexMatrix, EigenDecomposition};
pub use pca::{
    cross_correlation, run_pca, sampling_oracle, variance_of_combination, CoefficientVector,
    PcaResult, PrincipalComponent,
};
pub use quantum_state::{center, expectation, DensityMatrix, Observable};
pub use qubit::{
    circular_basis, density_from_polarization, pauli, spin_pca_demo, Axis, AxisPair,
    PolarizationVector,
};
