//! Validated density matrices and observables.

use crate::error::{Error, Result};
use crate::linalg::{eig_hermitian, Complex, ComplexMatrix};

/// Tolerance for the Hermitian, unit-trace and positivity checks.
pub const STATE_TOL: f64 = 1e-10;
/// Largest imaginary part tolerated in a quantity that must be real.
pub const IMAG_TOL: f64 = 1e-12;

/// Hermitian, positive semidefinite, unit-trace operator.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        let residual = matrix.hermitian_residual();
        if residual > STATE_TOL {
            return Err(Error::DensityNotHermitian { residual });
        }
        let trace = matrix.trace();
        if (trace.re - 1.0).abs() > STATE_TOL || trace.im.abs() > STATE_TOL {
            return Err(Error::DensityTrace { trace: trace.re });
        }
        let lowest = min_eigenvalue(&matrix)?;
        if lowest < -STATE_TOL {
            return Err(Error::DensityNegative { eigenvalue: lowest });
        }
        Ok(Self { matrix })
    }

    /// `|ψ⟩⟨ψ|` for a normalized copy of `psi`.
    pub fn pure(psi: &[Complex]) -> Result<Self> {
        let norm = crate::linalg::norm(psi);
        if norm == 0.0 {
            return Err(Error::EmptyMatrix);
        }
        let n = psi.len();
        let mut entries = Vec::with_capacity(n * n);
        for a in psi {
            for b in psi {
                entries.push(a * b.conj() / (norm * norm));
            }
        }
        Self::new(ComplexMatrix::from_row_major(n, entries)?)
    }

    /// `I/n`.
    pub fn maximally_mixed(dim: usize) -> Self {
        Self {
            matrix: ComplexMatrix::identity(dim).scale(Complex::new(1.0 / dim as f64, 0.0)),
        }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// `tr(ρ²)`.
    pub fn purity(&self) -> f64 {
        let sq = self.matrix.mat_mul(&self.matrix).expect("square");
        sq.trace().re
    }

    /// Smallest eigenvalue of ρ.
    pub fn min_eigenvalue(&self) -> f64 {
        min_eigenvalue(&self.matrix).expect("validated density matrix is Hermitian")
    }
}

pub(crate) fn min_eigenvalue(m: &ComplexMatrix) -> Result<f64> {
    let eig = eig_hermitian(m)?;
    Ok(*eig.eigenvalues().last().expect("nonempty spectrum"))
}

/// Hermitian operator with a human-readable label.
#[derive(Debug, Clone)]
pub struct Observable {
    matrix: ComplexMatrix,
    label: String,
}

impl Observable {
    pub fn new(matrix: ComplexMatrix, label: impl Into<String>) -> Result<Self> {
        let label = label.into();
        let residual = matrix.hermitian_residual();
        if residual > STATE_TOL {
            return Err(Error::ObservableNotHermitian { label, residual });
        }
        Ok(Self { matrix, label })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }
}

pub(crate) fn check_dims(rho: &DensityMatrix, o: &Observable) -> Result<()> {
    if rho.dim() != o.dim() {
        return Err(Error::DimensionMismatch {
            left: rho.dim(),
            right: o.dim(),
        });
    }
    Ok(())
}

/// Extracts the real part after checking the imaginary part is negligible.
pub(crate) fn real_part(z: Complex, scale: f64) -> Result<f64> {
    if z.im.abs() > IMAG_TOL * scale.max(1.0) {
        return Err(Error::ComplexExpectation { imag: z.im });
    }
    Ok(z.re)
}

/// `⟨O⟩ = tr(ρO)`.
pub fn expectation(rho: &DensityMatrix, o: &Observable) -> Result<f64> {
    check_dims(rho, o)?;
    let z = rho.matrix.mat_mul(&o.matrix)?.trace();
    real_part(z, o.matrix.frobenius_norm())
}

/// `O - ⟨O⟩ I`, the zero-mean version of `o` under `rho`.
pub fn center(rho: &DensityMatrix, o: &Observable) -> Result<Observable> {
    let mean = expectation(rho, o)?;
    let shifted = o
        .matrix
        .sub(&ComplexMatrix::identity(o.dim()).scale(Complex::new(mean, 0.0)))?;
    Ok(Observable {
        matrix: shifted,
        label: o.label.clone(),
    })
}
