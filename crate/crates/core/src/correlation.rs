//! Second moments of observables under a state: variances, pairwise
//! correlations `tr(ρ A B)`, the correlation matrix built from them, and its
//! symmetrized part.

use crate::error::{Error, Result};
use crate::linalg::{eig_hermitian, Complex, ComplexMatrix};
use crate::quantum_state::{check_dims, min_eigenvalue, real_part, DensityMatrix, Observable};

/// Hermiticity tolerance for `S`, scaled by `1 + ‖S‖_F`.
pub const S_HERMITIAN_TOL: f64 = 1e-12;
/// Positivity tolerance for `S`, scaled by `1 + ‖S‖_F`.
pub const S_PSD_TOL: f64 = 1e-10;

/// `tr(ρ O²)`.
pub fn variance(rho: &DensityMatrix, o: &Observable) -> Result<f64> {
    check_dims(rho, o)?;
    let sq = o.matrix().mat_mul(o.matrix())?;
    let z = rho.matrix().mat_mul(&sq)?.trace();
    real_part(z, sq.frobenius_norm())
}

/// `tr(ρ A B)`. Order matters when `A` and `B` do not commute.
pub fn correlate(rho: &DensityMatrix, a: &Observable, b: &Observable) -> Result<Complex> {
    check_dims(rho, a)?;
    check_dims(rho, b)?;
    let ab = a.matrix().mat_mul(b.matrix())?;
    Ok(rho.matrix().mat_mul(&ab)?.trace())
}

/// `S_ij = tr(ρ O_i O_j)` together with the state and observables it came from.
#[derive(Debug, Clone)]
pub struct CorrelationMatrix {
    s: ComplexMatrix,
    observables: Vec<Observable>,
    rho: DensityMatrix,
}

impl CorrelationMatrix {
    pub fn matrix(&self) -> &ComplexMatrix {
        &self.s
    }

    pub fn observables(&self) -> &[Observable] {
        &self.observables
    }

    pub fn rho(&self) -> &DensityMatrix {
        &self.rho
    }

    pub fn len(&self) -> usize {
        self.observables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.observables.is_empty()
    }

    /// Smallest eigenvalue of `S`.
    pub fn min_eigenvalue(&self) -> f64 {
        min_eigenvalue(&self.s).expect("validated correlation matrix is Hermitian")
    }
}

/// Builds the correlation matrix, each entry evaluated independently.
pub fn correlation_matrix(
    rho: &DensityMatrix,
    observables: &[Observable],
) -> Result<CorrelationMatrix> {
    let n = observables.len();
    if n < 2 {
        return Err(Error::TooFewObservables(n));
    }
    for o in observables {
        check_dims(rho, o)?;
    }
    let mut entries = Vec::with_capacity(n * n);
    for a in observables {
        for b in observables {
            entries.push(correlate(rho, a, b)?);
        }
    }
    let s = ComplexMatrix::from_row_major(n, entries)?;
    let scale = 1.0 + s.frobenius_norm();

    let residual = s.hermitian_residual();
    if residual > S_HERMITIAN_TOL * scale {
        return Err(Error::Invariant {
            name: "correlation matrix Hermitian",
            residual,
            tolerance: S_HERMITIAN_TOL * scale,
        });
    }
    for i in 0..n {
        let d = s.get(i, i);
        if d.re < -S_HERMITIAN_TOL * scale {
            return Err(Error::Invariant {
                name: "correlation diagonal nonnegative",
                residual: -d.re,
                tolerance: S_HERMITIAN_TOL * scale,
            });
        }
    }
    let lowest = *eig_hermitian(&s)?
        .eigenvalues()
        .last()
        .expect("nonempty spectrum");
    if lowest < -S_PSD_TOL * scale {
        return Err(Error::Invariant {
            name: "correlation matrix positive semidefinite",
            residual: -lowest,
            tolerance: S_PSD_TOL * scale,
        });
    }

    Ok(CorrelationMatrix {
        s,
        observables: observables.to_vec(),
        rho: rho.clone(),
    })
}

/// `φ_ij = ½(S_ij + S_ji)`.
#[derive(Debug, Clone)]
pub struct SymmetrizedCorrelation {
    phi: ComplexMatrix,
}

impl SymmetrizedCorrelation {
    pub fn matrix(&self) -> &ComplexMatrix {
        &self.phi
    }

    /// Entries as real numbers, row by row.
    pub fn real_rows(&self) -> Vec<Vec<f64>> {
        self.phi
            .rows()
            .map(|row| row.iter().map(|z| z.re).collect())
            .collect()
    }

    /// `max_ij max(|φ_ij - φ_ji|, |Im φ_ij|)`.
    pub fn symmetry_residual(&self) -> f64 {
        let n = self.phi.dim();
        let mut worst = 0.0_f64;
        for i in 0..n {
            for j in 0..n {
                let z = self.phi.get(i, j);
                worst = worst.max(z.im.abs()).max((z - self.phi.get(j, i)).norm());
            }
        }
        worst
    }
}

pub fn symmetrize(s: &CorrelationMatrix) -> SymmetrizedCorrelation {
    let m = &s.s;
    let n = m.dim();
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            entries.push((m.get(i, j) + m.get(j, i)) * 0.5);
        }
    }
    SymmetrizedCorrelation {
        phi: ComplexMatrix::from_row_major(n, entries).expect("finite entries"),
    }
}
