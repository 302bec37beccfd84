//! Principal components of a set of observables.
//!
//! A principal component is an operator `P = Σ aᵢ Oᵢ` with complex
//! coefficients constrained by `Σ |aᵢ|² = 1`. Its variance under ρ is
//! `tr(ρ P† P) = a† S a`, so the maximum-variance direction is the leading
//! eigenvector of the correlation matrix `S`, and the maximum is `λ₁`.
//! [`sampling_oracle`] checks that bound without touching the eigensolver.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::correlation::CorrelationMatrix;
use crate::error::{Error, Result};
use crate::linalg::{eig_hermitian, inner, Complex, ComplexMatrix};
use crate::quantum_state::{real_part, DensityMatrix, Observable};

/// Deviation from `Σ|aᵢ|² = 1` accepted before renormalizing.
pub const CONSTRAINT_TOL: f64 = 1e-9;
/// Eigenvalues closer than this are treated as one degenerate block.
pub const DEGENERACY_TOL: f64 = 1e-10;
const COMPONENT_TOL: f64 = 1e-10;

/// Unit-norm complex coefficient vector.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientVector(Vec<Complex>);

impl CoefficientVector {
    /// Accepts `a` when `|Σ|aᵢ|² - 1| ≤ 1e-9` and stores it renormalized.
    pub fn new(a: Vec<Complex>) -> Result<Self> {
        let norm_sqr: f64 = a.iter().map(|z| z.norm_sqr()).sum();
        if a.is_empty() || (norm_sqr - 1.0).abs() > CONSTRAINT_TOL {
            return Err(Error::CoefficientNorm { norm_sqr });
        }
        Ok(Self::normalize_unchecked(a, norm_sqr))
    }

    /// Scales any nonzero vector onto the unit sphere.
    pub fn normalized(a: Vec<Complex>) -> Result<Self> {
        let norm_sqr: f64 = a.iter().map(|z| z.norm_sqr()).sum();
        if norm_sqr == 0.0 || !norm_sqr.is_finite() {
            return Err(Error::CoefficientNorm { norm_sqr });
        }
        Ok(Self::normalize_unchecked(a, norm_sqr))
    }

    fn normalize_unchecked(mut a: Vec<Complex>, norm_sqr: f64) -> Self {
        let norm = norm_sqr.sqrt();
        for z in a.iter_mut() {
            *z /= norm;
        }
        Self(a)
    }

    pub fn as_slice(&self) -> &[Complex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// `P = Σ aᵢ Oᵢ`. Generally not Hermitian.
pub fn combine(a: &CoefficientVector, observables: &[Observable]) -> Result<ComplexMatrix> {
    if a.len() != observables.len() {
        return Err(Error::CoefficientCount {
            expected: observables.len(),
            got: a.len(),
        });
    }
    let first = observables.first().ok_or(Error::TooFewObservables(0))?;
    let mut p = ComplexMatrix::zeros(first.dim());
    for (ai, o) in a.as_slice().iter().zip(observables) {
        p = p.add(&o.matrix().scale(*ai))?;
    }
    Ok(p)
}

/// `tr(ρ P† P)` for `P = Σ aᵢ Oᵢ`.
pub fn variance_of_combination(
    rho: &DensityMatrix,
    a: &CoefficientVector,
    observables: &[Observable],
) -> Result<f64> {
    let p = combine(a, observables)?;
    operator_variance(rho, &p)
}

fn operator_variance(rho: &DensityMatrix, p: &ComplexMatrix) -> Result<f64> {
    let pp = p.adjoint().mat_mul(p)?;
    let z = rho.matrix().mat_mul(&pp)?.trace();
    real_part(z, pp.frobenius_norm())
}

/// `tr(ρ P₁† P₂)`.
pub fn operator_correlation(
    rho: &DensityMatrix,
    p1: &ComplexMatrix,
    p2: &ComplexMatrix,
) -> Result<Complex> {
    if rho.dim() != p1.dim() {
        return Err(Error::DimensionMismatch {
            left: rho.dim(),
            right: p1.dim(),
        });
    }
    Ok(rho.matrix().mat_mul(&p1.adjoint().mat_mul(p2)?)?.trace())
}

#[derive(Debug, Clone)]
pub struct PrincipalComponent {
    rank: usize,
    eigenvalue: f64,
    coefficients: CoefficientVector,
    operator: ComplexMatrix,
    variance: f64,
    degenerate: bool,
}

impl PrincipalComponent {
    /// 1 for the largest-variance component.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn eigenvalue(&self) -> f64 {
        self.eigenvalue
    }

    pub fn coefficients(&self) -> &CoefficientVector {
        &self.coefficients
    }

    pub fn operator(&self) -> &ComplexMatrix {
        &self.operator
    }

    /// `tr(ρ P† P)` measured directly on the operator.
    pub fn variance(&self) -> f64 {
        self.variance
    }

    /// Set when a neighbouring eigenvalue lies within [`DEGENERACY_TOL`].
    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }
}

/// `tr(ρ P₁† P₂)` between two components.
pub fn cross_correlation(
    rho: &DensityMatrix,
    p1: &PrincipalComponent,
    p2: &PrincipalComponent,
) -> Result<Complex> {
    operator_correlation(rho, &p1.operator, &p2.operator)
}

#[derive(Debug, Clone)]
pub struct PcaResult {
    components: Vec<PrincipalComponent>,
    source: CorrelationMatrix,
}

impl PcaResult {
    pub fn components(&self) -> &[PrincipalComponent] {
        &self.components
    }

    pub fn source(&self) -> &CorrelationMatrix {
        &self.source
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        self.components.iter().map(|c| c.eigenvalue).collect()
    }

    /// Largest `|tr(ρ Pᵢ† Pⱼ)|` over `i ≠ j`.
    pub fn max_cross_correlation(&self) -> f64 {
        let rho = self.source.rho();
        let mut worst = 0.0_f64;
        for (i, a) in self.components.iter().enumerate() {
            for b in &self.components[i + 1..] {
                let z = cross_correlation(rho, a, b).expect("components share a dimension");
                worst = worst.max(z.norm());
            }
        }
        worst
    }

    /// Largest `|⟨aᵢ, aⱼ⟩ - δᵢⱼ|` over coefficient vectors.
    pub fn orthonormality_residual(&self) -> f64 {
        let mut worst = 0.0_f64;
        for (i, a) in self.components.iter().enumerate() {
            for (j, b) in self.components.iter().enumerate() {
                let target = if i == j { 1.0 } else { 0.0 };
                let z = inner(a.coefficients.as_slice(), b.coefficients.as_slice());
                worst = worst.max((z - target).norm());
            }
        }
        worst
    }
}

/// Diagonalizes `S` and assembles one component per eigenpair.
pub fn run_pca(s: &CorrelationMatrix) -> Result<PcaResult> {
    let eig = eig_hermitian(s.matrix())?;
    let rho = s.rho();
    let scale = 1.0 + s.matrix().frobenius_norm();
    let values = eig.eigenvalues();
    let mut components = Vec::with_capacity(values.len());
    for (idx, (&eigenvalue, vector)) in values.iter().zip(eig.eigenvectors()).enumerate() {
        let near =
            |other: Option<&f64>| other.is_some_and(|&o| (o - eigenvalue).abs() < DEGENERACY_TOL);
        let degenerate =
            near(idx.checked_sub(1).and_then(|k| values.get(k))) || near(values.get(idx + 1));

        if eigenvalue < -COMPONENT_TOL * scale {
            return Err(Error::Invariant {
                name: "component eigenvalue nonnegative",
                residual: -eigenvalue,
                tolerance: COMPONENT_TOL * scale,
            });
        }
        let coefficients = CoefficientVector::new(vector.clone())?;
        let operator = combine(&coefficients, s.observables())?;
        let variance = operator_variance(rho, &operator)?;
        let residual = (variance - eigenvalue).abs();
        if residual > COMPONENT_TOL * scale {
            return Err(Error::Invariant {
                name: "component variance equals eigenvalue",
                residual,
                tolerance: COMPONENT_TOL * scale,
            });
        }
        components.push(PrincipalComponent {
            rank: idx + 1,
            eigenvalue,
            coefficients,
            operator,
            variance,
            degenerate,
        });
    }
    Ok(PcaResult {
        components,
        source: s.clone(),
    })
}

/// Stream of `a† S a` for unit vectors `a` drawn uniformly from the complex
/// unit sphere (normalized complex standard normals), seeded deterministically.
pub fn rayleigh_samples(s: &ComplexMatrix, seed: u64) -> impl Iterator<Item = f64> + '_ {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut a = vec![Complex::new(0.0, 0.0); s.dim()];
    std::iter::repeat_with(move || loop {
        for z in a.iter_mut() {
            *z = Complex::new(
                StandardNormal.sample(&mut rng),
                StandardNormal.sample(&mut rng),
            );
        }
        let norm_sqr: f64 = a.iter().map(|z| z.norm_sqr()).sum();
        if norm_sqr > 0.0 {
            let form: f64 = s
                .rows()
                .zip(&a)
                .map(|(row, ai)| {
                    let sa: Complex = row.iter().zip(&a).map(|(sij, aj)| sij * aj).sum();
                    (ai.conj() * sa).re
                })
                .sum();
            return form / norm_sqr;
        }
    })
}

/// Largest sampled variance `a† S a` over `samples` random unit vectors.
pub fn sampling_oracle(s: &CorrelationMatrix, samples: usize, seed: u64) -> f64 {
    rayleigh_samples(s.matrix(), seed)
        .take(samples.max(1))
        .fold(f64::NEG_INFINITY, f64::max)
}
