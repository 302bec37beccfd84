//! Test-only generators and independent oracles.
#![allow(dead_code)]

use qpca::{Complex, ComplexMatrix, DensityMatrix, Observable};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_complex(rng: &mut impl Rng) -> Complex {
    Complex::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

pub fn random_square(rng: &mut impl Rng, dim: usize) -> ComplexMatrix {
    let entries = (0..dim * dim).map(|_| random_complex(rng)).collect();
    ComplexMatrix::from_row_major(dim, entries).unwrap()
}

pub fn random_hermitian(rng: &mut impl Rng, dim: usize) -> ComplexMatrix {
    let g = random_square(rng, dim);
    let h = g.add(&g.adjoint()).unwrap();
    h.scale(Complex::new(0.5, 0.0))
}

/// `G G† / tr(G G†)`, optionally rank-deficient.
pub fn random_density(rng: &mut impl Rng, dim: usize) -> DensityMatrix {
    let rank = rng.random_range(1..=dim);
    let mut entries = vec![Complex::new(0.0, 0.0); dim * dim];
    for i in 0..dim {
        for j in 0..rank {
            entries[i * dim + j] = random_complex(rng);
        }
    }
    let g = ComplexMatrix::from_row_major(dim, entries).unwrap();
    let gg = g.mat_mul(&g.adjoint()).unwrap();
    let t = gg.trace().re;
    let mut rho = gg.scale(Complex::new(1.0 / t, 0.0));
    // Enforce exact Hermiticity of the rounded result.
    rho = rho
        .add(&rho.adjoint())
        .unwrap()
        .scale(Complex::new(0.5, 0.0));
    DensityMatrix::new(rho).unwrap()
}

pub fn random_observables(rng: &mut impl Rng, dim: usize, count: usize) -> Vec<Observable> {
    (0..count)
        .map(|k| Observable::new(random_hermitian(rng, dim), format!("O{k}")).unwrap())
        .collect()
}

pub fn random_unit_vector(rng: &mut impl Rng, n: usize) -> Vec<Complex> {
    let v: Vec<Complex> = (0..n).map(|_| random_complex(rng)).collect();
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|z| z / norm).collect()
}

/// Characteristic polynomial coefficients `c[0] + c[1] x + ... + c[n] x^n`
/// via the Faddeev-LeVerrier recursion (real for Hermitian input).
pub fn characteristic_polynomial(m: &ComplexMatrix) -> Vec<f64> {
    let n = m.dim();
    let mut coeffs = vec![Complex::new(0.0, 0.0); n + 1];
    coeffs[n] = Complex::new(1.0, 0.0);
    let ident = ComplexMatrix::identity(n);
    let mut mk = ComplexMatrix::zeros(n);
    for k in 1..=n {
        mk = m
            .mat_mul(&mk)
            .unwrap()
            .add(&ident.scale(coeffs[n - k + 1]))
            .unwrap();
        let t = m.mat_mul(&mk).unwrap().trace();
        coeffs[n - k] = -t / k as f64;
    }
    coeffs.iter().map(|z| z.re).collect()
}

fn eval(poly: &[f64], x: f64) -> f64 {
    poly.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

fn derivative(poly: &[f64]) -> Vec<f64> {
    poly.iter()
        .enumerate()
        .skip(1)
        .map(|(k, &c)| c * k as f64)
        .collect()
}

fn bisect(poly: &[f64], mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = eval(poly, lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = eval(poly, mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Roots of a real-rooted polynomial in `[lo, hi]`, ascending.
///
/// Critical points (roots of the derivative, found recursively) split the
/// interval into monotone pieces, each holding at most one root.
pub fn real_roots(poly: &[f64], lo: f64, hi: f64) -> Vec<f64> {
    let degree = poly.len() - 1;
    if degree == 0 {
        return vec![];
    }
    if degree == 1 {
        return vec![-poly[0] / poly[1]];
    }
    let mut points = vec![lo];
    points.extend(real_roots(&derivative(poly), lo, hi));
    points.push(hi);
    let mut roots = Vec::new();
    for w in points.windows(2) {
        let (a, b) = (w[0], w[1]);
        let (fa, fb) = (eval(poly, a), eval(poly, b));
        if fa == 0.0 {
            if roots.last() != Some(&a) {
                roots.push(a);
            }
        } else if (fa < 0.0) != (fb < 0.0) && fb != 0.0 {
            roots.push(bisect(poly, a, b));
        }
    }
    if eval(poly, hi) == 0.0 {
        roots.push(hi);
    }
    // Even-multiplicity roots touch zero at a critical point without a sign
    // change; fill them in from the critical points nearest to zero.
    if roots.len() < degree {
        let mut crit: Vec<f64> = points[1..points.len() - 1].to_vec();
        crit.sort_by(|x, y| eval(poly, *x).abs().total_cmp(&eval(poly, *y).abs()));
        for x in crit.into_iter().take(degree - roots.len()) {
            roots.push(x);
        }
        roots.sort_by(f64::total_cmp);
    }
    roots
}

/// Eigenvalues of a Hermitian matrix from its characteristic polynomial, descending.
pub fn charpoly_eigenvalues(m: &ComplexMatrix) -> Vec<f64> {
    let poly = characteristic_polynomial(m);
    let bound = 1.0 + m.frobenius_norm();
    let mut roots = real_roots(&poly, -bound, bound);
    roots.reverse();
    roots
}

pub fn max_abs_diff(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    a.entries()
        .iter()
        .zip(b.entries())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}
