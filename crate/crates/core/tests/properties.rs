mod common;

use common::*;
use proptest::prelude::*;
use qpca::linalg::{inner, Complex};
use qpca::pca::combine;
use qpca::qubit::{density_from_polarization, pauli, Axis, PolarizationVector};
use qpca::{
    center, correlate, correlation_matrix, expectation, run_pca, sampling_oracle, symmetrize,
    variance, variance_of_combination, CoefficientVector, DensityMatrix,
};

fn polarization() -> impl Strategy<Value = PolarizationVector> {
    (-1.0f64..1.0, -1.0f64..1.0, -1.0f64..1.0, 0.0f64..=1.0).prop_map(|(x, y, z, r)| {
        let n = (x * x + y * y + z * z).sqrt().max(1e-12);
        PolarizationVector::new(x / n * r, y / n * r, z / n * r).unwrap()
    })
}

proptest! {
    #[test]
    fn mixtures_of_pure_states_are_valid(dim in 1usize..=4, k in 1usize..=4, seed in any::<u64>()) {
        let mut r = rng(seed);
        let mut weights: Vec<f64> = (0..k).map(|_| rand::Rng::random_range(&mut r, 0.01..1.0)).collect();
        let total: f64 = weights.iter().sum();
        weights.iter_mut().for_each(|w| *w /= total);
        let mut acc = qpca::ComplexMatrix::zeros(dim);
        for w in &weights {
            let psi = random_unit_vector(&mut r, dim);
            let pure = DensityMatrix::pure(&psi).unwrap();
            acc = acc.add(&pure.matrix().scale(Complex::new(*w, 0.0))).unwrap();
        }
        let rho = DensityMatrix::new(acc).unwrap();
        prop_assert!(rho.matrix().is_hermitian(1e-10));
        prop_assert!((rho.matrix().trace().re - 1.0).abs() <= 1e-10);
        prop_assert!(rho.min_eigenvalue() >= -1e-10);
    }

    #[test]
    fn bloch_state_properties(p in polarization()) {
        let rho = density_from_polarization(&p).unwrap();
        for axis in Axis::ALL {
            prop_assert!((expectation(&rho, &pauli(axis)).unwrap() - p.component(axis)).abs() <= 1e-12);
        }
        let n2 = p.norm() * p.norm();
        prop_assert!((rho.purity() - (1.0 + n2) / 2.0).abs() <= 1e-12);
    }

    #[test]
    fn centering_zeroes_the_mean(dim in 1usize..=4, seed in any::<u64>()) {
        let mut r = rng(seed);
        let rho = random_density(&mut r, dim);
        let o = &random_observables(&mut r, dim, 1)[0];
        let c = center(&rho, o).unwrap();
        prop_assert!(expectation(&rho, &c).unwrap().abs() <= 1e-12);
    }

    #[test]
    fn correlation_structure(dim in 1usize..=4, n in 2usize..=5, seed in any::<u64>()) {
        let mut r = rng(seed);
        let rho = random_density(&mut r, dim);
        let obs = random_observables(&mut r, dim, n);
        let s = correlation_matrix(&rho, &obs).unwrap();
        let m = s.matrix();
        for i in 0..n {
            for j in 0..n {
                prop_assert!((m.get(i, j).conj() - m.get(j, i)).norm() <= 1e-12);
            }
            prop_assert!((m.get(i, i).re - variance(&rho, &obs[i]).unwrap()).abs() <= 1e-12);
        }
        for _ in 0..10 {
            let a = random_unit_vector(&mut r, n);
            prop_assert!(m.quadratic_form(&a).unwrap().re >= -1e-10);
        }
        let phi = symmetrize(&s);
        prop_assert!(phi.symmetry_residual() <= 1e-12);
        for i in 0..n {
            for j in 0..n {
                prop_assert!((phi.matrix().get(i, j).re - m.get(i, j).re).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn correlate_of_self_is_variance(dim in 1usize..=4, seed in any::<u64>()) {
        let mut r = rng(seed);
        let rho = random_density(&mut r, dim);
        let o = &random_observables(&mut r, dim, 1)[0];
        let z = correlate(&rho, o, o).unwrap();
        prop_assert!((z.re - variance(&rho, o).unwrap()).abs() <= 1e-12 && z.im.abs() <= 1e-12);
    }

    #[test]
    fn pauli_anticommutator_gives_identity(p in polarization()) {
        let obs = [pauli(Axis::X), pauli(Axis::Y), pauli(Axis::Z)];
        let s = correlation_matrix(&density_from_polarization(&p).unwrap(), &obs).unwrap();
        let phi = symmetrize(&s);
        prop_assert!(max_abs_diff(phi.matrix(), &qpca::ComplexMatrix::identity(3)) <= 1e-12);
    }

    #[test]
    fn two_variance_formulas_agree(dim in 1usize..=4, n in 2usize..=5, seed in any::<u64>()) {
        let mut r = rng(seed);
        let rho = random_density(&mut r, dim);
        let obs = random_observables(&mut r, dim, n);
        let s = correlation_matrix(&rho, &obs).unwrap();
        let a = CoefficientVector::new(random_unit_vector(&mut r, n)).unwrap();
        let direct = variance_of_combination(&rho, &a, &obs).unwrap();
        let form = s.matrix().quadratic_form(a.as_slice()).unwrap();
        prop_assert!((direct - form.re).abs() <= 1e-12 && form.im.abs() <= 1e-12);

        let theta: f64 = rand::Rng::random_range(&mut r, 0.0..std::f64::consts::TAU);
        let phase = Complex::from_polar(1.0, theta);
        let rotated = CoefficientVector::new(a.as_slice().iter().map(|z| z * phase).collect()).unwrap();
        prop_assert!((variance_of_combination(&rho, &rotated, &obs).unwrap() - direct).abs() <= 1e-12);
    }

    #[test]
    fn pca_invariants(dim in 1usize..=4, n in 2usize..=5, seed in any::<u64>()) {
        let mut r = rng(seed);
        let rho = random_density(&mut r, dim);
        let obs = random_observables(&mut r, dim, n);
        let s = correlation_matrix(&rho, &obs).unwrap();
        let result = run_pca(&s).unwrap();
        let pcs = result.components();
        let ev = result.eigenvalues();
        for w in ev.windows(2) {
            prop_assert!(w[0] >= w[1] - 1e-12);
        }
        prop_assert!(result.orthonormality_residual() <= 1e-10);
        prop_assert!(result.max_cross_correlation() <= 1e-10);
        for pc in pcs {
            prop_assert!(pc.eigenvalue() >= -1e-10);
            let v = variance_of_combination(&rho, pc.coefficients(), &obs).unwrap();
            prop_assert!((v - pc.eigenvalue()).abs() <= 1e-10);
            let p = combine(pc.coefficients(), &obs).unwrap();
            prop_assert!(max_abs_diff(&p, pc.operator()) == 0.0);
        }
        let var_sum: f64 = obs.iter().map(|o| variance(&rho, o).unwrap()).sum();
        prop_assert!((ev.iter().sum::<f64>() - var_sum).abs() <= 1e-10);

        let best = sampling_oracle(&s, 200, seed);
        prop_assert!(best <= ev[0] + 1e-10);
    }

    #[test]
    fn oracle_is_deterministic(seed in any::<u64>()) {
        let mut r = rng(seed);
        let rho = random_density(&mut r, 2);
        let s = correlation_matrix(&rho, &random_observables(&mut r, 2, 3)).unwrap();
        prop_assert_eq!(sampling_oracle(&s, 300, seed).to_bits(), sampling_oracle(&s, 300, seed).to_bits());
    }
}

#[test]
fn three_pauli_spectrum() {
    let p = PolarizationVector::new(0.0, 0.6, 0.0).unwrap();
    let obs = [pauli(Axis::X), pauli(Axis::Y), pauli(Axis::Z)];
    let rho = density_from_polarization(&p).unwrap();
    let result = run_pca(&correlation_matrix(&rho, &obs).unwrap()).unwrap();
    let ev = result.eigenvalues();
    for (a, b) in ev.iter().zip([1.6, 1.0, 0.4]) {
        assert!((a - b).abs() < 1e-12, "{ev:?}");
    }
    let pcs = result.components();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                assert!(
                    qpca::cross_correlation(&rho, &pcs[i], &pcs[j])
                        .unwrap()
                        .norm()
                        <= 1e-10
                );
            }
        }
    }
    // coefficient vectors are orthonormal in C^3
    assert!(
        inner(
            pcs[0].coefficients().as_slice(),
            pcs[2].coefficients().as_slice()
        )
        .norm()
            < 1e-12
    );
}
