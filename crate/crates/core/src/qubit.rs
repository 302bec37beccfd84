//! Single-qubit worked example: Pauli observables, Bloch-vector states, and
//! the circular polarization basis that the principal axes line up with.

use std::fmt;
use std::str::FromStr;

use crate::correlation::correlation_matrix;
use crate::error::{Error, Result};
use crate::linalg::{inner, Complex, ComplexMatrix};
use crate::pca::{run_pca, PcaResult};
use crate::quantum_state::{DensityMatrix, Observable};

const POLARIZATION_TOL: f64 = 1e-12;
/// Overlap threshold for declaring a component aligned with a basis vector.
pub const MATCH_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn symbol(self) -> char {
        match self {
            Axis::X => 'x',
            Axis::Y => 'y',
            Axis::Z => 'z',
        }
    }

    fn from_char(c: char) -> Result<Self> {
        match c.to_ascii_lowercase() {
            'x' => Ok(Axis::X),
            'y' => Ok(Axis::Y),
            'z' => Ok(Axis::Z),
            _ => Err(Error::UnknownAxis(c.to_string())),
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl FromStr for Axis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.trim().chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => Axis::from_char(c),
            _ => Err(Error::UnknownAxis(s.to_string())),
        }
    }
}

/// Ordered pair of distinct axes, written `xz`, `yx`, ...
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AxisPair(Axis, Axis);

impl AxisPair {
    pub fn new(first: Axis, second: Axis) -> Result<Self> {
        if first == second {
            return Err(Error::IdenticalAxes);
        }
        Ok(Self(first, second))
    }

    pub fn first(self) -> Axis {
        self.0
    }

    pub fn second(self) -> Axis {
        self.1
    }

    /// The axis not in the pair.
    pub fn complement(self) -> Axis {
        Axis::ALL
            .into_iter()
            .find(|&a| a != self.0 && a != self.1)
            .expect("two distinct axes leave one over")
    }
}

impl fmt::Display for AxisPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.0, self.1)
    }
}

impl FromStr for AxisPair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.trim().chars().collect();
        match chars.as_slice() {
            [a, b] => AxisPair::new(Axis::from_char(*a)?, Axis::from_char(*b)?),
            _ => Err(Error::UnknownAxis(s.to_string())),
        }
    }
}

fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

pub fn pauli_matrix(axis: Axis) -> ComplexMatrix {
    let rows = match axis {
        Axis::X => [[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]],
        Axis::Y => [[c(0.0, 0.0), c(0.0, -1.0)], [c(0.0, 1.0), c(0.0, 0.0)]],
        Axis::Z => [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-1.0, 0.0)]],
    };
    ComplexMatrix::from_rows(&rows).expect("2x2 literal")
}

/// Pauli observable labelled `sigma_x`, `sigma_y` or `sigma_z`.
pub fn pauli(axis: Axis) -> Observable {
    Observable::new(pauli_matrix(axis), format!("sigma_{axis}"))
        .expect("Pauli matrices are Hermitian")
}

/// Bloch (polarization) vector with `|P| ≤ 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarizationVector {
    px: f64,
    py: f64,
    pz: f64,
}

impl PolarizationVector {
    pub fn new(px: f64, py: f64, pz: f64) -> Result<Self> {
        let p = Self { px, py, pz };
        let norm = p.norm();
        if !norm.is_finite() || norm > 1.0 + POLARIZATION_TOL {
            return Err(Error::Polarization { norm });
        }
        Ok(p)
    }

    pub fn px(&self) -> f64 {
        self.px
    }

    pub fn py(&self) -> f64 {
        self.py
    }

    pub fn pz(&self) -> f64 {
        self.pz
    }

    pub fn component(&self, axis: Axis) -> f64 {
        match axis {
            Axis::X => self.px,
            Axis::Y => self.py,
            Axis::Z => self.pz,
        }
    }

    pub fn norm(&self) -> f64 {
        (self.px * self.px + self.py * self.py + self.pz * self.pz).sqrt()
    }

    pub fn is_pure(&self) -> bool {
        (self.norm() - 1.0).abs() <= POLARIZATION_TOL
    }
}

/// `ρ = ½ [[1+Pz, Px−iPy], [Px+iPy, 1−Pz]]`.
pub fn density_from_polarization(p: &PolarizationVector) -> Result<DensityMatrix> {
    let m = ComplexMatrix::from_rows(&[
        [c(0.5 * (1.0 + p.pz), 0.0), c(0.5 * p.px, -0.5 * p.py)],
        [c(0.5 * p.px, 0.5 * p.py), c(0.5 * (1.0 - p.pz), 0.0)],
    ])?;
    DensityMatrix::new(m)
}

#[derive(Debug, Clone, PartialEq)]
pub struct QubitBasis {
    pub ket0: [Complex; 2],
    pub ket1: [Complex; 2],
}

impl QubitBasis {
    pub fn kets(&self) -> [&[Complex; 2]; 2] {
        [&self.ket0, &self.ket1]
    }

    /// `|⟨basis_k | v⟩|` for k = 0, 1.
    pub fn overlaps(&self, v: &[Complex]) -> [f64; 2] {
        [inner(&self.ket0, v).norm(), inner(&self.ket1, v).norm()]
    }

    pub fn orthonormality_residual(&self) -> f64 {
        let d00 = (inner(&self.ket0, &self.ket0) - 1.0).norm();
        let d11 = (inner(&self.ket1, &self.ket1) - 1.0).norm();
        let d01 = inner(&self.ket0, &self.ket1).norm();
        d00.max(d11).max(d01)
    }
}

pub fn computational_basis() -> QubitBasis {
    QubitBasis {
        ket0: [c(1.0, 0.0), c(0.0, 0.0)],
        ket1: [c(0.0, 0.0), c(1.0, 0.0)],
    }
}

/// `|0'⟩ = (|0⟩ + i|1⟩)/√2`, `|1'⟩ = (|0⟩ − i|1⟩)/√2`.
pub fn circular_basis() -> QubitBasis {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    QubitBasis {
        ket0: [c(h, 0.0), c(0.0, h)],
        ket1: [c(h, 0.0), c(0.0, -h)],
    }
}

/// PCA of a Pauli pair together with circular-basis overlaps per component.
#[derive(Debug, Clone)]
pub struct SpinPcaReport {
    pub polarization: PolarizationVector,
    pub axes: AxisPair,
    pub pca: PcaResult,
    /// `overlaps[k] = [|⟨0'|a_k⟩|, |⟨1'|a_k⟩|]` for component k.
    pub overlaps: Vec<[f64; 2]>,
}

impl SpinPcaReport {
    /// Index (0 for `|0'⟩`, 1 for `|1'⟩`) of the circular basis vector that
    /// component `k` coincides with, if any. Degenerate components never match.
    pub fn basis_match(&self, k: usize) -> Option<usize> {
        let pc = self.pca.components().get(k)?;
        if pc.is_degenerate() {
            return None;
        }
        self.overlaps[k].iter().position(|&o| o >= 1.0 - MATCH_TOL)
    }
}

pub fn spin_pca_demo(p: PolarizationVector, axes: AxisPair) -> Result<SpinPcaReport> {
    let rho = density_from_polarization(&p)?;
    let observables = [pauli(axes.first()), pauli(axes.second())];
    let s = correlation_matrix(&rho, &observables)?;
    let pca = run_pca(&s)?;
    let basis = circular_basis();
    let overlaps = pca
        .components()
        .iter()
        .map(|pc| basis.overlaps(pc.coefficients().as_slice()))
        .collect();
    Ok(SpinPcaReport {
        polarization: p,
        axes,
        pca,
        overlaps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum_state::expectation;

    #[test]
    fn pauli_literals() {
        let x = pauli(Axis::X);
        assert_eq!(x.label(), "sigma_x");
        assert_eq!(
            x.matrix(),
            &ComplexMatrix::from_real_rows(&[[0.0, 1.0], [1.0, 0.0]]).unwrap()
        );
        assert_eq!(pauli(Axis::Y).matrix().get(0, 1), c(0.0, -1.0));
        assert_eq!(pauli(Axis::Y).matrix().get(1, 0), c(0.0, 1.0));
        assert_eq!(
            pauli(Axis::Z).matrix(),
            &ComplexMatrix::from_real_rows(&[[1.0, 0.0], [0.0, -1.0]]).unwrap()
        );
    }

    #[test]
    fn axis_parsing() {
        assert_eq!(
            "xz".parse::<AxisPair>().unwrap(),
            AxisPair::new(Axis::X, Axis::Z).unwrap()
        );
        assert!(matches!(
            "xx".parse::<AxisPair>(),
            Err(Error::IdenticalAxes)
        ));
        assert!("xw".parse::<AxisPair>().is_err());
        assert!("xyz".parse::<AxisPair>().is_err());
        assert_eq!("yz".parse::<AxisPair>().unwrap().complement(), Axis::X);
        assert_eq!("Y".parse::<Axis>().unwrap(), Axis::Y);
    }

    #[test]
    fn density_from_vector() {
        let mixed =
            density_from_polarization(&PolarizationVector::new(0.0, 0.0, 0.0).unwrap()).unwrap();
        assert_eq!(
            mixed.matrix(),
            &ComplexMatrix::from_real_rows(&[[0.5, 0.0], [0.0, 0.5]]).unwrap()
        );
        let up =
            density_from_polarization(&PolarizationVector::new(0.0, 0.0, 1.0).unwrap()).unwrap();
        assert_eq!(
            up.matrix(),
            &ComplexMatrix::from_real_rows(&[[1.0, 0.0], [0.0, 0.0]]).unwrap()
        );
        let rho =
            density_from_polarization(&PolarizationVector::new(0.0, 0.6, 0.0).unwrap()).unwrap();
        let expected =
            ComplexMatrix::from_rows(&[[c(0.5, 0.0), c(0.0, -0.3)], [c(0.0, 0.3), c(0.5, 0.0)]])
                .unwrap();
        assert_eq!(rho.matrix(), &expected);
    }

    #[test]
    fn polarization_round_trip() {
        let p = PolarizationVector::new(0.3, -0.5, 0.7).unwrap();
        let rho = density_from_polarization(&p).unwrap();
        for axis in Axis::ALL {
            let e = expectation(&rho, &pauli(axis)).unwrap();
            assert!((e - p.component(axis)).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_unphysical_polarization() {
        assert!(matches!(
            PolarizationVector::new(0.0, 0.0, 2.0),
            Err(Error::Polarization { .. })
        ));
        assert!(PolarizationVector::new(0.6, 0.0, 0.8).unwrap().is_pure());
    }

    #[test]
    fn circular_basis_vectors() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let b = circular_basis();
        assert_eq!(b.ket0, [c(h, 0.0), c(0.0, h)]);
        assert_eq!(b.ket1, [c(h, 0.0), c(0.0, -h)]);
        assert!(b.orthonormality_residual() < 1e-15);
        assert_eq!(computational_basis().orthonormality_residual(), 0.0);
    }

    #[test]
    fn demo_matches_circular_basis() {
        let axes = "xz".parse().unwrap();
        let report = spin_pca_demo(PolarizationVector::new(0.0, 0.6, 0.0).unwrap(), axes).unwrap();
        let ev = report.pca.eigenvalues();
        assert!((ev[0] - 1.6).abs() < 1e-14 && (ev[1] - 0.4).abs() < 1e-14);
        assert_eq!(report.basis_match(0), Some(0));
        assert_eq!(report.basis_match(1), Some(1));

        let flipped =
            spin_pca_demo(PolarizationVector::new(0.0, -0.6, 0.0).unwrap(), axes).unwrap();
        let ev = flipped.pca.eigenvalues();
        assert!((ev[0] - 1.6).abs() < 1e-14 && (ev[1] - 0.4).abs() < 1e-14);
        assert_eq!(flipped.basis_match(0), Some(1));

        let mixed = spin_pca_demo(PolarizationVector::new(0.0, 0.0, 0.0).unwrap(), axes).unwrap();
        assert_eq!(mixed.pca.eigenvalues(), vec![1.0, 1.0]);
        assert_eq!(mixed.basis_match(0), None);
    }

    #[test]
    fn cyclic_pairs() {
        let p = PolarizationVector::new(0.2, -0.3, 0.5).unwrap();
        for (axes, k) in [("yx", p.pz()), ("zy", p.px()), ("xz", p.py())] {
            let report = spin_pca_demo(p, axes.parse().unwrap()).unwrap();
            let ev = report.pca.eigenvalues();
            let (hi, lo) = (1.0 + k.abs(), 1.0 - k.abs());
            assert!(
                (ev[0] - hi).abs() < 1e-10 && (ev[1] - lo).abs() < 1e-10,
                "{axes}: {ev:?}"
            );
        }
    }
}
