//! wasm-bindgen bindings for the browser demo in `www/`.
//!
//! Every export returns a JSON string; the page parses it and draws.

use qpca::pca::rayleigh_samples;
use qpca::qubit::{density_from_polarization, spin_pca_demo, AxisPair, PolarizationVector};
use qpca::Complex;
use serde::Serialize;
use wasm_bindgen::prelude::*;

type Pair = [f64; 2];

fn pair(z: Complex) -> Pair {
    [z.re, z.im]
}

fn setup(px: f64, py: f64, pz: f64, axes: &str) -> Result<(PolarizationVector, AxisPair), String> {
    let p = PolarizationVector::new(px, py, pz).map_err(|e| e.to_string())?;
    let axes: AxisPair = axes.parse().map_err(|e: qpca::Error| e.to_string())?;
    Ok((p, axes))
}

#[derive(Serialize)]
struct Component {
    eigenvalue: f64,
    variance: f64,
    coefficients: Vec<Pair>,
    overlaps: [f64; 2],
    basis_match: Option<usize>,
    degenerate: bool,
}

#[derive(Serialize)]
struct Analysis {
    observables: Vec<String>,
    rho: Vec<Vec<Pair>>,
    purity: f64,
    correlation: Vec<Vec<Pair>>,
    components: Vec<Component>,
}

pub fn qubit_analysis_json(px: f64, py: f64, pz: f64, axes: &str) -> Result<String, String> {
    let (p, axes) = setup(px, py, pz, axes)?;
    let report = spin_pca_demo(p, axes).map_err(|e| e.to_string())?;
    let source = report.pca.source();
    let to_rows = |m: &qpca::ComplexMatrix| -> Vec<Vec<Pair>> {
        m.rows()
            .map(|r| r.iter().map(|&z| pair(z)).collect())
            .collect()
    };
    let components = report
        .pca
        .components()
        .iter()
        .enumerate()
        .map(|(k, pc)| Component {
            eigenvalue: pc.eigenvalue(),
            variance: pc.variance(),
            coefficients: pc
                .coefficients()
                .as_slice()
                .iter()
                .map(|&z| pair(z))
                .collect(),
            overlaps: report.overlaps[k],
            basis_match: report.basis_match(k),
            degenerate: pc.is_degenerate(),
        })
        .collect();
    let analysis = Analysis {
        observables: source
            .observables()
            .iter()
            .map(|o| o.label().to_string())
            .collect(),
        rho: to_rows(source.rho().matrix()),
        purity: source.rho().purity(),
        correlation: to_rows(source.matrix()),
        components,
    };
    serde_json::to_string(&analysis).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct Sweep {
    axis: String,
    values: Vec<f64>,
    lambda1: Vec<f64>,
    lambda2: Vec<f64>,
    overlap_plus: Vec<f64>,
}

/// Sweeps the polarization component orthogonal to the axis pair across its
/// allowed range, holding the other two components fixed.
pub fn eigenvalue_sweep_json(
    px: f64,
    py: f64,
    pz: f64,
    axes: &str,
    steps: usize,
) -> Result<String, String> {
    let (p, axes) = setup(px, py, pz, axes)?;
    let free = axes.complement();
    let fixed_sq: f64 = qpca::Axis::ALL
        .iter()
        .filter(|&&a| a != free)
        .map(|&a| p.component(a).powi(2))
        .sum();
    let reach = (1.0 - fixed_sq).max(0.0).sqrt();
    let steps = steps.max(2);
    let mut sweep = Sweep {
        axis: free.to_string(),
        values: Vec::with_capacity(steps),
        lambda1: Vec::with_capacity(steps),
        lambda2: Vec::with_capacity(steps),
        overlap_plus: Vec::with_capacity(steps),
    };
    for i in 0..steps {
        let t = -reach + 2.0 * reach * i as f64 / (steps - 1) as f64;
        let mut comps = [p.px(), p.py(), p.pz()];
        comps[free as usize] = t;
        let q = PolarizationVector::new(comps[0], comps[1], comps[2]).map_err(|e| e.to_string())?;
        let report = spin_pca_demo(q, axes).map_err(|e| e.to_string())?;
        let ev = report.pca.eigenvalues();
        sweep.values.push(t);
        sweep.lambda1.push(ev[0]);
        sweep.lambda2.push(ev[1]);
        sweep.overlap_plus.push(report.overlaps[0][0]);
    }
    serde_json::to_string(&sweep).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct Convergence {
    lambda1: f64,
    samples: Vec<usize>,
    running_max: Vec<f64>,
}

/// Running maximum of sampled variances `a† S a`, recorded at roughly
/// log-spaced sample counts, next to the leading eigenvalue it approaches.
pub fn oracle_convergence_json(
    px: f64,
    py: f64,
    pz: f64,
    axes: &str,
    samples: usize,
    seed: u64,
) -> Result<String, String> {
    let (p, axes) = setup(px, py, pz, axes)?;
    let report = spin_pca_demo(p, axes).map_err(|e| e.to_string())?;
    let s = report.pca.source().matrix();
    let mut out = Convergence {
        lambda1: report.pca.eigenvalues()[0],
        samples: Vec::new(),
        running_max: Vec::new(),
    };
    let mut best = f64::NEG_INFINITY;
    let mut next = 1usize;
    for (k, value) in rayleigh_samples(s, seed).take(samples.max(1)).enumerate() {
        best = best.max(value);
        let count = k + 1;
        if count == next || count == samples {
            out.samples.push(count);
            out.running_max.push(best);
            next = (next as f64 * 1.25).ceil() as usize;
        }
    }
    serde_json::to_string(&out).map_err(|e| e.to_string())
}

/// `tr(ρσ_k)` round trip for the page's state readout.
pub fn density_json(px: f64, py: f64, pz: f64) -> Result<String, String> {
    let p = PolarizationVector::new(px, py, pz).map_err(|e| e.to_string())?;
    let rho = density_from_polarization(&p).map_err(|e| e.to_string())?;
    let rows: Vec<Vec<Pair>> = rho
        .matrix()
        .rows()
        .map(|r| r.iter().map(|&z| pair(z)).collect())
        .collect();
    serde_json::to_string(&rows).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn qubit_analysis(px: f64, py: f64, pz: f64, axes: &str) -> Result<String, JsValue> {
    qubit_analysis_json(px, py, pz, axes).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn eigenvalue_sweep(
    px: f64,
    py: f64,
    pz: f64,
    axes: &str,
    steps: usize,
) -> Result<String, JsValue> {
    eigenvalue_sweep_json(px, py, pz, axes, steps).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn oracle_convergence(
    px: f64,
    py: f64,
    pz: f64,
    axes: &str,
    samples: usize,
    seed: u64,
) -> Result<String, JsValue> {
    oracle_convergence_json(px, py, pz, axes, samples, seed).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn density(px: f64, py: f64, pz: f64) -> Result<String, JsValue> {
    density_json(px, py, pz).map_err(|e| JsValue::from_str(&e))
}
