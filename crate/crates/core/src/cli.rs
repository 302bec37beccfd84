//! `qpca` command-line front end and its JSON problem/report formats.
//!
//! Exit codes: 0 success, 1 domain or validation failure, 2 I/O or parse failure.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::correlation::{
    correlation_matrix, symmetrize, variance, CorrelationMatrix, S_HERMITIAN_TOL, S_PSD_TOL,
};
use crate::error::Error;
use crate::linalg::{eig_hermitian, Complex, ComplexMatrix};
use crate::pca::{run_pca, sampling_oracle, PcaResult};
use crate::quantum_state::{center, min_eigenvalue, DensityMatrix, Observable, STATE_TOL};
use crate::qubit::{circular_basis, spin_pca_demo, AxisPair, PolarizationVector, SpinPcaReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_PARSE: i32 = 2;

/// A complex number as `[re, im]`.
pub type Pair = [f64; 2];
/// Row-major matrix of complex pairs.
pub type PairMatrix = Vec<Vec<Pair>>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub dimension: usize,
    pub rho: PairMatrix,
    pub observables: Vec<NamedMatrix>,
    #[serde(default)]
    pub options: Options,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NamedMatrix {
    pub label: String,
    pub matrix: PairMatrix,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default)]
    pub center: bool,
    /// 0 skips the sampling oracle.
    #[serde(default)]
    pub oracle_samples: usize,
    #[serde(default = "default_seed")]
    pub seed: u64,
}

fn default_seed() -> u64 {
    42
}

impl Default for Options {
    fn default() -> Self {
        Self {
            center: false,
            oracle_samples: 0,
            seed: default_seed(),
        }
    }
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<Self, String> {
        let file: ProblemFile = serde_json::from_str(text).map_err(|e| e.to_string())?;
        file.check_shapes()?;
        Ok(file)
    }

    fn check_shapes(&self) -> Result<(), String> {
        let dim = self.dimension;
        if dim == 0 {
            return Err("dimension must be positive".into());
        }
        let check = |name: &str, m: &PairMatrix| -> Result<(), String> {
            if m.len() != dim || m.iter().any(|row| row.len() != dim) {
                return Err(format!("matrix `{name}` is not {dim}x{dim}"));
            }
            Ok(())
        };
        check("rho", &self.rho)?;
        for o in &self.observables {
            check(&o.label, &o.matrix)?;
        }
        Ok(())
    }

    pub fn rho_matrix(&self) -> ComplexMatrix {
        to_matrix(&self.rho)
    }

    pub fn observable_matrices(&self) -> Vec<(String, ComplexMatrix)> {
        self.observables
            .iter()
            .map(|o| (o.label.clone(), to_matrix(&o.matrix)))
            .collect()
    }
}

fn to_matrix(m: &PairMatrix) -> ComplexMatrix {
    let rows: Vec<Vec<Complex>> = m
        .iter()
        .map(|row| row.iter().map(|&[re, im]| Complex::new(re, im)).collect())
        .collect();
    ComplexMatrix::from_rows(&rows).expect("shape checked at parse time; JSON numbers are finite")
}

/// Rounds to 12 significant digits.
pub fn sig12(x: f64) -> f64 {
    round_sig(x, 12)
}

fn round_sig(x: f64, digits: usize) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    let r: f64 = format!("{:.*e}", digits - 1, x)
        .parse()
        .expect("formatted float");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn residual4(x: f64) -> f64 {
    round_sig(x, 4)
}

fn pair(z: Complex) -> Pair {
    [sig12(z.re), sig12(z.im)]
}

fn pair_matrix(m: &ComplexMatrix) -> PairMatrix {
    m.rows()
        .map(|row| row.iter().map(|&z| pair(z)).collect())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    fn new(name: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            residual: residual4(residual),
            tolerance: residual4(tolerance),
            pass: residual <= tolerance,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub rank: usize,
    pub eigenvalue: f64,
    pub variance: f64,
    pub degenerate: bool,
    pub coefficients: Vec<Pair>,
    pub operator: PairMatrix,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    /// The problem file exactly as read.
    pub input: ProblemFile,
    /// Options after command-line overrides.
    pub settings: Options,
    pub observables: Vec<String>,
    pub correlation_matrix: PairMatrix,
    pub symmetrized: Vec<Vec<f64>>,
    pub eigenvalues: Vec<f64>,
    pub components: Vec<ComponentReport>,
    /// `[|⟨0'|a⟩|, |⟨1'|a⟩|]` per component, present for two observables.
    pub circular_overlaps: Option<Vec<[f64; 2]>>,
    pub oracle_max: Option<f64>,
    pub validation: Vec<Check>,
}

impl AnalysisReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.validation.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

fn build_inputs(file: &ProblemFile) -> Result<(DensityMatrix, Vec<Observable>), Error> {
    let rho = DensityMatrix::new(file.rho_matrix())?;
    let observables = file
        .observable_matrices()
        .into_iter()
        .map(|(label, m)| Observable::new(m, label))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((rho, observables))
}

fn correlation_checks(s: &CorrelationMatrix) -> Vec<Check> {
    let scale = 1.0 + s.matrix().frobenius_norm();
    let n = s.len();
    let diag_negative = (0..n)
        .map(|i| {
            let d = s.matrix().get(i, i);
            d.im.abs().max(-d.re).max(0.0)
        })
        .fold(0.0, f64::max);
    vec![
        Check::new(
            "correlation matrix Hermitian",
            s.matrix().hermitian_residual(),
            S_HERMITIAN_TOL * scale,
        ),
        Check::new(
            "correlation diagonal real nonnegative",
            diag_negative,
            S_HERMITIAN_TOL * scale,
        ),
        Check::new(
            "correlation matrix positive semidefinite",
            (-s.min_eigenvalue()).max(0.0),
            S_PSD_TOL * scale,
        ),
        Check::new(
            "symmetrized correlation real symmetric",
            symmetrize(s).symmetry_residual(),
            S_HERMITIAN_TOL * scale,
        ),
    ]
}

fn state_checks(rho: &ComplexMatrix) -> (Vec<Check>, Option<f64>) {
    let herm = rho.hermitian_residual();
    let trace = rho.trace();
    let mut checks = vec![
        Check::new("density matrix Hermitian", herm, STATE_TOL),
        Check::new(
            "density matrix unit trace",
            (trace.re - 1.0).abs().max(trace.im.abs()),
            STATE_TOL,
        ),
    ];
    let mut purity = None;
    if herm <= STATE_TOL {
        let lowest = min_eigenvalue(rho).expect("Hermitian within tolerance");
        checks.push(Check::new(
            "density matrix positive semidefinite",
            (-lowest).max(0.0),
            STATE_TOL,
        ));
        purity = Some(rho.mat_mul(rho).expect("square").trace().re);
    }
    (checks, purity)
}

/// Runs the full analysis. Construction failures surface as `Err`; invariant
/// checks on the results are recorded in `validation`.
pub fn analyze(file: &ProblemFile, settings: &Options) -> Result<AnalysisReport, Error> {
    let (rho, raw_observables) = build_inputs(file)?;
    let observables = if settings.center {
        raw_observables
            .iter()
            .map(|o| center(&rho, o))
            .collect::<Result<Vec<_>, _>>()?
    } else {
        raw_observables
    };
    let s = correlation_matrix(&rho, &observables)?;
    let pca = run_pca(&s)?;
    let oracle_max = (settings.oracle_samples > 0)
        .then(|| sampling_oracle(&s, settings.oracle_samples, settings.seed));

    let mut validation = state_checks(rho.matrix()).0;
    for o in &observables {
        validation.push(Check::new(
            format!("observable `{}` Hermitian", o.label()),
            o.matrix().hermitian_residual(),
            STATE_TOL,
        ));
    }
    validation.extend(correlation_checks(&s));
    validation.extend(pca_checks(&pca, &observables, &rho, oracle_max));

    let circular_overlaps = (observables.len() == 2).then(|| {
        let basis = circular_basis();
        pca.components()
            .iter()
            .map(|pc| basis.overlaps(pc.coefficients().as_slice()).map(sig12))
            .collect()
    });

    Ok(AnalysisReport {
        input: file.clone(),
        settings: settings.clone(),
        observables: observables.iter().map(|o| o.label().to_string()).collect(),
        correlation_matrix: pair_matrix(s.matrix()),
        symmetrized: symmetrize(&s)
            .real_rows()
            .into_iter()
            .map(|r| r.into_iter().map(sig12).collect())
            .collect(),
        eigenvalues: pca.eigenvalues().into_iter().map(sig12).collect(),
        components: pca.components().iter().map(component_report).collect(),
        circular_overlaps,
        oracle_max: oracle_max.map(sig12),
        validation,
    })
}

fn component_report(pc: &crate::pca::PrincipalComponent) -> ComponentReport {
    ComponentReport {
        rank: pc.rank(),
        eigenvalue: sig12(pc.eigenvalue()),
        variance: sig12(pc.variance()),
        degenerate: pc.is_degenerate(),
        coefficients: pc
            .coefficients()
            .as_slice()
            .iter()
            .map(|&z| pair(z))
            .collect(),
        operator: pair_matrix(pc.operator()),
    }
}

fn pca_checks(
    pca: &PcaResult,
    observables: &[Observable],
    rho: &DensityMatrix,
    oracle_max: Option<f64>,
) -> Vec<Check> {
    let s = pca.source().matrix();
    let scale = 1.0 + s.frobenius_norm();
    let eigen_sum: f64 = pca.eigenvalues().iter().sum();
    let variance_sum: f64 = observables
        .iter()
        .map(|o| variance(rho, o).expect("validated inputs"))
        .sum();
    let eig = eig_hermitian(s).expect("validated correlation matrix");
    let reconstruction = eig
        .reconstruct()
        .sub(s)
        .expect("same dimension")
        .frobenius_norm();
    let variance_gap = pca
        .components()
        .iter()
        .map(|pc| (pc.variance() - pc.eigenvalue()).abs())
        .fold(0.0, f64::max);
    let mut checks = vec![
        Check::new("sum rule", (eigen_sum - variance_sum).abs(), 1e-10 * scale),
        Check::new(
            "eigendecomposition reconstruction",
            reconstruction,
            1e-9 * scale,
        ),
        Check::new(
            "coefficient orthonormality",
            pca.orthonormality_residual(),
            1e-10,
        ),
        Check::new(
            "component variance equals eigenvalue",
            variance_gap,
            1e-10 * scale,
        ),
        Check::new(
            "components decorrelated",
            pca.max_cross_correlation(),
            1e-10 * scale,
        ),
    ];
    if let Some(best) = oracle_max {
        let lambda1 = pca.eigenvalues()[0];
        checks.push(Check::new(
            "sampling oracle bounded by leading eigenvalue",
            (best - lambda1).max(0.0),
            1e-10 * scale,
        ));
    }
    checks
}

#[derive(Debug, Parser)]
#[command(name = "qpca", version, about = "PCA on quantum correlation matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Analyze a JSON problem file and write a JSON report.
    Analyze {
        input: PathBuf,
        /// Report destination; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Subtract each observable's mean before correlating.
        #[arg(long)]
        center: bool,
        #[arg(long)]
        oracle_samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Run the Pauli-pair analysis for a Bloch vector.
    Qubit {
        /// Polarization vector as PX,PY,PZ.
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, default_value = "xz")]
        axes: String,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Check state and correlation invariants of a problem file.
    Validate { input: PathBuf },
}

/// Entry point used by the binary; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match cli.command {
        Command::Analyze {
            input,
            out: out_path,
            center,
            oracle_samples,
            seed,
        } => cmd_analyze(
            &input,
            out_path.as_deref(),
            center,
            oracle_samples,
            seed,
            out,
            err,
        ),
        Command::Qubit { p, axes, json } => cmd_qubit(&p, &axes, json, out, err),
        Command::Validate { input } => cmd_validate(&input, out, err),
    }
}

fn load(path: &Path, err: &mut dyn Write) -> Result<ProblemFile, i32> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
        EXIT_PARSE
    })?;
    ProblemFile::parse(&text).map_err(|e| {
        let _ = writeln!(err, "error: cannot parse {}: {e}", path.display());
        EXIT_PARSE
    })
}

fn cmd_analyze(
    input: &Path,
    out_path: Option<&Path>,
    center: bool,
    oracle_samples: Option<usize>,
    seed: Option<u64>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let file = match load(input, err) {
        Ok(f) => f,
        Err(code) => return code,
    };
    let mut settings = file.options.clone();
    settings.center |= center;
    if let Some(n) = oracle_samples {
        settings.oracle_samples = n;
    }
    if let Some(s) = seed {
        settings.seed = s;
    }
    let report = match analyze(&file, &settings) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_DOMAIN;
        }
    };
    let json = report.to_json();
    match out_path {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &json) {
                let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                return EXIT_PARSE;
            }
            let _ = out.write_all(summarize(&report).as_bytes());
        }
        None => {
            let _ = out.write_all(json.as_bytes());
        }
    }
    let failures: Vec<&Check> = report.failures().collect();
    if failures.is_empty() {
        EXIT_OK
    } else {
        for c in failures {
            let _ = writeln!(
                err,
                "validation failed: {} (residual {:e} > {:e})",
                c.name, c.residual, c.tolerance
            );
        }
        EXIT_DOMAIN
    }
}

fn summarize(report: &AnalysisReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "observables: {}", report.observables.join(", "));
    let _ = writeln!(s, "eigenvalues: {}", join(&report.eigenvalues));
    for c in &report.components {
        let _ = writeln!(
            s,
            "PC{}: variance {}{}",
            c.rank,
            c.variance,
            if c.degenerate { " (degenerate)" } else { "" }
        );
    }
    if let Some(best) = report.oracle_max {
        let _ = writeln!(s, "oracle max: {best}");
    }
    let failed = report.failures().count();
    let _ = writeln!(
        s,
        "validation: {}/{} checks passed",
        report.validation.len() - failed,
        report.validation.len()
    );
    s
}

fn join(xs: &[f64]) -> String {
    xs.iter().map(f64::to_string).collect::<Vec<_>>().join(", ")
}

fn format_complex(z: Complex) -> String {
    let (re, im) = (sig12(z.re), sig12(z.im));
    if im < 0.0 {
        format!("{re}-{}i", -im)
    } else {
        format!("{re}+{im}i")
    }
}

#[derive(Debug, Serialize)]
struct QubitJson {
    polarization: [f64; 3],
    axes: String,
    correlation_matrix: PairMatrix,
    eigenvalues: Vec<f64>,
    components: Vec<ComponentReport>,
    circular_overlaps: Vec<[f64; 2]>,
    basis_match: Vec<Option<String>>,
}

fn basis_name(k: usize) -> String {
    if k == 0 { "|0'>" } else { "|1'>" }.to_string()
}

fn qubit_json(report: &SpinPcaReport) -> QubitJson {
    let p = report.polarization;
    QubitJson {
        polarization: [p.px(), p.py(), p.pz()],
        axes: report.axes.to_string(),
        correlation_matrix: pair_matrix(report.pca.source().matrix()),
        eigenvalues: report.pca.eigenvalues().into_iter().map(sig12).collect(),
        components: report
            .pca
            .components()
            .iter()
            .map(component_report)
            .collect(),
        circular_overlaps: report.overlaps.iter().map(|o| o.map(sig12)).collect(),
        basis_match: (0..report.overlaps.len())
            .map(|k| report.basis_match(k).map(basis_name))
            .collect(),
    }
}

fn qubit_text(report: &SpinPcaReport) -> String {
    let p = report.polarization;
    let mut s = String::new();
    let kind = if p.is_pure() { "pure" } else { "mixed" };
    let _ = writeln!(
        s,
        "polarization: ({}, {}, {})  |P| = {} ({kind})",
        p.px(),
        p.py(),
        p.pz(),
        sig12(p.norm())
    );
    let labels: Vec<&str> = report
        .pca
        .source()
        .observables()
        .iter()
        .map(|o| o.label())
        .collect();
    let _ = writeln!(s, "observables: {}", labels.join(", "));
    let _ = writeln!(s, "correlation matrix:");
    for row in report.pca.source().matrix().rows() {
        let cells: Vec<String> = row.iter().map(|&z| format_complex(z)).collect();
        let _ = writeln!(s, "  [{}]", cells.join(", "));
    }
    let _ = writeln!(
        s,
        "eigenvalues: {}",
        join(
            &report
                .pca
                .eigenvalues()
                .into_iter()
                .map(sig12)
                .collect::<Vec<_>>()
        )
    );
    for (k, pc) in report.pca.components().iter().enumerate() {
        let coeffs: Vec<String> = pc
            .coefficients()
            .as_slice()
            .iter()
            .map(|&z| format_complex(z))
            .collect();
        let [o0, o1] = report.overlaps[k];
        let _ = writeln!(
            s,
            "PC{}: lambda = {}  variance = {}  a = ({})",
            pc.rank(),
            sig12(pc.eigenvalue()),
            sig12(pc.variance()),
            coeffs.join(", ")
        );
        let _ = writeln!(s, "     overlap |0'> = {o0:.12}  |1'> = {o1:.12}");
        let status = match report.basis_match(k) {
            Some(b) => format!("matches {}", basis_name(b)),
            None if pc.is_degenerate() => "degenerate".to_string(),
            None => "no circular-basis match".to_string(),
        };
        let _ = writeln!(s, "     {status}");
    }
    s
}

fn parse_triple(text: &str) -> Result<[f64; 3], String> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!("expected PX,PY,PZ, got `{text}`"));
    }
    let mut out = [0.0; 3];
    for (slot, part) in out.iter_mut().zip(&parts) {
        *slot = part
            .parse::<f64>()
            .map_err(|e| format!("bad number `{part}`: {e}"))?;
        if !slot.is_finite() {
            return Err(format!("non-finite component `{part}`"));
        }
    }
    Ok(out)
}

fn cmd_qubit(p: &str, axes: &str, json: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let [px, py, pz] = match parse_triple(p) {
        Ok(v) => v,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_PARSE;
        }
    };
    let axes: AxisPair = match axes.parse() {
        Ok(a) => a,
        Err(Error::IdenticalAxes) => {
            let _ = writeln!(err, "error: {}", Error::IdenticalAxes);
            return EXIT_DOMAIN;
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_PARSE;
        }
    };
    let report = match PolarizationVector::new(px, py, pz).and_then(|p| spin_pca_demo(p, axes)) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_DOMAIN;
        }
    };
    let text = if json {
        let mut s = serde_json::to_string_pretty(&qubit_json(&report)).expect("serializes");
        s.push('\n');
        s
    } else {
        qubit_text(&report)
    };
    let _ = out.write_all(text.as_bytes());
    EXIT_OK
}

/// Every state and correlation check for a problem file, without stopping at
/// the first failure. Returns the checks and the purity of ρ when defined.
pub fn validate(file: &ProblemFile) -> (Vec<Check>, Option<f64>) {
    let rho_matrix = file.rho_matrix();
    let (mut checks, purity) = state_checks(&rho_matrix);
    let mut observables = Vec::new();
    for (label, m) in file.observable_matrices() {
        checks.push(Check::new(
            format!("observable `{label}` Hermitian"),
            m.hermitian_residual(),
            STATE_TOL,
        ));
        if let Ok(o) = Observable::new(m, label) {
            observables.push(o);
        }
    }
    checks.push(Check::new(
        "at least two observables",
        if file.observables.len() >= 2 {
            0.0
        } else {
            1.0
        },
        0.0,
    ));
    if checks.iter().all(|c| c.pass) {
        let rho = DensityMatrix::new(rho_matrix).expect("state checks passed");
        match correlation_matrix(&rho, &observables) {
            Ok(s) => checks.extend(correlation_checks(&s)),
            Err(Error::Invariant {
                name,
                residual,
                tolerance,
            }) => checks.push(Check::new(name, residual, tolerance)),
            Err(e) => checks.push(Check {
                name: e.to_string(),
                residual: f64::INFINITY,
                tolerance: 0.0,
                pass: false,
            }),
        }
    }
    (checks, purity)
}

fn cmd_validate(input: &Path, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let file = match load(input, err) {
        Ok(f) => f,
        Err(code) => return code,
    };
    let (checks, purity) = validate(&file);
    for c in &checks {
        let _ = writeln!(
            out,
            "{} {}: residual {:e} (tolerance {:e})",
            if c.pass { "PASS" } else { "FAIL" },
            c.name,
            c.residual,
            c.tolerance
        );
    }
    if let Some(p) = purity {
        let _ = writeln!(out, "purity: {:.12}", sig12(p));
    }
    let failed: Vec<&Check> = checks.iter().filter(|c| !c.pass).collect();
    if failed.is_empty() {
        EXIT_OK
    } else {
        for c in failed {
            let _ = writeln!(err, "validation failed: {}", c.name);
        }
        EXIT_DOMAIN
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        assert_eq!(sig12(1.6000000000000003), 1.6);
        assert_eq!(sig12(-0.0), 0.0);
        assert_eq!(sig12(1.0 / 3.0), 0.333333333333);
        assert_eq!(residual4(2.220446049250313e-16), 2.22e-16);
    }

    #[test]
    fn triple_parsing() {
        assert_eq!(parse_triple("0, -0.6,1e-1").unwrap(), [0.0, -0.6, 0.1]);
        assert!(parse_triple("0,0").is_err());
        assert!(parse_triple("a,0,0").is_err());
    }

    #[test]
    fn rejects_bad_shapes() {
        let text = r#"{"dimension": 2, "rho": [[[1,0],[0,0]]], "observables": []}"#;
        assert!(ProblemFile::parse(text).unwrap_err().contains("rho"));
        let unknown = r#"{"dimension": 1, "rho": [[[1,0]]], "observables": [], "extra": 1}"#;
        assert!(ProblemFile::parse(unknown).is_err());
    }

    #[test]
    fn options_default() {
        let text = r#"{"dimension": 1, "rho": [[[1,0]]], "observables": []}"#;
        let file = ProblemFile::parse(text).unwrap();
        assert_eq!(file.options, Options::default());
        assert_eq!(file.options.seed, 42);
    }
}
