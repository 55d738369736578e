use std::path::Path;

use persym_bench::{report, run_benchmark, BenchConfig, FamilyKind};
use persym_core::{
    deform_closed_form, deformed_weights, eigenvalues, reconstruct_with, weights_general,
    weights_persymmetric, Algorithm, DeformationAngle, SymmetricJacobi,
};
use serde::Serialize;

use crate::error::{CliError, Result};
use crate::files::{emit, emit_json, read_json, MatrixFile, SpectrumFile};
use crate::verify;
use crate::Format;

/// Largest mirror mismatch accepted by `deform`, relative to the entries.
pub const DEFORM_PERSYMMETRY_TOL: f64 = 1e-8;

#[derive(Serialize)]
struct ForwardOutput {
    spectrum: Vec<f64>,
    weights: Vec<f64>,
}

pub fn forward(path: &Path, out: Option<&Path>) -> Result<()> {
    let file: MatrixFile = read_json(path)?;
    let k = file.to_matrix()?.to_monic()?;
    let spec = eigenvalues(&k)?;
    let table = weights_general(&k, &spec)?;
    emit_json(
        out,
        &ForwardOutput {
            spectrum: spec.into_vec(),
            weights: table.weights,
        },
    )
}

#[derive(Serialize)]
struct ReconstructOutput {
    #[serde(flatten)]
    matrix: MatrixFile,
    residual: f64,
}

pub fn reconstruct(path: &Path, algorithm: Algorithm, tol: f64, out: Option<&Path>) -> Result<()> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(CliError::input(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let file: SpectrumFile = read_json(path)?;
    let spec = file.to_spectrum()?;
    let k = reconstruct_with(&spec, algorithm, tol)?;
    let residual = eigenvalues(&k)?.max_deviation(&spec);
    emit_json(
        out,
        &ReconstructOutput {
            matrix: MatrixFile::from_monic(&k),
            residual,
        },
    )
}

#[derive(Serialize)]
struct DeformOutput {
    #[serde(flatten)]
    matrix: MatrixFile,
    theta: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    weights: Option<Vec<f64>>,
}

pub fn deform(path: &Path, theta: f64, with_weights: bool, out: Option<&Path>) -> Result<()> {
    if !theta.is_finite() {
        return Err(CliError::input("theta must be finite"));
    }
    let file: MatrixFile = read_json(path)?;
    let j = file.to_matrix()?;
    let scale = j.max_abs_entry().max(1.0);
    let defect = j.persymmetry_defect();
    if defect > DEFORM_PERSYMMETRY_TOL * scale {
        return Err(CliError::input(format!(
            "matrix is not persymmetric (mirror mismatch {defect:e})"
        )));
    }
    if with_weights && j.order() % 2 == 0 {
        return Err(CliError::input(format!(
            "deformed weights need odd N, got N = {}",
            j.order()
        )));
    }
    let j = symmetrize(&j);
    let angle = DeformationAngle::new(theta);
    let deformed = deform_closed_form(&j, angle)?;
    let weights = if with_weights {
        let spec = eigenvalues(&j.to_monic()?)?;
        let (table, _) = weights_persymmetric(&spec)?;
        Some(deformed_weights(&table, angle)?.weights)
    } else {
        None
    };
    emit_json(
        out,
        &DeformOutput {
            matrix: MatrixFile::from_matrix(&deformed),
            theta,
            weights,
        },
    )
}

/// Averages mirrored entries so that tolerated asymmetry does not trip the
/// stricter check inside the deformation.
fn symmetrize(j: &SymmetricJacobi) -> SymmetricJacobi {
    let n = j.order();
    let b = (0..=n).map(|i| 0.5 * (j.b[i] + j.b[n - i])).collect();
    let a = (0..n).map(|i| 0.5 * (j.a[i] + j.a[n - 1 - i])).collect();
    SymmetricJacobi { b, a }
}

pub fn verify(path: &Path, out: Option<&Path>) -> Result<()> {
    let file: SpectrumFile = read_json(path)?;
    let spec = file.to_spectrum()?;
    let report = verify::verify(&spec);
    emit_json(out, &report)?;
    if report.passed {
        Ok(())
    } else {
        Err(CliError::Verify)
    }
}

pub fn bench(
    config: Option<&Path>,
    out: Option<&Path>,
    format: Format,
    seed: Option<u64>,
) -> Result<()> {
    let mut config: BenchConfig = match config {
        Some(path) => read_json(path)?,
        None => BenchConfig::default(),
    };
    if let Some(seed) = seed {
        for fam in &mut config.families {
            if fam.kind == FamilyKind::RandomGap {
                fam.seed = seed;
            }
        }
    }
    if let Some(path) = out {
        // fail before the run rather than after it
        std::fs::File::create(path)
            .map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display())))?;
    }
    let records = run_benchmark(&config)?;
    for r in records.iter().filter(|r| r.is_flagged()) {
        let reason = match &r.failure {
            Some(f) => f.clone(),
            None => format!(
                "entry error {:?}, spectral residual {:?}",
                r.entry_err, r.spectral_residual
            ),
        };
        eprintln!("flagged: {} N={} {}: {reason}", r.family, r.n, r.algorithm);
    }
    let text = match format {
        Format::Csv => report::csv_string(&records)?,
        Format::Json => report::json_string(&records)?,
    };
    emit(out, text.as_bytes())
}
