use std::fs;
use std::io::Write;
use std::path::Path;

use persym_core::{MonicJacobi, Spectrum, SymmetricJacobi};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

/// `{"n": N, "b": [N+1 reals], "a": [N reals]}`; extra fields are ignored
/// so that command outputs can be fed back in.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub n: usize,
    pub b: Vec<f64>,
    pub a: Vec<f64>,
}

impl MatrixFile {
    pub fn to_matrix(&self) -> Result<SymmetricJacobi> {
        if self.b.len() != self.n + 1 || self.a.len() != self.n {
            return Err(CliError::input(format!(
                "n = {} needs {} diagonal and {} off-diagonal entries, found {} and {}",
                self.n,
                self.n + 1,
                self.n,
                self.b.len(),
                self.a.len()
            )));
        }
        Ok(SymmetricJacobi::new(self.b.clone(), self.a.clone())?)
    }

    pub fn from_matrix(j: &SymmetricJacobi) -> Self {
        Self {
            n: j.order(),
            b: j.b.clone(),
            a: j.a.clone(),
        }
    }

    pub fn from_monic(k: &MonicJacobi) -> Self {
        Self::from_matrix(&k.to_symmetric())
    }
}

/// `{"spectrum": [reals]}`, any order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumFile {
    pub spectrum: Vec<f64>,
}

impl SpectrumFile {
    /// Sorted, with duplicates rejected.
    pub fn to_spectrum(&self) -> Result<Spectrum> {
        Ok(Spectrum::new(self.spectrum.clone())?)
    }
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::input(format!("cannot parse {}: {e}", path.display())))
}

/// Writes to `out`, or standard output when absent.
pub fn emit(out: Option<&Path>, bytes: &[u8]) -> Result<()> {
    match out {
        Some(path) => fs::write(path, bytes)
            .map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(bytes)
            .map_err(|e| CliError::input(format!("cannot write output: {e}"))),
    }
}

pub fn emit_json<T: Serialize>(out: Option<&Path>, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value).expect("output values are finite");
    text.push('\n');
    emit(out, text.as_bytes())
}
