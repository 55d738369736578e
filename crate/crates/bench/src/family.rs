use persym_core::{MonicJacobi, Spectrum};
use serde::{Deserialize, Serialize};

use crate::error::{BenchError, Result};
use crate::rng::SplitMix64;

pub const DEFAULT_MIN_GAP: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    /// `x_s = offset + step * s`
    UniformLinear,
    /// `x_s = offset + step * (s - N/2)`
    SymmetricLinear,
    /// `x_s = offset + step * s^2`
    Quadratic,
    /// `x_0 = offset`, `x_s = x_{s-1} + min_gap + step * U_s`
    RandomGap,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 4] = [
        FamilyKind::UniformLinear,
        FamilyKind::SymmetricLinear,
        FamilyKind::Quadratic,
        FamilyKind::RandomGap,
    ];

    pub fn id(self) -> &'static str {
        match self {
            FamilyKind::UniformLinear => "uniform-linear",
            FamilyKind::SymmetricLinear => "symmetric-linear",
            FamilyKind::Quadratic => "quadratic",
            FamilyKind::RandomGap => "random-gap",
        }
    }
}

impl std::fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpectrumFamily {
    pub kind: FamilyKind,
    #[serde(rename = "N", alias = "n")]
    pub n: usize,
    #[serde(default)]
    pub offset: f64,
    /// Defaults to `2 / N`.
    #[serde(default)]
    pub step: Option<f64>,
    #[serde(default)]
    pub seed: u64,
    /// Random family only; the lattices have gap `step`.
    #[serde(default = "default_min_gap")]
    pub min_gap: f64,
}

fn default_min_gap() -> f64 {
    DEFAULT_MIN_GAP
}

impl SpectrumFamily {
    pub fn new(kind: FamilyKind, n: usize) -> Self {
        Self {
            kind,
            n,
            offset: 0.0,
            step: None,
            seed: 0,
            min_gap: DEFAULT_MIN_GAP,
        }
    }

    pub fn with_offset(mut self, offset: f64) -> Self {
        self.offset = offset;
        self
    }

    pub fn with_step(mut self, step: f64) -> Self {
        self.step = Some(step);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_min_gap(mut self, min_gap: f64) -> Self {
        self.min_gap = min_gap;
        self
    }

    pub fn step(&self) -> f64 {
        self.step.unwrap_or(2.0 / self.n.max(1) as f64)
    }

    /// The persymmetric matrix whose spectrum this family is, where known
    /// in closed form (the two linear lattices).
    pub fn ground_truth(&self) -> Option<MonicJacobi> {
        let n = self.n;
        let step = self.step();
        let center = match self.kind {
            FamilyKind::UniformLinear => self.offset + step * n as f64 / 2.0,
            FamilyKind::SymmetricLinear => self.offset,
            _ => return None,
        };
        let u = (1..=n)
            .map(|k| step * step / 4.0 * (k * (n + 1 - k)) as f64)
            .collect();
        MonicJacobi::new(vec![center; n + 1], u).ok()
    }
}

pub fn generate_spectrum(fam: &SpectrumFamily) -> Result<Spectrum> {
    let n = fam.n;
    if n == 0 {
        return Err(BenchError::InvalidFamily("N must be at least 1".into()));
    }
    let step = fam.step();
    if !step.is_finite() || !fam.offset.is_finite() || !fam.min_gap.is_finite() {
        return Err(BenchError::InvalidFamily(
            "parameters must be finite".into(),
        ));
    }
    if fam.min_gap < 0.0 {
        return Err(BenchError::InvalidFamily(
            "min_gap must be nonnegative".into(),
        ));
    }
    let half = n as f64 / 2.0;
    let points: Vec<f64> = match fam.kind {
        FamilyKind::UniformLinear => (0..=n).map(|s| fam.offset + step * s as f64).collect(),
        FamilyKind::SymmetricLinear => (0..=n)
            .map(|s| fam.offset + step * (s as f64 - half))
            .collect(),
        FamilyKind::Quadratic => (0..=n)
            .map(|s| fam.offset + step * (s * s) as f64)
            .collect(),
        FamilyKind::RandomGap => {
            let mut rng = SplitMix64::new(fam.seed);
            let mut x = fam.offset;
            let mut pts = vec![x];
            for _ in 0..n {
                x += fam.min_gap + step * rng.next_f64();
                pts.push(x);
            }
            pts
        }
    };
    if points.windows(2).any(|w| w[1] <= w[0]) {
        return Err(BenchError::InvalidFamily(format!(
            "{} spectrum with step {step} is not strictly increasing",
            fam.kind
        )));
    }
    Ok(Spectrum::from_sorted(points)?)
}
