use std::time::Instant;

use persym_core::{eigenvalues, reconstruct, Algorithm, MonicJacobi, Spectrum};
use serde::{Deserialize, Serialize};

use crate::error::{BenchError, Result};
use crate::family::{generate_spectrum, FamilyKind, SpectrumFamily};

/// Records whose entry error or spectral residual exceeds this are flagged.
pub const FLAG_THRESHOLD: f64 = 1e-4;

pub const DEFAULT_REPS: usize = 20;

/// Accuracy of one reconstruction.
#[derive(Debug, Clone, PartialEq)]
pub struct RoundTrip {
    /// Against the ground truth, when there is one.
    pub entry_err: Option<f64>,
    pub spectral_residual: Option<f64>,
    /// Solver or eigenvalue error message, when the round trip failed.
    pub failure: Option<String>,
}

pub fn roundtrip_error(
    spec: &Spectrum,
    algorithm: Algorithm,
    truth: Option<&MonicJacobi>,
) -> RoundTrip {
    assess(spec, reconstruct(spec, algorithm), truth)
}

fn assess(
    spec: &Spectrum,
    result: persym_core::Result<MonicJacobi>,
    truth: Option<&MonicJacobi>,
) -> RoundTrip {
    let k = match result {
        Ok(k) => k,
        Err(e) => return RoundTrip::failed(e.to_string()),
    };
    let residual = match eigenvalues(&k) {
        Ok(back) => back.max_deviation(spec),
        Err(e) => return RoundTrip::failed(e.to_string()),
    };
    let entry_err = truth
        .filter(|t| t.order() == k.order())
        .map(|t| k.max_entry_deviation(t));
    RoundTrip {
        entry_err: entry_err.filter(|e| e.is_finite()),
        spectral_residual: Some(residual).filter(|r| r.is_finite()),
        failure: None,
    }
}

impl RoundTrip {
    fn failed(msg: String) -> Self {
        Self {
            entry_err: None,
            spectral_residual: None,
            failure: Some(msg),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub family: FamilyKind,
    #[serde(rename = "N")]
    pub n: usize,
    pub algorithm: String,
    /// Median over `reps` timed calls, failed calls included.
    pub median_ns: u64,
    pub entry_err: Option<f64>,
    pub spectral_residual: Option<f64>,
    pub reps: usize,
    #[serde(skip)]
    pub failure: Option<String>,
}

impl BenchRecord {
    pub fn is_flagged(&self) -> bool {
        self.failure.is_some()
            || self.entry_err.is_some_and(|e| e > FLAG_THRESHOLD)
            || self.spectral_residual.is_some_and(|r| r > FLAG_THRESHOLD)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BenchConfig {
    pub families: Vec<SpectrumFamily>,
    #[serde(with = "algorithm_ids")]
    pub algorithms: Vec<Algorithm>,
    #[serde(default = "default_reps")]
    pub reps: usize,
}

fn default_reps() -> usize {
    DEFAULT_REPS
}

impl Default for BenchConfig {
    fn default() -> Self {
        let mut families = Vec::new();
        for n in [16, 64, 128, 256] {
            families.push(SpectrumFamily::new(FamilyKind::SymmetricLinear, n));
            families.push(SpectrumFamily::new(FamilyKind::RandomGap, n).with_seed(42));
        }
        Self {
            families,
            algorithms: Algorithm::ALL.to_vec(),
            reps: DEFAULT_REPS,
        }
    }
}

impl BenchConfig {
    pub fn empty() -> Self {
        Self {
            families: Vec::new(),
            algorithms: Vec::new(),
            reps: 1,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.reps == 0 {
            return Err(BenchError::InvalidConfig("reps must be at least 1".into()));
        }
        Ok(())
    }
}

mod algorithm_ids {
    use persym_core::Algorithm;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(algs: &[Algorithm], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(algs.iter().map(|a| a.id()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Algorithm>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| s.parse().map_err(D::Error::custom))
            .collect()
    }
}

/// One record per (family, algorithm), families in order.
///
/// Spectra are generated outside the timed region. The first call per cell
/// is untimed and supplies the accuracy fields; `reps` further calls are
/// timed one at a time.
pub fn run_benchmark(config: &BenchConfig) -> Result<Vec<BenchRecord>> {
    config.validate()?;
    let mut records = Vec::with_capacity(config.families.len() * config.algorithms.len());
    for fam in &config.families {
        let spec = generate_spectrum(fam)?;
        let truth = fam.ground_truth();
        for &alg in &config.algorithms {
            let rt = roundtrip_error(&spec, alg, truth.as_ref());
            let mut times: Vec<u64> = (0..config.reps)
                .map(|_| {
                    let start = Instant::now();
                    let out = reconstruct(&spec, alg);
                    let elapsed = start.elapsed();
                    std::hint::black_box(out).ok();
                    elapsed.as_nanos() as u64
                })
                .collect();
            records.push(BenchRecord {
                family: fam.kind,
                n: fam.n,
                algorithm: alg.id().to_string(),
                median_ns: median(&mut times),
                entry_err: rt.entry_err,
                spectral_residual: rt.spectral_residual,
                reps: config.reps,
                failure: rt.failure,
            });
        }
    }
    Ok(records)
}

fn median(xs: &mut [u64]) -> u64 {
    xs.sort_unstable();
    let m = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[m]
    } else {
        xs[m - 1] / 2 + xs[m] / 2 + (xs[m - 1] % 2 + xs[m] % 2) / 2
    }
}
