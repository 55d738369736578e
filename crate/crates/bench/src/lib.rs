//! Spectrum families, timing and accuracy records for the four
//! reconstructions, and CSV/JSON reports.

pub mod error;
pub mod family;
pub mod harness;
pub mod report;
pub mod rng;

pub use error::{BenchError, Result};
pub use family::{generate_spectrum, FamilyKind, SpectrumFamily};
pub use harness::{roundtrip_error, run_benchmark, BenchConfig, BenchRecord, RoundTrip};
pub use persym_core::{Algorithm, MonicJacobi, Spectrum};
pub use report::{write_csv, write_json, CSV_HEADER};
pub use rng::SplitMix64;
