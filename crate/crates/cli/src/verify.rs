use persym_core::inverse::{
    midpoint_data, midpoint_polys, moments, sublattice_weights, table_moments,
};
use persym_core::{
    eigenvalues, mirror_residual, reconstruct, recurrence_polynomials, weights_general,
    weights_persymmetric, Algorithm, MonicJacobi, Spectrum, WeightTable,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub residual: Option<f64>,
    pub threshold: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub n: usize,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl Check {
    fn measured(name: &str, residual: f64, threshold: f64) -> Self {
        let ok = residual.is_finite() && residual <= threshold;
        Self {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            residual: Some(residual).filter(|r| r.is_finite()),
            threshold,
            detail: None,
        }
    }

    fn failed(name: &str, threshold: f64, detail: impl ToString) -> Self {
        Self {
            name: name.into(),
            status: Status::Fail,
            residual: None,
            threshold,
            detail: Some(detail.to_string()),
        }
    }

    fn skipped(name: &str, threshold: f64, detail: &str) -> Self {
        Self {
            name: name.into(),
            status: Status::Skipped,
            residual: None,
            threshold,
            detail: Some(detail.into()),
        }
    }
}

pub const AGREEMENT_TOL: f64 = 1e-8;
pub const ROUND_TRIP_TOL: f64 = 1e-8;
pub const MIRROR_TOL: f64 = 1e-9;
pub const WEIGHT_TOL: f64 = 1e-12;
pub const NORM_TOL: f64 = 1e-10;
pub const MOMENT_TOL: f64 = 1e-11;
pub const GRAM_TOL: f64 = 1e-9;
pub const MIDPOINT_TOL: f64 = 1e-9;

pub fn verify(spec: &Spectrum) -> Report {
    let mut checks = Vec::new();
    let results: Vec<(Algorithm, persym_core::Result<MonicJacobi>)> = Algorithm::ALL
        .iter()
        .map(|&alg| (alg, reconstruct(spec, alg)))
        .collect();

    for (alg, result) in &results {
        let name = format!("round_trip_{}", alg.id());
        checks.push(match result {
            Ok(k) => match eigenvalues(k) {
                Ok(back) => Check::measured(&name, back.max_deviation(spec), ROUND_TRIP_TOL),
                Err(e) => Check::failed(&name, ROUND_TRIP_TOL, e),
            },
            Err(e) => Check::failed(&name, ROUND_TRIP_TOL, e),
        });
    }

    let ok: Vec<&MonicJacobi> = results
        .iter()
        .filter_map(|(_, r)| r.as_ref().ok())
        .collect();
    checks.push(if ok.len() == results.len() {
        let spread = ok
            .iter()
            .map(|k| k.max_entry_deviation(ok[0]))
            .fold(0.0, f64::max);
        Check::measured("four_way_agreement", spread, AGREEMENT_TOL)
    } else {
        Check::failed(
            "four_way_agreement",
            AGREEMENT_TOL,
            "some reconstruction failed",
        )
    });

    // the most stable reconstruction anchors the remaining checks
    let reference = results
        .iter()
        .find(|(alg, _)| *alg == Algorithm::HalfLattice)
        .and_then(|(_, r)| r.as_ref().ok())
        .or(ok.first().copied());
    match reference {
        Some(k) => reference_checks(spec, k, &mut checks),
        None => {
            for (name, tol) in [
                ("mirror_residual", MIRROR_TOL),
                ("weight_consistency", WEIGHT_TOL),
                ("norm_consistency", NORM_TOL),
                ("midpoint", MIDPOINT_TOL),
            ] {
                checks.push(Check::failed(name, tol, "no reconstruction available"));
            }
        }
    }
    sublattice_checks(spec, reference, &mut checks);

    Report {
        n: spec.order(),
        passed: checks.iter().all(|c| c.status != Status::Fail),
        checks,
    }
}

fn reference_checks(spec: &Spectrum, k: &MonicJacobi, checks: &mut Vec<Check>) {
    checks.push(Check::measured(
        "mirror_residual",
        mirror_residual(k, spec),
        MIRROR_TOL,
    ));

    match (weights_general(k, spec), weights_persymmetric(spec)) {
        (Ok(general), Ok((persym, h_n))) => {
            checks.push(Check::measured(
                "weight_consistency",
                general.max_deviation(&persym),
                WEIGHT_TOL,
            ));
            let expected = k.norms()[k.order()];
            checks.push(Check::measured(
                "norm_consistency",
                ((h_n - expected) / expected).abs(),
                NORM_TOL,
            ));
        }
        (Err(e), _) | (_, Err(e)) => {
            checks.push(Check::failed("weight_consistency", WEIGHT_TOL, &e));
            checks.push(Check::failed("norm_consistency", NORM_TOL, e));
        }
    }

    let n = spec.order();
    if n == 0 {
        checks.push(Check::skipped("midpoint", MIDPOINT_TOL, "N = 0"));
        return;
    }
    let l = n / 2;
    checks.push(
        match midpoint_data(spec).and_then(|md| midpoint_polys(&md)) {
            Ok(mp) => {
                let entry = if n % 2 == 1 { k.u()[l] } else { k.b()[l] };
                Check::measured("midpoint", (mp.coeff - entry).abs(), MIDPOINT_TOL)
            }
            Err(e) => Check::failed("midpoint", MIDPOINT_TOL, e),
        },
    );
}

fn sublattice_checks(spec: &Spectrum, k: Option<&MonicJacobi>, checks: &mut Vec<Check>) {
    let n = spec.order();
    let sub = sublattice_weights(spec);
    let full = moments(spec, n.saturating_sub(1));
    for (parity, label) in [(0usize, "even"), (1, "odd")] {
        let moment_name = format!("sublattice_moments_{label}");
        let gram_name = format!("sublattice_orthogonality_{label}");
        let size = spec.parity_points(parity).len();
        let reason = if size < 2 {
            Some("sublattice has fewer than 2 points")
        } else if parity == 0 && n % 2 == 0 {
            Some("even sublattice is not used for even N")
        } else {
            None
        };
        if let Some(reason) = reason {
            checks.push(Check::skipped(&moment_name, MOMENT_TOL, reason));
            checks.push(Check::skipped(&gram_name, GRAM_TOL, reason));
            continue;
        }
        let table = match &sub {
            Ok(s) if parity == 0 => s.even.as_ref().expect("odd N has an even sublattice"),
            Ok(s) => &s.odd,
            Err(e) => {
                checks.push(Check::failed(&moment_name, MOMENT_TOL, e));
                checks.push(Check::failed(&gram_name, GRAM_TOL, e));
                continue;
            }
        };
        checks.push(match &full {
            Ok(c) => {
                let sub_c = table_moments(table, n - 1);
                let dev = (0..n)
                    .map(|i| (sub_c[i] - c.get(i)).abs() / c.get(i).abs().max(1.0))
                    .fold(0.0, f64::max);
                Check::measured(&moment_name, dev, MOMENT_TOL)
            }
            Err(e) => Check::failed(&moment_name, MOMENT_TOL, e),
        });
        checks.push(match k {
            // orthogonal through degree L for odd N, L - 1 for even N
            Some(k) => {
                let top = if n % 2 == 1 { n / 2 } else { n / 2 - 1 };
                Check::measured(&gram_name, gram_defect(k, table, top), GRAM_TOL)
            }
            None => Check::failed(&gram_name, GRAM_TOL, "no reconstruction available"),
        });
    }
}

/// Largest normalized off-diagonal entry of the Gram matrix of
/// `P_0..P_top` on the table.
fn gram_defect(k: &MonicJacobi, table: &WeightTable, top: usize) -> f64 {
    let sys = recurrence_polynomials(k);
    let gram: Vec<Vec<f64>> = (0..=top)
        .map(|i| {
            (0..=top)
                .map(|j| table.integrate(|x| sys.polys[i].eval(x) * sys.polys[j].eval(x)))
                .collect()
        })
        .collect();
    let mut worst = 0.0f64;
    for i in 0..=top {
        for j in 0..i {
            worst = worst.max(gram[i][j].abs() / (gram[i][i] * gram[j][j]).sqrt());
        }
    }
    worst
}
