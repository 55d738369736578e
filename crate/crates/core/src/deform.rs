//! Isospectral deformation `J -> V J V` of a persymmetric Jacobi matrix by
//! the symmetric involution
//!
//! ```text
//!     V = [ sinθ I    cosθ R ]        (N odd)
//!         [ cosθ R   -sinθ I ]
//! ```
//!
//! with a central `1` and zero central row and column otherwise for even
//! `N`. Only the couplings around the middle of the chain change.

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::jacobi::{OrthoPolySystem, SymmetricJacobi, WeightTable};
use crate::poly::Polynomial;

/// Tolerance on `|cos 2θ|` below which the polynomial transformation is
/// singular.
pub const SINGULAR_COS_TOL: f64 = 1e-10;

/// Persymmetry tolerance applied to inputs of the deformation.
pub const PERSYMMETRY_TOL: f64 = 1e-10;

/// Deformation parameter, reduced into `[0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeformationAngle(f64);

impl DeformationAngle {
    pub fn new(theta: f64) -> Self {
        Self(theta.rem_euclid(TAU))
    }

    pub fn radians(self) -> f64 {
        self.0
    }

    pub fn sin2(self) -> f64 {
        (2.0 * self.0).sin()
    }

    pub fn cos2(self) -> f64 {
        (2.0 * self.0).cos()
    }

    pub fn is_singular(self) -> bool {
        self.cos2().abs() < SINGULAR_COS_TOL
    }
}

impl From<f64> for DeformationAngle {
    fn from(theta: f64) -> Self {
        Self::new(theta)
    }
}

/// Dense `(N+1) x (N+1)` involution, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseInvolution {
    pub entries: Vec<Vec<f64>>,
}

impl DenseInvolution {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// Largest entry of `V^2 - I`.
    pub fn involution_defect(&self) -> f64 {
        let sq = matmul(&self.entries, &self.entries);
        let mut worst = 0.0f64;
        for (i, row) in sq.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((v - target).abs());
            }
        }
        worst
    }
}

pub fn build_involution(order: usize, theta: DeformationAngle) -> DenseInvolution {
    let dim = order + 1;
    let (s, c) = theta.radians().sin_cos();
    let mut v = vec![vec![0.0; dim]; dim];
    for i in 0..dim {
        let mirror = order - i;
        if i == mirror {
            v[i][i] = 1.0;
            continue;
        }
        v[i][i] = if i < mirror { s } else { -s };
        v[i][mirror] = c;
    }
    DenseInvolution { entries: v }
}

fn check_persymmetric(j: &SymmetricJacobi) -> Result<()> {
    let defect = j.persymmetry_defect();
    if defect > PERSYMMETRY_TOL * j.max_abs_entry().max(1.0) {
        return Err(Error::NotPersymmetric(defect));
    }
    Ok(())
}

/// `V J V` by dense products. Reference route for [`deform_closed_form`].
pub fn deform_conjugate(j: &SymmetricJacobi, theta: DeformationAngle) -> Result<SymmetricJacobi> {
    check_persymmetric(j)?;
    let v = build_involution(j.order(), theta);
    let prod = matmul(&matmul(&v.entries, &j.to_dense()), &v.entries);
    let dim = prod.len();
    let scale = j.max_abs_entry().max(1.0);
    let mut stray = 0.0f64;
    for (r, row) in prod.iter().enumerate() {
        for (c, val) in row.iter().enumerate() {
            if r.abs_diff(c) > 1 {
                stray = stray.max(val.abs());
            }
        }
    }
    if stray > 1e-10 * scale {
        return Err(Error::NotTridiagonal(stray));
    }
    let b = (0..dim).map(|i| prod[i][i]).collect();
    let a = (1..dim).map(|i| prod[i - 1][i]).collect();
    Ok(SymmetricJacobi { b, a })
}

/// Entry updates of `V J V`:
///
/// * odd `N`: `ã_{(N+1)/2} = a cos2θ`, `b̃_{(N∓1)/2} = b_{(N-1)/2} ± a sin2θ`
///   with `a = a_{(N+1)/2}`;
/// * even `N`: `ã_{N/2} = a (cosθ + sinθ)`, `ã_{N/2+1} = a (cosθ - sinθ)`
///   with `a = a_{N/2}`.
pub fn deform_closed_form(j: &SymmetricJacobi, theta: DeformationAngle) -> Result<SymmetricJacobi> {
    check_persymmetric(j)?;
    let order = j.order();
    let mut out = j.clone();
    if order == 0 {
        return Ok(out);
    }
    if order % 2 == 1 {
        let l = (order - 1) / 2;
        // a_{L+1} sits at index L
        let a_mid = j.a[l];
        out.a[l] = a_mid * theta.cos2();
        out.b[l] = j.b[l] + a_mid * theta.sin2();
        out.b[l + 1] = j.b[l] - a_mid * theta.sin2();
    } else {
        let half = order / 2;
        let (s, c) = theta.radians().sin_cos();
        let a_mid = j.a[half - 1];
        out.a[half - 1] = a_mid * (c + s);
        out.a[half] = a_mid * (c - s);
    }
    Ok(out)
}

/// Weights of the deformed matrix for odd `N`:
/// `w̃_{2s} = w_{2s} (1 - sin2θ)`, `w̃_{2s+1} = w_{2s+1} (1 + sin2θ)`.
pub fn deformed_weights(w: &WeightTable, theta: DeformationAngle) -> Result<WeightTable> {
    let order = w.weights.len().saturating_sub(1);
    if order % 2 == 0 {
        return Err(Error::EvenOrder(order));
    }
    let s2 = theta.sin2();
    let weights = w
        .weights
        .iter()
        .enumerate()
        .map(|(s, &ws)| {
            if s % 2 == 0 {
                ws * (1.0 - s2)
            } else {
                ws * (1.0 + s2)
            }
        })
        .collect();
    Ok(WeightTable {
        points: w.points.clone(),
        weights,
    })
}

/// Orthonormal polynomials `χ̃_0..χ̃_N` of the deformed matrix for odd `N`:
/// unchanged for `n <= (N-1)/2`, otherwise
/// `χ̃_n = χ_n / cos2θ - tan2θ · χ_{N-n}`.
pub fn deformed_polynomials(
    sys: &OrthoPolySystem,
    theta: DeformationAngle,
) -> Result<Vec<Polynomial>> {
    let order = sys.order();
    if order % 2 == 0 {
        return Err(Error::EvenOrder(order));
    }
    if theta.is_singular() {
        return Err(Error::SingularAngle(theta.radians()));
    }
    let chi = sys.orthonormal();
    let (s2, c2) = (theta.sin2(), theta.cos2());
    let half = (order - 1) / 2;
    Ok((0..=order)
        .map(|n| {
            if n <= half {
                chi[n].clone()
            } else {
                &chi[n].scale(1.0 / c2) - &chi[order - n].scale(s2 / c2)
            }
        })
        .collect())
}

fn matmul(a: &[Vec<f64>], b: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![0.0; m]; n];
    for i in 0..n {
        for (k, bk) in b.iter().enumerate() {
            let aik = a[i][k];
            if aik == 0.0 {
                continue;
            }
            for j in 0..m {
                out[i][j] += aik * bk[j];
            }
        }
    }
    out
}
