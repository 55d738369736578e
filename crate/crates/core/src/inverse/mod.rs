//! Reconstruction of a persymmetric Jacobi matrix from its spectrum.
//!
//! Four routes are provided and agree to working precision:
//!
//! * [`reconstruct_gram_schmidt_full`]: Stieltjes orthogonalization against
//!   the persymmetric weights on all `N + 1` points;
//! * [`reconstruct_lagrange_euclid`]: `P_N` by interpolating
//!   `chi_N(x_s) = (-1)^{N+s}`, then Euclidean descent from `P_{N+1}`;
//! * [`reconstruct_mirror_fold`]: descent started from the closed-form middle
//!   pair `P_{L+1}, P_L`, upper half filled by mirroring;
//! * [`reconstruct_half_lattice`]: Stieltjes on one parity sublattice up to
//!   degree `L - 1`, closed by the middle pair, then mirrored.
//!
//! Every route maps the spectrum affinely onto `[-1, 1]` first and maps the
//! recurrence coefficients back afterwards.

mod euclid;
mod midpoint;
mod moments;

use std::fmt;
use std::str::FromStr;

pub use euclid::{euclid_descend, euclid_descend_with, DEFAULT_TOLERANCE};
pub use midpoint::{midpoint_data, midpoint_polys, MidpointData, MidpointPolys};
pub use moments::{
    divided_difference, moments, poly_from_moments_hankel, sublattice_weights, table_moments,
    MomentSequence, SublatticeWeights, HANKEL_MAX_ORDER,
};

use crate::error::{Error, Result};
use crate::jacobi::{weights_persymmetric, MonicJacobi, Spectrum, WeightTable};
use crate::poly::{lagrange_interpolate, poly_from_roots};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    GramSchmidt,
    LagrangeEuclid,
    MirrorFold,
    HalfLattice,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::GramSchmidt,
        Algorithm::LagrangeEuclid,
        Algorithm::MirrorFold,
        Algorithm::HalfLattice,
    ];

    /// Short identifier: `gs`, `le`, `mf` or `hl`.
    pub fn id(self) -> &'static str {
        match self {
            Algorithm::GramSchmidt => "gs",
            Algorithm::LagrangeEuclid => "le",
            Algorithm::MirrorFold => "mf",
            Algorithm::HalfLattice => "hl",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.id() == s)
            .ok_or_else(|| Error::UnknownAlgorithm(s.to_string()))
    }
}

pub fn reconstruct(spec: &Spectrum, algorithm: Algorithm) -> Result<MonicJacobi> {
    reconstruct_with(spec, algorithm, DEFAULT_TOLERANCE)
}

/// Runs `algorithm` with `tol` as the consistency tolerance of the
/// Euclidean descent (ignored by the Stieltjes-only route).
pub fn reconstruct_with(spec: &Spectrum, algorithm: Algorithm, tol: f64) -> Result<MonicJacobi> {
    if spec.order() == 0 {
        return MonicJacobi::new(spec.points().to_vec(), Vec::new());
    }
    let (unit, scale, shift) = normalize(spec)?;
    let k = match algorithm {
        Algorithm::GramSchmidt => gram_schmidt_unit(&unit)?,
        Algorithm::LagrangeEuclid => lagrange_euclid_unit(&unit, tol)?,
        Algorithm::MirrorFold => mirror_fold_unit(&unit, tol)?,
        Algorithm::HalfLattice => half_lattice_unit(&unit)?,
    };
    Ok(k.affine(scale, shift))
}

pub fn reconstruct_gram_schmidt_full(spec: &Spectrum) -> Result<MonicJacobi> {
    reconstruct(spec, Algorithm::GramSchmidt)
}

pub fn reconstruct_lagrange_euclid(spec: &Spectrum) -> Result<MonicJacobi> {
    reconstruct(spec, Algorithm::LagrangeEuclid)
}

pub fn reconstruct_mirror_fold(spec: &Spectrum) -> Result<MonicJacobi> {
    reconstruct(spec, Algorithm::MirrorFold)
}

pub fn reconstruct_half_lattice(spec: &Spectrum) -> Result<MonicJacobi> {
    reconstruct(spec, Algorithm::HalfLattice)
}

/// Maps the spectrum onto `[-1, 1]`; returns the image together with the
/// scale and shift of the inverse map.
fn normalize(spec: &Spectrum) -> Result<(Spectrum, f64, f64)> {
    let x = spec.points();
    let (lo, hi) = (x[0], x[x.len() - 1]);
    let shift = 0.5 * (lo + hi);
    let scale = 0.5 * (hi - lo);
    let mut y: Vec<f64> = x.iter().map(|v| (v - shift) / scale).collect();
    let last = y.len() - 1;
    y[0] = -1.0;
    y[last] = 1.0;
    Ok((Spectrum::from_sorted(y)?, scale, shift))
}

/// Stieltjes procedure on a discrete measure.
///
/// Produces `b_0..b_{nb-1}` and `u_1..u_{nu}` (requires `nu <= nb`). Vectors
/// of polynomial values on the nodes are rescaled every step so that only
/// the norm ratios, which are the `u_n`, are ever formed.
pub(crate) fn stieltjes(table: &WeightTable, nb: usize, nu: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    debug_assert!(nu <= nb);
    let x = table.points.points();
    let w = &table.weights;
    let m = x.len();
    let mut p_prev = vec![0.0; m];
    let mut p = vec![1.0; m];
    let mut next = vec![0.0; m];
    let mut norm: f64 = w.iter().sum();
    if !(norm > 0.0) {
        return Err(Error::StieltjesBreakdown(0));
    }
    let mut b = Vec::with_capacity(nb);
    let mut u = Vec::with_capacity(nu);
    for n in 0..nb {
        let bn = (0..m).map(|s| w[s] * x[s] * p[s] * p[s]).sum::<f64>() / norm;
        b.push(bn);
        if n + 1 > nu {
            continue;
        }
        let un = if n == 0 { 0.0 } else { u[n - 1] };
        let mut next_norm = 0.0;
        for s in 0..m {
            next[s] = (x[s] - bn) * p[s] - un * p_prev[s];
            next_norm += w[s] * next[s] * next[s];
        }
        if !(next_norm > 0.0 && next_norm.is_finite()) {
            return Err(Error::StieltjesBreakdown(n + 1));
        }
        u.push(next_norm / norm);
        let r = 1.0 / next_norm.sqrt();
        for s in 0..m {
            p_prev[s] = p[s] * r;
            p[s] = next[s] * r;
        }
        norm = 1.0;
    }
    Ok((b, u))
}

/// Fills `b_0..b_N`, `u_1..u_N` from their lower halves using
/// `b_{N-i} = b_i` and `u_{N+1-i} = u_i`.
fn mirror(order: usize, lower_b: &[f64], lower_u: &[f64]) -> Result<MonicJacobi> {
    let b = (0..=order).map(|i| lower_b[i.min(order - i)]).collect();
    let u = (1..=order)
        .map(|i| lower_u[i.min(order + 1 - i) - 1])
        .collect();
    assemble(b, u)
}

fn assemble(b: Vec<f64>, u: Vec<f64>) -> Result<MonicJacobi> {
    MonicJacobi::new(b, u).map_err(|e| match e {
        Error::NonPositiveCoupling { index, value } => Error::NumericalBreakdown(format!(
            "reconstructed u_{index} = {value:e} is not positive"
        )),
        Error::NonFinite(i) => {
            Error::NumericalBreakdown(format!("reconstructed b_{i} is not finite"))
        }
        other => other,
    })
}

fn gram_schmidt_unit(spec: &Spectrum) -> Result<MonicJacobi> {
    let order = spec.order();
    let (table, _) = weights_persymmetric(spec)?;
    let (b, u) = stieltjes(&table, order + 1, order)?;
    assemble(b, u)
}

fn lagrange_euclid_unit(spec: &Spectrum, tol: f64) -> Result<MonicJacobi> {
    let order = spec.order();
    let x = spec.points();
    let data: Vec<(f64, f64)> = x
        .iter()
        .enumerate()
        .map(|(s, &xs)| (xs, if (order + s) % 2 == 0 { 1.0 } else { -1.0 }))
        .collect();
    let chi_n = lagrange_interpolate(&data)?;
    if chi_n.degree() != Some(order) {
        return Err(Error::EuclidBreakdown {
            degree: order,
            reason: format!("interpolant has degree {:?}", chi_n.degree()),
        });
    }
    let p_n = chi_n.monic();
    let p_top = poly_from_roots(x);
    let (b, u) = euclid::descend_to_bottom(p_top, p_n, tol)?;
    assemble(b, u)
}

fn mirror_fold_unit(spec: &Spectrum, tol: f64) -> Result<MonicJacobi> {
    let order = spec.order();
    let mp = midpoint_polys(&midpoint_data(spec)?)?;
    let (mut b, mut u) = euclid::descend_to_bottom(mp.upper, mp.lower, tol)?;
    if order % 2 == 1 {
        u.push(mp.coeff);
    } else {
        let l = order / 2;
        b[l] = mp.coeff;
    }
    mirror(order, &b, &u)
}

fn half_lattice_unit(spec: &Spectrum) -> Result<MonicJacobi> {
    let order = spec.order();
    let l = order / 2;
    let sub = sublattice_weights(spec)?;
    let mp = midpoint_polys(&midpoint_data(spec)?)?;
    let (upper, lower) = (mp.upper.coeffs(), mp.lower.coeffs());
    // coefficient of x^i in P_L, zero below the constant term
    let lower_at = |i: Option<usize>| i.map_or(0.0, |i| lower[i]);

    if order % 2 == 1 {
        let table = sub.even.as_ref().expect("odd order has an even sublattice");
        let (mut b, mut u) = stieltjes(table, l, l)?;
        // compare x^L in P_{L+1} = (x - b_L) P_L - u_L P_{L-1}
        b.push(lower_at(l.checked_sub(1)) - upper[l]);
        u.push(mp.coeff);
        mirror(order, &b, &u)
    } else {
        let (mut b, mut u) = stieltjes(&sub.odd, l, l - 1)?;
        let b_l = mp.coeff;
        // compare x^{L-1} in the same relation
        let u_l = lower_at(l.checked_sub(2)) - b_l * lower[l - 1] - upper[l - 1];
        b.push(b_l);
        u.push(u_l);
        mirror(order, &b, &u)
    }
}
