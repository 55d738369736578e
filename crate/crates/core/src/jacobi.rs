//! Jacobi matrices, their monic orthogonal polynomials and the forward
//! spectral problem.
//!
//! A symmetric Jacobi matrix of order `N + 1` has diagonal `b_0..b_N` and
//! off-diagonal `a_1..a_N`. The monic form carries `u_n = a_n^2` and drives
//! the recurrence
//!
//! ```text
//! P_{n+1}(x) = (x - b_n) P_n(x) - u_n P_{n-1}(x),   P_0 = 1, P_{-1} = 0,
//! ```
//!
//! whose last member `P_{N+1}` is the characteristic polynomial.

use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Relative gap below which two spectral points count as one.
pub const DUPLICATE_RELATIVE_GAP: f64 = 1e-12;

/// Strictly increasing, finite eigenvalue list `x_0 < x_1 < ... < x_N`.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum(Vec<f64>);

impl Spectrum {
    /// Accepts points in any order; sorts them and rejects near-duplicates
    /// (gap below `1e-12` times the spectral radius).
    pub fn new(mut points: Vec<f64>) -> Result<Self> {
        if let Some(i) = points.iter().position(|x| !x.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        points.sort_by(f64::total_cmp);
        Self::check(points)
    }

    /// Accepts only input that is already strictly increasing.
    pub fn from_sorted(points: Vec<f64>) -> Result<Self> {
        if let Some(i) = points.iter().position(|x| !x.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        if let Some(i) = points.windows(2).position(|w| w[1] <= w[0]) {
            return Err(Error::NotIncreasing(i + 1));
        }
        Self::check(points)
    }

    fn check(points: Vec<f64>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::Empty);
        }
        let radius = points.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        let min_gap = DUPLICATE_RELATIVE_GAP * radius;
        for w in points.windows(2) {
            if w[1] - w[0] <= min_gap {
                return Err(Error::DuplicatePoint(w[0]));
            }
        }
        Ok(Self(points))
    }

    pub fn points(&self) -> &[f64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }

    /// `N`, one less than the number of points.
    pub fn order(&self) -> usize {
        self.0.len() - 1
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn radius(&self) -> f64 {
        self.0.iter().fold(0.0f64, |m, x| m.max(x.abs()))
    }

    /// Points with even index (`parity == 0`) or odd index (`parity == 1`).
    pub fn parity_points(&self, parity: usize) -> Vec<f64> {
        self.0.iter().skip(parity).step_by(2).copied().collect()
    }

    /// Largest absolute deviation from another spectrum of the same length.
    pub fn max_deviation(&self, other: &Spectrum) -> f64 {
        if self.len() != other.len() {
            return f64::INFINITY;
        }
        self.0
            .iter()
            .zip(&other.0)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }
}

/// Symmetric tridiagonal matrix with diagonal `b` and off-diagonal `a`.
///
/// Off-diagonal entries may carry either sign; flipping the sign of `a_n` is
/// a diagonal similarity and leaves the spectral data unchanged.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricJacobi {
    pub b: Vec<f64>,
    pub a: Vec<f64>,
}

impl SymmetricJacobi {
    pub fn new(b: Vec<f64>, a: Vec<f64>) -> Result<Self> {
        if b.is_empty() {
            return Err(Error::Empty);
        }
        if a.len() + 1 != b.len() {
            return Err(Error::LengthMismatch {
                expected: b.len() - 1,
                found: a.len(),
            });
        }
        if let Some(i) = b.iter().chain(&a).position(|x| !x.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        Ok(Self { b, a })
    }

    pub fn order(&self) -> usize {
        self.a.len()
    }

    /// Monic form with `u_n = a_n^2`. Fails when some `a_n` vanishes.
    pub fn to_monic(&self) -> Result<MonicJacobi> {
        MonicJacobi::new(self.b.clone(), self.a.iter().map(|a| a * a).collect())
    }

    /// Largest violation of `a_{N+1-i} = a_i`, `b_{N-i} = b_i`.
    pub fn persymmetry_defect(&self) -> f64 {
        mirror_defect(&self.b).max(mirror_defect(&self.a))
    }

    pub fn is_persymmetric(&self, tol: f64) -> bool {
        self.persymmetry_defect() <= tol
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.b
            .iter()
            .chain(&self.a)
            .fold(0.0f64, |m, x| m.max(x.abs()))
    }

    /// Dense row-major copy.
    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let n = self.b.len();
        let mut m = vec![vec![0.0; n]; n];
        for i in 0..n {
            m[i][i] = self.b[i];
            if i + 1 < n {
                m[i][i + 1] = self.a[i];
                m[i + 1][i] = self.a[i];
            }
        }
        m
    }

    /// Orthonormal polynomials `chi_0..chi_N` with the signs of `a` kept,
    /// `chi_n = P_n / (a_1 a_2 ... a_n)`.
    pub fn orthonormal_polynomials(&self) -> Result<Vec<Polynomial>> {
        let sys = recurrence_polynomials(&self.to_monic()?);
        let mut norm = 1.0;
        let mut out = Vec::with_capacity(self.b.len());
        for (n, p) in sys.polys.iter().take(self.b.len()).enumerate() {
            if n > 0 {
                norm *= self.a[n - 1];
            }
            out.push(p.scale(1.0 / norm));
        }
        Ok(out)
    }
}

fn mirror_defect(v: &[f64]) -> f64 {
    let n = v.len();
    (0..n / 2).fold(0.0, |m, i| m.max((v[i] - v[n - 1 - i]).abs()))
}

/// Monic recurrence data `b_0..b_N`, `u_1..u_N` with every `u_n > 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct MonicJacobi {
    b: Vec<f64>,
    u: Vec<f64>,
}

impl MonicJacobi {
    pub fn new(b: Vec<f64>, u: Vec<f64>) -> Result<Self> {
        if b.is_empty() {
            return Err(Error::Empty);
        }
        if u.len() + 1 != b.len() {
            return Err(Error::LengthMismatch {
                expected: b.len() - 1,
                found: u.len(),
            });
        }
        if let Some(i) = b.iter().position(|x| !x.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        for (i, &v) in u.iter().enumerate() {
            // also rejects NaN
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::NonPositiveCoupling {
                    index: i + 1,
                    value: v,
                });
            }
        }
        Ok(Self { b, u })
    }

    pub fn b(&self) -> &[f64] {
        &self.b
    }

    /// `u_1..u_N`; `u()[0]` is `u_1`.
    pub fn u(&self) -> &[f64] {
        &self.u
    }

    pub fn order(&self) -> usize {
        self.u.len()
    }

    /// Canonical symmetric form with `a_n = +sqrt(u_n)`.
    pub fn to_symmetric(&self) -> SymmetricJacobi {
        SymmetricJacobi {
            b: self.b.clone(),
            a: self.u.iter().map(|u| u.sqrt()).collect(),
        }
    }

    /// Adds `c` to every diagonal entry.
    pub fn shifted(&self, c: f64) -> Self {
        Self {
            b: self.b.iter().map(|b| b + c).collect(),
            u: self.u.clone(),
        }
    }

    /// Image under `x -> scale * x + shift` with `scale > 0`.
    pub fn affine(&self, scale: f64, shift: f64) -> Self {
        Self {
            b: self.b.iter().map(|b| scale * b + shift).collect(),
            u: self.u.iter().map(|u| scale * scale * u).collect(),
        }
    }

    /// Norms `h_0 = 1, h_n = u_1 ... u_n` for `n = 0..=N`.
    pub fn norms(&self) -> Vec<f64> {
        let mut h = Vec::with_capacity(self.u.len() + 1);
        h.push(1.0);
        for &u in &self.u {
            h.push(h.last().unwrap() * u);
        }
        h
    }

    pub fn persymmetry_defect(&self) -> f64 {
        mirror_defect(&self.b).max(mirror_defect(&self.u))
    }

    pub fn is_persymmetric(&self, tol: f64) -> bool {
        self.persymmetry_defect() <= tol
    }

    /// Largest entrywise difference in `b` and in `a = sqrt(u)`.
    pub fn max_entry_deviation(&self, other: &MonicJacobi) -> f64 {
        if self.b.len() != other.b.len() {
            return f64::INFINITY;
        }
        let db = self
            .b
            .iter()
            .zip(&other.b)
            .fold(0.0f64, |m, (x, y)| m.max((x - y).abs()));
        let da = self
            .u
            .iter()
            .zip(&other.u)
            .fold(0.0f64, |m, (x, y)| m.max((x.sqrt() - y.sqrt()).abs()));
        db.max(da)
    }

    /// Values `P_0(x)..P_{N+1}(x)`.
    pub fn eval_all(&self, x: f64) -> Vec<f64> {
        let n = self.b.len();
        let mut out = Vec::with_capacity(n + 1);
        out.push(1.0);
        let mut prev = 0.0;
        let mut cur = 1.0;
        for k in 0..n {
            let u = if k == 0 { 0.0 } else { self.u[k - 1] };
            let next = (x - self.b[k]) * cur - u * prev;
            out.push(next);
            prev = cur;
            cur = next;
        }
        out
    }

    /// Number of eigenvalues strictly below `lambda`: the number of sign
    /// agreements between consecutive members of `P_0(λ)..P_{N+1}(λ)`,
    /// tracked through the ratios `P_{n+1}/P_n` so nothing overflows.
    pub fn count_below(&self, lambda: f64) -> usize {
        let mut count = 0;
        let mut ratio = 1.0;
        for k in 0..self.b.len() {
            let u = if k == 0 { 0.0 } else { self.u[k - 1] };
            let mut r = (lambda - self.b[k]) - u / ratio;
            if r == 0.0 {
                r = -f64::EPSILON
                    * (lambda.abs() + u.sqrt() + self.b[k].abs()).max(f64::MIN_POSITIVE);
            }
            if r > 0.0 {
                count += 1;
            }
            ratio = r;
        }
        count
    }

    /// `P_{N+1}(x)` and its derivative, jointly rescaled by a power of two.
    /// Only the ratio is meaningful.
    fn char_and_derivative_scaled(&self, x: f64) -> (f64, f64) {
        let (mut p_prev, mut p) = (0.0, 1.0);
        let (mut d_prev, mut d) = (0.0, 0.0);
        for k in 0..self.b.len() {
            let u = if k == 0 { 0.0 } else { self.u[k - 1] };
            let t = x - self.b[k];
            let p_next = t * p - u * p_prev;
            let d_next = p + t * d - u * d_prev;
            p_prev = p;
            p = p_next;
            d_prev = d;
            d = d_next;
            let big = p.abs().max(d.abs());
            if big > 1e100 {
                let s = 2f64.powi(-332);
                p *= s;
                p_prev *= s;
                d *= s;
                d_prev *= s;
            } else if big < 1e-100 && big > 0.0 {
                let s = 2f64.powi(332);
                p *= s;
                p_prev *= s;
                d *= s;
                d_prev *= s;
            }
        }
        (p, d)
    }

    /// Values `chi_N(x)` and `P'_{N+1}(x) / sqrt(h_N)` via the orthonormal
    /// recurrence, which stays bounded where the monic one would overflow.
    fn orthonormal_tail(&self, x: f64) -> (f64, f64) {
        let n = self.u.len();
        let a: Vec<f64> = self.u.iter().map(|u| u.sqrt()).collect();
        let (mut c_prev, mut c) = (0.0, 1.0);
        let (mut d_prev, mut d) = (0.0, 0.0);
        for k in 0..=n {
            let a_k = if k == 0 { 0.0 } else { a[k - 1] };
            let a_next = if k == n { 1.0 } else { a[k] };
            let t = x - self.b[k];
            let c_next = (t * c - a_k * c_prev) / a_next;
            let d_next = (c + t * d - a_k * d_prev) / a_next;
            if k == n {
                return (c, d_next);
            }
            c_prev = c;
            c = c_next;
            d_prev = d;
            d = d_next;
        }
        unreachable!()
    }
}

/// Nonnegative weights on the points of a spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightTable {
    pub points: Spectrum,
    pub weights: Vec<f64>,
}

impl WeightTable {
    pub fn total(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// `sum_s w_s f(x_s)`.
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.points
            .points()
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    pub fn max_deviation(&self, other: &WeightTable) -> f64 {
        if self.weights.len() != other.weights.len() {
            return f64::INFINITY;
        }
        self.weights
            .iter()
            .zip(&other.weights)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }
}

/// Monic polynomials `P_0..P_{N+1}` of a Jacobi matrix with norms
/// `h_0..h_N`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthoPolySystem {
    pub polys: Vec<Polynomial>,
    pub norms: Vec<f64>,
}

impl OrthoPolySystem {
    pub fn order(&self) -> usize {
        self.norms.len() - 1
    }

    /// Orthonormal `chi_n = P_n / sqrt(h_n)` for `n = 0..=N`.
    pub fn orthonormal(&self) -> Vec<Polynomial> {
        self.polys
            .iter()
            .zip(&self.norms)
            .map(|(p, h)| p.scale(1.0 / h.sqrt()))
            .collect()
    }
}

pub fn recurrence_polynomials(k: &MonicJacobi) -> OrthoPolySystem {
    let n = k.b.len();
    let mut polys = Vec::with_capacity(n + 1);
    polys.push(Polynomial::one());
    let mut prev = Polynomial::zero();
    for i in 0..n {
        let cur = &polys[i];
        let mut next = cur.shift_up();
        next = &next - &cur.scale(k.b[i]);
        if i > 0 {
            next = &next - &prev.scale(k.u[i - 1]);
        }
        // leading coefficient is exactly 1 by construction
        prev = cur.clone();
        polys.push(next);
    }
    OrthoPolySystem {
        polys,
        norms: k.norms(),
    }
}

/// All eigenvalues of `K` in increasing order.
///
/// Each root of `P_{N+1}` is isolated by Sturm bisection on the enclosing
/// interval `[min b - 2 sum|a|, max b + 2 sum|a|]`, then polished with at most
/// five Newton steps that are only accepted while they stay inside the
/// bisection bracket.
pub fn eigenvalues(k: &MonicJacobi) -> Result<Spectrum> {
    let n = k.b.len();
    let spread: f64 = 2.0 * k.u.iter().map(|u| u.sqrt()).sum::<f64>();
    let lo0 = k.b.iter().copied().fold(f64::INFINITY, f64::min) - spread;
    let hi0 = k.b.iter().copied().fold(f64::NEG_INFINITY, f64::max) + spread;
    let scale = lo0.abs().max(hi0.abs());
    let tol = 1e-13f64.max(4.0 * f64::EPSILON * scale);

    let mut out = Vec::with_capacity(n);
    for idx in 0..n {
        // invariant: count_below(lo) <= idx < count_below(hi)
        let mut lo = lo0;
        let mut hi = hi0;
        if idx > 0 {
            lo = lo.max(out[idx - 1]);
        }
        for _ in 0..200 {
            if hi - lo <= tol {
                break;
            }
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if k.count_below(mid) > idx {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let mut x = 0.5 * (lo + hi);
        for _ in 0..5 {
            let (p, d) = k.char_and_derivative_scaled(x);
            if d == 0.0 || !p.is_finite() || !d.is_finite() {
                break;
            }
            let step = p / d;
            let next = x - step;
            if !(next >= lo && next <= hi) {
                break;
            }
            x = next;
            if step.abs() <= f64::EPSILON * x.abs().max(f64::MIN_POSITIVE) {
                break;
            }
        }
        out.push(x);
    }
    Spectrum::from_sorted(out)
}

/// Spectral weights `w_s = h_N / (P_N(x_s) P'_{N+1}(x_s))`, renormalized to
/// unit total.
pub fn weights_general(k: &MonicJacobi, spec: &Spectrum) -> Result<WeightTable> {
    if spec.len() != k.b.len() {
        return Err(Error::LengthMismatch {
            expected: k.b.len(),
            found: spec.len(),
        });
    }
    let mut weights = Vec::with_capacity(spec.len());
    for (s, &x) in spec.points().iter().enumerate() {
        // chi_N * (P'_{N+1} / sqrt(h_N)) = P_N P'_{N+1} / h_N
        let (chi, dp) = k.orthonormal_tail(x);
        let denom = chi * dp;
        if !(denom > 0.0 && denom.is_finite()) {
            return Err(Error::InconsistentWeights(s));
        }
        weights.push(1.0 / denom);
    }
    let total: f64 = weights.iter().sum();
    weights.iter_mut().for_each(|w| *w /= total);
    Ok(WeightTable {
        points: spec.clone(),
        weights,
    })
}

/// Weights determined by the spectrum alone for a persymmetric matrix.
///
/// The raw values `r_s = (-1)^{N+s} / P'_{N+1}(x_s)` are positive for a
/// strictly increasing spectrum. Normalizing gives `w_s = r_s / sum r`,
/// and since `P_N(x_s) = (-1)^{N+s} sqrt(h_N)` the norm follows as
/// `h_N = (sum r)^{-2}`.
///
/// Products are accumulated with periodic rescaling so wide spectra do not
/// overflow.
pub fn weights_persymmetric(spec: &Spectrum) -> Result<(WeightTable, f64)> {
    let x = spec.points();
    let log_r = log_raw_weights(x, 0..x.len())?;
    let peak = log_r.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let scaled: Vec<f64> = log_r.iter().map(|l| (l - peak).exp()).collect();
    let sum: f64 = scaled.iter().sum();
    let weights = scaled.iter().map(|r| r / sum).collect();
    let h_n = (-2.0 * (peak + sum.ln())).exp();
    Ok((
        WeightTable {
            points: spec.clone(),
            weights,
        },
        h_n,
    ))
}

/// `ln r_s` for the requested indices of a sorted spectrum.
pub(crate) fn log_raw_weights(x: &[f64], indices: impl Iterator<Item = usize>) -> Result<Vec<f64>> {
    const BIG: f64 = 1e100;
    const SMALL: f64 = 1e-100;
    let order = x.len() - 1;
    let mut out = Vec::with_capacity(x.len());
    for s in indices {
        let mut prod = 1.0f64;
        let mut log_abs = 0.0;
        let mut negatives = 0usize;
        for (j, &xj) in x.iter().enumerate() {
            if j == s {
                continue;
            }
            let d = x[s] - xj;
            if d == 0.0 {
                return Err(Error::InconsistentWeights(s));
            }
            negatives += (d < 0.0) as usize;
            let d = d.abs();
            if !(SMALL..BIG).contains(&d) {
                log_abs += d.ln();
                continue;
            }
            prod *= d;
            if !(SMALL..BIG).contains(&prod) {
                log_abs += prod.ln();
                prod = 1.0;
            }
        }
        // sign of (-1)^{N+s} / P'(x_s)
        if (order + s + negatives) % 2 != 0 {
            return Err(Error::InconsistentWeights(s));
        }
        out.push(-(log_abs + prod.ln()));
    }
    Ok(out)
}

pub fn is_persymmetric(j: &SymmetricJacobi, tol: f64) -> bool {
    j.is_persymmetric(tol)
}

/// `max_{n,s} |chi_{N-n}(x_s) - (-1)^{N+s} chi_n(x_s)|` with
/// `chi_n = P_n / sqrt(h_n)`.
pub fn mirror_residual(k: &MonicJacobi, spec: &Spectrum) -> f64 {
    let order = k.order();
    let sqrt_h: Vec<f64> = k.norms().iter().map(|h| h.sqrt()).collect();
    let mut worst = 0.0f64;
    for (s, &x) in spec.points().iter().enumerate() {
        let p = k.eval_all(x);
        let chi: Vec<f64> = (0..=order).map(|i| p[i] / sqrt_h[i]).collect();
        let sign = if (order + s) % 2 == 0 { 1.0 } else { -1.0 };
        for i in 0..=order {
            worst = worst.max((chi[order - i] - sign * chi[i]).abs());
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn monic(b: &[f64], u: &[f64]) -> MonicJacobi {
        MonicJacobi::new(b.to_vec(), u.to_vec()).unwrap()
    }

    fn spec(x: &[f64]) -> Spectrum {
        Spectrum::new(x.to_vec()).unwrap()
    }

    #[test]
    fn spectrum_validation() {
        assert_eq!(spec(&[1.0, -1.0, 0.0]).points(), &[-1.0, 0.0, 1.0]);
        assert_eq!(
            Spectrum::new(vec![0.0, 0.0, 1.0]),
            Err(Error::DuplicatePoint(0.0))
        );
        assert_eq!(Spectrum::new(vec![]), Err(Error::Empty));
        assert_eq!(Spectrum::new(vec![0.0, f64::NAN]), Err(Error::NonFinite(1)));
        assert_eq!(
            Spectrum::from_sorted(vec![0.0, 2.0, 1.0]),
            Err(Error::NotIncreasing(2))
        );
        assert_eq!(spec(&[3.0]).order(), 0);
        assert_eq!(spec(&[0.0, 1.0, 2.0, 3.0]).parity_points(1), vec![1.0, 3.0]);
    }

    #[test]
    fn monic_validation() {
        assert!(matches!(
            MonicJacobi::new(vec![0.0, 0.0], vec![0.0]),
            Err(Error::NonPositiveCoupling { index: 1, .. })
        ));
        assert!(matches!(
            MonicJacobi::new(vec![0.0, 0.0], vec![f64::NAN]),
            Err(Error::NonPositiveCoupling { .. })
        ));
        assert!(matches!(
            MonicJacobi::new(vec![0.0, 0.0], vec![]),
            Err(Error::LengthMismatch { .. })
        ));
        let j = SymmetricJacobi::new(vec![1.0, 2.0], vec![-3.0]).unwrap();
        assert_eq!(j.to_monic().unwrap().u(), &[9.0]);
        assert_eq!(j.to_monic().unwrap().to_symmetric().a, vec![3.0]);
    }

    #[test]
    fn recurrence_examples() {
        let sys = recurrence_polynomials(&monic(&[0.0, 0.0], &[1.0]));
        assert_eq!(sys.polys[1], Polynomial::x());
        assert_eq!(sys.polys[2], Polynomial::new(vec![-1.0, 0.0, 1.0]));

        let sys = recurrence_polynomials(&monic(&[0.0; 3], &[0.5, 0.5]));
        assert_eq!(sys.polys[2], Polynomial::new(vec![-0.5, 0.0, 1.0]));
        assert_eq!(sys.polys[3], Polynomial::new(vec![0.0, -1.0, 0.0, 1.0]));
        assert_eq!(sys.norms, vec![1.0, 0.5, 0.25]);
    }

    #[test]
    fn recurrence_translation_covariance() {
        let base = monic(&[0.0; 4], &[0.3, 0.7, 0.2]);
        let c = 1.75;
        let shifted = recurrence_polynomials(&base.shifted(c));
        let unshifted = recurrence_polynomials(&base);
        for x in [-1.0, -0.2, 0.4, 2.0] {
            for (p, q) in shifted.polys.iter().zip(&unshifted.polys) {
                assert_abs_diff_eq!(p.eval(x), q.eval(x - c), epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn eigenvalue_examples() {
        let s = eigenvalues(&monic(&[0.0, 0.0], &[1.0])).unwrap();
        assert_abs_diff_eq!(s.points()[0], -1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(s.points()[1], 1.0, epsilon = 1e-14);

        let s = eigenvalues(&monic(&[0.0; 3], &[0.5, 0.5])).unwrap();
        for (x, e) in s.points().iter().zip([-1.0, 0.0, 1.0]) {
            assert_abs_diff_eq!(*x, e, epsilon = 1e-14);
        }

        let base = monic(&[0.0; 4], &[0.75, 1.0, 0.75]);
        let c = -2.5;
        let s0 = eigenvalues(&base).unwrap();
        let s1 = eigenvalues(&base.shifted(c)).unwrap();
        for (x0, x1) in s0.points().iter().zip(s1.points()) {
            assert_abs_diff_eq!(x0 + c, *x1, epsilon = 1e-12);
        }
        for (x, e) in s0.points().iter().zip([-1.5, -0.5, 0.5, 1.5]) {
            assert_abs_diff_eq!(*x, e, epsilon = 1e-14);
        }
    }

    #[test]
    fn eigenvalues_of_single_entry() {
        let s = eigenvalues(&monic(&[5.0], &[])).unwrap();
        assert_eq!(s.points(), &[5.0]);
    }

    #[test]
    fn eigenvalues_vanish_characteristic_polynomial() {
        let k = monic(&[0.3, -0.1, 0.8, 0.2, -0.5], &[0.4, 1.2, 0.05, 0.9]);
        let s = eigenvalues(&k).unwrap();
        let chi = recurrence_polynomials(&k).polys.pop().unwrap();
        for &x in s.points() {
            assert!(chi.eval(x).abs() < 1e-13, "{}", chi.eval(x));
        }
    }

    #[test]
    fn weights_general_examples() {
        let k = monic(&[0.0, 0.0], &[1.0]);
        let w = weights_general(&k, &eigenvalues(&k).unwrap()).unwrap();
        assert_abs_diff_eq!(w.weights[0], 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(w.weights[1], 0.5, epsilon = 1e-15);

        let k = monic(&[0.0; 3], &[0.5, 0.5]);
        let w = weights_general(&k, &eigenvalues(&k).unwrap()).unwrap();
        for (a, e) in w.weights.iter().zip([0.25, 0.5, 0.25]) {
            assert_abs_diff_eq!(*a, e, epsilon = 1e-15);
        }

        // zero diagonal: J and -RJR are similar, so the table is palindromic
        let k = monic(&[0.0; 5], &[0.3, 0.9, 0.6, 0.2]);
        let w = weights_general(&k, &eigenvalues(&k).unwrap()).unwrap();
        for i in 0..5 {
            assert_abs_diff_eq!(w.weights[i], w.weights[4 - i], epsilon = 1e-13);
        }
    }

    #[test]
    fn weights_general_rejects_foreign_spectrum() {
        // P_1 = x, P_2' = 2x - 1: the product is negative at 0.25
        let k = monic(&[0.0, 1.0], &[1.0]);
        assert_eq!(
            weights_general(&k, &spec(&[0.25, 2.0])),
            Err(Error::InconsistentWeights(0))
        );
        assert!(weights_general(&k, &spec(&[0.0])).is_err());
    }

    #[test]
    fn weights_persymmetric_examples() {
        let (w, h) = weights_persymmetric(&spec(&[-1.0, 1.0])).unwrap();
        assert_abs_diff_eq!(w.weights[0], 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(h, 1.0, epsilon = 1e-15);

        let (w, h) = weights_persymmetric(&spec(&[-1.0, 0.0, 1.0])).unwrap();
        for (a, e) in w.weights.iter().zip([0.25, 0.5, 0.25]) {
            assert_abs_diff_eq!(*a, e, epsilon = 1e-15);
        }
        assert_abs_diff_eq!(h, 0.25, epsilon = 1e-15);

        let (w, h) = weights_persymmetric(&spec(&[-1.5, -0.5, 0.5, 1.5])).unwrap();
        for (a, e) in w.weights.iter().zip([0.125, 0.375, 0.375, 0.125]) {
            assert_abs_diff_eq!(*a, e, epsilon = 1e-15);
        }
        assert_abs_diff_eq!(h, 9.0 / 16.0, epsilon = 1e-15);
        assert_abs_diff_eq!(h, 0.75 * 1.0 * 0.75, epsilon = 1e-15);
    }

    #[test]
    fn weights_persymmetric_wide_spectrum_is_finite() {
        let pts: Vec<f64> = (0..=300).map(|i| i as f64).collect();
        let (w, _) = weights_persymmetric(&spec(&pts)).unwrap();
        assert!(w.weights.iter().all(|w| w.is_finite() && *w >= 0.0));
        assert_abs_diff_eq!(w.total(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn persymmetry_predicate() {
        let j = |b: &[f64], a: &[f64]| SymmetricJacobi::new(b.to_vec(), a.to_vec()).unwrap();
        assert!(is_persymmetric(&j(&[0.0, 0.0], &[1.0]), 0.0));
        assert!(is_persymmetric(&j(&[1.0, 2.0, 1.0], &[3.0, 3.0]), 0.0));
        assert!(!is_persymmetric(&j(&[1.0, 2.0, 3.0], &[3.0, 3.0]), 1e-8));
        assert!(is_persymmetric(&j(&[4.0], &[]), 0.0));
    }

    #[test]
    fn mirror_residual_examples() {
        let k = monic(&[0.0; 3], &[0.5, 0.5]);
        assert!(mirror_residual(&k, &spec(&[-1.0, 0.0, 1.0])) < 1e-12);

        let k = monic(&[2.0], &[]);
        assert_eq!(mirror_residual(&k, &spec(&[2.0])), 0.0);

        let k = monic(&[0.0, 1.0], &[1.0]);
        let r = mirror_residual(&k, &eigenvalues(&k).unwrap());
        assert!(r > 0.1, "negative control gave {r}");
    }

    #[test]
    fn orthonormal_polynomials_keep_signs() {
        let j = SymmetricJacobi::new(vec![0.0, 0.0], vec![-2.0]).unwrap();
        let chi = j.orthonormal_polynomials().unwrap();
        assert_eq!(chi[1], Polynomial::new(vec![0.0, -0.5]));
    }
}
