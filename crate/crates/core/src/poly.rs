//! Dense real polynomials in the monomial basis.
//!
//! Coefficients are stored low to high: `coeffs[i]` multiplies `x^i`. The
//! zero polynomial has no stored coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Relative threshold below which trailing coefficients produced by
/// cancellation are dropped.
pub const TRIM_RELATIVE: f64 = 1e-13;

#[derive(Clone, PartialEq, Default)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    /// Builds a polynomial from low-to-high coefficients, dropping trailing
    /// exact zeros.
    pub fn new(coeffs: Vec<f64>) -> Self {
        let mut p = Self { coeffs };
        p.trim_exact();
        p
    }

    /// Builds a polynomial and drops trailing coefficients whose magnitude is
    /// at most `TRIM_RELATIVE` times the largest coefficient.
    pub fn new_trimmed(coeffs: Vec<f64>) -> Self {
        let mut p = Self { coeffs };
        p.trim_relative(TRIM_RELATIVE);
        p
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: f64) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(1.0)
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::new(vec![0.0, 1.0])
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<f64> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the stored range.
    pub fn coeff(&self, i: usize) -> f64 {
        self.coeffs.get(i).copied().unwrap_or(0.0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> f64 {
        self.coeffs.last().copied().unwrap_or(0.0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1.0
    }

    /// Largest coefficient magnitude.
    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Divides through by the leading coefficient and pins it to exactly 1.
    pub fn monic(&self) -> Self {
        let lead = self.leading();
        if lead == 0.0 {
            return Self::zero();
        }
        let mut coeffs: Vec<f64> = self.coeffs.iter().map(|c| c / lead).collect();
        if let Some(last) = coeffs.last_mut() {
            *last = 1.0;
        }
        Self { coeffs }
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Multiplication by `x`.
    pub fn shift_up(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(0.0);
        coeffs.extend_from_slice(&self.coeffs);
        Self { coeffs }
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| i as f64 * c)
                .collect(),
        )
    }

    /// Long division. The remainder is trimmed relative to the scale of the
    /// numerator so that cancellation noise does not inflate its degree.
    pub fn divrem(&self, den: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let den_deg = den.degree().ok_or(Error::ZeroDivisor)?;
        let num_deg = match self.degree() {
            Some(d) if d >= den_deg => d,
            _ => return Ok((Polynomial::zero(), self.clone())),
        };

        let lead = den.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0.0; num_deg - den_deg + 1];
        for k in (0..quot.len()).rev() {
            let q = rem[k + den_deg] / lead;
            quot[k] = q;
            for (j, &d) in den.coeffs.iter().enumerate() {
                rem[k + j] -= q * d;
            }
            rem[k + den_deg] = 0.0;
        }
        rem.truncate(den_deg);

        let scale = self.max_abs_coeff();
        let mut remainder = Polynomial { coeffs: rem };
        remainder.trim_below(TRIM_RELATIVE * scale);
        Ok((Polynomial::new(quot), remainder))
    }

    fn trim_exact(&mut self) {
        while self.coeffs.last() == Some(&0.0) {
            self.coeffs.pop();
        }
    }

    fn trim_below(&mut self, threshold: f64) {
        while matches!(self.coeffs.last(), Some(c) if c.abs() <= threshold) {
            self.coeffs.pop();
        }
    }

    fn trim_relative(&mut self, rel: f64) {
        let threshold = rel * self.max_abs_coeff();
        self.trim_below(threshold);
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0.0 {
                continue;
            }
            if !first {
                write!(f, " {} ", if c < 0.0 { '-' } else { '+' })?;
            } else if c < 0.0 {
                write!(f, "-")?;
            }
            first = false;
            let m = c.abs();
            match i {
                0 => write!(f, "{m}")?,
                1 => write!(f, "{m}x")?,
                _ => write!(f, "{m}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(-1.0)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![0.0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

/// Monic polynomial with the given roots, `(x - r_0)(x - r_1)...`.
pub fn poly_from_roots(roots: &[f64]) -> Polynomial {
    let mut coeffs = Vec::with_capacity(roots.len() + 1);
    coeffs.push(1.0);
    for &r in roots {
        // multiply in place by (x - r), high to low
        coeffs.push(1.0);
        for k in (1..coeffs.len() - 1).rev() {
            coeffs[k] = coeffs[k - 1] - r * coeffs[k];
        }
        coeffs[0] *= -r;
    }
    Polynomial { coeffs }
}

/// Barycentric weights `1 / prod_{j != i} (x_i - x_j)`.
///
/// These coincide with `1 / P'(x_i)` for the node polynomial `P`.
pub fn barycentric_weights(nodes: &[f64]) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(nodes.len());
    for (i, &xi) in nodes.iter().enumerate() {
        let mut prod = 1.0;
        for (j, &xj) in nodes.iter().enumerate() {
            if i != j {
                let d = xi - xj;
                if d == 0.0 {
                    return Err(Error::DuplicateAbscissa(xi));
                }
                prod *= d;
            }
        }
        out.push(1.0 / prod);
    }
    Ok(out)
}

/// Interpolating polynomial through `points`, in monomial coefficients.
///
/// Newton coefficients `f[x_0..x_k]` are read off as barycentric sums over
/// the growing node prefixes, then the Newton form is expanded by nested
/// multiplication.
pub fn lagrange_interpolate(points: &[(f64, f64)]) -> Result<Polynomial> {
    if points.is_empty() {
        return Ok(Polynomial::zero());
    }
    let n = points.len();
    let xs: Vec<f64> = points.iter().map(|p| p.0).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1).collect();

    // weights[j] holds 1 / prod_{i <= k, i != j} (x_j - x_i) for the current prefix
    let mut weights = Vec::with_capacity(n);
    let mut newton = Vec::with_capacity(n);
    for k in 0..n {
        let mut wk = 1.0;
        for j in 0..k {
            let d = xs[j] - xs[k];
            if d == 0.0 {
                return Err(Error::DuplicateAbscissa(xs[k]));
            }
            weights[j] /= d;
            wk /= -d;
        }
        weights.push(wk);
        newton.push(weights.iter().zip(&ys).map(|(w, y)| w * y).sum::<f64>());
    }

    let mut coeffs = vec![0.0; n];
    coeffs[0] = newton[n - 1];
    let mut len = 1;
    for k in (0..n - 1).rev() {
        // coeffs <- coeffs * (x - x_k) + newton[k]
        for i in (1..=len).rev() {
            coeffs[i] = coeffs[i - 1] - xs[k] * coeffs[i];
        }
        coeffs[0] = newton[k] - xs[k] * coeffs[0];
        len += 1;
    }
    Ok(Polynomial::new_trimmed(coeffs))
}
