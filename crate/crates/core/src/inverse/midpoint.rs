//! The middle of the recurrence in closed form.
//!
//! With `Ω₀`, `Ω₁` the monic polynomials vanishing on the even- and
//! odd-indexed spectral points and `σ₀`, `σ₁` their root sums:
//!
//! * `N = 2L + 1`: `P_{L+1} = (Ω₀ + Ω₁) / 2`, `P_L = (Ω₀ - Ω₁) / (σ₁ - σ₀)`,
//!   `u_{L+1} = (σ₁ - σ₀)^2 / 4`;
//! * `N = 2L`: `P_{L+1} = (Ω₀ + (x + σ₁ - σ₀) Ω₁) / 2`, `P_L = Ω₁`,
//!   `b_L = σ₀ - σ₁`.

use crate::error::{Error, Result};
use crate::jacobi::Spectrum;
use crate::poly::{poly_from_roots, Polynomial};

#[derive(Debug, Clone, PartialEq)]
pub struct MidpointData {
    pub omega0: Polynomial,
    pub omega1: Polynomial,
    pub sigma0: f64,
    pub sigma1: f64,
    /// `N` of the spectrum the data came from.
    pub order: usize,
}

impl MidpointData {
    /// `L` with `N = 2L + 1` or `N = 2L`.
    pub fn half(&self) -> usize {
        self.order / 2
    }
}

pub fn midpoint_data(spec: &Spectrum) -> Result<MidpointData> {
    if spec.order() == 0 {
        return Err(Error::OutOfRange {
            what: "spectrum order",
            value: 0,
            min: 1,
            max: usize::MAX,
        });
    }
    let even = spec.parity_points(0);
    let odd = spec.parity_points(1);
    Ok(MidpointData {
        omega0: poly_from_roots(&even),
        omega1: poly_from_roots(&odd),
        sigma0: even.iter().sum(),
        sigma1: odd.iter().sum(),
        order: spec.order(),
    })
}

/// `P_{L+1}`, `P_L` and the recurrence coefficient fixed at the middle:
/// `u_{L+1}` for odd `N`, `b_L` for even `N`.
#[derive(Debug, Clone, PartialEq)]
pub struct MidpointPolys {
    pub upper: Polynomial,
    pub lower: Polynomial,
    pub coeff: f64,
}

pub fn midpoint_polys(md: &MidpointData) -> Result<MidpointPolys> {
    let l = md.half();
    let (upper, lower, coeff) = if md.order % 2 == 1 {
        let gap = md.sigma1 - md.sigma0;
        if gap == 0.0 || !gap.is_finite() {
            return Err(Error::DegenerateMidpoint);
        }
        let upper = (&md.omega0 + &md.omega1).scale(0.5);
        let lower = (&md.omega0 - &md.omega1).scale(1.0 / gap);
        (upper, lower, gap * gap / 4.0)
    } else {
        let linear = Polynomial::new(vec![md.sigma1 - md.sigma0, 1.0]);
        let upper = (&md.omega0 + &(&linear * &md.omega1)).scale(0.5);
        (upper, md.omega1.clone(), md.sigma0 - md.sigma1)
    };
    Ok(MidpointPolys {
        upper: pin_monic(upper, l + 1)?,
        lower: pin_monic(lower, l)?,
        coeff,
    })
}

fn pin_monic(p: Polynomial, degree: usize) -> Result<Polynomial> {
    if p.degree() != Some(degree) {
        return Err(Error::DegenerateMidpoint);
    }
    let mut c = p.into_coeffs();
    c[degree] = 1.0;
    Ok(Polynomial::new(c))
}
