use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Default relative tolerance for consistency checks in the descent.
pub const DEFAULT_TOLERANCE: f64 = 1e-8;

/// One step down the three-term recurrence.
///
/// Given monic `P_{n+1}` and `P_n`, the rearranged recurrence
/// `x P_n - P_{n+1} = b_n P_n + u_n P_{n-1}` is a division of the left side
/// by `P_n`: the quotient is the constant `b_n` and the remainder is
/// `u_n P_{n-1}`. Returns `(P_{n-1}, b_n, u_n)`.
pub fn euclid_descend(hi: &Polynomial, lo: &Polynomial) -> Result<(Polynomial, f64, f64)> {
    euclid_descend_with(hi, lo, DEFAULT_TOLERANCE)
}

pub fn euclid_descend_with(
    hi: &Polynomial,
    lo: &Polynomial,
    tol: f64,
) -> Result<(Polynomial, f64, f64)> {
    let n = match lo.degree() {
        Some(n) if n >= 1 => n,
        _ => {
            return Err(Error::EuclidBreakdown {
                degree: 0,
                reason: "lower polynomial must have degree at least 1".into(),
            })
        }
    };
    let breakdown = |reason: String| Error::EuclidBreakdown { degree: n, reason };
    if hi.degree() != Some(n + 1) {
        return Err(breakdown(format!(
            "upper polynomial has degree {:?}, expected {}",
            hi.degree(),
            n + 1
        )));
    }
    if (hi.leading() - 1.0).abs() > tol || (lo.leading() - 1.0).abs() > tol {
        return Err(breakdown("inputs are not monic".into()));
    }

    let l = lo.coeffs();
    let h = hi.coeffs();
    // num = x * lo - hi, degree n + 1 slot kept for the quotient check
    let mut num: Vec<f64> = (0..=n + 1)
        .map(|i| if i == 0 { 0.0 } else { l[i - 1] } - h[i])
        .collect();
    let scale = num.iter().fold(0.0f64, |m, c| m.max(c.abs())).max(1.0);
    let q1 = num[n + 1] / l[n];
    if q1.abs() > tol * scale {
        return Err(breakdown(format!(
            "nonconstant quotient (x coefficient {q1:e})"
        )));
    }
    let b = num[n] / l[n];
    for i in 0..n {
        num[i] -= b * l[i];
    }
    num.truncate(n);
    let u = num[n - 1];
    if !(u > 0.0 && u.is_finite() && b.is_finite()) {
        return Err(breakdown(format!("coupling u = {u:e} is not positive")));
    }
    let mut next: Vec<f64> = num.iter().map(|c| c / u).collect();
    next[n - 1] = 1.0;
    Ok((Polynomial::new(next), b, u))
}

/// Runs the descent from monic `(P_{m+1}, P_m)` down to `P_0`.
///
/// Returns `b_0..b_m` and `u_1..u_m`.
pub(crate) fn descend_to_bottom(
    hi: Polynomial,
    lo: Polynomial,
    tol: f64,
) -> Result<(Vec<f64>, Vec<f64>)> {
    let m = lo.degree().ok_or(Error::EuclidBreakdown {
        degree: 0,
        reason: "lower polynomial is zero".into(),
    })?;
    let mut b = vec![0.0; m + 1];
    let mut u = vec![0.0; m];
    let (mut hi, mut lo) = (hi, lo);
    for k in (1..=m).rev() {
        let (next, bk, uk) = euclid_descend_with(&hi, &lo, tol)?;
        b[k] = bk;
        u[k - 1] = uk;
        hi = lo;
        lo = next;
    }
    // P_1 = x - b_0
    if hi.degree() != Some(1) {
        return Err(Error::EuclidBreakdown {
            degree: 1,
            reason: "descent did not end at a linear polynomial".into(),
        });
    }
    b[0] = -hi.coeff(0);
    Ok((b, u))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn p(c: &[f64]) -> Polynomial {
        Polynomial::new(c.to_vec())
    }

    #[test]
    fn descend_examples() {
        let (next, b, u) = euclid_descend(&p(&[-1.0, 0.0, 1.0]), &p(&[0.0, 1.0])).unwrap();
        assert_eq!(next, Polynomial::one());
        assert_eq!((b, u), (0.0, 1.0));

        let (next, b, u) = euclid_descend(&p(&[-0.75, 0.0, 1.0]), &p(&[0.0, 1.0])).unwrap();
        assert_eq!(next, Polynomial::one());
        assert_eq!((b, u), (0.0, 0.75));

        let (next, b, u) = euclid_descend(&p(&[0.5, -2.0, 1.0]), &p(&[-1.0, 1.0])).unwrap();
        assert_eq!(next, Polynomial::one());
        assert_abs_diff_eq!(b, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(u, 0.5, epsilon = 1e-15);
    }

    #[test]
    fn descend_rejects_nonpositive_coupling() {
        // x * x - (x^2 + 1) = -1
        let err = euclid_descend(&p(&[1.0, 0.0, 1.0]), &p(&[0.0, 1.0])).unwrap_err();
        assert!(matches!(err, Error::EuclidBreakdown { degree: 1, .. }));
    }

    #[test]
    fn descend_rejects_bad_shapes() {
        assert!(euclid_descend(&p(&[0.0, 0.0, 0.0, 1.0]), &p(&[0.0, 1.0])).is_err());
        assert!(euclid_descend(&p(&[0.0, 1.0]), &Polynomial::one()).is_err());
        assert!(euclid_descend(&p(&[-1.0, 0.0, 2.0]), &p(&[0.0, 1.0])).is_err());
    }

    #[test]
    fn descent_recovers_recurrence() {
        // P_3 = x^3 - x, P_2 = x^2 - 1/2 for b = 0, u = (1/2, 1/2)
        let (b, u) =
            descend_to_bottom(p(&[0.0, -1.0, 0.0, 1.0]), p(&[-0.5, 0.0, 1.0]), 1e-8).unwrap();
        assert_eq!(b, vec![0.0, 0.0, 0.0]);
        assert_eq!(u, vec![0.5, 0.5]);
    }
}
