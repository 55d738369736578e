//! Divided differences, moments, sublattice weights and the Hankel
//! determinant representation of the monic polynomials.

use crate::error::{Error, Result};
use crate::jacobi::{log_raw_weights, weights_persymmetric, Spectrum, WeightTable};
use crate::poly::{barycentric_weights, Polynomial};

/// `f[x_0, ..., x_N] = sum_s f(x_s) / P'_{N+1}(x_s)`.
pub fn divided_difference(points: &[f64], values: &[f64]) -> Result<f64> {
    if points.len() != values.len() {
        return Err(Error::LengthMismatch {
            expected: points.len(),
            found: values.len(),
        });
    }
    if points.is_empty() {
        return Err(Error::Empty);
    }
    let w = barycentric_weights(points)?;
    Ok(w.iter().zip(values).map(|(w, v)| w * v).sum())
}

/// Moments `c_0..c_m` of a weight distribution; `c_0 = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentSequence(pub Vec<f64>);

impl MomentSequence {
    pub fn get(&self, n: usize) -> f64 {
        self.0[n]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}

/// `c_n = sum_s x_s^n w_s` for `n = 0..=upto` over an arbitrary table.
pub fn table_moments(table: &WeightTable, upto: usize) -> Vec<f64> {
    let mut c = vec![0.0; upto + 1];
    for (&x, &w) in table.points.points().iter().zip(&table.weights) {
        let mut pow = w;
        for cn in c.iter_mut() {
            *cn += pow;
            pow *= x;
        }
    }
    c
}

/// Moments of the persymmetric weights of `spec`, `0 <= upto <= 2N`.
pub fn moments(spec: &Spectrum, upto: usize) -> Result<MomentSequence> {
    let max = 2 * spec.order();
    if upto > max {
        return Err(Error::OutOfRange {
            what: "moment index",
            value: upto,
            min: 0,
            max,
        });
    }
    let (table, _) = weights_persymmetric(spec)?;
    let mut c = table_moments(&table, upto);
    c[0] = 1.0;
    Ok(MomentSequence(c))
}

/// Restrictions of the persymmetric weights to the even-indexed and
/// odd-indexed spectral points, each doubled so it sums to one.
///
/// Only the odd sublattice is produced for even `N`. Each table is
/// normalized on its own points: both parities carry half the total mass,
/// so this equals doubling the full table without computing the other half.
#[derive(Debug, Clone, PartialEq)]
pub struct SublatticeWeights {
    pub even: Option<WeightTable>,
    pub odd: WeightTable,
}

pub fn sublattice_weights(spec: &Spectrum) -> Result<SublatticeWeights> {
    if spec.order() == 0 {
        return Err(Error::EmptySublattice);
    }
    let x = spec.points();
    let restrict = |parity: usize| -> Result<WeightTable> {
        let points = Spectrum::from_sorted(spec.parity_points(parity))?;
        let log_r = log_raw_weights(x, (parity..x.len()).step_by(2))?;
        let peak = log_r.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let scaled: Vec<f64> = log_r.iter().map(|l| (l - peak).exp()).collect();
        let sum: f64 = scaled.iter().sum();
        let weights = scaled.iter().map(|r| r / sum).collect();
        Ok(WeightTable { points, weights })
    };
    let even = if spec.order() % 2 == 1 {
        Some(restrict(0)?)
    } else {
        None
    };
    Ok(SublatticeWeights {
        even,
        odd: restrict(1)?,
    })
}

/// Largest Hankel order accepted by [`poly_from_moments_hankel`].
pub const HANKEL_MAX_ORDER: usize = 6;

/// Monic `P_n` as the bordered Hankel determinant over `Δ_n`, expanded along
/// the bordering row `(1, x, ..., x^n)`.
///
/// Only meant as an independent check for small `n`.
pub fn poly_from_moments_hankel(c: &MomentSequence, n: usize) -> Result<Polynomial> {
    if n > HANKEL_MAX_ORDER {
        return Err(Error::OutOfRange {
            what: "Hankel order",
            value: n,
            min: 0,
            max: HANKEL_MAX_ORDER,
        });
    }
    if n == 0 {
        return Ok(Polynomial::one());
    }
    if c.len() < 2 * n {
        return Err(Error::LengthMismatch {
            expected: 2 * n,
            found: c.len(),
        });
    }
    let hankel: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| c.get(i + j)).collect())
        .collect();
    let delta = determinant(hankel);
    if !(delta.abs() >= 1e-10) {
        return Err(Error::NearSingularHankel(delta));
    }
    // rows c_i..c_{i+n}, i < n; drop column k for the cofactor of x^k
    let rows: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..=n).map(|j| c.get(i + j)).collect())
        .collect();
    let mut coeffs = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let minor: Vec<Vec<f64>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != k)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        let sign = if (n + k) % 2 == 0 { 1.0 } else { -1.0 };
        coeffs.push(sign * determinant(minor) / delta);
    }
    coeffs[n] = 1.0;
    Ok(Polynomial::new(coeffs))
}

/// Gaussian elimination with partial pivoting.
fn determinant(mut m: Vec<Vec<f64>>) -> f64 {
    let n = m.len();
    let mut det = 1.0;
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))
            .unwrap();
        if m[piv][col] == 0.0 {
            return 0.0;
        }
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        det *= m[col][col];
        for r in col + 1..n {
            let f = m[r][col] / m[col][col];
            for c in col..n {
                m[r][c] -= f * m[col][c];
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn spec(x: &[f64]) -> Spectrum {
        Spectrum::new(x.to_vec()).unwrap()
    }

    #[test]
    fn divided_difference_examples() {
        assert_abs_diff_eq!(
            divided_difference(&[0.0, 1.0], &[0.0, 1.0]).unwrap(),
            1.0,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            divided_difference(&[0.0, 1.0, 2.0], &[1.0; 3]).unwrap(),
            0.0,
            epsilon = 1e-15
        );
        let pts = [-1.0, 0.0, 1.0, 2.0];
        let vals: Vec<f64> = pts.iter().map(|x: &f64| x.powi(3)).collect();
        assert_abs_diff_eq!(
            divided_difference(&pts, &vals).unwrap(),
            1.0,
            epsilon = 1e-14
        );
    }

    #[test]
    fn divided_difference_errors() {
        assert!(matches!(
            divided_difference(&[0.0, 0.0], &[1.0, 2.0]),
            Err(Error::DuplicateAbscissa(_))
        ));
        assert!(matches!(
            divided_difference(&[0.0, 1.0], &[1.0]),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn moment_examples() {
        assert_eq!(
            moments(&spec(&[-1.0, 1.0]), 2).unwrap().0,
            vec![1.0, 0.0, 1.0]
        );
        let c = moments(&spec(&[-1.0, 0.0, 1.0]), 2).unwrap();
        assert_abs_diff_eq!(c.get(1), 0.0, epsilon = 1e-16);
        assert_abs_diff_eq!(c.get(2), 0.5, epsilon = 1e-16);

        let c = moments(&spec(&[-2.0, -0.7, -0.1, 0.1, 0.7, 2.0]), 10).unwrap();
        for n in (1..=10).step_by(2) {
            assert!(c.get(n).abs() < 1e-12);
        }
    }

    #[test]
    fn moments_out_of_range() {
        assert!(matches!(
            moments(&spec(&[-1.0, 1.0]), 3),
            Err(Error::OutOfRange {
                value: 3,
                max: 2,
                ..
            })
        ));
    }

    #[test]
    fn sublattice_examples() {
        let sub = sublattice_weights(&spec(&[-1.5, -0.5, 0.5, 1.5])).unwrap();
        let even = sub.even.unwrap();
        assert_eq!(even.points.points(), &[-1.5, 0.5]);
        assert_abs_diff_eq!(even.weights[0], 0.25, epsilon = 1e-15);
        assert_abs_diff_eq!(even.weights[1], 0.75, epsilon = 1e-15);
        assert_eq!(sub.odd.points.points(), &[-0.5, 1.5]);
        assert_abs_diff_eq!(sub.odd.weights[0], 0.75, epsilon = 1e-15);
        assert_abs_diff_eq!(sub.odd.weights[1], 0.25, epsilon = 1e-15);
        assert_abs_diff_eq!(even.integrate(|x| x), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(sub.odd.integrate(|x| x), 0.0, epsilon = 1e-15);

        let sub = sublattice_weights(&spec(&[-1.0, 1.0])).unwrap();
        assert_eq!(sub.even.unwrap().weights, vec![1.0]);
        assert_eq!(sub.odd.weights, vec![1.0]);
    }

    #[test]
    fn sublattice_even_order_has_odd_table_only() {
        let sub = sublattice_weights(&spec(&[-1.0, 0.0, 1.0])).unwrap();
        assert!(sub.even.is_none());
        assert_eq!(sub.odd.points.points(), &[0.0]);
        assert_abs_diff_eq!(sub.odd.weights[0], 1.0, epsilon = 1e-15);
        assert_eq!(
            sublattice_weights(&spec(&[3.0])),
            Err(Error::EmptySublattice)
        );
    }

    #[test]
    fn hankel_examples() {
        let c = moments(&spec(&[-1.0, 0.0, 1.0]), 4).unwrap();
        let p1 = poly_from_moments_hankel(&c, 1).unwrap();
        assert_abs_diff_eq!(p1.coeff(0), 0.0, epsilon = 1e-15);
        assert_eq!(p1.coeff(1), 1.0);
        let p2 = poly_from_moments_hankel(&c, 2).unwrap();
        assert_abs_diff_eq!(p2.coeff(0), -0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(p2.coeff(1), 0.0, epsilon = 1e-15);

        let c = moments(&spec(&[0.0, 1.0, 2.0]), 2).unwrap();
        let p1 = poly_from_moments_hankel(&c, 1).unwrap();
        assert_abs_diff_eq!(p1.coeff(0), -1.0, epsilon = 1e-15);
    }

    #[test]
    fn hankel_rejects_singular_and_large_orders() {
        // one point supports no degree-2 orthogonal polynomial
        let c = MomentSequence(vec![1.0, 0.5, 0.25, 0.125]);
        assert!(matches!(
            poly_from_moments_hankel(&c, 2),
            Err(Error::NearSingularHankel(_))
        ));
        let c = MomentSequence(vec![1.0; 20]);
        assert!(matches!(
            poly_from_moments_hankel(&c, 7),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn determinant_small() {
        assert_abs_diff_eq!(
            determinant(vec![vec![0.0, 2.0], vec![3.0, 1.0]]),
            -6.0,
            epsilon = 1e-15
        );
    }
}
