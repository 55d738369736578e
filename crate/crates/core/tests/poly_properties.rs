use persym_core::poly::{lagrange_interpolate, poly_from_roots, Polynomial};
use proptest::prelude::*;

fn spaced_roots() -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-2.0f64..2.0, 0..=10).prop_filter("gaps >= 0.05", |r| {
        let mut s = r.clone();
        s.sort_by(f64::total_cmp);
        s.windows(2).all(|w| w[1] - w[0] >= 0.05)
    })
}

proptest! {
    #[test]
    fn roots_are_zeros(roots in spaced_roots()) {
        let p = poly_from_roots(&roots);
        prop_assert!(p.is_monic());
        prop_assert_eq!(p.degree(), Some(roots.len()));
        for &r in &roots {
            prop_assert!(p.eval(r).abs() < 1e-10, "p({}) = {}", r, p.eval(r));
        }
    }

    #[test]
    fn division_round_trip(
        num in prop::collection::vec(-1.0f64..1.0, 1..=11),
        mut den in prop::collection::vec(-1.0f64..1.0, 1..=11),
        lead in 0.1f64..1.0,
        sign in prop::bool::ANY,
    ) {
        *den.last_mut().unwrap() = if sign { lead } else { -lead };
        let num = Polynomial::new(num);
        let den = Polynomial::new(den);
        let (q, r) = num.divrem(&den).unwrap();
        if let Some(dr) = r.degree() {
            prop_assert!(dr < den.degree().unwrap());
        }
        let back = &(&q * &den) + &r;
        let len = num.coeffs().len().max(back.coeffs().len());
        // rounding grows with the size of the partial products
        let scale = q.max_abs_coeff() * den.max_abs_coeff() + num.max_abs_coeff();
        for i in 0..len {
            prop_assert!((back.coeff(i) - num.coeff(i)).abs() < 1e-13 * len as f64 * scale);
        }
    }

    #[test]
    fn interpolation_reproduces_polynomials(
        coeffs in prop::collection::vec(-1.0f64..1.0, 1..=11),
        extra in 0usize..3,
        start in -1.0f64..0.0,
    ) {
        let p = Polynomial::new(coeffs);
        let deg = p.degree().unwrap_or(0);
        let count = (deg + 1 + extra).min(11);
        let step = 2.0 / count as f64;
        let data: Vec<(f64, f64)> = (0..count)
            .map(|i| {
                let x = start + step * i as f64;
                (x, p.eval(x))
            })
            .collect();
        let q = lagrange_interpolate(&data).unwrap();
        for i in 0..count {
            prop_assert!((q.coeff(i) - p.coeff(i)).abs() < 1e-9, "coeff {}: {} vs {}", i, q.coeff(i), p.coeff(i));
        }
    }
}
