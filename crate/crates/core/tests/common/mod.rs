#![allow(dead_code)]

use persym_core::{MonicJacobi, Spectrum, SymmetricJacobi};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n + 1` points in `[-1, 1]` with consecutive gaps of at least `min_gap`.
pub fn random_spectrum(rng: &mut impl Rng, n: usize, min_gap: f64) -> Spectrum {
    let slack = 2.0 - min_gap * n as f64;
    assert!(slack > 0.0);
    // n gaps plus one unused share for the free margin
    let shares: Vec<f64> = (0..=n + 1).map(|_| rng.gen_range(0.01..1.0)).collect();
    let total: f64 = shares.iter().sum();
    let mut x = -1.0 + slack * shares[n + 1] / total * 0.5;
    let mut pts = vec![x];
    for share in &shares[..n] {
        x += min_gap + slack * share / total;
        pts.push(x);
    }
    Spectrum::from_sorted(pts).unwrap()
}

/// Random persymmetric matrix with `b` in `[-1, 1]` and `a` in `[0.3, 1.2]`.
pub fn random_persymmetric(rng: &mut impl Rng, n: usize) -> SymmetricJacobi {
    let half_b: Vec<f64> = (0..=n / 2).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let half_a: Vec<f64> = (0..(n + 1) / 2).map(|_| rng.gen_range(0.3..1.2)).collect();
    let b = (0..=n).map(|i| half_b[i.min(n - i)]).collect();
    let a = (1..=n).map(|i| half_a[i.min(n + 1 - i) - 1]).collect();
    SymmetricJacobi::new(b, a).unwrap()
}

pub fn random_monic_persymmetric(rng: &mut impl Rng, n: usize) -> MonicJacobi {
    random_persymmetric(rng, n).to_monic().unwrap()
}

/// Persymmetric matrix with a random spectrum in `[-1, 1]`, gaps at least 0.05.
pub fn separated_persymmetric(rng: &mut impl Rng, n: usize) -> SymmetricJacobi {
    let spec = random_spectrum(rng, n, 0.05);
    persym_core::reconstruct(&spec, persym_core::Algorithm::HalfLattice)
        .unwrap()
        .to_symmetric()
}
