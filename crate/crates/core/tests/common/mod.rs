#![allow(dead_code)]

use num_complex::Complex64;
use qutrit::{CMat3, Density3, Vec8};
use rand::Rng;
use rand_distr::StandardNormal;

/// Uniformly random direction in R⁸ scaled to a radius drawn from `[0, max_radius)`.
pub fn random_vec8<R: Rng>(rng: &mut R, max_radius: f64) -> Vec8 {
    let dir: [f64; 8] = std::array::from_fn(|_| rng.sample(StandardNormal));
    let v = Vec8::new(dir).unwrap();
    v * (rng.random_range(0.0..max_radius) / v.norm())
}

/// A random valid Bloch vector (rejection sampling inside the unit ball).
pub fn random_state<R: Rng>(rng: &mut R) -> Vec8 {
    loop {
        let v = random_vec8(rng, 1.0);
        if v.is_mixed_state(0.0) {
            return v;
        }
    }
}

/// Bloch vector of `|ψ⟩⟨ψ|` for a random unit `ψ ∈ C³`, built from the matrix directly.
pub fn random_pure<R: Rng>(rng: &mut R) -> Vec8 {
    let psi: [Complex64; 3] = std::array::from_fn(|_| {
        Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    });
    let norm = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let psi = psi.map(|z| z / norm);
    let mut m = CMat3::ZERO;
    for i in 0..3 {
        for j in 0..3 {
            m.m[i][j] = psi[i] * psi[j].conj();
        }
    }
    Density3::from_matrix(m).unwrap().to_bloch()
}

pub fn n_r() -> Vec8 {
    Vec8::diagonal(3f64.sqrt() / 2.0, 0.5).unwrap()
}

pub fn n_b() -> Vec8 {
    Vec8::diagonal(-3f64.sqrt() / 2.0, 0.5).unwrap()
}

pub fn n_g() -> Vec8 {
    Vec8::diagonal(0.0, -1.0).unwrap()
}
