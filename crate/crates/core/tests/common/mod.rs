#![allow(dead_code)]

use num_complex::Complex64;
use qstrcmp::StateVector;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform draw from `[-1, 1)`.
pub fn signed_unit(rng: &mut ChaCha8Rng) -> f64 {
    qstrcmp::statevector::unit_interval(rng.next_u64()) * 2.0 - 1.0
}

/// Random normalized complex amplitudes of length `dim`.
pub fn random_amplitudes(rng: &mut ChaCha8Rng, dim: usize) -> Vec<Complex64> {
    let raw: Vec<Complex64> = (0..dim)
        .map(|_| Complex64::new(signed_unit(rng), signed_unit(rng)))
        .collect();
    let norm = raw.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    raw.into_iter().map(|a| a / norm).collect()
}

pub fn random_state(rng: &mut ChaCha8Rng, dim: usize) -> StateVector {
    StateVector::from_amplitudes(random_amplitudes(rng, dim)).unwrap()
}

pub fn max_diff(a: &StateVector, b: &StateVector) -> f64 {
    a.amplitudes()
        .iter()
        .zip(b.amplitudes())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Marked-set mass after `k` iterations with `m` of `dim` marked, evaluated
/// from the rotation picture without touching library code.
pub fn closed_form_marked(dim: usize, m: usize, k: usize) -> f64 {
    let theta = (m as f64 / dim as f64).sqrt().asin();
    ((2 * k + 1) as f64 * theta).sin().powi(2)
}

pub fn closed_form_unmarked(dim: usize, m: usize, k: usize) -> f64 {
    let theta = (m as f64 / dim as f64).sqrt().asin();
    ((2 * k + 1) as f64 * theta).cos().powi(2)
}

/// Dense matrix route for one Grover iteration: `D = 2J/N - I`, `O = diag(+-1)`.
pub fn matrix_grover(dim: usize, marked: &[usize], k: usize) -> Vec<f64> {
    let mut v = vec![1.0 / (dim as f64).sqrt(); dim];
    let d: Vec<Vec<f64>> = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| 2.0 / dim as f64 - if i == j { 1.0 } else { 0.0 })
                .collect()
        })
        .collect();
    for _ in 0..k {
        for &x in marked {
            v[x] = -v[x];
        }
        v = d.iter().map(|row| row.iter().zip(&v).map(|(a, b)| a * b).sum()).collect();
    }
    v
}
