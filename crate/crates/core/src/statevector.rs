//! Dense amplitude kernel for a single `N = 2^n` dimensional register.
//!
//! Everything here works on the basis-label level: amplitude `x` belongs to
//! basis state `|x>`. The oracle is a sign flip over a [`MarkedSet`] and the
//! diffusion is the reflection about the uniform superposition.

use num_complex::Complex64;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Largest supported register width.
pub const MAX_QUBITS: u32 = 20;

/// Width of one register: `n` qubits spanning `N = 2^n` basis states.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RegisterConfig {
    qubits: u32,
}

impl RegisterConfig {
    pub fn new(qubits: u32) -> Result<Self> {
        if !(1..=MAX_QUBITS).contains(&qubits) {
            return Err(Error::RegisterWidth(qubits));
        }
        Ok(Self { qubits })
    }

    /// Builds the config whose dimension is exactly `dim`.
    pub fn from_dim(dim: usize) -> Result<Self> {
        if !dim.is_power_of_two() {
            return Err(Error::NotPowerOfTwo(dim));
        }
        Self::new(dim.trailing_zeros())
    }

    pub fn qubits(&self) -> u32 {
        self.qubits
    }

    pub fn dim(&self) -> usize {
        1usize << self.qubits
    }
}

/// Sorted, duplicate-free set of basis labels below `dim`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkedSet {
    dim: usize,
    members: Vec<usize>,
}

impl MarkedSet {
    pub fn new(dim: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if let Some(&last) = members.last() {
            if last >= dim {
                return Err(Error::PositionOutOfRange { index: last, len: dim });
            }
        }
        Ok(Self { dim, members })
    }

    pub fn empty(dim: usize) -> Self {
        Self { dim, members: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }
}

/// Complex amplitudes over the computational basis of one register.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amps: Vec<Complex64>,
}

impl StateVector {
    /// Equal superposition `1/sqrt(N) * sum_x |x>`.
    pub fn uniform(cfg: RegisterConfig) -> Self {
        let dim = cfg.dim();
        let a = 1.0 / (dim as f64).sqrt();
        Self {
            amps: vec![Complex64::new(a, 0.0); dim],
        }
    }

    /// Computational basis state `|x>`.
    pub fn basis(cfg: RegisterConfig, x: usize) -> Result<Self> {
        let dim = cfg.dim();
        if x >= dim {
            return Err(Error::PositionOutOfRange { index: x, len: dim });
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); dim];
        amps[x] = Complex64::new(1.0, 0.0);
        Ok(Self { amps })
    }

    /// Wraps raw amplitudes. The length must be a supported power of two;
    /// normalization is the caller's responsibility.
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        RegisterConfig::from_dim(amps.len())?;
        Ok(Self { amps })
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Negates the amplitude of every marked label.
    pub fn apply_phase_flip(&mut self, marked: &MarkedSet) -> Result<()> {
        self.check_dim(marked.dim())?;
        for &x in marked.members() {
            self.amps[x] = -self.amps[x];
        }
        Ok(())
    }

    /// Reflection about the uniform state: `a[x] <- 2 * mean(a) - a[x]`.
    ///
    /// The mean is a left-to-right sum, so results are bit-stable.
    pub fn apply_diffusion(&mut self) {
        let sum = self
            .amps
            .iter()
            .fold(Complex64::new(0.0, 0.0), |acc, a| acc + a);
        let twice_mean = sum * (2.0 / self.amps.len() as f64);
        for a in &mut self.amps {
            *a = twice_mean - *a;
        }
    }

    /// Applies `k` Grover iterations (phase flip followed by diffusion).
    pub fn grover_iterate(&mut self, marked: &MarkedSet, k: usize) -> Result<()> {
        self.check_dim(marked.dim())?;
        for _ in 0..k {
            self.apply_phase_flip(marked)?;
            self.apply_diffusion();
        }
        Ok(())
    }

    /// Born-rule probabilities `|a[x]|^2`.
    pub fn measurement_distribution(&self) -> Vec<f64> {
        self.amps.iter().map(|a| a.norm_sqr()).collect()
    }

    /// Draws one measurement outcome, deterministic in `(self, seed)`.
    pub fn sample_measurement(&self, seed: u64) -> usize {
        let probs = self.measurement_distribution();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        // Safe to unwrap: a state always has at least two entries.
        sample_index(&probs, unit_interval(rng.next_u64())).unwrap()
    }

    fn check_dim(&self, other: usize) -> Result<()> {
        if self.dim() != other {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other,
            });
        }
        Ok(())
    }
}

/// Maps a 64-bit word onto `[0, 1)` using its top 53 bits.
pub fn unit_interval(word: u64) -> f64 {
    (word >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Cumulative-sum inversion: the first index whose running total exceeds
/// `u`, so ties land on the lower index. If rounding leaves the total below
/// `u`, the last index with nonzero weight is returned.
pub fn sample_index(probs: &[f64], u: f64) -> Result<usize> {
    let mut acc = 0.0;
    let mut last_nonzero = None;
    for (i, &p) in probs.iter().enumerate() {
        if p > 0.0 {
            last_nonzero = Some(i);
        }
        acc += p;
        if acc > u && p > 0.0 {
            return Ok(i);
        }
    }
    last_nonzero.ok_or(Error::EmptyDistribution)
}
