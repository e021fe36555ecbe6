//! Brute-force joint simulation of all `N` registers.
//!
//! Each register is an `N`-level qudit, so the joint space has `N^N` basis
//! tuples `(r0, r1, ..., r_{N-1})`. The tuple is stored mixed-radix with `r0`
//! as the least significant digit, which keeps every first-register block
//! contiguous. The oracle is evaluated on the actual register contents, so this
//! backend does not rely on the ancillas staying pinned; it checks it.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::protocol::ComparisonInstance;
use crate::statevector::StateVector;

/// Largest string length the joint backend accepts (256 amplitudes).
pub const MAX_JOINT_LEN: usize = 4;

/// Amplitude magnitude treated as nonzero by the support check.
pub const SUPPORT_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct JointState {
    registers: usize,
    amps: Vec<Complex64>,
}

impl JointState {
    /// Zero amplitude everywhere; build states with [`JointState::set`].
    pub fn zeros(registers: usize) -> Result<Self> {
        check_len(registers)?;
        Ok(Self {
            registers,
            amps: vec![Complex64::new(0.0, 0.0); registers.pow(registers as u32)],
        })
    }

    pub fn registers(&self) -> usize {
        self.registers
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn index(&self, tuple: &[usize]) -> usize {
        assert_eq!(tuple.len(), self.registers);
        tuple
            .iter()
            .rev()
            .fold(0, |acc, &r| acc * self.registers + r)
    }

    pub fn tuple(&self, mut index: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.registers);
        for _ in 0..self.registers {
            out.push(index % self.registers);
            index /= self.registers;
        }
        out
    }

    pub fn get(&self, tuple: &[usize]) -> Complex64 {
        self.amps[self.index(tuple)]
    }

    pub fn set(&mut self, tuple: &[usize], amp: Complex64) {
        let i = self.index(tuple);
        self.amps[i] = amp;
    }

    /// Index of the tuple whose ancillas hold `(1, 2, ..., N-1)` and whose
    /// first register holds `v`.
    fn pinned_index(&self, v: usize) -> usize {
        let pinned: Vec<usize> = std::iter::once(v).chain(1..self.registers).collect();
        self.index(&pinned)
    }

    /// Total probability on tuples whose ancillas are not `(1, ..., N-1)`.
    pub fn off_support_mass(&self) -> f64 {
        let n = self.registers;
        let base = self.pinned_index(0);
        self.amps
            .iter()
            .enumerate()
            .filter(|(i, _)| i / n * n != base)
            .map(|(_, a)| a.norm_sqr())
            .sum()
    }
}

fn check_len(len: usize) -> Result<()> {
    if len == 2 || len == MAX_JOINT_LEN {
        Ok(())
    } else {
        Err(Error::JointTooLarge(len))
    }
}

/// `1/sqrt(N)` on every tuple `(v, 1, 2, ..., N-1)`.
pub fn prepare_joint(inst: &ComparisonInstance) -> Result<JointState> {
    let len = inst.len();
    let mut state = JointState::zeros(len)?;
    let a = Complex64::new(1.0 / (len as f64).sqrt(), 0.0);
    for v in 0..len {
        let i = state.pinned_index(v);
        state.amps[i] = a;
    }
    Ok(state)
}

/// Multiplies each tuple by `(-1)^(f_0(r0) AND ... AND f_{N-1}(r_{N-1}))`.
pub fn apply_joint_oracle(state: &mut JointState, inst: &ComparisonInstance) -> Result<()> {
    if state.registers != inst.len() {
        return Err(Error::DimensionMismatch {
            left: state.registers,
            right: inst.len(),
        });
    }
    for idx in 0..state.amps.len() {
        let tuple = state.tuple(idx);
        let fires = tuple
            .iter()
            .enumerate()
            .all(|(i, &r)| inst.sub_oracle_bit(i, r));
        if fires {
            state.amps[idx] = -state.amps[idx];
        }
    }
    Ok(())
}

/// `(2|u><u| - I)` on the first register, identity on the ancillas.
pub fn apply_joint_diffusion(state: &mut JointState) {
    let n = state.registers;
    for block in state.amps.chunks_exact_mut(n) {
        let sum = block.iter().fold(Complex64::new(0.0, 0.0), |acc, a| acc + a);
        let twice_mean = sum * (2.0 / n as f64);
        for a in block {
            *a = twice_mean - *a;
        }
    }
}

/// Reads the first register off the pinned ancilla tuple, failing if any
/// amplitude has leaked elsewhere.
pub fn extract_first_register(state: &JointState) -> Result<StateVector> {
    let n = state.registers;
    let base = state.pinned_index(0);
    for (idx, a) in state.amps.iter().enumerate() {
        if idx / n * n != base && a.norm() > SUPPORT_TOLERANCE {
            return Err(Error::SupportViolation {
                index: idx,
                magnitude: a.norm(),
            });
        }
    }
    StateVector::from_amplitudes(state.amps[base..base + n].to_vec())
}

/// Full protocol on the joint backend: `k` rounds of oracle then diffusion.
pub fn run_joint(inst: &ComparisonInstance, k: usize) -> Result<JointState> {
    let mut state = prepare_joint(inst)?;
    for _ in 0..k {
        apply_joint_oracle(&mut state, inst)?;
        apply_joint_diffusion(&mut state);
    }
    Ok(state)
}

/// Fixed battery of instances of length `len`, covering equal strings, tail
/// and head mismatches, repeated symbols and pad-free permutations.
pub fn instance_battery(len: usize) -> Result<Vec<ComparisonInstance>> {
    check_len(len)?;
    let patterns: &[&str] = if len == 2 {
        &["ab", "aa", "ba", "bb", "ax", "xa"]
    } else {
        &["abcd", "abca", "aaaa", "abab", "dcba", "aabb", "bcda", "xyzx"]
    };
    let mut out = Vec::new();
    for p in patterns {
        for s in mutations(p) {
            out.push(ComparisonInstance::new(p, &s)?);
        }
    }
    Ok(out)
}

/// `p` itself, every single-position substitution by `'x'` or by the next
/// symbol of `p`, and `p` reversed.
fn mutations(p: &str) -> Vec<String> {
    let chars: Vec<char> = p.chars().collect();
    let mut out = vec![p.to_string()];
    for i in 0..chars.len() {
        let next = chars[(i + 1) % chars.len()];
        for sub in [if chars[i] == 'x' { 'y' } else { 'x' }, next] {
            if sub != chars[i] {
                let mut c = chars.clone();
                c[i] = sub;
                out.push(c.into_iter().collect());
            }
        }
    }
    out.push(chars.iter().rev().collect());
    out.sort();
    out.dedup();
    out
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValidationSummary {
    pub instances: usize,
    pub runs: usize,
    pub max_deviation: f64,
    pub max_off_support_mass: f64,
}

/// Largest iteration count the battery is run for.
pub const BATTERY_MAX_ITERATIONS: usize = 4;

/// Compares the reduced and joint backends over the battery for every
/// `k <= 4`.
pub fn validate_backends(len: usize) -> Result<ValidationSummary> {
    let battery = instance_battery(len)?;
    let mut summary = ValidationSummary {
        instances: battery.len(),
        runs: 0,
        max_deviation: 0.0,
        max_off_support_mass: 0.0,
    };
    for inst in &battery {
        for k in 0..=BATTERY_MAX_ITERATIONS {
            let joint = run_joint(inst, k)?;
            summary.max_off_support_mass = summary.max_off_support_mass.max(joint.off_support_mass());
            let full = extract_first_register(&joint)?;
            let reduced = crate::protocol::compare(inst, Some(k), crate::protocol::Mode::Exact);
            let dev = full
                .amplitudes()
                .iter()
                .zip(reduced.final_state.amplitudes())
                .map(|(x, y)| (x - y).norm())
                .fold(0.0, f64::max);
            summary.max_deviation = summary.max_deviation.max(dev);
            summary.runs += 1;
        }
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(a: &str, b: &str) -> ComparisonInstance {
        ComparisonInstance::new(a, b).unwrap()
    }

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn nonzero(state: &JointState) -> Vec<Vec<usize>> {
        (0..state.amplitudes().len())
            .filter(|&i| state.amplitudes()[i].norm() > 0.0)
            .map(|i| state.tuple(i))
            .collect()
    }

    #[test]
    fn index_roundtrip() {
        let s = JointState::zeros(4).unwrap();
        for i in 0..256 {
            assert_eq!(s.index(&s.tuple(i)), i);
        }
        assert_eq!(s.index(&[1, 0, 0, 0]), 1);
    }

    #[test]
    fn prepare_examples() {
        let s = prepare_joint(&inst("ab", "ab")).unwrap();
        assert_eq!(nonzero(&s), vec![vec![0, 1], vec![1, 1]]);
        for v in 0..2 {
            assert!((s.get(&[v, 1]).re - 0.5f64.sqrt()).abs() < 1e-15);
        }

        let s = prepare_joint(&inst("abcd", "abcd")).unwrap();
        let nz = nonzero(&s);
        assert_eq!(nz.len(), 4);
        for v in 0..4 {
            assert_eq!(s.get(&[v, 1, 2, 3]), c(0.5));
        }
        assert!((s.norm_sqr() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn prepare_rejects_large() {
        let i = inst("abcdefgh", "abcdefgh");
        assert_eq!(prepare_joint(&i), Err(Error::JointTooLarge(8)));
    }

    #[test]
    fn joint_oracle_examples() {
        let i = inst("ab", "ab");
        let mut s = prepare_joint(&i).unwrap();
        s.amps.iter_mut().for_each(|a| *a = c(1.0));
        apply_joint_oracle(&mut s, &i).unwrap();
        let flipped: Vec<_> = (0..4).filter(|&k| s.amps[k].re < 0.0).map(|k| s.tuple(k)).collect();
        assert_eq!(flipped, vec![vec![0, 1]]);

        let i = inst("ab", "ax");
        let mut s = JointState::zeros(2).unwrap();
        s.amps.iter_mut().for_each(|a| *a = c(1.0));
        apply_joint_oracle(&mut s, &i).unwrap();
        assert!(s.amps.iter().all(|a| a.re > 0.0));

        let i = inst("abcd", "abcd");
        let mut s = JointState::zeros(4).unwrap();
        s.amps.iter_mut().for_each(|a| *a = c(1.0));
        apply_joint_oracle(&mut s, &i).unwrap();
        let flipped: Vec<_> = (0..256).filter(|&k| s.amps[k].re < 0.0).map(|k| s.tuple(k)).collect();
        assert_eq!(flipped, vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn joint_oracle_mismatch() {
        let mut s = JointState::zeros(2).unwrap();
        let err = apply_joint_oracle(&mut s, &inst("abcd", "abcd")).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { left: 2, right: 4 });
    }

    #[test]
    fn joint_diffusion_examples() {
        let i = inst("abca", "dbca");
        let mut s = prepare_joint(&i).unwrap();
        let before = s.clone();
        apply_joint_diffusion(&mut s);
        for (x, y) in s.amps.iter().zip(&before.amps) {
            assert!((x - y).norm() < 1e-12);
        }

        let mut s = JointState::zeros(4).unwrap();
        s.set(&[0, 1, 2, 3], c(1.0));
        apply_joint_diffusion(&mut s);
        assert!((s.get(&[0, 1, 2, 3]).re + 0.5).abs() < 1e-12);
        for v in 1..4 {
            assert!((s.get(&[v, 1, 2, 3]).re - 0.5).abs() < 1e-12);
        }
        assert!(s.off_support_mass() < 1e-24);
    }

    #[test]
    fn extract_examples() {
        let i = inst("abcd", "abcd");
        let s = prepare_joint(&i).unwrap();
        let v = extract_first_register(&s).unwrap();
        assert_eq!(v.amplitudes(), &[c(0.5); 4]);

        let s = run_joint(&i, 1).unwrap();
        let v = extract_first_register(&s).unwrap();
        let want = [1.0, 0.0, 0.0, 0.0];
        for (a, w) in v.amplitudes().iter().zip(want) {
            assert!((a - c(w)).norm() < 1e-12);
        }
    }

    #[test]
    fn extract_detects_entangled_ancilla() {
        let mut s = JointState::zeros(4).unwrap();
        s.set(&[0, 2, 2, 3], c(1.0));
        let idx = s.index(&[0, 2, 2, 3]);
        assert_eq!(
            extract_first_register(&s),
            Err(Error::SupportViolation { index: idx, magnitude: 1.0 })
        );
        assert_eq!(s.off_support_mass(), 1.0);
    }

    #[test]
    fn battery_size_and_coverage() {
        let two = instance_battery(2).unwrap();
        let four = instance_battery(4).unwrap();
        assert!(two.len() + four.len() >= 50);
        assert!(four.iter().any(|i| i.strings_equal()));
        assert!(four.iter().any(|i| {
            let oracle = crate::protocol::combine_sub_oracles(i);
            oracle.marked().len() >= 2
        }));
        assert!(instance_battery(8).is_err());
    }
}
