//! String comparison by amplitude amplification.
//!
//! Two equal-length strings are compiled into an oracle of `N` per-position
//! sub-oracles. Sub-oracle `i` answers "does the subject symbol at label `v`
//! equal pattern symbol `i`?". The combined input holds a free first register
//! in uniform superposition next to `N - 1` registers pinned to the labels
//! `1, 2, ..., N - 1`, so the AND of all sub-oracles only depends on the first
//! register's label. That reduces the oracle to a [`MarkedSet`] over `[0, N)`.

use std::collections::BTreeSet;
use std::f64::consts::FRAC_PI_4;
use std::fmt;

use crate::error::{Error, Result};
use crate::statevector::{MarkedSet, RegisterConfig, StateVector, MAX_QUBITS};

/// First code point tried when picking a default pad symbol (private use area).
const DEFAULT_PAD_START: u32 = 0xE000;

/// A pattern string `a` and a subject string `b`, padded to a common
/// power-of-two length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonInstance {
    a: Vec<char>,
    b: Vec<char>,
    cfg: RegisterConfig,
    alphabet: BTreeSet<char>,
    pad: Option<char>,
}

impl ComparisonInstance {
    /// Builds an instance from two strings of equal length. Lengths that are
    /// not a power of two are padded on the right with a default symbol that
    /// does not occur in either string.
    pub fn new(a: &str, b: &str) -> Result<Self> {
        Self::build(a, b, None)
    }

    /// Like [`ComparisonInstance::new`] but pads with `pad`. Strings of
    /// different lengths are accepted here and padded to a common length.
    pub fn with_pad(a: &str, b: &str, pad: char) -> Result<Self> {
        Self::build(a, b, Some(pad))
    }

    fn build(a: &str, b: &str, pad: Option<char>) -> Result<Self> {
        let a: Vec<char> = a.chars().collect();
        let b: Vec<char> = b.chars().collect();
        if a.len() != b.len() && pad.is_none() {
            return Err(Error::LengthMismatch { a: a.len(), b: b.len() });
        }
        let len = a.len().max(b.len());
        if len < 2 {
            return Err(Error::TooShort(len));
        }
        let target = len.next_power_of_two();
        if target > 1 << MAX_QUBITS {
            return Err(Error::TooLong(len));
        }
        let cfg = RegisterConfig::from_dim(target)?;
        let alphabet: BTreeSet<char> = a.iter().chain(&b).copied().collect();

        let pad = match pad {
            Some(p) if alphabet.contains(&p) => return Err(Error::PadCollision(p)),
            Some(p) => Some(p),
            None if a.len() < target || b.len() < target => Some(default_pad(&alphabet)),
            None => None,
        };
        let fill = |mut s: Vec<char>| {
            if let Some(p) = pad {
                s.resize(target, p);
            }
            s
        };
        let (a, b) = (fill(a), fill(b));
        // an explicit pad on already power-of-two input leaves nothing to record
        let pad = pad.filter(|p| a.contains(p) || b.contains(p));

        Ok(Self { a, b, cfg, alphabet, pad })
    }

    pub fn pattern(&self) -> &[char] {
        &self.a
    }

    pub fn subject(&self) -> &[char] {
        &self.b
    }

    pub fn pattern_string(&self) -> String {
        self.a.iter().collect()
    }

    pub fn subject_string(&self) -> String {
        self.b.iter().collect()
    }

    pub fn config(&self) -> RegisterConfig {
        self.cfg
    }

    /// String length `N` after padding.
    pub fn len(&self) -> usize {
        self.cfg.dim()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Distinct symbols of the unpadded inputs.
    pub fn alphabet(&self) -> &BTreeSet<char> {
        &self.alphabet
    }

    /// Pad symbol actually appended, if any.
    pub fn pad(&self) -> Option<char> {
        self.pad
    }

    pub fn strings_equal(&self) -> bool {
        self.a == self.b
    }

    /// Sub-oracle predicate `f_i(v) = [b[v] == a[i]]`.
    ///
    /// Panics if `i` or `v` is not below `N`.
    pub fn sub_oracle_bit(&self, i: usize, v: usize) -> bool {
        self.b[v] == self.a[i]
    }
}

fn default_pad(alphabet: &BTreeSet<char>) -> char {
    (DEFAULT_PAD_START..)
        .filter_map(char::from_u32)
        .find(|c| !alphabet.contains(c))
        .expect("alphabet cannot exhaust the code space")
}

/// Truth table of sub-oracle `i` over every label `v` in `[0, N)`.
pub fn build_sub_oracle(inst: &ComparisonInstance, i: usize) -> Result<Vec<bool>> {
    let len = inst.len();
    if i >= len {
        return Err(Error::PositionOutOfRange { index: i, len });
    }
    Ok((0..len).map(|v| inst.sub_oracle_bit(i, v)).collect())
}

/// The compiled oracle. Tables are evaluated on demand; materializing all
/// `N` rows costs `N^2` bits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleSpec {
    instance: ComparisonInstance,
    /// `f_i(i)` for every position: the value each ancilla register feeds in.
    pinned: Vec<bool>,
    marked: MarkedSet,
}

impl OracleSpec {
    pub fn marked(&self) -> &MarkedSet {
        &self.marked
    }

    pub fn table(&self, i: usize) -> Result<Vec<bool>> {
        build_sub_oracle(&self.instance, i)
    }

    pub fn tables(&self) -> Vec<Vec<bool>> {
        (0..self.instance.len())
            .map(|i| build_sub_oracle(&self.instance, i).expect("i < N"))
            .collect()
    }

    /// `f_i(i)` for `i` in `[1, N)`; all true iff the tails agree.
    pub fn pinned_bits(&self) -> &[bool] {
        &self.pinned[1..]
    }
}

/// AND-combines the sub-oracles against the fixed ancilla labels.
pub fn combine_sub_oracles(inst: &ComparisonInstance) -> OracleSpec {
    let len = inst.len();
    let pinned: Vec<bool> = (0..len).map(|i| inst.sub_oracle_bit(i, i)).collect();
    let tail_ok = pinned[1..].iter().all(|&bit| bit);
    let members: Vec<usize> = if tail_ok {
        (0..len).filter(|&v| inst.sub_oracle_bit(0, v)).collect()
    } else {
        Vec::new()
    };
    let marked = MarkedSet::new(len, members).expect("labels are below N");
    OracleSpec {
        instance: inst.clone(),
        pinned,
        marked,
    }
}

/// First register plus the classical labels of the ancilla registers.
#[derive(Debug, Clone, PartialEq)]
pub struct CombinedInputState {
    pub first: StateVector,
    pub ancilla_labels: Vec<usize>,
    pub ancilla_qubits: usize,
}

pub fn prepare_combined_state(inst: &ComparisonInstance) -> CombinedInputState {
    let cfg = inst.config();
    let len = cfg.dim();
    CombinedInputState {
        first: StateVector::uniform(cfg),
        ancilla_labels: (1..len).collect(),
        ancilla_qubits: (len - 1) * cfg.qubits() as usize,
    }
}

/// `floor(pi/4 * sqrt(N))`, the single-solution optimum.
pub fn default_iterations(cfg: RegisterConfig) -> usize {
    (FRAC_PI_4 * (cfg.dim() as f64).sqrt()).floor() as usize
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Equal,
    Unequal,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Equal => "EQUAL",
            Verdict::Unequal => "UNEQUAL",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Report the full distribution; the verdict is the likelier one.
    Exact,
    /// Additionally draw one seeded measurement.
    Sample { seed: u64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonTranscript {
    pub instance: ComparisonInstance,
    pub oracle: OracleSpec,
    pub ancilla_qubits: usize,
    pub iterations: usize,
    pub mode: Mode,
    pub final_state: StateVector,
    pub final_distribution: Vec<f64>,
    pub measured: Option<usize>,
    pub verdict: Verdict,
    pub p_equal: f64,
    pub p_unequal: f64,
}

/// Runs the protocol: compile, prepare, amplify `k` times, measure the first
/// register. Outcome `0` means EQUAL.
pub fn compare(inst: &ComparisonInstance, k: Option<usize>, mode: Mode) -> ComparisonTranscript {
    let oracle = combine_sub_oracles(inst);
    let combined = prepare_combined_state(inst);
    let iterations = k.unwrap_or_else(|| default_iterations(inst.config()));

    let mut state = combined.first;
    state
        .grover_iterate(oracle.marked(), iterations)
        .expect("oracle and state share N");
    let dist = state.measurement_distribution();
    let p_equal = dist[0];
    let p_unequal: f64 = dist[1..].iter().sum();

    let (measured, verdict) = match mode {
        Mode::Exact => {
            let v = if p_equal > p_unequal {
                Verdict::Equal
            } else {
                Verdict::Unequal
            };
            (None, v)
        }
        Mode::Sample { seed } => {
            let x = state.sample_measurement(seed);
            let v = if x == 0 { Verdict::Equal } else { Verdict::Unequal };
            (Some(x), v)
        }
    };

    ComparisonTranscript {
        instance: inst.clone(),
        oracle,
        ancilla_qubits: combined.ancilla_qubits,
        iterations,
        mode,
        final_state: state,
        final_distribution: dist,
        measured,
        verdict,
        p_equal,
        p_unequal,
    }
}
