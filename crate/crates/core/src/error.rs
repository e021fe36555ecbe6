use thiserror::Error;

/// Errors raised by the simulation kernels and the comparison protocol.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("register width {0} out of range (expected 1..=20 qubits)")]
    RegisterWidth(u32),

    #[error("dimension {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("incompatible register sizes: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("position {index} out of range for length {len}")]
    PositionOutOfRange { index: usize, len: usize },

    #[error("strings have different lengths ({a} vs {b}) and no pad symbol was given")]
    LengthMismatch { a: usize, b: usize },

    #[error("string length {0} is too short; at least 2 symbols are required")]
    TooShort(usize),

    #[error("string length {0} exceeds the 2^20 simulation bound")]
    TooLong(usize),

    #[error("pad symbol {0:?} occurs in the input strings")]
    PadCollision(char),

    #[error("joint simulation supports N in {{2, 4}}, got {0}")]
    JointTooLarge(usize),

    #[error("amplitude {magnitude:e} found off the fixed ancilla support at joint index {index}")]
    SupportViolation { index: usize, magnitude: f64 },

    #[error("marked count {marked} exceeds dimension {dim}")]
    MarkedCount { marked: usize, dim: usize },

    #[error("false-equal probability is only defined for unequal strings")]
    StringsEqual,

    #[error("empty probability distribution")]
    EmptyDistribution,
}

pub type Result<T> = std::result::Result<T, Error>;
