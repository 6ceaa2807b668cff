//! Error type shared by every fallible operation in the crate.

use crate::ExactInt;

/// Errors reported by closed-form evaluation and verification.
///
/// The variants split into two groups. [`Error::UnsupportedCase`] and
/// [`Error::ZeroDenominator`] mean the *mathematical hypotheses* of a closed
/// form are not met for the given input — the caller asked a question the
/// formula cannot answer. [`Error::ExactDivisionViolation`] means a division
/// that is provably exact left a remainder; it signals a defect in this
/// crate (or a misapplied formula) and is what the verification sweep hunts
/// for. The remaining variants are input-shape errors.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The requested closed form does not apply to the given parameters
    /// (for example a Binet evaluation of a degenerate pair, or the
    /// `p - q = 1` consecutive sum of the first kind at `q = 1`).
    #[error("unsupported case: {0}")]
    UnsupportedCase(String),

    /// A division that should be exact left a nonzero remainder.
    #[error("exact division violated: {numerator} / {denominator} leaves remainder {remainder}")]
    ExactDivisionViolation {
        numerator: ExactInt,
        denominator: ExactInt,
        remainder: ExactInt,
    },

    /// Paired slices passed to the Abel transform differ in length.
    #[error("length mismatch: left sequence has {left} terms, right has {right}")]
    LengthMismatch { left: usize, right: usize },

    /// The stride-sum denominator `1 + q^r - V_r` vanishes, so the closed
    /// form is undefined. This happens for every `r` when `p - q = 1` and
    /// sporadically elsewhere.
    #[error("zero denominator: 1 + q^r - V_r vanishes for p = {p}, q = {q}, r = {r}")]
    ZeroDenominator { p: i64, q: i64, r: u64 },

    /// A sequence name not present in the registry of named families.
    #[error("unknown sequence name: {0:?}")]
    UnknownSequence(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
