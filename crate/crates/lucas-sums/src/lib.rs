//! Exact evaluation and machine verification of closed forms for sums of
//! Lucas sequences of the first and second kind.
//!
//! A Lucas pair `(p, q)` of integers defines two companion sequences by the
//! shared recurrence `T_n = p·T_{n-1} - q·T_{n-2}`:
//!
//! * the **first kind** `U_n(p, q)` with seeds `U_0 = 0`, `U_1 = 1`, and
//! * the **second kind** `V_n(p, q)` with seeds `V_0 = 2`, `V_1 = p`.
//!
//! Ten classical families are specializations: Fibonacci `U(1, -1)`, Lucas
//! `V(1, -1)`, Pell `U(2, -1)`, companion Pell `V(2, -1)`, balancing
//! `U(6, 1)`, double Lucas-balancing `V(6, 1)`, Jacobsthal `U(1, -2)`,
//! Jacobsthal–Lucas `V(1, -2)`, Mersenne `U(3, 2)`, and `V(3, 2)`, the
//! Mersenne analogue of the Lucas numbers.
//!
//! The crate provides, entirely in exact [`num_bigint`] arithmetic:
//!
//! * three independent term evaluators — an `O(n)` recurrence walk, an
//!   `O(log n)` fast-doubling pass, and a Binet-style evaluator working in
//!   `Z[sqrt(Δ)]` — that cross-check one another
//!   ([`sequence_core`]);
//! * closed forms for the consecutive sums `Σ_{i=1..n} T_i`
//!   ([`consecutive_sums`]), the weighted sums `Σ i·T_i` together with the
//!   Abel summation transform ([`weighted_sums`]), sums over strides
//!   `Σ T_{i·r}` ([`stride_sums`]), and reverse-weighted sums
//!   `Σ (n - i + 1)·T_i`;
//! * a registry of the ten named families with per-family shortcut formulas
//!   ([`named_sequences`]);
//! * a deliberately naive brute-force oracle plus a sweep engine that
//!   replays every closed form against the oracle over parameter boxes
//!   ([`oracle`]).
//!
//! Every closed form that divides reports a [`DivisionWitness`] proving the
//! division was exact, and every formula is gated on the hypotheses under
//! which it holds; outside them the crate returns
//! [`Error::UnsupportedCase`] rather than a wrong number.
//!
//! # A note on the stride sum of the second kind
//!
//! The closed form implemented for `Σ_{i=1..n} V_{i·r}` carries a correction
//! to a formula with a long history: Édouard Lucas stated a version of it in
//! his 1878 *Théorie des fonctions numériques simplement périodiques*, and
//! the widely used 1969 English translation by Sidney Kravitz and Douglas
//! Lind reproduces it with a missing `-2q^r` in the numerator.
//! [`stride_sums::erratum_demo`] evaluates both the corrected and the
//! uncorrected expressions next to a brute-force sum so the misprint (and
//! its exactly predictable error `2q^r / (1 + q^r - V_r)`) can be inspected
//! rather than taken on faith.
//!
//! # Example
//!
//! ```
//! use lucas_sums::{consecutive_sum, make_params, term_fast, Kind};
//!
//! // Fibonacci numbers are U_n(1, -1).
//! let fib = make_params(1, -1);
//! assert_eq!(term_fast(fib, Kind::FirstKind, 9), 34.into());
//!
//! // F_1 + F_2 + ... + F_9 = F_11 - 1 = 88.
//! let sum = consecutive_sum(fib, Kind::FirstKind, 9).unwrap();
//! assert_eq!(sum.value, 88.into());
//! ```

pub mod consecutive_sums;
pub mod error;
pub mod exact;
pub mod named_sequences;
pub mod oracle;
pub mod sequence_core;
pub mod stride_sums;
pub mod weighted_sums;

/// The crate-wide exact integer type: an arbitrary-precision signed integer.
pub type ExactInt = num_bigint::BigInt;

/// An exact rational number, used where a misprinted formula evaluates to a
/// non-integer value.
pub type ExactRatio = num_rational::BigRational;

pub use consecutive_sums::{consecutive_sum, consecutive_sum_powerform};
pub use error::{Error, Result};
pub use exact::{Branch, DivisionWitness, SumResult};
pub use named_sequences::{
    lookup, lucas_balancing, lucas_balancing_weighted_sum, omega_psi_specialized, registry,
    specialized_weighted_sum, DerivedSequence, NamedSequence,
};
pub use oracle::{
    brute_sum, sweep, sweep_summary, OracleConfig, SumMode, SweepSummary, VerificationReport,
};
pub use sequence_core::{
    binet_special_pq1, make_params, term_binet, term_fast, term_iter, Degeneracy, DegeneracyReason,
    Kind, QuadraticPair, SequenceParams,
};
pub use stride_sums::{
    erratum_demo, fib_luc_weighted_square, fib_luc_weighted_stride2, identity13_check,
    reverse_weighted_sum, reverse_weighted_sum_by_partial_sums, stride_sum, ErratumReport,
    StrideQuery,
};
pub use weighted_sums::{
    abel_sum, choose2, omega_psi, weighted_sum, weighted_sum_powerform, OmegaPsi,
};

/// Compiles and runs every code block in the guide (`book/`) as a doctest,
/// so the prose can never drift from the library it documents.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            pub mod $name {}
        };
    }

    chapter!(readme, "../../../README.md");
    chapter!(introduction, "../../../book/src/introduction.md");
    chapter!(lucas_sequences, "../../../book/src/lucas-sequences.md");
    chapter!(consecutive_sums, "../../../book/src/consecutive-sums.md");
    chapter!(weighted_sums, "../../../book/src/weighted-sums.md");
    chapter!(named_sequences, "../../../book/src/named-sequences.md");
    chapter!(stride_sums, "../../../book/src/stride-sums.md");
    chapter!(
        reverse_weighted_sums,
        "../../../book/src/reverse-weighted-sums.md"
    );
    chapter!(verification, "../../../book/src/verification.md");
}
