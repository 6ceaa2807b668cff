//! Sums over strides `Σ_{i=1..n} T_{i·r}`, the corrected form of a
//! historically misprinted identity, reverse-weighted sums, and two
//! Fibonacci/Lucas extras (weighted stride-2 and weighted-square sums).
//!
//! # The stride closed forms
//!
//! For any pair and any stride `r ≥ 1`, provided the denominator
//! `1 + q^r - V_r` does not vanish:
//!
//! ```text
//! Σ_{i=1..n} U_{i·r} = (U_r + q^r·U_{n·r} - U_{(n+1)·r}) / (1 + q^r - V_r)
//! Σ_{i=1..n} V_{i·r} = (V_r + q^r·V_{n·r} - V_{(n+1)·r} - 2q^r) / (1 + q^r - V_r)
//! ```
//!
//! The denominator vanishes for *every* `r` on the line `p - q = 1` (there
//! `V_r = q^r + 1`) and sporadically elsewhere (for example `p = -(q + 1)`,
//! `r = 2`); those cases are reported as [`Error::ZeroDenominator`], not
//! silently mis-summed.
//!
//! # The 1878 misprint
//!
//! The second-kind identity goes back to Édouard Lucas' 1878 *Théorie des
//! fonctions numériques simplement périodiques*; the 1969 English
//! translation by Sidney Kravitz and Douglas Lind (Fibonacci Association)
//! reproduces it *without* the `-2q^r` in the numerator. The uncorrected
//! expression is off by exactly `2q^r / (1 + q^r - V_r)` — generally not
//! even an integer. [`erratum_demo`] computes the corrected value, the
//! uncorrected value (as an exact rational), and a brute-force reference
//! side by side.

use num_traits::{One, Pow, Zero};

use crate::consecutive_sums::consecutive_sum;
use crate::error::{Error, Result};
use crate::exact::{exact_div, SumResult};
use crate::sequence_core::{make_params, term_fast, term_iter, Kind, SequenceParams};
use crate::weighted_sums::weighted_sum;
use crate::{ExactInt, ExactRatio};

/// One stride-sum request: `Σ_{i=1..n} T_{i·r}` over `(p, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StrideQuery {
    /// The parameter pair.
    pub params: SequenceParams,
    /// First or second kind.
    pub kind: Kind,
    /// Number of summands.
    pub n: u64,
    /// The stride between consecutive indices.
    pub r: u64,
}

/// The corrected numerator and the shared denominator of the stride closed
/// form. A zero denominator has already been rejected by the caller when
/// this returns.
fn stride_parts(query: &StrideQuery) -> Result<(ExactInt, ExactInt)> {
    let StrideQuery { params, kind, n, r } = *query;
    let q_pow_r: ExactInt = Pow::pow(&ExactInt::from(params.q()), r);
    let v_r = term_fast(params, Kind::SecondKind, r);
    let denominator = ExactInt::one() + &q_pow_r - v_r;
    if denominator.is_zero() {
        return Err(Error::ZeroDenominator {
            p: params.p(),
            q: params.q(),
            r,
        });
    }
    let nr = n.checked_mul(r).expect("stride index n·r exceeds u64");
    let top = nr.checked_add(r).expect("stride index (n+1)·r exceeds u64");
    let t_r = term_fast(params, kind, r);
    let t_nr = term_fast(params, kind, nr);
    let t_top = term_fast(params, kind, top);
    let mut numerator = t_r + &q_pow_r * t_nr - t_top;
    if kind == Kind::SecondKind {
        // The historically dropped correction term.
        numerator -= &q_pow_r * 2;
    }
    Ok((numerator, denominator))
}

/// Evaluates `Σ_{i=1..n} T_{i·r}` in closed form.
///
/// # Errors
///
/// [`Error::ZeroDenominator`] when `1 + q^r - V_r = 0`, where no closed
/// form of this shape exists.
///
/// # Panics
///
/// Panics if `n = 0` or `r = 0`.
pub fn stride_sum(query: &StrideQuery) -> Result<SumResult> {
    assert!(
        query.n >= 1 && query.r >= 1,
        "stride_sum is defined for n, r >= 1"
    );
    let (numerator, denominator) = stride_parts(query)?;
    SumResult::from_division(numerator, denominator, query.params.branch())
}

/// Side-by-side evaluation of the corrected and uncorrected second-kind
/// stride identities against a brute-force reference.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ErratumReport {
    /// The request this report answers.
    pub query: StrideQuery,
    /// Value of the corrected closed form (numerator includes `-2q^r`).
    pub corrected: ExactInt,
    /// Value of the misprinted closed form (numerator omits `-2q^r`),
    /// which is generally not an integer.
    pub uncorrected: ExactRatio,
    /// The sum computed term by term, with no closed form involved.
    pub oracle: ExactInt,
}

impl ErratumReport {
    /// `uncorrected - oracle`: how far the misprinted form is from the
    /// truth. Equal to `2q^r / (1 + q^r - V_r)` exactly.
    #[must_use]
    pub fn discrepancy(&self) -> ExactRatio {
        &self.uncorrected - ExactRatio::from_integer(self.oracle.clone())
    }
}

/// Demonstrates the 1878/1969 misprint on a second-kind stride sum: returns
/// the corrected value, the uncorrected rational value, and a brute-force
/// reference.
///
/// # Errors
///
/// [`Error::UnsupportedCase`] if the query is for the first kind (whose
/// stride identity was never misprinted);
/// [`Error::ZeroDenominator`] when `1 + q^r - V_r = 0`.
///
/// # Panics
///
/// Panics if `n = 0` or `r = 0`.
pub fn erratum_demo(query: &StrideQuery) -> Result<ErratumReport> {
    assert!(
        query.n >= 1 && query.r >= 1,
        "erratum_demo is defined for n, r >= 1"
    );
    if query.kind != Kind::SecondKind {
        return Err(Error::UnsupportedCase(
            "the misprint concerns the second-kind stride sum; query the V kind".to_string(),
        ));
    }
    let (corrected_numerator, denominator) = stride_parts(query)?;
    let two_q_pow_r = Pow::pow(&ExactInt::from(query.params.q()), query.r) * 2;
    let uncorrected = ExactRatio::new(&corrected_numerator + &two_q_pow_r, denominator.clone());
    let (corrected, _witness) = exact_div(corrected_numerator, denominator)?;
    // Term-by-term reference sum; deliberately the naive route.
    let mut oracle = ExactInt::zero();
    for i in 1..=query.n {
        oracle += term_iter(query.params, Kind::SecondKind, i * query.r);
    }
    Ok(ErratumReport {
        query: *query,
        corrected,
        uncorrected,
        oracle,
    })
}

/// Checks the classical second-kind multiplication identity
/// `V_{m+2r} = V_r·V_{m+r} - q^r·V_m`, which holds for every integer pair
/// `(p, q)` — degenerate ones included — and all `m, r ≥ 0`.
#[must_use]
pub fn identity13_check(params: SequenceParams, m: u64, r: u64) -> bool {
    let v = |i: u64| term_fast(params, Kind::SecondKind, i);
    let q_pow_r: ExactInt = Pow::pow(&ExactInt::from(params.q()), r);
    let lhs = v(m.checked_add(2 * r).expect("index m + 2r exceeds u64"));
    lhs == v(r) * v(m + r) - q_pow_r * v(m)
}

/// Weighted stride-2 sums over the Fibonacci/Lucas pair `(p, q) = (1, -1)`:
///
/// ```text
/// Σ_{i=1..n} i·F_{2i} = n·F_{2n+1} - F_{2n}
/// Σ_{i=1..n} i·L_{2i} = n·L_{2n+1} - L_{2n} + 2
/// ```
///
/// # Panics
///
/// Panics if `n = 0`.
#[must_use]
pub fn fib_luc_weighted_stride2(kind: Kind, n: u64) -> ExactInt {
    assert!(n >= 1, "fib_luc_weighted_stride2 is defined for n >= 1");
    let params = make_params(1, -1);
    let t = |i: u64| term_fast(params, kind, i);
    let base = ExactInt::from(n) * t(2 * n + 1) - t(2 * n);
    match kind {
        Kind::FirstKind => base,
        Kind::SecondKind => base + 2,
    }
}

/// Weighted sums of squares over the Fibonacci/Lucas pair `(1, -1)`:
///
/// ```text
/// Σ_{i=1..n} i·F_i² = n·F_n·F_{n+1} - F_n² + (1 - (-1)ⁿ)/2
/// Σ_{i=1..n} i·L_i² = n·L_n·L_{n+1} - L_n² + (3 + 5·(-1)ⁿ)/2
/// ```
///
/// # Panics
///
/// Panics if `n = 0`.
#[must_use]
pub fn fib_luc_weighted_square(kind: Kind, n: u64) -> ExactInt {
    assert!(n >= 1, "fib_luc_weighted_square is defined for n >= 1");
    let params = make_params(1, -1);
    let t_n = term_fast(params, kind, n);
    let t_next = term_fast(params, kind, n + 1);
    let parity = match (kind, n.is_multiple_of(2)) {
        (Kind::FirstKind, true) => 0,
        (Kind::FirstKind, false) => 1,
        (Kind::SecondKind, true) => 4,
        (Kind::SecondKind, false) => -1,
    };
    ExactInt::from(n) * &t_n * t_next - &t_n * &t_n + parity
}

/// Evaluates the reverse-weighted sum `Σ_{i=1..n} (n - i + 1)·T_i` through
/// the complement identity
/// `R_n = (n + 1)·S_n - W_n` (consecutive sum and weighted sum).
///
/// # Errors
///
/// [`Error::UnsupportedCase`] exactly where the underlying sums have none
/// (the first kind at `(2, 1)`).
///
/// # Panics
///
/// Panics if `n = 0`.
pub fn reverse_weighted_sum(params: SequenceParams, kind: Kind, n: u64) -> Result<ExactInt> {
    assert!(n >= 1, "reverse_weighted_sum is defined for n >= 1");
    let consecutive = consecutive_sum(params, kind, n)?.value;
    let weighted = weighted_sum(params, kind, n)?.value;
    Ok(ExactInt::from(n + 1) * consecutive - weighted)
}

/// Evaluates the same reverse-weighted sum as a stack of closed-form
/// consecutive sums, `R_n = Σ_{k=1..n} S_k` — an independent second route
/// to the same value.
///
/// # Errors
///
/// As for [`reverse_weighted_sum`].
///
/// # Panics
///
/// Panics if `n = 0`.
pub fn reverse_weighted_sum_by_partial_sums(
    params: SequenceParams,
    kind: Kind,
    n: u64,
) -> Result<ExactInt> {
    assert!(
        n >= 1,
        "reverse_weighted_sum_by_partial_sums is defined for n >= 1"
    );
    let mut total = ExactInt::zero();
    for k in 1..=n {
        total += consecutive_sum(params, kind, k)?.value;
    }
    Ok(total)
}
