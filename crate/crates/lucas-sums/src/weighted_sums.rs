//! Closed forms for the weighted sums `W_n = Σ_{i=1..n} i·T_i`, the Abel
//! summation transform that derives them, and the correction terms `Ω`/`Ψ`.
//!
//! Abel summation turns a weighted sum into consecutive sums, so the closed
//! forms again split on the `p - q = 1` line. Off the line the results take
//! the shape
//!
//! ```text
//! W_n(U) = ( n·(U_{n+1} - q·U_n)·(p - q - 1) - Ω(n) ) / (p - q - 1)²
//! W_n(V) = ( (n·(V_{n+1} - q·V_n) + 2q)·(p - q - 1) - Ψ(n) ) / (p - q - 1)²
//! ```
//!
//! with the correction terms
//!
//! ```text
//! Ω(n) = U_{n+1} - 2q·U_n + q²·U_{n-1} + (q - 1)
//! Ψ(n) = V_{n+1} - 2q·V_n + q²·V_{n-1} + (p - 2q)(q - 1)
//! ```
//!
//! Only the full numerator is guaranteed divisible by `(p - q - 1)²`; `Ω`
//! and `Ψ` alone carry no divisibility promise, which is why the division
//! happens once, at the end, through the witnessed [`SumResult`] path.

use num_integer::Integer;
use num_traits::{One, Pow};

use crate::error::{Error, Result};
use crate::exact::{Branch, SumResult};
use crate::sequence_core::{pair_window, Kind, SequenceParams};
use crate::ExactInt;

/// The binomial coefficient `C(n, 2) = n(n-1)/2`, exactly.
#[must_use]
pub fn choose2(n: u64) -> ExactInt {
    let n = ExactInt::from(n);
    let twice: ExactInt = &n * (&n - 1);
    debug_assert!(twice.is_even());
    twice >> 1
}

/// The pair of correction terms `Ω(n)` and `Ψ(n)` appearing in the weighted
/// closed forms for `p - q ≠ 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaPsi {
    /// `Ω(n) = U_{n+1} - 2q·U_n + q²·U_{n-1} + (q - 1)`.
    pub omega: ExactInt,
    /// `Ψ(n) = V_{n+1} - 2q·V_n + q²·V_{n-1} + (p - 2q)(q - 1)`.
    pub psi: ExactInt,
}

fn omega_psi_from_window(params: SequenceParams, window: &[(ExactInt, ExactInt); 3]) -> OmegaPsi {
    let [(u_prev, v_prev), (u_n, v_n), (u_next, v_next)] = window;
    let q = params.q() as i128;
    let q_sq = ExactInt::from(q) * q;
    let q_minus_1 = ExactInt::from(q - 1);
    let omega = u_next - u_n * (2 * q) + &q_sq * u_prev + &q_minus_1;
    let psi = v_next - v_n * (2 * q)
        + &q_sq * v_prev
        + ExactInt::from(params.p() as i128 - 2 * q) * &q_minus_1;
    OmegaPsi { omega, psi }
}

/// Evaluates the correction terms `Ω(n)` and `Ψ(n)`.
///
/// # Panics
///
/// Panics if `n = 0`; the definitions reach down to index `n - 1`.
#[must_use]
pub fn omega_psi(params: SequenceParams, n: u64) -> OmegaPsi {
    assert!(n >= 1, "omega_psi needs n >= 1 so the index n - 1 exists");
    omega_psi_from_window(params, &pair_window(params, n))
}

/// Evaluates `Σ_{i=1..n} i·T_i` in closed form.
///
/// On the `p - q = 1` line the forms are (writing everything over `q - 1`):
///
/// * first kind, `q ≠ 1`:
///   `( q(q-1)·n·U_n - q·(q·U_{n-1} - n + 1) - (q-1)·C(n+1,2) ) / (q-1)²`;
/// * second kind, `q ≠ 1`:
///   `( (q-1)·(n·U_{n+1} + C(n+1,2)) - q·U_n + n ) / (q-1)`;
/// * second kind, `q = 1` (the pair `(2, 1)`, where `V ≡ 2`):
///   `W_n = n(n+1)` outright.
///
/// # Errors
///
/// [`Error::UnsupportedCase`] for the first kind at `(p, q) = (2, 1)`.
///
/// # Panics
///
/// Panics if `n = 0`.
pub fn weighted_sum(params: SequenceParams, kind: Kind, n: u64) -> Result<SumResult> {
    assert!(n >= 1, "weighted_sum is defined for n >= 1");
    let branch = params.branch();
    let window = pair_window(params, n);
    let [(u_prev, _), (u_n, v_n), (u_next, v_next)] = &window;
    match (branch, kind) {
        (Branch::PMinusQIsOne, Kind::FirstKind) => {
            let q = params.q();
            if q == 1 {
                return Err(Error::UnsupportedCase(format!(
                    "the weighted sum of the first kind has no closed form of this \
                     shape at {params}: p - q = 1 requires q != 1"
                )));
            }
            let qb = ExactInt::from(q);
            let q_minus_1 = &qb - 1;
            let numerator = &qb * &q_minus_1 * ExactInt::from(n) * u_n
                - &qb * (&qb * u_prev - ExactInt::from(n) + 1)
                - &q_minus_1 * choose2(n + 1);
            SumResult::from_division(numerator, &q_minus_1 * &q_minus_1, branch)
        }
        (Branch::PMinusQIsOne, Kind::SecondKind) => {
            let q = params.q();
            if q == 1 {
                // V_i(2, 1) = 2 for every i, so the weighted sum is
                // 2·(1 + 2 + ... + n) = n(n + 1).
                let n = ExactInt::from(n);
                return Ok(SumResult::whole(&n * (&n + 1), branch));
            }
            let q_minus_1 = ExactInt::from(q) - 1;
            let numerator = &q_minus_1 * (ExactInt::from(n) * u_next + choose2(n + 1))
                - ExactInt::from(q) * u_n
                + ExactInt::from(n);
            SumResult::from_division(numerator, q_minus_1, branch)
        }
        (Branch::PMinusQIsNotOne, _) => {
            let q = params.q() as i128;
            let d = ExactInt::from(params.p() as i128 - q - 1);
            let correction = omega_psi_from_window(params, &window);
            let numerator = match kind {
                Kind::FirstKind => ExactInt::from(n) * (u_next - u_n * q) * &d - correction.omega,
                Kind::SecondKind => {
                    (ExactInt::from(n) * (v_next - v_n * q) + ExactInt::from(2 * q)) * &d
                        - correction.psi
                }
            };
            SumResult::from_division(numerator, &d * &d, branch)
        }
    }
}

/// Alternative closed form for the weighted sums on the line `p - q = 1`,
/// written purely in powers of `q`:
///
/// * first kind (`q ∉ {0, 1}`):
///   `( q·(qⁿ·(nq - n - 1) + 1) - (q-1)²·C(n+1,2) ) / (q-1)³`;
/// * second kind (`q ≠ 1`):
///   `( q^{n+1}·(nq - n - 1) + q ) / (q-1)² + C(n+1,2)`, evaluated here
///   over the common denominator `(q-1)²`;
/// * second kind, `q = 1`: `n(n+1)` outright.
///
/// Like [`crate::consecutive_sum_powerform`] this evaluates no sequence
/// terms, making it an independent cross-check of [`weighted_sum`].
///
/// # Errors
///
/// [`Error::UnsupportedCase`] unless `p - q = 1`, and additionally for the
/// first kind unless `q ∉ {0, 1}`.
///
/// # Panics
///
/// Panics if `n = 0`.
pub fn weighted_sum_powerform(params: SequenceParams, kind: Kind, n: u64) -> Result<SumResult> {
    assert!(n >= 1, "weighted_sum_powerform is defined for n >= 1");
    if params.branch() != Branch::PMinusQIsOne {
        return Err(Error::UnsupportedCase(format!(
            "the power form of the weighted sum requires p - q = 1; got {params}"
        )));
    }
    let q = params.q();
    let qb = ExactInt::from(q);
    // nq - n - 1, exactly.
    let weight = ExactInt::from(n) * &qb - ExactInt::from(n) - 1;
    let q_minus_1 = &qb - 1;
    match kind {
        Kind::FirstKind => {
            if q == 0 || q == 1 {
                return Err(Error::UnsupportedCase(format!(
                    "the power form of the weighted first-kind sum requires q outside \
                     {{0, 1}}; got {params}"
                )));
            }
            let numerator = &qb * (Pow::pow(&qb, n) * &weight + ExactInt::one())
                - &q_minus_1 * &q_minus_1 * choose2(n + 1);
            SumResult::from_division(
                numerator,
                &q_minus_1 * &q_minus_1 * &q_minus_1,
                Branch::PMinusQIsOne,
            )
        }
        Kind::SecondKind => {
            if q == 1 {
                let n = ExactInt::from(n);
                return Ok(SumResult::whole(&n * (&n + 1), Branch::PMinusQIsOne));
            }
            let numerator =
                Pow::pow(&qb, n + 1) * &weight + &qb + &q_minus_1 * &q_minus_1 * choose2(n + 1);
            SumResult::from_division(numerator, &q_minus_1 * &q_minus_1, Branch::PMinusQIsOne)
        }
    }
}

/// Abel's summation by parts for finite sequences:
///
/// ```text
/// Σ_{i=1..n} a_i·b_i
///   = a_n·B_n + Σ_{i=1..n-1} (a_i - a_{i+1})·B_i,   B_i = b_1 + ... + b_i.
/// ```
///
/// Both slices are indexed from `i = 1` (so `a[0]` is `a_1`). Empty slices
/// are accepted and give the empty sum `0`.
///
/// # Errors
///
/// [`Error::LengthMismatch`] if the slices differ in length.
pub fn abel_sum(a: &[ExactInt], b: &[ExactInt]) -> Result<ExactInt> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let n = a.len();
    if n == 0 {
        return Ok(ExactInt::from(0));
    }
    let mut prefix = Vec::with_capacity(n);
    let mut running = ExactInt::from(0);
    for b_i in b {
        running += b_i;
        prefix.push(running.clone());
    }
    let mut total = &a[n - 1] * &prefix[n - 1];
    for i in 0..n - 1 {
        total += (&a[i] - &a[i + 1]) * &prefix[i];
    }
    Ok(total)
}
