//! Exact-division plumbing shared by every closed form.
//!
//! All the closed forms in this crate end in a division that is provably
//! exact when their hypotheses hold. Rather than dividing silently, every
//! such division goes through [`exact_div`], which checks the remainder and
//! records a [`DivisionWitness`] that callers (and the verification sweep)
//! can re-check: `value * denominator == numerator`.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ExactInt;

/// Which of the two closed-form regimes a parameter pair falls in.
///
/// Sums of Lucas sequences telescope differently depending on whether
/// `p - q = 1` (where `Σ q^i` style geometric identities drive the forms)
/// or `p - q ≠ 1` (where the recurrence itself telescopes).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    /// `p - q = 1`.
    PMinusQIsOne,
    /// `p - q ≠ 1`.
    PMinusQIsNotOne,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Branch::PMinusQIsOne => write!(f, "p-q=1"),
            Branch::PMinusQIsNotOne => write!(f, "p-q!=1"),
        }
    }
}

/// Proof record for one exact division.
///
/// Invariant: `remainder_checked_zero` is only ever `true`, because a
/// nonzero remainder aborts the computation with
/// [`Error::ExactDivisionViolation`] instead of producing a witness. The
/// field exists so a report serialized elsewhere still carries the claim
/// explicitly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionWitness {
    /// The dividend the closed form assembled.
    pub numerator: ExactInt,
    /// The divisor prescribed by the closed form (`1` when none divides).
    pub denominator: ExactInt,
    /// Whether the remainder was checked and found to be zero.
    pub remainder_checked_zero: bool,
}

impl DivisionWitness {
    /// Witness for a form with no division at all: `value / 1`.
    #[must_use]
    pub fn trivial(value: &ExactInt) -> Self {
        DivisionWitness {
            numerator: value.clone(),
            denominator: ExactInt::one(),
            remainder_checked_zero: true,
        }
    }
}

/// The value of a closed-form sum together with how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumResult {
    /// The exact value of the sum.
    pub value: ExactInt,
    /// Which parameter regime supplied the formula.
    pub branch_used: Branch,
    /// Proof that the final division (if any) was exact.
    pub division_witness: DivisionWitness,
}

impl SumResult {
    /// Builds a result by performing the closed form's final division,
    /// failing with [`Error::ExactDivisionViolation`] on a nonzero
    /// remainder.
    pub fn from_division(
        numerator: ExactInt,
        denominator: ExactInt,
        branch_used: Branch,
    ) -> Result<Self> {
        let (value, witness) = exact_div(numerator, denominator)?;
        Ok(SumResult {
            value,
            branch_used,
            division_witness: witness,
        })
    }

    /// Wraps a division-free closed-form value with a trivial witness.
    #[must_use]
    pub fn whole(value: ExactInt, branch_used: Branch) -> Self {
        let division_witness = DivisionWitness::trivial(&value);
        SumResult {
            value,
            branch_used,
            division_witness,
        }
    }

    /// Re-checks the witness: `value * denominator == numerator` and the
    /// remainder flag is set.
    #[must_use]
    pub fn verify_witness(&self) -> bool {
        self.division_witness.remainder_checked_zero
            && &self.value * &self.division_witness.denominator == self.division_witness.numerator
    }
}

/// Divides exactly, returning the quotient and a witness, or
/// [`Error::ExactDivisionViolation`] if a remainder survives.
///
/// The check is sign-independent: only a remainder of exactly zero passes.
///
/// # Panics
///
/// Panics if `denominator` is zero; vanishing denominators are a hypothesis
/// failure the *caller* must detect (see [`Error::ZeroDenominator`]) before
/// assembling the division.
pub fn exact_div(
    numerator: ExactInt,
    denominator: ExactInt,
) -> Result<(ExactInt, DivisionWitness)> {
    assert!(
        !denominator.is_zero(),
        "exact_div called with a zero denominator; the caller must reject this case first"
    );
    let (quotient, remainder) = numerator.div_rem(&denominator);
    if !remainder.is_zero() {
        return Err(Error::ExactDivisionViolation {
            numerator,
            denominator,
            remainder,
        });
    }
    let witness = DivisionWitness {
        numerator,
        denominator,
        remainder_checked_zero: true,
    };
    Ok((quotient, witness))
}
