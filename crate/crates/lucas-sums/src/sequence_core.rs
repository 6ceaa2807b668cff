//! Parameters, degeneracy classification, and three independent evaluators
//! for Lucas sequences of the first and second kind.
//!
//! For an integer pair `(p, q)` the two sequences share the recurrence
//! `T_n = p·T_{n-1} - q·T_{n-2}` and differ only in their seeds:
//!
//! * first kind:  `U_0 = 0`, `U_1 = 1`;
//! * second kind: `V_0 = 2`, `V_1 = p`.
//!
//! The three evaluators — [`term_iter`], [`term_fast`], [`term_binet`] (plus
//! the geometric-series shortcut [`binet_special_pq1`] for `p - q = 1`) —
//! share no code beyond the parameter type, so agreement between them is
//! meaningful evidence of correctness.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::exact::{exact_div, Branch};
use crate::ExactInt;

/// Selects the first kind `U` (seeds 0, 1) or the second kind `V`
/// (seeds 2, p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    /// `U_n`: seeds `U_0 = 0`, `U_1 = 1`.
    FirstKind,
    /// `V_n`: seeds `V_0 = 2`, `V_1 = p`.
    SecondKind,
}

impl Kind {
    /// Conventional one-letter symbol: `U` or `V`.
    #[must_use]
    pub fn symbol(self) -> char {
        match self {
            Kind::FirstKind => 'U',
            Kind::SecondKind => 'V',
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Why a parameter pair is degenerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DegeneracyReason {
    /// `q = 0`: one characteristic root vanishes and the sequences collapse
    /// to geometric progressions after the first step.
    QIsZero,
    /// `p² = multiple · q` for a `multiple` in `0..=4`: the ratio of the
    /// characteristic roots is a root of unity (the roots coincide when
    /// `p² = 4q`, i.e. the discriminant vanishes).
    RootRatioUnity { multiple: u8 },
}

impl fmt::Display for DegeneracyReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegeneracyReason::QIsZero => write!(f, "q = 0"),
            DegeneracyReason::RootRatioUnity { multiple } => {
                write!(f, "p^2 = {multiple}q, so the root ratio is a root of unity")
            }
        }
    }
}

/// Degeneracy classification of a parameter pair.
///
/// Degenerate pairs are classified, never rejected: the recurrence
/// evaluators and most closed forms remain valid on them. Only genuinely
/// root-based machinery (the Binet evaluator) refuses degenerate input.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Degeneracy {
    /// Distinct nonzero roots whose ratio is not a root of unity.
    Nondegenerate,
    /// Degenerate, for the recorded reason.
    Degenerate(DegeneracyReason),
}

/// An integer parameter pair `(p, q)` for a pair of Lucas sequences.
///
/// Constructed via [`make_params`] (or [`SequenceParams::new`]); the fields
/// are private so every instance has consistent derived data.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SequenceParams {
    p: i64,
    q: i64,
}

/// Builds the parameter pair `(p, q)`. Any `i64` pair is accepted;
/// degenerate pairs are classified by [`SequenceParams::degeneracy`].
#[must_use]
pub fn make_params(p: i64, q: i64) -> SequenceParams {
    SequenceParams::new(p, q)
}

impl SequenceParams {
    /// See [`make_params`].
    #[must_use]
    pub fn new(p: i64, q: i64) -> Self {
        SequenceParams { p, q }
    }

    /// The recurrence coefficient `p`.
    #[must_use]
    pub fn p(self) -> i64 {
        self.p
    }

    /// The recurrence coefficient `q`.
    #[must_use]
    pub fn q(self) -> i64 {
        self.q
    }

    /// The discriminant `Δ = p² - 4q`, exact for every `i64` pair.
    #[must_use]
    pub fn delta(self) -> i128 {
        (self.p as i128) * (self.p as i128) - 4 * (self.q as i128)
    }

    /// Which closed-form regime the pair falls in: `p - q = 1` or not.
    #[must_use]
    pub fn branch(self) -> Branch {
        if (self.p as i128) - (self.q as i128) == 1 {
            Branch::PMinusQIsOne
        } else {
            Branch::PMinusQIsNotOne
        }
    }

    /// `true` iff `p - q = 1`.
    #[must_use]
    pub fn is_pq1(self) -> bool {
        self.branch() == Branch::PMinusQIsOne
    }

    /// Classifies the pair: degenerate iff `q = 0` or `p²` equals one of
    /// `0, q, 2q, 3q, 4q` (equivalently, the root ratio `α/β` is a root of
    /// unity or a root vanishes or coincides).
    #[must_use]
    pub fn degeneracy(self) -> Degeneracy {
        if self.q == 0 {
            return Degeneracy::Degenerate(DegeneracyReason::QIsZero);
        }
        let p2 = (self.p as i128) * (self.p as i128);
        for multiple in 0..=4u8 {
            if p2 == (multiple as i128) * (self.q as i128) {
                return Degeneracy::Degenerate(DegeneracyReason::RootRatioUnity { multiple });
            }
        }
        Degeneracy::Nondegenerate
    }

    /// `true` iff [`SequenceParams::degeneracy`] is degenerate.
    #[must_use]
    pub fn is_degenerate(self) -> bool {
        matches!(self.degeneracy(), Degeneracy::Degenerate(_))
    }

    /// Seeds `(T_0, T_1)` for the requested kind.
    #[must_use]
    pub fn seeds(self, kind: Kind) -> (ExactInt, ExactInt) {
        match kind {
            Kind::FirstKind => (ExactInt::zero(), ExactInt::one()),
            Kind::SecondKind => (ExactInt::from(2), ExactInt::from(self.p)),
        }
    }
}

impl fmt::Display for SequenceParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(p = {}, q = {})", self.p, self.q)
    }
}

/// Evaluates `T_n` by walking the recurrence from the seeds: `O(n)` big
/// integer operations. This is the reference evaluator the brute-force
/// oracle builds on.
#[must_use]
pub fn term_iter(params: SequenceParams, kind: Kind, n: u64) -> ExactInt {
    let (mut prev, mut curr) = params.seeds(kind);
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &curr * params.p() - &prev * params.q();
        prev = curr;
        curr = next;
    }
    curr
}

/// Halves a provably even integer, panicking (with the caller's invariant
/// named) if the argument is odd.
fn half_even(x: ExactInt) -> ExactInt {
    assert!(
        x.is_even(),
        "internal parity invariant broken: expected an even value, got {x}"
    );
    x >> 1
}

/// Advances the joint state `(U_k, V_k)` to `(U_{k+1}, V_{k+1})` using
/// `U_{k+1} = (p·U_k + V_k)/2` and `V_{k+1} = (Δ·U_k + p·V_k)/2`; both
/// numerators are even because `V_k ≡ p·U_k (mod 2)`.
fn advance(u: &ExactInt, v: &ExactInt, p: i64, delta: &ExactInt) -> (ExactInt, ExactInt) {
    let u_next = half_even(u * p + v);
    let v_next = half_even(u * delta + v * p);
    (u_next, v_next)
}

/// Evaluates `(U_n, V_n)` together by fast doubling: `O(log n)` big-integer
/// multiplications.
///
/// The state `(U_k, V_k, q^k)` is rebuilt from the most significant bit of
/// `n` downward with the doubling rules `U_{2k} = U_k·V_k`,
/// `V_{2k} = V_k² - 2q^k`, `q^{2k} = (q^k)²`, plus the [`advance`] step for
/// set bits.
#[must_use]
pub(crate) fn pair_fast(params: SequenceParams, n: u64) -> (ExactInt, ExactInt) {
    let mut u = ExactInt::zero();
    let mut v = ExactInt::from(2);
    let mut qk = ExactInt::one();
    let delta = ExactInt::from(params.delta());
    let bits = 64 - n.leading_zeros();
    for i in (0..bits).rev() {
        let u2 = &u * &v;
        let v2 = &v * &v - (&qk << 1);
        qk = &qk * &qk;
        u = u2;
        v = v2;
        if (n >> i) & 1 == 1 {
            let (u1, v1) = advance(&u, &v, params.p(), &delta);
            qk *= params.q();
            u = u1;
            v = v1;
        }
    }
    (u, v)
}

/// Returns the window `[(U, V) at n-1, at n, at n+1]` with one fast-doubling
/// pass and two linear advances. Requires `n ≥ 1`.
pub(crate) fn pair_window(params: SequenceParams, n: u64) -> [(ExactInt, ExactInt); 3] {
    assert!(n >= 1, "pair_window needs n >= 1 so the index n - 1 exists");
    let delta = ExactInt::from(params.delta());
    let lo = pair_fast(params, n - 1);
    let mid = advance(&lo.0, &lo.1, params.p(), &delta);
    let hi = advance(&mid.0, &mid.1, params.p(), &delta);
    [lo, mid, hi]
}

/// Evaluates `T_n` by fast doubling: `O(log n)` big-integer multiplications.
/// Exact for every pair, including degenerate ones.
#[must_use]
pub fn term_fast(params: SequenceParams, kind: Kind, n: u64) -> ExactInt {
    let (u, v) = pair_fast(params, n);
    match kind {
        Kind::FirstKind => u,
        Kind::SecondKind => v,
    }
}

/// An element `x + y·√Δ` of `Z[√Δ]`, the arithmetic behind the Binet-style
/// evaluator [`term_binet`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticPair {
    /// Rational part.
    pub x: ExactInt,
    /// Coefficient of `√Δ`.
    pub y: ExactInt,
}

impl QuadraticPair {
    /// Builds `x + y·√Δ`.
    #[must_use]
    pub fn new(x: ExactInt, y: ExactInt) -> Self {
        QuadraticPair { x, y }
    }

    /// The multiplicative identity `1 + 0·√Δ`.
    #[must_use]
    pub fn one() -> Self {
        QuadraticPair {
            x: ExactInt::one(),
            y: ExactInt::zero(),
        }
    }

    /// Multiplies in `Z[√Δ]`:
    /// `(x₁ + y₁√Δ)(x₂ + y₂√Δ) = (x₁x₂ + Δ·y₁y₂) + (x₁y₂ + y₁x₂)√Δ`.
    #[must_use]
    pub fn mul(&self, other: &Self, delta: &ExactInt) -> Self {
        QuadraticPair {
            x: &self.x * &other.x + delta * (&self.y * &other.y),
            y: &self.x * &other.y + &self.y * &other.x,
        }
    }

    /// Raises to the `exp`-th power by binary exponentiation.
    #[must_use]
    pub fn pow(&self, mut exp: u64, delta: &ExactInt) -> Self {
        let mut base = self.clone();
        let mut acc = QuadraticPair::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base, delta);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base, delta);
            }
        }
        acc
    }
}

/// Evaluates `T_n` through the Binet forms, entirely in exact arithmetic.
///
/// With `α, β = (p ± √Δ)/2`, one has `(p + √Δ)^n = (2α)^n =
/// 2^{n-1}·(V_n + U_n·√Δ)`, so a single binary exponentiation in `Z[√Δ]`
/// followed by an exact division by `2^{n-1}` recovers either kind.
///
/// # Errors
///
/// [`Error::UnsupportedCase`] for degenerate pairs, where the Binet
/// quotient forms do not apply.
pub fn term_binet(params: SequenceParams, kind: Kind, n: u64) -> Result<ExactInt> {
    if let Degeneracy::Degenerate(reason) = params.degeneracy() {
        return Err(Error::UnsupportedCase(format!(
            "Binet evaluation requires a nondegenerate pair; {params} is degenerate ({reason})"
        )));
    }
    if n == 0 {
        let (seed, _) = params.seeds(kind);
        return Ok(seed);
    }
    let delta = ExactInt::from(params.delta());
    let base = QuadraticPair::new(ExactInt::from(params.p()), ExactInt::one());
    let power = base.pow(n, &delta);
    let numerator = match kind {
        Kind::FirstKind => power.y,
        Kind::SecondKind => power.x,
    };
    let (value, _witness) = exact_div(numerator, ExactInt::one() << (n - 1))?;
    Ok(value)
}

/// Evaluates `T_n` for `p - q = 1` through the explicit roots `α = q`,
/// `β = 1`: `U_n = (q^n - 1)/(q - 1)` (and `U_n = n` when `q = 1`),
/// `V_n = q^n + 1`.
///
/// Valid for every pair on the `p - q = 1` line, including the degenerate
/// ones.
///
/// # Errors
///
/// [`Error::UnsupportedCase`] if `p - q ≠ 1`.
pub fn binet_special_pq1(params: SequenceParams, kind: Kind, n: u64) -> Result<ExactInt> {
    if params.branch() != Branch::PMinusQIsOne {
        return Err(Error::UnsupportedCase(format!(
            "the geometric-series evaluator requires p - q = 1; got {params}"
        )));
    }
    let q = ExactInt::from(params.q());
    let qn: ExactInt = Pow::pow(&q, n);
    match kind {
        Kind::FirstKind => {
            if params.q() == 1 {
                // q = 1 collapses the geometric quotient: U_n(2, 1) = n.
                Ok(ExactInt::from(n))
            } else {
                let (value, _witness) = exact_div(qn - 1, q - 1)?;
                Ok(value)
            }
        }
        Kind::SecondKind => Ok(qn + 1),
    }
}
